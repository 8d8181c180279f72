"""Search for precise matchings, and exhaustive nonexistence certification.

The searcher is a seeded greedy-with-repair loop.  Weighted matchings can
only use weight-equal covering pairs, and any alternating cycle stays inside
one weight class, so the candidate pairs are stratified by weight up front.
Each attempt builds a maximal acyclic matching greedily (toggle-vertex-major
order, jittered by the seed), maintaining acyclicity with an incremental
cycle check on the flow graph; the result is then verified in full.  On a
preciseness failure the witness pair gets "trouble" weight, which pulls the
covering pairs around it to the front of the next attempt's order, so the
offending criticals tend to get matched away.  Small instances fall back to
exhaustive enumeration before giving up.

Nothing here self-certifies: every returned matching has passed validate,
is_acyclic, is_weighted and is_precise.  NotFound is only a budget
statement; nonexistence is established exclusively by prove_no_precise,
which enumerates every weighted matching (the pair cap keeps that honest).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional

from .complexes import ComplexK, vertices_of
from .matching import Matching, is_acyclic, is_precise, is_weighted, validate
from .snf import GuardRefused

DEFAULT_BUDGET = 2_000_000
_MAX_ATTEMPTS = 60
_EXHAUSTIVE_PAIRS = 16


@dataclass(frozen=True)
class SearchStats:
    nodes: int
    attempts: int
    seed: int


@dataclass(frozen=True)
class SearchResult:
    matching: Optional[Matching]
    stats: SearchStats

    @property
    def found(self) -> bool:
        return self.matching is not None


@dataclass(frozen=True)
class AbsenceOutcome:
    """Either a witness that a precise matching exists, or a certificate that
    all ``candidates_checked`` weighted matchings fail."""

    exists: Optional[Matching]
    candidates_checked: int
    d: int

    @property
    def certified_absent(self) -> bool:
        return self.exists is None


def weight_compatible_pairs(K: ComplexK, level) -> list[tuple[int, int]]:
    return sorted(
        (s, t) for s, t in K.covering_pairs() if level.of(s) == level.of(t)
    )


class _Greedy:
    """One growing matching with incremental acyclicity."""

    def __init__(self, K: ComplexK):
        self.K = K
        self.up: dict[int, int] = {}
        self.down: dict[int, int] = {}

    def free(self, m: int) -> bool:
        return m not in self.up and m not in self.down

    def creates_cycle(self, sigma: int, tau: int) -> bool:
        faces = self.K.faces
        up = self.up
        stack = [x for x in faces(sigma) if x != tau and x in up]
        seen = set(stack)
        while stack:
            x = stack.pop()
            for y in faces(up[x]):
                if y == tau:
                    return True
                if y != x and y in up and y not in seen:
                    seen.add(y)
                    stack.append(y)
        return False

    def try_add(self, sigma: int, tau: int) -> bool:
        if not (self.free(sigma) and self.free(tau)) or self.creates_cycle(sigma, tau):
            return False
        self.up[tau] = sigma
        self.down[sigma] = tau
        return True

    def matching(self) -> Matching:
        return Matching.of((s, t) for s, t in self.down.items())


def _verify(K: ComplexK, level, M: Matching):
    if validate(M, K) is not None or not is_acyclic(M, K) or not is_weighted(M, level):
        return None
    return is_precise(M, K, level)


def search_precise(
    K: ComplexK, d: int, *, budget: int = DEFAULT_BUDGET, order_seed: int = 0
) -> SearchResult:
    """Find a verified phi_d-precise matching, or NotFound within the budget."""
    level = K.weighted_level(d)
    pairs = weight_compatible_pairs(K, level)
    rng = random.Random(order_seed)
    trouble: dict[int, float] = {}
    nodes = 0
    attempts = 0

    # toggle-vertex-major order collapses power-set-like strata perfectly
    base_key = {p: (vertices_of(p[0] ^ p[1])[0], p[1].bit_count(), i) for i, p in enumerate(pairs)}

    while attempts < _MAX_ATTEMPTS and nodes < budget:
        attempts += 1
        jitter = {p: rng.random() for p in pairs} if attempts > 1 else {p: 0.0 for p in pairs}
        order = sorted(
            pairs,
            key=lambda p: (
                -(trouble.get(p[0], 0.0) + trouble.get(p[1], 0.0)),
                base_key[p][0],
                jitter[p],
                base_key[p],
            ),
        )
        greedy = _Greedy(K)
        for sigma, tau in order:
            nodes += 1
            greedy.try_add(sigma, tau)
            if nodes >= budget:
                return SearchResult(None, SearchStats(nodes, attempts, order_seed))
        M = greedy.matching()
        report = _verify(K, level, M)
        if report is not None and report.precise:
            return SearchResult(M, SearchStats(nodes, attempts, order_seed))
        if report is not None and report.witness is not None:
            for verts in report.witness:
                m = 0
                for v in verts:
                    m |= 1 << v
                trouble[m] = trouble.get(m, 0.0) + 1.0 + rng.random()
        if len(pairs) <= _EXHAUSTIVE_PAIRS:
            M, checked = _exhaustive_search(K, level, pairs, budget - nodes)
            nodes += checked
            return SearchResult(M, SearchStats(nodes, attempts, order_seed))
    return SearchResult(None, SearchStats(nodes, attempts, order_seed))


def _exhaustive_search(K, level, pairs, node_cap):
    """Try every weighted matching; first verified precise one wins."""
    found: list[Optional[Matching]] = [None]
    checked = [0]

    def rec(i: int, used: set[int], cur: list[tuple[int, int]]):
        if found[0] is not None or checked[0] >= node_cap:
            return
        if i == len(pairs):
            checked[0] += 1
            M = Matching.of(cur)
            rep = _verify(K, level, M)
            if rep is not None and rep.precise:
                found[0] = M
            return
        rec(i + 1, used, cur)
        s, t = pairs[i]
        if s not in used and t not in used:
            used |= {s, t}
            cur.append((s, t))
            rec(i + 1, used, cur)
            cur.pop()
            used -= {s, t}

    rec(0, set(), [])
    return found[0], checked[0]


def prove_no_precise(K: ComplexK, d: int, *, pair_cap: int = 20) -> AbsenceOutcome:
    """Certify nonexistence by enumerating every phi_d-weighted matching.

    Refuses (GuardRefused) when the number of weight-compatible covering
    pairs exceeds ``pair_cap``; a certificate is only issued after the full
    enumeration came back empty.
    """
    level = K.weighted_level(d)
    pairs = weight_compatible_pairs(K, level)
    if len(pairs) > pair_cap:
        raise GuardRefused(
            f"{len(pairs)} weight-compatible pairs exceed the enumeration cap {pair_cap}"
        )
    candidates = 0
    exists: Optional[Matching] = None

    def rec(i: int, used: set[int], cur: list[tuple[int, int]]):
        nonlocal candidates, exists
        if exists is not None:
            return
        if i == len(pairs):
            candidates += 1
            M = Matching.of(cur)
            rep = _verify(K, level, M)
            if rep is not None and rep.precise:
                exists = M
            return
        rec(i + 1, used, cur)
        s, t = pairs[i]
        if exists is None and s not in used and t not in used:
            used |= {s, t}
            cur.append((s, t))
            rec(i + 1, used, cur)
            cur.pop()
            used -= {s, t}

    rec(0, set(), [])
    return AbsenceOutcome(exists, candidates, d)
