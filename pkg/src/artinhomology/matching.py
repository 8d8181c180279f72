"""Matchings on the face poset and their Morse data.

A matching is a set of covering pairs (sigma, tau), tau a facet of sigma,
with every simplex in at most one pair.  Orient matched edges upward and all
other covering edges downward; the matching is acyclic when that digraph has
no directed cycle.  Cycles cannot cross cardinality levels, so acyclicity is
checked per level on the contracted flow graph whose nodes are the lower
simplices of matched pairs.

Morse incidence numbers [sigma:tau]^M are signed sums over alternating paths
from a critical sigma down to a critical tau.  We accumulate them by dynamic
programming in topological order of the flow graph: a path that has reached
a matched simplex x (paired upward with p) continues to every other face y
of p, picking up the factor -[p:x][p:y].  That reproduces the path-sum
(-1)^m [sigma:tau_1][sigma_1:tau_1] ... [sigma_m:tau] exactly, one step at a
time, without enumerating paths.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .complexes import ComplexK, WeightedLevel, incidence_sign, vertices_of
from .linalg import rank_of_int_matrix


class MatchingError(ValueError):
    pass


class NotAcyclicError(MatchingError):
    pass


class NotWeightedError(MatchingError):
    pass


@dataclass(frozen=True)
class Matching:
    """Covering pairs (upper, lower), stored canonically sorted."""

    pairs: tuple[tuple[int, int], ...]

    @staticmethod
    def of(pairs: Iterable[tuple[int, int]]) -> "Matching":
        return Matching(tuple(sorted(set(pairs))))

    @staticmethod
    def empty() -> "Matching":
        return Matching(())

    def __len__(self) -> int:
        return len(self.pairs)

    def partner_maps(self) -> tuple[dict[int, int], dict[int, int]]:
        """(up, down): up[tau] = sigma and down[sigma] = tau per pair."""
        up: dict[int, int] = {}
        down: dict[int, int] = {}
        for sigma, tau in self.pairs:
            if sigma in down or sigma in up or tau in up or tau in down:
                raise MatchingError("simplex matched twice")
            down[sigma] = tau
            up[tau] = sigma
        return up, down

    def criticals(self, K: ComplexK) -> tuple[tuple[int, ...], ...]:
        matched = set()
        for sigma, tau in self.pairs:
            matched.add(sigma)
            matched.add(tau)
        return tuple(
            tuple(m for m in level if m not in matched) for level in K.masks_by_card
        )


@dataclass(frozen=True)
class Violation:
    simplex: tuple[int, ...]
    reason: str

    def __str__(self) -> str:
        return f"violation at {self.simplex}: {self.reason}"


def validate(M: Matching, K: ComplexK) -> Optional[Violation]:
    """Covering-pair and degree-at-most-one conditions; None when ok."""
    seen: set[int] = set()
    for sigma, tau in M.pairs:
        if sigma not in K or tau not in K:
            missing = sigma if sigma not in K else tau
            return Violation(vertices_of(missing), "not a simplex of the complex")
        if tau & ~sigma or (sigma ^ tau).bit_count() != 1:
            return Violation(vertices_of(tau), "not a codimension-1 face of its partner")
        for m in (sigma, tau):
            if m in seen:
                return Violation(vertices_of(m), "matched twice")
            seen.add(m)
    return None


def _flow_graph(M: Matching, K: ComplexK, k: int, up: dict[int, int]) -> dict[int, list[int]]:
    """Edges x -> y between matched (k-1)-simplices: y is another face of up[x]."""
    out: dict[int, list[int]] = {}
    for x in K.masks_by_card[k - 1]:
        p = up.get(x)
        if p is None or p.bit_count() != k:
            continue
        out[x] = [y for y in K.faces(p) if y != x and y in up and up[y].bit_count() == k]
    return out


def is_acyclic(M: Matching, K: ComplexK) -> bool:
    """Check the reoriented incidence graph is a DAG (per cardinality level)."""
    up, _ = M.partner_maps()
    for k in range(1, len(K.masks_by_card)):
        graph = _flow_graph(M, K, k, up)
        color: dict[int, int] = {}  # 1 = on stack, 2 = done
        for start in graph:
            if color.get(start):
                continue
            stack: list[tuple[int, int]] = [(start, 0)]
            color[start] = 1
            while stack:
                node, i = stack[-1]
                succs = graph[node]
                if i < len(succs):
                    stack[-1] = (node, i + 1)
                    nxt = succs[i]
                    c = color.get(nxt)
                    if c == 1:
                        return False
                    if c is None:
                        color[nxt] = 1
                        stack.append((nxt, 0))
                else:
                    color[node] = 2
                    stack.pop()
    return True


def is_weighted(M: Matching, level: WeightedLevel) -> bool:
    return all(level.of(sigma) == level.of(tau) for sigma, tau in M.pairs)


@dataclass(frozen=True)
class MorseData:
    """Critical simplices per cardinality and the Morse boundaries delta^M.

    delta[k] maps critical k-simplices (columns) to critical (k-1)-simplices
    (rows), in the stored critical order.
    """

    critical: tuple[tuple[int, ...], ...]
    delta: tuple[list[list[int]], ...]  # index k, empty matrix at k = 0

    def rank(self, k: int) -> int:
        if k < 1 or k >= len(self.delta):
            return 0
        return rank_of_int_matrix(self.delta[k])


def _topo_order(graph: dict[int, list[int]]) -> list[int]:
    indeg = {x: 0 for x in graph}
    for x, ys in graph.items():
        for y in ys:
            if y in indeg:
                indeg[y] += 1
    ready = [x for x, dgr in indeg.items() if dgr == 0]
    order = []
    while ready:
        x = ready.pop()
        order.append(x)
        for y in graph[x]:
            if y in indeg:
                indeg[y] -= 1
                if indeg[y] == 0:
                    ready.append(y)
    if len(order) != len(graph):
        raise NotAcyclicError("flow graph has a directed cycle")
    return order


def morse_incidence(M: Matching, K: ComplexK) -> MorseData:
    """delta^M by signed path counting over the acyclic flow graph."""
    if not is_acyclic(M, K):
        raise NotAcyclicError("matching is not acyclic")
    up, _ = M.partner_maps()
    critical = M.criticals(K)
    crit_pos = [{m: i for i, m in enumerate(level)} for level in critical]

    deltas: list[list[list[int]]] = [[]]
    for k in range(1, len(K.masks_by_card)):
        rows = critical[k - 1]
        cols = critical[k]
        mat = [[0] * len(cols) for _ in rows]
        if rows and cols:
            graph = _flow_graph(M, K, k, up)
            order = _topo_order(graph)
            pos = crit_pos[k - 1]
            for j, sigma in enumerate(cols):
                coeff: dict[int, int] = {}
                for tau in K.faces(sigma):
                    coeff[tau] = coeff.get(tau, 0) + incidence_sign(sigma, tau)
                for x in order:
                    c = coeff.get(x)
                    if not c:
                        continue
                    p = up[x]
                    step = -c * incidence_sign(p, x)
                    for y in K.faces(p):
                        if y != x:
                            coeff[y] = coeff.get(y, 0) + step * incidence_sign(p, y)
                for tau, c in coeff.items():
                    if c and tau in pos:
                        mat[pos[tau]][j] = c
        deltas.append(mat)
    return MorseData(critical, tuple(deltas))


@dataclass(frozen=True)
class PreciseReport:
    precise: bool
    witness: Optional[tuple[tuple[int, ...], tuple[int, ...]]]
    morse: MorseData

    def __bool__(self) -> bool:
        return self.precise


def is_precise(
    M: Matching, K: ComplexK, level: WeightedLevel, morse: Optional[MorseData] = None
) -> PreciseReport:
    """Check v(sigma) = v(tau) + 1 on every nonzero Morse incidence.

    Acyclicity and weightedness are checked first and raise on failure; the
    returned witness is the offending pair of critical simplices otherwise.
    """
    if not is_weighted(M, level):
        raise NotWeightedError("matching is not phi-weighted for this level")
    if morse is None:
        morse = morse_incidence(M, K)  # raises NotAcyclicError if needed
    for k in range(1, len(morse.delta)):
        rows = morse.critical[k - 1]
        cols = morse.critical[k]
        mat = morse.delta[k]
        for i, tau in enumerate(rows):
            vt = level.of(tau)
            for j, sigma in enumerate(cols):
                if mat[i][j] and level.of(sigma) != vt + 1:
                    return PreciseReport(False, (vertices_of(sigma), vertices_of(tau)), morse)
    return PreciseReport(True, None, morse)
