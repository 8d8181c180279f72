"""Explicit matchings for the A, D, tilde-B, tilde-D and I2 families.

Each constructor is a pure per-simplex partner function: given a simplex it
either names the unique simplex it is matched with or declares it critical.
Recursive cases relabel vertices through order-preserving index maps and
translate the partner back to ambient labels on return, so the functions
compose cleanly.  Simplices are frozensets of the conventional vertex labels
(1..n for A and D, 0..n for the affine families); conversion to bitmask
complexes happens only at the end.

The D-family case analysis assumes rank >= 4; the affine recursions can
bottom out below that, so the degenerate bases (K^D_{n,g} with n <= 3) get
their own small rules, pinned down by the verification sweep.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Optional

from .coxeter import CoxeterGraph, coxeter_graph, weight
from .complexes import ComplexK, WeightedLevel, mask_of
from .matching import Matching

Simp = frozenset


def _rng(a: int, b: int) -> frozenset:
    return frozenset(range(a, b + 1))


def _residues(a: int, b: int, d: int) -> set[int]:
    if a > b:
        return set()
    return {x % d for x in range(a, b + 1)}


# ---------------------------------------------------------------------------
# Graphs (with degenerate low-rank D shapes used by the recursions)
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def graph_A(n: int) -> CoxeterGraph:
    if n == 0:
        return CoxeterGraph(0, (), ())
    return coxeter_graph("A", n)


@lru_cache(maxsize=None)
def graph_D(n: int) -> CoxeterGraph:
    if n >= 4:
        return coxeter_graph("D", n)
    if n == 3:
        bonds = ((1.0, 2.0, 3.0), (2.0, 1.0, 3.0), (3.0, 3.0, 1.0))
        return CoxeterGraph(3, bonds, ("1", "2", "3"))
    if n == 2:
        return CoxeterGraph(2, ((1.0, 2.0), (2.0, 1.0)), ("1", "2"))
    if n == 1:
        return CoxeterGraph(1, ((1.0,),), ("1",))
    return CoxeterGraph(0, (), ())


def _mask1(s: Simp) -> int:
    """Mask for 1-based labels (finite families)."""
    return mask_of(v - 1 for v in s)


def _mask0(s: Simp) -> int:
    """Mask for 0-based labels (affine families)."""
    return mask_of(s)


def _weight_on(graph: CoxeterGraph, s: Simp, d: int, one_based: bool) -> int:
    return weight(graph, _mask1(s) if one_based else _mask0(s), d)


# ---------------------------------------------------------------------------
# Case A_n on K^A_{n,f,g}
# ---------------------------------------------------------------------------


def _partner_A(s: Simp, n: int, f: int, g: int, d: int) -> Optional[Simp]:
    if f + g >= n:
        return None  # (a): the system has at most one simplex
    if f >= d:
        # (b) strip the first d vertices
        sub = frozenset(v - d for v in s if v > d)
        t = _partner_A(sub, n - d, f - d, g, d)
        return None if t is None else frozenset(v + d for v in t) | _rng(1, d)
    if n >= d + g:
        if _rng(1, d - 1) <= s:
            return s ^ {d}  # (c1)
        if f + 1 in s:
            return s - {f + 1}  # (c2)
        if not _rng(f + 2, d - 1) <= s:
            return s | {f + 1}  # (c3)
        # (c4) freeze 1..f, drop f+1, recurse on {f+2..n} shifted down
        sub = frozenset(v - (f + 1) for v in s if v >= f + 2)
        t = _partner_A(sub, n - f - 1, d - 2 - f, g, d)
        return None if t is None else frozenset(v + f + 1 for v in t) | _rng(1, f)
    # (d): n < d + g, so f <= d - 2.  The pair {1..n} / {1..f, f+2..n} stays
    # weight-equal exactly for n = f..d-2 mod d, so it goes critical on the
    # complement n = -1..f-1 mod d.
    if n % d in _residues(-1, f - 1, d) and (s == _rng(1, n) or s == _rng(1, f) | _rng(f + 2, n)):
        return None  # (d1)
    return s ^ {f + 1}  # (d2)


def system_A(n: int, f: int, g: int) -> list[Simp]:
    if f > n or g > n:
        return []
    prescribed = _rng(1, f) | _rng(n - g + 1, n)
    free = sorted(set(range(1, n + 1)) - prescribed)
    out = []
    for bits in range(1 << len(free)):
        extra = frozenset(free[i] for i in range(len(free)) if bits >> i & 1)
        out.append(prescribed | extra)
    return out


def complex_A(n: int, f: int = 0, g: int = 0) -> ComplexK:
    graph = graph_A(n)
    if f == 0 and g == 0:
        return ComplexK.build(graph)
    return ComplexK.from_masks(graph, (_mask1(s) for s in system_A(n, f, g)))


def matching_A(n: int, f: int, g: int, d: int, K: Optional[ComplexK] = None) -> tuple[ComplexK, Matching]:
    """The recursive phi_d-matching on K^A_{n,f,g}."""
    if n < 0 or f < 0 or g < 0 or d < 2:
        raise ValueError("need n, f, g >= 0 and d >= 2")
    if K is None:
        K = complex_A(n, f, g)
    pairs = _collect_pairs(system_A(n, f, g), lambda s: _partner_A(s, n, f, g, d), _mask1)
    return K, pairs


def _collect_pairs(
    simplices: list[Simp], partner: Callable[[Simp], Optional[Simp]], to_mask: Callable[[Simp], int]
) -> Matching:
    pairs = set()
    for s in simplices:
        t = partner(s)
        if t is None:
            continue
        if len(s ^ t) != 1:
            raise AssertionError(f"partner of {sorted(s)} is not adjacent: {sorted(t)}")
        upper, lower = (s, t) if len(s) > len(t) else (t, s)
        pairs.add((to_mask(upper), to_mask(lower)))
    return Matching.of(pairs)


# ---------------------------------------------------------------------------
# Case D_n on K^D_{n,g}
# ---------------------------------------------------------------------------

# Degenerate D_3 is the path 1-3-2; relabeling it to A_3 sends 1,3,2 to 1,2,3.
_D3_TO_A = {1: 1, 3: 2, 2: 3}
_A_TO_D3 = {v: k for k, v in _D3_TO_A.items()}


def _qr(k: int, d: int) -> tuple[int, int]:
    """Write k = q*(d/2) + r with the parity convention of the even matchings."""
    half = d // 2
    q, r = divmod(k, half)
    if r == 0 and q % 2 == 1:
        q, r = q - 1, half
    return q, r


def _comp1_size_D(s: Simp, n: int) -> int:
    """Size of the component of vertex 1 when {1,2,3} <= s (D_n labeling)."""
    j = 3
    while j + 1 <= n and j + 1 in s:
        j += 1
    return j


def _partner_D_odd(s: Simp, n: int, d: int) -> Optional[Simp]:
    if n <= 1:
        return _partner_A(s, n, 0, 0, d)
    if 1 in s:
        return s ^ {2}
    sub = frozenset(v - 1 for v in s)
    t = _partner_A(sub, n - 1, 0, 0, d)
    return None if t is None else frozenset(v + 1 for v in t)


def _partner_D_even(s: Simp, n: int, g: int, d: int) -> Optional[Simp]:
    half = d // 2
    if g >= n:
        return None  # at most one simplex in the system
    if n <= 2 or (n == 3 and g == 1):
        # degenerate bases: pair across vertex 1 within the weight class
        t = s ^ {1}
        gr = graph_D(n)
        return t if _weight_on(gr, t, d, True) == _weight_on(gr, s, d, True) else None
    if n == 3:
        sub = frozenset(_D3_TO_A[v] for v in s)
        t = _partner_A(sub, 3, 0, g, d)
        return None if t is None else frozenset(_A_TO_D3[v] for v in t)

    if 2 not in s:
        # (a) relabel {1,3,4,...,n} as {1,...,n-1}
        sub = frozenset(1 if v == 1 else v - 1 for v in s)
        t = _partner_A(sub, n - 1, 0, g, d)
        return None if t is None else frozenset(1 if v == 1 else v + 1 for v in t)
    if d == 2 and not _rng(1, 4) <= s:
        if {1, 2, 4} <= s:
            return s ^ {5} if n - g >= 5 else None  # (b1)
        return s ^ {3} if n - g >= 3 else None  # (b2)
    if d >= 4 and 3 not in s:
        return s ^ {1}  # (c)
    if d == 4 and 4 not in s:
        # (d) ignore vertex 1; {2,3} <= s here
        frozen = s & {1, 2, 3}
        sub = frozenset(v - 4 for v in s if v >= 5)
        t = _partner_A(sub, n - 4, 0, g, d)
        return None if t is None else frozen | frozenset(v + 4 for v in t)
    if d >= 6 and 4 not in s:
        return s ^ {1}  # (e)
    if d >= 4 and 1 not in s:
        if _rng(2, half + 1) <= s:
            # (f1)
            sub = frozenset(v - 1 for v in s)
            t = _partner_A(sub, n - 1, max(half, 3), g, d)
            return None if t is None else frozenset(v + 1 for v in t)
        return s | {1}  # (f2)

    # (g): {1,2,3,4} <= s
    k = _comp1_size_D(s, n)
    q, _ = _qr(k, d)
    v = q * half + (1 if q % 2 == 0 else 2)
    if v in s:
        return s - {v} if v <= n - g else None  # (g1)
    if v > n:
        return None  # (g2.1)
    if q % 2 == 0:
        lo, hi = q * half + 2, (q + 1) * half + 1
        if hi <= n and _rng(lo, hi) <= s:
            # (g2.2) freeze everything <= q*half + 1
            base = q * half + 1
            sub = frozenset(u - base for u in s if u > base)
            t = _partner_A(sub, n - base, half, g, d)
            return None if t is None else (s & _rng(1, base)) | frozenset(u + base for u in t)
    else:
        lo, hi = q * half + 3, (q + 1) * half
        if hi <= n and _rng(lo, hi) <= s:
            # (g2.3)
            base = q * half + 2
            sub = frozenset(u - base for u in s if u > base)
            t = _partner_A(sub, n - base, half - 2, g, d)
            return None if t is None else (s & _rng(1, base)) | frozenset(u + base for u in t)
    return s | {v}


def system_D(n: int, g: int) -> list[Simp]:
    if g > n:
        return []
    prescribed = _rng(n - g + 1, n)
    free = sorted(set(range(1, n + 1)) - prescribed)
    return [
        prescribed | frozenset(free[i] for i in range(len(free)) if bits >> i & 1)
        for bits in range(1 << len(free))
    ]


def complex_D(n: int, g: int = 0) -> ComplexK:
    graph = graph_D(n)
    if g == 0:
        return ComplexK.build(graph)
    return ComplexK.from_masks(graph, (_mask1(s) for s in system_D(n, g)))


def matching_D(n: int, g: int, d: int, K: Optional[ComplexK] = None) -> tuple[ComplexK, Matching]:
    """The phi_d-matching on K^D_{n,g}; g must be 0 when d is odd."""
    if d < 2:
        raise ValueError("need d >= 2")
    if d % 2 and g != 0:
        raise ValueError("boundary parameter g is only available for even d")
    if K is None:
        K = complex_D(n, g)
    if d % 2:
        partner = lambda s: _partner_D_odd(s, n, d)
    else:
        partner = lambda s: _partner_D_even(s, n, g, d)
    return K, _collect_pairs(system_D(n, g), partner, _mask1)


# ---------------------------------------------------------------------------
# Case tilde-B_n (vertices 0..n; the bond 4 sits on the edge (n-1, n))
# ---------------------------------------------------------------------------


def _comp_n_size_tB(s: Simp, n: int) -> int:
    if n not in s:
        return 0
    j = n
    while j - 1 >= 2 and j - 1 in s:
        j -= 1
    k = n - j + 1
    if j == 2:
        k += (0 in s) + (1 in s)
    return k


def _partner_tB_odd(s: Simp, n: int) -> Optional[Simp]:
    # Toggle the vertex across the bond-4 edge.  Under the figure's numbering
    # (fork at 0,1; bond 4 on (n-1, n)) that vertex is n, and the unique
    # critical simplex is {0,...,n-1}, a D_n of weight floor(n/d).
    if s == _rng(0, n - 1):
        return None
    return s ^ {n}


def _partner_tB_even(s: Simp, n: int, d: int) -> Optional[Simp]:
    half = d // 2
    k = _comp_n_size_tB(s, n)
    q, r = divmod(k, half)
    u = n - q * half
    if r >= 1:
        if r == 1 and s == frozenset({0}) | _rng(2, n):
            return None  # the exception of case (a)
        return s ^ {u}
    lo, hi = n - (q + 1) * half + 1, n - q * half - 1
    if lo > hi or (lo >= 0 and _rng(lo, hi) <= s):
        # (b) freeze vertices >= u, relabel {0..u-1} as {1..u}
        n2 = u
        frozen = s & _rng(n2, n)
        sub = frozenset(v + 1 for v in s if v < n2)
        t = _partner_D_even(sub, n2, half - 1, d)
        return None if t is None else frozen | frozenset(v - 1 for v in t)
    if len(s) == n:
        return None  # (c1): {0,2,...,n} or {1,2,...,n}
    if n == (q + 1) * half and s == frozenset({0}) | _rng(2, u - 1) | _rng(u + 1, n):
        return None  # (c2)
    return s ^ {u}  # (c3)


def complex_tB(n: int) -> ComplexK:
    return ComplexK.build(coxeter_graph("tB", n))


def matching_tB(n: int, d: int, K: Optional[ComplexK] = None) -> tuple[ComplexK, Matching]:
    if n < 3 or d < 2:
        raise ValueError("need n >= 3 and d >= 2")
    if K is None:
        K = complex_tB(n)
    simplices = [frozenset(v for v in range(n + 1) if m >> v & 1) for m in K.simplices()]
    partner = (lambda s: _partner_tB_odd(s, n)) if d % 2 else (lambda s: _partner_tB_even(s, n, d))
    return K, _collect_pairs(simplices, partner, _mask0)


# ---------------------------------------------------------------------------
# Case tilde-D_n (vertices 0..n; forks at 2 and at n-2)
# ---------------------------------------------------------------------------


def _tD_flip(n: int) -> Callable[[int], int]:
    """The relabeling {n, n-1, ..., 3, 2, 0} -> {1, ..., n} and its inverse."""

    def fwd(x: int) -> int:
        return n if x == 0 else n + 1 - x

    return fwd


def _comp0_size_tD(s: Simp, n: int) -> int:
    """Size of the component of vertex 0 when {0,1,2,3} <= s (tD labeling)."""
    j = 2
    while j + 1 <= n - 2 and j + 1 in s:
        j += 1
    k = j + 1  # the chain {2..j} plus the fork vertices 0, 1
    if j == n - 2:
        k += (n - 1 in s) + (n in s)
    return k


def _comp_after_tD(s: Simp, n: int, v: int) -> frozenset:
    """Everything that joins the component of 0 when v is added, beyond v.

    For v < n-2 this is the component of v+1.  At v = n-2 both fork tips
    hang on v, so the merge set is sigma intersected with {n-1, n}; at
    v >= n-1 the far side is empty.
    """
    if v >= n - 1:
        return frozenset()
    if v == n - 2:
        return s & {n - 1, n}
    if v + 1 not in s:
        return frozenset()
    j = v + 1
    while j + 1 <= n - 2 and j + 1 in s:
        j += 1
    comp = _rng(v + 1, j)
    if j == n - 2:
        comp |= s & {n - 1, n}
    return comp


def _partner_tD_odd(s: Simp, n: int, d: int) -> Optional[Simp]:
    if s == _rng(1, n):
        return None
    if 1 not in s:
        fwd = _tD_flip(n)
        inv = {fwd(x): x for x in list(range(2, n + 1)) + [0]}
        sub = frozenset(fwd(x) for x in s)
        t = _partner_D_odd(sub, n, d)
        return None if t is None else frozenset(inv[y] for y in t)
    return s ^ {0}


def _partner_tD_even(s: Simp, n: int, d: int) -> Optional[Simp]:
    half = d // 2
    if n == 4 and d == 2:
        if (len(s) == 1 and 2 not in s) or len(s) == 2 or (len(s) == 3 and 2 in s):
            return s ^ {2}
        return None
    if n == 4 and d == 4:
        if 2 not in s or not s & {1, 3, 4}:
            return s ^ {0}
        return None
    if n == 4 and d == 6:
        if (2 in s and 0 not in s and len(s) >= 3) or ({0, 2} <= s and len(s) == 4):
            return None
        return s ^ {0}

    if 1 not in s:
        # (a)
        fwd = _tD_flip(n)
        inv = {fwd(x): x for x in list(range(2, n + 1)) + [0]}
        sub = frozenset(fwd(x) for x in s)
        t = _partner_D_even(sub, n, 0, d)
        return None if t is None else frozenset(inv[y] for y in t)
    if d == 2 and not {0, 1, 2, 3} <= s:
        if {0, 1, 3} <= s:
            return s ^ {4} if not _rng(5, n) <= s else None  # (b1)
        return s ^ {2} if not frozenset({1}) | _rng(3, n) <= s else None  # (b2)
    if d >= 4 and 0 not in s:
        if _rng(1, half) <= s:
            # (c1) relabel {n,...,2,1} as {1,...,n}
            sub = frozenset(n + 1 - x for x in s)
            t = _partner_D_even(sub, n, half, d)
            return None if t is None else frozenset(n + 1 - y for y in t)
        if n == half + 1 and s == _rng(1, n - 2) | {n}:
            return None  # (c2)
        if s == _rng(1, n):
            return None  # (c3)
        return s | {0}  # (c4)
    if d >= 4 and 2 not in s:
        return s ^ {0}  # (d)
    if d == 4 and 3 not in s:
        # (e) ignore 0,1,2; relabel {n,...,4} as {1,...,n-3}
        frozen = s & {0, 1, 2}
        sub = frozenset(n + 1 - x for x in s if x >= 4)
        t = _partner_D_even(sub, n - 3, 0, d)
        return None if t is None else frozen | frozenset(n + 1 - y for y in t)
    if d >= 6 and 3 not in s:
        return s ^ {0}  # (f)

    # (g): {0,1,2,3} <= s
    k = _comp0_size_tD(s, n)
    q, r = _qr(k, d)
    v = q * half + (0 if q % 2 == 0 else 1)
    if d == 4 and q % 2 == 1 and r == 1:
        if k <= n - 2:
            # (g1.1) ignore 0..k, relabel {n,...,k+1} as {1,...,n-k}
            frozen = s & _rng(0, k - 1)
            sub = frozenset(n + 1 - x for x in s if x > k)
            t = _partner_D_even(sub, n - k, 0, d)
            return None if t is None else frozen | frozenset(n + 1 - y for y in t)
        return None  # (g1.2)
    if s == _rng(0, n - 2) | {n} and v >= n - 1:
        return None  # (g2)
    if v in s:
        return s - {v}  # (g3)
    if v > n:
        return None  # (g4)
    if s | {v} == _rng(0, n):
        return None  # adding v would give the full set, which is not in K_W
    C = _comp_after_tD(s, n, v)
    c = len(C)
    ell = half if q % 2 == 0 else half - 2
    if {n - 1, n} <= C:
        return None  # (g5.1)
    if c < ell:
        return s | {v}  # (g5.2)
    if c == ell and n - 1 not in C and n in C:
        return None  # (g5.3)
    # (g5.4) ignore 0..v-1, relabel {n,...,v+1} as {1,...,n-v}
    frozen = s & _rng(0, v - 1)
    sub = frozenset(n + 1 - x for x in s if x > v)
    t = _partner_D_even(sub, n - v, ell, d)
    return None if t is None else frozen | frozenset(n + 1 - y for y in t)


def complex_tD(n: int) -> ComplexK:
    return ComplexK.build(coxeter_graph("tD", n))


def matching_tD(n: int, d: int, K: Optional[ComplexK] = None) -> tuple[ComplexK, Matching]:
    if n < 4 or d < 2:
        raise ValueError("need n >= 4 and d >= 2")
    if K is None:
        K = complex_tD(n)
    simplices = [frozenset(v for v in range(n + 1) if m >> v & 1) for m in K.simplices()]
    partner = (
        (lambda s: _partner_tD_odd(s, n, d)) if d % 2 else (lambda s: _partner_tD_even(s, n, d))
    )
    return K, _collect_pairs(simplices, partner, _mask0)


# ---------------------------------------------------------------------------
# Case I2(m)
# ---------------------------------------------------------------------------


def complex_I2(m: int) -> ComplexK:
    return ComplexK.build(coxeter_graph("I2", m))


def matching_I2(m: int, d: int, K: Optional[ComplexK] = None) -> tuple[ComplexK, Matching]:
    if m < 5 or d < 2:
        raise ValueError("need m >= 5 and d >= 2")
    if K is None:
        K = complex_I2(m)
    both, first, second, empty = 0b11, 0b01, 0b10, 0
    if d == 2 and m % 2 == 0:
        pairs = []
    elif d == 2:
        pairs = [(both, first)]
    elif m % d == 0:
        pairs = [(second, empty)]
    else:
        pairs = [(both, first), (second, empty)]
    return K, Matching.of(pairs)


# ---------------------------------------------------------------------------
# Products (simplicial join of the factor complexes)
# ---------------------------------------------------------------------------


def product_graph(g1: CoxeterGraph, g2: CoxeterGraph) -> CoxeterGraph:
    n = g1.rank + g2.rank
    bonds = [[2.0] * n for _ in range(n)]
    for i in range(n):
        bonds[i][i] = 1
    for i in range(g1.rank):
        for j in range(g1.rank):
            bonds[i][j] = g1.bonds[i][j]
    off = g1.rank
    for i in range(g2.rank):
        for j in range(g2.rank):
            bonds[off + i][off + j] = g2.bonds[i][j]
    labels = tuple(f"L{x}" for x in g1.vertex_labels) + tuple(f"R{x}" for x in g2.vertex_labels)
    return CoxeterGraph(n, tuple(tuple(r) for r in bonds), labels)


def product_complex(K1: ComplexK, K2: ComplexK) -> ComplexK:
    graph = product_graph(K1.graph, K2.graph)
    off = K1.graph.rank
    masks = [m1 | (m2 << off) for m1 in K1.simplices() for m2 in K2.simplices()]
    if K1.full_kw and K2.full_kw:
        K = ComplexK.build(graph)
        if sorted(K.simplices()) != sorted(masks):
            raise AssertionError("product complex disagrees with built K_W")
        return K
    return ComplexK.from_masks(graph, masks)


def product_matching(
    K1: ComplexK, M1: Matching, K2: ComplexK, M2: Matching, K12: Optional[ComplexK] = None
) -> tuple[ComplexK, Matching]:
    """The join matching: pair in the second factor wherever M2 does; pair in
    the first factor only over critical second-factor simplices."""
    if K12 is None:
        K12 = product_complex(K1, K2)
    off = K1.graph.rank
    pairs = []
    for m1 in K1.simplices():
        for s2, t2 in M2.pairs:
            pairs.append((m1 | (s2 << off), m1 | (t2 << off)))
    crit2 = [m for level in M2.criticals(K2) for m in level]
    for s1, t1 in M1.pairs:
        for m2 in crit2:
            pairs.append((s1 | (m2 << off), t1 | (m2 << off)))
    return K12, Matching.of(pairs)


# ---------------------------------------------------------------------------
# Expected critical data (the closed-form tables)
# ---------------------------------------------------------------------------


def critical_descriptor(K: ComplexK, M: Matching, level: WeightedLevel) -> tuple[int, tuple[int, ...]]:
    """Observed (count, sorted multiset of |sigma| - v(sigma)) over criticals."""
    values = []
    for lev in M.criticals(K):
        for m in lev:
            values.append(m.bit_count() - level.of(m))
    return len(values), tuple(sorted(values))


def expected_descriptor_A(n: int, f: int, g: int, d: int) -> tuple[int, tuple[int, ...]]:
    if f > n or g > n:
        return 0, ()
    if f + g >= n:
        return 1, (n - (n + 1) // d,)
    f0, g0 = f % d, g % d
    if n % d in _residues(max(d - 1, f0 + g0 + 1), min(f0 + d - 1, g0 + d - 1), d):
        val = n - (n - f) // d - (n - g) // d - 1
        return 2, (val, val)
    if n % d in _residues(max(f0, g0), min(f0 + g0, d - 2), d):
        val = n - (n - f) // d - (n - g) // d
        return 2, (val, val)
    return 0, ()


def expected_descriptor_D_odd(n: int, d: int) -> tuple[int, tuple[int, ...]]:
    if n % d == 0:
        val = n - 2 * (n // d)
        return 2, (val, val)
    if n % d == 1:
        val = n - 2 * ((n - 1) // d) - 1
        return 2, (val, val)
    return 0, ()


def expected_value_D_even(n: int, d: int) -> Optional[int]:
    """Common |sigma| - v value of the g=0 criticals, or None when there are none."""
    if n % d == 0:
        return n - 2 * (n // d)
    if n % d == 1:
        return n - 2 * ((n - 1) // d) - 1
    if d >= 4 and n % d == d // 2 + 1:
        return n - (2 * (n - 1)) // d  # here d | 2(n-1), so the division is exact
    return None


def expected_descriptor_tD_odd(n: int, d: int) -> tuple[int, tuple[int, ...]]:
    if n % d == 0:
        return 3, tuple(sorted((n - n // d, n - 2 * (n // d), n - 2 * (n // d))))
    if n % d == 1:
        a = n - (n - 1) // d
        b = n - 2 * ((n - 1) // d) - 1
        return 3, tuple(sorted((a, b, b)))
    return 1, (n - n // d,)


def expected_tB(n: int, d: int) -> tuple[Optional[int], int]:
    """(count or None when unspecified, common |sigma| - v value)."""
    if d % 2:
        return 1, n - n // d
    return None, n - n // (d // 2)
