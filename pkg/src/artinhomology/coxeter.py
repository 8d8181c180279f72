"""Coxeter graphs, finite-type recognition, and cyclotomic weights.

A Coxeter graph is stored as its full symmetric bond matrix (diagonal 1,
off-diagonal entries >= 2 or infinity).  Vertices are indexed 0..n-1
internally; display labels are kept separately so the built-in diagrams can
carry the conventional numbering (1..n for the finite families, 0..n for the
affine ones).

Recognition of irreducible finite types works directly on the labeled graph:
tree check, branch-vertex count, arm lengths, and the multiset of high bonds.
No bilinear forms, no floating point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterator, Optional

INF = math.inf  # bond label for m_ij = infinity

_EXCEPTIONAL_DEGREES = {
    ("E", 6): (2, 5, 6, 8, 9, 12),
    ("E", 7): (2, 6, 8, 10, 12, 14, 18),
    ("E", 8): (2, 8, 12, 14, 18, 20, 24, 30),
    ("F", 4): (2, 6, 8, 12),
    ("H", 3): (2, 6, 10),
    ("H", 4): (2, 12, 20, 30),
}


class NotFiniteTypeError(ValueError):
    """Raised when a weight is requested for a non-finite-type subgraph."""


@dataclass(frozen=True)
class FiniteTypeLabel:
    """Type of an irreducible finite Coxeter graph.

    ``family`` is one of A, B, D, E, F, H, I2; ``m`` is the bond label for
    I2(m) and None otherwise.  G2 is stored as I2(6); single-edge graphs with
    bond 3 or 4 are A2 and B2, so every graph has exactly one label.
    """

    family: str
    rank: int
    m: Optional[int] = None

    def __str__(self) -> str:
        if self.family == "I2":
            return f"I2({self.m})"
        return f"{self.family}{self.rank}"


@dataclass(frozen=True)
class CyclotomicVector:
    """A product of cyclotomic polynomials prod phi_d^{k_d}, as d -> k_d.

    The empty map is the constant 1.  Zero multiplicities are never stored.
    """

    entries: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        assert all(d >= 2 and k >= 1 for d, k in self.entries)
        assert list(self.entries) == sorted(self.entries)

    @staticmethod
    def from_dict(data: dict[int, int]) -> "CyclotomicVector":
        return CyclotomicVector(tuple(sorted((d, k) for d, k in data.items() if k)))

    @staticmethod
    def from_degrees(degs: Iterator[int]) -> "CyclotomicVector":
        """Factorization of prod [e]_q over the degrees e."""
        counts: dict[int, int] = {}
        for e in degs:
            for d in range(2, e + 1):
                if e % d == 0:
                    counts[d] = counts.get(d, 0) + 1
        return CyclotomicVector.from_dict(counts)

    def multiplicity(self, d: int) -> int:
        for dd, k in self.entries:
            if dd == d:
                return k
        return 0

    def as_dict(self) -> dict[int, int]:
        return dict(self.entries)

    def __mul__(self, other: "CyclotomicVector") -> "CyclotomicVector":
        out = self.as_dict()
        for d, k in other.entries:
            out[d] = out.get(d, 0) + k
        return CyclotomicVector.from_dict(out)

    def total(self) -> int:
        return sum(k for _, k in self.entries)


@dataclass(frozen=True)
class CoxeterGraph:
    """A Coxeter system (W, S): bond matrix plus display labels."""

    rank: int
    bonds: tuple[tuple[float, ...], ...]
    vertex_labels: tuple[str, ...] = field(default=())

    def __post_init__(self) -> None:
        n = self.rank
        if len(self.bonds) != n or any(len(row) != n for row in self.bonds):
            raise ValueError("bond matrix must be rank x rank")
        for i in range(n):
            if self.bonds[i][i] != 1:
                raise ValueError("diagonal bonds must be 1")
            for j in range(i + 1, n):
                m = self.bonds[i][j]
                if m != self.bonds[j][i]:
                    raise ValueError("bond matrix must be symmetric")
                if m != INF and (int(m) != m or m < 2):
                    raise ValueError("off-diagonal bonds must be >= 2 or inf")
        if not self.vertex_labels:
            object.__setattr__(self, "vertex_labels", tuple(str(i) for i in range(n)))
        elif len(self.vertex_labels) != n:
            raise ValueError("need one label per vertex")

    def bond(self, i: int, j: int) -> float:
        return self.bonds[i][j]

    def adjacency_masks(self) -> tuple[int, ...]:
        """Bitmask of graph neighbors (bond >= 3 or inf) per vertex."""
        out = []
        for i in range(self.rank):
            m = 0
            for j in range(self.rank):
                if j != i and self.bonds[i][j] != 2:
                    m |= 1 << j
            out.append(m)
        return tuple(out)

    def components(self, mask: int) -> list[int]:
        """Connected components of the induced subgraph, as vertex masks."""
        adj = self.adjacency_masks()
        out = []
        todo = mask
        while todo:
            seed = todo & -todo
            comp = 0
            frontier = seed
            while frontier:
                comp |= frontier
                nxt = 0
                f = frontier
                while f:
                    b = f & -f
                    f ^= b
                    nxt |= adj[b.bit_length() - 1] & mask
                frontier = nxt & ~comp
            out.append(comp)
            todo &= ~comp
        return out


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        b = mask & -mask
        out.append(b.bit_length() - 1)
        mask ^= b
    return out


def classify_component(graph: CoxeterGraph, component: int) -> Optional[FiniteTypeLabel]:
    """Finite-type label of a connected induced subgraph, or None.

    ``component`` is a vertex bitmask; the caller guarantees connectivity.
    Total function: affine diagrams, infinite bonds, and everything else
    simply come back as None.
    """
    verts = _bits(component)
    n = len(verts)
    if n == 0:
        return None
    if n == 1:
        return FiniteTypeLabel("A", 1)

    edges = []
    for a in range(n):
        for b in range(a + 1, n):
            m = graph.bond(verts[a], verts[b])
            if m == INF:
                return None
            if m >= 3:
                edges.append((a, b, int(m)))
    if len(edges) != n - 1:
        return None  # a cycle (or disconnection, which the caller excludes)

    deg = [0] * n
    nbrs: list[list[int]] = [[] for _ in range(n)]
    for a, b, _ in edges:
        deg[a] += 1
        deg[b] += 1
        nbrs[a].append(b)
        nbrs[b].append(a)
    if max(deg) > 3:
        return None
    branch = [v for v in range(n) if deg[v] == 3]
    if len(branch) > 1:
        return None

    if branch:
        if any(m > 3 for _, _, m in edges):
            return None
        arms = []
        c = branch[0]
        for start in nbrs[c]:
            length = 1
            prev, cur = c, start
            while deg[cur] == 2:
                nxt = nbrs[cur][0] if nbrs[cur][0] != prev else nbrs[cur][1]
                prev, cur = cur, nxt
                length += 1
            arms.append(length)
        arms.sort()
        if arms[0] == 1 and arms[1] == 1:
            return FiniteTypeLabel("D", n)
        if arms == [1, 2, 2]:
            return FiniteTypeLabel("E", 6)
        if arms == [1, 2, 3]:
            return FiniteTypeLabel("E", 7)
        if arms == [1, 2, 4]:
            return FiniteTypeLabel("E", 8)
        return None

    # A path; walk it from one end to read off the bond sequence.
    start = next(v for v in range(n) if deg[v] == 1)
    order = [start]
    prev = -1
    while len(order) < n:
        cur = order[-1]
        nxt = next(u for u in nbrs[cur] if u != prev)
        prev = cur
        order.append(nxt)
    ms = [int(graph.bond(verts[order[i]], verts[order[i + 1]])) for i in range(n - 1)]
    high = [(i, m) for i, m in enumerate(ms) if m > 3]
    if not high:
        return FiniteTypeLabel("A", n)
    if len(high) > 1:
        return None
    pos, m = high[0]
    if n == 2:
        if m == 4:
            return FiniteTypeLabel("B", 2)
        return FiniteTypeLabel("I2", 2, m=m)
    at_end = pos in (0, n - 2)
    if m == 4:
        if at_end:
            return FiniteTypeLabel("B", n)
        if n == 4 and pos == 1:
            return FiniteTypeLabel("F", 4)
        return None
    if m == 5 and at_end and n in (3, 4):
        return FiniteTypeLabel("H", n)
    return None


def degrees(label: FiniteTypeLabel) -> tuple[int, ...]:
    """Sorted degrees (exponents + 1) of the finite Coxeter group."""
    fam, n = label.family, label.rank
    if fam == "A":
        return tuple(range(2, n + 2))
    if fam == "B":
        return tuple(range(2, 2 * n + 1, 2))
    if fam == "D":
        return tuple(sorted(list(range(2, 2 * n - 1, 2)) + [n]))
    if fam == "I2":
        return (2, label.m)  # type: ignore[return-value]
    try:
        return _EXCEPTIONAL_DEGREES[(fam, n)]
    except KeyError:
        raise ValueError(f"unknown label {label}") from None


def poincare_factorization(label: FiniteTypeLabel) -> CyclotomicVector:
    """Cyclotomic factorization of the Poincare polynomial prod [e]_q."""
    return CyclotomicVector.from_degrees(iter(degrees(label)))


def weight(graph: CoxeterGraph, sigma: int, d: int) -> int:
    """phi_d-weight of a simplex: sum over components of its parabolic.

    Raises NotFiniteTypeError if some component is not finite type.
    ``sigma`` is a vertex bitmask; the empty simplex has weight 0.
    """
    if d < 2:
        raise ValueError("cyclotomic index must be >= 2")
    total = 0
    for comp in graph.components(sigma):
        label = classify_component(graph, comp)
        if label is None:
            raise NotFiniteTypeError(f"component {sorted(_bits(comp))} is not finite type")
        total += poincare_factorization(label).multiplicity(d)
    return total


# ---------------------------------------------------------------------------
# Built-in diagrams (conventional numbering: finite families 1..n, affine
# 0..n, Bourbaki for the exceptional types) and the matrix file format.
# ---------------------------------------------------------------------------

FAMILIES = ("A", "B", "D", "E", "F", "H", "I2", "tA", "tB", "tC", "tD", "tE", "tF", "tG", "tI")


def _graph_from_edges(n: int, edges: list[tuple[int, int, float]], labels: list[str]) -> CoxeterGraph:
    bonds = [[2.0] * n for _ in range(n)]
    for i in range(n):
        bonds[i][i] = 1
    for a, b, m in edges:
        bonds[a][b] = bonds[b][a] = m
    return CoxeterGraph(n, tuple(tuple(row) for row in bonds), tuple(labels))


def coxeter_graph(family: str, n: int) -> CoxeterGraph:
    """Standard diagram for a built-in name, e.g. ("D", 5) or ("tB", 4).

    Finite families label vertices 1..n, affine families 0..n.  For I2 the
    parameter is the bond m (the rank is 2).
    """
    fam = family
    path3 = lambda k: [(i, i + 1, 3.0) for i in range(k)]
    fin_labels = lambda k: [str(i + 1) for i in range(k)]
    aff_labels = lambda k: [str(i) for i in range(k + 1)]

    if fam == "A":
        if n < 1:
            raise ValueError("A needs n >= 1")
        return _graph_from_edges(n, path3(n - 1), fin_labels(n))
    if fam == "B":
        if n < 2:
            raise ValueError("B needs n >= 2")
        edges = path3(n - 1)
        edges[0] = (0, 1, 4.0)
        return _graph_from_edges(n, edges, fin_labels(n))
    if fam == "D":
        if n < 4:
            raise ValueError("D needs n >= 4")
        edges = [(0, 2, 3.0), (1, 2, 3.0)] + [(i, i + 1, 3.0) for i in range(2, n - 1)]
        return _graph_from_edges(n, edges, fin_labels(n))
    if fam == "E":
        if n not in (6, 7, 8):
            raise ValueError("E needs n in 6..8")
        edges = [(0, 2, 3.0), (1, 3, 3.0)] + [(i, i + 1, 3.0) for i in range(2, n - 1)]
        return _graph_from_edges(n, edges, fin_labels(n))
    if fam == "F":
        if n != 4:
            raise ValueError("F needs n = 4")
        return _graph_from_edges(4, [(0, 1, 3.0), (1, 2, 4.0), (2, 3, 3.0)], fin_labels(4))
    if fam == "H":
        if n not in (3, 4):
            raise ValueError("H needs n in 3..4")
        edges = path3(n - 1)
        edges[0] = (0, 1, 5.0)
        return _graph_from_edges(n, edges, fin_labels(n))
    if fam == "I2":
        if n < 3:
            raise ValueError("I2 needs m >= 3")
        return _graph_from_edges(2, [(0, 1, float(n))], fin_labels(2))
    if fam == "tA":
        if n == 1:
            return _graph_from_edges(2, [(0, 1, INF)], aff_labels(1))
        if n < 2:
            raise ValueError("tA needs n >= 1")
        edges = [(i, i + 1, 3.0) for i in range(n)] + [(0, n, 3.0)]
        return _graph_from_edges(n + 1, edges, aff_labels(n))
    if fam == "tB":
        if n < 3:
            raise ValueError("tB needs n >= 3")
        edges = [(0, 2, 3.0), (1, 2, 3.0)] + [(i, i + 1, 3.0) for i in range(2, n - 1)] + [(n - 1, n, 4.0)]
        return _graph_from_edges(n + 1, edges, aff_labels(n))
    if fam == "tC":
        if n < 2:
            raise ValueError("tC needs n >= 2")
        edges = [(i, i + 1, 3.0) for i in range(n)]
        edges[0] = (0, 1, 4.0)
        edges[-1] = (n - 1, n, 4.0)
        return _graph_from_edges(n + 1, edges, aff_labels(n))
    if fam == "tD":
        if n < 4:
            raise ValueError("tD needs n >= 4")
        edges = [(0, 2, 3.0), (1, 2, 3.0)] + [(i, i + 1, 3.0) for i in range(2, n - 2)] + [
            (n - 2, n - 1, 3.0),
            (n - 2, n, 3.0),
        ]
        return _graph_from_edges(n + 1, edges, aff_labels(n))
    if fam == "tE":
        if n not in (6, 7, 8):
            raise ValueError("tE needs n in 6..8")
        base = coxeter_graph("E", n)
        attach = {6: 2, 7: 1, 8: 8}[n]  # paper-label of the E_n vertex the new node joins
        edges = [(0, attach, 3.0)]
        for i in range(n):
            for j in range(i + 1, n):
                m = base.bond(i, j)
                if m != 2:
                    edges.append((i + 1, j + 1, m))
        return _graph_from_edges(n + 1, edges, aff_labels(n))
    if fam == "tF":
        if n != 4:
            raise ValueError("tF needs n = 4")
        return _graph_from_edges(
            5, [(0, 1, 3.0), (1, 2, 3.0), (2, 3, 4.0), (3, 4, 3.0)], aff_labels(4)
        )
    if fam == "tG":
        if n != 2:
            raise ValueError("tG needs n = 2")
        return _graph_from_edges(3, [(0, 1, 3.0), (1, 2, 6.0)], aff_labels(2))
    if fam == "tI":
        if n != 1:
            raise ValueError("tI needs n = 1")
        return _graph_from_edges(2, [(0, 1, INF)], aff_labels(1))
    raise ValueError(f"unknown family {family!r}")


def parse_coxeter_matrix(text: str) -> CoxeterGraph:
    """Parse the matrix file format: line 1 is n, then n rows ('inf' allowed)."""
    tokens = text.split()
    if not tokens:
        raise ValueError("empty Coxeter matrix file")
    n = int(tokens[0])
    need = n * n
    if len(tokens) - 1 != need:
        raise ValueError(f"expected {need} matrix entries, got {len(tokens) - 1}")
    vals = []
    for t in tokens[1:]:
        vals.append(INF if t.lower() in ("inf", "oo") else float(int(t)))
    bonds = tuple(tuple(vals[i * n : (i + 1) * n]) for i in range(n))
    return CoxeterGraph(n, bonds, tuple(str(i + 1) for i in range(n)))


def is_finite_type(graph: CoxeterGraph) -> bool:
    full = (1 << graph.rank) - 1
    return all(classify_component(graph, c) is not None for c in graph.components(full))
