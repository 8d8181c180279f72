"""The simplicial complex K_W and its algebraic boundary data.

Simplices are vertex bitmasks.  K_W holds every subset of S whose parabolic
subgroup is finite; for finite-type graphs that is the full power set, for
affine ones everything but the full set.  The empty simplex is always in.

The same class also serves the K^A_{n,f,g} / K^D_{n,g} constructions: those
are arbitrary subsets of a power set (not closed downward), and everything
below -- covering pairs, incidence signs, weights, Morse data -- only ever
looks at pairs that are both in the system.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .coxeter import CoxeterGraph, CyclotomicVector, classify_component, poincare_factorization
from .polynomial import Poly, cyclotomic


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def vertices_of(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        b = mask & -mask
        out.append(b.bit_length() - 1)
        mask ^= b
    return tuple(out)


def incidence_sign(sigma: int, tau: int) -> int:
    """[sigma : tau] = (-1)^i with the removed vertex i-th smallest in sigma.

    Requires tau to be a codimension-1 face of sigma.
    """
    removed = sigma ^ tau
    if not (tau & ~sigma) == 0 or removed.bit_count() != 1 or not sigma & removed:
        raise ValueError("tau is not a codimension-1 face of sigma")
    below = sigma & (removed - 1)
    return -1 if below.bit_count() & 1 else 1


@dataclass(frozen=True)
class WeightedLevel:
    """phi_d-weights v_d(sigma) for every simplex of one complex."""

    d: int
    weights: dict[int, int]

    def of(self, mask: int) -> int:
        return self.weights[mask]


class ComplexK:
    """A finite family of simplices over a Coxeter graph, graded by cardinality."""

    def __init__(self, graph: CoxeterGraph, masks: Iterable[int], full_kw: bool):
        self.graph = graph
        self.full_kw = full_kw
        by_card: dict[int, list[int]] = {}
        for m in masks:
            by_card.setdefault(m.bit_count(), []).append(m)
        top = max(by_card) if by_card else -1
        self.masks_by_card: tuple[tuple[int, ...], ...] = tuple(
            tuple(sorted(by_card.get(k, ()), key=vertices_of)) for k in range(top + 1)
        )
        self.index: dict[int, tuple[int, int]] = {}
        for k, level in enumerate(self.masks_by_card):
            for pos, m in enumerate(level):
                self.index[m] = (k, pos)
        self._component_labels: dict[int, object] = {}
        self._factorizations: dict[int, CyclotomicVector] = {}

    # -- construction -------------------------------------------------------

    @staticmethod
    def build(graph: CoxeterGraph) -> "ComplexK":
        """K_W: all subsets whose parabolic subgroup is finite (incl. the empty set)."""
        masks = []
        label_memo: dict[int, object] = {}
        for m in range(1 << graph.rank):
            ok = True
            for comp in graph.components(m):
                if comp not in label_memo:
                    label_memo[comp] = classify_component(graph, comp)
                if label_memo[comp] is None:
                    ok = False
                    break
            if ok:
                masks.append(m)
        K = ComplexK(graph, masks, full_kw=True)
        K._component_labels.update(label_memo)
        return K

    @staticmethod
    def from_masks(graph: CoxeterGraph, masks: Iterable[int]) -> "ComplexK":
        """A restricted system such as K^A_{n,f,g}; membership is the given set."""
        return ComplexK(graph, masks, full_kw=False)

    # -- queries -------------------------------------------------------------

    def __contains__(self, mask: int) -> bool:
        return mask in self.index

    def __len__(self) -> int:
        return len(self.index)

    @property
    def top_cardinality(self) -> int:
        return len(self.masks_by_card) - 1

    def simplices(self) -> Iterable[int]:
        for level in self.masks_by_card:
            yield from level

    def faces(self, mask: int) -> list[int]:
        """Codimension-1 faces that belong to the system."""
        out = []
        m = mask
        while m:
            b = m & -m
            m ^= b
            f = mask ^ b
            if f in self.index:
                out.append(f)
        return out

    def cofaces(self, mask: int) -> list[int]:
        out = []
        for v in range(self.graph.rank):
            b = 1 << v
            if not mask & b:
                c = mask | b
                if c in self.index:
                    out.append(c)
        return out

    def covering_pairs(self) -> Iterable[tuple[int, int]]:
        """All (sigma, tau) with tau a face of sigma, both in the system."""
        for k in range(1, len(self.masks_by_card)):
            for sigma in self.masks_by_card[k]:
                for tau in self.faces(sigma):
                    yield sigma, tau

    # -- weights -------------------------------------------------------------

    def factorization(self, mask: int) -> CyclotomicVector:
        """Cyclotomic factorization of W_sigma(q)."""
        cached = self._factorizations.get(mask)
        if cached is not None:
            return cached
        vec = CyclotomicVector()
        for comp in self.graph.components(mask):
            label = self._component_labels.get(comp)
            if label is None:
                label = classify_component(self.graph, comp)
                self._component_labels[comp] = label
            if label is None:
                from .coxeter import NotFiniteTypeError

                raise NotFiniteTypeError(f"simplex {vertices_of(mask)} has an infinite parabolic")
            vec = vec * poincare_factorization(label)
        self._factorizations[mask] = vec
        return vec

    def weighted_level(self, d: int) -> WeightedLevel:
        if d < 2:
            raise ValueError("cyclotomic index must be >= 2")
        return WeightedLevel(d, {m: self.factorization(m).multiplicity(d) for m in self.simplices()})

    def relevant_degrees(self) -> list[int]:
        """All d with v_d(sigma) > 0 somewhere; every other phi_d is trivial."""
        seen: set[int] = set()
        for m in self.simplices():
            seen.update(d for d, _ in self.factorization(m).entries)
        return sorted(seen)

    # -- boundary matrices ----------------------------------------------------

    def boundary_c0(self, k: int) -> list[list[int]]:
        """Integer matrix of d0_k: rows are (k-1)-simplices, columns k-simplices."""
        if not 1 <= k <= self.top_cardinality:
            raise ValueError(f"no boundary at cardinality {k}")
        rows = self.masks_by_card[k - 1]
        cols = self.masks_by_card[k]
        mat = [[0] * len(cols) for _ in rows]
        for j, sigma in enumerate(cols):
            for tau in self.faces(sigma):
                mat[self.index[tau][1]][j] = incidence_sign(sigma, tau)
        return mat

    def boundary_c0_columns(self, k: int) -> list[dict[int, Fraction]]:
        """Sparse columns of d0_k, for rank computations."""
        cols = []
        for sigma in self.masks_by_card[k]:
            col = {}
            for tau in self.faces(sigma):
                col[self.index[tau][1]] = Fraction(incidence_sign(sigma, tau))
            cols.append(col)
        return cols

    def boundary_entry_poly(self, sigma: int, tau: int) -> Poly:
        """The C_* entry [sigma:tau] * W_sigma(q)/W_tau(q), expanded exactly."""
        num = self.factorization(sigma).as_dict()
        for d, kk in self.factorization(tau).entries:
            num[d] = num.get(d, 0) - kk
        poly = Poly.one()
        for d, kk in sorted(num.items()):
            if kk < 0:
                raise ValueError("W_tau does not divide W_sigma")
            if kk:
                poly = poly * cyclotomic(d) ** kk
        if incidence_sign(sigma, tau) < 0:
            poly = -poly
        return poly

    def boundary_c(self, k: int) -> list[list[Poly]]:
        """Polynomial matrix of d_k over Q[q]; same indexing as boundary_c0."""
        if not 1 <= k <= self.top_cardinality:
            raise ValueError(f"no boundary at cardinality {k}")
        rows = self.masks_by_card[k - 1]
        cols = self.masks_by_card[k]
        mat = [[Poly.zero() for _ in cols] for _ in rows]
        for j, sigma in enumerate(cols):
            for tau in self.faces(sigma):
                mat[self.index[tau][1]][j] = self.boundary_entry_poly(sigma, tau)
        return mat


def build_KW(graph: CoxeterGraph) -> ComplexK:
    return ComplexK.build(graph)
