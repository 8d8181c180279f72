"""Smith normal form over Q[q] and the direct homology oracle.

Q[q] is a Euclidean domain, so the classical algorithm works: bring the
minimal-degree entry to the pivot, kill its row and column by polynomial
division (restarting whenever a remainder drops the degree), and fold in any
entry the pivot fails to divide.  Instances are tiny (the guard refuses more
than five vertices), so clarity wins over speed throughout.

The oracle recomputes the local homology directly from the boundary matrices
of C_*, factors every invariant factor into cyclotomics, and reports the
result in the same shape as the matching pipeline, so the comparison is a
strict equality.
"""

from __future__ import annotations

from dataclasses import dataclass

from .complexes import build_KW
from .coxeter import CoxeterGraph
from .homology import HomologyResult
from .polynomial import Poly, cyclotomic


class GuardRefused(RuntimeError):
    """An input exceeds the size guard of an exact-arithmetic routine."""


class PipelineFalsified(RuntimeError):
    """An invariant factor was non-cyclotomic or non-squarefree."""


def smith_normal_form(matrix: list[list[Poly]]) -> list[Poly]:
    """Invariant factors d1 | d2 | ..., monic, units dropped lazily (kept as 1)."""
    A = [row[:] for row in matrix]
    nrows = len(A)
    ncols = len(A[0]) if nrows else 0
    factors: list[Poly] = []
    t = 0
    while True:
        pivot = None
        best = None
        for i in range(t, nrows):
            for j in range(t, ncols):
                if not A[i][j].is_zero():
                    dg = A[i][j].degree
                    if best is None or dg < best:
                        best, pivot = dg, (i, j)
        if pivot is None:
            break
        pi, pj = pivot
        A[t], A[pi] = A[pi], A[t]
        for row in A:
            row[t], row[pj] = row[pj], row[t]

        while True:
            # clear column t by division; a nonzero remainder becomes the new pivot
            restart = False
            for i in range(t + 1, nrows):
                if A[i][t].is_zero():
                    continue
                quot, rem = divmod(A[i][t], A[t][t])
                for j in range(t, ncols):
                    A[i][j] = A[i][j] - quot * A[t][j]
                if not rem.is_zero():
                    A[t], A[i] = A[i], A[t]
                    restart = True
                    break
            if restart:
                continue
            for j in range(t + 1, ncols):
                if A[t][j].is_zero():
                    continue
                quot, rem = divmod(A[t][j], A[t][t])
                for i in range(t, nrows):
                    A[i][j] = A[i][j] - A[i][t] * quot
                if not rem.is_zero():
                    for i in range(t, nrows):
                        A[i][t], A[i][j] = A[i][j], A[i][t]
                    restart = True
                    break
            if restart:
                continue
            # pivot must divide the rest of the submatrix
            offender = None
            for i in range(t + 1, nrows):
                for j in range(t + 1, ncols):
                    if not (A[i][j] % A[t][t]).is_zero():
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            for j in range(t, ncols):
                A[t][j] = A[t][j] + A[offender][j]
        factors.append(A[t][t].monic())
        t += 1
        if t >= min(nrows, ncols):
            break
    for a, b in zip(factors, factors[1:]):
        if not (b % a).is_zero():
            raise AssertionError("invariant factors do not form a divisibility chain")
    return factors


def factor_into_cyclotomics(poly: Poly, candidates: list[int]) -> dict[int, int]:
    """Write a monic polynomial as prod phi_d^k; raise if anything is left over."""
    rem = poly.monic()
    out: dict[int, int] = {}
    for d in candidates:
        phi = cyclotomic(d)
        while (rem % phi).is_zero():
            rem = rem.exact_div(phi)
            out[d] = out.get(d, 0) + 1
    if rem.degree > 0:
        raise PipelineFalsified(f"non-cyclotomic factor {rem} in invariant factor {poly}")
    return out


@dataclass(frozen=True)
class DirectHomology:
    result: HomologyResult
    invariant_factors: dict[int, list[Poly]]  # cardinality k -> factors of d_k


def homology_direct(graph: CoxeterGraph, max_vertices: int = 5) -> DirectHomology:
    """Ground-truth H_*(C_*) by SNF over Q[q], cyclotomically factored.

    Guarded: exact SNF on more than ``max_vertices`` vertices is refused.
    Raises PipelineFalsified on a non-cyclotomic or non-squarefree invariant
    factor (either would contradict the precise-matching theory).
    """
    if graph.rank > max_vertices:
        raise GuardRefused(
            f"homology_direct is guarded to {max_vertices} vertices (got {graph.rank})"
        )
    K = build_KW(graph)
    top = K.top_cardinality
    relevant = K.relevant_degrees()
    snf: dict[int, list[Poly]] = {}
    for k in range(1, top + 1):
        snf[k] = smith_normal_form(K.boundary_c(k))
    free: dict[int, int] = {}
    torsion: dict[int, dict[int, int]] = {}
    for m in range(graph.rank):
        dim = len(K.masks_by_card[m]) if m <= top else 0
        r_m = len(snf.get(m, []))
        r_up = len(snf.get(m + 1, []))
        fr = dim - r_m - r_up
        if fr:
            free[m] = fr
        for f in snf.get(m + 1, []):
            if f.degree <= 0:
                continue
            parts = factor_into_cyclotomics(f, relevant)
            if any(k >= 2 for k in parts.values()):
                raise PipelineFalsified(f"non-squarefree invariant factor {f}")
            for d in parts:
                torsion.setdefault(m, {})[d] = torsion.get(m, {}).get(d, 0) + 1
    return DirectHomology(HomologyResult.from_parts(graph.rank, free, torsion), snf)
