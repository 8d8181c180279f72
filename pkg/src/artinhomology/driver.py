"""Type resolution and the per-type matching pipeline used by the CLI."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .complexes import ComplexK, build_KW
from .coxeter import CoxeterGraph, coxeter_graph, parse_coxeter_matrix
from .families import matching_A, matching_D, matching_I2, matching_tB, matching_tD
from .homology import HomologyComputation, MatchingProvenance, assemble
from .matching import Matching
from .search import DEFAULT_BUDGET, search_precise
from .snf import homology_direct

# families with explicit constructions; everything else goes through search
PAPER_SOURCED = {"A", "D", "I2", "tB", "tD"}


class SearchFailed(RuntimeError):
    def __init__(self, type_name: str, d: int, stats):
        super().__init__(
            f"no precise matching found for {type_name} at d={d} "
            f"(attempts={stats.attempts}, nodes={stats.nodes}, seed={stats.seed})"
        )
        self.d = d
        self.stats = stats


@dataclass(frozen=True)
class ResolvedType:
    name: str
    graph: CoxeterGraph
    family: Optional[str]  # None for custom matrices
    param: int  # the n of the family name (the bond m for I2)

    @property
    def rank(self) -> int:
        return self.graph.rank


def resolve_builtin(family: str, param: int) -> ResolvedType:
    graph = coxeter_graph(family, param)
    name = f"I2({param})" if family == "I2" else f"{family}{param}"
    return ResolvedType(name, graph, family, param)


def resolve_matrix(text: str, name: str = "custom") -> ResolvedType:
    graph = parse_coxeter_matrix(text)
    return ResolvedType(name, graph, None, graph.rank)


def paper_matching(family: str, rank: int, d: int, K: ComplexK) -> Matching:
    if family == "A":
        return matching_A(rank, 0, 0, d, K)[1]
    if family == "D":
        return matching_D(rank, 0, d, K)[1]
    if family == "I2":
        return matching_I2(rank, d, K)[1]
    if family == "tB":
        return matching_tB(rank, d, K)[1]
    if family == "tD":
        return matching_tD(rank, d, K)[1]
    raise ValueError(f"{family} has no explicit construction")


def matchings_for(
    rt: ResolvedType, K: ComplexK, *, seed: int = 0, budget: int = DEFAULT_BUDGET
) -> tuple[dict[int, Matching], tuple[MatchingProvenance, ...]]:
    """One verified precise matching per relevant d, with provenance."""
    out: dict[int, Matching] = {}
    provs = []
    use_paper = rt.family in PAPER_SOURCED
    for d in K.relevant_degrees():
        if use_paper:
            out[d] = paper_matching(rt.family, rt.param, d, K)
            provs.append(MatchingProvenance(d, "paper", None))
        else:
            res = search_precise(K, d, budget=budget, order_seed=seed)
            if not res.found:
                raise SearchFailed(rt.name, d, res.stats)
            out[d] = res.matching
            provs.append(MatchingProvenance(d, "search", seed))
    return out, tuple(provs)


def homology_by_matchings(
    rt: ResolvedType, *, seed: int = 0, budget: int = DEFAULT_BUDGET
) -> HomologyComputation:
    K = build_KW(rt.graph)
    ms, provs = matchings_for(rt, K, seed=seed, budget=budget)
    return HomologyComputation(rt.name, rt.rank, assemble(K, ms), provs)


def homology_by_snf(rt: ResolvedType) -> HomologyComputation:
    direct = homology_direct(rt.graph)
    return HomologyComputation(rt.name, rt.rank, direct.result, ())
