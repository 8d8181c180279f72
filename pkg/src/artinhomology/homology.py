"""Assembling local homology from precise matchings.

For each relevant cyclotomic index d the torsion of H_m is (R/(phi_d))^r
with r the rational rank of the Morse boundary from critical (m+1)-simplices
to critical m-simplices; the free part is the homology of the constant-
coefficient complex C0.  Degrees run 0 .. |S|-1: in the finite case the top
cell injects, in the affine case the free rank 1 sits at |S|-1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .complexes import ComplexK
from .linalg import rank_of_columns
from .matching import Matching, MatchingError, is_precise


@dataclass(frozen=True)
class DegreeHomology:
    free_rank: int
    torsion: tuple[tuple[int, int], ...]  # (d, multiplicity), sorted by d

    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion


@dataclass(frozen=True)
class HomologyResult:
    """Per-degree free rank and cyclotomic torsion, degrees 0 .. |S|-1."""

    degrees: tuple[DegreeHomology, ...]

    @staticmethod
    def from_parts(n_degrees: int, free: dict[int, int], torsion: dict[int, dict[int, int]]) -> "HomologyResult":
        out = []
        for m in range(n_degrees):
            tors = tuple(sorted((d, k) for d, k in torsion.get(m, {}).items() if k))
            out.append(DegreeHomology(free.get(m, 0), tors))
        return HomologyResult(tuple(out))

    def degree(self, m: int) -> DegreeHomology:
        return self.degrees[m]

    def render_text(self) -> str:
        lines = []
        for m, h in enumerate(self.degrees):
            parts = [f"{{{d}}}" + (f"^{k}" if k > 1 else "") for d, k in h.torsion]
            if h.free_rank:
                parts.append("R" + (f"^{h.free_rank}" if h.free_rank > 1 else ""))
            lines.append(f"H_{m} = " + (" (+) ".join(parts) if parts else "0"))
        return "\n".join(lines)


def torsion_from_matching(M: Matching, K: ComplexK, level) -> dict[int, int]:
    """Degree -> multiplicity of {d} from a matching verified precise for d.

    The preciseness verification is run here; an unverified (non-precise)
    matching is rejected with the witness in the error message.
    """
    report = is_precise(M, K, level)
    if not report.precise:
        raise MatchingError(
            f"matching is not phi_{level.d}-precise; witness {report.witness}"
        )
    morse = report.morse
    out: dict[int, int] = {}
    for k in range(1, len(morse.delta)):
        r = morse.rank(k)
        if r:
            out[k - 1] = r
    return out


def free_part(K: ComplexK) -> dict[int, int]:
    """Rational ranks of H_*(C0) via exact column reduction of the boundaries."""
    if not K.full_kw:
        raise ValueError("free part is only defined for a full K_W")
    top = K.top_cardinality
    ranks = {k: rank_of_columns(K.boundary_c0_columns(k)) for k in range(1, top + 1)}
    out = {}
    for m in range(top + 1):
        dim = len(K.masks_by_card[m])
        r = dim - ranks.get(m, 0) - ranks.get(m + 1, 0)
        if r:
            out[m] = r
    return out


@dataclass(frozen=True)
class MatchingProvenance:
    d: int
    source: str  # "paper" | "search"
    seed: Optional[int]


@dataclass(frozen=True)
class HomologyComputation:
    type_name: str
    rank: int
    result: HomologyResult
    matchings: tuple[MatchingProvenance, ...] = ()

    def to_json_obj(self) -> dict:
        return {
            "type": self.type_name,
            "rank": self.rank,
            "homology": [
                {
                    "degree": m,
                    "free_rank": h.free_rank,
                    "torsion": [{"d": d, "mult": k} for d, k in h.torsion],
                }
                for m, h in enumerate(self.result.degrees)
            ],
            "matchings": [
                {"d": p.d, "source": p.source, "seed": p.seed} for p in self.matchings
            ],
        }

    @staticmethod
    def from_json_obj(obj: dict) -> "HomologyComputation":
        degs = sorted(obj["homology"], key=lambda h: h["degree"])
        result = HomologyResult(
            tuple(
                DegreeHomology(
                    h["free_rank"], tuple(sorted((t["d"], t["mult"]) for t in h["torsion"]))
                )
                for h in degs
            )
        )
        provs = tuple(
            MatchingProvenance(p["d"], p["source"], p.get("seed")) for p in obj["matchings"]
        )
        return HomologyComputation(obj["type"], obj["rank"], result, provs)


def assemble(K: ComplexK, matchings: dict[int, Matching]) -> HomologyResult:
    """Assemble the local homology: torsion per relevant d plus the free part.

    Every relevant d must come with a verified precise matching; a partial
    assembly is refused.
    """
    relevant = K.relevant_degrees()
    missing = [d for d in relevant if d not in matchings]
    if missing:
        raise ValueError(f"missing precise matchings for d = {missing}")
    n_deg = K.graph.rank if K.full_kw else K.top_cardinality + 1
    torsion: dict[int, dict[int, int]] = {}
    for d in relevant:
        level = K.weighted_level(d)
        for m, r in torsion_from_matching(matchings[d], K, level).items():
            torsion.setdefault(m, {})[d] = r
    return HomologyResult.from_parts(n_deg, free_part(K), torsion)
