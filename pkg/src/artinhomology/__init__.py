"""Local homology of finite- and affine-type Artin groups.

Exact arithmetic throughout: weighted discrete Morse matchings give the
cyclotomic torsion, constant-coefficient homology the free part, and an
independent Smith-normal-form oracle cross-checks both on small inputs.
"""

from .complexes import ComplexK, WeightedLevel, build_KW, incidence_sign, mask_of, vertices_of
from .coxeter import (
    INF,
    CoxeterGraph,
    CyclotomicVector,
    FiniteTypeLabel,
    NotFiniteTypeError,
    classify_component,
    coxeter_graph,
    degrees,
    parse_coxeter_matrix,
    poincare_factorization,
    weight,
)
from .families import (
    matching_A,
    matching_D,
    matching_I2,
    matching_tB,
    matching_tD,
    product_matching,
)
from .homology import HomologyComputation, HomologyResult, assemble, free_part, torsion_from_matching
from .matching import (
    Matching,
    MorseData,
    NotAcyclicError,
    NotWeightedError,
    is_acyclic,
    is_precise,
    is_weighted,
    morse_incidence,
    validate,
)
from .polynomial import Poly, cyclotomic, q_bracket
from .search import AbsenceOutcome, SearchResult, prove_no_precise, search_precise
from .snf import GuardRefused, PipelineFalsified, homology_direct, smith_normal_form

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
