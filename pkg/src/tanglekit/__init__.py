"""Exact skein-theoretic invariants of rational two-string tangles and
their solid-torus closures.

The package computes, in exact Laurent-polynomial arithmetic, the
continued fraction of a rational tangle, its Kauffman bracket
coordinates, cabled colored invariants through Jones-Wenzl projectors,
and the induced elements of the annular skein module; every fast
algebraic path is checked against a brute-force smoothing enumerator.
"""

from .annulus import (
    AnnulusElement,
    CounterexampleReport,
    HomotopyType,
    SolidTorusRationalLink,
    chebyshev_convert,
    chebyshev_polynomial,
    closure_bracket,
    colored_closure,
    counterexample_check,
    element_closure,
    fraction_from_closure,
    gamma_ratio_invariants,
    homotopy_type,
    link_fraction,
    links_equivalent,
    solid_torus_closure,
)
from .bracket import (
    BracketVec2,
    bracket_vector,
    c_invariant,
    mirror_transport,
    ratio_invariant,
)
from .kernel import BACKEND as KERNEL_BACKEND
from .oracle import (
    MAX_ORACLE_CROSSINGS,
    annular_closure,
    bracket_of_diagram,
    closure_coefficients,
    matchings_of_diagram,
)
from .rationals import (
    ExtRational,
    TwistVector,
    canonical_form,
    continued_fraction,
    parity,
    schubert_equivalent,
)
from .ring import LaurentPoly, RatFunc
from .tangles import (
    PlanarTangleDiagram,
    RationalTangle,
    TwistWord,
    build_rational,
    cable_diagram,
    connectivity,
    left_linking_number,
    rational_to_diagram,
    tangle_add,
    tangle_invert,
    tangle_negate,
    to_twist_word,
)
from .tl import (
    MAX_PROJECTOR_STRANDS,
    JonesWenzl,
    QuantumCoeffs,
    TLElement,
    bni_basis,
    catalan,
    colored_element,
    colored_expand,
    colored_ratios,
    compose,
    e_generator,
    enumerate_matchings,
    identity_element,
    jones_wenzl,
    quantum_coeffs,
    rotate_ccw,
    rotate_cw,
    state_sum,
    tensor,
    tl_multiply,
    trace_close,
)

__version__ = "0.1.0"

__all__ = [
    "AnnulusElement",
    "BracketVec2",
    "CounterexampleReport",
    "ExtRational",
    "HomotopyType",
    "JonesWenzl",
    "KERNEL_BACKEND",
    "LaurentPoly",
    "MAX_ORACLE_CROSSINGS",
    "MAX_PROJECTOR_STRANDS",
    "PlanarTangleDiagram",
    "QuantumCoeffs",
    "RatFunc",
    "RationalTangle",
    "SolidTorusRationalLink",
    "TLElement",
    "TwistVector",
    "TwistWord",
    "annular_closure",
    "bni_basis",
    "bracket_of_diagram",
    "bracket_vector",
    "build_rational",
    "c_invariant",
    "cable_diagram",
    "canonical_form",
    "catalan",
    "chebyshev_convert",
    "chebyshev_polynomial",
    "closure_bracket",
    "closure_coefficients",
    "colored_closure",
    "colored_element",
    "colored_expand",
    "colored_ratios",
    "compose",
    "connectivity",
    "continued_fraction",
    "counterexample_check",
    "e_generator",
    "element_closure",
    "enumerate_matchings",
    "fraction_from_closure",
    "gamma_ratio_invariants",
    "homotopy_type",
    "identity_element",
    "jones_wenzl",
    "left_linking_number",
    "link_fraction",
    "links_equivalent",
    "matchings_of_diagram",
    "mirror_transport",
    "parity",
    "quantum_coeffs",
    "rational_to_diagram",
    "rotate_ccw",
    "rotate_cw",
    "schubert_equivalent",
    "solid_torus_closure",
    "state_sum",
    "tangle_add",
    "tangle_invert",
    "tangle_negate",
    "tensor",
    "tl_multiply",
    "to_twist_word",
    "trace_close",
    "__version__",
]
