"""Exact quantum invariants of 3-manifolds from surgery diagrams, with
congruence checks relating periodic manifolds to their orbit spaces."""

from .ring import (
    CyclotomicField,
    FieldElement,
    IdealJp,
    LaurentPolynomial,
    cyclotomic_field,
    cyclotomic_polynomial,
    extend_field,
    in_ideal,
    is_integral,
    jp_generator,
)
from .category import ModularDatum, make_tl_datum, validate_datum
from .tangle import Slice, SlicedTangle, braid_tangle, closure, parse_tangle, tangle_power, unknot
from .skein import evaluate, jones_wenzl, quantum_trace
from .topology import (
    LinkDiagram,
    freeness_check,
    linking_matrix,
    signature,
    total_signature,
    trace_components,
    tristram_levine,
)
from .invariants import (
    Certificate,
    check_branched_cover_exponent,
    i_invariant,
    multi_bracket,
    tau,
    verify_main_theorem,
    verify_periodic_bracket,
    verify_tau_corollary,
    verify_trace_congruence,
)

__version__ = "0.1.0"
