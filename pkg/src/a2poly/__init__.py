"""Exact bracket-polynomial invariants of oriented marked graph diagrams."""

from a2poly.bracket import a2_bracket, reduce_web, resolve_crossing
from a2poly.conway import conway_in_quotient, conway_poly
from a2poly.diagram import (
    Diagram,
    ValidationError,
    VertexRecord,
    faces,
    mirror,
    parse_mgd,
    resolve_state,
    serialize,
    validate,
    writhe,
)
from a2poly.ring import (
    A6P1,
    A12P1,
    DELTA,
    PHI18,
    A_CIRCLE,
    B_BIGON,
    LaurentA,
    NotDivisible,
    QuotientElem,
    QuotientPoly,
    SurfacePoly,
    named_constant,
    quotient_reduce,
)
from a2poly.statesum import (
    double_bracket,
    p9_star,
    ribbon_analysis,
    specialize,
    surface_poly,
)
from a2poly.tangles import enumerate_fundamental, glue, reproduce_tables

__all__ = [
    "A6P1",
    "A12P1",
    "A_CIRCLE",
    "B_BIGON",
    "DELTA",
    "Diagram",
    "LaurentA",
    "NotDivisible",
    "PHI18",
    "QuotientElem",
    "QuotientPoly",
    "SurfacePoly",
    "ValidationError",
    "VertexRecord",
    "a2_bracket",
    "conway_in_quotient",
    "conway_poly",
    "double_bracket",
    "enumerate_fundamental",
    "faces",
    "glue",
    "mirror",
    "named_constant",
    "p9_star",
    "parse_mgd",
    "quotient_reduce",
    "reduce_web",
    "reproduce_tables",
    "resolve_crossing",
    "resolve_state",
    "ribbon_analysis",
    "serialize",
    "specialize",
    "surface_poly",
    "validate",
    "writhe",
]
