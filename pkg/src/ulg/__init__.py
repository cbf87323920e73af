"""Uniquely labelled geodesics of Coxeter groups.

Modules:
    diagram    Coxeter diagrams, the builtin ones and a small text format
    engine     exact group arithmetic via integer matrices
    geodesics  ball censuses, geodesic counts, generating series
    typea      closed-form counts for type A
    treepath   path and turning-vertex conditions on tree diagrams
    dtilde6    the periodic u.l.g. of the affine group D~6
    cli        the `ulg` command
"""

from ulg.diagram import CoxeterDiagram, build_chain, builtin, load_diagram, parse_diagram
from ulg.engine import Element, evaluate, identity, inverse, is_reduced, length, multiply, reduced_word
from ulg.geodesics import (
    GeodesicCensus, LabelPolynomial, ResourceLimitError, ball_census, format_polynomial,
    generating_series, geodesic_count, is_ulg, parse_polynomial, reduced_words,
)

__version__ = "0.1.0"

__all__ = [
    "CoxeterDiagram", "build_chain", "builtin", "load_diagram", "parse_diagram",
    "Element", "evaluate", "identity", "inverse", "is_reduced", "length", "multiply", "reduced_word",
    "GeodesicCensus", "LabelPolynomial", "ResourceLimitError", "ball_census", "format_polynomial",
    "generating_series", "geodesic_count", "is_ulg", "parse_polynomial", "reduced_words",
]
