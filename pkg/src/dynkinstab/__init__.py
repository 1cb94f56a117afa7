"""Exact chamber geometry for stability spaces of ADE and affine ADE diagrams."""
from .charges import GQ, I, act_weyl, charge, evaluate, in_fundamental, scale
from .diagrams import Diagram, automorphisms, build_diagram, catalog, delta, parse_diagram
from .errors import (
    DynkinStabError,
    InvalidInputError,
    InvariantViolation,
    NonGenericEndpointError,
    NonGenericPathError,
    OutOfModelError,
)
from .rootsys import enumerate_roots, euler_form, is_regular, positive_roots, reflect
from .weylbraid import make_word, parse_word, shift_matrix, verify_relations, word_to_matrix

__version__ = "0.1.0"
