"""Combinatorial toolkit for systolic and weakly systolic simplicial complexes."""

from .checkers import (classify, enumerate_full_cycles, enumerate_wheels_with_pendant,
                       has_sd2star_links, is_k_large, is_locally_k_large,
                       is_simply_connected_bounded, satisfies_sd2star)
from .complex import (Complex, FiniteMetric, Graph, complement, connected_components,
                      flag_complex, full_subcomplex, is_flag, link, make_complex, one_ball,
                      rips_complex)
from .corpus import generate
from .helly import HellyInput, helly_point, verify_certificate
from .tristate import TriState

__version__ = "0.1.0"

__all__ = [
    "Complex",
    "FiniteMetric",
    "Graph",
    "HellyInput",
    "TriState",
    "classify",
    "complement",
    "connected_components",
    "enumerate_full_cycles",
    "enumerate_wheels_with_pendant",
    "flag_complex",
    "full_subcomplex",
    "generate",
    "has_sd2star_links",
    "helly_point",
    "is_flag",
    "is_k_large",
    "is_locally_k_large",
    "is_simply_connected_bounded",
    "link",
    "make_complex",
    "one_ball",
    "rips_complex",
    "satisfies_sd2star",
    "verify_certificate",
]
