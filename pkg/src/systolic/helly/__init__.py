"""Constructive four-set Helly theorem: four subcomplexes with connected pairwise and
nonempty triple intersections meet a common simplex."""

from .ball import fill_ball, fill_sphere, verify_ball_filling
from .disc import fill_disc, verify_disc
from .hypotheses import (HypothesisReport, check_hypotheses, connect_path, pick_triple_points,
                         trivial_case)
from .model import (BallFilling, Budgets, DiscFilling, HellyCertificate, HellyInput,
                    SphereAssembly, Unknown)
from .pipeline import helly_point, sperner_color, verify_certificate, verify_witnesses
from .sphere import assemble_sphere, disc_boundary, dualize, pad_gamma

__all__ = [
    "BallFilling",
    "Budgets",
    "DiscFilling",
    "HellyCertificate",
    "HellyInput",
    "HypothesisReport",
    "SphereAssembly",
    "Unknown",
    "assemble_sphere",
    "check_hypotheses",
    "connect_path",
    "disc_boundary",
    "dualize",
    "fill_ball",
    "fill_disc",
    "fill_sphere",
    "helly_point",
    "pad_gamma",
    "pick_triple_points",
    "sperner_color",
    "trivial_case",
    "verify_ball_filling",
    "verify_certificate",
    "verify_disc",
    "verify_witnesses",
]
