"""Galois covers of the projective line and class groups of the fields they produce."""

from .catalog import CASE_IDS, CATALOG, get_case
from .cover import build_curve, build_h, build_rt, compute_lambda
from .fieldlab import FieldCandidate, irreducible, specialize
from .moebius import Homography, ProjPoint, generate_group, normalize, orbit
from .poly import AffinePoly, Polynomial, RatFunction
from .realroots import Signature, discriminant, rank_bound, signature_of, sturm_count

__version__ = "0.1.0"

__all__ = [
    "CASE_IDS", "CATALOG", "get_case", "build_curve", "build_h", "build_rt", "compute_lambda",
    "FieldCandidate", "irreducible", "specialize", "Homography", "ProjPoint", "generate_group",
    "normalize", "orbit", "AffinePoly", "Polynomial", "RatFunction", "Signature", "discriminant",
    "rank_bound", "signature_of", "sturm_count",
]
