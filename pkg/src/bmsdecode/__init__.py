"""Locator decoding of bivariate abelian codes with the Berlekamp-Massey-Sakata
algorithm, restricted to the index set B_(2t+1)."""

from .bms import run_full, run_restricted
from .code import AbelianCode, build_code, hyperbolic_like_code
from .decode import DecodeResult, decode
from .gf import FieldSpec, GaloisField
from .lattice import DeltaSet, MonomialOrder, b_delta

__version__ = "0.1.0"

__all__ = [
    "AbelianCode", "DecodeResult", "DeltaSet", "FieldSpec", "GaloisField", "MonomialOrder",
    "b_delta", "build_code", "decode", "hyperbolic_like_code", "run_full", "run_restricted",
]
