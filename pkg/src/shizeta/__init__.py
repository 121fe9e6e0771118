"""Type C parking functions, zeta maps and the Shi arrangement."""

from .labelled import DiagonalPath, VerticalPath
from .paths import ballot_area, enumerate_B, enumerate_D, enumerate_L
from .roots import Root, RootSystem
from .statistics import area_prime_C, dinv_C, dinv_prime_C
from .zeta import sweep, zeta_A, zeta_C, zeta_labelled_A, zeta_labelled_C

__version__ = "0.1.0"

__all__ = [
    "DiagonalPath",
    "Root",
    "RootSystem",
    "VerticalPath",
    "area_prime_C",
    "ballot_area",
    "dinv_C",
    "dinv_prime_C",
    "enumerate_B",
    "enumerate_D",
    "enumerate_L",
    "sweep",
    "zeta_A",
    "zeta_C",
    "zeta_labelled_A",
    "zeta_labelled_C",
]
