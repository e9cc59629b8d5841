"""lorentz-verifier - exact checks for Lorentzian polynomials and mixed volumes.

Membership in the Lorentzian class, the rKT and Pluennecke-Ruzsa type
inequalities, exact mixed volumes of rational polytopes, Schur polynomials,
mixed discriminants and the numerical-dimension polymatroid, all in exact
rational arithmetic.
"""

__version__ = "0.1.0"
__description__ = "Exact verifier for Lorentzian polynomials and mixed-volume inequalities"

from .config import VerifierConfig, load_config
from .lorentz.verdict import Verdict
from .polycore.polynomial import HomPoly

__all__ = [
    "HomPoly",
    "Verdict",
    "VerifierConfig",
    "load_config",
]
