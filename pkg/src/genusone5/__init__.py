"""genusone5: exact invariant/covariant calculus for genus one models of
degree 5 (5x5 alternating matrices of linear forms over Q)."""

__version__ = "0.1.0"

from .models import GenusOneModel, SingularModelError, hesse_model, random_model, secant_quintic

__all__ = [
    "GenusOneModel",
    "SingularModelError",
    "hesse_model",
    "random_model",
    "secant_quintic",
    "__version__",
]
