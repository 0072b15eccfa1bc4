"""Exact computations with the W(2,2) Lie algebra and its non-weight modules."""

from .algebra import C, Generator, L, LieElement, W, bracket
from .exact import GaussianRational, MultiPoly, UniPoly, as_scalar
from .omega import Omega2, Omega3, OmegaParams
from .restricted import HighestWeightData, TrivialModule, VermaModule
from .tensor import TensorModule, TensorParams
from .uea import UeaElement, apply, q_element, straighten

__version__ = "0.1.0"

__all__ = ["C", "Generator", "L", "LieElement", "W", "bracket", "GaussianRational",
           "MultiPoly", "UniPoly", "as_scalar", "Omega2", "Omega3", "OmegaParams",
           "HighestWeightData", "TrivialModule", "VermaModule", "TensorModule",
           "TensorParams", "UeaElement", "apply", "q_element", "straighten"]
