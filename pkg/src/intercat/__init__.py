"""Finite intercategories: instances, coherence-law checking, morphisms and dualities."""

from .model import (
    BasicCell,
    BoundaryError,
    Chirality,
    CompositionError,
    ConfigurationError,
    Cube,
    HorArrow,
    HorCell,
    Intercategory,
    Obj,
    Sort,
    TransArrow,
    UndefinedOperation,
    VertArrow,
    VertCell,
)
from .laws import LawId, check_all

__version__ = "0.1.0"
