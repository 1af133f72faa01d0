"""Finite-dimensional linear relations: classification, Krein transform,
semi-bounded and positive extensions, and the star-graph examples."""

from ._linrel import *  # noqa: F401,F403
from ._linrel import (  # noqa: F401
    ConsistencyError,
    DimensionError,
    Error,
    InputError,
    PreconditionError,
)
