"""Exact-arithmetic Sullivan-model engine for sphere-brane operations."""

from ._core import (
    BraneEngine,
    InputError,
    Model,
    VerifyError,
    __version__,
    parse_model,
    verify,
)

__all__ = [
    "BraneEngine",
    "InputError",
    "Model",
    "VerifyError",
    "__version__",
    "parse_model",
    "verify",
]
