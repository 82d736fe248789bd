"""Surface and bundle encoding of molecules and chemical reactions."""

from ._core import (
    ChemgenusError,
    Document,
    atomic_number,
    meets_threshold,
    tail_ratio,
)

__all__ = [
    "ChemgenusError",
    "Document",
    "atomic_number",
    "meets_threshold",
    "tail_ratio",
]
