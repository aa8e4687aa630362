"""changeprism: semantic code-change extraction and spectrum models."""

__version__ = "0.1.0"

from .changetypes import CHANGE_TYPES, TYPE_BY_KEY, ChangeType
from .linediff import ChangeRegion, Hunk, classify, line_diff
from .spectrum import Spectrum, SpectrumLayer, build_spectrum, resolve_visible

__all__ = [
    "CHANGE_TYPES",
    "TYPE_BY_KEY",
    "ChangeType",
    "ChangeRegion",
    "Hunk",
    "classify",
    "line_diff",
    "Spectrum",
    "SpectrumLayer",
    "build_spectrum",
    "resolve_visible",
]
