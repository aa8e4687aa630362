"""The seven change-type categories, their stacking order and palette.

Layer order doubles as paint priority: a higher layer_order is drawn on
top of a lower one wherever regions overlap.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True, slots=True)
class ChangeType:
    key: str
    layer_order: int
    color: str


CHANGE_TYPES: tuple[ChangeType, ...] = (
    ChangeType("class_refactoring", 1, "#A5D8FF"),
    ChangeType("method_refactoring", 2, "#4DABF7"),
    ChangeType("modification", 3, "#E3B341"),
    ChangeType("addition", 4, "#2EA043"),
    ChangeType("removal", 5, "#CF222E"),
    ChangeType("statement_refactoring", 6, "#1864AB"),
    ChangeType("micro_change", 7, "#9775FA"),
)

TYPE_BY_KEY: dict[str, ChangeType] = {t.key: t for t in CHANGE_TYPES}

CLASS_REFACTORING = TYPE_BY_KEY["class_refactoring"]
METHOD_REFACTORING = TYPE_BY_KEY["method_refactoring"]
MODIFICATION = TYPE_BY_KEY["modification"]
ADDITION = TYPE_BY_KEY["addition"]
REMOVAL = TYPE_BY_KEY["removal"]
STATEMENT_REFACTORING = TYPE_BY_KEY["statement_refactoring"]
MICRO_CHANGE = TYPE_BY_KEY["micro_change"]

# Refactorings are reported at one of three granularities; each maps to
# its own spectrum color band.
LEVEL_TO_TYPE: dict[str, ChangeType] = {
    "class": CLASS_REFACTORING,
    "method": METHOD_REFACTORING,
    "statement": STATEMENT_REFACTORING,
}

SIDES = ("pre", "post")
SIDE_ORDER: dict[str, int] = {"pre": 0, "post": 1}
