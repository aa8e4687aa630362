"""Rule-based detection of the five supported refactoring types.

Each rule inspects the declaration mapping of one file pair; moved
classes additionally get a commit-level pass that pairs types across
deleted and added files. The registry is open: new rules only need a
name, a level and a detect callable.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Protocol

from .javamodel import (
    DICE_THRESHOLD,
    DeclarationMapping,
    SyntaxTree,
    TypeDecl,
    dice_similarity,
)

LineRange = tuple[int, int]

# Fixed granularity per refactoring name; the spectrum color band follows it.
LEVEL_BY_NAME: dict[str, str] = {
    "Move Class": "class",
    "Extract Superclass": "class",
    "Add Method Modifier": "method",
    "Add Attribute Modifier": "statement",
    "Rename Attribute": "statement",
}


@dataclass(frozen=True)
class Refactoring:
    name: str
    level: str  # class | method | statement
    pre_regions: tuple[LineRange, ...] = ()
    post_regions: tuple[LineRange, ...] = ()
    description: str = ""

    def __post_init__(self) -> None:
        if not self.pre_regions and not self.post_regions:
            raise ValueError("refactoring needs at least one region")


class _FileLike(Protocol):
    status: str


def _added_modifiers(pre_mods: frozenset[str], post_mods: frozenset[str]) -> list[str]:
    if post_mods > pre_mods:
        return sorted(post_mods - pre_mods)
    return []


def _detect_add_method_modifier(
    mapping: DeclarationMapping, pre: SyntaxTree, post: SyntaxTree, fc: _FileLike
) -> list[Refactoring]:
    found = []
    for pair in mapping.method_pairs:
        added = _added_modifiers(pair.pre.modifiers, pair.post.modifiers)
        if added:
            found.append(
                Refactoring(
                    name="Add Method Modifier",
                    level="method",
                    pre_regions=(pair.pre.range,),
                    post_regions=(pair.post.range,),
                    description=f"{pair.post.name} gains {', '.join(added)}",
                )
            )
    return found


def _detect_add_attribute_modifier(
    mapping: DeclarationMapping, pre: SyntaxTree, post: SyntaxTree, fc: _FileLike
) -> list[Refactoring]:
    found = []
    for pair in mapping.field_pairs:
        added = _added_modifiers(pair.pre.modifiers, pair.post.modifiers)
        if added:
            found.append(
                Refactoring(
                    name="Add Attribute Modifier",
                    level="statement",
                    pre_regions=(pair.pre.range,),
                    post_regions=(pair.post.range,),
                    description=f"{pair.post.name} gains {', '.join(added)}",
                )
            )
    return found


def _detect_rename_attribute(
    mapping: DeclarationMapping, pre: SyntaxTree, post: SyntaxTree, fc: _FileLike
) -> list[Refactoring]:
    found = []
    for pair in mapping.field_pairs:
        if pair.matched_by == "type_init" and pair.pre.name != pair.post.name:
            found.append(
                Refactoring(
                    name="Rename Attribute",
                    level="statement",
                    pre_regions=(pair.pre.range,),
                    post_regions=(pair.post.range,),
                    description=f"{pair.pre.name} renamed to {pair.post.name}",
                )
            )
    return found


def _detect_move_class(
    mapping: DeclarationMapping, pre: SyntaxTree, post: SyntaxTree, fc: _FileLike
) -> list[Refactoring]:
    moved_file = getattr(fc, "status", "") == "renamed"
    moved_package = pre.package_name != post.package_name
    if not (moved_file or moved_package):
        return []
    found = []
    for pair in mapping.type_pairs:
        origin = pre.package_name or "default package"
        target = post.package_name or "default package"
        where = f"{origin} -> {target}" if moved_package else "moved file"
        found.append(
            Refactoring(
                name="Move Class",
                level="class",
                pre_regions=(pair.pre.range,),
                post_regions=(pair.post.range,),
                description=f"{pair.pre.name}: {where}",
            )
        )
    return found


def _member_moved_to(pre_type: TypeDecl, new_type: TypeDecl) -> bool:
    """True when at least one member of pre_type reappears in new_type."""
    new_method_names = {m.name for m in new_type.methods}
    new_field_names = {f.name for f in new_type.fields}
    for m in pre_type.methods:
        if m.name in new_method_names:
            return True
        for q in new_type.methods:
            if dice_similarity(m.body_tokens, q.body_tokens) >= DICE_THRESHOLD:
                return True
    for f in pre_type.fields:
        if f.name in new_field_names:
            return True
    return False


def _detect_extract_superclass(
    mapping: DeclarationMapping, pre: SyntaxTree, post: SyntaxTree, fc: _FileLike
) -> list[Refactoring]:
    new_types = [d for d in mapping.unmatched_post if isinstance(d, TypeDecl)]
    if not new_types:
        return []
    found = []
    for new_type in new_types:
        for pair in mapping.type_pairs:
            if pair.post.extends_name != new_type.name:
                continue
            if pair.pre.extends_name == new_type.name:
                continue
            if _member_moved_to(pair.pre, new_type):
                found.append(
                    Refactoring(
                        name="Extract Superclass",
                        level="class",
                        pre_regions=(pair.pre.range,),
                        post_regions=(new_type.range,),
                        description=f"{new_type.name} extracted from {pair.pre.name}",
                    )
                )
    return found


DetectFn = Callable[[DeclarationMapping, SyntaxTree, SyntaxTree, object], list[Refactoring]]


@dataclass(frozen=True)
class RefactoringRule:
    name: str
    level: str
    detect: DetectFn


REFACTORING_RULES: list[RefactoringRule] = [
    RefactoringRule("Add Method Modifier", "method", _detect_add_method_modifier),
    RefactoringRule("Add Attribute Modifier", "statement", _detect_add_attribute_modifier),
    RefactoringRule("Rename Attribute", "statement", _detect_rename_attribute),
    RefactoringRule("Move Class", "class", _detect_move_class),
    RefactoringRule("Extract Superclass", "class", _detect_extract_superclass),
]


def detect_refactorings(
    mapping: DeclarationMapping,
    pre: SyntaxTree,
    post: SyntaxTree,
    file_change: object,
) -> list[Refactoring]:
    """Run every registered rule over one file pair, in registry order."""
    found: list[Refactoring] = []
    for rule in REFACTORING_RULES:
        for hit in rule.detect(mapping, pre, post, file_change):
            assert hit.level == LEVEL_BY_NAME.get(hit.name, hit.level)
            found.append(hit)
    return found


def detect_moved_classes_across_files(
    deleted: list[tuple[int, SyntaxTree]],
    added: list[tuple[int, SyntaxTree]],
) -> list[tuple[int, int, Refactoring]]:
    """Commit-level Move Class pass over deleted+added file pairs.

    Types pair greedily by body Dice >= 0.5, best score first. Returns
    (pre file index, post file index, finding) triples so the caller can
    attach each region to the right file.
    """
    candidates = []
    for pre_idx, pre_tree in deleted:
        for post_idx, post_tree in added:
            for pre_type in pre_tree.types:
                for post_type in post_tree.types:
                    score = dice_similarity(pre_type.body_tokens, post_type.body_tokens)
                    if score >= DICE_THRESHOLD:
                        candidates.append(
                            (-score, pre_type.name, post_type.name,
                             pre_idx, post_idx, pre_type, post_type)
                        )
    candidates.sort(key=lambda c: c[:3])
    used_pre: set[int] = set()
    used_post: set[int] = set()
    found = []
    for _, _, _, pre_idx, post_idx, pre_type, post_type in candidates:
        if id(pre_type) in used_pre or id(post_type) in used_post:
            continue
        used_pre.add(id(pre_type))
        used_post.add(id(post_type))
        found.append(
            (
                pre_idx,
                post_idx,
                Refactoring(
                    name="Move Class",
                    level="class",
                    pre_regions=(pre_type.range,),
                    post_regions=(post_type.range,),
                    description=f"{pre_type.name} moved to another file",
                ),
            )
        )
    return found
