"""Detection of fine-grained condition-related change operations.

Three rules ship: Insert Condition Block, Encapsulate In Condition and
Extract From Condition. Matching is whitespace- and comment-insensitive
(it runs over token streams) but case-sensitive. The registry is open
for further rules.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Callable

from .javamodel import (
    DeclarationMapping,
    MethodDecl,
    Statement,
    SyntaxTree,
    walk_ifs,
)
from .linediff import Hunk

LineRange = tuple[int, int]


@dataclass(frozen=True)
class MicroChange:
    name: str
    side: str  # pre | post
    region: LineRange
    description: str = ""


@dataclass
class MethodPairContext:
    """One matched method pair plus the diff facts the rules consume."""

    pre_method: MethodDecl
    post_method: MethodDecl
    changed_post_lines: set[int]

    @cached_property
    def inserted_ifs(self) -> list[Statement]:
        """Post ifs fully inside changed lines with no same-condition pre if."""
        pre_conditions = {
            tuple(t.text for t in stmt.condition_tokens)
            for stmt in walk_ifs(self.pre_method.body_statements)
        }
        hits = []
        for stmt in walk_ifs(self.post_method.body_statements):
            span = set(range(stmt.range[0], stmt.range[1] + 1))
            if not span <= self.changed_post_lines:
                continue
            if tuple(t.text for t in stmt.condition_tokens) in pre_conditions:
                continue
            hits.append(stmt)
        return hits

    @cached_property
    def pre_tokens_outside_conditions(self) -> set[str]:
        """Texts of pre-method tokens that sit outside every if condition."""
        condition_ids = {
            id(t)
            for stmt in walk_ifs(self.pre_method.body_statements)
            for t in stmt.condition_tokens
        }
        return {t.text for t in self.pre_method.tokens if id(t) not in condition_ids}


def _statements_under_ifs(method: MethodDecl) -> list[Statement]:
    found: list[Statement] = []

    def visit(stmt: Statement, under_if: bool) -> None:
        for child in stmt.children:
            if under_if:
                found.append(child)
            visit(child, under_if or stmt.kind == "if")

    for stmt in method.body_statements:
        visit(stmt, stmt.kind == "if")
    return found


def _statements_outside_ifs(method: MethodDecl) -> list[Statement]:
    found: list[Statement] = []

    def visit(statements: list[Statement]) -> None:
        for stmt in statements:
            found.append(stmt)
            if stmt.kind != "if":
                visit(stmt.children)

    visit(method.body_statements)
    return found


def _rule_insert_condition_block(ctx: MethodPairContext) -> list[MicroChange]:
    return [
        MicroChange(
            name="Insert Condition Block",
            side="post",
            region=stmt.range,
            description=f"new condition block in {ctx.post_method.name}",
        )
        for stmt in ctx.inserted_ifs
    ]


def _rule_encapsulate_in_condition(ctx: MethodPairContext) -> list[MicroChange]:
    # Only ifs that fired Insert Condition Block qualify, so this rule's
    # findings are always a subset of that rule's anchors.
    found = []
    for stmt in ctx.inserted_ifs:
        idents = [t.text for t in stmt.condition_tokens if t.is_identifier]
        if any(ident in ctx.pre_tokens_outside_conditions for ident in idents):
            line = stmt.condition_tokens[0].line if stmt.condition_tokens else stmt.range[0]
            found.append(
                MicroChange(
                    name="Encapsulate In Condition",
                    side="post",
                    region=(line, line),
                    description=f"existing code guarded in {ctx.post_method.name}",
                )
            )
    return found


def _rule_extract_from_condition(ctx: MethodPairContext) -> list[MicroChange]:
    post_outside = {
        s.token_texts() for s in _statements_outside_ifs(ctx.post_method) if s.tokens
    }
    # A statement that already ran unconditionally somewhere in pre was
    # not extracted, it merely co-exists; without this guard the rule
    # would fire on unchanged methods.
    pre_outside = {
        s.token_texts() for s in _statements_outside_ifs(ctx.pre_method) if s.tokens
    }
    found = []
    for stmt in _statements_under_ifs(ctx.pre_method):
        if (
            stmt.tokens
            and stmt.token_texts() in post_outside
            and stmt.token_texts() not in pre_outside
        ):
            found.append(
                MicroChange(
                    name="Extract From Condition",
                    side="pre",
                    region=stmt.range,
                    description=f"statement unconditioned in {ctx.post_method.name}",
                )
            )
    return found


RuleFn = Callable[[MethodPairContext], list[MicroChange]]


@dataclass(frozen=True)
class MicroChangeRule:
    name: str
    side: str  # side findings anchor on
    detect: RuleFn


MICROCHANGE_RULES: list[MicroChangeRule] = [
    MicroChangeRule("Insert Condition Block", "post", _rule_insert_condition_block),
    MicroChangeRule("Encapsulate In Condition", "post", _rule_encapsulate_in_condition),
    MicroChangeRule("Extract From Condition", "pre", _rule_extract_from_condition),
]


def detect_microchanges(
    mapping: DeclarationMapping,
    pre: SyntaxTree,
    post: SyntaxTree,
    hunks: list[Hunk],
) -> list[MicroChange]:
    """Run every registered rule over every matched method pair."""
    changed_post: set[int] = set()
    for h in hunks:
        if h.kind in ("insert", "change"):
            changed_post.update(range(h.post_start, h.post_end + 1))

    found: list[MicroChange] = []
    for pair in mapping.method_pairs:
        ctx = MethodPairContext(pair.pre, pair.post, changed_post)
        for rule in MICROCHANGE_RULES:
            for hit in rule.detect(ctx):
                assert hit.side == rule.side
                found.append(hit)
    return found
