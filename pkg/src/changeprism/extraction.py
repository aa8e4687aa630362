"""Per-commit analysis: diff, detect, classify, and assemble records.

extract_commit is deterministic: the same repository state always yields
the same record, byte for byte once serialized. Parse failures degrade
the affected file to textual-only regions and leave a warning instead of
aborting the commit.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from .changetypes import LEVEL_TO_TYPE, MICRO_CHANGE
from .gitrepo import CommitMeta, FileChange, changed_files, commit_meta, list_commits
from .javamodel import ParseError, SyntaxTree, match_declarations, parse_compilation_unit
from .linediff import ChangeRegion, classify, line_count, line_diff
from .microchanges import MicroChange, detect_microchanges
from .refactorings import Refactoring, detect_moved_classes_across_files, detect_refactorings
from .spectrum import Spectrum, build_spectrum


@dataclass(frozen=True)
class ExtractConfig:
    extensions: tuple[str, ...] = ("java",)


@dataclass
class FileRecord:
    """Analysis result for one changed file within a commit."""

    path_pre: str | None
    path_post: str | None
    status: str
    pre_line_count: int
    post_line_count: int
    regions: list[ChangeRegion] = field(default_factory=list)
    spectrum: Spectrum | None = None
    warnings: list[str] = field(default_factory=list)

    @property
    def display_path(self) -> str:
        return self.path_post or self.path_pre or ""


@dataclass
class CommitRecord:
    sha: str
    short_sha: str
    author: str
    timestamp: int
    message: str
    parents: tuple[str, ...]
    files: list[FileRecord] = field(default_factory=list)

    @property
    def meta(self) -> CommitMeta:
        return CommitMeta(
            self.sha, self.short_sha, self.author, self.timestamp,
            self.message, self.parents,
        )


def regions_from_refactoring(finding: Refactoring) -> list[ChangeRegion]:
    change_type = LEVEL_TO_TYPE[finding.level]
    labels = (finding.name,)
    regions = [
        ChangeRegion("pre", start, end, change_type, labels)
        for start, end in finding.pre_regions
    ]
    regions.extend(
        ChangeRegion("post", start, end, change_type, labels)
        for start, end in finding.post_regions
    )
    return regions


def region_from_microchange(finding: MicroChange) -> ChangeRegion:
    start, end = finding.region
    return ChangeRegion(finding.side, start, end, MICRO_CHANGE, (finding.name,))


def _finalize_regions(regions: list[ChangeRegion]) -> list[ChangeRegion]:
    unique = sorted(set(regions), key=ChangeRegion.sort_key)
    return unique


@dataclass
class _FileAnalysis:
    change: FileChange
    hunks: list
    textual: list[ChangeRegion]
    pre_tree: SyntaxTree | None
    post_tree: SyntaxTree | None
    extra: list[ChangeRegion] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)


def _analyze_file(fc: FileChange) -> _FileAnalysis:
    hunks = line_diff(fc.text_pre, fc.text_post)
    textual = classify(hunks)
    analysis = _FileAnalysis(fc, hunks, textual, None, None)

    try:
        analysis.pre_tree = parse_compilation_unit(fc.text_pre)
    except ParseError as exc:
        analysis.warnings.append(f"pre side not parsed: {exc}")
    try:
        analysis.post_tree = parse_compilation_unit(fc.text_post)
    except ParseError as exc:
        analysis.warnings.append(f"post side not parsed: {exc}")

    if analysis.pre_tree is None or analysis.post_tree is None:
        return analysis

    mapping = match_declarations(analysis.pre_tree, analysis.post_tree)
    for finding in detect_refactorings(mapping, analysis.pre_tree, analysis.post_tree, fc):
        analysis.extra.extend(regions_from_refactoring(finding))
    for finding in detect_microchanges(mapping, analysis.pre_tree, analysis.post_tree, hunks):
        analysis.extra.append(region_from_microchange(finding))
    return analysis


def extract_commit(
    repo_path: Path | str,
    sha: str,
    config: ExtractConfig = ExtractConfig(),
) -> CommitRecord:
    """Analyze one commit against its first parent."""
    meta = commit_meta(repo_path, sha)
    fcs = changed_files(repo_path, meta.sha, config.extensions)
    analyses = [_analyze_file(fc) for fc in fcs]

    # Commit-level pass: classes moving between deleted and added files.
    deleted = [
        (i, a.pre_tree)
        for i, a in enumerate(analyses)
        if a.change.status == "deleted" and a.pre_tree is not None
    ]
    added = [
        (i, a.post_tree)
        for i, a in enumerate(analyses)
        if a.change.status == "added" and a.post_tree is not None
    ]
    for pre_idx, post_idx, finding in detect_moved_classes_across_files(deleted, added):
        for start, end in finding.pre_regions:
            analyses[pre_idx].extra.append(
                ChangeRegion("pre", start, end, LEVEL_TO_TYPE["class"], (finding.name,))
            )
        for start, end in finding.post_regions:
            analyses[post_idx].extra.append(
                ChangeRegion("post", start, end, LEVEL_TO_TYPE["class"], (finding.name,))
            )

    files = []
    for a in analyses:
        pre_count = line_count(a.change.text_pre)
        post_count = line_count(a.change.text_post)
        regions = _finalize_regions(a.textual + a.extra)
        files.append(
            FileRecord(
                path_pre=a.change.path_pre,
                path_post=a.change.path_post,
                status=a.change.status,
                pre_line_count=pre_count,
                post_line_count=post_count,
                regions=regions,
                spectrum=build_spectrum(pre_count, post_count, regions),
                warnings=sorted(a.warnings),
            )
        )
    return CommitRecord(
        sha=meta.sha,
        short_sha=meta.short_sha,
        author=meta.author,
        timestamp=meta.timestamp,
        message=meta.message,
        parents=meta.parent_shas,
        files=files,
    )


def extract_history(
    repo_path: Path | str,
    branch: str | None = None,
    limit: int | None = None,
    config: ExtractConfig = ExtractConfig(),
):
    """Yield CommitRecords over the first-parent history, oldest first."""
    for meta in list_commits(repo_path, branch=branch, limit=limit):
        yield extract_commit(repo_path, meta.sha, config)
