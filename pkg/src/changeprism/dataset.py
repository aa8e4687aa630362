"""On-disk JSON dataset: the contract between extraction and the server.

Layout: <dir>/index.json plus <dir>/commits/<sha>.json, one document per
commit. Serialization is canonical (sorted keys, UTF-8, LF, trailing
newline) so identical inputs produce identical bytes.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .changetypes import LEVEL_TO_TYPE, TYPE_BY_KEY
from .extraction import CommitRecord, FileRecord
from .gitrepo import CommitMeta
from .linediff import ChangeRegion
from .spectrum import Spectrum, SpectrumLayer, build_spectrum

SCHEMA_VERSION = "1"


class DatasetError(Exception):
    pass


class MissingIndex(DatasetError):
    pass


class CorruptDocument(DatasetError):
    pass


class SchemaVersionMismatch(DatasetError):
    pass


class DatasetIoError(DatasetError):
    pass


class UnknownCommitInImport(DatasetError):
    pass


class MalformedImportFile(DatasetError):
    pass


@dataclass(frozen=True)
class DatasetInfo:
    version: str
    repo_name: str
    commit_count: int
    path: Path


@dataclass
class ImportSummary:
    imported: int = 0
    skipped_types: dict[str, int] | None = None
    warnings: list[str] | None = None

    def __post_init__(self) -> None:
        self.skipped_types = self.skipped_types or {}
        self.warnings = self.warnings or []


def _dump_canonical(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def region_to_dict(region: ChangeRegion) -> dict:
    return {
        "side": region.side,
        "start_line": region.start_line,
        "end_line": region.end_line,
        "change_type": region.change_type.key,
        "labels": list(region.labels),
    }


def region_from_dict(data: dict) -> ChangeRegion:
    return ChangeRegion(
        side=data["side"],
        start_line=data["start_line"],
        end_line=data["end_line"],
        change_type=TYPE_BY_KEY[data["change_type"]],
        labels=tuple(data["labels"]),
    )


def layer_to_dict(layer: SpectrumLayer) -> dict:
    return {
        "change_type": layer.change_type.key,
        "offset": layer.offset,
        "height": layer.height,
        "region_index": layer.region_index,
    }


def layer_from_dict(data: dict) -> SpectrumLayer:
    return SpectrumLayer(
        change_type=TYPE_BY_KEY[data["change_type"]],
        offset=data["offset"],
        height=data["height"],
        region_index=data["region_index"],
    )


def file_to_dict(fr: FileRecord) -> dict:
    doc = {
        "status": fr.status,
        "pre_line_count": fr.pre_line_count,
        "post_line_count": fr.post_line_count,
        "regions": [region_to_dict(r) for r in fr.regions],
        "spectrum": {
            "pre_layers": [layer_to_dict(l) for l in fr.spectrum.pre_layers],
            "post_layers": [layer_to_dict(l) for l in fr.spectrum.post_layers],
        },
        "warnings": list(fr.warnings),
    }
    if fr.path_pre is not None:
        doc["path_pre"] = fr.path_pre
    if fr.path_post is not None:
        doc["path_post"] = fr.path_post
    return doc


def file_from_dict(data: dict) -> FileRecord:
    spectrum = Spectrum(
        pre_line_count=data["pre_line_count"],
        post_line_count=data["post_line_count"],
        pre_layers=[layer_from_dict(l) for l in data["spectrum"]["pre_layers"]],
        post_layers=[layer_from_dict(l) for l in data["spectrum"]["post_layers"]],
    )
    return FileRecord(
        path_pre=data.get("path_pre"),
        path_post=data.get("path_post"),
        status=data["status"],
        pre_line_count=data["pre_line_count"],
        post_line_count=data["post_line_count"],
        regions=[region_from_dict(r) for r in data["regions"]],
        spectrum=spectrum,
        warnings=list(data["warnings"]),
    )


def record_to_dict(record: CommitRecord) -> dict:
    return {
        "sha": record.sha,
        "short_sha": record.short_sha,
        "author": record.author,
        "timestamp": record.timestamp,
        "message": record.message,
        "parents": list(record.parents),
        "files": [file_to_dict(f) for f in record.files],
    }


def record_from_dict(data: dict) -> CommitRecord:
    return CommitRecord(
        sha=data["sha"],
        short_sha=data["short_sha"],
        author=data["author"],
        timestamp=data["timestamp"],
        message=data["message"],
        parents=tuple(data["parents"]),
        files=[file_from_dict(f) for f in data["files"]],
    )


def save_dataset(
    directory: Path | str,
    records: list[CommitRecord],
    repo_name: str = "",
) -> DatasetInfo:
    """Write index.json and one commit document per record.

    Overwriting a dataset of a different schema version is refused; a
    full save removes commit documents that are no longer referenced.
    """
    directory = Path(directory)
    index_path = directory / "index.json"
    if index_path.exists():
        try:
            existing = json.loads(index_path.read_text(encoding="utf-8"))
        except (OSError, ValueError) as exc:
            raise CorruptDocument(str(index_path)) from exc
        if existing.get("version") != SCHEMA_VERSION:
            raise SchemaVersionMismatch(
                f"dataset at {directory} has version {existing.get('version')!r}"
            )
        if not repo_name:
            repo_name = existing.get("repo_name", "")

    commits_dir = directory / "commits"
    try:
        commits_dir.mkdir(parents=True, exist_ok=True)
        index = {
            "version": SCHEMA_VERSION,
            "repo_name": repo_name,
            "commits": [
                {
                    "sha": r.sha,
                    "short_sha": r.short_sha,
                    "author": r.author,
                    "timestamp": r.timestamp,
                    "message": r.message,
                    "parents": list(r.parents),
                }
                for r in records
            ],
        }
        index_path.write_text(_dump_canonical(index), encoding="utf-8", newline="\n")
        wanted = {f"{r.sha}.json" for r in records}
        for stale in commits_dir.glob("*.json"):
            if stale.name not in wanted:
                stale.unlink()
        for r in records:
            (commits_dir / f"{r.sha}.json").write_text(
                _dump_canonical(record_to_dict(r)), encoding="utf-8", newline="\n"
            )
    except OSError as exc:
        raise DatasetIoError(str(exc)) from exc
    return DatasetInfo(SCHEMA_VERSION, repo_name, len(records), directory)


def load_index(directory: Path | str) -> dict:
    index_path = Path(directory) / "index.json"
    if not index_path.exists():
        raise MissingIndex(str(index_path))
    try:
        index = json.loads(index_path.read_text(encoding="utf-8"))
    except ValueError as exc:
        raise CorruptDocument(str(index_path)) from exc
    if index.get("version") != SCHEMA_VERSION:
        raise SchemaVersionMismatch(
            f"expected schema {SCHEMA_VERSION}, found {index.get('version')!r}"
        )
    return index


def load_dataset(directory: Path | str) -> tuple[list[CommitRecord], DatasetInfo]:
    """Load all commit records, in index order."""
    directory = Path(directory)
    index = load_index(directory)
    records = []
    for entry in index["commits"]:
        doc_path = directory / "commits" / f"{entry['sha']}.json"
        if not doc_path.exists():
            raise CorruptDocument(str(doc_path))
        try:
            records.append(record_from_dict(json.loads(doc_path.read_text(encoding="utf-8"))))
        except (ValueError, KeyError) as exc:
            raise CorruptDocument(str(doc_path)) from exc
    info = DatasetInfo(
        version=index["version"],
        repo_name=index.get("repo_name", ""),
        commit_count=len(records),
        path=directory,
    )
    return records, info


def index_metas(directory: Path | str) -> list[CommitMeta]:
    index = load_index(directory)
    return [
        CommitMeta(
            sha=e["sha"],
            short_sha=e["short_sha"],
            author=e["author"],
            timestamp=e["timestamp"],
            message=e["message"],
            parent_shas=tuple(e["parents"]),
        )
        for e in index["commits"]
    ]


# RefactoringMiner type name -> granularity of this artifact's bands.
RM_TYPE_LEVELS: dict[str, str] = {
    # class level
    "Move Class": "class",
    "Rename Class": "class",
    "Move And Rename Class": "class",
    "Extract Class": "class",
    "Extract Subclass": "class",
    "Extract Superclass": "class",
    "Extract Interface": "class",
    "Merge Class": "class",
    "Split Class": "class",
    "Change Type Declaration Kind": "class",
    # method level
    "Extract Method": "method",
    "Inline Method": "method",
    "Rename Method": "method",
    "Move Method": "method",
    "Move And Rename Method": "method",
    "Pull Up Method": "method",
    "Push Down Method": "method",
    "Extract And Move Method": "method",
    "Move And Inline Method": "method",
    "Add Method Modifier": "method",
    "Remove Method Modifier": "method",
    "Change Return Type": "method",
    "Add Parameter": "method",
    "Remove Parameter": "method",
    "Reorder Parameter": "method",
    "Split Method": "method",
    # statement / attribute / variable level
    "Rename Attribute": "statement",
    "Move Attribute": "statement",
    "Pull Up Attribute": "statement",
    "Push Down Attribute": "statement",
    "Add Attribute Modifier": "statement",
    "Remove Attribute Modifier": "statement",
    "Change Attribute Type": "statement",
    "Extract Attribute": "statement",
    "Rename Variable": "statement",
    "Rename Parameter": "statement",
    "Extract Variable": "statement",
    "Inline Variable": "statement",
    "Change Variable Type": "statement",
    "Add Variable Modifier": "statement",
    "Remove Variable Modifier": "statement",
}


def _place_locations(locations, side: str, record: CommitRecord):
    """Resolve one side's locations to (file record, start, end) targets.

    Returns (placements, warning); a warning means the whole finding
    should be skipped."""
    placements = []
    for loc in locations:
        path = loc.get("filePath")
        start = loc.get("startLine")
        end = loc.get("endLine")
        if not isinstance(path, str) or not isinstance(start, int) or not isinstance(end, int):
            raise MalformedImportFile(f"bad location entry: {loc!r}")
        target = None
        for fr in record.files:
            own_path = fr.path_pre if side == "pre" else fr.path_post
            if own_path == path:
                target = fr
                break
        if target is None:
            return [], f"no {side} file {path} in commit {record.short_sha}"
        count = target.pre_line_count if side == "pre" else target.post_line_count
        if start < 1 or end < start or end > count:
            return [], f"location out of bounds for {path}: {start}-{end}"
        placements.append((target, start, end))
    return placements, None


def import_refactorings_json(
    dataset_dir: Path | str,
    rm_json: Path | str,
) -> ImportSummary:
    """Attach findings from a RefactoringMiner-shaped JSON export.

    Findings are keyed by type and locations, so re-importing the same
    file is a no-op. Type names missing from the level table are skipped
    and counted.
    """
    dataset_dir = Path(dataset_dir)
    try:
        payload = json.loads(Path(rm_json).read_text(encoding="utf-8"))
    except OSError as exc:
        raise DatasetIoError(str(exc)) from exc
    except ValueError as exc:
        raise MalformedImportFile(f"{rm_json}: {exc}") from exc
    if not isinstance(payload, dict) or not isinstance(payload.get("commits"), list):
        raise MalformedImportFile("expected a top-level object with a 'commits' array")

    records, info = load_dataset(dataset_dir)
    by_sha = {r.sha: r for r in records}

    for entry in payload["commits"]:
        if not isinstance(entry, dict) or not isinstance(entry.get("sha1"), str):
            raise MalformedImportFile(f"commit entry without sha1: {entry!r}")
        if entry["sha1"] not in by_sha:
            raise UnknownCommitInImport(entry["sha1"])

    summary = ImportSummary()
    touched: set[str] = set()
    for entry in payload["commits"]:
        record = by_sha[entry["sha1"]]
        refactorings = entry.get("refactorings", [])
        if not isinstance(refactorings, list):
            raise MalformedImportFile(f"refactorings of {entry['sha1']} is not a list")
        for ref in refactorings:
            name = ref.get("type")
            level = RM_TYPE_LEVELS.get(name)
            if level is None:
                summary.skipped_types[name] = summary.skipped_types.get(name, 0) + 1
                summary.warnings.append(f"unmapped refactoring type skipped: {name!r}")
                continue
            change_type = LEVEL_TO_TYPE[level]
            regions: list[tuple[FileRecord, ChangeRegion]] = []
            bad = None
            for side, key in (("pre", "leftSideLocations"), ("post", "rightSideLocations")):
                placed, warn = _place_locations(ref.get(key, []), side, record)
                if warn:
                    bad = warn
                    break
                regions.extend(
                    (fr, ChangeRegion(side, start, end, change_type, (name,)))
                    for fr, start, end in placed
                )
            if bad:
                summary.warnings.append(bad)
                continue
            added_any = False
            for fr, region in regions:
                if region in fr.regions:
                    continue
                fr.regions.append(region)
                added_any = True
                touched.add(record.sha)
            if added_any:
                summary.imported += 1

    for sha in touched:
        record = by_sha[sha]
        for fr in record.files:
            fr.regions = sorted(set(fr.regions), key=ChangeRegion.sort_key)
            fr.spectrum = build_spectrum(fr.pre_line_count, fr.post_line_count, fr.regions)
    save_dataset(dataset_dir, records, info.repo_name)
    return summary
