"""Read-only access to an on-disk Git repository via the git CLI.

Only first-parent history is walked; root commits diff against the empty
tree. Rename detection pairs added and deleted entries of identical blob
content, nothing fuzzier, so extraction stays deterministic.
"""

from __future__ import annotations

import subprocess
from dataclasses import dataclass
from pathlib import Path

EMPTY_TREE_SHA = "4b825dc642cb6eb9a060e54bf8d69288fbee4904"

_FIELD_SEP = "\x1f"
_RECORD_SEP = "\x1e"


class GitError(Exception):
    pass


class NotARepository(GitError):
    pass


class UnknownBranch(GitError):
    pass


class UnknownCommit(GitError):
    pass


@dataclass(frozen=True)
class CommitMeta:
    sha: str
    short_sha: str
    author: str
    timestamp: int
    message: str
    parent_shas: tuple[str, ...]


@dataclass
class FileChange:
    path_pre: str | None
    path_post: str | None
    status: str  # added | deleted | modified | renamed
    text_pre: str = ""
    text_post: str = ""

    @property
    def display_path(self) -> str:
        return self.path_post or self.path_pre or ""


def normalize_text(data: bytes) -> str:
    return data.decode("utf-8", errors="replace").replace("\r\n", "\n")


def _run_git(repo_path: Path | str, *args: str) -> str:
    proc = subprocess.run(
        ["git", "-C", str(repo_path), *args],
        capture_output=True,
        check=False,
    )
    if proc.returncode != 0:
        raise GitError(proc.stderr.decode("utf-8", errors="replace").strip())
    return proc.stdout.decode("utf-8", errors="replace")


def _ensure_repository(repo_path: Path | str) -> None:
    proc = subprocess.run(
        ["git", "-C", str(repo_path), "rev-parse", "--git-dir"],
        capture_output=True,
        check=False,
    )
    if proc.returncode != 0:
        raise NotARepository(str(repo_path))


def _parse_commit_record(record: str) -> CommitMeta:
    sha, author, timestamp, parents, message = record.split(_FIELD_SEP, 4)
    return CommitMeta(
        sha=sha,
        short_sha=sha[:7],
        author=author,
        timestamp=int(timestamp),
        message=message.rstrip("\n"),
        parent_shas=tuple(parents.split()) if parents else (),
    )


def list_commits(
    repo_path: Path | str,
    branch: str | None = None,
    limit: int | None = None,
) -> list[CommitMeta]:
    """First-parent history, sorted by timestamp ascending, ties by sha.

    limit keeps the newest N commits of the walk; within that window the
    returned list still starts with the oldest.
    """
    _ensure_repository(repo_path)
    ref = branch or "HEAD"
    probe = subprocess.run(
        ["git", "-C", str(repo_path), "rev-parse", "--verify", "--quiet", f"{ref}^{{commit}}"],
        capture_output=True,
        check=False,
    )
    if probe.returncode != 0:
        if branch is not None:
            raise UnknownBranch(branch)
        return []  # repository without commits

    args = [
        "log",
        "--first-parent",
        f"--format=%H{_FIELD_SEP}%an{_FIELD_SEP}%ct{_FIELD_SEP}%P{_FIELD_SEP}%B{_RECORD_SEP}",
        ref,
    ]
    if limit is not None:
        args.insert(2, f"--max-count={limit}")
    out = _run_git(repo_path, *args)
    commits = [
        _parse_commit_record(record.strip("\n"))
        for record in out.split(_RECORD_SEP)
        if record.strip()
    ]
    commits.sort(key=lambda c: (c.timestamp, c.sha))
    return commits


def commit_meta(repo_path: Path | str, sha: str) -> CommitMeta:
    _ensure_repository(repo_path)
    try:
        out = _run_git(
            repo_path,
            "log",
            "--max-count=1",
            f"--format=%H{_FIELD_SEP}%an{_FIELD_SEP}%ct{_FIELD_SEP}%P{_FIELD_SEP}%B{_RECORD_SEP}",
            sha,
        )
    except GitError as exc:
        raise UnknownCommit(sha) from exc
    record = out.split(_RECORD_SEP)[0].strip("\n")
    if not record:
        raise UnknownCommit(sha)
    return _parse_commit_record(record)


def read_blob(repo_path: Path | str, blob_sha: str) -> str:
    return normalize_text(
        subprocess.run(
            ["git", "-C", str(repo_path), "cat-file", "blob", blob_sha],
            capture_output=True,
            check=True,
        ).stdout
    )


def read_file_at(repo_path: Path | str, sha: str, path: str) -> str | None:
    """File text at a commit, None when the path is absent there."""
    proc = subprocess.run(
        ["git", "-C", str(repo_path), "rev-parse", "--verify", "--quiet", f"{sha}:{path}"],
        capture_output=True,
        check=False,
    )
    if proc.returncode != 0:
        return None
    return read_blob(repo_path, proc.stdout.decode().strip())


@dataclass(frozen=True)
class _RawEntry:
    status: str
    path: str
    pre_blob: str
    post_blob: str


_NULL_BLOB = "0" * 40


def _raw_diff_entries(repo_path: Path | str, sha: str, parent: str | None) -> list[_RawEntry]:
    base = parent if parent is not None else EMPTY_TREE_SHA
    out = _run_git(
        repo_path, "diff-tree", "-r", "--no-renames", "--no-commit-id", base, sha
    )
    entries = []
    for line in out.splitlines():
        if not line.startswith(":"):
            continue
        meta, path = line.split("\t", 1)
        parts = meta.split()
        pre_blob, post_blob, status = parts[2], parts[3], parts[4][0]
        entries.append(_RawEntry(status, path, pre_blob, post_blob))
    return entries


def _extension_of(path: str) -> str:
    name = path.rsplit("/", 1)[-1]
    return name.rsplit(".", 1)[-1].lower() if "." in name else ""


def changed_files(
    repo_path: Path | str,
    sha: str,
    extensions: tuple[str, ...] = ("java",),
) -> list[FileChange]:
    """Per-file changes of a commit against its first parent.

    Only files whose extension is in the allowlist are returned, sorted
    by post path (pre path for deletions). Renames are recognized by
    exact blob identity between a delete and an add.
    """
    _ensure_repository(repo_path)
    probe = subprocess.run(
        ["git", "-C", str(repo_path), "rev-parse", "--verify", "--quiet", f"{sha}^{{commit}}"],
        capture_output=True,
        check=False,
    )
    if probe.returncode != 0:
        raise UnknownCommit(sha)
    resolved = probe.stdout.decode().strip()
    meta = commit_meta(repo_path, resolved)
    parent = meta.parent_shas[0] if meta.parent_shas else None

    allow = {e.lower().lstrip(".") for e in extensions}
    entries = [
        e for e in _raw_diff_entries(repo_path, resolved, parent)
        if _extension_of(e.path) in allow
    ]

    adds = sorted((e for e in entries if e.status == "A"), key=lambda e: e.path)
    dels = sorted((e for e in entries if e.status == "D"), key=lambda e: e.path)
    others = [e for e in entries if e.status not in ("A", "D")]

    # Exact-blob rename pairing, deterministic by path order.
    adds_by_blob: dict[str, list[_RawEntry]] = {}
    for e in adds:
        adds_by_blob.setdefault(e.post_blob, []).append(e)
    changes: list[FileChange] = []
    consumed_adds: set[str] = set()
    for d in dels:
        bucket = adds_by_blob.get(d.pre_blob)
        if bucket:
            a = bucket.pop(0)
            consumed_adds.add(a.path)
            changes.append(
                FileChange(
                    path_pre=d.path,
                    path_post=a.path,
                    status="renamed",
                    text_pre=read_blob(repo_path, d.pre_blob),
                    text_post=read_blob(repo_path, a.post_blob),
                )
            )
        else:
            changes.append(
                FileChange(
                    path_pre=d.path,
                    path_post=None,
                    status="deleted",
                    text_pre=read_blob(repo_path, d.pre_blob),
                    text_post="",
                )
            )
    for a in adds:
        if a.path in consumed_adds:
            continue
        changes.append(
            FileChange(
                path_pre=None,
                path_post=a.path,
                status="added",
                text_pre="",
                text_post=read_blob(repo_path, a.post_blob),
            )
        )
    for e in others:
        changes.append(
            FileChange(
                path_pre=e.path,
                path_post=e.path,
                status="modified",
                text_pre=read_blob(repo_path, e.pre_blob),
                text_post=read_blob(repo_path, e.post_blob),
            )
        )
    changes.sort(key=lambda fc: fc.display_path)
    return changes
