"""Line-level diffing and classification into textual change regions.

The diff realizes a longest-common-subsequence alignment over exact-match
lines (Myers' O(ND) algorithm). Adjacent delete+insert runs coalesce into
a single "change" hunk, which is what the modification category means.
"""

from __future__ import annotations

from dataclasses import dataclass

from .changetypes import ADDITION, MODIFICATION, REMOVAL, SIDE_ORDER, ChangeType


class MalformedHunks(Exception):
    """Hunk list violates ordering or overlap constraints."""


def split_lines(text: str) -> list[str]:
    """Split into lines without a phantom empty line for a trailing newline."""
    if not text:
        return []
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    return lines


def line_count(text: str) -> int:
    return len(split_lines(text))


@dataclass(frozen=True, slots=True)
class Hunk:
    """One contiguous aligned difference.

    Ranges are 1-based inclusive. An empty side is encoded as
    start == anchor + 1, end == anchor, so insertion points stay addressable.
    """

    kind: str  # insert | delete | change
    pre_start: int
    pre_end: int
    post_start: int
    post_end: int

    def __post_init__(self) -> None:
        pre_empty = self.pre_end < self.pre_start
        post_empty = self.post_end < self.post_start
        if self.kind == "insert" and not (pre_empty and not post_empty):
            raise ValueError("insert hunk must have empty pre range only")
        if self.kind == "delete" and not (post_empty and not pre_empty):
            raise ValueError("delete hunk must have empty post range only")
        if self.kind == "change" and (pre_empty or post_empty):
            raise ValueError("change hunk needs both ranges non-empty")
        if self.kind not in ("insert", "delete", "change"):
            raise ValueError(f"unknown hunk kind {self.kind!r}")

    @property
    def pre_size(self) -> int:
        return max(0, self.pre_end - self.pre_start + 1)

    @property
    def post_size(self) -> int:
        return max(0, self.post_end - self.post_start + 1)


@dataclass(frozen=True)
class ChangeRegion:
    """One classified change on one side of the file pair."""

    side: str  # pre | post
    start_line: int
    end_line: int
    change_type: ChangeType
    labels: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        if self.side not in SIDE_ORDER:
            raise ValueError(f"bad side {self.side!r}")
        if self.start_line > self.end_line or self.start_line < 1:
            raise ValueError(f"bad line range {self.start_line}..{self.end_line}")
        if self.change_type is ADDITION and self.side != "post":
            raise ValueError("addition regions live on the post side")
        if self.change_type is REMOVAL and self.side != "pre":
            raise ValueError("removal regions live on the pre side")

    def sort_key(self) -> tuple:
        return (
            SIDE_ORDER[self.side],
            self.start_line,
            self.change_type.key,
            "\x1f".join(self.labels),
            self.end_line,
        )


def _myers_matches(a: list[str], b: list[str]) -> list[tuple[int, int]]:
    """0-based index pairs of an LCS alignment between a and b."""
    # Trim common prefix/suffix; Myers then runs on the differing core.
    n, m = len(a), len(b)
    prefix = 0
    while prefix < n and prefix < m and a[prefix] == b[prefix]:
        prefix += 1
    suffix = 0
    while (
        suffix < n - prefix
        and suffix < m - prefix
        and a[n - 1 - suffix] == b[m - 1 - suffix]
    ):
        suffix += 1

    core_a = a[prefix : n - suffix]
    core_b = b[prefix : m - suffix]
    matches = [(i, i) for i in range(prefix)]
    matches.extend(
        (i + prefix, j + prefix) for i, j in _myers_core(core_a, core_b)
    )
    matches.extend((n - suffix + k, m - suffix + k) for k in range(suffix))
    return matches


def _myers_core(a: list[str], b: list[str]) -> list[tuple[int, int]]:
    n, m = len(a), len(b)
    if n == 0 or m == 0:
        return []

    v: dict[int, int] = {1: 0}
    trace: list[dict[int, int]] = []
    found_d = -1
    for d in range(n + m + 1):
        trace.append(dict(v))
        for k in range(-d, d + 1, 2):
            if k == -d or (k != d and v.get(k - 1, 0) < v.get(k + 1, 0)):
                x = v.get(k + 1, 0)
            else:
                x = v.get(k - 1, 0) + 1
            y = x - k
            while x < n and y < m and a[x] == b[y]:
                x += 1
                y += 1
            v[k] = x
            if x >= n and y >= m:
                found_d = d
                break
        if found_d >= 0:
            break

    # Backtrack through the trace collecting the diagonal (match) steps.
    matches: list[tuple[int, int]] = []
    x, y = n, m
    for d in range(found_d, -1, -1):
        vd = trace[d]
        k = x - y
        if k == -d or (k != d and vd.get(k - 1, 0) < vd.get(k + 1, 0)):
            prev_k = k + 1
        else:
            prev_k = k - 1
        prev_x = vd.get(prev_k, 0)
        prev_y = prev_x - prev_k
        while x > prev_x and y > prev_y:
            x -= 1
            y -= 1
            matches.append((x, y))
        if d > 0:
            x, y = prev_x, prev_y
    matches.reverse()
    return matches


def line_diff(text_pre: str, text_post: str) -> list[Hunk]:
    """Diff two texts into sorted, non-overlapping hunks."""
    pre = split_lines(text_pre)
    post = split_lines(text_post)
    matches = _myers_matches(pre, post)

    hunks: list[Hunk] = []
    prev_i, prev_j = -1, -1
    for i, j in matches + [(len(pre), len(post))]:
        gap_pre = i - prev_i - 1
        gap_post = j - prev_j - 1
        if gap_pre and gap_post:
            hunks.append(Hunk("change", prev_i + 2, i, prev_j + 2, j))
        elif gap_pre:
            hunks.append(Hunk("delete", prev_i + 2, i, prev_j + 2, prev_j + 1))
        elif gap_post:
            hunks.append(Hunk("insert", prev_i + 2, prev_i + 1, prev_j + 2, j))
        prev_i, prev_j = i, j
    return hunks


def _check_hunks(hunks: list[Hunk]) -> None:
    prev: Hunk | None = None
    for h in hunks:
        if prev is not None:
            if h.pre_start <= prev.pre_end or h.post_start <= prev.post_end:
                raise MalformedHunks(f"hunks overlap or are unsorted: {prev} / {h}")
        prev = h


def classify(hunks: list[Hunk]) -> list[ChangeRegion]:
    """Map hunks onto textual change regions.

    insert -> addition (post side), delete -> removal (pre side),
    change -> one modification region per side.
    """
    _check_hunks(hunks)
    regions: list[ChangeRegion] = []
    for h in hunks:
        if h.kind == "insert":
            regions.append(ChangeRegion("post", h.post_start, h.post_end, ADDITION))
        elif h.kind == "delete":
            regions.append(ChangeRegion("pre", h.pre_start, h.pre_end, REMOVAL))
        else:
            regions.append(ChangeRegion("pre", h.pre_start, h.pre_end, MODIFICATION))
            regions.append(ChangeRegion("post", h.post_start, h.post_end, MODIFICATION))
    return regions
