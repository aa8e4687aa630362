"""Two-sided mini-map model built from classified change regions.

Each region turns into one layer positioned at its relative location in
the file; layers stack in layer_order so the most significant category
paints on top.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .changetypes import SIDES, TYPE_BY_KEY, ChangeType
from .linediff import ChangeRegion


class RegionOutOfBounds(Exception):
    pass


class UnknownTypeKey(Exception):
    pass


@dataclass(frozen=True, slots=True)
class SpectrumLayer:
    change_type: ChangeType
    offset: float  # (start_line - 1) / line_count
    height: float  # region length / line_count
    region_index: int  # index into the file's region list


@dataclass
class Spectrum:
    pre_line_count: int
    post_line_count: int
    pre_layers: list[SpectrumLayer] = field(default_factory=list)
    post_layers: list[SpectrumLayer] = field(default_factory=list)

    def layers(self, side: str) -> list[SpectrumLayer]:
        return self.pre_layers if side == "pre" else self.post_layers

    def side_count(self, side: str) -> int:
        return self.pre_line_count if side == "pre" else self.post_line_count


def build_spectrum(
    pre_line_count: int,
    post_line_count: int,
    regions: list[ChangeRegion],
) -> Spectrum:
    """Turn a file's regions into sorted layer stacks, one per side."""
    if pre_line_count < 0 or post_line_count < 0:
        raise ValueError("line counts must be non-negative")
    spectrum = Spectrum(pre_line_count, post_line_count)
    for index, region in enumerate(regions):
        count = pre_line_count if region.side == "pre" else post_line_count
        if region.end_line > count:
            raise RegionOutOfBounds(
                f"{region.side} region {region.start_line}..{region.end_line} "
                f"exceeds {count} lines"
            )
        layer = SpectrumLayer(
            change_type=region.change_type,
            offset=(region.start_line - 1) / count,
            height=(region.end_line - region.start_line + 1) / count,
            region_index=index,
        )
        spectrum.layers(region.side).append(layer)
    for side in SIDES:
        spectrum.layers(side).sort(
            key=lambda l: (l.change_type.layer_order, l.offset, l.region_index)
        )
    return spectrum


def layer_line_range(layer: SpectrumLayer, count: int) -> tuple[int, int]:
    """Recover the inclusive 1-based line range a layer covers."""
    start = round(layer.offset * count) + 1
    length = round(layer.height * count)
    return start, start + length - 1


def filter_layers(spectrum: Spectrum, enabled: set[str]) -> Spectrum:
    """Copy of the spectrum keeping only layers of the enabled type keys."""
    _check_keys(enabled)
    return Spectrum(
        pre_line_count=spectrum.pre_line_count,
        post_line_count=spectrum.post_line_count,
        pre_layers=[l for l in spectrum.pre_layers if l.change_type.key in enabled],
        post_layers=[l for l in spectrum.post_layers if l.change_type.key in enabled],
    )


def resolve_visible(
    spectrum: Spectrum, enabled: set[str], side: str
) -> dict[int, str | None]:
    """Per-line visible type under the given filter.

    For every line of the chosen side, the enabled covering layer with the
    highest layer_order wins; uncovered lines map to None.
    """
    _check_keys(enabled)
    if side not in SIDES:
        raise ValueError(f"bad side {side!r}")
    count = spectrum.side_count(side)
    visible: dict[int, str | None] = {line: None for line in range(1, count + 1)}
    best_order = {line: 0 for line in range(1, count + 1)}
    for layer in spectrum.layers(side):
        if layer.change_type.key not in enabled:
            continue
        start, end = layer_line_range(layer, count)
        for line in range(start, end + 1):
            if layer.change_type.layer_order > best_order[line]:
                best_order[line] = layer.change_type.layer_order
                visible[line] = layer.change_type.key
    return visible


def _check_keys(enabled: set[str]) -> None:
    unknown = enabled - TYPE_BY_KEY.keys()
    if unknown:
        raise UnknownTypeKey(", ".join(sorted(unknown)))
