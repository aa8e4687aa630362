import type { ChangeTypeInfo, Region, Side } from "./types.js";

/** Paint-order lookup built from the served type table. */
export function orderByKey(changeTypes: ChangeTypeInfo[]): Map<string, number> {
  return new Map(changeTypes.map((t) => [t.key, t.layer_order]));
}

export function colorByKey(changeTypes: ChangeTypeInfo[]): Map<string, string> {
  return new Map(changeTypes.map((t) => [t.key, t.color]));
}

/**
 * Per-line visible type for one side: among enabled regions covering a
 * line, the one with the highest layer order wins. Index 0 is line 1.
 */
export function visibleTypes(
  regions: Region[],
  enabled: Set<string>,
  side: Side,
  lineCount: number,
  order: Map<string, number>,
): (string | null)[] {
  const visible: (string | null)[] = new Array(lineCount).fill(null);
  const best: number[] = new Array(lineCount).fill(0);
  for (const region of regions) {
    if (region.side !== side || !enabled.has(region.change_type)) {
      continue;
    }
    const rank = order.get(region.change_type) ?? 0;
    const from = Math.max(1, region.start_line);
    const to = Math.min(lineCount, region.end_line);
    for (let line = from; line <= to; line++) {
      if (rank > best[line - 1]) {
        best[line - 1] = rank;
        visible[line - 1] = region.change_type;
      }
    }
  }
  return visible;
}

/** Labels of enabled labeled regions covering a line (tooltip content). */
export function lineLabels(
  regions: Region[],
  enabled: Set<string>,
  side: Side,
  line: number,
): string[] {
  const labels: string[] = [];
  for (const region of regions) {
    if (
      region.side === side &&
      enabled.has(region.change_type) &&
      region.start_line <= line &&
      line <= region.end_line
    ) {
      for (const label of region.labels) {
        if (!labels.includes(label)) {
          labels.push(label);
        }
      }
    }
  }
  return labels;
}
