import type { FileEntry, Layer, Side } from "./types.js";

function sideBar(
  layers: Layer[],
  enabled: Set<string>,
  colors: Map<string, string>,
  side: Side,
): HTMLElement {
  const bar = document.createElement("div");
  bar.className = `spectrum-bar spectrum-${side}`;
  // Layers arrive presorted by paint priority; DOM order keeps later
  // (higher-priority) layers on top.
  for (const layer of layers) {
    if (!enabled.has(layer.change_type)) {
      continue;
    }
    const el = document.createElement("div");
    el.className = `layer type-${layer.change_type}`;
    el.style.top = `${layer.offset * 100}%`;
    el.style.height = `${Math.max(layer.height * 100, 0.75)}%`;
    el.style.background = colors.get(layer.change_type) ?? "#888";
    el.dataset.regionIndex = String(layer.region_index);
    bar.appendChild(el);
  }
  return bar;
}

/** The two mini-maps of one file, pre left, post right. */
export function renderSpectrumPair(
  file: FileEntry,
  enabled: Set<string>,
  colors: Map<string, string>,
): HTMLElement {
  const pair = document.createElement("div");
  pair.className = "spectrum-pair";
  pair.appendChild(sideBar(file.spectrum.pre_layers, enabled, colors, "pre"));
  pair.appendChild(sideBar(file.spectrum.post_layers, enabled, colors, "post"));
  return pair;
}
