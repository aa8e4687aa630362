import type { AppConfig, CommitRecord } from "../types.js";
import { displayPath } from "../types.js";
import type { Store } from "../state.js";
import { renderFilterPanel } from "../filters.js";
import { renderSpectrumPair } from "../spectrum.js";
import { colorByKey } from "../visible.js";

export interface InsightDeps {
  config: AppConfig;
  record: CommitRecord;
  store: Store;
  onOpenDetail: (sha: string, path: string) => void;
  onBack: () => void;
}

/** Spectrum grid over every changed file of one commit. */
export function renderInsightView(deps: InsightDeps): HTMLElement {
  const { config, record, store } = deps;
  const root = document.createElement("div");
  root.className = "view view-insight";

  root.appendChild(renderFilterPanel(config.change_types, store));

  const head = document.createElement("div");
  head.className = "insight-head";
  const back = document.createElement("a");
  back.href = "#/";
  back.textContent = "back to timeline";
  const title = document.createElement("h2");
  title.textContent = `${record.short_sha} — ${record.files.length} file(s)`;
  head.append(back, title);
  root.appendChild(head);

  const colors = colorByKey(config.change_types);
  const grid = document.createElement("div");
  grid.className = "insight-grid";
  for (const file of record.files) {
    const card = document.createElement("button");
    card.type = "button";
    card.className = "insight-card";
    card.dataset.path = displayPath(file);
    const path = document.createElement("span");
    path.className = "file-path";
    path.textContent = displayPath(file);
    card.appendChild(path);
    card.appendChild(renderSpectrumPair(file, store.get().enabledTypes, colors));
    card.addEventListener("click", () =>
      deps.onOpenDetail(record.sha, displayPath(file)),
    );
    grid.appendChild(card);
  }
  root.appendChild(grid);
  return root;
}
