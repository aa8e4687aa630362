import type { AppConfig, CommitRecord, FileEntry, Side } from "../types.js";
import { displayPath } from "../types.js";
import type { Store } from "../state.js";
import { renderFilterPanel } from "../filters.js";
import { renderSpectrumPair } from "../spectrum.js";
import { colorByKey, lineLabels, orderByKey, visibleTypes } from "../visible.js";

export interface DetailDeps {
  config: AppConfig;
  record: CommitRecord;
  file: FileEntry;
  preText: string | null; // null when the side does not exist
  postText: string | null;
  store: Store;
}

/** Side-by-side code panes with a central spectrum pair. */
export function renderDetailView(deps: DetailDeps): HTMLElement {
  const { config, record, file, store } = deps;
  const root = document.createElement("div");
  root.className = "view view-detail";

  root.appendChild(renderFilterPanel(config.change_types, store));

  const head = document.createElement("div");
  head.className = "detail-head";
  const back = document.createElement("a");
  back.href = "#/";
  back.textContent = "back to timeline";
  const title = document.createElement("h2");
  title.className = "file-path";
  title.textContent = `${record.short_sha} — ${displayPath(file)}`;
  head.append(back, title);
  root.appendChild(head);

  const split = document.createElement("div");
  split.className = "detail-split";
  split.appendChild(pane(deps, "pre", deps.preText, file.pre_line_count));
  const center = document.createElement("div");
  center.className = "detail-center";
  center.appendChild(
    renderSpectrumPair(file, store.get().enabledTypes, colorByKey(config.change_types)),
  );
  split.appendChild(center);
  split.appendChild(pane(deps, "post", deps.postText, file.post_line_count));
  root.appendChild(split);
  return root;
}

function pane(
  deps: DetailDeps,
  side: Side,
  text: string | null,
  lineCount: number,
): HTMLElement {
  const { config, file, store } = deps;
  const wrap = document.createElement("div");
  wrap.className = `code-pane pane-${side}`;
  const caption = document.createElement("div");
  caption.className = "pane-caption";
  caption.textContent = side === "pre" ? "pre-commit" : "post-commit";
  wrap.appendChild(caption);

  if (text === null) {
    const notice = document.createElement("p");
    notice.className = "pane-empty";
    notice.textContent =
      side === "pre" ? "File did not exist before this commit." : "File was deleted.";
    wrap.appendChild(notice);
    return wrap;
  }

  const enabled = store.get().enabledTypes;
  const order = orderByKey(config.change_types);
  const colors = colorByKey(config.change_types);
  const visible = visibleTypes(file.regions, enabled, side, lineCount, order);

  const lines = splitLines(text);
  const code = document.createElement("div");
  code.className = "code-lines";
  for (let n = 1; n <= lines.length; n++) {
    const row = document.createElement("div");
    row.className = "code-line";
    const type = visible[n - 1] ?? null;
    if (type) {
      row.classList.add(`line-${type}`);
      row.style.background = colors.get(type) ?? "";
    }
    const labels = lineLabels(file.regions, enabled, side, n);
    if (labels.length) {
      row.title = labels.join(", ");
      row.dataset.labels = labels.join(", ");
    }
    const num = document.createElement("span");
    num.className = "line-number";
    num.textContent = String(n);
    const body = document.createElement("span");
    body.className = "line-text";
    body.textContent = lines[n - 1];
    row.append(num, body);
    code.appendChild(row);
  }
  wrap.appendChild(code);
  return wrap;
}

function splitLines(text: string): string[] {
  if (!text) {
    return [];
  }
  const lines = text.split("\n");
  if (lines.length && lines[lines.length - 1] === "") {
    lines.pop();
  }
  return lines;
}
