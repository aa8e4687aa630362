import type { AppConfig, CommitMeta, CommitRecord } from "../types.js";
import { displayPath } from "../types.js";
import type { Store } from "../state.js";
import { renderFilterPanel } from "../filters.js";
import { renderSpectrumPair } from "../spectrum.js";
import { colorByKey } from "../visible.js";

export interface GeneralDeps {
  config: AppConfig;
  commits: CommitMeta[];
  record: CommitRecord | null; // the selected commit, already fetched
  store: Store;
  onSelect: (sha: string) => void;
  onOpenInsight: (sha: string) => void;
  onOpenDetail: (sha: string, path: string) => void;
}

/** Timeline, filter checkboxes and the selected-commit panel. */
export function renderGeneralView(deps: GeneralDeps): HTMLElement {
  const { config, commits, record, store } = deps;
  const state = store.get();
  const root = document.createElement("div");
  root.className = "view view-general";

  root.appendChild(renderFilterPanel(config.change_types, store));

  const timeline = document.createElement("div");
  timeline.className = "timeline";
  for (const commit of commits) {
    const item = document.createElement("button");
    item.type = "button";
    item.className = "commit-item";
    if (commit.sha === state.selectedSha) {
      item.classList.add("selected");
    }
    item.dataset.sha = commit.sha;
    const dot = document.createElement("span");
    dot.className = "commit-dot";
    const label = document.createElement("span");
    label.className = "commit-label";
    label.textContent = commit.short_sha;
    item.append(dot, label);
    item.addEventListener("click", () => deps.onSelect(commit.sha));
    timeline.appendChild(item);
  }
  root.appendChild(timeline);

  const panel = document.createElement("div");
  panel.className = "commit-panel";
  if (!record) {
    const hint = document.createElement("p");
    hint.className = "hint";
    hint.textContent = "Select a commit on the timeline to inspect it.";
    panel.appendChild(hint);
  } else {
    panel.appendChild(commitHeader(record, config, deps));
    const colors = colorByKey(config.change_types);
    const files = document.createElement("div");
    files.className = "file-list";
    for (const file of record.files) {
      const row = document.createElement("div");
      row.className = "file-row";
      const name = document.createElement("a");
      name.className = "file-path";
      name.href = `#/detail/${record.sha}/${encodeURIComponent(displayPath(file))}`;
      name.textContent = displayPath(file);
      row.appendChild(name);
      row.appendChild(renderSpectrumPair(file, state.enabledTypes, colors));
      files.appendChild(row);
    }
    panel.appendChild(files);
  }
  root.appendChild(panel);
  return root;
}

function commitHeader(
  record: CommitRecord,
  config: AppConfig,
  deps: GeneralDeps,
): HTMLElement {
  const head = document.createElement("div");
  head.className = "commit-head";

  const shaLink = document.createElement("a");
  shaLink.className = "sha-link";
  shaLink.textContent = record.sha;
  shaLink.href = `#/detail/${record.sha}/${encodeURIComponent(
    record.files.length ? displayPath(record.files[0]) : "",
  )}`;
  shaLink.title = "Open the Code Detail view";
  head.appendChild(shaLink);

  if (config.github_base) {
    const gh = document.createElement("a");
    gh.className = "github-link";
    gh.href = `${config.github_base}/commit/${record.sha}`;
    gh.textContent = "View on GitHub";
    gh.target = "_blank";
    head.appendChild(gh);
  }

  const message = document.createElement("p");
  message.className = "commit-message";
  message.textContent = record.message;
  head.appendChild(message);

  const insight = document.createElement("button");
  insight.type = "button";
  insight.className = "insight-button";
  insight.textContent = "Commit Insight";
  insight.addEventListener("click", () => deps.onOpenInsight(record.sha));
  head.appendChild(insight);
  return head;
}
