import type { ChangeTypeInfo } from "./types.js";
import type { Store } from "./state.js";

const GROUPS: [string, string[]][] = [
  ["Textual", ["modification", "addition", "removal"]],
  ["Refactorings", ["class_refactoring", "method_refactoring", "statement_refactoring"]],
  ["Micro-changes", ["micro_change"]],
];

const LABELS: Record<string, string> = {
  modification: "Modification",
  addition: "Addition",
  removal: "Removal",
  class_refactoring: "Class-level refactoring",
  method_refactoring: "Method-level refactoring",
  statement_refactoring: "Statement-level refactoring",
  micro_change: "Micro-change",
};

/** The seven type checkboxes, grouped; the one filter all views share. */
export function renderFilterPanel(
  changeTypes: ChangeTypeInfo[],
  store: Store,
): HTMLElement {
  const colors = new Map(changeTypes.map((t) => [t.key, t.color]));
  const panel = document.createElement("div");
  panel.className = "filter-panel";
  const enabled = store.get().enabledTypes;
  for (const [groupName, keys] of GROUPS) {
    const group = document.createElement("fieldset");
    group.className = "filter-group";
    const legend = document.createElement("legend");
    legend.textContent = groupName;
    group.appendChild(legend);
    for (const key of keys) {
      const label = document.createElement("label");
      label.className = "filter-item";
      const box = document.createElement("input");
      box.type = "checkbox";
      box.checked = enabled.has(key);
      box.dataset.typeKey = key;
      box.addEventListener("change", () => store.toggleType(key));
      const swatch = document.createElement("span");
      swatch.className = "swatch";
      swatch.style.background = colors.get(key) ?? "#888";
      label.append(box, swatch, LABELS[key] ?? key);
      group.appendChild(label);
    }
    panel.appendChild(group);
  }
  return panel;
}
