export type ViewName = "general" | "insight" | "detail";

export interface ViewState {
  selectedSha: string | null;
  enabledTypes: Set<string>;
  activeView: ViewName;
  detailFile: string | null;
}

export type Listener = (state: ViewState) => void;

/** Single source of truth for the filter checkboxes and navigation. */
export class Store {
  private state: ViewState;
  private listeners: Listener[] = [];

  constructor(allTypeKeys: string[]) {
    this.state = {
      selectedSha: null,
      enabledTypes: new Set(allTypeKeys),
      activeView: "general",
      detailFile: null,
    };
  }

  get(): ViewState {
    return this.state;
  }

  subscribe(listener: Listener): () => void {
    this.listeners.push(listener);
    return () => {
      this.listeners = this.listeners.filter((l) => l !== listener);
    };
  }

  update(partial: Partial<ViewState>): void {
    const next = { ...this.state, ...partial };
    if (partial.enabledTypes) {
      next.enabledTypes = new Set(partial.enabledTypes);
    }
    // The detail view is undefined without a commit and a file.
    if (next.activeView === "detail" && (!next.selectedSha || !next.detailFile)) {
      next.activeView = "general";
      next.detailFile = null;
    }
    this.state = next;
    for (const listener of [...this.listeners]) {
      listener(this.state);
    }
  }

  toggleType(key: string): void {
    const enabled = new Set(this.state.enabledTypes);
    if (enabled.has(key)) {
      enabled.delete(key);
    } else {
      enabled.add(key);
    }
    this.update({ enabledTypes: enabled });
  }
}
