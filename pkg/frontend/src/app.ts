import { ApiClient, ApiError } from "./api.js";
import { Store } from "./state.js";
import type { AppConfig, CommitMeta, CommitRecord, FileEntry, Side } from "./types.js";
import { displayPath } from "./types.js";
import { renderGeneralView } from "./views/general.js";
import { renderInsightView } from "./views/insight.js";
import { renderDetailView } from "./views/detail.js";

/** Wires the API, the state store and the three views together. */
export class App {
  store!: Store;
  private config!: AppConfig;
  private commits: CommitMeta[] = [];
  private records = new Map<string, CommitRecord>();
  private contents = new Map<string, string | null>();
  private notice: string | null = null;

  constructor(
    private readonly api: ApiClient,
    private readonly root: HTMLElement,
  ) {}

  async boot(): Promise<void> {
    this.config = await this.api.config();
    this.store = new Store(this.config.change_types.map((t) => t.key));
    this.commits = (await this.api.commits()).commits;
    this.store.subscribe(() => this.render());
    this.render();
  }

  /** Map a location hash onto a view; bad routes degrade to General. */
  async route(hash: string): Promise<void> {
    const insight = hash.match(/^#\/insight\/([0-9a-f]+)$/);
    const detail = hash.match(/^#\/detail\/([0-9a-f]+)\/(.+)$/);
    try {
      if (insight) {
        await this.openInsight(insight[1]);
      } else if (detail) {
        await this.openDetail(detail[1], decodeURIComponent(detail[2]));
      } else {
        this.store.update({ activeView: "general" });
      }
    } catch (err) {
      this.notice = err instanceof ApiError && err.status === 404
        ? "That commit or file is not in the dataset."
        : `The API is unreachable: ${String(err)}`;
      this.store.update({ activeView: "general" });
    }
  }

  async selectCommit(sha: string): Promise<void> {
    try {
      await this.loadRecord(sha);
      this.notice = null;
      this.store.update({ selectedSha: sha });
    } catch (err) {
      this.notice = `Could not load commit ${sha.slice(0, 7)}: ${String(err)}`;
      this.render();
    }
  }

  async openInsight(sha: string): Promise<void> {
    await this.loadRecord(sha);
    this.notice = null;
    this.store.update({ selectedSha: sha, activeView: "insight" });
  }

  async openDetail(sha: string, path: string): Promise<void> {
    const record = await this.loadRecord(sha);
    const file = record.files.find(
      (f) => f.path_post === path || f.path_pre === path,
    );
    if (!file) {
      throw new ApiError(404, `no file ${path}`);
    }
    await Promise.all([
      this.loadContent(record, file, "pre"),
      this.loadContent(record, file, "post"),
    ]);
    this.notice = null;
    this.store.update({ selectedSha: sha, activeView: "detail", detailFile: path });
  }

  private async loadRecord(sha: string): Promise<CommitRecord> {
    const cached = this.records.get(sha);
    if (cached) {
      return cached;
    }
    const record = await this.api.commit(sha);
    this.records.set(record.sha, record);
    this.records.set(sha, record);
    return record;
  }

  private contentKey(sha: string, file: FileEntry, side: Side): string {
    return `${sha}:${displayPath(file)}:${side}`;
  }

  private async loadContent(
    record: CommitRecord,
    file: FileEntry,
    side: Side,
  ): Promise<void> {
    const key = this.contentKey(record.sha, file, side);
    if (this.contents.has(key)) {
      return;
    }
    const pathOnSide = side === "pre" ? file.path_pre : file.path_post;
    if (!pathOnSide) {
      this.contents.set(key, null);
      return;
    }
    this.contents.set(key, await this.api.content(record.sha, displayPath(file), side));
  }

  render(): void {
    const state = this.store.get();
    const children: HTMLElement[] = [];
    if (this.notice) {
      const banner = document.createElement("div");
      banner.className = "banner";
      banner.textContent = this.notice;
      children.push(banner);
    }

    const record = state.selectedSha
      ? this.records.get(state.selectedSha) ?? null
      : null;

    if (state.activeView === "insight" && record) {
      children.push(
        renderInsightView({
          config: this.config,
          record,
          store: this.store,
          onOpenDetail: (sha, path) => {
            window.location.hash = `#/detail/${sha}/${encodeURIComponent(path)}`;
          },
          onBack: () => {
            window.location.hash = "#/";
          },
        }),
      );
    } else if (state.activeView === "detail" && record && state.detailFile) {
      const file = record.files.find(
        (f) => f.path_post === state.detailFile || f.path_pre === state.detailFile,
      );
      if (file) {
        children.push(
          renderDetailView({
            config: this.config,
            record,
            file,
            preText: this.contents.get(this.contentKey(record.sha, file, "pre")) ?? null,
            postText: this.contents.get(this.contentKey(record.sha, file, "post")) ?? null,
            store: this.store,
          }),
        );
      }
    } else {
      children.push(
        renderGeneralView({
          config: this.config,
          commits: this.commits,
          record,
          store: this.store,
          onSelect: (sha) => void this.selectCommit(sha),
          onOpenInsight: (sha) => {
            window.location.hash = `#/insight/${sha}`;
          },
          onOpenDetail: (sha, path) => {
            window.location.hash = `#/detail/${sha}/${encodeURIComponent(path)}`;
          },
        }),
      );
    }
    this.root.replaceChildren(...children);
  }
}

export async function main(): Promise<void> {
  const root = document.getElementById("app");
  if (!root) {
    throw new Error("missing #app element");
  }
  const app = new App(new ApiClient(""), root);
  await app.boot();
  window.addEventListener("hashchange", () => void app.route(window.location.hash));
  await app.route(window.location.hash);
}
