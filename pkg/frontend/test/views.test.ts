import { describe, expect, it, vi } from "vitest";

import { App } from "../src/app.js";
import { ApiClient } from "../src/api.js";
import { orderByKey, visibleTypes } from "../src/visible.js";
import type { AppConfig, CommitRecord } from "../src/types.js";

import configFixture from "./fixtures/config.json";
import commitsFixture from "./fixtures/commits.json";
import commit1Fixture from "./fixtures/commit1.json";
import commit2Fixture from "./fixtures/commit2.json";
import commit3Fixture from "./fixtures/commit3.json";
// @ts-expect-error vite raw import
import preText from "./fixtures/content_c2_pre.txt?raw";
// @ts-expect-error vite raw import
import postText from "./fixtures/content_c2_post.txt?raw";

const config = configFixture as AppConfig;
const commit2 = commit2Fixture as CommitRecord;
const SHA1 = (commit1Fixture as CommitRecord).sha;
const SHA2 = commit2.sha;
const SHA3 = (commit3Fixture as CommitRecord).sha;
const PATH = "src/registry/HandlerRegistry.java";
const ORDER = orderByKey(config.change_types);

function json(body: unknown): Response {
  return new Response(JSON.stringify(body), {
    status: 200,
    headers: { "content-type": "application/json" },
  });
}

function installFetchMock(): void {
  vi.stubGlobal(
    "fetch",
    vi.fn(async (input: RequestInfo | URL) => {
      const url = String(input);
      if (url.includes("/api/config")) return json(config);
      if (url.includes("/api/commits?")) return json(commitsFixture);
      if (url.includes(`/api/commits/${SHA1}/`) || url.endsWith(SHA1)) {
        if (url.includes("/content")) {
          return url.includes("side=post")
            ? new Response("irrelevant", { status: 200 })
            : new Response("nope", { status: 404 });
        }
        return json(commit1Fixture);
      }
      if (url.includes(`/api/commits/${SHA2}`)) {
        if (url.includes("/content")) {
          if (url.includes("side=pre")) return new Response(preText, { status: 200 });
          if (url.includes("side=post")) return new Response(postText, { status: 200 });
        }
        return json(commit2Fixture);
      }
      if (url.includes(`/api/commits/${SHA3}`)) return json(commit3Fixture);
      return new Response(JSON.stringify({ detail: "not found" }), { status: 404 });
    }),
  );
}

async function bootApp(): Promise<{ app: App; root: HTMLElement }> {
  installFetchMock();
  document.body.innerHTML = '<div id="app"></div>';
  const root = document.getElementById("app")!;
  const app = new App(new ApiClient(""), root);
  await app.boot();
  return { app, root };
}

function domLineTypes(root: HTMLElement, side: "pre" | "post"): (string | null)[] {
  const pane = root.querySelector(`.pane-${side}`)!;
  return Array.from(pane.querySelectorAll(".code-line")).map((el) => {
    const match = Array.from(el.classList).find((c) => c.startsWith("line-"));
    return match ? match.slice("line-".length) : null;
  });
}

function spectrumKeys(scope: Element, side: "pre" | "post"): string[] {
  return Array.from(scope.querySelectorAll(`.spectrum-${side} .layer`)).map((el) => {
    const match = Array.from(el.classList).find((c) => c.startsWith("type-"));
    return match!.slice("type-".length);
  });
}

function toggleType(root: HTMLElement, key: string): void {
  const box = root.querySelector<HTMLInputElement>(`input[data-type-key="${key}"]`)!;
  box.click();
}

describe("general view", () => {
  it("shows one timeline circle per commit, chronological", async () => {
    const { root } = await bootApp();
    const items = root.querySelectorAll(".commit-item");
    expect(items).toHaveLength(3);
    expect(items[0].querySelector(".commit-label")!.textContent).toBe(SHA1.slice(0, 7));
    expect(items[2].querySelector(".commit-label")!.textContent).toBe(SHA3.slice(0, 7));
  });

  it("selecting a commit fills the panel without leaving the view", async () => {
    const { app, root } = await bootApp();
    expect(root.querySelector(".commit-panel .hint")).not.toBeNull();
    await app.selectCommit(SHA2);
    expect(app.store.get().activeView).toBe("general");
    expect(root.querySelector(".sha-link")!.textContent).toBe(SHA2);
    expect(root.querySelector(".file-path")!.textContent).toBe(PATH);
    const gh = root.querySelector<HTMLAnchorElement>(".github-link")!;
    expect(gh.href).toBe(`${config.github_base}/commit/${SHA2}`);
  });

  it("unchecking every type empties the mini-maps", async () => {
    const { app, root } = await bootApp();
    await app.selectCommit(SHA2);
    for (const t of config.change_types) {
      toggleType(root, t.key);
    }
    expect(root.querySelectorAll(".file-row .layer")).toHaveLength(0);
  });

  it("routes with an unknown sha fall back to general with a banner", async () => {
    const { app, root } = await bootApp();
    await app.route("#/insight/abcdef0123");
    expect(app.store.get().activeView).toBe("general");
    expect(root.querySelector(".banner")).not.toBeNull();
    expect(root.querySelector(".timeline")).not.toBeNull();
  });
});

describe("insight view", () => {
  it("renders one spectrum pair per changed file", async () => {
    const { app, root } = await bootApp();
    await app.openInsight(SHA2);
    const cards = root.querySelectorAll(".insight-card");
    expect(cards).toHaveLength(commit2.files.length);
    expect(root.querySelectorAll(".insight-card .spectrum-pair")).toHaveLength(1);
  });

  it("filter toggles mirror the served spectrum layers", async () => {
    const { app, root } = await bootApp();
    await app.openInsight(SHA2);
    toggleType(root, "modification");
    toggleType(root, "method_refactoring");
    const enabled = app.store.get().enabledTypes;
    const card = root.querySelector(".insight-card")!;
    const expected = commit2.files[0].spectrum.post_layers
      .filter((l) => enabled.has(l.change_type))
      .map((l) => l.change_type);
    expect(spectrumKeys(card, "post")).toEqual(expected);
  });
});

describe("detail view (headless view-consistency criterion)", () => {
  it("per-line classes equal the API visible-type computation for 3 filter states", async () => {
    const { app, root } = await bootApp();
    await app.openDetail(SHA2, PATH);
    const file = commit2.files[0];

    // State 1: everything enabled.
    let enabled = app.store.get().enabledTypes;
    expect(domLineTypes(root, "pre")).toEqual(
      visibleTypes(file.regions, enabled, "pre", file.pre_line_count, ORDER),
    );
    expect(domLineTypes(root, "post")).toEqual(
      visibleTypes(file.regions, enabled, "post", file.post_line_count, ORDER),
    );

    // State 2: micro-changes disabled.
    toggleType(root, "micro_change");
    enabled = app.store.get().enabledTypes;
    expect(enabled.has("micro_change")).toBe(false);
    expect(domLineTypes(root, "post")).toEqual(
      visibleTypes(file.regions, enabled, "post", file.post_line_count, ORDER),
    );

    // State 3: only modification enabled.
    for (const t of config.change_types) {
      const box = root.querySelector<HTMLInputElement>(`input[data-type-key="${t.key}"]`)!;
      if (box.checked !== (t.key === "modification")) {
        box.click();
      }
    }
    enabled = app.store.get().enabledTypes;
    expect([...enabled]).toEqual(["modification"]);
    expect(domLineTypes(root, "pre")).toEqual(
      visibleTypes(file.regions, enabled, "pre", file.pre_line_count, ORDER),
    );
    expect(domLineTypes(root, "post")).toEqual(
      visibleTypes(file.regions, enabled, "post", file.post_line_count, ORDER),
    );
  });

  it("disabling micro_change recolors the overlapped guard line to modification", async () => {
    const { app, root } = await bootApp();
    await app.openDetail(SHA2, PATH);
    expect(domLineTypes(root, "post")[12]).toBe("micro_change"); // line 13
    toggleType(root, "micro_change");
    expect(domLineTypes(root, "post")[12]).toBe("modification");
  });

  it("tooltips carry the region labels", async () => {
    const { app, root } = await bootApp();
    await app.openDetail(SHA2, PATH);
    const post = root.querySelector(".pane-post")!;
    const line13 = post.querySelectorAll(".code-line")[12] as HTMLElement;
    expect(line13.title).toBe(
      "Add Method Modifier, Encapsulate In Condition, Insert Condition Block",
    );
    const pre = root.querySelector(".pane-pre")!;
    const line8 = pre.querySelectorAll(".code-line")[7] as HTMLElement;
    expect(line8.title).toBe("Add Attribute Modifier");
  });

  it("an added file renders an empty pre pane with a notice", async () => {
    const { app, root } = await bootApp();
    await app.openDetail(SHA1, PATH);
    expect(root.querySelector(".pane-pre .pane-empty")).not.toBeNull();
    expect(root.querySelector(".pane-post .pane-empty")).toBeNull();
  });

  it("line text matches the served file content", async () => {
    const { app, root } = await bootApp();
    await app.openDetail(SHA2, PATH);
    const post = root.querySelector(".pane-post")!;
    const line8 = post.querySelectorAll(".code-line")[7];
    expect(line8.querySelector(".line-text")!.textContent).toBe(
      "    private volatile List<String> generated = null;",
    );
  });
});

describe("cross-view consistency", () => {
  it("a single toggle drives identical visible sets in all three views", async () => {
    const { app, root } = await bootApp();
    await app.openDetail(SHA2, PATH);
    toggleType(root, "micro_change");
    const enabled = app.store.get().enabledTypes;
    const file = commit2.files[0];
    const expectedPost = file.spectrum.post_layers
      .filter((l) => enabled.has(l.change_type))
      .map((l) => l.change_type);

    // Detail: center spectrum pair.
    expect(spectrumKeys(root.querySelector(".detail-center")!, "post")).toEqual(expectedPost);
    const detailVisible = domLineTypes(root, "post");
    expect(detailVisible).toEqual(
      visibleTypes(file.regions, enabled, "post", file.post_line_count, ORDER),
    );

    // Insight: same enabled set, same layers.
    await app.openInsight(SHA2);
    const card = root.querySelector(".insight-card")!;
    expect(spectrumKeys(card, "post")).toEqual(expectedPost);
    expect(
      root.querySelector<HTMLInputElement>('input[data-type-key="micro_change"]')!.checked,
    ).toBe(false);

    // General: same layers again in the selected-commit panel.
    app.store.update({ activeView: "general" });
    const row = root.querySelector(".file-row")!;
    expect(spectrumKeys(row, "post")).toEqual(expectedPost);
  });
});
