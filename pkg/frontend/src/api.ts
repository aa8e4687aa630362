import type { AppConfig, CommitRecord, CommitsPage, Region, Side } from "./types.js";

export class ApiError extends Error {
  constructor(readonly status: number, message: string) {
    super(message);
  }
}

export class ApiClient {
  constructor(private readonly baseUrl: string = "") {}

  private async getJson<T>(path: string): Promise<T> {
    const resp = await fetch(this.baseUrl + path, { headers: { Accept: "application/json" } });
    if (!resp.ok) {
      throw new ApiError(resp.status, `${path} answered ${resp.status}`);
    }
    return (await resp.json()) as T;
  }

  config(): Promise<AppConfig> {
    return this.getJson("/api/config");
  }

  commits(offset = 0, limit = 500): Promise<CommitsPage> {
    return this.getJson(`/api/commits?offset=${offset}&limit=${limit}`);
  }

  commit(sha: string): Promise<CommitRecord> {
    return this.getJson(`/api/commits/${encodeURIComponent(sha)}`);
  }

  regions(sha: string, path: string): Promise<{ path: string; regions: Region[] }> {
    return this.getJson(
      `/api/commits/${encodeURIComponent(sha)}/files/${encodeURIComponent(path)}/regions`,
    );
  }

  async content(sha: string, path: string, side: Side): Promise<string | null> {
    const url =
      `${this.baseUrl}/api/commits/${encodeURIComponent(sha)}` +
      `/files/${encodeURIComponent(path)}/content?side=${side}`;
    const resp = await fetch(url);
    if (resp.status === 404) {
      return null;
    }
    if (!resp.ok) {
      throw new ApiError(resp.status, `content answered ${resp.status}`);
    }
    return resp.text();
  }
}
