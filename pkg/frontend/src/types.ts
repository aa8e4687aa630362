// Payload shapes of the HTTP API. The UI derives every color and
// classification from these; it never re-computes analysis results.

export type Side = "pre" | "post";

export interface CommitMeta {
  sha: string;
  short_sha: string;
  author: string;
  timestamp: number;
  message: string;
  parents: string[];
}

export interface CommitsPage {
  total: number;
  offset: number;
  limit: number;
  commits: CommitMeta[];
}

export interface Region {
  side: Side;
  start_line: number;
  end_line: number;
  change_type: string;
  labels: string[];
}

export interface Layer {
  change_type: string;
  offset: number;
  height: number;
  region_index: number;
}

export interface SpectrumPair {
  pre_layers: Layer[];
  post_layers: Layer[];
}

export interface FileEntry {
  path_pre?: string;
  path_post?: string;
  status: "added" | "deleted" | "modified" | "renamed";
  pre_line_count: number;
  post_line_count: number;
  regions: Region[];
  spectrum: SpectrumPair;
  warnings: string[];
}

export interface CommitRecord extends CommitMeta {
  files: FileEntry[];
}

export interface ChangeTypeInfo {
  key: string;
  layer_order: number;
  color: string;
}

export interface AppConfig {
  repo_name: string;
  github_base: string;
  change_types: ChangeTypeInfo[];
  content_available: boolean;
}

export function displayPath(file: FileEntry): string {
  return file.path_post ?? file.path_pre ?? "";
}
