"""Read-only HTTP JSON API over a saved dataset.

The dataset is loaded fully at startup; request handling never touches
the dataset directory again, and the only filesystem reads at request
time are git blob lookups for the content endpoint.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from fastapi import FastAPI, HTTPException, Query
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import PlainTextResponse
from fastapi.staticfiles import StaticFiles

from .changetypes import CHANGE_TYPES, TYPE_BY_KEY
from .dataset import layer_to_dict, load_dataset, region_to_dict
from .extraction import CommitRecord, FileRecord
from .gitrepo import read_file_at
from .spectrum import filter_layers

DEFAULT_PORT = 8077
PORT_ENV_VAR = "CHANGEPRISM_PORT"

_LOCAL_DEV_ORIGIN_REGEX = r"^https?://(localhost|127\.0\.0\.1)(:\d+)?$"


@dataclass
class ServerConfig:
    data_dir: Path
    repo_path: Path | None = None
    port: int = DEFAULT_PORT
    bind_address: str = "127.0.0.1"
    github_base: str = ""
    ui_dir: Path | None = None
    cors_origins: list[str] = field(default_factory=list)

    def __post_init__(self) -> None:
        if not 1 <= self.port <= 65535:
            raise ValueError(f"port out of range: {self.port}")


def _meta_dict(record: CommitRecord) -> dict:
    return {
        "sha": record.sha,
        "short_sha": record.short_sha,
        "author": record.author,
        "timestamp": record.timestamp,
        "message": record.message,
        "parents": list(record.parents),
    }


def _record_dict(record: CommitRecord) -> dict:
    doc = _meta_dict(record)
    doc["files"] = [_file_dict(fr) for fr in record.files]
    return doc


def _file_dict(fr: FileRecord) -> dict:
    doc = {
        "status": fr.status,
        "pre_line_count": fr.pre_line_count,
        "post_line_count": fr.post_line_count,
        "regions": [region_to_dict(r) for r in fr.regions],
        "spectrum": {
            "pre_layers": [layer_to_dict(l) for l in fr.spectrum.pre_layers],
            "post_layers": [layer_to_dict(l) for l in fr.spectrum.post_layers],
        },
        "warnings": list(fr.warnings),
    }
    if fr.path_pre is not None:
        doc["path_pre"] = fr.path_pre
    if fr.path_post is not None:
        doc["path_post"] = fr.path_post
    return doc


def _parse_types_param(raw: str | None) -> set[str]:
    if raw is None:
        return set(TYPE_BY_KEY)
    keys = {part for part in raw.split(",") if part}
    unknown = keys - TYPE_BY_KEY.keys()
    if unknown:
        raise HTTPException(400, f"unknown change type key: {', '.join(sorted(unknown))}")
    return keys


def create_app(config: ServerConfig) -> FastAPI:
    records, info = load_dataset(config.data_dir)
    by_sha = {r.sha: r for r in records}

    app = FastAPI(title="changeprism", version="0.1.0", docs_url=None, redoc_url=None)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=config.cors_origins,
        allow_origin_regex=None if config.cors_origins else _LOCAL_DEV_ORIGIN_REGEX,
        allow_methods=["GET"],
        allow_headers=["*"],
    )

    def resolve_record(sha: str) -> CommitRecord:
        if sha in by_sha:
            return by_sha[sha]
        if len(sha) >= 4:
            hits = [r for r in records if r.sha.startswith(sha)]
            if len(hits) == 1:
                return hits[0]
        raise HTTPException(404, f"unknown commit {sha}")

    def resolve_file(record: CommitRecord, path: str) -> FileRecord:
        for fr in record.files:
            if path in (fr.path_post, fr.path_pre):
                return fr
        raise HTTPException(404, f"no file {path} in commit {record.short_sha}")

    @app.get("/api/health")
    def health() -> dict:
        return {"status": "ok", "schema": info.version}

    @app.get("/api/config")
    def config_endpoint() -> dict:
        return {
            "repo_name": info.repo_name,
            "github_base": config.github_base,
            "change_types": [
                {"key": t.key, "layer_order": t.layer_order, "color": t.color}
                for t in CHANGE_TYPES
            ],
            "content_available": config.repo_path is not None,
        }

    @app.get("/api/commits")
    def commits(
        offset: int = Query(default=0, ge=0),
        limit: int = Query(default=100, ge=1, le=1000),
    ) -> dict:
        window = records[offset : offset + limit]
        return {
            "total": len(records),
            "offset": offset,
            "limit": limit,
            "commits": [_meta_dict(r) for r in window],
        }

    @app.get("/api/commits/{sha}")
    def commit(sha: str) -> dict:
        return _record_dict(resolve_record(sha))

    @app.get("/api/commits/{sha}/files/{path:path}/spectrum")
    def spectrum(sha: str, path: str, types: str | None = None) -> dict:
        record = resolve_record(sha)
        fr = resolve_file(record, path)
        enabled = _parse_types_param(types)
        filtered = filter_layers(fr.spectrum, enabled)
        doc = {
            "status": fr.status,
            "pre_line_count": filtered.pre_line_count,
            "post_line_count": filtered.post_line_count,
            "pre_layers": [layer_to_dict(l) for l in filtered.pre_layers],
            "post_layers": [layer_to_dict(l) for l in filtered.post_layers],
        }
        if fr.path_pre is not None:
            doc["path_pre"] = fr.path_pre
        if fr.path_post is not None:
            doc["path_post"] = fr.path_post
        return doc

    @app.get("/api/commits/{sha}/files/{path:path}/regions")
    def regions(sha: str, path: str) -> dict:
        record = resolve_record(sha)
        fr = resolve_file(record, path)
        return {
            "path": fr.display_path,
            "regions": [region_to_dict(r) for r in fr.regions],
        }

    @app.get("/api/commits/{sha}/files/{path:path}/content")
    def content(sha: str, path: str, side: str) -> PlainTextResponse:
        if side not in ("pre", "post"):
            raise HTTPException(404, f"unknown side {side!r}")
        record = resolve_record(sha)
        fr = resolve_file(record, path)
        if config.repo_path is None:
            raise HTTPException(404, "no repository configured for content reads")
        if side == "pre":
            if fr.path_pre is None or not record.parents:
                raise HTTPException(404, "file has no pre side")
            text = read_file_at(config.repo_path, record.parents[0], fr.path_pre)
        else:
            if fr.path_post is None:
                raise HTTPException(404, "file has no post side")
            text = read_file_at(config.repo_path, record.sha, fr.path_post)
        if text is None:
            raise HTTPException(404, f"{path} not found in repository at {side} side")
        return PlainTextResponse(text, media_type="text/plain; charset=utf-8")

    if config.ui_dir is not None and Path(config.ui_dir).is_dir():
        app.mount("/", StaticFiles(directory=config.ui_dir, html=True), name="ui")

    return app
