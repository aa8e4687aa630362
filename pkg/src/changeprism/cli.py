"""Command line entry points: extract, serve, import-refactorings."""

from __future__ import annotations

import argparse
import os
import socket
import sys
from pathlib import Path

from .dataset import (
    DatasetError,
    import_refactorings_json,
    save_dataset,
)
from .extraction import ExtractConfig, extract_history
from .gitrepo import GitError
from .server import DEFAULT_PORT, PORT_ENV_VAR, ServerConfig, create_app


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="changeprism",
        description="Extract, classify and serve semantic code changes from git history.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    extract = sub.add_parser("extract", help="analyze a repository into a dataset")
    extract.add_argument("--repo", required=True, help="path to the git repository")
    extract.add_argument("--out", default="./changeprism-data", help="dataset directory")
    extract.add_argument("--branch", default=None, help="branch to walk (default: HEAD)")
    extract.add_argument("--limit", type=int, default=None, help="newest N commits only")
    extract.add_argument(
        "--ext", default="java", help="comma-separated extension allowlist"
    )

    serve = sub.add_parser("serve", help="serve a dataset over HTTP")
    serve.add_argument("--data", required=True, help="dataset directory")
    serve.add_argument("--repo", default=None, help="repository for file content reads")
    serve.add_argument("--port", type=int, default=None, help=f"TCP port (default {DEFAULT_PORT})")
    serve.add_argument("--bind", default="127.0.0.1", help="bind address")
    serve.add_argument("--github-base", default="", help="base URL for commit links")
    serve.add_argument("--ui", default=None, help="static UI bundle directory")
    serve.add_argument(
        "--cors-origin", action="append", default=[],
        help="allowed CORS origin (repeatable; default: localhost only)",
    )

    imp = sub.add_parser(
        "import-refactorings", help="merge RefactoringMiner JSON output into a dataset"
    )
    imp.add_argument("--data", required=True, help="dataset directory")
    imp.add_argument("--json", required=True, dest="json_path", help="RefactoringMiner output file")
    return parser


def resolve_port(flag_value: int | None, env: dict[str, str] | None = None) -> int:
    if flag_value is not None:
        return flag_value
    env = os.environ if env is None else env
    raw = env.get(PORT_ENV_VAR, "")
    if raw:
        try:
            return int(raw)
        except ValueError:
            raise ValueError(f"{PORT_ENV_VAR} is not a number: {raw!r}")
    return DEFAULT_PORT


def _cmd_extract(args: argparse.Namespace) -> int:
    repo = Path(args.repo)
    extensions = tuple(e.strip() for e in args.ext.split(",") if e.strip())
    config = ExtractConfig(extensions=extensions)
    try:
        records = []
        for record in extract_history(repo, branch=args.branch, limit=args.limit, config=config):
            records.append(record)
            n_regions = sum(len(fr.regions) for fr in record.files)
            subject = record.message.splitlines()[0] if record.message else ""
            print(
                f"{record.short_sha}  {len(record.files):3d} files  "
                f"{n_regions:4d} regions  {subject}"
            )
        info = save_dataset(Path(args.out), records, repo_name=repo.resolve().name)
    except (GitError, DatasetError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(f"wrote {info.commit_count} commits to {args.out}")
    return 0


def _port_available(bind: str, port: int) -> bool:
    with socket.socket(socket.AF_INET, socket.SOCK_STREAM) as probe:
        probe.setsockopt(socket.SOL_SOCKET, socket.SO_REUSEADDR, 1)
        try:
            probe.bind((bind, port))
        except OSError:
            return False
    return True


def _cmd_serve(args: argparse.Namespace) -> int:
    try:
        port = resolve_port(args.port)
        config = ServerConfig(
            data_dir=Path(args.data),
            repo_path=Path(args.repo) if args.repo else None,
            port=port,
            bind_address=args.bind,
            github_base=args.github_base,
            ui_dir=Path(args.ui) if args.ui else None,
            cors_origins=list(args.cors_origin),
        )
        app = create_app(config)
    except (DatasetError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if not _port_available(config.bind_address, config.port):
        print(f"error: port {config.port} is busy on {config.bind_address}", file=sys.stderr)
        return 1

    import uvicorn

    uvicorn.run(app, host=config.bind_address, port=config.port, log_level="warning")
    return 0


def _cmd_import(args: argparse.Namespace) -> int:
    try:
        summary = import_refactorings_json(Path(args.data), Path(args.json_path))
    except DatasetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(f"imported {summary.imported} findings")
    for warning in summary.warnings:
        print(f"warning: {warning}", file=sys.stderr)
    if summary.skipped_types:
        skipped = ", ".join(f"{k} x{v}" for k, v in sorted(summary.skipped_types.items()))
        print(f"skipped unmapped types: {skipped}", file=sys.stderr)
    return 0


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "extract":
        return _cmd_extract(args)
    if args.command == "serve":
        return _cmd_serve(args)
    return _cmd_import(args)


if __name__ == "__main__":
    sys.exit(main())
