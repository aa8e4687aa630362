#!/usr/bin/env python3
"""Build the demo fixture repository, extract it, and print serve hints.

Usage: python scripts/build_demo_repo.py [TARGET_DIR]

Creates TARGET_DIR/repo (a three-commit git history exercising every
supported change type) and TARGET_DIR/data (the extracted dataset).
"""

from __future__ import annotations

import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "tests"))

from repo_fixtures import build_casestudy_repo  # noqa: E402

from changeprism.cli import main as cli_main  # noqa: E402


def main() -> int:
    target = Path(sys.argv[1]) if len(sys.argv) > 1 else ROOT / "demo"
    repo = target / "repo"
    data = target / "data"
    if repo.exists():
        print(f"error: {repo} already exists", file=sys.stderr)
        return 1
    shas = build_casestudy_repo(repo)
    print(f"built fixture repo at {repo} ({len(shas)} commits)")
    code = cli_main(["extract", "--repo", str(repo), "--out", str(data)])
    if code != 0:
        return code
    print()
    print("serve it with:")
    print(f"  changeprism serve --data {data} --repo {repo} --ui frontend/dist")
    return 0


if __name__ == "__main__":
    sys.exit(main())
