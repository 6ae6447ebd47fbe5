#!/usr/bin/env python3
"""
check_repo_consistency.py

Keeps the canonical config/ files and the packaged copies under
symquandle/data/ in sync, and checks that every packaged example loads.
Run this as a pre-commit hook or in CI.

Exit codes:
  0 = all checks pass
  1 = one or more checks failed (actionable error message printed)
"""

from __future__ import annotations

import filecmp
import subprocess
import sys
from pathlib import Path


def get_repo_root() -> Path:
    return Path(__file__).resolve().parents[1]


def check_schema_sync(repo: Path) -> list[str]:
    """Check that config/instance.schema.json is synced to symquandle/data/."""
    canonical = "config/instance.schema.json"
    packaged = "symquandle/data/instance.schema.json"
    if not (repo / canonical).exists():
        return [f"Missing canonical file: {canonical}"]
    if not (repo / packaged).exists():
        return [f"Missing packaged file: {packaged} (run: cp {canonical} {packaged})"]
    if not filecmp.cmp(repo / canonical, repo / packaged, shallow=False):
        return [f"Schema out of sync: {canonical} != {packaged}\n  Fix: cp {canonical} {packaged}"]
    return []


def check_examples_load(repo: Path) -> list[str]:
    """Every packaged example must parse as an instance config."""
    sys.path.insert(0, str(repo))
    from symquandle.config import load_instance
    from symquandle.errors import SymquandleError

    errors = []
    examples = sorted((repo / "symquandle" / "data" / "examples").glob("*.json"))
    if not examples:
        errors.append("No packaged examples under symquandle/data/examples/")
    for path in examples:
        try:
            load_instance(path)
        except (SymquandleError, ValueError) as e:
            errors.append(f"{path.name}: {e}")
    return errors


def check_compile(repo: Path) -> list[str]:
    result = subprocess.run(
        [sys.executable, "-m", "compileall", "-q", str(repo / "symquandle")],
        capture_output=True,
        text=True,
    )
    if result.returncode != 0:
        return [f"Python compile failed:\n{result.stderr or result.stdout}"]
    return []


def main() -> int:
    repo = get_repo_root()
    all_errors: list[str] = []

    print("Checking repository consistency...")

    checks = [
        ("Schema sync", check_schema_sync),
        ("Examples load", check_examples_load),
        ("Python compile", check_compile),
    ]

    for name, check_fn in checks:
        errors = check_fn(repo)
        if errors:
            print(f"\n❌ {name}:")
            for e in errors:
                print(f"   {e}")
            all_errors.extend(errors)
        else:
            print(f"✅ {name}")

    if all_errors:
        print(f"\n{'='*60}")
        print(f"FAILED: {len(all_errors)} error(s) found")
        print(f"{'='*60}")
        return 1

    print(f"\n{'='*60}")
    print("All checks passed!")
    print(f"{'='*60}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
