from __future__ import annotations

import os
from dataclasses import dataclass
from pathlib import Path


@dataclass(frozen=True)
class Paths:
    # Unprivileged CLI state (logs)
    state_dir: str

    @property
    def log_dir(self) -> str:
        return os.path.join(self.state_dir, "logs")

    @property
    def log_file(self) -> str:
        return os.path.join(self.log_dir, "symquandle.log")


def default_paths() -> Paths:
    override = os.environ.get("SYMQUANDLE_STATE_DIR")
    if override:
        return Paths(state_dir=override)

    xdg_state = os.environ.get("XDG_STATE_HOME")
    if xdg_state:
        state_dir = os.path.join(xdg_state, "symquandle")
    else:
        state_dir = os.path.join(os.path.expanduser("~"), ".local", "state", "symquandle")
    return Paths(state_dir=state_dir)


def _data_file(*parts: str) -> Path | None:
    """Locate a packaged data file, installed or from a source checkout."""
    try:
        import importlib.resources as resources

        candidate = resources.files("symquandle.data").joinpath(*parts)
        if candidate.is_file():
            return Path(str(candidate))
    except (ImportError, ModuleNotFoundError, FileNotFoundError, TypeError):
        pass

    # Source checkout: symquandle/core/paths.py -> symquandle/data/
    here = Path(__file__).resolve()
    local = here.parents[1] / "data" / Path(*parts)
    if local.is_file():
        return local
    return None


def get_schema_path() -> str:
    """Path to instance.schema.json.

    Priority:
    1. SYMQUANDLE_DEV_REPO env var (repo copy under config/)
    2. Package data
    """
    dev_repo = os.environ.get("SYMQUANDLE_DEV_REPO")
    if dev_repo:
        dev_path = Path(dev_repo) / "config" / "instance.schema.json"
        if dev_path.exists():
            return str(dev_path)

    found = _data_file("instance.schema.json")
    if found is None:
        raise FileNotFoundError("Cannot find instance.schema.json; is the package installed properly?")
    return str(found)


def example_config_path(name: str) -> str:
    """Path to a packaged example instance, e.g. ``z9_example.json``."""
    if not name.endswith(".json"):
        name = f"{name}.json"
    found = _data_file("examples", name)
    if found is None:
        raise FileNotFoundError(f"no packaged example named {name!r}")
    return str(found)


def list_example_configs() -> list[str]:
    found = _data_file("examples", "z9_example.json")
    if found is None:
        return []
    return sorted(p.name for p in found.parent.glob("*.json"))
