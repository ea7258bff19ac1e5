"""Bundled example scenes."""

from __future__ import annotations

from pathlib import Path

CORPUS_DIR = Path(__file__).parent


def scene_names() -> list[str]:
    return sorted(p.stem for p in CORPUS_DIR.glob("*.json"))


def scene_path(name: str) -> Path:
    path = CORPUS_DIR / f"{name}.json"
    if not path.exists():
        raise KeyError(f"no corpus scene named {name!r}")
    return path


def load(name: str, validate: bool = True):
    from ..pizzactl.scene import load_scene

    return load_scene(str(scene_path(name)), validate)
