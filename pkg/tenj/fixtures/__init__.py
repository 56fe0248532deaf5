"""Shipped triangulations and category files."""

from pathlib import Path

FIXTURE_DIR = Path(__file__).resolve().parent

COMPLEXES = ("boundary_delta5.json", "s1xs3_staircase.json", "cp2_kuhnel9.json")


def fixture_path(name: str) -> Path:
    path = FIXTURE_DIR / name
    if not path.exists():
        raise FileNotFoundError(f"no shipped fixture named {name!r}")
    return path
