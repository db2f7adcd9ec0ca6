"""Bundled catalog of named lattices, semigroups, and identity files."""

from __future__ import annotations

import json
from importlib import resources

from . import lattice as lat
from . import semigroup as sgp
from . import words as W

LATTICE_NAMES = (
    "chain2",
    "chain3",
    "chain4",
    "chain5",
    "boolean2",
    "boolean3",
    "M3",
    "N5",
    "partition4",
)

SEMIGROUP_NAMES = ("T1", "SL2", "ZM2", "ZM3", "N3", "N4", "B2")

NIL_SEMIGROUP_NAMES = ("ZM2", "ZM3", "N3", "N4")


def _data(*parts) -> str:
    path = resources.files("lattice_forge").joinpath("data", *parts)
    return path.read_text(encoding="utf-8")


def load_lattice(name: str) -> lat.FiniteLattice:
    return lat.from_json(json.loads(_data("lattices", f"{name}.json")))


def load_semigroup(name: str) -> sgp.FiniteSemigroup:
    return sgp.from_json(json.loads(_data("semigroups", f"{name}.json")))


def identity_file_names() -> tuple[str, ...]:
    root = resources.files("lattice_forge").joinpath("data", "identities")
    return tuple(sorted(p.name[: -len(".ids")] for p in root.iterdir() if p.name.endswith(".ids")))


def load_identities(name: str) -> list[W.Identity]:
    return W.parse_identity_file(_data("identities", f"{name}.ids"))


def all_lattices() -> dict[str, lat.FiniteLattice]:
    return {name: load_lattice(name) for name in LATTICE_NAMES}


def all_semigroups() -> dict[str, sgp.FiniteSemigroup]:
    return {name: load_semigroup(name) for name in SEMIGROUP_NAMES}


def semigroup_dir():
    """Filesystem path of the bundled semigroup files (for CLI defaults)."""
    return resources.files("lattice_forge").joinpath("data", "semigroups")
