"""Validated finite lattices.

A lattice is built from named elements and cover pairs.  Construction
computes the reflexive-transitive closure of the covers, then the full
join and meet tables, failing with a typed error if any pair lacks a
unique least upper / greatest lower bound or if the bounds are missing.
All arrays are frozen after construction; instances are safe to share.

File format (JSON)::

    {"elements": ["0", "a", "b", "1"],
     "covers": [["0", "a"], ["0", "b"], ["a", "1"], ["b", "1"]]}
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

MAX_ELEMENTS = 64


class LatticeError(Exception):
    """Base class for lattice construction failures."""


class BadNameError(LatticeError):
    pass


class DuplicateNameError(LatticeError):
    pass


class UnknownNameError(LatticeError):
    pass


class CycleError(LatticeError):
    pass


class NoBoundError(LatticeError):
    """A pair (or the whole lattice) has no upper/lower bound at all."""

    def __init__(self, message: str, pair: tuple[int, int] | None = None):
        super().__init__(message)
        self.pair = pair


class NotALatticeError(LatticeError):
    """Common bounds exist but no least/greatest one."""

    def __init__(self, message: str, pair: tuple[int, int]):
        super().__init__(message)
        self.pair = pair


class SizeLimitError(LatticeError):
    pass


@dataclass(frozen=True)
class CoverInput:
    """Raw construction data: element names plus (lower, upper) cover pairs."""

    elements: tuple[str, ...]
    covers: tuple[tuple[str, str], ...]

    @staticmethod
    def from_json(data: dict) -> "CoverInput":
        return CoverInput(
            elements=tuple(data["elements"]),
            covers=tuple((str(lo), str(hi)) for lo, hi in data["covers"]),
        )

    def to_json(self) -> dict:
        return {
            "elements": list(self.elements),
            "covers": [[lo, hi] for lo, hi in self.covers],
        }


@dataclass(frozen=True, eq=False)
class FiniteLattice:
    """Immutable finite lattice over dense indices 0..n-1.

    ``leq`` is the full order matrix; ``join`` and ``meet`` are precomputed
    index tables, so every classifier is plain table lookups.
    """

    n: int
    names: tuple[str, ...]
    leq: np.ndarray
    join: np.ndarray
    meet: np.ndarray
    bottom: int
    top: int
    _index: dict = field(repr=False)

    def __eq__(self, other):
        if not isinstance(other, FiniteLattice):
            return NotImplemented
        return self.names == other.names and bool((self.leq == other.leq).all())

    def __hash__(self):
        return hash((self.names, self.leq.tobytes()))

    def _check(self, x: int):
        if not 0 <= x < self.n:
            raise IndexError(f"element index {x} out of range 0..{self.n - 1}")

    def le(self, x: int, y: int) -> bool:
        self._check(x)
        self._check(y)
        return bool(self.leq[x, y])

    def join_of(self, x: int, y: int) -> int:
        self._check(x)
        self._check(y)
        return int(self.join[x, y])

    def meet_of(self, x: int, y: int) -> int:
        self._check(x)
        self._check(y)
        return int(self.meet[x, y])

    def atoms(self) -> list[int]:
        """Elements covering the bottom: down-set of size exactly two."""
        return [x for x in range(self.n) if x != self.bottom and self.leq[:, x].sum() == 2]

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise UnknownNameError(f"no element named {name!r}") from None

    def name(self, x: int) -> str:
        self._check(x)
        return self.names[x]

    def covers(self) -> list[tuple[int, int]]:
        """Cover pairs (lower, upper), sorted by index."""
        lt = self.leq & ~np.eye(self.n, dtype=bool)
        child = lt & ~(lt @ lt)
        return [(int(a), int(b)) for a, b in np.argwhere(child)]


def _transitive_closure(cov: np.ndarray) -> np.ndarray:
    leq = cov | np.eye(len(cov), dtype=bool)
    while True:
        nxt = leq | (leq @ leq)
        if (nxt == leq).all():
            return nxt
        leq = nxt


def _bound_tables(leq: np.ndarray):
    """Join and meet tables; raises when a pair has no (unique least) bound."""
    n = len(leq)
    join = np.zeros((n, n), dtype=np.int64)
    meet = np.zeros((n, n), dtype=np.int64)
    for x in range(n):
        join[x, x] = meet[x, x] = x
        for y in range(x + 1, n):
            uppers = leq[x] & leq[y]
            cnt = int(uppers.sum())
            if cnt == 0:
                raise NoBoundError(f"elements {x} and {y} have no common upper bound", (x, y))
            for c in np.flatnonzero(uppers):
                if (leq[c] & uppers).sum() == cnt:
                    join[x, y] = join[y, x] = c
                    break
            else:
                raise NotALatticeError(f"elements {x} and {y} have no least upper bound", (x, y))
            lowers = leq[:, x] & leq[:, y]
            cnt = int(lowers.sum())
            if cnt == 0:
                raise NoBoundError(f"elements {x} and {y} have no common lower bound", (x, y))
            for c in np.flatnonzero(lowers):
                if (lowers & leq[:, c]).sum() == cnt:
                    meet[x, y] = meet[y, x] = c
                    break
            else:
                raise NotALatticeError(f"elements {x} and {y} have no greatest lower bound", (x, y))
    return join, meet


def from_order(names, leq: np.ndarray) -> FiniteLattice:
    """Build from a full order matrix (assumed reflexive/antisymmetric/transitive)."""
    names = tuple(names)
    n = len(names)
    if n == 0:
        raise NoBoundError("an empty lattice has no bounds")
    if n > MAX_ELEMENTS:
        raise SizeLimitError(f"at most {MAX_ELEMENTS} elements supported, got {n}")
    leq = np.asarray(leq, dtype=bool)
    join, meet = _bound_tables(leq)
    bottoms = np.flatnonzero(leq.all(axis=1))
    tops = np.flatnonzero(leq.all(axis=0))
    if len(bottoms) != 1 or len(tops) != 1:
        raise NoBoundError("lattice must have a unique bottom and top")
    leq = leq.copy()
    for arr in (leq, join, meet):
        arr.flags.writeable = False
    return FiniteLattice(
        n=n,
        names=names,
        leq=leq,
        join=join,
        meet=meet,
        bottom=int(bottoms[0]),
        top=int(tops[0]),
        _index={name: idx for idx, name in enumerate(names)},
    )


def build(cover_input: CoverInput) -> FiniteLattice:
    """Validate names and covers, close the order, and compute the tables."""
    names = tuple(cover_input.elements)
    seen = set()
    for name in names:
        if not isinstance(name, str) or not name:
            raise BadNameError(f"element names must be non-empty strings, got {name!r}")
        if name in seen:
            raise DuplicateNameError(f"duplicate element name {name!r}")
        seen.add(name)
    n = len(names)
    if n == 0:
        raise NoBoundError("an empty lattice has no bounds")
    if n > MAX_ELEMENTS:
        raise SizeLimitError(f"at most {MAX_ELEMENTS} elements supported, got {n}")
    index = {name: idx for idx, name in enumerate(names)}

    cov = np.zeros((n, n), dtype=bool)
    for lo, hi in cover_input.covers:
        if lo not in index:
            raise UnknownNameError(f"cover mentions unknown element {lo!r}")
        if hi not in index:
            raise UnknownNameError(f"cover mentions unknown element {hi!r}")
        if lo == hi:
            raise CycleError(f"self-cover on {lo!r}")
        cov[index[lo], index[hi]] = True

    # Kahn toposort detects cycles before closing the order.
    indeg = cov.sum(axis=0)
    queue = [x for x in range(n) if indeg[x] == 0]
    seen_count = 0
    while queue:
        x = queue.pop()
        seen_count += 1
        for y in np.flatnonzero(cov[x]):
            indeg[y] -= 1
            if indeg[y] == 0:
                queue.append(int(y))
    if seen_count != n:
        raise CycleError("cover relation contains a cycle")

    return from_order(names, _transitive_closure(cov))


def axiom_failures(L: FiniteLattice) -> list[str]:
    """Re-check the lattice axioms directly; empty list means all hold."""
    failures = []
    leq, join, meet = L.leq, L.join, L.meet
    n = L.n
    eye = np.eye(n, dtype=bool)
    if not leq[eye].all():
        failures.append("reflexivity")
    if (leq & leq.T & ~eye).any():
        failures.append("antisymmetry")
    if ((leq @ leq) & ~leq).any():
        failures.append("transitivity")
    if not (join == join.T).all() or not (meet == meet.T).all():
        failures.append("commutativity")
    if not (join.diagonal() == np.arange(n)).all() or not (meet.diagonal() == np.arange(n)).all():
        failures.append("idempotence")
    for x in range(n):
        if not (join[x, meet[x]] == x).all() or not (meet[x, join[x]] == x).all():
            failures.append("absorption")
            break
    for x in range(n):
        # x∨(y∨z) == (x∨y)∨z via table composition, and dually
        if (join[x][join] != join[join[x]]).any():
            failures.append("join associativity")
            break
        if (meet[x][meet] != meet[meet[x]]).any():
            failures.append("meet associativity")
            break
    if not leq[L.bottom].all() or not leq[:, L.top].all():
        failures.append("bounds")
    for x in range(n):
        if not (leq[x, join[x]].all() and leq[meet[x], x].all()):
            failures.append("join/meet comparability")
            break
    return failures


def to_json(L: FiniteLattice) -> dict:
    return {
        "elements": list(L.names),
        "covers": [[L.names[a], L.names[b]] for a, b in L.covers()],
    }


def from_json(data: dict) -> FiniteLattice:
    return build(CoverInput.from_json(data))


def load_file(path) -> FiniteLattice:
    with open(path, "r", encoding="utf-8") as fh:
        return from_json(json.load(fh))


def save_file(L: FiniteLattice, path):
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(to_json(L), fh, indent=2)
        fh.write("\n")
