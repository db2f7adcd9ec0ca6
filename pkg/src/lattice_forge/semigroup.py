"""Finite semigroups as multiplication tables.

``table[i][j]`` is the product of i (left factor) and j.  Associativity is
certified at construction.  Identity satisfaction evaluates a word over all
assignments at once via table-indexing folds, so sweeps over many identities
stay cheap; violating assignments are reported lexicographically first.

File format (JSON)::

    {"name": "ZM2", "order": 2, "table": [[0, 0], [0, 0]]}
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from . import words as W
from .words import Identity, Word

MAX_PRODUCT_ORDER = 4096


class SemigroupError(Exception):
    pass


class NotAssociativeError(SemigroupError):
    def __init__(self, message: str, triple: tuple[int, int, int]):
        super().__init__(message)
        self.triple = triple


class TableRangeError(SemigroupError):
    pass


class UnboundVariableError(SemigroupError):
    pass


class ProductSizeError(SemigroupError):
    pass


@dataclass(frozen=True, eq=False)
class FiniteSemigroup:
    order: int
    table: np.ndarray
    name: str | None = None

    def __eq__(self, other):
        if not isinstance(other, FiniteSemigroup):
            return NotImplemented
        return self.order == other.order and bool((self.table == other.table).all())

    def __hash__(self):
        return hash((self.order, self.table.tobytes()))

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])


def build_semigroup(table, name: str | None = None) -> FiniteSemigroup:
    arr = np.asarray(table, dtype=np.int64)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise TableRangeError(f"table must be square, got shape {arr.shape}")
    n = arr.shape[0]
    if n == 0:
        raise TableRangeError("a semigroup needs at least one element")
    if arr.min() < 0 or arr.max() >= n:
        raise TableRangeError("table entries must be element indices")
    left = arr[arr]          # (i, j, k) -> (i*j)*k
    right = arr[:, arr]      # (i, j, k) -> i*(j*k)
    diff = left != right
    if diff.any():
        i, j, k = np.argwhere(diff)[0]
        raise NotAssociativeError(
            f"({i}*{j})*{k} = {left[i, j, k]} but {i}*({j}*{k}) = {right[i, j, k]}",
            (int(i), int(j), int(k)),
        )
    arr = arr.copy()
    arr.flags.writeable = False
    return FiniteSemigroup(order=n, table=arr, name=name)


def eval_word(S: FiniteSemigroup, w: Word, assignment: dict[str, int]) -> int:
    """Left-to-right fold of the table over the letters of ``w``."""
    missing = w.content - assignment.keys()
    if missing:
        raise UnboundVariableError(f"unbound variables: {sorted(missing)}")
    val = assignment[w.letters[0]]
    for letter in w.letters[1:]:
        val = int(S.table[val, assignment[letter]])
    return val


def word_values(S: FiniteSemigroup, w: Word, var_order: tuple[str, ...]) -> np.ndarray:
    """Values of ``w`` under every assignment of ``var_order``; the result
    has one axis per variable, indexed by the assigned element."""
    k = len(var_order)
    axis = {v: t for t, v in enumerate(var_order)}
    shape = (S.order,) * k
    broadcast = {}
    for v, t in axis.items():
        sl: list = [None] * k
        sl[t] = slice(None)
        broadcast[v] = np.arange(S.order)[tuple(sl)]
    val = np.broadcast_to(broadcast[w.letters[0]], shape)
    for letter in w.letters[1:]:
        val = S.table[val, broadcast[letter]]
    return np.broadcast_to(val, shape)


def zero_element(S: FiniteSemigroup) -> int | None:
    """The two-sided absorbing element, located by scan."""
    for z in range(S.order):
        if (S.table[z] == z).all() and (S.table[:, z] == z).all():
            return z
    return None


def satisfies(S: FiniteSemigroup, ident: Identity):
    """Whether S satisfies the identity; returns (holds, witness assignment).

    A pair identity is checked over all assignments of the union of the two
    contents.  A zero identity ``w = 0`` holds iff S has a zero element and
    every value of ``w`` equals it.  The witness is the lexicographically
    least violating assignment (None when there is no zero element at all).
    """
    if ident.rhs is None:
        z = zero_element(S)
        if z is None:
            return False, None
        var_order = tuple(sorted(ident.lhs.content))
        vals = word_values(S, ident.lhs, var_order)
        diff = vals != z
        if not diff.any():
            return True, None
        first = np.argwhere(diff)[0]
        return False, {v: int(e) for v, e in zip(var_order, first)}
    var_order = tuple(sorted(ident.lhs.content | ident.rhs.content))
    lhs = word_values(S, ident.lhs, var_order)
    rhs = word_values(S, ident.rhs, var_order)
    diff = lhs != rhs
    if not diff.any():
        return True, None
    first = np.argwhere(diff)[0]
    return False, {v: int(e) for v, e in zip(var_order, first)}


@dataclass(frozen=True)
class SemigroupProfile:
    commutative: bool
    band: bool
    semilattice: bool
    has_zero: bool
    zero: int | None
    nil: bool
    nilpotency_index: int | None

    def to_json(self) -> dict:
        return {
            "commutative": self.commutative,
            "band": self.band,
            "semilattice": self.semilattice,
            "has_zero": self.has_zero,
            "zero": self.zero,
            "nil": self.nil,
            "nilpotency_index": self.nilpotency_index,
        }


def nilpotency_index(S: FiniteSemigroup) -> int | None:
    """Least n with every length-n product equal to the zero, or None.

    Iterates the set of length-k product values (P_{k+1} = P_k * S), which
    is decreasing, so it stabilizes within ``order`` steps.
    """
    z = zero_element(S)
    if z is None:
        return None
    current = frozenset(range(S.order))
    k = 1
    while True:
        if current == {z}:
            return k
        nxt = frozenset(int(S.table[a, b]) for a in current for b in range(S.order))
        if nxt == current:
            return None  # stabilized above the zero: not nilpotent
        current = nxt
        k += 1


def predicates(S: FiniteSemigroup) -> SemigroupProfile:
    table = S.table
    commutative = bool((table == table.T).all())
    band = bool((table.diagonal() == np.arange(S.order)).all())
    z = zero_element(S)
    nil = False
    if z is not None:
        # every element has some power equal to the zero
        nil = True
        for x in range(S.order):
            val = x
            seen = set()
            while val != z and val not in seen:
                seen.add(val)
                val = int(table[val, x])
            if val != z:
                nil = False
                break
    return SemigroupProfile(
        commutative=commutative,
        band=band,
        semilattice=commutative and band,
        has_zero=z is not None,
        zero=z,
        nil=nil,
        nilpotency_index=nilpotency_index(S) if nil else None,
    )


def direct_product(S: FiniteSemigroup, T: FiniteSemigroup) -> FiniteSemigroup:
    """Componentwise product; element (a, b) maps to index a*|T| + b."""
    order = S.order * T.order
    if order > MAX_PRODUCT_ORDER:
        raise ProductSizeError(f"product order {order} exceeds {MAX_PRODUCT_ORDER}")
    a = np.repeat(np.arange(S.order), T.order)
    b = np.tile(np.arange(T.order), S.order)
    table = S.table[np.ix_(a, a)] * T.order + T.table[np.ix_(b, b)]
    name = None
    if S.name and T.name:
        name = f"{S.name}x{T.name}"
    return build_semigroup(table, name=name)


def power_identity_witness(S: FiniteSemigroup, n: int, l_max: int):
    """First (l, i, j) in lexicographic order, with 2 <= l <= l_max and
    1 <= i <= j <= n, such that S satisfies
    x1..xn = x1..x(i-1) (xi..xj)^l x(j+1)..xn; None if no witness in range."""
    if n < 1 or l_max < 2:
        raise ValueError("need n >= 1 and l_max >= 2")
    for l in range(2, l_max + 1):
        for i in range(1, n + 1):
            for j in range(i, n + 1):
                holds, _ = satisfies(S, W.block_power_identity(n, i, j, l))
                if holds:
                    return (l, i, j)
    return None


def to_json(S: FiniteSemigroup) -> dict:
    return {
        "name": S.name,
        "order": S.order,
        "table": S.table.tolist(),
    }


def from_json(data: dict) -> FiniteSemigroup:
    return build_semigroup(data["table"], name=data.get("name"))


def load_file(path) -> FiniteSemigroup:
    with open(path, "r", encoding="utf-8") as fh:
        return from_json(json.load(fh))


def save_file(S: FiniteSemigroup, path):
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(to_json(S), fh, indent=2)
        fh.write("\n")
