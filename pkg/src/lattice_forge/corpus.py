"""Lattice corpus generators.

Exhaustive enumeration works levelwise on meet-semilattices: every finite
meet-semilattice arises by repeatedly attaching a new maximal element whose
strict down-set leaves all existing meets intact, and a finite
meet-semilattice is a lattice exactly when it has a unique maximal element.
Representatives are deduplicated by a canonical relabeling (invariant
refinement, then a minimum over the residual permutations), so each
isomorphism class is produced once.

Random generation closes a seeded family of subsets of a fixed universe
under intersection (meets), keeps the full universe as top, and pads with
new bottoms to hit the requested size exactly; the result is a lattice by
construction and deterministic in (size, seed).
"""

from __future__ import annotations

import random
from itertools import permutations, product

import numpy as np

from . import lattice as lat


def _iter_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _popcount(mask: int) -> int:
    return bin(mask).count("1")


def canonical_key(downs: tuple[int, ...]) -> bytes:
    """Canonical form of a poset given as down-set bitmasks (bit j of
    downs[i] set iff j <= i; i's own bit included).

    Elements are partitioned by an iteratively refined isomorphism
    invariant; the key is the minimum relabeled down-set vector over all
    partition-respecting permutations.
    """
    n = len(downs)
    ups = [0] * n
    for i, d in enumerate(downs):
        for j in _iter_bits(d):
            ups[j] |= 1 << i
    inv = [(_popcount(downs[i]), _popcount(ups[i])) for i in range(n)]
    for _ in range(3):
        ranks = {v: r for r, v in enumerate(sorted(set(inv)))}
        inv = [
            (
                ranks[inv[i]],
                tuple(sorted(ranks[inv[j]] for j in _iter_bits(downs[i]))),
                tuple(sorted(ranks[inv[j]] for j in _iter_bits(ups[i]))),
            )
            for i in range(n)
        ]
        if len(set(inv)) == n:
            break

    order = sorted(range(n), key=lambda i: inv[i])
    groups: list[list[int]] = []
    for i in order:
        if groups and inv[groups[-1][0]] == inv[i]:
            groups[-1].append(i)
        else:
            groups.append([i])

    best: tuple[int, ...] | None = None
    pos = [0] * n
    offsets = []
    off = 0
    for g in groups:
        offsets.append(off)
        off += len(g)
    for perms in product(*(permutations(g) for g in groups)):
        for g_off, perm in zip(offsets, perms):
            for t, elem in enumerate(perm):
                pos[elem] = g_off + t
        relabeled = [0] * n
        for i in range(n):
            m = 0
            for j in _iter_bits(downs[i]):
                m |= 1 << pos[j]
            relabeled[pos[i]] = m
        key = tuple(relabeled)
        if best is None or key < best:
            best = key
    return b"".join(v.to_bytes(8, "little") for v in best)


def lattice_canonical_key(L: lat.FiniteLattice) -> bytes:
    """Canonical key of a built lattice; equal keys mean isomorphic."""
    downs = tuple(int(sum(1 << j for j in np.flatnonzero(L.leq[:, i]))) for i in range(L.n))
    return canonical_key(downs)


def _valid_downsets(downs: tuple[int, ...]):
    """Strict down-sets D for a new maximal element such that every existing
    element keeps a greatest lower bound with it (meets stay intact)."""
    n = len(downs)
    if n == 0:
        yield 0
        return
    full = (1 << n) - 1
    for D in range(1, full + 1):
        ok = True
        for i in _iter_bits(D):
            if downs[i] & ~D:
                ok = False  # not downward closed
                break
        if not ok:
            continue
        for x in _iter_bits(full & ~D):
            common = downs[x] & D
            if common == 0:
                ok = False  # no common lower bound with the new element
                break
            found = False
            for g in _iter_bits(common):
                if common & ~downs[g] == 0:
                    found = True
                    break
            if not found:
                ok = False  # common lower bounds without a greatest one
                break
        if ok:
            yield D


def _has_top(downs: tuple[int, ...]) -> bool:
    below = 0
    for j, d in enumerate(downs):
        below |= d & ~(1 << j)
    return len(downs) - _popcount(below) == 1


def _to_lattice(downs: tuple[int, ...]) -> lat.FiniteLattice:
    n = len(downs)
    names = tuple(f"e{i}" for i in range(n))
    leq = np.zeros((n, n), dtype=bool)
    for i, d in enumerate(downs):
        for j in _iter_bits(d):
            leq[j, i] = True
    return lat.from_order(names, leq)


def _semilattice_levels(n_max: int) -> dict[int, dict[bytes, tuple[int, ...]]]:
    levels: dict[int, dict[bytes, tuple[int, ...]]] = {1: {canonical_key((1,)): (1,)}}
    for k in range(1, n_max):
        nxt: dict[bytes, tuple[int, ...]] = {}
        for downs in levels[k].values():
            for D in _valid_downsets(downs):
                child = downs + (D | (1 << k),)
                key = canonical_key(child)
                if key not in nxt:
                    nxt[key] = child
        levels[k + 1] = nxt
    return levels


def enumerate_small(n_max: int, dedup: bool = True):
    """Yield every lattice with at most ``n_max`` elements (1 <= n_max <= 8).

    With ``dedup`` (the default) each isomorphism class appears exactly once,
    smallest sizes first, in canonical-key order.  Without it, every labeled
    construction is yielded (duplicates up to isomorphism permitted), which
    is only practical for small ``n_max``.
    """
    if not 1 <= n_max <= 8:
        raise lat.SizeLimitError(f"enumeration supports 1..8 elements, got {n_max}")
    if dedup:
        levels = _semilattice_levels(n_max)
        for size in range(1, n_max + 1):
            for key in sorted(levels[size]):
                downs = levels[size][key]
                if _has_top(downs):
                    yield _to_lattice(downs)
    else:
        level: list[tuple[int, ...]] = [(1,)]
        for size in range(1, n_max + 1):
            for downs in level:
                if _has_top(downs):
                    yield _to_lattice(downs)
            if size == n_max:
                break
            nxt: list[tuple[int, ...]] = []
            seen: set[tuple[int, ...]] = set()
            for downs in level:
                for D in _valid_downsets(downs):
                    child = downs + (D | (1 << size),)
                    if child not in seen:
                        seen.add(child)
                        nxt.append(child)
            level = nxt


def class_counts(n_max: int) -> dict[int, int]:
    """Number of lattice isomorphism classes for each size up to ``n_max``."""
    if not 1 <= n_max <= 8:
        raise lat.SizeLimitError(f"enumeration supports 1..8 elements, got {n_max}")
    levels = _semilattice_levels(n_max)
    return {
        size: sum(1 for downs in levels[size].values() if _has_top(downs))
        for size in range(1, n_max + 1)
    }


_UNIVERSE_BITS = 8


def random_lattice(size: int, seed: int) -> lat.FiniteLattice:
    """A pseudorandom lattice with exactly ``size`` elements (3 <= size <= 64),
    deterministic in (size, seed)."""
    if not 3 <= size <= lat.MAX_ELEMENTS:
        raise lat.SizeLimitError(f"random lattices support 3..{lat.MAX_ELEMENTS} elements, got {size}")
    rng = random.Random(f"lattice:{size}:{seed}")
    full = (1 << _UNIVERSE_BITS) - 1
    family = {full}
    stalls = 0
    while len(family) < size and stalls < 256:
        s = rng.randrange(full + 1)
        candidate = family | {s & f for f in family}
        if len(family) < len(candidate) <= size:
            family = candidate
            stalls = 0
        else:
            stalls += 1

    sets = sorted(family, key=lambda m: (_popcount(m), m))
    pad = size - len(sets)
    n = size
    leq = np.zeros((n, n), dtype=bool)
    # padding elements form a chain below everything
    for a in range(pad):
        leq[a, a:] = True
    for ii, si in enumerate(sets):
        for jj, sj in enumerate(sets):
            if si & ~sj == 0:
                leq[pad + ii, pad + jj] = True
    names = tuple(f"e{i}" for i in range(n))
    return lat.from_order(names, leq)
