"""Pure-numpy classification kernels (the fallback backend).

Each function takes the precomputed ``join``/``meet`` (and where needed
``leq``) tables and scans all tuples of the defining first-order condition.
Witnesses are the lexicographically first violating pair in (y, z) index
order, or -1 when the property holds; both backends follow the same order
so reports are byte-identical.
"""

from __future__ import annotations

import numpy as np

BACKEND = "numpy"


def distributive(join: np.ndarray, meet: np.ndarray) -> bool:
    """Whole-lattice distributivity: x∧(y∨z) == (x∧y)∨(x∧z) for all triples."""
    n = len(join)
    for a in range(n):
        lhs = meet[a][join]
        rhs = join[np.ix_(meet[a], meet[a])]
        if (lhs != rhs).any():
            return False
    return True


def _first_violation(viol: np.ndarray):
    if not viol.any():
        return -1, -1
    flat = int(np.argmax(viol))
    return divmod(flat, viol.shape[1])


def neutral_median_all(join: np.ndarray, meet: np.ndarray):
    """Median identity (x∨y)∧(y∨z)∧(z∨x) == (x∧y)∨(y∧z)∨(z∧x) per element."""
    n = len(join)
    flags = np.ones(n, dtype=bool)
    wit_y = np.full(n, -1, dtype=np.int64)
    wit_z = np.full(n, -1, dtype=np.int64)
    for x in range(n):
        jx = join[x]
        mx = meet[x]
        lhs = meet[meet[jx[:, None], join], join[:, x][None, :]]
        rhs = join[join[mx[:, None], meet], meet[:, x][None, :]]
        y, z = _first_violation(lhs != rhs)
        if y >= 0:
            flags[x] = False
            wit_y[x], wit_z[x] = y, z
    return flags, wit_y, wit_z


def _closure_is_distributive(join_rows, meet_rows, x: int, y: int, z: int) -> bool:
    members = []
    inset = set()
    for g in (x, y, z):
        if g not in inset:
            inset.add(g)
            members.append(g)
    pos = 0
    while pos < len(members):
        a = members[pos]
        ja = join_rows[a]
        ma = meet_rows[a]
        for q in range(pos + 1):
            b = members[q]
            for c in (ja[b], ma[b]):
                if c not in inset:
                    inset.add(c)
                    members.append(c)
        pos += 1
    if len(members) < 5:
        return True  # lattices with fewer than 5 elements are distributive
    for a in members:
        ma = meet_rows[a]
        for b in members:
            jb = join_rows[b]
            jr = join_rows[ma[b]]
            for c in members:
                if ma[jb[c]] != jr[ma[c]]:
                    return False
    return True


def neutral_generated_all(join: np.ndarray, meet: np.ndarray):
    """Per element x: is the sublattice generated by {x, y, z} distributive
    for every pair (y, z)?  (Closure under join/meet to a fixpoint.)"""
    n = len(join)
    if distributive(join, meet):
        return np.ones(n, dtype=bool)
    join_rows = join.tolist()
    meet_rows = meet.tolist()
    memo: dict[frozenset, bool] = {}
    flags = np.ones(n, dtype=bool)
    for x in range(n):
        ok = True
        for y in range(n):
            for z in range(y, n):
                key = frozenset((x, y, z))
                good = memo.get(key)
                if good is None:
                    good = _closure_is_distributive(join_rows, meet_rows, x, y, z)
                    memo[key] = good
                if not good:
                    ok = False
                    break
            if not ok:
                break
        flags[x] = ok
    return flags


def modular_all(join: np.ndarray, meet: np.ndarray, leq: np.ndarray):
    """y <= z implies (x∨y)∧z == (x∧z)∨y, per element x."""
    n = len(join)
    flags = np.ones(n, dtype=bool)
    wit_y = np.full(n, -1, dtype=np.int64)
    wit_z = np.full(n, -1, dtype=np.int64)
    for x in range(n):
        lhs = meet[join[x]]            # (y, z) -> (x∨y)∧z
        rhs = join[meet[x]].T          # (y, z) -> (x∧z)∨y
        y, z = _first_violation(leq & (lhs != rhs))
        if y >= 0:
            flags[x] = False
            wit_y[x], wit_z[x] = y, z
    return flags, wit_y, wit_z


def cancellable_all(join: np.ndarray, meet: np.ndarray):
    """No distinct y, z share both join and meet with x."""
    n = len(join)
    flags = np.ones(n, dtype=bool)
    wit_y = np.full(n, -1, dtype=np.int64)
    wit_z = np.full(n, -1, dtype=np.int64)
    upper = np.triu(np.ones((n, n), dtype=bool), k=1)
    for x in range(n):
        jx = join[x]
        mx = meet[x]
        same = (jx[:, None] == jx[None, :]) & (mx[:, None] == mx[None, :])
        y, z = _first_violation(same & upper)
        if y >= 0:
            flags[x] = False
            wit_y[x], wit_z[x] = y, z
    return flags, wit_y, wit_z


def lower_modular_all(join: np.ndarray, meet: np.ndarray, leq: np.ndarray):
    """x <= y implies x∨(y∧z) == y∧(x∨z), per element x."""
    n = len(join)
    flags = np.ones(n, dtype=bool)
    wit_y = np.full(n, -1, dtype=np.int64)
    wit_z = np.full(n, -1, dtype=np.int64)
    for x in range(n):
        lhs = join[x][meet]            # (y, z) -> x∨(y∧z)
        rhs = meet[:, join[x]]         # (y, z) -> y∧(x∨z)
        y, z = _first_violation(leq[x][:, None] & (lhs != rhs))
        if y >= 0:
            flags[x] = False
            wit_y[x], wit_z[x] = y, z
    return flags, wit_y, wit_z


def cancellable_over_atom_hypothesis(join: np.ndarray, meet: np.ndarray, x: int, a: int) -> bool:
    """True when x∨(y∨a)=x∨(z∨a) and x∧(y∨a)=x∧(z∨a) force y∨a == z∨a."""
    ya = join[:, a]
    jx = join[x][ya]
    mx = meet[x][ya]
    viol = (
        (jx[:, None] == jx[None, :])
        & (mx[:, None] == mx[None, :])
        & (ya[:, None] != ya[None, :])
    )
    return not bool(viol.any())
