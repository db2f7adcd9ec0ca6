"""JIT classification kernels: numba twins of ``_kernels_numpy``.

Same contracts and witness order as the numpy backend; the hot triple/
quadruple loops over the join/meet tables are compiled with early exits.
"""

from __future__ import annotations

import numpy as np
from numba import njit

BACKEND = "numba"


@njit(cache=True, nogil=True)
def distributive(join, meet):
    n = join.shape[0]
    for a in range(n):
        for b in range(n):
            mab = meet[a, b]
            for c in range(n):
                if meet[a, join[b, c]] != join[mab, meet[a, c]]:
                    return False
    return True


@njit(cache=True, nogil=True)
def neutral_median_all(join, meet):
    n = join.shape[0]
    flags = np.ones(n, np.bool_)
    wit_y = np.full(n, -1, np.int64)
    wit_z = np.full(n, -1, np.int64)
    for x in range(n):
        done = False
        for y in range(n):
            if done:
                break
            jxy = join[x, y]
            mxy = meet[x, y]
            for z in range(n):
                lhs = meet[meet[jxy, join[y, z]], join[z, x]]
                rhs = join[join[mxy, meet[y, z]], meet[z, x]]
                if lhs != rhs:
                    flags[x] = False
                    wit_y[x] = y
                    wit_z[x] = z
                    done = True
                    break
    return flags, wit_y, wit_z


@njit(cache=True, nogil=True)
def neutral_generated_all(join, meet):
    n = join.shape[0]
    flags = np.ones(n, np.bool_)
    if distributive(join, meet):
        return flags
    inset = np.zeros(n, np.bool_)
    members = np.empty(n, np.int64)
    for x in range(n):
        ok = True
        for y in range(n):
            if not ok:
                break
            for z in range(y, n):
                cnt = 0
                if not inset[x]:
                    inset[x] = True
                    members[cnt] = x
                    cnt += 1
                if not inset[y]:
                    inset[y] = True
                    members[cnt] = y
                    cnt += 1
                if not inset[z]:
                    inset[z] = True
                    members[cnt] = z
                    cnt += 1
                pos = 0
                while pos < cnt:
                    a = members[pos]
                    for q in range(pos + 1):
                        b = members[q]
                        c = join[a, b]
                        if not inset[c]:
                            inset[c] = True
                            members[cnt] = c
                            cnt += 1
                        c = meet[a, b]
                        if not inset[c]:
                            inset[c] = True
                            members[cnt] = c
                            cnt += 1
                    pos += 1
                good = True
                if cnt >= 5:  # smaller sublattices are always distributive
                    for ia in range(cnt):
                        if not good:
                            break
                        a = members[ia]
                        for ib in range(cnt):
                            if not good:
                                break
                            b = members[ib]
                            mab = meet[a, b]
                            for ic in range(cnt):
                                c = members[ic]
                                if meet[a, join[b, c]] != join[mab, meet[a, c]]:
                                    good = False
                                    break
                for t in range(cnt):
                    inset[members[t]] = False
                if not good:
                    ok = False
                    break
        flags[x] = ok
    return flags


@njit(cache=True, nogil=True)
def modular_all(join, meet, leq):
    n = join.shape[0]
    flags = np.ones(n, np.bool_)
    wit_y = np.full(n, -1, np.int64)
    wit_z = np.full(n, -1, np.int64)
    for x in range(n):
        done = False
        for y in range(n):
            if done:
                break
            jxy = join[x, y]
            for z in range(n):
                if leq[y, z] and meet[jxy, z] != join[meet[x, z], y]:
                    flags[x] = False
                    wit_y[x] = y
                    wit_z[x] = z
                    done = True
                    break
    return flags, wit_y, wit_z


@njit(cache=True, nogil=True)
def cancellable_all(join, meet):
    n = join.shape[0]
    flags = np.ones(n, np.bool_)
    wit_y = np.full(n, -1, np.int64)
    wit_z = np.full(n, -1, np.int64)
    for x in range(n):
        done = False
        for y in range(n):
            if done:
                break
            jxy = join[x, y]
            mxy = meet[x, y]
            for z in range(y + 1, n):
                if join[x, z] == jxy and meet[x, z] == mxy:
                    flags[x] = False
                    wit_y[x] = y
                    wit_z[x] = z
                    done = True
                    break
    return flags, wit_y, wit_z


@njit(cache=True, nogil=True)
def lower_modular_all(join, meet, leq):
    n = join.shape[0]
    flags = np.ones(n, np.bool_)
    wit_y = np.full(n, -1, np.int64)
    wit_z = np.full(n, -1, np.int64)
    for x in range(n):
        done = False
        for y in range(n):
            if done:
                break
            if not leq[x, y]:
                continue
            for z in range(n):
                if join[x, meet[y, z]] != meet[y, join[x, z]]:
                    flags[x] = False
                    wit_y[x] = y
                    wit_z[x] = z
                    done = True
                    break
    return flags, wit_y, wit_z


@njit(cache=True, nogil=True)
def cancellable_over_atom_hypothesis(join, meet, x, a):
    n = join.shape[0]
    for y in range(n):
        ya = join[y, a]
        jy = join[x, ya]
        my = meet[x, ya]
        for z in range(n):
            za = join[z, a]
            if ya != za and join[x, za] == jy and meet[x, za] == my:
                return False
    return True
