"""Special-element classification by exhaustive evaluation.

An element is *neutral* when the median identity
(x∨y)∧(y∨z)∧(z∨x) == (x∧y)∨(y∧z)∨(z∧x) holds for all y, z — equivalently,
when every triple {x, y, z} generates a distributive sublattice (the second,
independent oracle here).  *Modular*: y <= z implies (x∨y)∧z == (x∧z)∨y.
*Cancellable*: equal joins and meets with x force y == z.  *Lower-modular*:
x <= y implies x∨(y∧z) == y∧(x∨z).

Every false flag carries the lexicographically first violating (y, z) pair,
which keeps regression goldens stable.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import kernels
from .lattice import FiniteLattice


@dataclass(frozen=True)
class ElementReport:
    element: int
    neutral: bool
    modular: bool
    cancellable: bool
    lower_modular: bool
    witnesses: tuple[tuple[str, tuple[int, int]], ...]

    def witness(self, prop: str) -> tuple[int, int] | None:
        for name, pair in self.witnesses:
            if name == prop:
                return pair
        return None


def _pair(wy, wz, x):
    y, z = int(wy[x]), int(wz[x])
    return (y, z) if y >= 0 else None


def is_neutral_median(L: FiniteLattice, x: int):
    """Median-identity oracle; returns (holds, first violating pair or None)."""
    L._check(x)
    flags, wy, wz = kernels.neutral_median_all(L.join, L.meet)
    return bool(flags[x]), _pair(wy, wz, x)


def is_neutral_generated(L: FiniteLattice, x: int) -> bool:
    """Generated-sublattice oracle: every {x, y, z} generates a distributive
    sublattice (closure under join/meet to a fixpoint)."""
    L._check(x)
    flags = kernels.neutral_generated_all(L.join, L.meet)
    return bool(flags[x])


def is_modular_element(L: FiniteLattice, x: int):
    L._check(x)
    flags, wy, wz = kernels.modular_all(L.join, L.meet, L.leq)
    return bool(flags[x]), _pair(wy, wz, x)


def is_cancellable(L: FiniteLattice, x: int):
    L._check(x)
    flags, wy, wz = kernels.cancellable_all(L.join, L.meet)
    return bool(flags[x]), _pair(wy, wz, x)


def is_lower_modular(L: FiniteLattice, x: int):
    L._check(x)
    flags, wy, wz = kernels.lower_modular_all(L.join, L.meet, L.leq)
    return bool(flags[x]), _pair(wy, wz, x)


def classify_all(L: FiniteLattice) -> list[ElementReport]:
    """One report per element, in element order.

    Re-asserts the classical hierarchy neutral => cancellable => modular
    while building each report; a violation would be a kernel bug.
    """
    neu, neu_y, neu_z = kernels.neutral_median_all(L.join, L.meet)
    mod, mod_y, mod_z = kernels.modular_all(L.join, L.meet, L.leq)
    can, can_y, can_z = kernels.cancellable_all(L.join, L.meet)
    low, low_y, low_z = kernels.lower_modular_all(L.join, L.meet, L.leq)
    reports = []
    for x in range(L.n):
        if neu[x] and not can[x]:
            raise RuntimeError(f"hierarchy violated at element {x}: neutral but not cancellable")
        if can[x] and not mod[x]:
            raise RuntimeError(f"hierarchy violated at element {x}: cancellable but not modular")
        witnesses = []
        for prop, flags, wy, wz in (
            ("neutral", neu, neu_y, neu_z),
            ("modular", mod, mod_y, mod_z),
            ("cancellable", can, can_y, can_z),
            ("lower_modular", low, low_y, low_z),
        ):
            if not flags[x]:
                witnesses.append((prop, (int(wy[x]), int(wz[x]))))
        reports.append(
            ElementReport(
                element=x,
                neutral=bool(neu[x]),
                modular=bool(mod[x]),
                cancellable=bool(can[x]),
                lower_modular=bool(low[x]),
                witnesses=tuple(witnesses),
            )
        )
    return reports


def report_to_json(L: FiniteLattice, report: ElementReport) -> dict:
    out = {
        "element": L.names[report.element],
        "neutral": report.neutral,
        "modular": report.modular,
        "cancellable": report.cancellable,
        "lower_modular": report.lower_modular,
    }
    if report.witnesses:
        out["witnesses"] = {
            prop: [L.names[y], L.names[z]] for prop, (y, z) in report.witnesses
        }
    return out


def reports_to_json(L: FiniteLattice, reports) -> list[dict]:
    return [report_to_json(L, r) for r in reports]
