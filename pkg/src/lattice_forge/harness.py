"""Mechanical sweeps of the abstract-lattice facts over lattice corpora.

Each check recomputes cancellability (and the other properties) from the
defining formulas via the kernels rather than trusting cached reports, so a
sweep cross-validates the classifier.  Reports carry the count of
non-vacuous instances, distinguishing a vacuous pass from real coverage,
and every violation includes the full tuple plus the lattice serialization.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import kernels, lattice
from .lattice import FiniteLattice

LEMMA_NAMES = (
    "join_with_neutral_atom",
    "over_neutral_atom",
    "modular_noncancellable_witness",
    "hierarchy",
)


@dataclass
class CheckReport:
    lemma: str
    lattice_id: str
    instances_tested: int = 0
    violations: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {
            "lemma": self.lemma,
            "lattice_id": self.lattice_id,
            "instances_tested": self.instances_tested,
            "violations": self.violations,
        }


def _violation(L: FiniteLattice, **fields) -> dict:
    out = {
        key: (L.names[val] if isinstance(val, int) and not isinstance(val, bool) else val)
        for key, val in fields.items()
    }
    out["lattice"] = lattice.to_json(L)
    return out


def _neutral_atoms(L: FiniteLattice):
    flags, _, _ = kernels.neutral_median_all(L.join, L.meet)
    return [a for a in L.atoms() if flags[a]]


def check_join_with_neutral_atom(L: FiniteLattice, lattice_id: str = "lattice") -> CheckReport:
    """For every neutral atom a and element x: x is cancellable iff x∨a is."""
    report = CheckReport("join_with_neutral_atom", lattice_id)
    atoms = _neutral_atoms(L)
    if not atoms:
        return report
    can, _, _ = kernels.cancellable_all(L.join, L.meet)
    for a in atoms:
        for x in range(L.n):
            report.instances_tested += 1
            if bool(can[x]) != bool(can[L.join[x, a]]):
                report.violations.append(
                    _violation(L, atom=a, x=x, x_join_a=int(L.join[x, a]))
                )
    return report


def check_over_neutral_atom(L: FiniteLattice, lattice_id: str = "lattice") -> CheckReport:
    """For every neutral atom a and element x: if equal joins/meets with x
    above a force y∨a == z∨a, then x is cancellable.  Only instances where
    the hypothesis holds are counted."""
    report = CheckReport("over_neutral_atom", lattice_id)
    atoms = _neutral_atoms(L)
    if not atoms:
        return report
    can, _, _ = kernels.cancellable_all(L.join, L.meet)
    for a in atoms:
        for x in range(L.n):
            if kernels.cancellable_over_atom_hypothesis(L.join, L.meet, x, a):
                report.instances_tested += 1
                if not can[x]:
                    report.violations.append(_violation(L, atom=a, x=x))
    return report


def check_modular_noncancellable_witness(L: FiniteLattice, lattice_id: str = "lattice") -> CheckReport:
    """For every modular non-cancellable x and every pair y != z with equal
    joins and meets with x, the element x' = x∧(y∨z) satisfies x' <= x,
    x'∨y == x'∨z, x'∧y == x'∧z, and y∨z == x'∨y."""
    report = CheckReport("modular_noncancellable_witness", lattice_id)
    mod, _, _ = kernels.modular_all(L.join, L.meet, L.leq)
    can, _, _ = kernels.cancellable_all(L.join, L.meet)
    join, meet, leq = L.join, L.meet, L.leq
    for x in range(L.n):
        if not mod[x] or can[x]:
            continue
        for y in range(L.n):
            for z in range(y + 1, L.n):
                if join[x, y] != join[x, z] or meet[x, y] != meet[x, z]:
                    continue
                report.instances_tested += 1
                xp = meet[x, join[y, z]]
                checks = {
                    "below_x": bool(leq[xp, x]),
                    "equal_joins": join[xp, y] == join[xp, z],
                    "equal_meets": meet[xp, y] == meet[xp, z],
                    "join_reached": join[y, z] == join[xp, y],
                }
                if not all(checks.values()):
                    report.violations.append(
                        _violation(
                            L,
                            x=x,
                            y=y,
                            z=z,
                            x_prime=int(xp),
                            failed=[k for k, v in checks.items() if not v],
                        )
                    )
    return report


def check_hierarchy(L: FiniteLattice, lattice_id: str = "lattice") -> CheckReport:
    """neutral => cancellable => modular, element by element."""
    report = CheckReport("hierarchy", lattice_id)
    neu, _, _ = kernels.neutral_median_all(L.join, L.meet)
    can, _, _ = kernels.cancellable_all(L.join, L.meet)
    mod, _, _ = kernels.modular_all(L.join, L.meet, L.leq)
    for x in range(L.n):
        report.instances_tested += 1
        if (neu[x] and not can[x]) or (can[x] and not mod[x]):
            report.violations.append(
                _violation(
                    L,
                    x=x,
                    neutral=bool(neu[x]),
                    cancellable=bool(can[x]),
                    modular=bool(mod[x]),
                )
            )
    return report


ALL_CHECKS = (
    check_join_with_neutral_atom,
    check_over_neutral_atom,
    check_modular_noncancellable_witness,
    check_hierarchy,
)


def run_all(L: FiniteLattice, lattice_id: str = "lattice") -> list[CheckReport]:
    return [check(L, lattice_id) for check in ALL_CHECKS]
