"""Generated-variety membership and desk-scale variety lattices.

Membership test: A (order n, elements a1..an) lies in the variety generated
by semigroups Bs iff the map x_i -> a_i extends to a homomorphism from the
free algebra on n generators of that variety onto A.  The free algebra is
realized concretely: generator i becomes the vector of its values under
every assignment of x1..xn into every B; the generated pairs
(vector, A-value) are closed under componentwise products.  Membership
holds iff the closure stays functional; a conflict yields two words with
equal vectors (an identity of every B) but different A-values — a
separating identity.

The desk-scale lattice orders the distinct varieties generated by subsets
of a fixed catalog.  Joins are exact (union of generators); meets are the
induced meets of the finite poset and may exceed the true variety
intersection, so probe output is labeled exploratory.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

import numpy as np

from . import lattice as lat
from .lattice import FiniteLattice
from .semigroup import FiniteSemigroup
from .words import Identity, Word

DEFAULT_CAP = 10**6
CAP_ENV_VAR = "LATTICE_FORGE_CAP"


class ClosureCapExceededError(Exception):
    def __init__(self, cap: int):
        super().__init__(f"pair closure exceeded the cap of {cap}")
        self.cap = cap


def default_cap() -> int:
    raw = os.environ.get(CAP_ENV_VAR, "")
    if raw.strip():
        return int(raw)
    return DEFAULT_CAP


@dataclass(frozen=True)
class MembershipVerdict:
    member: bool
    witness: Identity | None  # separating identity when member is False
    pairs_explored: int


def _generator_vectors(n: int, gens) -> tuple[np.ndarray, list[tuple[np.ndarray, slice]]]:
    """Stacked evaluation vectors for x1..xn plus (table, segment) pairs."""
    segments = []
    pieces = []
    offset = 0
    for B in gens:
        m = B.order
        count = m**n
        coords = np.empty((n, count), dtype=np.int64)
        for i in range(n):
            stride = m ** (n - 1 - i)
            coords[i] = (np.arange(count) // stride) % m
        pieces.append(coords)
        segments.append((B.table, slice(offset, offset + count)))
        offset += count
    vectors = np.concatenate(pieces, axis=1) if pieces else np.empty((n, 0), dtype=np.int64)
    return vectors, segments


def _multiply(vec1: np.ndarray, vec2: np.ndarray, segments) -> np.ndarray:
    out = np.empty_like(vec1)
    for table, seg in segments:
        out[seg] = table[vec1[seg], vec2[seg]]
    return out


def in_variety(A: FiniteSemigroup, gens, cap: int | None = None) -> MembershipVerdict:
    """Is A in the variety generated by ``gens``?

    Returns a verdict with a separating identity on failure; raises
    :class:`ClosureCapExceededError` when the pair closure outgrows ``cap``
    (default from ``LATTICE_FORGE_CAP`` or 10**6).
    """
    gens = list(gens)
    if A.order > 6 or any(B.order > 6 for B in gens):
        raise ValueError("membership oracle supports semigroups of order at most 6")
    if cap is None:
        cap = default_cap()
    n = A.order
    vectors, segments = _generator_vectors(n, gens)

    seen: dict[bytes, int] = {}
    vecs: list[np.ndarray] = []
    values: list[int] = []
    word_letters: list[tuple[str, ...]] = []

    def insert(vec: np.ndarray, value: int, letters: tuple[str, ...]):
        """Record the pair; returns a conflicting-identity witness or None."""
        key = vec.tobytes()
        idx = seen.get(key)
        if idx is None:
            if len(vecs) >= cap:
                raise ClosureCapExceededError(cap)
            seen[key] = len(vecs)
            vecs.append(vec)
            values.append(value)
            word_letters.append(letters)
            return None
        if values[idx] != value:
            return Identity(Word(word_letters[idx]), Word(letters))
        return None

    for i in range(n):
        conflict = insert(vectors[i].copy(), i, (f"x{i + 1}",))
        if conflict is not None:
            return MembershipVerdict(False, conflict, len(vecs))

    frontier = 0
    while frontier < len(vecs):
        # all products pairing the frontier element with everything inserted
        # so far (both orders), in deterministic discovery order
        for other in range(frontier + 1):
            for left, right in ((frontier, other), (other, frontier)):
                vec = _multiply(vecs[left], vecs[right], segments)
                value = A.mul(values[left], values[right])
                letters = word_letters[left] + word_letters[right]
                conflict = insert(vec, value, letters)
                if conflict is not None:
                    return MembershipVerdict(False, conflict, len(vecs))
        frontier += 1
    return MembershipVerdict(True, None, len(vecs))


@dataclass(frozen=True)
class GeneratedVarietyLattice:
    lattice: FiniteLattice
    generators: dict  # node label -> tuple of generator semigroup names
    join_is_exact: bool = True
    meet_is_exact: bool = False


def build_variety_lattice(catalog, cap: int | None = None) -> GeneratedVarietyLattice:
    """Order the varieties generated by all subsets of ``catalog``.

    The catalog must contain a trivial (one-element) semigroup, which names
    the bottom; the empty subset generates the same variety.  Joins are
    verified to equal union-of-generator nodes.
    """
    catalog = list(catalog)
    if len(catalog) > 6:
        raise ValueError("catalog limited to 6 semigroups")
    names = [S.name for S in catalog]
    if any(not name for name in names) or len(set(names)) != len(names):
        raise ValueError("catalog semigroups need unique names")
    by_name = {S.name: S for S in catalog}
    trivial = next((S.name for S in catalog if S.order == 1), None)
    if trivial is None:
        raise ValueError("catalog must include a trivial semigroup")

    member_memo: dict[tuple[str, frozenset], bool] = {}

    def member(s_name: str, gen_names: frozenset) -> bool:
        key = (s_name, gen_names)
        if key not in member_memo:
            verdict = in_variety(by_name[s_name], [by_name[g] for g in sorted(gen_names)], cap=cap)
            member_memo[key] = verdict.member
        return member_memo[key]

    def contained(x: frozenset, y: frozenset) -> bool:
        return all(member(s, y) for s in x)

    subsets = []
    for mask in range(1 << len(catalog)):
        chosen = frozenset(names[i] for i in range(len(catalog)) if mask >> i & 1)
        subsets.append(chosen if chosen else frozenset({trivial}))

    class_of: dict[frozenset, int] = {}
    reps: list[frozenset] = []
    for subset in subsets:
        if subset in class_of:
            continue
        for idx, rep in enumerate(reps):
            if contained(subset, rep) and contained(rep, subset):
                class_of[subset] = idx
                if (len(subset), sorted(subset)) < (len(rep), sorted(rep)):
                    reps[idx] = subset
                break
        else:
            class_of[subset] = len(reps)
            reps.append(subset)

    order = sorted(range(len(reps)), key=lambda idx: (len(reps[idx]), sorted(reps[idx])))
    position = {idx: pos for pos, idx in enumerate(order)}
    labels = tuple(f"V({','.join(sorted(reps[idx]))})" for idx in order)
    m = len(reps)
    leq = np.zeros((m, m), dtype=bool)
    for a in range(m):
        for b in range(m):
            leq[a, b] = contained(reps[order[a]], reps[order[b]])
    lattice = lat.from_order(labels, leq)

    node_of = {subset: position[class_of[subset]] for subset in subsets}
    for x in subsets:
        for y in subsets:
            if lattice.join[node_of[x], node_of[y]] != node_of[x | y]:
                raise RuntimeError(
                    f"join of {sorted(x)} and {sorted(y)} does not match the union node"
                )

    generators = {labels[pos]: tuple(sorted(reps[idx])) for idx, pos in position.items()}
    return GeneratedVarietyLattice(lattice=lattice, generators=generators)


def probe_special_elements(gl: GeneratedVarietyLattice) -> dict:
    """Classify every node of the proxy lattice.

    Induced meets may exceed true variety intersections, so the results are
    statements about this finite proxy only; the report says so explicitly.
    """
    from . import classify

    reports = classify.classify_all(gl.lattice)
    return {
        "exploratory": True,
        "note": (
            "proxy lattice of generated varieties: joins exact, meets induced; "
            "classifications apply to the proxy only"
        ),
        "elements": classify.reports_to_json(gl.lattice, reports),
    }
