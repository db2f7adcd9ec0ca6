"""Bounded equational deduction over free-semigroup words.

An axiom ``u = v`` acts as a two-way rewrite: any factor of a word that is a
substitution instance of one side may be replaced by the matching instance
of the other.  A zero identity ``w = 0`` contributes the rule ``w -> 0``
over the reserved absorbing letter ``"0"``; because 0 swallows both
neighbours, any word containing it collapses to the one-letter zero word,
which keeps the rewrite relation on plain letter sequences.

``derivable`` runs a bidirectional breadth-first search bounded by a word
length cap and an expansion budget.  "no" is returned only when the full
reachable set of the source word (within the caps) is exhausted without
meeting the target, so the procedure is a semi-decision method with an
honest negative.  Successful searches return a replayable step-by-step
proof; every step re-validates as an elementary rewrite.

One boundary is worth knowing: a rewrite that sends a proper factor to 0
absorbs its context, so the step relation is not symmetric at the zero
word, and the reachable set of the zero word may under-approximate its
equational class for rule sets whose zero words admit no whole-word
re-parse.  For commutative systems like the square-annihilating theory the
relation is symmetric (sorting letters exposes a whole-word instance), and
searches that *start* from a non-zero word are unaffected either way.

When a rule side mentions variables absent from the matched side (for
example the reverse of ``w -> 0``), the free variables range over words in
the search alphabet, bounded by the length cap.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from . import words as W
from .words import Identity, Word

ZERO = "0"
ZERO_WORD = Word((ZERO,))


class DeductionError(Exception):
    pass


class VariableAbsentError(DeductionError):
    pass


class ZeroIdentityError(DeductionError):
    pass


class BadParametersError(DeductionError):
    pass


@dataclass(frozen=True)
class RewriteSystem:
    axioms: tuple[Identity, ...]

    def __init__(self, axioms):
        object.__setattr__(self, "axioms", tuple(axioms))

    @property
    def zero_enabled(self) -> bool:
        return any(ax.rhs is None for ax in self.axioms)


def _collapse(letters: tuple[str, ...]) -> tuple[str, ...]:
    if ZERO in letters and len(letters) > 1:
        return (ZERO,)
    return letters


@lru_cache(maxsize=512)
def _compiled_rules(axioms: tuple[Identity, ...]):
    rules = []
    for idx, ax in enumerate(axioms):
        lhs = ax.lhs.letters
        rhs = (ZERO,) if ax.rhs is None else ax.rhs.letters
        rules.append((lhs, rhs, idx, 1))
        rules.append((rhs, lhs, idx, -1))
    return tuple(rules)


def _matches(pattern: tuple[str, ...], word: tuple[str, ...], start: int):
    """All (end, binding) with the pattern's letters bound to non-empty
    factors whose concatenation equals word[start:end].  Letters bind
    left-to-right with backtracking; the reserved "0" only matches itself."""
    n = len(word)
    results: list[tuple[int, dict]] = []
    binding: dict[str, tuple[str, ...]] = {}

    def rec(pi: int, pos: int):
        if pi == len(pattern):
            results.append((pos, dict(binding)))
            return
        letter = pattern[pi]
        if letter == ZERO:
            if pos < n and word[pos] == ZERO:
                rec(pi + 1, pos + 1)
            return
        bound = binding.get(letter)
        if bound is not None:
            size = len(bound)
            if word[pos : pos + size] == bound:
                rec(pi + 1, pos + size)
            return
        limit = n - pos - (len(pattern) - pi - 1)
        for size in range(1, limit + 1):
            binding[letter] = word[pos : pos + size]
            rec(pi + 1, pos + size)
        binding.pop(letter, None)

    rec(0, start)
    return results


def _free_assignments(free: list[str], occs: dict[str, int], budget: int, alphabet: tuple[str, ...]):
    """Assignments of alphabet words to the free letters with total added
    length (occurrences times word length) within budget."""
    if not free:
        yield {}
        return
    letter = free[0]
    rest = free[1:]
    reserve = sum(occs[l] for l in rest)
    max_len = (budget - reserve) // occs[letter]
    for size in range(1, max_len + 1):
        for combo in product(alphabet, repeat=size):
            for tail in _free_assignments(rest, occs, budget - occs[letter] * size, alphabet):
                tail[letter] = combo
                yield tail


def _step_results(w: tuple[str, ...], axioms: tuple[Identity, ...], max_len: int, alphabet: tuple[str, ...]):
    """All distinct words one elementary rewrite away from ``w``; values are
    (axiom, direction, position, end, binding) for the first derivation found
    in deterministic rule/position order."""
    results: dict[tuple[str, ...], tuple] = {}
    for pat, res, ax, direction in _compiled_rules(axioms):
        for start in range(len(w)):
            for end, binding in _matches(pat, w, start):
                free = [l for l in dict.fromkeys(res) if l != ZERO and l not in binding]
                if free:
                    if not alphabet:
                        continue
                    fixed = sum(len(binding[l]) for l in res if l in binding)
                    fixed += sum(1 for l in res if l == ZERO)
                    budget = max_len - (len(w) - (end - start)) - fixed
                    occs = {l: sum(1 for r in res if r == l) for l in free}
                    if budget < sum(occs.values()):
                        continue
                    assignments = _free_assignments(free, occs, budget, alphabet)
                else:
                    assignments = ({},)
                for extra in assignments:
                    full = {**binding, **extra}
                    repl: list[str] = []
                    for letter in res:
                        if letter == ZERO:
                            repl.append(ZERO)
                        else:
                            repl.extend(full[letter])
                    new = _collapse(w[:start] + tuple(repl) + w[end:])
                    if len(new) > max_len or new == w or new in results:
                        continue
                    results[new] = (ax, direction, start, end, full)
    return results


@dataclass(frozen=True)
class Step:
    before: Word
    axiom: int
    direction: int  # +1 applies the axiom left-to-right, -1 right-to-left
    position: int
    binding: tuple[tuple[str, Word], ...]
    after: Word

    def to_json(self) -> dict:
        return {
            "before": self.before.to_text(),
            "axiom": self.axiom,
            "direction": "forward" if self.direction > 0 else "backward",
            "position": self.position,
            "binding": {var: w.to_text() for var, w in self.binding},
            "after": self.after.to_text(),
        }


@dataclass(frozen=True)
class DerivationProof:
    steps: tuple[Step, ...]

    def to_json(self) -> list[dict]:
        return [s.to_json() for s in self.steps]


@dataclass(frozen=True)
class SearchResult:
    status: str  # "yes" | "no" | "unknown"
    proof: DerivationProof | None
    expansions: int
    visited: int


def one_step(word: Word, system: RewriteSystem, max_len: int | None = None, alphabet=None) -> list[Word]:
    """Words reachable from ``word`` by one elementary rewrite, sorted;
    results longer than ``max_len`` are discarded."""
    w = word.letters
    if max_len is None:
        max_len = 2 * len(w) + 4
    if alphabet is None:
        alphabet = tuple(sorted(set(w) - {ZERO}))
    found = _step_results(w, system.axioms, max_len, tuple(alphabet))
    return [Word(t) for t in sorted(found)]


def _make_step(before: tuple, info: tuple, after: tuple) -> Step:
    ax, direction, start, _end, binding = info
    return Step(
        before=Word(before),
        axiom=ax,
        direction=direction,
        position=start,
        binding=tuple(sorted((v, Word(t)) for v, t in binding.items())),
        after=Word(after),
    )


def _invert_step(step: Step) -> Step:
    return Step(
        before=step.after,
        axiom=step.axiom,
        direction=-step.direction,
        position=step.position,
        binding=step.binding,
        after=step.before,
    )


def derivable(
    u: Word,
    v: Word,
    system: RewriteSystem,
    max_len: int | None = None,
    max_steps: int | None = None,
    alphabet=None,
) -> SearchResult:
    """Bidirectional bounded search for a derivation of ``u = v``.

    ``max_steps`` bounds node expansions.  The target-side frontier skips
    context-collapsing steps (a proper factor rewritten to 0 swallows its
    context, which has no elementary inverse), so found proofs always
    replay; "no" is decided solely by exhausting the source side, which uses
    the full step relation.
    """
    wu, wv = u.letters, v.letters
    if max_len is None:
        max_len = 2 * max(len(wu), len(wv)) + 4
    if max_steps is None:
        max_steps = 10**5
    if alphabet is None:
        alphabet = tuple(sorted((set(wu) | set(wv)) - {ZERO}))
    alphabet = tuple(alphabet)
    if wu == wv:
        return SearchResult("yes", DerivationProof(()), 0, 1)

    parent_u: dict[tuple, tuple | None] = {wu: None}
    parent_v: dict[tuple, tuple | None] = {wv: None}
    queue_u: deque = deque([wu])
    queue_v: deque = deque([wv])
    axioms = system.axioms
    expansions = 0
    meet = None

    while meet is None:
        if not queue_u:
            return SearchResult("no", None, expansions, len(parent_u) + len(parent_v))
        if expansions >= max_steps:
            return SearchResult("unknown", None, expansions, len(parent_u) + len(parent_v))
        expand_u = not queue_v or len(parent_u) <= len(parent_v)
        side_parent, side_queue = (parent_u, queue_u) if expand_u else (parent_v, queue_v)
        other_parent = parent_v if expand_u else parent_u
        w = side_queue.popleft()
        expansions += 1
        found = _step_results(w, axioms, max_len, alphabet)
        for new in sorted(found):
            if new in side_parent:
                continue
            if not expand_u:
                ax, direction, start, end, _b = found[new]
                if new == (ZERO,) and not (start == 0 and end == len(w)):
                    continue  # context-collapse: no elementary inverse
            side_parent[new] = (w, found[new])
            side_queue.append(new)
            if new in other_parent:
                meet = new
                break

    steps: list[Step] = []
    chain_u = []
    cur = meet
    while parent_u[cur] is not None:
        prev, info = parent_u[cur]
        chain_u.append(_make_step(prev, info, cur))
        cur = prev
    steps.extend(reversed(chain_u))
    cur = meet
    while parent_v[cur] is not None:
        prev, info = parent_v[cur]
        steps.append(_invert_step(_make_step(prev, info, cur)))
        cur = prev
    return SearchResult(
        "yes", DerivationProof(tuple(steps)), expansions, len(parent_u) + len(parent_v)
    )


def verify_proof(proof: DerivationProof, system: RewriteSystem, start: Word | None = None, end: Word | None = None) -> bool:
    """Re-validate every step as an elementary rewrite and check chaining."""
    prev_after = None
    for step in proof.steps:
        if prev_after is not None and step.before != prev_after:
            return False
        prev_after = step.after
        if not 0 <= step.axiom < len(system.axioms):
            return False
        ax = system.axioms[step.axiom]
        lhs = ax.lhs.letters
        rhs = (ZERO,) if ax.rhs is None else ax.rhs.letters
        pat, res = (lhs, rhs) if step.direction > 0 else (rhs, lhs)
        sigma = {var: w.letters for var, w in step.binding}
        try:
            instance = tuple(
                letter_part
                for letter in pat
                for letter_part in ((ZERO,) if letter == ZERO else sigma[letter])
            )
            replacement = tuple(
                letter_part
                for letter in res
                for letter_part in ((ZERO,) if letter == ZERO else sigma[letter])
            )
        except KeyError:
            return False
        before = step.before.letters
        pos = step.position
        if before[pos : pos + len(instance)] != instance:
            return False
        rebuilt = _collapse(before[:pos] + replacement + before[pos + len(instance) :])
        if rebuilt != step.after.letters:
            return False
    if proof.steps:
        if start is not None and proof.steps[0].before != start:
            return False
        if end is not None and proof.steps[-1].after != end:
            return False
    elif start is not None and end is not None and start != end:
        return False
    return True


def substitute_in_identity(ident: Identity, var: str, replacement: Word) -> Identity:
    """Replace every occurrence of ``var`` on both sides."""
    if var not in ident.content:
        raise VariableAbsentError(f"variable {var!r} does not occur in {ident.to_text()!r}")
    lhs = W.substitute(ident.lhs, var, replacement)
    rhs = None if ident.rhs is None else W.substitute(ident.rhs, var, replacement)
    return Identity(lhs, rhs)


def multiply_identity(ident: Identity, side: str, w: Word) -> Identity:
    """Prepend ("left") or append ("right") ``w`` to both sides."""
    if ident.rhs is None:
        raise ZeroIdentityError("cannot multiply a zero identity; absorption already covers it")
    if side == "left":
        return Identity(w.concat(ident.lhs), w.concat(ident.rhs))
    if side == "right":
        return Identity(ident.lhs.concat(w), ident.rhs.concat(w))
    raise ValueError(f"side must be 'left' or 'right', got {side!r}")
