"""Replay of the two identity-transfer arguments at concrete parameters.

``replay_power_transfer`` takes two power identities over x1..xn —
"left":  x1..xn = x1..x(i-1) (xi..xj)^l x(j+1)..xn
"right": x1..xn = x1..x(ip-1) (xip..xjp)^r x(jp+1)..xn
— constructs the bridging identities of the relevant alignment case by
substitution/one-sided multiplication, and verifies by an explicit rewrite
chain that one base identity is derivable from the other plus the bridges.
Bridges built from the *derived* base must hold in the ambient commutative
square-annihilating theory, which is certified by checking that both sides
have zero normal form.

``replay_exponent_bridge`` checks the exponent-arithmetic argument that two
competing one-variable power identities x^2 = x^m and x^2 = x^k (m != k)
collide: the bridging identity x^(2+gap) = x^(min+gap) holds in the ambient
theory (both sides have zero normal form) and the resulting exponent
2+gap undercuts the larger of m, k, contradicting its minimality.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import words as W
from .deduction import (
    BadParametersError,
    DerivationProof,
    Identity,
    RewriteSystem,
    Step,
    multiply_identity,
    substitute_in_identity,
    verify_proof,
)
from .words import Word, normal_form


def _segment(i: int, j: int) -> list[str]:
    return [f"x{t}" for t in range(i, j + 1)]


def _word(letters: list[str]) -> Word:
    return Word(tuple(letters))


def _zero_in_ambient(w: Word) -> bool:
    return normal_form(w).kind == "zero"


def _identity_step(source: Word, ident: Identity, idx: int, forward: bool) -> Step:
    binding = tuple((v, Word((v,))) for v in sorted(ident.content))
    target = ident.rhs if forward else ident.lhs
    return Step(
        before=source,
        axiom=idx,
        direction=1 if forward else -1,
        position=0,
        binding=binding,
        after=target,
    )


@dataclass(frozen=True)
class TransferReplay:
    params: dict
    branch: str
    derived: str  # which base identity the chain establishes: "left" or "right"
    identities: tuple[tuple[str, Identity], ...]
    zero_checks: tuple[tuple[str, bool], ...]
    rhs_coincide: bool | None
    construction_ok: bool
    chain: DerivationProof
    chain_ok: bool

    @property
    def ok(self) -> bool:
        if not (self.construction_ok and self.chain_ok):
            return False
        if self.rhs_coincide is False:
            return False
        return all(passed for _, passed in self.zero_checks)

    def to_json(self) -> dict:
        return {
            "params": self.params,
            "branch": self.branch,
            "derived": self.derived,
            "identities": {label: ident.to_text() for label, ident in self.identities},
            "zero_checks": {label: passed for label, passed in self.zero_checks},
            "rhs_coincide": self.rhs_coincide,
            "construction_ok": self.construction_ok,
            "chain_ok": self.chain_ok,
            "chain": self.chain.to_json(),
            "ok": self.ok,
        }


def _extends_right(n, il, jl, el, ir, jr, er, derived, params, branch):
    """Alignment with the derived block ending strictly left of the assumed
    block (jl < jr).  The bridge is an instance of the derived base whose
    left side equals the assumed base's right side; the closer is an
    instance of the assumed base whose left side equals the derived base's
    right side; their right sides coincide letter-for-letter."""
    base_l = W.block_power_identity(n, il, jl, el)
    base_r = W.block_power_identity(n, ir, jr, er)
    block_r = _word(_segment(ir, jr))
    block_l = _word(_segment(il, jl))

    if jr < n:
        bridge = substitute_in_identity(
            base_l, f"x{jr + 1}", block_r.power(er - 1).concat(Word((f"x{jr + 1}",)))
        )
    else:
        bridge = multiply_identity(base_l, "right", block_r.power(er - 1))
    if il > 1:
        closer = substitute_in_identity(
            base_r, f"x{il - 1}", Word((f"x{il - 1}",)).concat(block_l.power(el - 1))
        )
    else:
        closer = multiply_identity(base_r, "left", block_l.power(el - 1))

    construction_ok = bridge.lhs == base_r.rhs and closer.lhs == base_l.rhs
    rhs_coincide = bridge.rhs == closer.rhs

    system = RewriteSystem((base_l, base_r, bridge, closer))
    lin = base_l.lhs
    steps = (
        _identity_step(lin, base_r, 1, forward=True),
        _identity_step(base_r.rhs, bridge, 2, forward=True),
        _identity_step(closer.rhs, closer, 3, forward=False),
    )
    chain = DerivationProof(steps)
    chain_ok = verify_proof(chain, system, start=lin, end=base_l.rhs)

    return TransferReplay(
        params=params,
        branch=branch,
        derived=derived,
        identities=(
            ("left_power_identity", base_l),
            ("right_power_identity", base_r),
            ("bridge", bridge),
            ("closer", closer),
        ),
        zero_checks=(
            ("bridge.lhs", _zero_in_ambient(bridge.lhs)),
            ("bridge.rhs", _zero_in_ambient(bridge.rhs)),
        ),
        rhs_coincide=rhs_coincide,
        construction_ok=construction_ok,
        chain=chain,
        chain_ok=chain_ok,
    )


def _equal_blocks(n, i, j, l, r, params):
    """Both identities repeat the same block xi..xj; pumping the derived
    base by r-1 and the assumed base by l-1 copies lands both on the
    (l+r-1)-th power, which closes the chain."""
    base_l = W.block_power_identity(n, i, j, l)
    base_r = W.block_power_identity(n, i, j, r)
    block = _word(_segment(i, j))

    def pump(base: Identity, copies: int) -> Identity:
        if copies == 0:
            return base
        if j < n:
            return substitute_in_identity(
                base, f"x{j + 1}", block.power(copies).concat(Word((f"x{j + 1}",)))
            )
        return multiply_identity(base, "right", block.power(copies))

    bridge = pump(base_l, r - 1)
    closer = pump(base_r, l - 1)
    construction_ok = bridge.lhs == base_r.rhs and closer.lhs == base_l.rhs
    rhs_coincide = bridge.rhs == closer.rhs

    system = RewriteSystem((base_l, base_r, bridge, closer))
    lin = base_l.lhs
    steps = (
        _identity_step(lin, base_r, 1, forward=True),
        _identity_step(base_r.rhs, bridge, 2, forward=True),
        _identity_step(closer.rhs, closer, 3, forward=False),
    )
    chain = DerivationProof(steps)
    chain_ok = verify_proof(chain, system, start=lin, end=base_l.rhs)

    return TransferReplay(
        params=params,
        branch="equal_blocks",
        derived="left",
        identities=(
            ("left_power_identity", base_l),
            ("right_power_identity", base_r),
            ("bridge", bridge),
            ("closer", closer),
        ),
        zero_checks=(
            ("bridge.lhs", _zero_in_ambient(bridge.lhs)),
            ("bridge.rhs", _zero_in_ambient(bridge.rhs)),
        ),
        rhs_coincide=rhs_coincide,
        construction_ok=construction_ok,
        chain=chain,
        chain_ok=chain_ok,
    )


def _nested_block(n, i, j, l, ip, jp, r, params):
    """The assumed block xip..xjp sits strictly inside the derived block
    xi..xj (i < ip, jp <= j).  Substituting the assumed power into the
    derived base nests it, giving the composite block C; a ladder of
    instances of the assumed base then trades copies of C for copies of
    xi..xj one at a time."""
    base_l = W.block_power_identity(n, i, j, l)
    base_r = W.block_power_identity(n, ip, jp, r)
    block = _word(_segment(i, j))
    block_p = _word(_segment(ip, jp))
    composite = _word(_segment(i, ip - 1) + _segment(ip, jp) * r + _segment(jp + 1, j))

    bridge = substitute_in_identity(
        base_l, f"x{ip - 1}", Word((f"x{ip - 1}",)).concat(block_p.power(r - 1))
    )
    expected_bridge_rhs = _word(
        _segment(1, i - 1) + list(composite.letters) * l + _segment(j + 1, n)
    )
    construction_ok = bridge.lhs == base_r.rhs and bridge.rhs == expected_bridge_rhs

    ladder: list[Identity] = []
    for s in range(l - 1, -1, -1):
        t = l - s
        rung = base_r
        if s > 0:
            if i > 1:
                rung = substitute_in_identity(
                    rung, f"x{i - 1}", Word((f"x{i - 1}",)).concat(composite.power(s))
                )
            else:
                rung = multiply_identity(rung, "left", composite.power(s))
        if t > 1:
            if j < n:
                rung = substitute_in_identity(
                    rung, f"x{j + 1}", block.power(t - 1).concat(Word((f"x{j + 1}",)))
                )
            else:
                rung = multiply_identity(rung, "right", block.power(t - 1))
        expected_lhs = _word(
            _segment(1, i - 1)
            + list(composite.letters) * s
            + list(block.letters) * t
            + _segment(j + 1, n)
        )
        expected_rhs = _word(
            _segment(1, i - 1)
            + list(composite.letters) * (s + 1)
            + list(block.letters) * (t - 1)
            + _segment(j + 1, n)
        )
        construction_ok = construction_ok and rung.lhs == expected_lhs and rung.rhs == expected_rhs
        ladder.append(rung)

    axioms = [base_l, base_r, bridge] + ladder
    system = RewriteSystem(tuple(axioms))
    lin = base_l.lhs
    steps = [
        _identity_step(lin, base_r, 1, forward=True),
        _identity_step(base_r.rhs, bridge, 2, forward=True),
    ]
    cursor = bridge.rhs
    for offset, rung in enumerate(ladder):
        steps.append(_identity_step(cursor, rung, 3 + offset, forward=False))
        cursor = rung.lhs
    chain = DerivationProof(tuple(steps))
    chain_ok = verify_proof(chain, system, start=lin, end=base_l.rhs)

    identities = [
        ("left_power_identity", base_l),
        ("right_power_identity", base_r),
        ("bridge", bridge),
    ]
    identities += [
        (f"ladder_s{l - 1 - off}_t{off + 1}", rung) for off, rung in enumerate(ladder)
    ]

    return TransferReplay(
        params=params,
        branch="nested_block",
        derived="left",
        identities=tuple(identities),
        zero_checks=(
            ("bridge.lhs", _zero_in_ambient(bridge.lhs)),
            ("bridge.rhs", _zero_in_ambient(bridge.rhs)),
        ),
        rhs_coincide=None,
        construction_ok=construction_ok,
        chain=chain,
        chain_ok=chain_ok,
    )


def replay_power_transfer(n: int, i: int, j: int, l: int, ip: int, jp: int, r: int) -> TransferReplay:
    """Dispatch on the block alignment; requires 1 <= i <= j <= n,
    1 <= ip <= jp <= n, i <= ip, and exponents >= 2."""
    if not (1 <= i <= j <= n and 1 <= ip <= jp <= n):
        raise BadParametersError(f"need 1 <= i <= j <= n and 1 <= ip <= jp <= n, got {(n, i, j, ip, jp)}")
    if i > ip:
        raise BadParametersError(f"need i <= ip, got i={i}, ip={ip}")
    if l < 2 or r < 2:
        raise BadParametersError(f"exponents must be >= 2, got l={l}, r={r}")
    params = {"n": n, "i": i, "j": j, "l": l, "ip": ip, "jp": jp, "r": r}
    if j < jp:
        return _extends_right(n, i, j, l, ip, jp, r, "left", params, "block_extends_right")
    if i == ip and j == jp:
        return _equal_blocks(n, i, j, l, r, params)
    if i < ip:
        return _nested_block(n, i, j, l, ip, jp, r, params)
    # i == ip and jp < j: the mirrored alignment derives the right base from
    # the left one (the two bases simply swap roles)
    return _extends_right(n, ip, jp, r, i, j, l, "right", params, "block_extends_right_swapped")


@dataclass(frozen=True)
class ExponentBridgeReplay:
    m: int
    k: int
    gap: int
    bridge: Identity
    bridge_lhs_zero: bool
    bridge_rhs_zero: bool
    exponent_chain: tuple[int, ...]
    strict_inequality: bool
    minimality_contradicted: str

    @property
    def ok(self) -> bool:
        return self.bridge_lhs_zero and self.bridge_rhs_zero and self.strict_inequality

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "k": self.k,
            "gap": self.gap,
            "bridge": self.bridge.to_text(),
            "bridge_lhs_zero": self.bridge_lhs_zero,
            "bridge_rhs_zero": self.bridge_rhs_zero,
            "exponent_chain": list(self.exponent_chain),
            "strict_inequality": self.strict_inequality,
            "minimality_contradicted": self.minimality_contradicted,
            "ok": self.ok,
        }


def replay_exponent_bridge(m: int, k: int) -> ExponentBridgeReplay:
    """Collide x^2 = x^m against x^2 = x^k for m, k >= 3, m != k."""
    if m < 3 or k < 3:
        raise BadParametersError(f"exponents must be >= 3, got m={m}, k={k}")
    if m == k:
        raise BadParametersError("exponents must differ")
    gap = abs(m - k)
    lo, hi = min(m, k), max(m, k)
    lhs = Word(("x",) * (2 + gap))
    rhs = Word(("x",) * (lo + gap))  # lo + gap == hi
    bridge = Identity(lhs, rhs)
    return ExponentBridgeReplay(
        m=m,
        k=k,
        gap=gap,
        bridge=bridge,
        bridge_lhs_zero=_zero_in_ambient(lhs),
        bridge_rhs_zero=_zero_in_ambient(rhs),
        exponent_chain=(2, hi, 2 + gap),
        strict_inequality=2 + gap < hi,
        minimality_contradicted="m" if k < m else "k",
    )
