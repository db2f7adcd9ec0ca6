import pytest
from hypothesis import given, settings, strategies as st

from lattice_forge import words as W
from lattice_forge.deduction import (
    DerivationProof,
    RewriteSystem,
    Step,
    VariableAbsentError,
    ZERO_WORD,
    ZeroIdentityError,
    derivable,
    multiply_identity,
    one_step,
    substitute_in_identity,
    verify_proof,
)
from lattice_forge.words import parse_identity, parse_word


@pytest.fixture(scope="module")
def nil_system():
    return RewriteSystem((parse_identity("x^2*y = 0"), parse_identity("x*y = y*x")))


def _texts(words):
    return {w.to_text() for w in words}


def test_one_step_zero_rule():
    system = RewriteSystem((parse_identity("x^2*y = 0"),))
    assert _texts(one_step(parse_word("x^2*y"), system)) == {"0"}


def test_one_step_commutativity():
    system = RewriteSystem((parse_identity("x*y = y*x"),))
    assert _texts(one_step(parse_word("x*y*x"), system)) == {"y*x^2", "x^2*y"}


def test_one_step_block_power():
    ident = W.block_power_identity(3, 1, 1, 2)  # x1*x2*x3 = x1^2*x2*x3
    system = RewriteSystem((ident,))
    results = _texts(one_step(parse_word("x1*x2*x3"), system))
    assert "x1^2*x2*x3" in results


def test_derivable_examples(nil_system):
    result = derivable(parse_word("x^3"), ZERO_WORD, nil_system)
    assert result.status == "yes"
    assert verify_proof(result.proof, nil_system, parse_word("x^3"), ZERO_WORD)

    swap = RewriteSystem((parse_identity("x*y = y*x"),))
    result = derivable(parse_word("x*y"), parse_word("y*x"), swap)
    assert result.status == "yes" and len(result.proof.steps) == 1


def test_square_is_isoterm(nil_system):
    result = derivable(parse_word("x^2"), ZERO_WORD, nil_system, max_len=6)
    assert result.status == "no"
    # the square's reachable set is just itself: one expansion exhausts it
    assert result.expansions == 1
    assert derivable(parse_word("x^2"), parse_word("y^2"), nil_system).status == "no"


def test_derivable_through_zero(nil_system):
    # two different annihilated words meet at the zero word
    result = derivable(parse_word("x*y*x"), parse_word("y^2*x"), nil_system)
    assert result.status == "yes"
    assert verify_proof(result.proof, nil_system, parse_word("x*y*x"), parse_word("y^2*x"))


def test_derivable_unknown_on_tiny_budget(nil_system):
    result = derivable(parse_word("x*y*z*x*y"), ZERO_WORD, nil_system, max_steps=1)
    assert result.status == "unknown"


def test_verdict_symmetry(nil_system):
    pairs = [
        ("x*y*x", "0"),
        ("x*y", "y*x"),
        ("x^2", "0"),
        ("x*y*z", "z*y*x"),
        ("x*y", "x*z"),
    ]
    for left, right in pairs:
        u = parse_word(left) if left != "0" else ZERO_WORD
        v = parse_word(right) if right != "0" else ZERO_WORD
        assert (
            derivable(u, v, nil_system).status == derivable(v, u, nil_system).status
        ), (left, right)


def test_proofs_replay_and_tampering_fails(nil_system):
    result = derivable(parse_word("x*y^2"), ZERO_WORD, nil_system)
    assert result.status == "yes"
    proof = result.proof
    assert verify_proof(proof, nil_system, parse_word("x*y^2"), ZERO_WORD)
    # flip a direction: the step no longer validates
    step = proof.steps[0]
    bad = Step(step.before, step.axiom, -step.direction, step.position, step.binding, step.after)
    assert not verify_proof(DerivationProof((bad,) + proof.steps[1:]), nil_system)
    # break the chain
    if len(proof.steps) >= 2:
        assert not verify_proof(DerivationProof((proof.steps[0], proof.steps[0])), nil_system)


def test_empty_proof_needs_equal_endpoints(nil_system):
    empty = DerivationProof(())
    assert verify_proof(empty, nil_system, parse_word("x"), parse_word("x"))
    assert not verify_proof(empty, nil_system, parse_word("x"), parse_word("y"))


def test_substitute_in_identity():
    ident = parse_identity("x1*x2 = x1^2*x2")
    out = substitute_in_identity(ident, "x2", parse_word("x2*x3"))
    assert out.to_text() == "x1*x2*x3 = x1^2*x2*x3"
    with pytest.raises(VariableAbsentError):
        substitute_in_identity(ident, "zz", parse_word("x1"))
    zero = parse_identity("x^2*y = 0")
    out = substitute_in_identity(zero, "y", parse_word("y*z"))
    assert out.to_text() == "x^2*y*z = 0"


def test_substitution_reproduces_power_pump():
    # substituting (x2*x3)^(r-1)*x4 for x4 aligns the two power identities,
    # here with n=4, blocks (2..3) and exponent r=2
    base = W.block_power_identity(4, 2, 3, 2)
    rhs_block = parse_word("x2*x3")
    out = substitute_in_identity(
        W.block_power_identity(4, 1, 1, 2), "x4", rhs_block.concat(parse_word("x4"))
    )
    assert out.lhs.letters == ("x1", "x2", "x3", "x2", "x3", "x4")
    assert out.lhs == base.rhs


def test_multiply_identity():
    ident = parse_identity("x*y = y*x")
    assert multiply_identity(ident, "right", parse_word("z")).to_text() == "x*y*z = y*x*z"
    assert multiply_identity(ident, "left", parse_word("z")).to_text() == "z*x*y = z*y*x"
    with pytest.raises(ZeroIdentityError):
        multiply_identity(parse_identity("x^2 = 0"), "left", parse_word("z"))
    with pytest.raises(ValueError):
        multiply_identity(ident, "sideways", parse_word("z"))


def test_multiplication_reproduces_left_pump():
    # left-multiplying by the block power matches substitution-free pumping
    # (n=2, block 1..2, exponents l=2 applied to the r=3 identity)
    base_r = W.block_power_identity(2, 1, 2, 3)
    pumped = multiply_identity(base_r, "left", parse_word("x1*x2"))
    assert pumped.lhs.letters == ("x1", "x2") * 2
    assert pumped.rhs.letters == ("x1", "x2") * 4


def test_free_variable_expansion():
    # with x*y = x^2 one can grow any word and then kill it
    system = RewriteSystem(
        (parse_identity("x^2*y = 0"), parse_identity("x*y = y*x"), parse_identity("x*y = x^2"))
    )
    result = derivable(parse_word("x^2"), ZERO_WORD, system, max_len=6)
    assert result.status == "yes"
    assert verify_proof(result.proof, system, parse_word("x^2"), ZERO_WORD)
    result = derivable(parse_word("x*y"), ZERO_WORD, system, max_len=6)
    assert result.status == "yes"


def test_derivable_same_word(nil_system):
    result = derivable(parse_word("x*y"), parse_word("x*y"), nil_system)
    assert result.status == "yes" and result.proof.steps == ()


@settings(max_examples=40, deadline=None)
@given(
    left=st.lists(st.sampled_from("xy"), min_size=1, max_size=5),
    right=st.lists(st.sampled_from("xy"), min_size=1, max_size=5),
)
def test_verdicts_match_normal_forms_and_proofs_replay(nil_system, left, right):
    u, v = W.Word(tuple(left)), W.Word(tuple(right))
    result = derivable(u, v, nil_system, max_len=7)
    assert result.status == ("yes" if W.normal_form(u) == W.normal_form(v) else "no")
    if result.proof is not None:
        assert verify_proof(result.proof, nil_system, u, v)


def test_step_json(nil_system):
    result = derivable(parse_word("x^3"), ZERO_WORD, nil_system)
    data = result.proof.to_json()
    assert data[0]["before"] == "x^3"
    assert data[-1]["after"] == "0"
    assert set(data[0]) == {"before", "axiom", "direction", "position", "binding", "after"}
