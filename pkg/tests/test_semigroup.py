from itertools import product

import numpy as np
import pytest

from lattice_forge import semigroup as sgp
from lattice_forge import words as W
from lattice_forge.semigroup import (
    build_semigroup,
    direct_product,
    eval_word,
    nilpotency_index,
    power_identity_witness,
    predicates,
    satisfies,
    word_values,
    zero_element,
)
from lattice_forge.words import parse_identity, parse_word


def test_build_examples():
    zm2 = build_semigroup([[0, 0], [0, 0]], name="ZM2")
    assert zm2.order == 2
    sl2 = build_semigroup([[0, 0], [0, 1]], name="SL2")
    assert sl2.mul(1, 1) == 1


def test_build_rejects_bad_tables():
    # (1*1)*1 = 0*1 = 1 but 1*(1*1) = 1*0 = 0
    with pytest.raises(sgp.NotAssociativeError) as excinfo:
        build_semigroup([[0, 1], [0, 0]])
    assert excinfo.value.triple is not None
    with pytest.raises(sgp.TableRangeError):
        build_semigroup([[0, 2], [0, 0]])
    with pytest.raises(sgp.TableRangeError):
        build_semigroup([[0, 0]])


def test_eval_word(catalog_semigroups):
    SL2, ZM2, N3 = (catalog_semigroups[k] for k in ("SL2", "ZM2", "N3"))
    assert eval_word(SL2, parse_word("x^2"), {"x": 1}) == 1
    assert eval_word(ZM2, parse_word("x*y"), {"x": 1, "y": 1}) == 0
    assert eval_word(N3, parse_word("x^3"), {"x": 0}) == 2  # the zero of N3
    with pytest.raises(sgp.UnboundVariableError):
        eval_word(SL2, parse_word("x*y"), {"x": 0})


def test_word_values_agree_with_eval(catalog_semigroups):
    N3 = catalog_semigroups["N3"]
    w = parse_word("x*y^2*x")
    var_order = ("x", "y")
    vals = word_values(N3, w, var_order)
    for x, y in product(range(N3.order), repeat=2):
        assert vals[x, y] == eval_word(N3, w, {"x": x, "y": y})


def test_satisfies_examples(catalog_semigroups):
    SL2, ZM2, N3 = (catalog_semigroups[k] for k in ("SL2", "ZM2", "N3"))
    assert satisfies(SL2, parse_identity("x = x^2"))[0]
    assert satisfies(ZM2, parse_identity("x1*x2 = 0"))[0]
    assert satisfies(SL2, parse_identity("x*y = y*x"))[0]
    assert satisfies(N3, parse_identity("x^2*y = 0"))[0]
    holds, witness = satisfies(SL2, parse_identity("x*y = x"))
    assert not holds and witness == {"x": 1, "y": 0}


def test_satisfies_zero_without_zero_element(catalog_semigroups):
    B2 = catalog_semigroups["B2"]
    assert zero_element(B2) is None
    holds, witness = satisfies(B2, parse_identity("x*y = 0"))
    assert not holds and witness is None


def test_zero_identity_matches_expanded_system(catalog_semigroups):
    """w = 0 must mean exactly: satisfies w*f = f*w and f*w = w for fresh f."""
    letters = ("x", "y")
    words = [
        W.Word(tuple(p))
        for length in range(1, 5)
        for p in product(letters, repeat=length)
    ]
    for S in catalog_semigroups.values():
        for w in words:
            direct = satisfies(S, W.Identity(w, None))[0]
            fw = W.Word(("f",) + w.letters)
            wf = W.Word(w.letters + ("f",))
            expanded = (
                satisfies(S, W.Identity(wf, fw))[0]
                and satisfies(S, W.Identity(fw, w))[0]
            )
            assert direct == expanded, (S.name, w.to_text())


def test_predicates(catalog_semigroups):
    profiles = {name: predicates(S) for name, S in catalog_semigroups.items()}
    assert profiles["ZM2"].nil and profiles["ZM2"].nilpotency_index == 2
    assert profiles["ZM3"].nilpotency_index == 2
    assert profiles["N3"].nil and profiles["N3"].nilpotency_index == 3
    assert profiles["N4"].nilpotency_index == 4
    sl2 = profiles["SL2"]
    assert sl2.band and sl2.semilattice and sl2.has_zero and not sl2.nil
    b2 = profiles["B2"]
    assert b2.band and not b2.commutative and not b2.has_zero
    t1 = profiles["T1"]
    assert t1.nil and t1.nilpotency_index == 1
    for profile in profiles.values():
        assert profile.nil == (profile.nilpotency_index is not None)


def test_direct_product(catalog_semigroups):
    ZM2, N3, SL2 = (catalog_semigroups[k] for k in ("ZM2", "N3", "SL2"))
    P = direct_product(ZM2, ZM2)
    assert P.order == 4 and predicates(P).nilpotency_index == 2
    P = direct_product(ZM2, N3)
    assert predicates(P).nilpotency_index == 3
    P = direct_product(SL2, SL2)
    assert predicates(P).semilattice


def test_nil_product_law_all_pairs(catalog_semigroups):
    nils = [catalog_semigroups[name] for name in ("ZM2", "ZM3", "N3", "N4")]
    for S in nils:
        for T in nils:
            left = nilpotency_index(S)
            right = nilpotency_index(T)
            assert nilpotency_index(direct_product(S, T)) == max(left, right)


def test_direct_product_size_limit(catalog_semigroups):
    big = build_semigroup(np.zeros((70, 70), dtype=int))
    with pytest.raises(sgp.ProductSizeError):
        direct_product(big, big)


def test_power_identity_witness(catalog_semigroups):
    ZM2, SL2, N3 = (catalog_semigroups[k] for k in ("ZM2", "SL2", "N3"))
    assert power_identity_witness(ZM2, 2, 4) == (2, 1, 1)
    assert power_identity_witness(SL2, 1, 4) == (2, 1, 1)
    assert power_identity_witness(N3, 2, 4) is None
    assert power_identity_witness(N3, 3, 4) is not None
    with pytest.raises(ValueError):
        power_identity_witness(ZM2, 0, 4)


def test_power_identity_witness_monotone(catalog_semigroups):
    for S in catalog_semigroups.values():
        for n in range(1, 4):
            if power_identity_witness(S, n, 3) is not None:
                assert power_identity_witness(S, n + 1, 3) is not None, (S.name, n)


def _value_vectors(S, words, var_order):
    return {w: word_values(S, w, var_order).ravel().tobytes() for w in words}


def test_split_law_content(catalog_semigroups):
    """A nil semigroup satisfying u = v with different contents satisfies u = 0."""
    letters = ("x", "y", "z")
    words = [
        W.Word(p)
        for length in range(1, 5)
        for p in product(letters, repeat=length)
    ]
    for name in ("ZM2", "ZM3", "N3", "N4"):
        S = catalog_semigroups[name]
        z = zero_element(S)
        vecs = _value_vectors(S, words, letters)
        zero_vec = {
            w: bool((word_values(S, w, letters) == z).all()) for w in words
        }
        for u in words:
            for v in words:
                if u.content != v.content and vecs[u] == vecs[v]:
                    assert zero_vec[u], (name, u.to_text(), v.to_text())


def test_split_law_self_embedding(catalog_semigroups):
    """A nil semigroup satisfying u = v*u*w (v, w not both empty) has u = 0."""
    letters = ("x", "y", "z")

    def words_of(lengths):
        for length in lengths:
            yield from (W.Word(p) for p in product(letters, repeat=length))

    for name in ("ZM2", "ZM3", "N3", "N4"):
        S = catalog_semigroups[name]
        z = zero_element(S)
        for u_len in range(1, 4):
            for u in words_of([u_len]):
                u_vals = word_values(S, u, letters)
                u_is_zero = bool((u_vals == z).all())
                for pad_total in range(1, 6 - u_len):
                    for v_len in range(0, pad_total + 1):
                        w_len = pad_total - v_len
                        vs = list(words_of([v_len])) if v_len else [None]
                        ws = list(words_of([w_len])) if w_len else [None]
                        for v in vs:
                            for wrd in ws:
                                mid = (
                                    (v.letters if v else ())
                                    + u.letters
                                    + (wrd.letters if wrd else ())
                                )
                                rhs = W.Word(mid)
                                if (word_values(S, rhs, letters) == u_vals).all():
                                    assert u_is_zero, (name, u.to_text(), rhs.to_text())


def test_json_round_trip(catalog_semigroups):
    for S in catalog_semigroups.values():
        data = sgp.to_json(S)
        again = sgp.from_json(data)
        assert again == S
        assert sgp.to_json(again) == data
