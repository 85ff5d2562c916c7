import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from chamcovers import (
    GeneratorLetter,
    Word,
    WordParseError,
    act_h,
    act_h_inv,
    act_h_pow,
    act_neg,
    act_p1,
    act_p1_inv,
    act_p2,
    act_p2_inv,
    act_word,
    canonical_class,
    format_vector,
    format_word,
    from_entries,
    normalize,
    parse_group,
    parse_vector,
    parse_word,
    word_matrix,
)
from conftest import (
    entries_agree,
    oracle_h,
    oracle_h_inv,
    oracle_h_pow,
    oracle_neg,
    oracle_p1,
    oracle_p1_inv,
    oracle_p2,
    oracle_p2_inv,
    random_vector,
)

Z2 = parse_group("Z2")
Z3 = parse_group("Z3")
Z4 = parse_group("Z4")
V4 = parse_group("Z2xZ2")
GROUPS = [Z2, Z3, Z4, V4]

ACTIONS = [
    (act_p1, oracle_p1),
    (act_p1_inv, oracle_p1_inv),
    (act_p2, oracle_p2),
    (act_p2_inv, oracle_p2_inv),
    (act_neg, oracle_neg),
    (act_h, oracle_h),
    (act_h_inv, oracle_h_inv),
]


def test_actions_match_window_oracle_on_seeded_corpus():
    rng = random.Random(2024)
    for group in GROUPS:
        for _ in range(40):
            h = random_vector(group, rng)
            for act, oracle in ACTIONS:
                out = act(h)
                assert entries_agree(out, lambda k: oracle(h, k)), (
                    group.spec(),
                    format_vector(h),
                    act.__name__,
                )


def test_h_pow_matches_window_oracle():
    rng = random.Random(5150)
    for group in GROUPS:
        for _ in range(10):
            h = random_vector(group, rng)
            for n in (1, 2, 3, 5):
                out = act_h_pow(h, n)
                assert entries_agree(out, lambda k: oracle_h_pow(h, n, k))


def test_p1_example_over_z3():
    h = from_entries(Z3, {1: Z3.elem(1), -1: Z3.elem(2)})
    out = act_p1(h)
    assert out.entry(1) == Z3.elem(2)
    assert out.entry(2) == Z3.elem(2)
    assert out.entry(-1) == Z3.elem(0)


def test_p1_collapses_to_mirror_twisted_by_sums_over_z2():
    # Over Z2: (P1 h)_k = h_{-k}, so P1 swaps the two four-periodic vectors.
    h01 = parse_vector(Z2, "L=(1,1,0,0);R=(0,1,1,0)")
    h11 = parse_vector(Z2, "L=(0,1,1,0);R=(1,1,0,0)")
    assert act_p1(h01) == h11
    assert act_p1(h11) == h01


def test_p1_and_p2_fix_parity_vector():
    w1 = parse_vector(Z2, "L=(1,0);R=(1,0)")
    assert act_p1(w1) == w1
    assert act_p2(w1) == w1


def test_p2_fixes_four_periodic_vector():
    h01 = parse_vector(Z2, "L=(1,1,0,0);R=(0,1,1,0)")
    assert act_p2(h01) == h01


def test_h_fixes_parity_vector():
    w1 = parse_vector(Z2, "L=(1,0);R=(1,0)")
    assert act_h(w1) == w1


def test_h_shifts_single_support():
    h = parse_vector(Z2, "L=(0);R=1|(0)")
    out = act_h(h)
    assert format_vector(out) == "L=(0);R=0,1|(0)"
    assert act_h_inv(out) == h


def test_neg_is_entrywise_negation_and_involution():
    h = parse_vector(Z3, "L=1,2|(0,2);R=(1)")
    out = act_neg(h)
    for k in range(-12, 13):
        if k != 0:
            assert out.entry(k) == -h.entry(k)
    assert act_neg(out) == h


def test_round_trips_on_seeded_corpus():
    rng = random.Random(99)
    pairs = [(act_p1, act_p1_inv), (act_p2, act_p2_inv), (act_h, act_h_inv)]
    for group in GROUPS:
        for _ in range(25):
            h = random_vector(group, rng)
            for fwd, bwd in pairs:
                assert bwd(fwd(h)) == h
                assert fwd(bwd(h)) == h


def test_h_equals_neg_p1_p2():
    rng = random.Random(31337)
    for group in GROUPS:
        for _ in range(25):
            h = random_vector(group, rng)
            assert act_h(h) == act_neg(act_p1(act_p2(h)))


def test_h_pow_equals_iteration():
    rng = random.Random(404)
    for group in GROUPS:
        for _ in range(8):
            h = random_vector(group, rng)
            out = h
            for n in range(1, 6):
                out = act_h(out)
                assert act_h_pow(h, n) == out
            assert act_h_pow(h, 0) == h
            assert act_h_pow(act_h_pow(h, 3), -3) == h


def test_four_periodic_vector_fixed_by_h_squared_not_h():
    h01 = parse_vector(Z2, "L=(1,1,0,0);R=(0,1,1,0)")
    assert act_h(h01) != h01
    assert act_h_pow(h01, 2) == h01


def test_actions_commute_with_automorphisms():
    from chamcovers import apply_aut, automorphisms

    rng = random.Random(808)
    for group in (Z3, Z4, V4):
        for _ in range(10):
            h = random_vector(group, rng)
            for phi in automorphisms(group):
                for act, _ in ACTIONS:
                    assert act(normalize(apply_aut(phi, h))) == normalize(
                        apply_aut(phi, act(h))
                    )


def test_class_level_action_well_defined():
    # Vectors in one class stay in one class after any letter.
    a = parse_vector(Z3, "L=(0);R=1|(0)")
    b = parse_vector(Z3, "L=(0);R=2|(0)")
    assert canonical_class(a) == canonical_class(b)
    for act, _ in ACTIONS:
        assert canonical_class(act(a)) == canonical_class(act(b))


@given(st.data())
@settings(max_examples=40, deadline=None)
def test_actions_match_oracle_random(data):
    group = data.draw(st.sampled_from(GROUPS))
    seed = data.draw(st.integers(min_value=0, max_value=10**6))
    h = random_vector(group, random.Random(seed))
    act, oracle = data.draw(st.sampled_from(ACTIONS))
    assert entries_agree(act(h), lambda k: oracle(h, k), radius=40)


# --- words and matrices ---


def test_parse_word_examples():
    w = parse_word("P1^-2,H^3,P2")
    assert w.letters == (
        (GeneratorLetter.P1, -2),
        (GeneratorLetter.H, 3),
        (GeneratorLetter.P2, 1),
    )
    assert format_word(w) == "P1^-2,H^3,P2"
    assert parse_word("") == Word(())
    assert parse_word("H").letters == ((GeneratorLetter.H, 1),)


def test_parse_word_simplifies():
    assert parse_word("P1,P1").letters == ((GeneratorLetter.P1, 2),)
    assert parse_word("P1,P1^-1").letters == ()
    assert parse_word("P1^0").letters == ()
    assert parse_word("H^2,H^-1").letters == ((GeneratorLetter.H, 1),)


@pytest.mark.parametrize("bad", ["P3", "p1", "P1 ,P2", "P1^", "P1^^2", "Q", "P1,"])
def test_parse_word_rejects(bad):
    with pytest.raises(WordParseError):
        parse_word(bad)


def test_word_inverse_round_trip():
    rng = random.Random(606)
    w = parse_word("P1^-2,H^3,P2,-I")
    for group in (Z2, Z3):
        for _ in range(5):
            h = random_vector(group, rng)
            assert act_word(act_word(h, w), w.inverse()) == h


def test_letter_matrices():
    m1 = word_matrix(parse_word("P1"))
    assert (m1.a, m1.b, m1.c, m1.d) == (4, -3, 3, -2)
    m2 = word_matrix(parse_word("P2"))
    assert (m2.a, m2.b, m2.c, m2.d) == (4, Fraction(-3, 2), 6, -2)
    mh = word_matrix(parse_word("H"))
    assert (mh.a, mh.b, mh.c, mh.d) == (2, 0, 0, Fraction(1, 2))
    for tok in ("P1", "P2", "H", "-I"):
        assert word_matrix(parse_word(tok)).det() == 1


def test_word_matrix_relation():
    m = word_matrix(parse_word("-I,P1,P2"))
    assert (m.a, m.b, m.c, m.d) == (2, 0, 0, Fraction(1, 2))


def test_word_matrix_inverse_exponents():
    m = word_matrix(parse_word("P1,P1^-1"))
    assert (m.a, m.b, m.c, m.d) == (1, 0, 0, 1)
    m = word_matrix(parse_word("H^-2"))
    assert (m.a, m.d) == (Fraction(1, 4), 4)


def test_act_word_matches_letter_composition():
    rng = random.Random(909)
    h = random_vector(Z3, rng)
    w = parse_word("P1,H^2,-I,P2^-1")
    expected = act_p2_inv(h)
    expected = act_neg(expected)
    expected = act_h_pow(expected, 2)
    expected = act_p1(expected)
    assert act_word(h, w) == expected
