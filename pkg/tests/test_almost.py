import random

import pytest

from cofinj.core import IdempotentGaps, InvalidElementError, identity, random_element, shift
from cofinj.almost import (
    AlmostMonotoneElement,
    UnitDecomposition,
    almost_identity,
    as_almost,
    canonicalize,
    compose_almost,
    from_monotone,
    inverse_almost,
    make_almost,
    minimal_exceptions,
    monotonizers,
    parse_almost,
    random_almost,
    random_unit,
    to_monotone,
    unit_decompose,
    unit_recompose,
)

from helpers import assert_same_on_window, brute_minimal_exceptions, compose_maps, window_bound, window_map


SCRAMBLE = make_almost(0, 0, 6, 0, {1: 5, 2: 3, 3: 4})


# -- construction ----------------------------------------------------------------


def test_make_identity():
    assert make_almost(0, 0, 1, 0, {}) == almost_identity()
    assert make_almost(-3, 0, 4, 0, {x: x for x in range(-2, 4)}) == almost_identity()


def test_make_scramble_valid_but_not_monotone():
    assert not SCRAMBLE.is_monotone()
    want = {x: x for x in range(-8, 9)}
    for x in (1, 2, 3, 4, 5):
        want.pop(x, None)
    want.update({1: 5, 2: 3, 3: 4})
    assert_same_on_window(SCRAMBLE, want, 8)
    with pytest.raises(InvalidElementError):
        to_monotone(SCRAMBLE)


@pytest.mark.parametrize(
    "args",
    [
        (0, 0, 6, 0, {1: 5, 2: 5}),  # not injective
        (6, 0, 0, 0, {}),  # d >= u
        (0, 0, 6, 0, {1: 0}),  # value inside left tail image
        (0, 0, 6, 0, {1: 6}),  # value inside right tail image
        (0, 0, 6, 0, {7: 8}),  # point outside window
        (0, 5, 1, 0, {}),  # tail images collide
        (0, 0, 6, 0, {1: "x"}),
    ],
)
def test_make_rejects(args):
    with pytest.raises(InvalidElementError):
        make_almost(*args)


def test_window_minimization():
    e = make_almost(-4, 1, 5, 0, {-3: -2, -2: -1, 3: 3, 4: 4})
    assert (e.left_end, e.right_start) == (-2, 3)
    assert e.middle == {}


def test_translation_normal_form():
    assert make_almost(5, 2, 6, 2, {}) == make_almost(-9, 2, -8, 2, {})
    assert make_almost(5, 2, 6, 2, {}) == from_monotone(shift(2))


# -- conversions -------------------------------------------------------------------


def test_monotone_round_trip():
    rng = random.Random(1)
    for _ in range(300):
        m = random_element(rng, 3, 3)
        assert to_monotone(from_monotone(m)) == m


def test_canonicalize_picks_segment_form():
    assert canonicalize(from_monotone(shift(2))) == shift(2)
    assert canonicalize(SCRAMBLE) is SCRAMBLE


def test_idempotent_agreement_across_representations():
    rng = random.Random(2)
    for _ in range(200):
        a = random_almost(rng)
        square = compose_almost(a, a)
        assert a.is_idempotent() == (square == a)
        if a.is_idempotent():
            assert to_monotone(a).is_idempotent()


# -- composition and inversion ------------------------------------------------------


def test_compose_identity():
    rng = random.Random(3)
    for _ in range(100):
        a = random_almost(rng)
        assert compose_almost(a, almost_identity()) == a
        assert compose_almost(almost_identity(), a) == a


def test_compose_agrees_with_monotone_compose():
    rng = random.Random(4)
    for _ in range(300):
        x = random_element(rng, 3, 3)
        y = random_element(rng, 3, 3)
        assert to_monotone(compose_almost(from_monotone(x), from_monotone(y))) == x * y


def test_compose_matches_pointwise_oracle():
    rng = random.Random(5)
    for _ in range(300):
        a = random_almost(rng)
        b = random_almost(rng)
        w = window_bound(a, b)
        want = compose_maps(window_map(a, 2 * w), window_map(b, 3 * w))
        got = window_map(compose_almost(a, b), w)
        assert got == {x: y for x, y in want.items() if -w <= x <= w}


def test_swap_unit_times_inverse_is_identity():
    swap = unit_recompose(UnitDecomposition(((0, 1), (1, 0)), 2))
    assert compose_almost(swap, inverse_almost(swap)) == almost_identity()


def test_inverse_laws():
    rng = random.Random(6)
    for _ in range(300):
        a = random_almost(rng)
        assert inverse_almost(inverse_almost(a)) == a
        assert compose_almost(compose_almost(a, inverse_almost(a)), a) == a
        gaps = compose_almost(a, inverse_almost(a))
        assert gaps.is_idempotent() and gaps.dom_gaps() == a.dom_gaps()


def test_associativity():
    rng = random.Random(7)
    for _ in range(200):
        a, b, c = (random_almost(rng) for _ in range(3))
        assert compose_almost(compose_almost(a, b), c) == compose_almost(a, compose_almost(b, c))


# -- minimal exceptions ---------------------------------------------------------------


def test_minimal_exceptions_examples():
    assert minimal_exceptions(from_monotone(random_element(0, 3, 3))) == frozenset()
    assert minimal_exceptions(SCRAMBLE) == frozenset({1})
    reversing = make_almost(0, 0, 4, 0, {1: 3, 2: 2, 3: 1})
    assert len(minimal_exceptions(reversing)) == 2


def test_minimal_exceptions_matches_brute_force():
    rng = random.Random(8)
    for _ in range(400):
        a = random_almost(rng, max_offset=2, window=4, max_middle=7)
        assert minimal_exceptions(a) == brute_minimal_exceptions(a.middle), a


def test_monotonizer_products_are_monotone():
    rng = random.Random(9)
    for _ in range(500):
        a = random_almost(rng)
        left, right, both = monotonizers(a)
        la = compose_almost(from_monotone(left.to_element()), a)
        ar = compose_almost(a, from_monotone(right.to_element()))
        eae = compose_almost(
            from_monotone(both.to_element()),
            compose_almost(a, from_monotone(both.to_element())),
        )
        assert la.is_monotone() and ar.is_monotone() and eae.is_monotone()
        assert to_monotone(la) == to_monotone(ar)


def test_monotonizers_of_monotone_element():
    m = random_element(17, 2, 2)
    left, right, both = monotonizers(m)
    assert left.gaps == m.dom_gaps()
    assert right.gaps == m.ran_gaps()
    assert both == IdempotentGaps(m.dom_gaps() | m.ran_gaps())


# -- units -------------------------------------------------------------------------


def test_unit_decompose_examples():
    assert unit_decompose(shift(2)) == UnitDecomposition((), 2)
    u = make_almost(-1, 2, 2, 2, {0: 3, 1: 2})
    assert unit_decompose(u) == UnitDecomposition(((0, 1), (1, 0)), 2)
    with pytest.raises(InvalidElementError):
        unit_decompose(IdempotentGaps({0}).to_element())


def test_unit_round_trip_and_shift_additivity():
    rng = random.Random(10)
    for _ in range(500):
        u = random_unit(rng)
        dec = unit_decompose(u)
        assert unit_recompose(dec) == u
        v = random_unit(rng)
        uv = compose_almost(u, v)
        assert unit_decompose(uv).shift == dec.shift + unit_decompose(v).shift


def test_shift_conjugation_moves_support():
    rng = random.Random(11)
    for _ in range(100):
        u = random_unit(rng)
        k = rng.randint(-4, 4)
        conj = compose_almost(compose_almost(from_monotone(shift(k)), u), from_monotone(shift(-k)))
        a = unit_decompose(u)
        b = unit_decompose(conj)
        assert b.shift == a.shift
        assert dict(b.support_perm) == {x - k: y - k for x, y in a.support_perm}


def test_unit_recompose_rejects():
    with pytest.raises(InvalidElementError):
        unit_recompose(UnitDecomposition(((0, 1),), 0))  # not a bijection
    with pytest.raises(InvalidElementError):
        unit_recompose(UnitDecomposition(((0, 0),), 0))  # listed fixed point


# -- text --------------------------------------------------------------------------


def test_text_round_trip():
    assert SCRAMBLE.to_text() == "am[d=0,L=0,u=6,R=0; 1->5, 2->3, 3->4]"
    assert parse_almost(SCRAMBLE.to_text()) == SCRAMBLE
    rng = random.Random(12)
    for _ in range(200):
        a = random_almost(rng)
        assert parse_almost(a.to_text()) == a


def test_parse_rejects():
    for text in ["am[d=0,L=0,u=6,R=0]", "am[d=0,L=0,u=6,R=0; 1->]", "am[d=0,L=0,u=6,R=0; 1->2, 1->3]"]:
        with pytest.raises(InvalidElementError):
            parse_almost(text)
