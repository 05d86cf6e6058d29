import random
from itertools import combinations, permutations

from cofinj.core import (
    IdempotentGaps,
    element_from_gaps,
    identity,
    parse_element,
    random_element,
    shift,
)
from cofinj.green import (
    connect_idempotents,
    factorize_simple,
    h_class_members,
    h_equiv,
    l_equiv,
    r_equiv,
    solve_left,
    solve_right,
)
from cofinj import almost as am

from helpers import enumerate_monotone

A0P = parse_element("seg[(-inf..0,+0),(1..+inf,+1)]")


# -- R / L / H ---------------------------------------------------------------------


def test_equiv_examples():
    a = random_element(3, 2, 2)
    assert r_equiv(a, a) and l_equiv(a, a) and h_equiv(a, a)
    assert r_equiv(A0P, identity())
    assert not l_equiv(A0P, identity())
    assert h_equiv(shift(1), shift(5))


def test_equiv_matches_gap_characterization():
    rng = random.Random(1)
    for _ in range(200):
        a, b = random_element(rng, 2, 2), random_element(rng, 2, 2)
        assert r_equiv(a, b) == (a.dom_gaps() == b.dom_gaps())
        assert l_equiv(a, b) == (a.ran_gaps() == b.ran_gaps())
        assert h_equiv(a, b) == (r_equiv(a, b) and l_equiv(a, b))


def test_equiv_mixed_representations():
    a = am.from_monotone(A0P)
    assert r_equiv(a, identity())
    assert not l_equiv(a, identity())


def test_r_equiv_matches_mutual_solvability():
    rng = random.Random(2)
    for _ in range(60):
        a, b = random_element(rng, 2, 2), random_element(rng, 2, 2)
        forward = bool(solve_right(a, b))
        backward = bool(solve_right(b, a))
        assert r_equiv(a, b) == (forward and backward)
        lforward = bool(solve_left(a, b))
        lbackward = bool(solve_left(b, a))
        assert l_equiv(a, b) == (lforward and lbackward)


def test_monotone_h_rigidity():
    rng = random.Random(3)
    for _ in range(100):
        a = random_element(rng, 3, 3)
        for b in h_class_members(a, range(a.left_offset - 3, a.left_offset + 4)):
            shared = any(
                a(x) is not None and a(x) == b(x) for x in range(-12, 13)
            )
            assert shared == (a == b)


# -- connecting idempotents -----------------------------------------------------------


def test_connect_examples():
    assert connect_idempotents(IdempotentGaps(), IdempotentGaps(), 3) == shift(3)
    got = connect_idempotents(IdempotentGaps({0}), IdempotentGaps({5}), 0)
    assert got == parse_element("seg[(-inf..-1,+0),(1..5,-1),(6..+inf,+0)]")


def test_connect_products_and_injectivity():
    rng = random.Random(4)
    for _ in range(200):
        eps = IdempotentGaps(rng.sample(range(-6, 7), rng.randint(0, 3)))
        phi = IdempotentGaps(rng.sample(range(-6, 7), rng.randint(0, 3)))
        seen = set()
        for i in range(-3, 4):
            a = connect_idempotents(eps, phi, i)
            assert a * a.inverse() == eps.to_element()
            assert a.inverse() * a == phi.to_element()
            seen.add(a)
        assert len(seen) == 7


def test_every_pair_is_d_related():
    # single D-class: connect a's domain idempotent to b's range idempotent,
    # giving a chain a R c, c L z, z H b
    rng = random.Random(14)
    for _ in range(200):
        a, b = random_element(rng, 3, 3), random_element(rng, 3, 3)
        c = connect_idempotents(
            IdempotentGaps(a.dom_gaps()), IdempotentGaps(b.ran_gaps()), 0
        )
        z = element_from_gaps(b.dom_gaps(), b.ran_gaps(), 0)
        assert r_equiv(a, c)
        assert l_equiv(c, z)
        assert h_equiv(z, b)


# -- simplicity factorization -----------------------------------------------------------


def test_factorize_examples():
    k, x = factorize_simple(identity(), identity())
    assert k == identity() and x == identity()
    gamma, phi = shift(1), IdempotentGaps({0}).to_element()
    k, x = factorize_simple(gamma, phi)
    assert k * phi * x == gamma


def test_factorize_random():
    rng = random.Random(5)
    for _ in range(200):
        gamma = random_element(rng, 3, 3)
        phi = random_element(rng, 3, 3)
        k, x = factorize_simple(gamma, phi)
        assert k * phi * x == gamma


# -- equation solving -------------------------------------------------------------------


def test_solve_examples():
    assert solve_right(identity(), identity()) == (identity(),)
    e0 = IdempotentGaps({0}).to_element()
    assert set(solve_right(e0, e0)) == {e0, identity()}
    assert solve_right(shift(1), shift(1)) == (identity(),)


def test_solutions_satisfy_equation():
    rng = random.Random(6)
    for _ in range(60):
        a, b = random_element(rng, 2, 2), random_element(rng, 2, 2)
        for x in solve_right(a, b):
            assert a * x == b
        for x in solve_left(a, b):
            assert x * a == b


def test_solve_left_duality():
    rng = random.Random(7)
    for _ in range(60):
        a, b = random_element(rng, 2, 2), random_element(rng, 2, 2)
        assert set(solve_left(a, b)) == {
            y.inverse() for y in solve_right(a.inverse(), b.inverse())
        }


def _brute_solutions(a, b):
    """Every monotone element in a bounded box, filtered by the defining equation.

    Box bounds follow from a*x == b alone: dom(x) contains ((dom b)a, so the
    domain gaps of x sit inside the range gaps of a joined with the images of
    the domain gaps of b; range gaps of x shrink those of b; the left offset
    is pinned by subtracting tail offsets.
    """
    span = 0
    for e in (a, b):
        for lo, hi, off in e.segments:
            for v in (lo, hi, lo + off, hi + off):
                if v not in (float("-inf"), float("inf")):
                    span = max(span, abs(v))
    span += 2
    positions = range(-span, span + 1)
    max_gaps = len(a.ran_gaps()) + len(b.dom_gaps())
    offsets = range(-2 * span, 2 * span + 1)
    out = set()
    for nd in range(max_gaps + 1):
        for dg in combinations(positions, nd):
            for nr in range(len(b.ran_gaps()) + 1):
                for rg in combinations(positions, nr):
                    for left in offsets:
                        if abs(left + nr - nd) > 2 * span:
                            continue
                        x = element_from_gaps(dg, rg, left)
                        if a * x == b:
                            out.add(x)
    return out


def test_solve_right_complete_against_brute_force():
    cases = [
        (identity(), identity()),
        (IdempotentGaps({0}).to_element(), IdempotentGaps({0}).to_element()),
        (IdempotentGaps({0}).to_element(), IdempotentGaps({0, 1}).to_element()),
        (A0P, A0P),
        (A0P, shift(1)),
        (shift(1), IdempotentGaps({2}).to_element() * shift(1)),
        (element_from_gaps([0], [1], 0), element_from_gaps([0], [], 1)),
        (element_from_gaps([0, 1], [0], -1), element_from_gaps([0, 1], [2], 0)),
    ]
    for a, b in cases:
        assert set(solve_right(a, b)) == _brute_solutions(a, b), (a, b)


def _brute_almost_box(bound, offs):
    """Every canonical almost-monotone element within a tiny parameter box."""
    seen = set()
    for d in range(-bound, bound + 1):
        for u in range(d + 1, bound + 2):
            for dl in range(-offs, offs + 1):
                for ur in range(-offs, offs + 1):
                    if d + dl >= u + ur:
                        continue
                    keys = list(range(d + 1, u))
                    vals = list(range(d + dl + 1, u + ur))
                    for n in range(min(len(keys), len(vals)) + 1):
                        for ks in combinations(keys, n):
                            for vs in permutations(vals, n):
                                seen.add(am.make_almost(d, dl, u, ur, dict(zip(ks, vs))))
    return seen


def test_solve_right_almost_against_exhaustive_box():
    e0 = IdempotentGaps({0}).to_element()
    swap = am.unit_recompose(am.UnitDecomposition(((0, 1), (1, 0)), 0))
    cases = [
        (am.from_monotone(e0), am.from_monotone(e0)),
        (swap, swap),
        (am.from_monotone(e0), swap),
    ]
    box = _brute_almost_box(2, 1)
    for a, b in cases:
        want = {x for x in box if am.compose_almost(a, x) == b}
        got = set(solve_right(a, b, within="almost"))
        # the box only bounds the check: solutions outside it would be missed,
        # so assert the box part matches and every solution verifies
        assert want <= got, (a, b)
        for x in got:
            assert am.compose_almost(a, x) == b


def test_monotone_solutions_embed_in_almost_solutions():
    rng = random.Random(8)
    for _ in range(30):
        a, b = random_element(rng, 2, 1), random_element(rng, 2, 1)
        mono = {am.from_monotone(x) for x in solve_right(a, b)}
        alm = set(solve_right(a, b, within="almost"))
        assert mono <= alm
