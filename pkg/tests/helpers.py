"""Shared independent oracles for the test suite.

Everything here works pointwise on explicit integer windows or by exhaustive
enumeration, never through the segment arithmetic under test.
"""

from itertools import combinations

from cofinj.core import NEG_INF, POS_INF, MonotoneElement, element_from_gaps


def finite_bound(elem) -> int:
    m = 0
    if isinstance(elem, MonotoneElement):
        for lo, hi, off in elem.segments:
            if lo != NEG_INF:
                m = max(m, abs(lo), abs(lo + off))
            if hi != POS_INF:
                m = max(m, abs(hi), abs(hi + off))
        return m
    m = max(
        abs(elem.left_end),
        abs(elem.right_start),
        abs(elem.left_end + elem.left_offset),
        abs(elem.right_start + elem.right_offset),
    )
    for k, v in elem.middle.items():
        m = max(m, abs(k), abs(v))
    return m


def window_bound(*elems) -> int:
    return 4 * max((finite_bound(e) for e in elems), default=0) + 8


def window_map(elem, w: int) -> dict:
    """The map as an explicit dict over [-w, w]."""
    out = {}
    for x in range(-w, w + 1):
        y = elem(x)
        if y is not None:
            out[x] = y
    return out


def compose_maps(f: dict, g: dict) -> dict:
    """Pointwise 'f then g' on dicts."""
    return {x: g[y] for x, y in f.items() if y in g}


def assert_same_on_window(elem, mapping: dict, w: int):
    got = window_map(elem, w)
    want = {x: y for x, y in mapping.items() if -w <= x <= w}
    assert got == want, f"pointwise mismatch on [-{w}, {w}]: {got} != {want}"


def brute_minimal_exceptions(middle: dict) -> frozenset:
    """Smallest removal set making the middle increasing, by exhaustive search.

    Enumerates removal sets by (size, lexicographic order of the sorted
    removed keys) and returns the first that works, which is the
    minimum-cardinality, lexicographically-smallest witness.
    """
    keys = sorted(middle)
    for size in range(len(keys) + 1):
        for removed in combinations(keys, size):
            kept = [middle[k] for k in keys if k not in removed]
            if all(a < b for a, b in zip(kept, kept[1:])):
                return frozenset(removed)
    raise AssertionError("unreachable")


def enumerate_monotone(dom_positions, max_dom, ran_positions, max_ran, offsets):
    """Every canonical element with gap sets inside the given position pools.

    An element is determined by (domain gaps, range gaps, left tail offset),
    so this walks the whole parameter box; both resulting tail offsets must
    lie in ``offsets``.
    """
    offsets = sorted(offsets)
    for nd in range(max_dom + 1):
        for dgaps in combinations(dom_positions, nd):
            for nr in range(max_ran + 1):
                for rgaps in combinations(ran_positions, nr):
                    for left in offsets:
                        if left + nr - nd in offsets:
                            yield element_from_gaps(dgaps, rgaps, left)
