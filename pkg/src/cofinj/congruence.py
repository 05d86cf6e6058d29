"""The minimal group congruence and its quotient onto Z x Z.

Two elements are identified exactly when they agree far enough out on both
tails, and since tails are translations that happens exactly when their
tail offsets match.  Reading off the pair of tail offsets is therefore a
surjective homomorphism onto Z(+) x Z(+) realizing the quotient; on the
group of units of the monotone monoid it restricts to the isomorphism with
Z(+) (every unit is a shift).
"""

from __future__ import annotations

from typing import NamedTuple

from .core import InvalidElementError, MonotoneElement, element_from_gaps, shift
from .almost import AlmostMonotoneElement


class Signature(NamedTuple):
    """Image of an element in the quotient group: the pair of tail offsets."""

    left_delta: int
    right_delta: int

    def __add__(self, other):
        return Signature(self.left_delta + other.left_delta, self.right_delta + other.right_delta)

    def __neg__(self):
        return Signature(-self.left_delta, -self.right_delta)


def mgc_signature(elem) -> Signature:
    """The quotient homomorphism: both tail offsets, added componentwise under composition."""
    if isinstance(elem, MonotoneElement):
        return Signature(elem.left_offset, elem.right_offset)
    if isinstance(elem, AlmostMonotoneElement):
        return Signature(elem.left_offset, elem.right_offset)
    raise TypeError(f"not an element: {elem!r}")


def mgc_equiv(a, b) -> bool:
    """Minimal-group-congruence equivalence: the two maps agree on both far tails.

    Tails are translations, so agreement on a tail is exactly equality of its
    offset, and the test reduces to equality of signatures.
    """
    return mgc_signature(a) == mgc_signature(b)


def unit_to_shift(elem: MonotoneElement) -> int:
    """The isomorphism from the monotone unit group onto Z(+): a unit is a shift."""
    if not isinstance(elem, MonotoneElement) or len(elem.segments) != 1:
        raise InvalidElementError("element is not a unit of the monotone monoid")
    return elem.segments[0].offset


def signature_preimage(sig) -> MonotoneElement:
    """A canonical element mapping to the given signature.

    Left tail runs up to 0 with offset a; the right tail starts at
    max(1, a - b + 1) with offset b, which leaves b - a range gaps when
    b > a and a - b domain gaps when a > b.
    """
    a, b = sig
    if a == b:
        return shift(a)
    if b > a:
        return element_from_gaps((), range(a + 1, b + 1), a)
    return element_from_gaps(range(1, a - b + 1), (), a)


def witness_idempotent(a, b) -> "MonotoneElement":
    """For tail-equivalent elements, an idempotent e with a*e == b*e.

    Collapses everything either map does on the shared middle window; its
    existence is the congruence criterion for the minimal group congruence.
    """
    from .core import IdempotentGaps

    if not mgc_equiv(a, b):
        raise InvalidElementError("elements are not congruent")
    lo = min(_window_lo(a), _window_lo(b))
    hi = max(_window_hi(a), _window_hi(b))
    gaps = set()
    for x in range(lo + 1, hi):
        for f in (a, b):
            y = f(x)
            if y is not None:
                gaps.add(y)
    return IdempotentGaps(gaps).to_element()


def _window_lo(elem) -> int:
    if isinstance(elem, MonotoneElement):
        if len(elem.segments) == 1:
            return 0
        return elem.segments[0].hi
    return elem.left_end


def _window_hi(elem) -> int:
    if isinstance(elem, MonotoneElement):
        if len(elem.segments) == 1:
            return 1
        return elem.segments[-1].lo
    return elem.right_start
