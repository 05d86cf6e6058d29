"""Exact arithmetic for monotone injective partial selfmaps of the integers.

The elements handled here are the partial maps Z -> Z that are injective,
strictly order preserving on their domain, and total outside a finite set,
with cofinite image.  Such a map eventually acts as a pure translation on
each side, so it decomposes into finitely many translation pieces.  We store
the maximal such decomposition as an ordered list of segments
``(lo, hi, offset)`` meaning ``x -> x + offset`` for ``lo <= x <= hi``; the
first segment starts at ``-inf`` and the last ends at ``+inf``.  Maximality
makes the segment list a normal form, so equality of maps is structural
equality of segment lists.

Composition is written in diagram order: ``(x)(a * b) == ((x)a)b``, i.e. the
left factor acts first.  All arithmetic is exact; bounds are Python ints
apart from the two infinities, which are the float infinities used only for
comparisons and never mixed into finite arithmetic.

The idempotents of this monoid are the identity maps of cofinite subsets;
they are encoded by their finite gap set (``IdempotentGaps``), under which
the idempotent semilattice is the semilattice of finite subsets of Z with
union.
"""

from __future__ import annotations

import random
from bisect import bisect_right
from functools import lru_cache
from typing import Iterable, NamedTuple

from . import _kernel

NEG_INF = float("-inf")
POS_INF = float("inf")


class InvalidElementError(ValueError):
    """Raised when data does not describe a valid element of the monoid."""


class Segment(NamedTuple):
    lo: int | float
    hi: int | float
    offset: int


def _is_bound(v) -> bool:
    if isinstance(v, bool):
        return False
    return isinstance(v, int) or v == NEG_INF or v == POS_INF


def _check_segment(lo, hi, offset):
    if not _is_bound(lo) or not _is_bound(hi):
        raise InvalidElementError(f"segment bounds must be integers or +/-inf, got ({lo}, {hi})")
    if not isinstance(offset, int) or isinstance(offset, bool):
        raise InvalidElementError(f"segment offset must be an integer, got {offset!r}")
    if lo == POS_INF or hi == NEG_INF:
        raise InvalidElementError("segment bounds out of orientation: lo < +inf and hi > -inf required")
    if lo > hi:
        raise InvalidElementError(f"empty segment ({lo}..{hi})")


def _check_canonical(segs):
    if not segs:
        raise InvalidElementError("an element needs at least one segment")
    for lo, hi, offset in segs:
        _check_segment(lo, hi, offset)
    if segs[0].lo != NEG_INF:
        raise InvalidElementError("leftmost segment must extend to -inf")
    if segs[-1].hi != POS_INF:
        raise InvalidElementError("rightmost segment must extend to +inf")
    for (lo1, hi1, o1), (lo2, hi2, o2) in zip(segs, segs[1:]):
        if not hi1 < lo2:
            raise InvalidElementError("segments overlap or are out of order")
        if not hi1 + o1 < lo2 + o2:
            raise InvalidElementError("segment images overlap or are out of order")
        if hi1 + 1 == lo2 and o1 == o2:
            raise InvalidElementError("adjacent segments with equal offset must be merged")


class MonotoneElement:
    """A monotone injective partial selfmap of Z in canonical segment form.

    Instances are immutable by convention and hashable; two elements are
    equal iff they are equal as partial maps, which the normal form turns
    into tuple equality.  Use :func:`normalize` (or the constructors
    ``identity``, ``shift``, ``element_from_gaps``) rather than building
    segment lists by hand.
    """

    __slots__ = ("segments",)

    def __init__(self, segments: Iterable[tuple]):
        segs = tuple(Segment(*s) for s in segments)
        _check_canonical(segs)
        object.__setattr__(self, "segments", segs)

    def __setattr__(self, name, value):
        raise AttributeError("MonotoneElement is immutable")

    # -- pointwise semantics ------------------------------------------------

    def __call__(self, x: int) -> int | None:
        """Value at x, or None when x is outside the domain."""
        segs = self.segments
        i = bisect_right(segs, x, key=lambda s: s.lo) - 1
        lo, hi, offset = segs[i]
        if x <= hi:
            return x + offset
        return None

    def __contains__(self, x: int) -> bool:
        return self(x) is not None

    # -- monoid structure ---------------------------------------------------

    def __mul__(self, other):
        if isinstance(other, MonotoneElement):
            return MonotoneElement(_kernel.compose_segments(self.segments, other.segments))
        return NotImplemented

    def inverse(self) -> "MonotoneElement":
        return MonotoneElement(
            Segment(lo + o, hi + o, -o) for lo, hi, o in self.segments
        )

    def __invert__(self):
        return self.inverse()

    def is_idempotent(self) -> bool:
        return all(o == 0 for _, _, o in self.segments)

    # -- tail and gap data ----------------------------------------------------

    @property
    def left_offset(self) -> int:
        return self.segments[0].offset

    @property
    def right_offset(self) -> int:
        return self.segments[-1].offset

    def dom_gaps(self) -> frozenset:
        out = []
        for (lo1, hi1, o1), (lo2, hi2, o2) in zip(self.segments, self.segments[1:]):
            out.extend(range(hi1 + 1, lo2))
        return frozenset(out)

    def ran_gaps(self) -> frozenset:
        out = []
        for (lo1, hi1, o1), (lo2, hi2, o2) in zip(self.segments, self.segments[1:]):
            out.extend(range(hi1 + o1 + 1, lo2 + o2))
        return frozenset(out)

    # -- equality and text ----------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, MonotoneElement):
            return self.segments == other.segments
        return NotImplemented

    def __hash__(self):
        return hash(self.segments)

    def to_text(self) -> str:
        """Canonical text: most specific of id / shift(k) / E{...} / seg[...]."""
        if len(self.segments) == 1:
            k = self.segments[0].offset
            return "id" if k == 0 else f"shift({k})"
        if self.is_idempotent():
            return "E{" + ",".join(str(g) for g in sorted(self.dom_gaps())) + "}"
        return self.to_seg_text()

    def to_seg_text(self) -> str:
        parts = []
        for lo, hi, o in self.segments:
            parts.append(f"({_bound_text(lo)}..{_bound_text(hi)},{o:+d})")
        return "seg[" + ",".join(parts) + "]"

    def __repr__(self):
        return self.to_text()


def _bound_text(v) -> str:
    if v == NEG_INF:
        return "-inf"
    if v == POS_INF:
        return "+inf"
    return str(v)


# -- constructors -------------------------------------------------------------


def normalize(raw: Iterable[tuple]) -> MonotoneElement:
    """Canonicalize a list of (lo, hi, offset) segments into an element.

    Accepts segments in any order and merges adjacent pieces with equal
    offset; rejects overlapping domains, out-of-order images, a bounded
    first/last piece, and empty input.  Idempotent on canonical input.
    """
    segs = [Segment(*s) for s in raw]
    if not segs:
        raise InvalidElementError("an element needs at least one segment")
    for lo, hi, offset in segs:
        _check_segment(lo, hi, offset)
    segs.sort(key=lambda s: (s.lo, s.hi))
    merged = [segs[0]]
    for seg in segs[1:]:
        prev = merged[-1]
        if not prev.hi < seg.lo:
            raise InvalidElementError("segments overlap or are out of order")
        if prev.hi + 1 == seg.lo and prev.offset == seg.offset:
            merged[-1] = Segment(prev.lo, seg.hi, prev.offset)
        else:
            if not prev.hi + prev.offset < seg.lo + seg.offset:
                raise InvalidElementError("segment images overlap or are out of order")
            merged.append(seg)
    return MonotoneElement(merged)


def identity() -> MonotoneElement:
    return MonotoneElement([(NEG_INF, POS_INF, 0)])


def shift(k: int) -> MonotoneElement:
    """The unit x -> x + k."""
    return MonotoneElement([(NEG_INF, POS_INF, k)])


@lru_cache(maxsize=8192)
def _collapse_cached(gaps: tuple) -> MonotoneElement:
    segs = []
    prev = NEG_INF
    dropped = 0
    for g in gaps:
        lo = prev + 1
        if lo <= g - 1:
            segs.append((lo, g - 1, -dropped))
        dropped += 1
        prev = g
    segs.append((prev + 1, POS_INF, -dropped))
    return MonotoneElement(segs)


def collapse_element(gaps: Iterable[int]) -> MonotoneElement:
    """The order isomorphism Z \\ gaps -> Z fixing everything below min(gaps).

    Sends x to x minus the number of gaps below x; this is the canonical
    choice of monotone bijection from a cofinite set onto Z.
    """
    gs = tuple(sorted(set(gaps)))
    if not gs:
        return identity()
    for g in gs:
        if not isinstance(g, int) or isinstance(g, bool):
            raise InvalidElementError(f"gap positions must be integers, got {g!r}")
    return _collapse_cached(gs)


def element_from_gaps(dom_gaps: Iterable[int], ran_gaps: Iterable[int], left_offset: int) -> MonotoneElement:
    """The unique element with the given gap sets whose left tail is x -> x + left_offset.

    Built as collapse(dom_gaps), then the shift, then the inverse collapse of
    ran_gaps; the three data determine the element completely.
    """
    left = collapse_element(dom_gaps)
    if left_offset:
        left = MonotoneElement(Segment(lo, hi, o + left_offset) for lo, hi, o in left.segments)
    return left * collapse_element(ran_gaps).inverse()


def random_element(seed, max_gaps: int, max_offset: int) -> MonotoneElement:
    """Deterministic seeded random canonical element.

    Both gap sets have at most max_gaps points and both tail offsets lie in
    [-max_offset, max_offset]; seed may be an int or a random.Random.
    """
    if max_gaps < 0 or max_offset < 0:
        raise ValueError("bounds must be nonnegative")
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    while True:
        nd = rng.randint(0, max_gaps)
        nr = rng.randint(0, max_gaps)
        left = rng.randint(-max_offset, max_offset)
        if abs(left + nr - nd) <= max_offset:
            break
    span = 2 * max_gaps + 2
    positions = range(-span, span + 1)
    dgaps = rng.sample(positions, nd)
    rgaps = rng.sample(positions, nr)
    return element_from_gaps(dgaps, rgaps, left)


# -- spec-level operation aliases ----------------------------------------------


def apply(elem: MonotoneElement, x: int) -> int | None:
    return elem(x)


def compose(a: MonotoneElement, b: MonotoneElement) -> MonotoneElement:
    """a then b: (x)(compose(a, b)) == ((x)a)b."""
    return a * b


def inverse(elem: MonotoneElement) -> MonotoneElement:
    return elem.inverse()


def is_idempotent(elem: MonotoneElement) -> bool:
    return elem.is_idempotent()


def dom_gaps(elem) -> frozenset:
    return elem.dom_gaps()


def ran_gaps(elem) -> frozenset:
    return elem.ran_gaps()


def left_offset(elem) -> int:
    return elem.left_offset


def right_offset(elem) -> int:
    return elem.right_offset


# -- idempotents --------------------------------------------------------------


class IdempotentGaps:
    """An idempotent (identity map of a cofinite set), stored as its gap set.

    The natural partial order is reverse inclusion of gap sets and the
    semilattice meet (= product of the idempotents) is gap-set union, so
    this class is the free semilattice of finite subsets of Z in disguise.
    """

    __slots__ = ("gaps",)

    def __init__(self, gaps: Iterable[int] = ()):
        gs = frozenset(gaps)
        for g in gs:
            if not isinstance(g, int) or isinstance(g, bool):
                raise InvalidElementError(f"gap positions must be integers, got {g!r}")
        object.__setattr__(self, "gaps", gs)

    def __setattr__(self, name, value):
        raise AttributeError("IdempotentGaps is immutable")

    @classmethod
    def from_element(cls, elem: MonotoneElement) -> "IdempotentGaps":
        if not elem.is_idempotent():
            raise InvalidElementError("element is not an idempotent")
        return cls(elem.dom_gaps())

    def to_element(self) -> MonotoneElement:
        segs = []
        prev = NEG_INF
        for g in sorted(self.gaps):
            lo = prev + 1
            if lo <= g - 1:
                segs.append((lo, g - 1, 0))
            prev = g
        segs.append((prev + 1, POS_INF, 0))
        return MonotoneElement(segs)

    def leq(self, other: "IdempotentGaps") -> bool:
        """Natural partial order: self <= other iff dom(self) is contained in dom(other)."""
        return other.gaps <= self.gaps

    __le__ = leq

    def meet(self, other: "IdempotentGaps") -> "IdempotentGaps":
        return IdempotentGaps(self.gaps | other.gaps)

    def __mul__(self, other):
        if isinstance(other, IdempotentGaps):
            return self.meet(other)
        return NotImplemented

    def covers(self, other: "IdempotentGaps") -> bool:
        """True when other sits directly below self: one extra gap, nothing between."""
        extra = other.gaps - self.gaps
        return self.gaps <= other.gaps and len(extra) == 1

    def __eq__(self, other):
        if isinstance(other, IdempotentGaps):
            return self.gaps == other.gaps
        return NotImplemented

    def __hash__(self):
        return hash(self.gaps)

    def to_text(self) -> str:
        return "E{" + ",".join(str(g) for g in sorted(self.gaps)) + "}"

    def __repr__(self):
        return self.to_text()


def idempotent_leq(eps: IdempotentGaps, iota: IdempotentGaps) -> bool:
    return eps.leq(iota)


def idempotent_meet(eps: IdempotentGaps, phi: IdempotentGaps) -> IdempotentGaps:
    return eps.meet(phi)


def covers(eps: IdempotentGaps, phi: IdempotentGaps) -> bool:
    return eps.covers(phi)


# -- canonical text parsing -----------------------------------------------------

import re

_SHIFT_RE = re.compile(r"shift\(\s*([+-]?\d+)\s*\)\Z")
_EGAPS_RE = re.compile(r"E\{([^{}]*)\}\Z")
_SEG_RE = re.compile(r"seg\[(.*)\]\Z", re.DOTALL)
_ONE_SEG = r"\(\s*(?:-inf|[+-]?\d+)\s*\.\.\s*(?:\+inf|[+-]?\d+)\s*,\s*[+-]?\d+\s*\)"
_SEG_BODY_RE = re.compile(rf"\s*{_ONE_SEG}(?:\s*,\s*{_ONE_SEG})*\s*\Z")
_ONE_SEG_RE = re.compile(
    r"\(\s*(-inf|[+-]?\d+)\s*\.\.\s*(\+inf|[+-]?\d+)\s*,\s*([+-]?\d+)\s*\)"
)


def _parse_bound(text: str):
    if text == "-inf":
        return NEG_INF
    if text == "+inf":
        return POS_INF
    return int(text)


def parse_element(text: str) -> MonotoneElement:
    """Parse the canonical element syntax: id, shift(k), E{...}, seg[...]."""
    s = text.strip()
    if s == "id":
        return identity()
    m = _SHIFT_RE.match(s)
    if m:
        return shift(int(m.group(1)))
    m = _EGAPS_RE.match(s)
    if m:
        body = m.group(1).strip()
        try:
            gaps = [int(p) for p in body.split(",")] if body else []
        except ValueError:
            raise InvalidElementError(f"malformed gap list: {text!r}") from None
        return IdempotentGaps(gaps).to_element()
    m = _SEG_RE.match(s)
    if m:
        body = m.group(1)
        if not _SEG_BODY_RE.match(body):
            raise InvalidElementError(f"malformed segment list: {text!r}")
        return normalize(
            (_parse_bound(lo), _parse_bound(hi), int(off))
            for lo, hi, off in _ONE_SEG_RE.findall(body)
        )
    raise InvalidElementError(f"not an element literal: {text!r}")
