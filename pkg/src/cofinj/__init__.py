"""Inverse monoids of monotone and almost-monotone injective partial selfmaps
of the integers with cofinite domain and image: exact arithmetic, Green's
relations, the minimal group congruence, bicyclic subsemigroups, and the two
pin-based semigroup topologies, plus an expression-language CLI.
"""

from ._kernel import kernel_name
from .core import (
    NEG_INF,
    POS_INF,
    IdempotentGaps,
    InvalidElementError,
    MonotoneElement,
    Segment,
    apply,
    collapse_element,
    compose,
    covers,
    dom_gaps,
    element_from_gaps,
    identity,
    idempotent_leq,
    idempotent_meet,
    inverse,
    is_idempotent,
    left_offset,
    normalize,
    parse_element,
    random_element,
    ran_gaps,
    right_offset,
    shift,
)

__all__ = [
    "NEG_INF",
    "POS_INF",
    "IdempotentGaps",
    "InvalidElementError",
    "MonotoneElement",
    "Segment",
    "apply",
    "collapse_element",
    "compose",
    "covers",
    "dom_gaps",
    "element_from_gaps",
    "identity",
    "idempotent_leq",
    "idempotent_meet",
    "inverse",
    "is_idempotent",
    "kernel_name",
    "left_offset",
    "normalize",
    "parse_element",
    "random_element",
    "ran_gaps",
    "right_offset",
    "shift",
]
