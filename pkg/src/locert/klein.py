"""The Klein-bottle group K = <x, y | x y x^-1 = y^-1>.

Every element has a unique normal form x^a y^b, and the relation forces
the group law (a, b)(c, d) = (a + c, (-1)^c b + d).  K is the fundamental
group of the twisted I-bundle over the Klein bottle, with peripheral
subgroup <y, x^2>.

Two left orderings are of interest, both built from the short exact
sequence 1 -> <<y>> -> K -> <x> -> 1: an element is positive when it maps
to a positive power of x, and the orderings differ on the kernel, where
y is positive in the first ordering and negative in the second.  The pair
is closed under conjugation: conjugating by x^a y^b swaps the two
orderings exactly when a is odd (x inverts y; y-conjugation and the
central x^2 fix both cones).
"""

from __future__ import annotations

import re
from enum import Enum
from math import gcd
from typing import NamedTuple

from .braid import Sign3
from .fpgroup import AbelianInvariants, Presentation, abelianization

__all__ = [
    "KleinElement",
    "KleinOrderingId",
    "KleinPeripheral",
    "KleinFillKind",
    "KleinFillResult",
    "NotPrimitive",
    "k_multiply",
    "k_inverse",
    "k_sign",
    "k_conjugate_ordering",
    "klein_fill",
    "klein_presentation",
    "filled_presentation",
    "parse_element",
    "element_str",
]


class NotPrimitive(ValueError):
    """Filling slope (m, n) must satisfy gcd(m, n) = 1."""


class KleinElement(NamedTuple):
    """Normal form x^a y^b."""

    a: int
    b: int


class KleinPeripheral(NamedTuple):
    """Peripheral class y^m (x^2)^n."""

    m: int
    n: int


class KleinOrderingId(Enum):
    O1 = "O1"  # y positive on the kernel
    O2 = "O2"  # y negative on the kernel


class KleinFillKind(Enum):
    INFINITE_CYCLIC_QUOTIENT_LO = "infinite_cyclic_quotient_lo"
    FREE_PRODUCT_OF_FINITE_NOT_LO = "free_product_of_finite_not_lo"
    FINITE_NOT_LO = "finite_not_lo"


class KleinFillResult(NamedTuple):
    kind: KleinFillKind
    abelianization: AbelianInvariants
    note: str


IDENTITY = KleinElement(0, 0)
X = KleinElement(1, 0)
Y = KleinElement(0, 1)


def k_multiply(g: KleinElement, h: KleinElement) -> KleinElement:
    sign = -1 if h.a % 2 else 1
    return KleinElement(g.a + h.a, sign * g.b + h.b)


def k_inverse(g: KleinElement) -> KleinElement:
    sign = -1 if g.a % 2 else 1
    return KleinElement(-g.a, -sign * g.b)


def k_sign(g: KleinElement, ordering: KleinOrderingId) -> Sign3:
    """Sign of g in the chosen ordering; trichotomy is immediate from the
    normal form."""
    if g.a != 0:
        return Sign3.POSITIVE if g.a > 0 else Sign3.NEGATIVE
    if g.b == 0:
        return Sign3.TRIVIAL
    positive = g.b > 0 if ordering is KleinOrderingId.O1 else g.b < 0
    return Sign3.POSITIVE if positive else Sign3.NEGATIVE


def k_conjugate_ordering(
    g: KleinElement, ordering: KleinOrderingId
) -> KleinOrderingId:
    """The ordering whose positive cone is g P g^-1 for the given cone P.

    Closed form: conjugation by x^a y^b maps (c, d) to (c, (-1)^a d + ...)
    with the d-sign flipped exactly when a is odd, so the pair {O1, O2} is
    preserved and swapped iff a is odd.
    """
    if g.a % 2 == 0:
        return ordering
    return (
        KleinOrderingId.O2
        if ordering is KleinOrderingId.O1
        else KleinOrderingId.O1
    )


def klein_presentation() -> Presentation:
    """<x, y | x y x^-1 y>."""
    return Presentation(("x", "y"), ((1, 2, -1, 2),))


def filled_presentation(slope: KleinPeripheral) -> Presentation:
    """The quotient K / <<y^m x^(2n)>> as a presentation."""
    relator = tuple([2 if slope.m > 0 else -2] * abs(slope.m)) + tuple(
        [1 if slope.n > 0 else -1] * (2 * abs(slope.n))
    )
    base = klein_presentation()
    return Presentation(base.generators, base.relators + (relator,))


def klein_fill(slope: KleinPeripheral) -> KleinFillResult:
    """Classify the Dehn filling of the twisted I-bundle along y^m x^(2n).

    The slope y gives the infinite cyclic quotient <x>, the only filling
    with left-orderable fundamental group.  The slope x^2 gives the
    infinite dihedral group Z/2 * Z/2 (set x^2 = 1: then (xy)^2 = 1 as
    well), which has torsion.  Every other primitive slope gives a finite
    group: killing y^m x^(2n) with m, n nonzero forces x^(4n) = 1 and
    y^(2m) = 1, leaving a quotient of order 4|mn|.
    """
    m, n = slope
    if gcd(m, n) != 1:
        raise NotPrimitive(f"slope ({m}, {n}) is not primitive")
    ab = abelianization(filled_presentation(slope))
    if n == 0:
        return KleinFillResult(
            KleinFillKind.INFINITE_CYCLIC_QUOTIENT_LO,
            ab,
            "quotient is the infinite cyclic group <x>; surjects onto Z",
        )
    if m == 0:
        return KleinFillResult(
            KleinFillKind.FREE_PRODUCT_OF_FINITE_NOT_LO,
            ab,
            "quotient is Z/2 * Z/2 (infinite dihedral); torsion "
            "obstructs left-orderability",
        )
    return KleinFillResult(
        KleinFillKind.FINITE_NOT_LO,
        ab,
        f"finite quotient of order {4 * abs(m * n)} (elliptic filling); "
        "finite nontrivial groups are not left-orderable",
    )


_ELEMENT_RE = re.compile(
    r"^\s*(?:x\^?(-?\d+)?)?\s*(?:y\^?(-?\d+)?)?\s*$"
)


def parse_element(text: str) -> KleinElement:
    """Parse ``x^a y^b`` (either factor may be omitted; bare x means a=1)."""
    match = _ELEMENT_RE.match(text)
    if not match or (text.strip() and "x" not in text and "y" not in text):
        raise ValueError(f"cannot parse Klein element {text!r}")
    a_txt, b_txt = match.groups()
    a = int(a_txt) if a_txt is not None else (1 if "x" in text else 0)
    b = int(b_txt) if b_txt is not None else (1 if "y" in text else 0)
    return KleinElement(a, b)


def element_str(g: KleinElement) -> str:
    if g == IDENTITY:
        return "1"
    parts = []
    if g.a:
        parts.append("x" if g.a == 1 else f"x^{g.a}")
    if g.b:
        parts.append("y" if g.b == 1 else f"y^{g.b}")
    return " ".join(parts)
