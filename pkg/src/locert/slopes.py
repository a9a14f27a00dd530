"""Slope calculus on torus boundaries.

A slope is a primitive class p*mu + q*lambda in the peripheral lattice,
kept projectively: we normalize q >= 0, with (1, 0) for the trivial
filling slope.  Slopes are column vectors and gluing matrices act on the
left; all arithmetic is exact.

With lambda the longitude (the class that bounds), |H1| of the filling
along p/q is |p|, and for a union along a gluing f the first homology has
order Delta(f(lambda_1), lambda_2), the minimal geometric intersection
number of the glued longitudes; value 0 encodes infinite homology in both
cases.
"""

from __future__ import annotations

from math import gcd
from typing import NamedTuple

__all__ = [
    "Slope",
    "GluingMatrix",
    "NotUnimodular",
    "MERIDIAN",
    "LONGITUDE_SLOPE",
    "SPLICE_MATRIX",
    "make_slope",
    "parse_slope",
    "slope_str",
    "intersection_number",
    "apply_gluing",
    "invert_gluing",
    "compose_gluing",
    "splice_framing",
    "filling_homology_order",
    "union_homology_order",
]


class NotUnimodular(ValueError):
    """Gluing matrices must have determinant +1 or -1."""


class Slope(NamedTuple):
    p: int
    q: int


class GluingMatrix(NamedTuple):
    """Row-major 2x2 integer matrix ((a, b), (c, d)) acting on column
    vectors (p, q)."""

    a: int
    b: int
    c: int
    d: int

    def det(self) -> int:
        return self.a * self.d - self.b * self.c


MERIDIAN = Slope(1, 0)
LONGITUDE_SLOPE = Slope(0, 1)
# Identifies each meridian with the other longitude: the splice gluing.
SPLICE_MATRIX = GluingMatrix(0, 1, 1, 0)


def make_slope(p: int, q: int) -> Slope:
    """Normalize to the canonical projective representative: gcd 1, q >= 0,
    and (1, 0) when q = 0."""
    if p == 0 and q == 0:
        raise ValueError("slope (0, 0) is not primitive")
    g = gcd(p, q)
    if g != 1:
        raise ValueError(f"slope ({p}, {q}) is not primitive")
    if q < 0 or (q == 0 and p < 0):
        p, q = -p, -q
    return Slope(p, q)


def parse_slope(text: str) -> Slope:
    p_txt, _, q_txt = text.partition("/")
    q = int(q_txt) if q_txt else 1
    return make_slope(int(p_txt), q)


def slope_str(s: Slope) -> str:
    return f"{s.p}/{s.q}"


def intersection_number(alpha: Slope, beta: Slope) -> int:
    """Delta(alpha, beta) = |p q' - p' q|; zero iff projectively equal."""
    return abs(alpha.p * beta.q - beta.p * alpha.q)


def _require_unimodular(m: GluingMatrix) -> None:
    if abs(m.det()) != 1:
        raise NotUnimodular(f"matrix {tuple(m)} has determinant {m.det()}")


def apply_gluing(m: GluingMatrix, alpha: Slope) -> Slope:
    _require_unimodular(m)
    return make_slope(m.a * alpha.p + m.b * alpha.q, m.c * alpha.p + m.d * alpha.q)


def invert_gluing(m: GluingMatrix) -> GluingMatrix:
    _require_unimodular(m)
    e = m.det()
    return GluingMatrix(e * m.d, -e * m.b, -e * m.c, e * m.a)


def compose_gluing(m: GluingMatrix, n: GluingMatrix) -> GluingMatrix:
    return GluingMatrix(
        m.a * n.a + m.b * n.c,
        m.a * n.b + m.b * n.d,
        m.c * n.a + m.d * n.c,
        m.c * n.b + m.d * n.d,
    )


def splice_framing(
    f: GluingMatrix, lambda1: Slope, lambda2: Slope
) -> tuple[Slope, Slope] | None:
    """Preferred meridians (mu1, mu2) = (f^-1(lambda2), f(lambda1)) when the
    union is an integer homology sphere (Delta(f(lambda1), lambda2) = 1);
    None otherwise."""
    if intersection_number(apply_gluing(f, lambda1), lambda2) != 1:
        return None
    return apply_gluing(invert_gluing(f), lambda2), apply_gluing(f, lambda1)


def filling_homology_order(alpha: Slope) -> int:
    """|H1| of the p/q filling in a (meridian, longitude) framing: |p|,
    with 0 meaning infinite first homology."""
    return abs(alpha.p)


def union_homology_order(f: GluingMatrix, lambda1: Slope, lambda2: Slope) -> int:
    """|H1| of the union glued by f: Delta(f(lambda1), lambda2), with 0
    meaning positive first Betti number and 1 certifying an integer
    homology sphere."""
    return intersection_number(apply_gluing(f, lambda1), lambda2)
