"""Homology of cyclic branched covers from the Alexander polynomial.

Fox's theorem (in Weber's formulation): the first homology of the n-fold
cyclic branched cover of a knot K is finite iff the Alexander polynomial
of K has no zero at an n-th root of unity, and its order is then

    |H1| = | prod_{i=1..n-1} Delta_K(zeta_n^i) |.

That product is, up to sign, the resultant of Delta_K(t) with
(t^n - 1)/(t - 1), so it is computed here exactly as an integer Sylvester
determinant; a vanishing resultant encodes the infinite case.  No
floating-point evaluation anywhere: the criterion is about exact
vanishing.

Polynomials are integer Laurent polynomials, stored as exponent ->
coefficient maps; multiplying by a power of t changes the resultant only
by a unit, so the Laurent ambiguity is harmless under absolute values.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Mapping

__all__ = [
    "IntLaurentPoly",
    "AlexanderDiagnostics",
    "NotAlexanderNormalized",
    "poly_from_dict",
    "parse_poly",
    "poly_str",
    "poly_mul",
    "evaluate_at_int",
    "validate_alexander",
    "branched_cover_order",
]

# exponent -> coefficient, zero coefficients dropped
IntLaurentPoly = dict[int, int]


class NotAlexanderNormalized(ValueError):
    """branched_cover_order requires Delta(1) = +-1."""


def poly_from_dict(coeffs: Mapping[int, int]) -> IntLaurentPoly:
    return {int(e): int(c) for e, c in coeffs.items() if c}


_TERM_RE = re.compile(
    r"""\s*(?P<sign>[+-])?\s*
        (?:
            (?P<coeff>\d+)\s*\*?\s*(?:t(?:\s*(?:\^|\*\*)\s*(?P<exp1>-?\d+))?)?
          | t(?:\s*(?:\^|\*\*)\s*(?P<exp2>-?\d+))?
        )""",
    re.VERBOSE,
)


def parse_poly(text: str) -> IntLaurentPoly:
    """Parse strings like ``t^2 - t + 1``, ``3t^-1 + 2``, ``1``."""
    out: IntLaurentPoly = {}
    pos = 0
    text = text.strip()
    if not text:
        raise ValueError("empty polynomial")
    first = True
    while pos < len(text):
        m = _TERM_RE.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse polynomial near {text[pos:]!r}")
        sign_txt = m.group("sign")
        if sign_txt is None and not first:
            raise ValueError(f"missing +/- before {text[pos:]!r}")
        sign = -1 if sign_txt == "-" else 1
        coeff_txt = m.group("coeff")
        if coeff_txt is not None:
            coeff = sign * int(coeff_txt)
            has_t = "t" in text[m.start() : m.end()]
            exp = int(m.group("exp1")) if m.group("exp1") else (1 if has_t else 0)
        else:
            coeff = sign
            exp = int(m.group("exp2")) if m.group("exp2") else 1
        out[exp] = out.get(exp, 0) + coeff
        pos = m.end()
        first = False
    return {e: c for e, c in out.items() if c}


def poly_str(poly: IntLaurentPoly) -> str:
    if not poly:
        return "0"
    parts = []
    for e in sorted(poly, reverse=True):
        c = poly[e]
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            t = "t" if e == 1 else f"t^{e}"
            body = t if mag == 1 else f"{mag}{t}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts)


def poly_mul(f: IntLaurentPoly, g: IntLaurentPoly) -> IntLaurentPoly:
    out: IntLaurentPoly = {}
    for e1, c1 in f.items():
        for e2, c2 in g.items():
            e = e1 + e2
            out[e] = out.get(e, 0) + c1 * c2
    return {e: c for e, c in out.items() if c}


def evaluate_at_int(poly: IntLaurentPoly, t: int) -> int:
    """Exact evaluation at a nonzero integer (negative exponents need
    t = +-1)."""
    out = 0
    for e, c in poly.items():
        if e < 0 and abs(t) != 1:
            raise ValueError("negative exponents need |t| = 1")
        out += c * t**e
    return out


def _ascending_coeffs(poly: IntLaurentPoly) -> list[int]:
    """Shift the Laurent polynomial to an ordinary polynomial with nonzero
    constant term and return ascending coefficients."""
    if not poly:
        return []
    lo = min(poly)
    hi = max(poly)
    return [poly.get(e + lo, 0) for e in range(hi - lo + 1)]


def _bareiss_det(m: list[list[int]]) -> int:
    """Fraction-free exact determinant."""
    n = len(m)
    if n == 0:
        return 1
    m = [row[:] for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def _resultant(f: list[int], g: list[int]) -> int:
    """Sylvester resultant of two integer polynomials (ascending coeffs)."""
    df = len(f) - 1
    dg = len(g) - 1
    if df < 0 or dg < 0:
        raise ValueError("resultant of the zero polynomial")
    if df == 0:
        return f[0] ** dg
    if dg == 0:
        return g[0] ** df
    size = df + dg
    rows = []
    fd = f[::-1]  # descending
    gd = g[::-1]
    for i in range(dg):
        rows.append([0] * i + fd + [0] * (size - df - 1 - i))
    for i in range(df):
        rows.append([0] * i + gd + [0] * (size - dg - 1 - i))
    return _bareiss_det(rows)


@dataclass(frozen=True)
class AlexanderDiagnostics:
    ok: bool
    unit_at_one: bool
    symmetric: bool

    def failed_checks(self) -> list[str]:
        out = []
        if not self.unit_at_one:
            out.append("value at t = 1 is not a unit")
        if not self.symmetric:
            out.append("not symmetric under t -> 1/t up to units")
        return out


def validate_alexander(poly: IntLaurentPoly) -> AlexanderDiagnostics:
    """Check the standard Alexander normalizations: Delta(1) = +-1 and
    Delta(t) = +- t^k Delta(1/t)."""
    coeffs = _ascending_coeffs(poly)
    unit = bool(coeffs) and evaluate_at_int(poly, 1) in (1, -1)
    symmetric = bool(coeffs) and (
        coeffs == coeffs[::-1] or coeffs == [-c for c in coeffs[::-1]]
    )
    return AlexanderDiagnostics(unit and symmetric, unit, symmetric)


def branched_cover_order(poly: IntLaurentPoly, n: int) -> int | None:
    """|H1| of the n-fold cyclic branched cover; None when infinite.

    Computed as |Res(Delta(t), 1 + t + ... + t^(n-1))|, which equals the
    absolute product of Delta over the nontrivial n-th roots of unity; the
    resultant vanishes exactly when some zero of Delta is an n-th root of
    unity.
    """
    if n < 2:
        raise ValueError("cover order n must be >= 2")
    coeffs = _ascending_coeffs(poly)
    if not coeffs or evaluate_at_int(poly, 1) not in (1, -1):
        raise NotAlexanderNormalized(
            f"polynomial {poly_str(poly)} has Delta(1) != +-1"
        )
    cyclotomic_quotient = [1] * n  # (t^n - 1)/(t - 1)
    res = _resultant(coeffs, cyclotomic_quotient)
    return abs(res) if res else None
