"""Exact computation in the braid group B3 = <s1, s2 | s1 s2 s1 = s2 s1 s2>.

Words are tuples of nonzero integers: +1 for s1, -1 for s1^-1, +2 for s2,
-2 for s2^-1.  The ASCII syntax is ``a`` = s1, ``A`` = s1^-1, ``b`` = s2,
``B`` = s2^-1, with whitespace ignored, so words round-trip bit-exactly
through the CLI.

Two independent decision procedures for the word problem are provided and
cross-validate each other:

* the quotient of B3 by its center is Z/2 * Z/3 (s1 -> b^2 a, s2 -> a b^2,
  where a is the image of Delta = s1 s2 s1 and b of s1 s2); a word is
  trivial iff its image reduces to the empty normal form AND its exponent
  sum vanishes (the kernel of the quotient is generated by Delta^2, which
  has exponent sum 6);
* Dehornoy-style handle reduction, which rewrites a word into one in which
  s1 occurs with a single sign only (or not at all).

Handle reduction also decides the Dubrovina-Dubrovin left ordering of B3:
a braid is DD-positive iff it admits a 1-positive representative (s1 only
with positive exponents) or equals s2^k with k < 0.
"""

from __future__ import annotations

from enum import Enum
from typing import NamedTuple

__all__ = [
    "Word",
    "Sign3",
    "Ordering",
    "PeripheralElement",
    "PeripheralOrderType",
    "StepCapExceeded",
    "BoundExceeded",
    "SIGMA1",
    "SIGMA2",
    "DELTA",
    "DELTA_SQ",
    "LONGITUDE",
    "parse_word",
    "word_str",
    "inverse",
    "concat",
    "power",
    "free_reduce",
    "exponent_sum",
    "modular_image",
    "is_trivial",
    "as_sigma2_power",
    "handle_reduce",
    "is_one_positive",
    "dd_sign",
    "dd_compare",
    "conj_sign",
    "delta_floor",
    "commutes_with_sigma2",
    "peripheral_parse",
    "restricted_order_type",
]

Word = tuple[int, ...]

DEFAULT_STEP_CAP = 1_000_000

_LETTER_OF_CHAR = {"a": 1, "A": -1, "b": 2, "B": -2}
_CHAR_OF_LETTER = {1: "a", -1: "A", 2: "b", -2: "B"}


class StepCapExceeded(RuntimeError):
    """Handle reduction exceeded its step cap (an internal bug: termination
    is a theorem, so a genuine input can never trip this)."""


class BoundExceeded(RuntimeError):
    """delta_floor found no floor within the letter-count bound (a bug:
    the bound is valid by the Malyutin inequalities)."""


class Sign3(Enum):
    POSITIVE = "positive"
    TRIVIAL = "trivial"
    NEGATIVE = "negative"


class Ordering(Enum):
    LESS = "less"
    EQUAL = "equal"
    GREATER = "greater"


class PeripheralElement(NamedTuple):
    """Element s2^k Delta^(2l) of the peripheral subgroup <s2, Delta^2>."""

    k: int
    l: int


class PeripheralOrderType(Enum):
    """The two possible restrictions of a conjugated DD ordering to
    <s2, Delta^2>: s2^k Delta^(2l) is positive iff l > 0, or l = 0 and
    k > 0 (POS_K) respectively k < 0 (NEG_K)."""

    POS_K = "pos_k"
    NEG_K = "neg_k"

    def is_positive(self, pe: PeripheralElement) -> bool:
        if pe.l != 0:
            return pe.l > 0
        return pe.k > 0 if self is PeripheralOrderType.POS_K else pe.k < 0


def parse_word(text: str) -> Word:
    """Parse ASCII braid syntax (a/A/b/B, whitespace ignored)."""
    letters = []
    for ch in text:
        if ch.isspace():
            continue
        try:
            letters.append(_LETTER_OF_CHAR[ch])
        except KeyError:
            raise ValueError(f"invalid braid letter {ch!r}") from None
    return tuple(letters)


def word_str(word: Word) -> str:
    return "".join(_CHAR_OF_LETTER[x] for x in word)


def inverse(word: Word) -> Word:
    return tuple(-x for x in reversed(word))


def concat(*words: Word) -> Word:
    out: list[int] = []
    for w in words:
        out.extend(w)
    return tuple(out)


def power(word: Word, n: int) -> Word:
    if n < 0:
        return inverse(word) * (-n)
    return word * n


SIGMA1: Word = (1,)
SIGMA2: Word = (2,)
DELTA: Word = (1, 2, 1)
DELTA_SQ: Word = DELTA + DELTA
# Longitude of the trefoil with meridian s2: Delta^2 s2^-6.
LONGITUDE: Word = DELTA_SQ + power(SIGMA2, -6)


def free_reduce(word: Word) -> Word:
    """Cancel adjacent mutually inverse letters until none remain."""
    stack: list[int] = []
    for x in word:
        if stack and stack[-1] == -x:
            stack.pop()
        else:
            stack.append(x)
    return tuple(stack)


def exponent_sum(word: Word) -> int:
    """Sum of letter signs; a homomorphism B3 -> Z (Delta^2 maps to 6)."""
    return sum(1 if x > 0 else -1 for x in word)


# --- quotient by the center: Z/2 * Z/3 ------------------------------------

# Letter images in the free product <abar | abar^2> * <bbar | bbar^3>,
# encoded as ("a", exp mod 2) / ("b", exp mod 3) tokens.
_MOD_IMAGE = {
    1: (("b", 2), ("a", 1)),
    -1: (("a", 1), ("b", 1)),
    2: (("a", 1), ("b", 2)),
    -2: (("b", 1), ("a", 1)),
}
_TOKEN_ORDER = {"a": 2, "b": 3}


def modular_image(word: Word) -> tuple[tuple[str, int], ...]:
    """Image in Z/2 * Z/3, as the alternating normal form.

    Tokens are ("a", 1), ("b", 1) or ("b", 2); the empty tuple is the
    identity.  Adjacent same-kind tokens merge with exponents taken mod 2
    (for a) or mod 3 (for b), cascading like free reduction.
    """
    stack: list[tuple[str, int]] = []
    for x in word:
        for kind, exp in _MOD_IMAGE[x]:
            if stack and stack[-1][0] == kind:
                exp = (stack[-1][1] + exp) % _TOKEN_ORDER[kind]
                stack.pop()
                if exp:
                    stack.append((kind, exp))
            else:
                stack.append((kind, exp))
    return tuple(stack)


def is_trivial(word: Word) -> bool:
    """Exact word problem: trivial iff the exponent sum is 0 and the
    central-quotient image is empty (the kernel of the quotient is
    <Delta^2> and exponent_sum(Delta^2) = 6)."""
    return exponent_sum(word) == 0 and not modular_image(word)


def as_sigma2_power(word: Word) -> int | None:
    """Return k iff the word equals s2^k; None otherwise.

    The only candidate is k = exponent_sum(word), confirmed by the word
    problem.
    """
    k = exponent_sum(word)
    if is_trivial(concat(word, power(SIGMA2, -k))):
        return k
    return None


# --- handle reduction ------------------------------------------------------

def _syllables(word: Word) -> list[list[int]]:
    """Freely reduced syllable form: [[gen, exp], ...] with gen in {1, 2},
    exp != 0, and adjacent generators distinct."""
    stack: list[list[int]] = []
    for x in word:
        gen = 1 if abs(x) == 1 else 2
        exp = 1 if x > 0 else -1
        if stack and stack[-1][0] == gen:
            stack[-1][1] += exp
            if stack[-1][1] == 0:
                stack.pop()
        else:
            stack.append([gen, exp])
    return stack


def _letters(sylls: list[list[int]]) -> Word:
    out: list[int] = []
    for gen, exp in sylls:
        out.extend([gen if exp > 0 else -gen] * abs(exp))
    return tuple(out)


def handle_reduce(word: Word, step_cap: int = DEFAULT_STEP_CAP) -> Word:
    """Dehornoy handle reduction, specialized to B3.

    After free reduction, an s1-handle is a subword s1^e s2^m s1^-e whose
    interior (a power of s2, since the word is freely reduced) contains no
    s1 letters.  The leftmost handle is rewritten by

        s1^e s2^m s1^-e  ->  s2^-e s1^sgn(m) s2^e  repeated |m| times,

    which freely telescopes to s2^-e s1^m s2^e; working on syllables makes
    each step O(1) splicing and never grows the letter count.  Iteration
    terminates (a theorem of Dehornoy) with a word in which s1 occurs with
    one sign only, or not at all.

    Raises StepCapExceeded past ``step_cap`` rewriting steps, which would
    indicate an implementation bug rather than a hard input.
    """
    s = _syllables(word)
    steps = 0
    # Leftmost handle = first pair of s1-syllables with opposite signs.
    # After a rewrite at position i, new handles can appear no further left
    # than i - 2, so the scan resumes there.
    scan_from = 0
    while True:
        i = scan_from
        found = -1
        while i + 2 < len(s):
            if s[i][0] == 1 and (s[i][1] > 0) != (s[i + 2][1] > 0):
                found = i
                break
            i += 1
        if found < 0 and scan_from > 0:
            # Nothing right of the resume point; one full rescan to be safe.
            scan_from = 0
            continue
        if found < 0:
            return _letters(s)
        steps += 1
        if steps > step_cap:
            raise StepCapExceeded(
                f"handle reduction exceeded {step_cap} steps on a word of "
                f"{len(word)} letters"
            )
        e1 = s[found][1]
        sgn = 1 if e1 > 0 else -1
        m = s[found + 1][1]
        e2 = s[found + 2][1]
        pieces = [
            [1, e1 - sgn],
            [2, -sgn],
            [1, m],
            [2, sgn],
            [1, e2 + sgn],
        ]
        # Splice with stack merging; cancellations may cascade into the
        # prefix, so rebuild from the handle position leftwards as needed.
        stack = s[:found]
        low = len(stack)
        for piece in pieces:
            gen, exp = piece
            if exp == 0:
                continue
            if stack and stack[-1][0] == gen:
                stack[-1][1] += exp
                if stack[-1][1] == 0:
                    stack.pop()
                    low = min(low, len(stack))
            else:
                stack.append([gen, exp])
        j = found + 3
        while j < len(s):
            gen, exp = s[j]
            if stack and stack[-1][0] == gen:
                stack[-1][1] += exp
                if stack[-1][1] == 0:
                    stack.pop()
                    low = min(low, len(stack))
                j += 1
            else:
                # Alternation means no further merges can occur.
                stack.extend(s[j:])
                break
        s = stack
        scan_from = max(0, low - 2)


def is_one_positive(word: Word, step_cap: int = DEFAULT_STEP_CAP) -> bool:
    """True iff the braid admits a representative in which s1 occurs, and
    only with positive exponents."""
    reduced = handle_reduce(word, step_cap)
    return any(abs(x) == 1 for x in reduced) and all(
        x > 0 for x in reduced if abs(x) == 1
    )


# --- the Dubrovina-Dubrovin ordering ---------------------------------------

def dd_sign(word: Word, step_cap: int = DEFAULT_STEP_CAP) -> Sign3:
    """Sign in the Dubrovina-Dubrovin ordering.

    Positive iff the handle-reduced word is 1-positive or a negative power
    of s2; the reduced word's shape (s1-uniform or s1-free) makes the
    trichotomy exact.
    """
    reduced = handle_reduce(word, step_cap)
    if not reduced:
        return Sign3.TRIVIAL
    if any(abs(x) == 1 for x in reduced):
        return Sign3.POSITIVE if reduced_has_positive_s1(reduced) else Sign3.NEGATIVE
    # A pure power of s2: positive iff the exponent is negative.
    return Sign3.POSITIVE if reduced[0] < 0 else Sign3.NEGATIVE


def reduced_has_positive_s1(reduced: Word) -> bool:
    for x in reduced:
        if abs(x) == 1:
            return x > 0
    raise ValueError("word contains no s1 letters")


def dd_compare(u: Word, v: Word, step_cap: int = DEFAULT_STEP_CAP) -> Ordering:
    """Compare in the DD ordering: u < v iff u^-1 v is DD-positive."""
    sign = dd_sign(concat(inverse(u), v), step_cap)
    if sign is Sign3.POSITIVE:
        return Ordering.LESS
    if sign is Sign3.TRIVIAL:
        return Ordering.EQUAL
    return Ordering.GREATER


def conj_sign(word: Word, conjugator: Word, step_cap: int = DEFAULT_STEP_CAP) -> Sign3:
    """Sign of ``word`` in the conjugate ordering whose positive cone is
    {w : g^-1 w g DD-positive} for g = ``conjugator``."""
    return dd_sign(concat(inverse(conjugator), word, conjugator), step_cap)


def delta_floor(word: Word, step_cap: int = DEFAULT_STEP_CAP) -> int:
    """The integer m with Delta^2m <=_DD word <_DD Delta^(2m+2).

    Each letter g satisfies Delta^-2 <_DD g <_DD Delta^2, so by the
    Malyutin product inequalities a word of L letters lies strictly between
    Delta^-2L and Delta^2(L+1); binary search over that range finds the
    floor.
    """
    bound = len(word)

    def at_most(m: int) -> bool:
        # Delta^2m <= word
        return dd_compare(power(DELTA_SQ, m), word, step_cap) is not Ordering.GREATER

    lo, hi = -bound, bound + 1
    if not at_most(lo) or at_most(hi):
        raise BoundExceeded(
            f"no Delta^2 floor within |m| <= {bound} for word {word_str(word)!r}"
        )
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if at_most(mid):
            lo = mid
        else:
            hi = mid
    return lo


def commutes_with_sigma2(word: Word) -> bool:
    """Exact commutator check against s2."""
    return is_trivial(concat(word, SIGMA2, inverse(word), power(SIGMA2, -1)))


def peripheral_parse(word: Word) -> PeripheralElement | None:
    """Recognize membership in <s2, Delta^2>.

    If word = s2^k Delta^(2l) then its central-quotient image equals the
    image of s2^k, and each s2 letter changes the image length by a
    bounded amount, so |k| <= letter count; the candidate (k, l) with
    l = (exponent_sum - k) / 6 is confirmed by the word problem.
    """
    img = modular_image(word)
    esum = exponent_sum(word)
    for k in range(-len(word), len(word) + 1):
        if modular_image(power(SIGMA2, k)) != img:
            continue
        if (esum - k) % 6 != 0:
            continue
        l = (esum - k) // 6
        if is_trivial(
            concat(word, power(DELTA_SQ, -l), power(SIGMA2, -k))
        ):
            return PeripheralElement(k, l)
    return None


def restricted_order_type(conjugator: Word) -> PeripheralOrderType:
    """Restriction of the conjugated DD ordering to <s2, Delta^2>.

    A conjugator commuting with s2 leaves s2^k positive iff k < 0, as in
    the DD ordering itself; a non-commuting conjugator flips the k-sign
    rule (by Property S the conjugated power s2^k is 1-positive iff k > 0).
    Delta^2 is cofinal, so l > 0 dominates in either case.
    """
    if commutes_with_sigma2(conjugator):
        return PeripheralOrderType.NEG_K
    return PeripheralOrderType.POS_K
