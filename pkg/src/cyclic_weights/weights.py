"""Weights of GL2 over a residue field with p^f elements.

A weight is a digit tuple (r_0, ..., r_{f-1}) with entries in [0, p-1]
together with a determinant twist m taken modulo p^f - 1; it stands for
the representation Sym^{r_0} x ... twisted by det^m.  A weight is generic
when its digits are neither all 0 nor all p-1.  The diagonal character of
a weight records the exponents (r + m, m) with r = sum r_j p^j; swapping
the two exponents corresponds to the dual weight with digits p-1-r_j and
twist m + r.
"""

from __future__ import annotations

from typing import NamedTuple

from .errors import DomainError, LengthMismatchError


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class Params(NamedTuple):
    """Global parameters: the residue characteristic and degree."""

    p: int
    f: int
    q_minus_1: int


def make_params(p: int, f: int) -> Params:
    if not is_prime(p) or p <= 3:
        raise DomainError(f"p must be a prime greater than 3, got {p}")
    if f < 1:
        raise DomainError(f"f must be a positive integer, got {f}")
    return Params(p, f, p**f - 1)


class Weight(NamedTuple):
    digits: tuple
    twist: int
    params: Params


class BChar(NamedTuple):
    """Character of the diagonal, as exponents of the two entries mod p^f - 1."""

    a_exp: int
    d_exp: int
    params: Params


def radix_value(digits, p: int) -> int:
    """sum of digits[j] * p^j."""
    total, pj = 0, 1
    for d in digits:
        total += d * pj
        pj *= p
    return total


def make_weight(digits, twist: int, params: Params) -> Weight:
    digits = tuple(digits)
    if len(digits) != params.f:
        raise LengthMismatchError(
            f"weight needs {params.f} digits, got {len(digits)}"
        )
    for d in digits:
        if not 0 <= d <= params.p - 1:
            raise DomainError(f"digit {d} outside [0, {params.p - 1}]")
    return Weight(digits, twist % params.q_minus_1, params)


def is_generic(w: Weight) -> bool:
    top = w.params.p - 1
    return not (all(d == 0 for d in w.digits) or all(d == top for d in w.digits))


def s_dual(w: Weight) -> Weight:
    """Digits p-1-r_j, twist shifted by r.  An involution on generic weights."""
    if not is_generic(w):
        raise DomainError(f"dual undefined for non-generic weight {w.digits}")
    p = w.params.p
    return make_weight(
        tuple(p - 1 - d for d in w.digits),
        w.twist + radix_value(w.digits, p),
        w.params,
    )


def b_char(w: Weight) -> BChar:
    q1 = w.params.q_minus_1
    r = radix_value(w.digits, w.params.p)
    return BChar((r + w.twist) % q1, w.twist % q1, w.params)


def s_conjugate(ch: BChar) -> BChar:
    return BChar(ch.d_exp, ch.a_exp, ch.params)


def weight_from_char(ch: BChar) -> Weight:
    """The unique generic weight with the given diagonal character.

    Needs a_exp != d_exp; the digit tuple is the base-p expansion of the
    exponent difference, reduced into [1, p^f - 2].
    """
    q1 = ch.params.q_minus_1
    if ch.a_exp % q1 == ch.d_exp % q1:
        raise DomainError("equal exponents do not determine a generic weight")
    rr = (ch.a_exp - ch.d_exp) % q1
    digits = []
    for _ in range(ch.params.f):
        digits.append(rr % ch.params.p)
        rr //= ch.params.p
    return make_weight(tuple(digits), ch.d_exp, ch.params)


def format_weight(w: Weight) -> str:
    return "(%s)⊗det^%d" % (",".join(str(d) for d in w.digits), w.twist)


def weight_to_json(w: Weight) -> dict:
    return {"digits": list(w.digits), "twist": w.twist}


def weight_from_json(doc: dict, params: Params) -> Weight:
    return make_weight(tuple(doc["digits"]), doc["twist"], params)
