"""Exact arithmetic on tuples of signed linear polynomials.

A signed linear polynomial is sign*x + const with sign in {+1, -1} and an
unbounded integer constant; nothing here reduces modulo anything.  Tuples
of length f are evaluated and composed slotwise and rotated cyclically.
The constants only need + and -, so the same operations also run on the
affine-in-p constants used by the symbolic renderer.
"""

from __future__ import annotations

from typing import NamedTuple

from .errors import LengthMismatchError


class SignedLinear(NamedTuple):
    """The polynomial sign*x + const."""

    sign: int
    const: int

    def __call__(self, value):
        return self.sign * value + self.const

    def compose_with(self, inner: "SignedLinear") -> "SignedLinear":
        """self(inner(x)): sign is the product, constant is sign*c' + c."""
        return SignedLinear(self.sign * inner.sign, self.sign * inner.const + self.const)


X = SignedLinear(1, 0)

# A PolyTuple is a tuple of SignedLinear of some fixed length f >= 1; a
# SignVector is the tuple of its sign bits (0 for +1, 1 for -1).
PolyTuple = tuple
SignVector = tuple


def identity_tuple(f: int) -> PolyTuple:
    return (X,) * f


def _check_lengths(a, b, what: str):
    if len(a) != len(b):
        raise LengthMismatchError(f"{what}: lengths {len(a)} and {len(b)} differ")


def eval_tuple(lam: PolyTuple, values) -> tuple:
    """Slotwise evaluation (lam_0(v_0), ..., lam_{f-1}(v_{f-1}))."""
    _check_lengths(lam, values, "eval_tuple")
    return tuple(entry(v) for entry, v in zip(lam, values))


def compose(outer: PolyTuple, inner: PolyTuple) -> PolyTuple:
    """Slotwise composition outer(inner(x))."""
    _check_lengths(outer, inner, "compose")
    return tuple(o.compose_with(i) for o, i in zip(outer, inner))


def rotate(lam: PolyTuple, i: int) -> PolyTuple:
    """Cyclic rotation: entry j of the result is entry (j + i) mod f."""
    f = len(lam)
    i %= f
    return lam[i:] + lam[:i]


def sign_vector(lam: PolyTuple) -> SignVector:
    """One bit per slot, 0 for sign +1 and 1 for sign -1."""
    return tuple(0 if entry.sign == 1 else 1 for entry in lam)
