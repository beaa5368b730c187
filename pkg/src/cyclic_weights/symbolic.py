"""Symbolic chain rows with the prime left as a formal parameter.

Constants here are affine expressions a + b*p.  They support just enough
arithmetic (+, -, multiplication by a sign) for the generic tuple algebra
to run on them unchanged, so the symbolic rows come from exactly the same
compose/rotate machinery as the numeric chains.  `example_lines` renders
the (sub, quotient) rows of the closed chain for a given f, digits as
r0, r1, ... and twists omitted.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError, ResidueDegreeError
from .tuple_algebra import SignedLinear, compose, rotate


@dataclass(frozen=True)
class PExpr:
    """The integer a + b*p with p formal."""

    offset: int
    p_coeff: int

    def __add__(self, other):
        if isinstance(other, PExpr):
            return PExpr(self.offset + other.offset, self.p_coeff + other.p_coeff)
        return PExpr(self.offset + other, self.p_coeff)

    __radd__ = __add__

    def __neg__(self):
        return PExpr(-self.offset, -self.p_coeff)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __rmul__(self, k: int):
        return PExpr(k * self.offset, k * self.p_coeff)

    def at(self, p: int) -> int:
        return self.offset + self.p_coeff * p


def symbolic_seed(f: int) -> tuple:
    if f < 2:
        raise ResidueDegreeError("the seed tuple needs f > 1")
    return (
        SignedLinear(1, PExpr(-1, 0)),
        SignedLinear(-1, PExpr(-2, 1)),
    ) + (SignedLinear(-1, PExpr(-1, 1)),) * (f - 2)


def _dual_entry(entry: SignedLinear) -> SignedLinear:
    # digit p - 1 - (s*x + c)
    return SignedLinear(-entry.sign, PExpr(-1, 1) - entry.const)


def symbolic_chain_pairs(f: int, rotation: int = 0) -> tuple:
    """(sub, quotient) polynomial rows of the closed chain, one per step."""
    l = f if f % 2 else 2 * f
    seed = symbolic_seed(f)
    cur = (SignedLinear(1, PExpr(0, 0)),) * f
    rows = []
    for k in range(l):
        step = rotate(seed, (rotation + k) % f)
        nxt = compose(step, cur)
        rows.append((nxt, tuple(_dual_entry(e) for e in cur)))
        cur = nxt
    return tuple(rows)


def render_entry(entry: SignedLinear, slot: int) -> str:
    var = f"r{slot}"
    c = entry.const
    if entry.sign == 1:
        if c.p_coeff != 0:
            raise DomainError(f"unrenderable entry {entry}")
        return var if c.offset == 0 else f"{var}{c.offset:+d}"
    if c.p_coeff != 1:
        raise DomainError(f"unrenderable entry {entry}")
    head = "p" if c.offset == 0 else f"p{c.offset:+d}"
    return f"{head}-{var}"


def _render_row(entries) -> str:
    return "(%s)" % ",".join(render_entry(e, j) for j, e in enumerate(entries))


def example_lines(f: int, rotation: int = 0) -> tuple:
    """One text line per chain step: sub row, two em dashes, quotient row."""
    return tuple(
        "%s —— %s" % (_render_row(sub), _render_row(quo))
        for sub, quo in symbolic_chain_pairs(f, rotation)
    )


def instantiate(entries, p: int) -> tuple:
    """Replace the formal p by a concrete value in a polynomial row."""
    return tuple(SignedLinear(e.sign, e.const.at(p)) for e in entries)
