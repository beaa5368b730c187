"""Cyclic arrangements of weight extensions.

A cyclic module is a list of extension pairs (sub, quotient) in which the
quotient of each pair is the dual of the previous pair's sub, indices
taken cyclically.  Each pair also carries the diagonal characters of its
two constituents.  `successor_weights` lists the weights that may follow
a given weight as the next sub: the rotated seed tuples applied to its
digits, with the matching determinant twists; members whose digits leave
[0, p-1] are dropped and reported.  Validation replays all of that
against a candidate module.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .chain import ChainResult, det_twist, rotated_seed, seed_tuple
from .errors import DomainError
from .tuple_algebra import eval_tuple
from .weights import (
    BChar,
    Params,
    Weight,
    b_char,
    is_generic,
    make_weight,
    s_conjugate,
    s_dual,
)


class ExtensionPair(NamedTuple):
    """A sub weight glued under a quotient weight, with their diagonal
    characters (char of sub, swapped char of the dual of quotient)."""

    sub: Weight
    quotient: Weight
    u_chars: tuple


def make_extension_pair(sub: Weight, prev_sub: Weight) -> ExtensionPair:
    quotient = s_dual(prev_sub)
    if sub == quotient:
        raise DomainError("sub equals quotient; the pair would be split")
    return ExtensionPair(sub, quotient, (b_char(sub), s_conjugate(b_char(prev_sub))))


@dataclass(frozen=True)
class SuccessorSet:
    """Successors of a weight, sorted, plus the digit tuples that fell
    outside [0, p-1] and were dropped."""

    weights: tuple
    pruned: tuple


def successor_weights(w: Weight) -> SuccessorSet:
    params = w.params
    seed_tuple(params)  # f > 1 check
    if not is_generic(w):
        raise DomainError("successors are defined for generic weights only")
    p, f, q1 = params.p, params.f, params.q_minus_1
    out, pruned = set(), []
    for i in range(f):
        lam = rotated_seed(params, i)
        digits = eval_tuple(lam, w.digits)
        if any(d < 0 or d > p - 1 for d in digits):
            pruned.append(digits)
            continue
        twist = (det_twist(lam, w.digits, params) + w.twist) % q1
        out.add(make_weight(digits, twist, params))
    return SuccessorSet(tuple(sorted(out)), tuple(pruned))


@dataclass(frozen=True, eq=False)
class CyclicModule:
    """Equality and hashing are up to cyclic rotation of the pair list,
    via the rotation that brings the least sub to the front."""

    pairs: tuple
    params: Params

    @property
    def n(self) -> int:
        return len(self.pairs)

    def normalization_shift(self) -> int:
        keys = [(p.sub.digits, p.sub.twist) for p in self.pairs]
        return keys.index(min(keys))

    def normalized_pairs(self) -> tuple:
        i = self.normalization_shift()
        return self.pairs[i:] + self.pairs[:i]

    def normalized(self) -> "CyclicModule":
        return CyclicModule(self.normalized_pairs(), self.params)

    def __eq__(self, other):
        if not isinstance(other, CyclicModule):
            return NotImplemented
        return (
            self.params == other.params
            and self.normalized_pairs() == other.normalized_pairs()
        )

    def __hash__(self):
        return hash((self.params, self.normalized_pairs()))


def build_cyclic_module(chain: ChainResult) -> CyclicModule:
    pairs = tuple(
        make_extension_pair(chain.weights[k], chain.weights[k - 1])
        for k in range(1, chain.length + 1)
    )
    return CyclicModule(pairs, chain.params)


def jh_factors(module: CyclicModule) -> tuple:
    """All 2n constituents, subs then quotients, as a sorted multiset."""
    factors = [p.sub for p in module.pairs] + [p.quotient for p in module.pairs]
    return tuple(sorted(factors))


def is_multiplicity_free(module: CyclicModule) -> bool:
    factors = jh_factors(module)
    return len(set(factors)) == len(factors)


@dataclass(frozen=True)
class ValidationReport:
    subs_ok: bool
    cyclic_ok: bool
    edges_ok: bool
    chars_ok: bool
    failures: tuple

    @property
    def passed(self) -> bool:
        return self.subs_ok and self.cyclic_ok and self.edges_ok and self.chars_ok


def validate_cyclic_module(module: CyclicModule) -> ValidationReport:
    """Replay the defining conditions of a cyclic module.

    (a) subs pairwise distinct and generic, (b) each quotient is the dual
    of the previous sub, cyclically, (c) each sub is a successor of the
    previous sub, (d) the stored characters match the constituents.
    """
    pairs = module.pairs
    n = len(pairs)
    failures = []

    subs = [p.sub for p in pairs]
    subs_ok = len(set(subs)) == n and all(is_generic(s) for s in subs)
    if len(set(subs)) != n:
        failures.append("subs repeat")
    for i, s in enumerate(subs):
        if not is_generic(s):
            failures.append(f"sub {i} is not generic")

    cyclic_ok = True
    edges_ok = True
    chars_ok = True
    for i in range(n):
        prev = subs[i - 1]
        if not is_generic(prev):
            cyclic_ok = edges_ok = False
            failures.append(f"pair {i}: previous sub not generic")
            continue
        if pairs[i].quotient != s_dual(prev):
            cyclic_ok = False
            failures.append(f"pair {i}: quotient is not the dual of sub {i - 1}")
        if pairs[i].sub not in successor_weights(prev).weights:
            edges_ok = False
            failures.append(f"pair {i}: sub does not succeed sub {i - 1}")
        expected = (b_char(pairs[i].sub), s_conjugate(b_char(prev)))
        if pairs[i].u_chars != expected:
            chars_ok = False
            failures.append(f"pair {i}: stored characters are wrong")

    return ValidationReport(subs_ok, cyclic_ok, edges_ok, chars_ok, tuple(failures))
