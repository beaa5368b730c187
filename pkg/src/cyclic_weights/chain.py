"""Chains of weights generated by a distinguished tuple of signed linear
polynomials.

For residue degree f > 1 the seed tuple is

    (x - 1,  p - 2 - x,  p - 1 - x,  ...,  p - 1 - x)

and the chain steps are its cyclic rotations, applied slotwise.  The k-th
iterate (the seed power) is the composition of the first k rotated steps;
`seed_power` builds it by a per-slot recurrence keyed on which rotated
entry lands on each slot, while repeated `compose`/`rotate` calls give the
same tuple by construction, so the two routes cross-check each other.

Every step carries a determinant twist: half the weighted sum of
p^j (v_j - step_j(v_j)) over the slots, shifted by p^f - 1 unless the last
slot polynomial is x or x - 1.  After l steps (l = f for odd f, 2f for
even f) the iterate returns to the identity and the accumulated twist is
independent of the start digits and divisible by p^f - 1, so the chain of
weights closes up.  `verify_seed_identities` checks all of that, plus the
parity behaviour of the sign vectors, over a box of start digits.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .errors import DomainError, ResidueDegreeError, TwistIntegralityError
from .tuple_algebra import (
    PolyTuple,
    SignedLinear,
    eval_tuple,
    identity_tuple,
    rotate,
    sign_vector,
)
from .weights import Params, Weight, make_weight


def period(params: Params) -> int:
    """Number of steps after which the chain closes: f for odd f, else 2f."""
    return params.f if params.f % 2 else 2 * params.f


@lru_cache(maxsize=None)
def seed_tuple(params: Params) -> PolyTuple:
    if params.f < 2:
        raise ResidueDegreeError(
            "the seed tuple needs f > 1; with f = 1 the chain degenerates "
            "to a principal series over the prime field"
        )
    p = params.p
    return (
        SignedLinear(1, -1),
        SignedLinear(-1, p - 2),
    ) + (SignedLinear(-1, p - 1),) * (params.f - 2)


@lru_cache(maxsize=None)
def rotated_seed(params: Params, i: int) -> PolyTuple:
    return rotate(seed_tuple(params), i % params.f)


@lru_cache(maxsize=None)
def seed_power(params: Params, k: int, rotation: int = 0) -> PolyTuple:
    """The k-th iterate of the rotated seed, via the per-slot recurrence.

    Step k composes rotation (rotation + k - 1) of the seed on the
    outside, so slot j of iterate k sees the seed entry with index
    (j + k - 1 + rotation) mod f: entry 0 subtracts one, entry 1 flips
    through p - 2, every other entry flips through p - 1.
    """
    f = params.f
    seed_tuple(params)  # f > 1 check
    if not 0 <= k <= period(params):
        raise DomainError(f"iterate index {k} outside [0, {period(params)}]")
    if k == 0:
        return identity_tuple(f)
    p = params.p
    prev = seed_power(params, k - 1, rotation)
    out = []
    for j in range(f):
        slot = (j + k - 1 + rotation) % f
        s, c = prev[j]
        if slot == 0:
            out.append(SignedLinear(s, c - 1))
        elif slot == 1:
            out.append(SignedLinear(-s, p - 2 - c))
        else:
            out.append(SignedLinear(-s, p - 1 - c))
    return tuple(out)


def det_twist(lam: PolyTuple, values, params: Params) -> int:
    """Determinant twist of one chain step applied at the given digits."""
    f = params.f
    if len(lam) != f or len(values) != f:
        raise DomainError(f"step and digits must both have length {f}")
    total, pj = 0, 1
    for j in range(f):
        total += pj * (values[j] - lam[j](values[j]))
        pj *= params.p
    last = lam[f - 1]
    if not (last.sign == 1 and last.const in (0, -1)):
        total += params.q_minus_1
    if total % 2:
        raise TwistIntegralityError(
            f"half twist of {lam} at {tuple(values)} is not integral"
        )
    return total // 2


def det_twist_sum(params: Params, r, k: int, rotation: int = 0) -> int:
    """Cumulative twist after k steps from digits r, left unreduced."""
    if not 0 <= k <= period(params):
        raise DomainError(f"step count {k} outside [0, {period(params)}]")
    total = 0
    for j in range(k):
        lam = rotated_seed(params, (rotation + j) % params.f)
        values = eval_tuple(seed_power(params, j, rotation), r)
        total += det_twist(lam, values, params)
    return total


@dataclass(frozen=True)
class ChainResult:
    """A closed chain: weights[0] == weights[length] and twists[length]
    is divisible by p^f - 1.  Twist sums are stored unreduced."""

    params: Params
    start_digits: tuple
    start_twist: int
    rotation: int
    length: int
    weights: tuple
    twists: tuple


def _check_box(params: Params, r) -> tuple:
    r = tuple(r)
    if len(r) != params.f:
        raise DomainError(f"need {params.f} start digits, got {len(r)}")
    for d in r:
        if not 1 <= d <= params.p - 3:
            raise DomainError(
                f"start digit {d} outside [1, {params.p - 3}]"
            )
    return r


def build_chain(params: Params, r, m: int = 0, rotation: int = 0) -> ChainResult:
    """The closed chain of weights from digits r and twist m.

    Start digits must lie in [1, p-3] so that every intermediate digit
    stays in [0, p-1].
    """
    seed_tuple(params)  # f > 1 check
    r = _check_box(params, r)
    l = period(params)
    q1 = params.q_minus_1
    weights = [make_weight(r, m, params)]
    twists = [0]
    for k in range(1, l + 1):
        lam = rotated_seed(params, (rotation + k - 1) % params.f)
        values = eval_tuple(seed_power(params, k - 1, rotation), r)
        twists.append(twists[-1] + det_twist(lam, values, params))
        digits = eval_tuple(seed_power(params, k, rotation), r)
        if any(d < 0 or d > params.p - 1 for d in digits):
            raise RuntimeError(
                f"chain digit left [0, p-1] at step {k}: {digits}"
            )
        weights.append(make_weight(digits, m + twists[-1], params))
    if weights[-1] != weights[0] or twists[-1] % q1:
        raise RuntimeError("chain failed to close; this is a bug")
    return ChainResult(
        params, r, m % q1, rotation % params.f, l, tuple(weights), tuple(twists)
    )


def default_box(params: Params, cap: int = 10**6, rng_seed: int = 0):
    """Start digit tuples for sweeps: the full box [1, p-3]^f when it has
    at most `cap` points, otherwise all corners plus a seeded sample."""
    p, f = params.p, params.f
    side = range(1, p - 2)
    if (p - 3) ** f <= cap:
        return tuple(product(side, repeat=f))
    rng = random.Random(f"{p}:{f}:{rng_seed}")
    points = set(product((1, p - 3), repeat=f))
    while len(points) < 4096:
        points.add(tuple(rng.randint(1, p - 3) for _ in range(f)))
    return tuple(sorted(points))


@dataclass(frozen=True)
class SeedReport:
    """Outcome of the closure checks for one (p, f).

    identity_ok      iterate l is the identity tuple
    distinct_ok      iterates 1..l pairwise distinct, likewise their
                     sign vectors
    sum_constant     the step-l twist sum takes a single value over the
                     tested digits
    sum_zero_mod     every tested twist sum is divisible by p^f - 1
    parity_ok        odd f: every sign vector has even weight;
                     even f: vectors k and k+f add up to all-ones
    constant_term_ok the digit-free part of the twist sums matches
                     (p^f-1)/(p-1), doubled for even f, mod p^f - 1
    column_sums_ok   per-slot sums of the iterates over the contributing
                     steps match the closed form (doubled for even f)

    The last two record the structure of the closing sum; for even f they
    are informational rather than part of `passed`.
    """

    params: Params
    r_count: int
    identity_ok: bool
    distinct_ok: bool
    sum_constant: bool
    sum_zero_mod: bool
    parity_ok: bool
    constant_term_ok: bool
    column_sums_ok: bool
    sum_value: int | None
    sign_vectors: tuple
    witnesses: tuple

    @property
    def passed(self) -> bool:
        return (
            self.identity_ok
            and self.distinct_ok
            and self.sum_constant
            and self.sum_zero_mod
            and self.parity_ok
        )


def verify_seed_identities(params: Params, r_set=None, rng_seed: int = 0) -> SeedReport:
    """Check the closure identities of the seed iterates over a digit box."""
    seed_tuple(params)  # f > 1 check
    p, f, q1 = params.p, params.f, params.q_minus_1
    l = period(params)
    witnesses = []

    powers = [seed_power(params, k) for k in range(l + 1)]
    identity_ok = powers[l] == identity_tuple(f)
    if not identity_ok:
        witnesses.append(f"iterate {l} is {powers[l]}, not the identity")

    vectors = tuple(sign_vector(powers[k]) for k in range(1, l + 1))
    distinct_ok = len(set(powers[1:])) == l and len(set(vectors)) == l
    if not distinct_ok:
        witnesses.append("iterates or sign vectors repeat before closing")

    if f % 2:
        parity_ok = all(sum(v) % 2 == 0 for v in vectors)
        if not parity_ok:
            witnesses.append("a sign vector has odd weight")
    else:
        ones = (1,) * f
        parity_ok = all(
            tuple((a + b) % 2 for a, b in zip(vectors[k], vectors[k + f])) == ones
            for k in range(f)
        )
        if not parity_ok:
            witnesses.append("vectors k and k+f do not sum to all-ones")

    if r_set is None:
        r_set = default_box(params, rng_seed=rng_seed)
    sums = set()
    for r in r_set:
        sums.add(det_twist_sum(params, r, l))
    sum_constant = len(sums) == 1
    sum_zero_mod = all(v % q1 == 0 for v in sums)
    if not sum_constant:
        witnesses.append(f"closing twist sums vary: {sorted(sums)[:4]}...")
    if not sum_zero_mod:
        witnesses.append("a closing twist sum is nonzero mod p^f - 1")

    # digit-free part of the closing sum, and the per-slot column sums
    zeros = (0,) * f
    c_num = sum(
        det_twist(rotated_seed(params, k % f), zeros, params) for k in range(l)
    )
    base = q1 // (p - 1)
    expected_c = base if f % 2 else 2 * base
    constant_term_ok = c_num % q1 == expected_c % q1
    if not constant_term_ok:
        witnesses.append(f"digit-free term {c_num} differs from {expected_c} mod q-1")

    col_expected = (f - 1) * (p - 1) // 2 - 1
    if f % 2 == 0:
        col_expected = 2 * col_expected
    column_sums_ok = True
    for j in range(f):
        ks = [k for k in range(l) if (j + k) % f != 0]
        for v in range(1, p - 2):
            if sum(powers[k][j](v) for k in ks) != col_expected:
                column_sums_ok = False
                witnesses.append(f"column {j} sum at digit {v} is off")
                break

    return SeedReport(
        params=params,
        r_count=len(r_set),
        identity_ok=identity_ok,
        distinct_ok=distinct_ok,
        sum_constant=sum_constant,
        sum_zero_mod=sum_zero_mod,
        parity_ok=parity_ok,
        constant_term_ok=constant_term_ok,
        column_sums_ok=column_sums_ok,
        sum_value=sums.pop() if sum_constant else None,
        sign_vectors=vectors,
        witnesses=tuple(witnesses),
    )
