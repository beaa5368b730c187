"""Scalar decorations on cyclic modules and their classification.

Each extension pair of a cyclic module carries one nonzero scalar from a
finite field F_{p^d}.  Two decorations of the same module are isomorphic
exactly when the products of their scalars agree; the witness is the
telescoping list a_1 = 1, a_{i+1} = a_i * t'_i / t_i.

Field elements are coefficient tuples of length d, low degree first,
reduced modulo the first monic irreducible of degree d in base-p
enumeration order, so every run picks the same modulus.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .cyclic_module import CyclicModule
from .errors import DomainError
from .weights import is_prime


class FieldSpec(NamedTuple):
    """F_{p^d} with a fixed monic modulus (coefficients low first,
    length d + 1, leading 1)."""

    p: int
    d: int
    modulus: tuple


def _poly_divides(a, b, p):
    """Whether monic a divides b over F_p (b given low first)."""
    b = list(b)
    da, db = len(a) - 1, len(b) - 1
    while db >= da:
        c = b[db]
        if c:
            for i in range(da + 1):
                b[db - da + i] = (b[db - da + i] - c * a[i]) % p
        db -= 1
    return all(c == 0 for c in b)


def _monic_polys(p, degree):
    def rec(coeffs):
        if len(coeffs) == degree:
            yield tuple(coeffs) + (1,)
            return
        for c in range(p):
            yield from rec(coeffs + [c])

    yield from rec([])


def _is_irreducible(poly, p):
    d = len(poly) - 1
    for deg in range(1, d // 2 + 1):
        for cand in _monic_polys(p, deg):
            if _poly_divides(cand, poly, p):
                return False
    return True


def make_field(p: int, d: int) -> FieldSpec:
    if not is_prime(p):
        raise DomainError(f"field characteristic must be prime, got {p}")
    if d < 1:
        raise DomainError(f"field degree must be positive, got {d}")
    for n in range(p**d):
        coeffs, m = [], n
        for _ in range(d):
            coeffs.append(m % p)
            m //= p
        poly = tuple(coeffs) + (1,)
        if _is_irreducible(poly, p):
            return FieldSpec(p, d, poly)
    raise RuntimeError("no irreducible polynomial found; this is a bug")


def _reduce(coeffs, spec: FieldSpec):
    p, d = spec.p, spec.d
    coeffs = [c % p for c in coeffs]
    for i in range(len(coeffs) - 1, d - 1, -1):
        c = coeffs[i]
        if c:
            for j in range(d):
                coeffs[i - d + j] = (coeffs[i - d + j] - c * spec.modulus[j]) % p
        coeffs.pop()
    while len(coeffs) < d:
        coeffs.append(0)
    return tuple(coeffs)


@dataclass(frozen=True)
class FieldElement:
    coeffs: tuple
    spec: FieldSpec

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        if self.spec != other.spec:
            raise DomainError("field elements live in different fields")
        d = self.spec.d
        prod = [0] * (2 * d - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    prod[i + j] += a * b
        return FieldElement(_reduce(prod, self.spec), self.spec)

    def inverse(self) -> "FieldElement":
        if self.is_zero():
            raise DomainError("zero has no inverse")
        result = field_one(self.spec)
        base, e = self, self.spec.p**self.spec.d - 2
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result


def field_element(spec: FieldSpec, coeffs) -> FieldElement:
    coeffs = tuple(coeffs)
    if len(coeffs) > spec.d:
        raise DomainError(f"at most {spec.d} coefficients, got {len(coeffs)}")
    return FieldElement(_reduce(list(coeffs), spec), spec)


def field_one(spec: FieldSpec) -> FieldElement:
    return FieldElement((1,) + (0,) * (spec.d - 1), spec)


def field_product(spec: FieldSpec, elements) -> FieldElement:
    result = field_one(spec)
    for e in elements:
        result = result * e
    return result


def nonzero_elements(spec: FieldSpec):
    def rec(coeffs):
        if len(coeffs) == spec.d:
            e = FieldElement(tuple(coeffs), spec)
            if not e.is_zero():
                yield e
            return
        for c in range(spec.p):
            yield from rec(coeffs + [c])

    yield from rec([])


@dataclass(frozen=True)
class CyclicDiagram:
    module: CyclicModule
    scalars: tuple

    def normalized(self) -> "CyclicDiagram":
        i = self.module.normalization_shift()
        return CyclicDiagram(
            self.module.normalized(), self.scalars[i:] + self.scalars[:i]
        )


def make_diagram(module: CyclicModule, scalars) -> CyclicDiagram:
    scalars = tuple(scalars)
    if len(scalars) != module.n:
        raise DomainError(f"need {module.n} scalars, got {len(scalars)}")
    specs = {s.spec for s in scalars}
    if len(specs) != 1:
        raise DomainError("scalars live in different fields")
    spec = specs.pop()
    if spec.p != module.params.p:
        raise DomainError("scalar field characteristic differs from p")
    if any(s.is_zero() for s in scalars):
        raise DomainError("scalars must be nonzero")
    return CyclicDiagram(module, scalars)


def scalar_invariant(diagram: CyclicDiagram) -> FieldElement:
    return field_product(diagram.scalars[0].spec, diagram.scalars)


@dataclass(frozen=True)
class ClassifyResult:
    isomorphic: bool
    witness: tuple | None
    product_left: FieldElement
    product_right: FieldElement


def classify_isomorphic(left: CyclicDiagram, right: CyclicDiagram) -> ClassifyResult:
    """Decide isomorphism of two decorations of the same module.

    Isomorphic exactly when the scalar products agree; the witness list
    then satisfies a_i * t'_i = t_i * a_{i+1} cyclically.
    """
    left, right = left.normalized(), right.normalized()
    if left.module != right.module:
        raise DomainError("diagrams decorate different modules")
    if left.scalars[0].spec != right.scalars[0].spec:
        raise DomainError("diagrams use different scalar fields")
    pl = scalar_invariant(left)
    pr = scalar_invariant(right)
    if pl != pr:
        return ClassifyResult(False, None, pl, pr)
    spec = left.scalars[0].spec
    witness = [field_one(spec)]
    for t, t2 in zip(left.scalars[:-1], right.scalars[:-1]):
        witness.append(witness[-1] * t2 * t.inverse())
    closure = witness[-1] * right.scalars[-1] * left.scalars[-1].inverse()
    if closure != witness[0]:
        raise RuntimeError("witness failed to close; this is a bug")
    return ClassifyResult(True, tuple(witness), pl, pr)
