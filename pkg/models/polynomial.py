"""
Sparse exact multivariate polynomials over Q(i, sqrt3)
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

from models.field import FieldElem, ONE, ZERO, Scalar
from services import compute_guard
from services.errors import NonDivisible, RingMismatch, UnknownVariable, ZeroPolynomial

Exponent = Tuple[int, ...]


@dataclass(frozen=True)
class VarSet:
    """Ordered, duplicate-free variable names of a polynomial ring"""

    names: Tuple[str, ...]

    def __post_init__(self):
        if not self.names:
            raise ValueError("a polynomial ring needs at least one variable")
        if len(set(self.names)) != len(self.names):
            raise ValueError(f"duplicate variable names in {self.names}")

    @classmethod
    def of(cls, ring: Union["VarSet", Sequence[str]]) -> "VarSet":
        if isinstance(ring, VarSet):
            return ring
        return cls(tuple(ring))

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise UnknownVariable(f"variable '{name}' is not in ring {self.names}") from None

    def __contains__(self, name: str) -> bool:
        return name in self.names

    def __len__(self) -> int:
        return len(self.names)

    def __iter__(self) -> Iterator[str]:
        return iter(self.names)

    def extend(self, extra: Iterable[str]) -> "VarSet":
        return VarSet(self.names + tuple(n for n in extra if n not in self.names))


def grlex_key(exp: Exponent) -> Tuple[int, Exponent]:
    return (sum(exp), exp)


class MPoly:
    """Immutable sparse polynomial: exponent vector -> nonzero coefficient"""

    __slots__ = ("ring", "_terms", "_hash")

    def __init__(self, ring: Union[VarSet, Sequence[str]], terms: Optional[Mapping[Exponent, Scalar]] = None):
        self.ring = VarSet.of(ring)
        cleaned: Dict[Exponent, FieldElem] = {}
        if terms:
            width = len(self.ring)
            for exp, coeff in terms.items():
                if len(exp) != width:
                    raise ValueError(f"exponent {exp} does not match ring {self.ring.names}")
                coeff = FieldElem.coerce(coeff)
                if coeff:
                    cleaned[tuple(exp)] = coeff
        self._terms = cleaned
        self._hash = None

    @classmethod
    def _wrap(cls, ring: VarSet, terms: Dict[Exponent, FieldElem]) -> "MPoly":
        obj = cls.__new__(cls)
        obj.ring = ring
        obj._terms = terms
        obj._hash = None
        return obj

    # Constructors

    @classmethod
    def zero(cls, ring) -> "MPoly":
        return cls._wrap(VarSet.of(ring), {})

    @classmethod
    def constant(cls, ring, value: Scalar) -> "MPoly":
        ring = VarSet.of(ring)
        value = FieldElem.coerce(value)
        if not value:
            return cls._wrap(ring, {})
        return cls._wrap(ring, {(0,) * len(ring): value})

    @classmethod
    def one(cls, ring) -> "MPoly":
        return cls.constant(ring, ONE)

    @classmethod
    def var(cls, ring, name: str) -> "MPoly":
        ring = VarSet.of(ring)
        exp = [0] * len(ring)
        exp[ring.index(name)] = 1
        return cls._wrap(ring, {tuple(exp): ONE})

    @classmethod
    def monomial(cls, ring, powers: Mapping[str, int], coeff: Scalar = 1) -> "MPoly":
        ring = VarSet.of(ring)
        exp = [0] * len(ring)
        for name, power in powers.items():
            exp[ring.index(name)] = power
        return cls(ring, {tuple(exp): coeff})

    # Inspection

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def items(self) -> List[Tuple[Exponent, FieldElem]]:
        """Terms in descending graded-lexicographic order"""
        return sorted(self._terms.items(), key=lambda item: grlex_key(item[0]), reverse=True)

    def coefficient(self, exp: Exponent) -> FieldElem:
        return self._terms.get(tuple(exp), ZERO)

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and not any(next(iter(self._terms))))

    def constant_value(self) -> FieldElem:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self._terms.get((0,) * len(self.ring), ZERO)

    def constant_term(self) -> FieldElem:
        return self._terms.get((0,) * len(self.ring), ZERO)

    def variables(self) -> List[str]:
        used = [False] * len(self.ring)
        for exp in self._terms:
            for k, e in enumerate(exp):
                if e:
                    used[k] = True
        return [name for name, flag in zip(self.ring.names, used) if flag]

    def total_degree(self) -> int:
        if not self._terms:
            return -1
        return max(sum(exp) for exp in self._terms)

    def degree(self, name: str) -> int:
        k = self.ring.index(name)
        if not self._terms:
            return -1
        return max(exp[k] for exp in self._terms)

    def degree_in(self, names: Iterable[str]) -> int:
        """Total degree counting only the given variables"""
        idx = [self.ring.index(n) for n in names]
        if not self._terms:
            return -1
        return max(sum(exp[k] for k in idx) for exp in self._terms)

    def min_degree(self, name: str) -> int:
        k = self.ring.index(name)
        if not self._terms:
            return -1
        return min(exp[k] for exp in self._terms)

    def leading_term(self) -> Tuple[Exponent, FieldElem]:
        if not self._terms:
            raise ZeroPolynomial("the zero polynomial has no leading term")
        exp = max(self._terms, key=grlex_key)
        return exp, self._terms[exp]

    def leading_coefficient(self) -> FieldElem:
        return self.leading_term()[1]

    def monic(self) -> "MPoly":
        if not self._terms:
            return self
        lc = self.leading_coefficient()
        if lc.is_one():
            return self
        return self.scale(lc.inverse())

    def is_homogeneous(self, names: Optional[Iterable[str]] = None) -> bool:
        if not self._terms:
            return True
        idx = range(len(self.ring)) if names is None else [self.ring.index(n) for n in names]
        degrees = {sum(exp[k] for k in idx) for exp in self._terms}
        return len(degrees) == 1

    def homogeneous_components(self, names: Optional[Iterable[str]] = None) -> Dict[int, "MPoly"]:
        idx = list(range(len(self.ring))) if names is None else [self.ring.index(n) for n in names]
        parts: Dict[int, Dict[Exponent, FieldElem]] = {}
        for exp, coeff in self._terms.items():
            parts.setdefault(sum(exp[k] for k in idx), {})[exp] = coeff
        return {deg: MPoly._wrap(self.ring, terms) for deg, terms in parts.items()}

    def coefficients_in(self, name: str) -> Dict[int, "MPoly"]:
        """Coefficients of the powers of one variable, as polynomials free of it"""
        k = self.ring.index(name)
        parts: Dict[int, Dict[Exponent, FieldElem]] = {}
        for exp, coeff in self._terms.items():
            stripped = exp[:k] + (0,) + exp[k + 1:]
            parts.setdefault(exp[k], {})[stripped] = coeff
        return {power: MPoly._wrap(self.ring, terms) for power, terms in parts.items()}

    def leading_coefficient_in(self, name: str) -> "MPoly":
        parts = self.coefficients_in(name)
        return parts[max(parts)] if parts else self

    def coefficient_of(self, powers: Mapping[str, int]) -> "MPoly":
        """Coefficient of a monomial in some variables, as a polynomial in the others"""
        picks = [(self.ring.index(n), p) for n, p in powers.items()]
        terms: Dict[Exponent, FieldElem] = {}
        for exp, coeff in self._terms.items():
            if all(exp[k] == p for k, p in picks):
                stripped = list(exp)
                for k, _ in picks:
                    stripped[k] = 0
                terms[tuple(stripped)] = coeff
        return MPoly._wrap(self.ring, terms)

    @classmethod
    def from_coefficients(cls, ring, name: str, coeffs: Mapping[int, "MPoly"]) -> "MPoly":
        ring = VarSet.of(ring)
        x = cls.var(ring, name)
        result = cls.zero(ring)
        for power, coeff in coeffs.items():
            result = result + coeff * x ** power
        return result

    # Arithmetic

    def _coerce(self, other) -> "MPoly":
        if isinstance(other, MPoly):
            if other.ring != self.ring:
                raise RingMismatch(f"ring {other.ring.names} does not match {self.ring.names}")
            return other
        return MPoly.constant(self.ring, FieldElem.coerce(other))

    def __add__(self, other) -> "MPoly":
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        if not other._terms:
            return self
        terms = dict(self._terms)
        for exp, coeff in other._terms.items():
            total = terms.get(exp)
            if total is None:
                terms[exp] = coeff
            else:
                total = total + coeff
                if total:
                    terms[exp] = total
                else:
                    del terms[exp]
        return MPoly._wrap(self.ring, terms)

    __radd__ = __add__

    def __neg__(self) -> "MPoly":
        return MPoly._wrap(self.ring, {exp: -coeff for exp, coeff in self._terms.items()})

    def __sub__(self, other) -> "MPoly":
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "MPoly":
        return self._coerce(other) - self

    def scale(self, factor: Scalar) -> "MPoly":
        factor = FieldElem.coerce(factor)
        if not factor:
            return MPoly.zero(self.ring)
        if factor.is_one():
            return self
        return MPoly._wrap(self.ring, {exp: coeff * factor for exp, coeff in self._terms.items()})

    def __mul__(self, other) -> "MPoly":
        if isinstance(other, (int, Fraction, FieldElem)):
            return self.scale(other)
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        if not self._terms or not other._terms:
            return MPoly.zero(self.ring)
        left, right = self._terms, other._terms
        if len(left) < len(right):
            left, right = right, left
        result: Dict[Exponent, FieldElem] = {}
        for e1, c1 in right.items():
            for e2, c2 in left.items():
                exp = tuple(a + b for a, b in zip(e1, e2))
                prod = c1 * c2
                total = result.get(exp)
                if total is None:
                    result[exp] = prod
                else:
                    total = total + prod
                    if total:
                        result[exp] = total
                    else:
                        del result[exp]
            compute_guard.checkpoint(len(result))
        return MPoly._wrap(self.ring, result)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "MPoly":
        if exponent < 0:
            raise ValueError("negative powers of polynomials are not polynomials")
        result, base = MPoly.one(self.ring), self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def exact_div(self, divisor: "MPoly") -> "MPoly":
        """Quotient of an exact division; raises NonDivisible when a remainder is left"""
        divisor = self._coerce(divisor)
        if not divisor._terms:
            raise ZeroPolynomial("division by the zero polynomial")
        if divisor.is_constant():
            return self.scale(divisor.constant_value().inverse())
        lead_exp, lead_coeff = divisor.leading_term()
        lead_inv = lead_coeff.inverse()
        remainder = dict(self._terms)
        quotient: Dict[Exponent, FieldElem] = {}
        while remainder:
            exp = max(remainder, key=grlex_key)
            shift = tuple(a - b for a, b in zip(exp, lead_exp))
            if any(s < 0 for s in shift):
                raise NonDivisible(f"{divisor} does not divide the dividend")
            factor = remainder[exp] * lead_inv
            quotient[shift] = factor
            for dexp, dcoeff in divisor._terms.items():
                target = tuple(a + b for a, b in zip(dexp, shift))
                value = remainder.get(target, ZERO) - dcoeff * factor
                if value:
                    remainder[target] = value
                else:
                    remainder.pop(target, None)
            compute_guard.checkpoint(len(remainder))
        return MPoly._wrap(self.ring, quotient)

    def divides(self, other: "MPoly") -> bool:
        try:
            other.exact_div(self)
        except NonDivisible:
            return False
        return True

    # Calculus and substitution

    def derivative(self, name: str) -> "MPoly":
        k = self.ring.index(name)
        terms: Dict[Exponent, FieldElem] = {}
        for exp, coeff in self._terms.items():
            if exp[k]:
                lowered = exp[:k] + (exp[k] - 1,) + exp[k + 1:]
                terms[lowered] = coeff * exp[k]
        return MPoly._wrap(self.ring, terms)

    def substitute(self, bindings: Mapping[str, Union["MPoly", Scalar]],
                   ring: Optional[Union[VarSet, Sequence[str]]] = None) -> "MPoly":
        """Simultaneous substitution; unbound variables map to same-named variables of the target ring"""
        for name in bindings:
            self.ring.index(name)
        target = VarSet.of(ring) if ring is not None else None
        for value in bindings.values():
            if isinstance(value, MPoly):
                if target is None:
                    target = value.ring
                elif value.ring != target:
                    raise RingMismatch("substitution targets must share one ring")
        if target is None:
            target = self.ring
        images: Dict[int, MPoly] = {}
        for k in (self.ring.index(n) for n in self.variables()):
            value = bindings.get(self.ring.names[k])
            if value is None:
                images[k] = MPoly.var(target, self.ring.names[k])
            elif isinstance(value, MPoly):
                images[k] = value
            else:
                images[k] = MPoly.constant(target, value)
        powers: Dict[int, Dict[int, MPoly]] = {k: {1: image} for k, image in images.items()}

        def power(k: int, e: int) -> MPoly:
            cache = powers[k]
            if e not in cache:
                cache[e] = power(k, e - 1) * images[k]
            return cache[e]

        result: Dict[Exponent, FieldElem] = {}
        for exp, coeff in self._terms.items():
            term = MPoly.constant(target, coeff)
            for k, e in enumerate(exp):
                if e:
                    term = term * power(k, e)
            for texp, tcoeff in term._terms.items():
                total = result.get(texp, ZERO) + tcoeff
                if total:
                    result[texp] = total
                else:
                    result.pop(texp, None)
            compute_guard.checkpoint(len(result))
        return MPoly._wrap(target, result)

    def evaluate(self, point: Mapping[str, Scalar]) -> "MPoly":
        """Replace some variables by field constants, staying in the same ring"""
        picks = [(self.ring.index(n), FieldElem.coerce(v)) for n, v in point.items()]
        terms: Dict[Exponent, FieldElem] = {}
        for exp, coeff in self._terms.items():
            stripped = list(exp)
            for k, value in picks:
                if exp[k]:
                    coeff = coeff * value ** exp[k]
                stripped[k] = 0
            if not coeff:
                continue
            key = tuple(stripped)
            total = terms.get(key, ZERO) + coeff
            if total:
                terms[key] = total
            else:
                terms.pop(key, None)
        return MPoly._wrap(self.ring, terms)

    def value_at(self, point: Mapping[str, Scalar]) -> FieldElem:
        return self.evaluate(point).constant_value()

    def change_ring(self, ring: Union[VarSet, Sequence[str]]) -> "MPoly":
        """Re-express in another ring sharing the variable names actually used"""
        ring = VarSet.of(ring)
        if ring == self.ring:
            return self
        mapping = []
        for k, name in enumerate(self.ring.names):
            if name in ring:
                mapping.append((k, ring.index(name)))
        mapped = {k for k, _ in mapping}
        terms: Dict[Exponent, FieldElem] = {}
        for exp, coeff in self._terms.items():
            for k, e in enumerate(exp):
                if e and k not in mapped:
                    raise UnknownVariable(
                        f"variable '{self.ring.names[k]}' is not in ring {ring.names}"
                    )
            new = [0] * len(ring)
            for k, j in mapping:
                new[j] = exp[k]
            terms[tuple(new)] = coeff
        return MPoly._wrap(ring, terms)

    def homogenize(self, name: str, degree: Optional[int] = None, over: Optional[Iterable[str]] = None) -> "MPoly":
        """Pad each term with powers of `name` up to a common degree in the `over` variables"""
        k = self.ring.index(name)
        idx = [i for i in range(len(self.ring)) if i != k] if over is None else [self.ring.index(n) for n in over]
        if not self._terms:
            return self
        top = max(sum(exp[i] for i in idx) for exp in self._terms)
        if degree is None:
            degree = top
        if degree < top:
            raise ValueError(f"cannot homogenize degree {top} polynomial to degree {degree}")
        terms: Dict[Exponent, FieldElem] = {}
        for exp, coeff in self._terms.items():
            new = list(exp)
            new[k] = exp[k] + degree - sum(exp[i] for i in idx)
            terms[tuple(new)] = coeff
        return MPoly._wrap(self.ring, terms)

    # Equality, hashing, printing

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction, FieldElem)):
            return self.is_constant() and self.constant_term() == other
        if not isinstance(other, MPoly):
            return NotImplemented
        return self.ring == other.ring and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self._terms.items())))
        return self._hash

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        text = ""
        for position, (exp, coeff) in enumerate(self.items()):
            monomial = "*".join(
                name if e == 1 else f"{name}^{e}"
                for name, e in zip(self.ring.names, exp) if e
            )
            negative = coeff.is_rational() and coeff.c0 < 0
            magnitude = -coeff if negative else coeff
            if not monomial:
                body = str(magnitude) if magnitude.is_rational() or len(self._terms) == 1 else f"({magnitude})"
            elif magnitude.is_one():
                body = monomial
            elif magnitude.is_rational():
                body = f"{magnitude}*{monomial}"
            else:
                body = f"({magnitude})*{monomial}"
            if position == 0:
                text = f"-{body}" if negative else body
            else:
                text += f" - {body}" if negative else f" + {body}"
        return text

    def __repr__(self) -> str:
        return f"MPoly({list(self.ring.names)}, '{self}')"


def variables(ring: Union[VarSet, Sequence[str]]) -> Tuple[MPoly, ...]:
    """Generators of a ring, in ring order"""
    ring = VarSet.of(ring)
    return tuple(MPoly.var(ring, name) for name in ring.names)
