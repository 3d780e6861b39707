"""
Roots in Q(i, sqrt3) of univariate polynomials and binary forms
"""

import logging
from fractions import Fraction
from math import gcd as gcd_int, isqrt
from typing import List, Optional, Sequence, Tuple

import mpmath

from models.field import FieldElem, ONE, ZERO
from models.polynomial import MPoly
from services.elimination import gcd
from services.errors import WebflatError, ZeroPolynomial

logger = logging.getLogger(__name__)

Roots = List[Tuple[FieldElem, int]]

DIVISOR_LIMIT = 10 ** 12
RECOGNITION_DPS = 60


def _single_variable(f: MPoly) -> Optional[str]:
    used = f.variables()
    if len(used) > 1:
        raise WebflatError(f"expected a univariate polynomial, got variables {used}")
    return used[0] if used else None


def _dense(f: MPoly, name: str) -> List[FieldElem]:
    """Coefficients from the constant term upwards"""
    k = f.ring.index(name)
    coeffs = [ZERO] * (f.degree(name) + 1)
    for exp, coeff in f.items():
        coeffs[exp[k]] = coeff
    return coeffs


def _horner(coeffs: Sequence, value):
    total = coeffs[-1]
    for coeff in reversed(coeffs[:-1]):
        total = total * value + coeff
    return total


def _divide_linear(coeffs: List[FieldElem], root: FieldElem) -> List[FieldElem]:
    """Synthetic division by (v - root); the caller guarantees root is a root"""
    quotient = [ZERO] * (len(coeffs) - 1)
    carry = ZERO
    for k in range(len(coeffs) - 1, 0, -1):
        carry = coeffs[k] + carry * root
        quotient[k - 1] = carry
    return quotient


def _strip(coeffs: List[FieldElem], root: FieldElem, roots: Roots) -> List[FieldElem]:
    multiplicity = 0
    while len(coeffs) > 1 and _horner(coeffs, root).is_zero():
        coeffs = _divide_linear(coeffs, root)
        multiplicity += 1
    if multiplicity:
        roots.append((root, multiplicity))
    return coeffs


def _divisors(n: int) -> List[int]:
    n = abs(n)
    if n > DIVISOR_LIMIT:
        return [1, n]
    small, large = [], []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
    return small + large[::-1]


def _rational_norm(coeffs: List[FieldElem]) -> List[Fraction]:
    """Coefficients of the product of the Galois conjugates, a rational polynomial"""
    def mul(a, b):
        out = [ZERO] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                out[i + j] = out[i + j] + x * y
        return out

    if all(c.is_rational() for c in coeffs):
        return [c.c0 for c in coeffs]
    product = coeffs
    for conj in (FieldElem.conjugate_i, FieldElem.conjugate_sqrt3, FieldElem.conjugate_both):
        product = mul(product, [conj(c) for c in coeffs])
    return [c.c0 for c in product]


def _candidate_roots(coeffs: List[FieldElem]) -> List[FieldElem]:
    """Roots whose square is rational, read off the even polynomial E(v^2) = N(v) N(-v)"""
    norm = _rational_norm(coeffs)
    mirrored = [c if k % 2 == 0 else -c for k, c in enumerate(norm)]
    product = [Fraction(0)] * (2 * len(norm) - 1)
    for i, a in enumerate(norm):
        if a:
            for j, b in enumerate(mirrored):
                product[i + j] += a * b
    even = product[::2]
    while len(even) > 1 and even[-1] == 0:
        even.pop()
    scale = 1
    for c in even:
        scale = scale * c.denominator // gcd_int(scale, c.denominator)
    ints = [int(c * scale) for c in even]
    if len(ints) < 2 or ints[0] == 0:
        return []
    candidates = []
    for p in _divisors(ints[0]):
        for q in _divisors(ints[-1]):
            for value in (Fraction(p, q), Fraction(-p, q)):
                if _horner([Fraction(c) for c in ints], value) == 0:
                    root = FieldElem.coerce(value).sqrt()
                    if root is not None:
                        candidates.extend([root, -root])
    unique = []
    for c in candidates:
        if c not in unique:
            unique.append(c)
    return unique


def _to_mpc(value: FieldElem):
    s3 = mpmath.sqrt(3)
    return mpmath.mpc(
        mpmath.mpf(value.c0.numerator) / value.c0.denominator + s3 * mpmath.mpf(value.c2.numerator) / value.c2.denominator,
        mpmath.mpf(value.c1.numerator) / value.c1.denominator + s3 * mpmath.mpf(value.c3.numerator) / value.c3.denominator,
    )


def _recognize_real(x) -> Optional[Tuple[Fraction, Fraction]]:
    """x = a + b*sqrt3 with small rationals a, b"""
    if abs(x) < mpmath.mpf(10) ** (-RECOGNITION_DPS // 2):
        return (Fraction(0), Fraction(0))
    relation = mpmath.pslq([x, 1, mpmath.sqrt(3)], maxcoeff=10 ** 8, maxsteps=10 ** 5)
    if not relation or relation[0] == 0:
        return None
    n0, n1, n2 = (int(r) for r in relation)
    return (Fraction(-n1, n0), Fraction(-n2, n0))


def _numeric_candidates(coeffs: List[FieldElem]) -> List[FieldElem]:
    with mpmath.workdps(RECOGNITION_DPS):
        try:
            approx = mpmath.polyroots([_to_mpc(c) for c in reversed(coeffs)], maxsteps=400, extraprec=200)
        except mpmath.libmp.NoConvergence:
            logger.warning("⚠️ numeric root search did not converge")
            return []
        found = []
        for z in approx:
            real = _recognize_real(mpmath.re(z))
            imag = _recognize_real(mpmath.im(z))
            if real is None or imag is None:
                continue
            found.append(FieldElem(real[0], imag[0], real[1], imag[1]))
        return found


def _squarefree_dense(coeffs: List[FieldElem], ring, name: str) -> List[FieldElem]:
    x = MPoly.var(ring, name)
    poly = MPoly.zero(ring)
    for power, coeff in enumerate(coeffs):
        if coeff:
            poly = poly + x ** power * coeff
    reduced = poly.exact_div(gcd(poly, poly.derivative(name)))
    return _dense(reduced, name)


def _quadratic_roots(coeffs: List[FieldElem]) -> Optional[List[FieldElem]]:
    c, b, a = coeffs
    disc = (b * b - 4 * a * c).sqrt()
    if disc is None:
        return None
    return [(-b + disc) / (2 * a), (-b - disc) / (2 * a)]


def find_field_roots(f: MPoly) -> Tuple[Roots, MPoly]:
    """Roots with multiplicity and the unsplit residual: f = residual * prod (v - r)^m"""
    if f.is_zero():
        raise ZeroPolynomial("roots of the zero polynomial")
    name = _single_variable(f)
    if name is None:
        return [], f
    roots: Roots = []
    coeffs = _dense(f, name)
    coeffs = _strip(coeffs, ZERO, roots)
    if len(coeffs) > 3:
        for candidate in _candidate_roots(coeffs):
            coeffs = _strip(coeffs, candidate, roots)
    if len(coeffs) > 3:
        for candidate in _numeric_candidates(_squarefree_dense(coeffs, f.ring, name)):
            coeffs = _strip(coeffs, candidate, roots)
    if len(coeffs) == 2:
        coeffs = _strip(coeffs, -coeffs[0] / coeffs[1], roots)
    elif len(coeffs) == 3:
        quadratic = _quadratic_roots(coeffs)
        if quadratic is not None:
            for candidate in quadratic:
                coeffs = _strip(coeffs, candidate, roots)
    x = MPoly.var(f.ring, name)
    residual = MPoly.zero(f.ring)
    for power, coeff in enumerate(coeffs):
        if coeff:
            residual = residual + x ** power * coeff
    if residual.degree(name) > 0:
        logger.info(f"🔍 {residual.degree(name)} roots of a degree {f.degree(name)} polynomial stay outside the field")
    return roots, residual


def binary_form_roots(f: MPoly, x: str, y: str) -> Tuple[List[Tuple[Tuple[FieldElem, FieldElem], int]], MPoly]:
    """Points [a:b] of P^1 where a binary form vanishes; [a:b] corresponds to the factor b*x - a*y"""
    if f.is_zero():
        raise ZeroPolynomial("roots of the zero binary form")
    degree = f.degree_in((x, y))
    affine = f.evaluate({y: 1})
    found, residual = find_field_roots(affine) if affine.degree(x) > 0 else ([], affine)
    points = [((root, ONE), m) for root, m in found]
    at_infinity = degree - max(affine.degree(x), 0)
    if at_infinity:
        points.append(((ONE, ZERO), at_infinity))
    residual_form = residual.homogenize(y, over=(x, y)) if residual.degree(x) > 0 else MPoly.one(f.ring)
    return points, residual_form


def linear_factor(point: Tuple[FieldElem, FieldElem], ring, x: str, y: str) -> MPoly:
    a, b = point
    return (MPoly.var(ring, x) * b - MPoly.var(ring, y) * a).monic()


def univariate_gcd_roots(f: MPoly, g: MPoly) -> Tuple[Roots, MPoly]:
    """Common roots of two univariate polynomials over the field"""
    common = gcd(f, g)
    if common.is_zero():
        raise ZeroPolynomial("both polynomials vanish identically")
    return find_field_roots(common)
