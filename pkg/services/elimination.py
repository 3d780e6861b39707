"""
Elimination toolkit: gcd, squarefree decomposition, resultants, determinants
"""

import logging
from typing import Dict, List, Optional, Sequence, Tuple

from models.polynomial import MPoly
from services import compute_guard
from services.errors import NonDivisible, RingMismatch, WebflatError, ZeroPolynomial

logger = logging.getLogger(__name__)

Matrix = List[List[MPoly]]


def _same_ring(f: MPoly, g: MPoly) -> None:
    if f.ring != g.ring:
        raise RingMismatch(f"ring {f.ring.names} does not match {g.ring.names}")


# Greatest common divisors

def gcd(f: MPoly, g: MPoly) -> MPoly:
    """Greatest common divisor with leading coefficient 1; gcd(0, 0) = 0"""
    _same_ring(f, g)
    if f.is_zero():
        return g.monic()
    if g.is_zero():
        return f.monic()
    if f.is_constant() or g.is_constant():
        return MPoly.one(f.ring)
    return _gcd(f, g).monic()


def gcd_all(polys: Sequence[MPoly]) -> MPoly:
    result = None
    for poly in polys:
        result = poly.monic() if result is None else gcd(result, poly)
        if result.is_constant() and not result.is_zero():
            return MPoly.one(poly.ring)
    if result is None:
        raise ValueError("gcd of an empty family")
    return result


def _gcd(f: MPoly, g: MPoly) -> MPoly:
    if f.is_constant() or g.is_constant():
        return MPoly.one(f.ring)
    f_vars, g_vars = f.variables(), g.variables()
    for name in f_vars:
        if name not in g_vars:
            return _gcd(content(f, name), g)
    for name in g_vars:
        if name not in f_vars:
            return _gcd(f, content(g, name))
    main = min(f_vars, key=lambda n: (max(f.degree(n), g.degree(n)), f.ring.index(n)))
    f_content, g_content = content(f, main), content(g, main)
    common = _gcd(f_content, g_content)
    primitive = _primitive_gcd(f.exact_div(f_content), g.exact_div(g_content), main)
    return common * primitive


def content(f: MPoly, name: str) -> MPoly:
    """gcd of the coefficients of f viewed as a polynomial in one variable"""
    coeffs = sorted(f.coefficients_in(name).values(), key=len)
    if not coeffs:
        return f
    if any(c.is_constant() for c in coeffs):
        return MPoly.one(f.ring)
    result = coeffs[0]
    for coeff in coeffs[1:]:
        result = _gcd(result, coeff)
        if result.is_constant():
            return MPoly.one(f.ring)
    return result


def primitive_part(f: MPoly, name: str) -> MPoly:
    if f.is_zero():
        return f
    return f.exact_div(content(f, name)).monic()


def pseudo_remainder(f: MPoly, g: MPoly, name: str) -> MPoly:
    g_deg = g.degree(name)
    g_lead = g.leading_coefficient_in(name)
    x = MPoly.var(f.ring, name)
    remainder = f
    while not remainder.is_zero() and remainder.degree(name) >= g_deg:
        r_deg = remainder.degree(name)
        r_lead = remainder.leading_coefficient_in(name)
        remainder = g_lead * remainder - r_lead * x ** (r_deg - g_deg) * g
    return remainder


def _primitive_gcd(a: MPoly, b: MPoly, name: str) -> MPoly:
    if a.degree(name) < b.degree(name):
        a, b = b, a
    a, b = a.monic(), b.monic()
    while True:
        remainder = pseudo_remainder(a, b, name)
        if remainder.is_zero():
            return b
        if remainder.degree(name) == 0:
            return MPoly.one(a.ring)
        a, b = b, primitive_part(remainder, name)


def proportional(f: MPoly, g: MPoly) -> bool:
    """True when f = c*g for a nonzero field constant c"""
    _same_ring(f, g)
    if f.is_zero() or g.is_zero():
        return f.is_zero() and g.is_zero()
    if len(f) != len(g):
        return False
    return f.monic() == g.monic()


# Squarefree decomposition

def _yun(f: MPoly, name: str) -> List[Tuple[int, MPoly]]:
    derivative = f.derivative(name)
    a0 = gcd(f, derivative)
    b = f.exact_div(a0)
    c = derivative.exact_div(a0)
    d = c - b.derivative(name)
    multiplicity = 1
    classes: List[Tuple[int, MPoly]] = []
    while b.degree(name) > 0:
        a = gcd(b, d)
        b = b.exact_div(a)
        c = d.exact_div(a)
        d = c - b.derivative(name)
        if a.degree(name) > 0:
            classes.append((multiplicity, a.monic()))
        multiplicity += 1
    return classes


def squarefree_decomposition(f: MPoly) -> List[Tuple[int, MPoly]]:
    """[(k, S_k)] with f = unit * prod S_k^k, for univariate polynomials and binary forms"""
    if f.is_zero():
        raise ZeroPolynomial("squarefree decomposition of the zero polynomial")
    used = f.variables()
    if not used:
        return []
    if len(used) == 1:
        return _yun(f, used[0])
    if len(used) == 2 and f.is_homogeneous(used):
        x, y = used
        degree = f.degree_in(used)
        affine = f.evaluate({y: 1})
        classes: Dict[int, MPoly] = {}
        if affine.degree(x) > 0:
            for k, factor in _yun(affine, x):
                classes[k] = factor.homogenize(y, over=used).monic()
        at_infinity = degree - max(affine.degree(x), 0)
        if at_infinity:
            y_var = MPoly.var(f.ring, y)
            classes[at_infinity] = (classes[at_infinity] * y_var).monic() if at_infinity in classes else y_var
        return sorted(classes.items())
    raise WebflatError("squarefree decomposition expects a univariate polynomial or a binary form")


def squarefree_part(f: MPoly) -> MPoly:
    result = MPoly.one(f.ring)
    for _, factor in squarefree_decomposition(f):
        result = result * factor
    return result


# Determinants and resultants

def bareiss_determinant(matrix: Matrix) -> MPoly:
    """Fraction-free elimination with row swaps; every division is exact"""
    n = len(matrix)
    if n == 0:
        raise ValueError("determinant of an empty matrix")
    ring = matrix[0][0].ring
    rows = [list(row) for row in matrix]
    sign = 1
    previous: Optional[MPoly] = None
    for k in range(n - 1):
        if rows[k][k].is_zero():
            pivot = next((i for i in range(k + 1, n) if not rows[i][k].is_zero()), None)
            if pivot is None:
                return MPoly.zero(ring)
            rows[k], rows[pivot] = rows[pivot], rows[k]
            sign = -sign
        lead = rows[k][k]
        for i in range(k + 1, n):
            below = rows[i][k]
            for j in range(k + 1, n):
                entry = lead * rows[i][j]
                if not below.is_zero() and not rows[k][j].is_zero():
                    entry = entry - below * rows[k][j]
                if previous is not None:
                    entry = entry.exact_div(previous)
                rows[i][j] = entry
            compute_guard.checkpoint()
        previous = lead
    result = rows[n - 1][n - 1]
    return -result if sign < 0 else result


def minor_expansion_determinant(matrix: Matrix) -> MPoly:
    """Laplace expansion along rows with memoised minors (division free)"""
    n = len(matrix)
    if n == 0:
        raise ValueError("determinant of an empty matrix")
    ring = matrix[0][0].ring
    memo: Dict[Tuple[int, ...], MPoly] = {}

    def minor(row: int, columns: Tuple[int, ...]) -> MPoly:
        if row == n:
            return MPoly.one(ring)
        cached = memo.get(columns)
        if cached is not None:
            return cached
        total = MPoly.zero(ring)
        for position, column in enumerate(columns):
            entry = matrix[row][column]
            if entry.is_zero():
                continue
            term = entry * minor(row + 1, columns[:position] + columns[position + 1:])
            total = total + term if position % 2 == 0 else total - term
        memo[columns] = total
        compute_guard.checkpoint(len(total))
        return total

    return minor(0, tuple(range(n)))


def sylvester_matrix(f: MPoly, g: MPoly, name: str) -> Matrix:
    _same_ring(f, g)
    m, n = f.degree(name), g.degree(name)
    f_coeffs, g_coeffs = f.coefficients_in(name), g.coefficients_in(name)
    zero = MPoly.zero(f.ring)
    size = m + n
    matrix: Matrix = []
    for shift in range(n):
        row = [zero] * size
        for power, coeff in f_coeffs.items():
            row[shift + m - power] = coeff
        matrix.append(row)
    for shift in range(m):
        row = [zero] * size
        for power, coeff in g_coeffs.items():
            row[shift + n - power] = coeff
        matrix.append(row)
    return matrix


def resultant(f: MPoly, g: MPoly, name: str) -> MPoly:
    """Determinant of the Sylvester matrix of f and g with respect to one variable"""
    _same_ring(f, g)
    if f.is_zero() or g.is_zero():
        raise ZeroPolynomial("resultant with the zero polynomial")
    m, n = f.degree(name), g.degree(name)
    if m == 0 and n == 0:
        raise ZeroPolynomial(f"both polynomials are free of '{name}'")
    if m == 0:
        return f ** n
    if n == 0:
        return g ** m
    return bareiss_determinant(sylvester_matrix(f, g, name))


def discriminant(f: MPoly, name: str) -> MPoly:
    """Delta with Res(f, f') = (-1)^(k(k-1)/2) * a0 * Delta"""
    k = f.degree(name)
    lead = f.leading_coefficient_in(name)
    if k <= 1:
        return MPoly.one(f.ring)
    result = resultant(f, f.derivative(name), name)
    try:
        delta = result.exact_div(lead)
    except NonDivisible:
        raise NonDivisible("p-resultant is not divisible by the leading coefficient") from None
    return -delta if (k * (k - 1) // 2) % 2 else delta


def is_coprime(f: MPoly, g: MPoly) -> bool:
    return gcd(f, g).is_constant()

