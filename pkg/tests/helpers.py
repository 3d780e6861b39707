"""
Conversion helpers between the kernel and the sympy oracle
"""

import sympy

from models.polynomial import MPoly
from services.parser_service import parse_polynomial

SYMPY_NAMES = {"i": sympy.I, "sqrt3": sympy.sqrt(3)}


def poly(text: str, ring=("x", "y")) -> MPoly:
    return parse_polynomial(text, ring)


def to_sympy(f: MPoly):
    names = {name: sympy.Symbol(name) for name in f.ring.names}
    names.update(SYMPY_NAMES)
    return sympy.expand(sympy.sympify(str(f).replace("^", "**"), locals=names))


def from_sympy(expr, ring) -> MPoly:
    text = str(sympy.expand(expr)).replace("**", "^").replace("sqrt(3)", "sqrt3").replace("I", "i")
    return parse_polynomial(text, ring)
