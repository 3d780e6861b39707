"""
Foliations of the projective plane and their points, lines and singularity reports
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from models.field import FieldElem, ONE, ZERO, Scalar
from models.polynomial import MPoly, VarSet
from services.errors import DegenerateForm, RingMismatch, WebflatError

XY = VarSet(("x", "y"))
XYZ = VarSet(("x", "y", "z"))


@dataclass(frozen=True)
class AffineOneForm:
    """omega = P dx + Q dy in the chart z = 1; extra ring variables are parameters"""

    P: MPoly
    Q: MPoly

    def __post_init__(self):
        if self.P.ring != self.Q.ring:
            raise RingMismatch("P and Q must live in the same ring")
        if "x" not in self.P.ring or "y" not in self.P.ring:
            raise RingMismatch("an affine 1-form needs the variables x and y")
        if self.P.is_zero() and self.Q.is_zero():
            raise DegenerateForm("the 1-form is identically zero")

    @property
    def ring(self) -> VarSet:
        return self.P.ring

    @property
    def parameters(self) -> Tuple[str, ...]:
        return tuple(n for n in self.ring.names if n not in ("x", "y"))

    def affine_degree(self) -> int:
        return max(self.P.degree_in(("x", "y")), self.Q.degree_in(("x", "y")))

    def scale(self, factor: Scalar) -> "AffineOneForm":
        return AffineOneForm(self.P.scale(factor), self.Q.scale(factor))

    def __str__(self) -> str:
        return f"({self.P})*dx + ({self.Q})*dy"


@dataclass(frozen=True)
class ProjPoint:
    coords: Tuple[FieldElem, FieldElem, FieldElem]

    def __post_init__(self):
        if all(c.is_zero() for c in self.coords):
            raise WebflatError("[0:0:0] is not a projective point")

    @classmethod
    def of(cls, x: Scalar, y: Scalar, z: Scalar) -> "ProjPoint":
        values = [FieldElem.coerce(c) for c in (x, y, z)]
        last = next(c for c in reversed(values) if not c.is_zero())
        inverse = last.inverse()
        return cls(tuple(c * inverse for c in values))

    @property
    def x(self) -> FieldElem:
        return self.coords[0]

    @property
    def y(self) -> FieldElem:
        return self.coords[1]

    @property
    def z(self) -> FieldElem:
        return self.coords[2]

    def is_at_infinity(self) -> bool:
        return self.z.is_zero()

    def __str__(self) -> str:
        return "[" + ":".join(str(c) for c in self.coords) + "]"


@dataclass(frozen=True)
class Line:
    """The projective line a*x + b*y + c*z = 0"""

    a: FieldElem
    b: FieldElem
    c: FieldElem

    @classmethod
    def of(cls, a: Scalar, b: Scalar, c: Scalar) -> "Line":
        values = [FieldElem.coerce(v) for v in (a, b, c)]
        if all(v.is_zero() for v in values):
            raise WebflatError("0 = 0 is not a line")
        first = next(v for v in values if not v.is_zero())
        inverse = first.inverse()
        return cls(*(v * inverse for v in values))

    @classmethod
    def from_form(cls, form: MPoly) -> "Line":
        form = form.change_ring(XYZ)
        if form.total_degree() != 1 or not form.is_homogeneous():
            raise WebflatError(f"{form} is not a linear form")
        return cls.of(form.coefficient((1, 0, 0)), form.coefficient((0, 1, 0)), form.coefficient((0, 0, 1)))

    @classmethod
    def at_infinity(cls) -> "Line":
        return cls.of(0, 0, 1)

    def form(self) -> MPoly:
        x, y, z = (MPoly.var(XYZ, n) for n in XYZ.names)
        return x * self.a + y * self.b + z * self.c

    def contains(self, point: ProjPoint) -> bool:
        return (self.a * point.x + self.b * point.y + self.c * point.z).is_zero()

    def __str__(self) -> str:
        return str(self.form())


@dataclass(frozen=True)
class Foliation:
    """Saturated projective 1-form p dx + q dy + r dz with x p + y q + z r = 0"""

    p: MPoly
    q: MPoly
    r: MPoly
    degree: int

    def __post_init__(self):
        for comp in (self.p, self.q, self.r):
            if comp.ring != XYZ:
                raise RingMismatch("projective components live in the ring (x, y, z)")
        x, y, z = (MPoly.var(XYZ, n) for n in XYZ.names)
        if not (x * self.p + y * self.q + z * self.r).is_zero():
            raise WebflatError("components violate the Euler relation")

    def components(self) -> Tuple[MPoly, MPoly, MPoly]:
        return (self.p, self.q, self.r)

    def affine(self) -> AffineOneForm:
        """The chart z = 1 view (P, Q)"""
        P = self.p.evaluate({"z": 1}).change_ring(XY)
        Q = self.q.evaluate({"z": 1}).change_ring(XY)
        return AffineOneForm(P, Q)

    def __str__(self) -> str:
        return f"({self.p})*dx + ({self.q})*dy + ({self.r})*dz"


@dataclass(frozen=True)
class SingularityReport:
    point: ProjPoint
    nu: int
    tau: int
    milnor: Optional[int]
    nondegenerate: bool
    radial_order: int
    baum_bott: Optional[FieldElem]
    camacho_sad: List[Tuple[Line, FieldElem]] = field(default_factory=list)


@dataclass(frozen=True)
class InflectionSplit:
    invariant: List[Tuple[Line, int]]
    transverse: List[Tuple[MPoly, int]]
    # invariant components of the inflection divisor that do not split into lines over the field
    invariant_curves: List[Tuple[MPoly, int]] = field(default_factory=list)

    @property
    def convex(self) -> bool:
        return not self.transverse

    def transverse_product(self) -> MPoly:
        product = MPoly.one(XYZ)
        for factor, order in self.transverse:
            product = product * factor ** order
        return product


def identity_matrix() -> Tuple[Tuple[FieldElem, ...], ...]:
    return tuple(tuple(ONE if i == j else ZERO for j in range(3)) for i in range(3))
