"""
Implicit webs F(u, v, w) = 0 and their curvature 2-forms
"""

from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Tuple, Union

from models.polynomial import MPoly
from services.errors import WebflatError


class Chart(str, Enum):
    AFFINE = "affine"
    DUAL1 = "dual1"
    DUAL2 = "dual2"
    DUAL3 = "dual3"

    @classmethod
    def parse(cls, value: Union["Chart", int, str]) -> "Chart":
        if isinstance(value, Chart):
            return value
        text = str(value).strip().lower()
        if text in ("1", "2", "3"):
            text = f"dual{text}"
        try:
            return cls(text)
        except ValueError:
            raise WebflatError(f"unknown chart '{value}', expected 1, 2 or 3") from None

    @property
    def number(self) -> int:
        return 0 if self is Chart.AFFINE else int(self.value[-1])


@dataclass(frozen=True)
class ImplicitWeb:
    """F = sum a_i(u, v) w^(k-i); ring variables other than base and fiber are parameters"""

    F: MPoly
    base: Tuple[str, str]
    fiber: str
    chart: Chart = Chart.AFFINE

    def __post_init__(self):
        for name in (*self.base, self.fiber):
            self.F.ring.index(name)
        if self.F.is_zero():
            raise WebflatError("the zero polynomial defines no web")

    @property
    def order(self) -> int:
        """k, the number of directions"""
        return self.F.degree(self.fiber)

    @property
    def parameters(self) -> Tuple[str, ...]:
        fixed = set(self.base) | {self.fiber}
        return tuple(n for n in self.F.ring.names if n not in fixed)

    def coefficients(self) -> List[MPoly]:
        """[a_0, ..., a_k] with a_0 the coefficient of the highest fiber power"""
        parts = self.F.coefficients_in(self.fiber)
        zero = MPoly.zero(self.F.ring)
        return [parts.get(self.order - i, zero) for i in range(self.order + 1)]

    def specialize(self, values: Dict[str, object]) -> "ImplicitWeb":
        """Fix some parameters to field values"""
        return ImplicitWeb(self.F.evaluate(values), self.base, self.fiber, self.chart)

    def __str__(self) -> str:
        return str(self.F)


@dataclass(frozen=True)
class Curvature2Form:
    """K = (numerator / denominator) du^dv; the reduced pair has the common gcd removed"""

    numerator: MPoly
    denominator: MPoly
    reduced_numerator: MPoly
    reduced_denominator: MPoly
    base: Tuple[str, str]

    def __post_init__(self):
        if self.denominator.is_zero():
            raise WebflatError("a curvature denominator cannot vanish")

    @property
    def flat(self) -> bool:
        return self.numerator.is_zero()

    def equals(self, numerator: MPoly, denominator: MPoly) -> bool:
        """Cross-multiplied comparison with another rational function in the same ring"""
        return (self.numerator * denominator - self.denominator * numerator).is_zero()
