"""
Homogeneous foliations A(x,y) dx + B(x,y) dy and their inflection type
"""

from dataclasses import dataclass, field
from typing import Dict

from models.foliation import XY, AffineOneForm
from models.polynomial import MPoly
from services.errors import FormSyntaxError, NotHomogeneous


@dataclass(frozen=True)
class HomFoliation:
    """A, B binary forms of a common degree d >= 2, coprime"""

    A: MPoly
    B: MPoly

    def __post_init__(self):
        for form in (self.A, self.B):
            if form.ring != XY:
                raise NotHomogeneous("homogeneous foliations live in the ring (x, y)")
            if not form.is_homogeneous():
                raise NotHomogeneous(f"{form} is not a binary form")
        if self.A.is_zero() or self.B.is_zero():
            raise NotHomogeneous("A and B must both be nonzero")
        if self.A.total_degree() != self.B.total_degree():
            raise NotHomogeneous("A and B must have the same degree")
        if self.degree < 2:
            raise NotHomogeneous("homogeneous foliations need degree at least 2")

    @property
    def degree(self) -> int:
        return self.A.total_degree()

    def form(self) -> AffineOneForm:
        return AffineOneForm(self.A, self.B)

    def __str__(self) -> str:
        return str(self.form())


@dataclass(frozen=True)
class HomType:
    """Formal sum of radial orders R_k and transverse inflection orders T_k"""

    radial: Dict[int, int] = field(default_factory=dict)
    transverse: Dict[int, int] = field(default_factory=dict)

    @property
    def degree(self) -> int:
        return sum(k * n for k, n in self.radial.items()) + sum(k * n for k, n in self.transverse.items())

    @property
    def radial_count(self) -> int:
        return sum(self.radial.values())

    @property
    def convex(self) -> bool:
        return not self.transverse

    @classmethod
    def parse(cls, text: str) -> "HomType":
        """Inverse of str(), e.g. '1·R1+1·T1+1·R2'; '0' is the empty type"""
        radial: Dict[int, int] = {}
        transverse: Dict[int, int] = {}
        text = text.replace(" ", "")
        if text in ("", "0"):
            return cls()
        for chunk in text.split("+"):
            count, _, kind = chunk.replace("*", "·").partition("·")
            if len(kind) < 2 or kind[0] not in "RT" or not count.isdigit() or not kind[1:].isdigit():
                raise FormSyntaxError(f"bad type term '{chunk}'")
            target = radial if kind[0] == "R" else transverse
            target[int(kind[1:])] = target.get(int(kind[1:]), 0) + int(count)
        return cls(radial, transverse)

    def __str__(self) -> str:
        orders = sorted(set(self.radial) | set(self.transverse))
        parts = []
        for k in orders:
            if self.radial.get(k):
                parts.append(f"{self.radial[k]}·R{k}")
            if self.transverse.get(k):
                parts.append(f"{self.transverse[k]}·T{k}")
        return "+".join(parts) if parts else "0"
