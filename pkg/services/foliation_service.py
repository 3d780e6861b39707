"""
Foliation service: saturation, singular points, local invariants, tangency, inflection divisor, pullbacks
"""

import logging
from typing import Dict, List, Optional, Sequence, Tuple

from config import settings
from models.field import FieldElem, ONE, ZERO
from models.foliation import (
    XY, XYZ, AffineOneForm, Foliation, InflectionSplit, Line, ProjPoint, SingularityReport,
)
from models.polynomial import MPoly, VarSet
from services.elimination import gcd, gcd_all, resultant, squarefree_part
from services.errors import (
    Degenerate, DegenerateForm, GenericityFailure, IncompleteFactorization, InvariantLine,
    NonIsolated, NotInvariant, NotSingular, SingularMatrix, WebflatError,
)
from services.root_finding import binary_form_roots, find_field_roots

logger = logging.getLogger(__name__)

UV = VarSet(("u", "v"))
ST = VarSet(("s", "t"))
SHEARS = (1, -1, 2, -2, 3, -3, 5, -5, 7, -7)

Matrix3 = Sequence[Sequence[FieldElem]]


def _radical(f: MPoly) -> MPoly:
    if f.is_constant():
        return MPoly.one(f.ring)
    return f.exact_div(gcd_all([f] + [f.derivative(name) for name in f.ring.names]))


def _peel(f: MPoly, part: MPoly) -> Tuple[List[Tuple[MPoly, int]], MPoly]:
    """Split off the components of the squarefree `part` from f, grouped by multiplicity"""
    pieces: List[Tuple[MPoly, int]] = []
    order = 0
    current = part
    while not current.is_constant():
        f = f.exact_div(current)
        order += 1
        following = gcd(f, current)
        piece = current.exact_div(following)
        if not piece.is_constant():
            pieces.append((piece.monic(), order))
        current = following
    return pieces, f


def _order(f: MPoly) -> Optional[int]:
    """Lowest total degree of a term, None for the zero polynomial"""
    if f.is_zero():
        return None
    return min(sum(exp) for exp, _ in f.items())


def _det3(m: Matrix3) -> FieldElem:
    return (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )


class FoliationService:
    def __init__(self, shear_retries: Optional[int] = None):
        self.shear_retries = settings.WEBFLAT_SHEAR_RETRIES if shear_retries is None else shear_retries

    # Construction

    def from_affine(self, form: AffineOneForm) -> Foliation:
        """Homogenize P dx + Q dy, complete it with r from the Euler relation and saturate"""
        if form.parameters:
            raise WebflatError(f"cannot build a foliation with symbolic parameters {form.parameters}")
        P, Q = form.P.change_ring(XYZ), form.Q.change_ring(XYZ)
        x, y = MPoly.var(XYZ, "x"), MPoly.var(XYZ, "y")
        top = form.affine_degree() + 1
        p = P.homogenize("z", top, over=("x", "y"))
        q = Q.homogenize("z", top, over=("x", "y"))
        r = -(x * P + y * Q).homogenize("z", top, over=("x", "y"))
        return self.saturate(p, q, r)

    def saturate(self, p: MPoly, q: MPoly, r: MPoly) -> Foliation:
        if p.is_zero() and q.is_zero() and r.is_zero():
            raise DegenerateForm("the zero form defines no foliation")
        common = gcd_all([c for c in (p, q, r) if not c.is_zero()])
        if not common.is_constant():
            p, q, r = (c.exact_div(common) for c in (p, q, r))
        degree = max(c.total_degree() for c in (p, q, r)) - 1
        if degree < 0:
            raise DegenerateForm("saturation left no 1-form")
        return Foliation(p, q, r, degree)

    def degree(self, foliation: Foliation) -> int:
        return foliation.degree

    # Singular points

    def singular_points(self, foliation: Foliation) -> Tuple[List[ProjPoint], List[MPoly]]:
        """Common zeros over the field, plus the factors whose roots leave the field"""
        points: List[ProjPoint] = []
        residual: List[MPoly] = []
        affine = foliation.affine()
        P, Q = affine.P, affine.Q
        if P.is_zero() or Q.is_zero():
            other = Q if P.is_zero() else P
            if not other.is_constant():
                raise NonIsolated("a saturated foliation has isolated singular points")
        elif P.degree("y") > 0 or Q.degree("y") > 0:
            eliminant = resultant(P, Q, "y")
            if not eliminant.is_constant():
                roots, rest = find_field_roots(eliminant)
                if rest.total_degree() > 0:
                    residual.append(rest)
                for x0, _ in roots:
                    fiber = gcd(P.evaluate({"x": x0}), Q.evaluate({"x": x0}))
                    if fiber.is_zero():
                        raise NonIsolated(f"the line x = {x0} is singular")
                    if fiber.is_constant():
                        continue
                    y_roots, y_rest = find_field_roots(fiber)
                    if y_rest.total_degree() > 0:
                        residual.append(y_rest)
                    points.extend(ProjPoint.of(x0, y0, 1) for y0, _ in y_roots)
        at_infinity = gcd_all([c.evaluate({"z": 0}) for c in foliation.components()])
        if at_infinity.is_zero():
            raise NonIsolated("the line at infinity is singular")
        if not at_infinity.is_constant():
            directions, rest = binary_form_roots(at_infinity, "x", "y")
            if not rest.is_constant():
                residual.append(rest)
            points.extend(ProjPoint.of(a, b, 0) for (a, b), _ in directions)
        logger.info(f"🔍 Found {len(points)} singular points ({len(residual)} unsplit factors)")
        return points, residual

    def singular_point_count(self, foliation: Foliation) -> int:
        """Points over the field plus the conjugate points carried by each unsplit factor.

        An unsplit factor in x is counted with one point above each of its roots.
        """
        points, residual = self.singular_points(foliation)
        return len(points) + sum(squarefree_part(f).total_degree() for f in residual)

    # Local charts

    def _chart(self, foliation: Foliation, point: ProjPoint) -> Tuple[Dict[str, MPoly], MPoly, MPoly]:
        u, v = MPoly.var(UV, "u"), MPoly.var(UV, "v")
        one = MPoly.one(UV)
        p, q, r = foliation.components()
        if not point.z.is_zero():
            sub = {"x": u + point.x, "y": v + point.y, "z": one}
            first, second = p, q
        elif not point.y.is_zero():
            sub = {"x": u + point.x, "y": one, "z": v}
            first, second = p, r
        else:
            sub = {"x": one, "y": u, "z": v}
            first, second = q, r
        P_local = first.substitute(sub, ring=UV)
        Q_local = second.substitute(sub, ring=UV)
        return sub, P_local, Q_local

    def local_form(self, foliation: Foliation, point: ProjPoint) -> Tuple[MPoly, MPoly]:
        """(P, Q) of the local form P du + Q dv with the point at the origin"""
        _, P_local, Q_local = self._chart(foliation, point)
        if not (P_local.constant_term().is_zero() and Q_local.constant_term().is_zero()):
            raise NotSingular(f"{point} is not a singular point")
        return P_local, Q_local

    def _linear_part(self, foliation: Foliation, point: ProjPoint) -> Tuple[Tuple[FieldElem, FieldElem], Tuple[FieldElem, FieldElem]]:
        """Jacobian at the origin of the local vector field X = (-Q, P)"""
        P_local, Q_local = self.local_form(foliation, point)
        a, b = P_local.coefficient((1, 0)), P_local.coefficient((0, 1))
        c, e = Q_local.coefficient((1, 0)), Q_local.coefficient((0, 1))
        return ((-c, -e), (a, b))

    # Local invariants

    def nu(self, foliation: Foliation, point: ProjPoint) -> int:
        P_local, Q_local = self.local_form(foliation, point)
        orders = [o for o in (_order(P_local), _order(Q_local)) if o is not None]
        return min(orders)

    def tau(self, foliation: Foliation, point: ProjPoint) -> int:
        """Smallest k >= nu whose jet is not radial"""
        P_local, Q_local = self.local_form(foliation, point)
        u, v = MPoly.var(UV, "u"), MPoly.var(UV, "v")
        nu = self.nu(foliation, point)
        contraction = u * P_local + v * Q_local
        degrees = [k - 1 for k in contraction.homogeneous_components() if k - 1 >= nu]
        if not degrees:
            raise Degenerate(f"the foliation is radial to every order at {point}")
        return min(degrees)

    def radial_order(self, foliation: Foliation, point: ProjPoint) -> int:
        if self.nu(foliation, point) != 1:
            return 0
        tau = self.tau(foliation, point)
        return tau - 1 if tau >= 2 else 0

    def is_nondegenerate(self, foliation: Foliation, point: ProjPoint) -> bool:
        (j11, j12), (j21, j22) = self._linear_part(foliation, point)
        return not (j11 * j22 - j12 * j21).is_zero()

    def baum_bott(self, foliation: Foliation, point: ProjPoint) -> FieldElem:
        (j11, j12), (j21, j22) = self._linear_part(foliation, point)
        det = j11 * j22 - j12 * j21
        if det.is_zero():
            raise Degenerate(f"{point} is a degenerate singular point")
        trace = j11 + j22
        return trace * trace / det

    def camacho_sad(self, foliation: Foliation, line: Line, point: ProjPoint) -> FieldElem:
        """(trace - lambda_L) / lambda_L with lambda_L the eigenvalue along the line"""
        if not self.is_invariant_line(foliation, line):
            raise NotInvariant(f"{line} is not invariant")
        if not line.contains(point):
            raise NotInvariant(f"{point} does not lie on {line}")
        sub, _, _ = self._chart(foliation, point)
        (j11, j12), (j21, j22) = self._linear_part(foliation, point)
        if (j11 * j22 - j12 * j21).is_zero():
            raise Degenerate(f"{point} is a degenerate singular point")
        local_line = line.form().substitute(sub, ring=UV)
        tangent = (-local_line.coefficient((0, 1)), local_line.coefficient((1, 0)))
        image = (j11 * tangent[0] + j12 * tangent[1], j21 * tangent[0] + j22 * tangent[1])
        if not tangent[0].is_zero():
            eigenvalue = image[0] / tangent[0]
        else:
            eigenvalue = image[1] / tangent[1]
        if image[0] != eigenvalue * tangent[0] or image[1] != eigenvalue * tangent[1]:
            raise NotInvariant(f"{line} is not an eigendirection at {point}")
        if eigenvalue.is_zero():
            raise Degenerate(f"vanishing eigenvalue along {line} at {point}")
        return (j11 + j22 - eigenvalue) / eigenvalue

    def milnor(self, foliation: Foliation, point: ProjPoint) -> int:
        """Intersection multiplicity at the origin via a certified resultant order"""
        P_local, Q_local = self.local_form(foliation, point)
        common = gcd(P_local, Q_local)
        if not common.is_constant() and common.constant_term().is_zero():
            raise NonIsolated(f"{point} is not an isolated singular point")
        u, v = MPoly.var(UV, "u"), MPoly.var(UV, "v")
        shears = (0,) + SHEARS[: self.shear_retries]
        for shear in shears:
            if shear:
                sub = {"u": u + v * shear, "v": v}
                P_try, Q_try = P_local.substitute(sub), Q_local.substitute(sub)
            else:
                P_try, Q_try = P_local, Q_local
            if self._milnor_certificate(P_try, Q_try):
                eliminant = resultant(P_try, Q_try, "v")
                if eliminant.is_zero():
                    raise NonIsolated(f"{point} is not an isolated singular point")
                return eliminant.min_degree("u")
            logger.debug(f"🔄 Milnor certificate failed at {point} with shear {shear}")
        raise GenericityFailure(f"no certified shear found at {point}")

    @staticmethod
    def _milnor_certificate(P_local: MPoly, Q_local: MPoly) -> bool:
        lead_ok = any(
            f.degree("v") > 0 and not f.leading_coefficient_in("v").constant_term().is_zero()
            for f in (P_local, Q_local)
        )
        if not lead_ok:
            return False
        on_axis = gcd(P_local.evaluate({"u": 0}), Q_local.evaluate({"u": 0}))
        if on_axis.is_zero():
            return False
        if on_axis.is_constant():
            return True
        v = MPoly.var(UV, "v")
        return on_axis == v ** on_axis.degree("v")

    # Lines

    @staticmethod
    def _spanning_points(line: Line) -> Tuple[Tuple[FieldElem, ...], Tuple[FieldElem, ...]]:
        a, b, c = line.a, line.b, line.c
        if not c.is_zero():
            return (c, ZERO, -a), (ZERO, c, -b)
        if not b.is_zero():
            return (b, -a, ZERO), (ZERO, -c, b)
        return (ZERO, ONE, ZERO), (ZERO, ZERO, ONE)

    def _restriction(self, foliation: Foliation, line: Line) -> Tuple[MPoly, Tuple, Tuple]:
        """Binary form h(s, t) with phi*omega = h (s dt - t ds) along phi = s P1 + t P2"""
        first, second = self._spanning_points(line)
        s, t = MPoly.var(ST, "s"), MPoly.var(ST, "t")
        image = {name: s * first[k] + t * second[k] for k, name in enumerate(XYZ.names)}
        values = [comp.substitute(image, ring=ST) for comp in foliation.components()]
        along_first = sum((values[k] * first[k] for k in range(3)), MPoly.zero(ST))
        return -along_first.exact_div(t), first, second

    def is_invariant_line(self, foliation: Foliation, line: Line) -> bool:
        form, _, _ = self._restriction(foliation, line)
        return form.is_zero()

    def tangency(self, foliation: Foliation, line: Line) -> Tuple[int, List[Tuple[ProjPoint, int]]]:
        form, first, second = self._restriction(foliation, line)
        if form.is_zero():
            raise InvariantLine(f"{line} is invariant")
        total = form.total_degree()
        if total <= 0:
            return 0, []
        directions, _ = binary_form_roots(form, "s", "t")
        per_point = []
        for (a, b), multiplicity in directions:
            coords = [first[k] * a + second[k] * b for k in range(3)]
            per_point.append((ProjPoint.of(*coords), multiplicity))
        return total, per_point

    # Inflection divisor

    def inflection_extactic(self, foliation: Foliation) -> MPoly:
        """Homogeneous equation of degree 3d of the inflection divisor"""
        if foliation.degree < 1:
            raise Degenerate("degree 0 foliations have no inflection divisor")
        affine = foliation.affine()
        X1, X2 = -affine.Q, affine.P

        def apply(f: MPoly) -> MPoly:
            return X1 * f.derivative("x") + X2 * f.derivative("y")

        extactic = X1 * apply(X2) - X2 * apply(X1)
        if extactic.is_zero():
            raise Degenerate("every leaf is a line")
        return extactic.change_ring(XYZ).homogenize("z", 3 * foliation.degree, over=("x", "y"))

    def inflection_split(self, foliation: Foliation) -> InflectionSplit:
        work = self.inflection_extactic(foliation)
        found: List[Tuple[MPoly, int]] = []
        for name in XYZ.names:
            power = work.min_degree(name)
            if power:
                variable = MPoly.var(XYZ, name)
                work = work.exact_div(variable ** power)
                found.append((variable, power))
        for candidate in self._candidate_lines(work):
            multiplicity = 0
            while work.total_degree() > 0 and candidate.divides(work):
                work = work.exact_div(candidate)
                multiplicity += 1
            if multiplicity:
                found.append((candidate, multiplicity))
        invariant: List[Tuple[Line, int]] = []
        transverse: List[Tuple[MPoly, int]] = []
        for form, multiplicity in found:
            line = Line.from_form(form)
            if self.is_invariant_line(foliation, line):
                invariant.append((line, multiplicity))
            else:
                transverse.append((line.form(), multiplicity))
        curves: List[Tuple[MPoly, int]] = []
        if work.total_degree() > 0:
            invariant_part, transverse_part = self._split_residual(foliation, work)
            curves.extend(invariant_part)
            transverse.extend(transverse_part)
        if curves:
            logger.info(f"🔍 {len(curves)} invariant component(s) of the inflection divisor do not split over the field")
        return InflectionSplit(invariant, transverse, curves)

    def _candidate_lines(self, form: MPoly) -> List[MPoly]:
        x, y, z = (MPoly.var(XYZ, n) for n in XYZ.names)
        if form.total_degree() <= 0:
            return []
        slopes = self._roots_or_empty(form.evaluate({"y": 1, "z": 0}))
        offsets = self._roots_or_empty(form.evaluate({"y": 0, "z": 1}))
        candidates: List[MPoly] = []
        for s in slopes:
            for t in offsets:
                if s.is_zero() and t.is_zero():
                    continue
                if form.substitute({"x": y * s + z * t}).is_zero():
                    candidates.append(x - y * s - z * t)
        for t in self._roots_or_empty(form.evaluate({"x": 0, "z": 1})):
            if not t.is_zero() and form.substitute({"y": z * t}).is_zero():
                candidates.append(y - z * t)
        return candidates

    @staticmethod
    def _roots_or_empty(f: MPoly) -> List[FieldElem]:
        if f.is_zero() or f.is_constant():
            return []
        roots, _ = find_field_roots(f)
        return [root for root, _ in roots]

    def _split_residual(self, foliation: Foliation,
                        residual: MPoly) -> Tuple[List[Tuple[MPoly, int]], List[Tuple[MPoly, int]]]:
        """Separate the unsplit residual (no factor z) into invariant and transverse parts with orders"""
        affine = foliation.affine()
        curve = residual.evaluate({"z": 1}).change_ring(XY)
        radical = _radical(curve)
        # a component h of the radical f is invariant iff h divides X(f)
        derived = -affine.Q * radical.derivative("x") + affine.P * radical.derivative("y")
        invariant_part = gcd(radical, derived)
        invariant, rest = _peel(curve, invariant_part)
        transverse, rest = _peel(rest, _radical(rest))
        if not rest.is_constant():
            raise IncompleteFactorization("part of the inflection divisor could not be classified")

        def projective(piece: MPoly) -> MPoly:
            return piece.change_ring(XYZ).homogenize("z", piece.total_degree(), over=("x", "y")).monic()

        return (
            [(projective(piece), order) for piece, order in invariant],
            [(projective(piece), order) for piece, order in transverse],
        )

    def invariant_lines(self, foliation: Foliation) -> List[Line]:
        return [line for line, _ in self.inflection_split(foliation).invariant]

    # Linear maps

    def pullback(self, foliation: Foliation, matrix: Matrix3) -> Foliation:
        """Saturated pullback of the defining form under v -> M v"""
        m = [[FieldElem.coerce(c) for c in row] for row in matrix]
        if _det3(m).is_zero():
            raise SingularMatrix("the linear map is not invertible")
        x, y, z = (MPoly.var(XYZ, n) for n in XYZ.names)
        image = {
            name: x * m[k][0] + y * m[k][1] + z * m[k][2]
            for k, name in enumerate(XYZ.names)
        }
        moved = [comp.substitute(image, ring=XYZ) for comp in foliation.components()]
        pulled = [
            sum((moved[k] * m[k][j] for k in range(3)), MPoly.zero(XYZ))
            for j in range(3)
        ]
        return self.saturate(*pulled)

    def same_foliation(self, first: Foliation, second: Foliation) -> bool:
        a, b = first.components(), second.components()
        return all((a[i] * b[j] - a[j] * b[i]).is_zero() for i, j in ((0, 1), (0, 2), (1, 2)))

    def is_isotropy(self, foliation: Foliation, matrix: Matrix3) -> bool:
        return self.same_foliation(self.pullback(foliation, matrix), foliation)

    # Reports

    def singularity_report(self, foliation: Foliation, point: ProjPoint,
                           lines: Sequence[Line] = ()) -> SingularityReport:
        nu = self.nu(foliation, point)
        tau = self.tau(foliation, point)
        try:
            milnor = self.milnor(foliation, point)
        except (GenericityFailure, NonIsolated) as e:
            logger.warning(f"⚠️ Milnor number unavailable at {point}: {e}")
            milnor = None
        nondegenerate = self.is_nondegenerate(foliation, point)
        baum_bott = self.baum_bott(foliation, point) if nondegenerate else None
        indices = []
        if nondegenerate:
            for line in lines:
                if line.contains(point):
                    indices.append((line, self.camacho_sad(foliation, line, point)))
        return SingularityReport(
            point=point,
            nu=nu,
            tau=tau,
            milnor=milnor,
            nondegenerate=nondegenerate,
            radial_order=tau - 1 if nu == 1 and tau >= 2 else 0,
            baum_bott=baum_bott,
            camacho_sad=indices,
        )

    def analyze(self, foliation: Foliation) -> Tuple[List[SingularityReport], Optional[InflectionSplit], List[MPoly]]:
        split = None
        if foliation.degree >= 1:
            try:
                split = self.inflection_split(foliation)
            except IncompleteFactorization as e:
                logger.warning(f"⚠️ {e}")
        lines = [line for line, _ in split.invariant] if split else []
        points, residual = self.singular_points(foliation)
        reports = [self.singularity_report(foliation, point, lines) for point in points]
        logger.info(f"✅ Analyzed degree {foliation.degree} foliation: {len(reports)} singular points, {len(lines)} invariant lines")
        return reports, split, residual
