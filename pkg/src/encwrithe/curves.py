"""Real rational space curves and links in projective 3-space.

A curve is a quadruple (X, Y, Z, W) of univariate rational polynomials,
implicitly homogenized to the common degree d = max coordinate degree. The
projective curve, not any affine chart, is the object of interest: the
quadruple is normalized at construction by a common positive scalar to
primitive integer coefficients, which changes nothing projectively.

Validation certifies the structural invariants exactly: reduced
parametrization, immersion (including the point at parameter infinity),
birationality onto the image, and absence of real double points of the
space curve. Imaginary double points are allowed and reported.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .algnum import AlgebraicNumber, algebraic_value, det_ring
from .elimination import solve_system, symmetric_double_point_system
from .errors import (
    ComponentsIntersect,
    CuspDetected,
    DegenerateElimination,
    InvalidInput,
    RealSingularityDetected,
    ReducibleParametrization,
    SamplingExhausted,
    SingularMatrix,
)
from .rationals import QI, rat, sign
from .upoly import UPoly, poly_gcd


class _ParameterInfinity:
    def __repr__(self):
        return "INFINITY"


INFINITY = _ParameterInfinity()


class RationalSpaceCurve:
    """One link component: (X, Y, Z, W) with rational coefficients."""

    __slots__ = ("X", "Y", "Z", "W", "degree")

    def __init__(self, X, Y, Z, W):
        coords = [p if isinstance(p, UPoly) else UPoly(p) for p in (X, Y, Z, W)]
        if all(p.is_zero for p in coords):
            raise InvalidInput("the zero quadruple is not a curve")
        degree = max(p.degree for p in coords)
        if degree < 1:
            raise InvalidInput("constant quadruple does not parametrize a curve")
        coords = _common_integer_scaling(coords)
        self.X, self.Y, self.Z, self.W = coords
        self.degree = degree

    @property
    def coords(self) -> tuple[UPoly, UPoly, UPoly, UPoly]:
        return (self.X, self.Y, self.Z, self.W)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalSpaceCurve):
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        return f"RationalSpaceCurve(degree={self.degree})"

    def coefficient_vector(self, k: int) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return tuple(p[k] for p in self.coords)

    def leading_vector(self) -> tuple[Fraction, ...]:
        """The point at parameter infinity of the degree-d homogenization."""
        return self.coefficient_vector(self.degree)

    def subleading_vector(self) -> tuple[Fraction, ...]:
        return self.coefficient_vector(self.degree - 1)

    def evaluate(self, t):
        """Exact projective point P(t); t may be rational, Gaussian rational,
        an AlgebraicNumber, or INFINITY."""
        if t is INFINITY:
            return self.leading_vector()
        if isinstance(t, AlgebraicNumber):
            if t.is_exact:
                t = t.exact_value
            else:
                one = UPoly.const(1)
                return tuple(algebraic_value(t, p, one) for p in self.coords)
        if isinstance(t, QI):
            if t.im == 0:
                t = t.re
            else:
                return tuple(p(t) for p in self.coords)
        t = rat(t)
        return tuple(p(t) for p in self.coords)

    def derivative_numerators(self) -> tuple[UPoly, UPoly, UPoly]:
        """Numerators of the affine-chart velocity: (X'W - XW', Y'W - YW', Z'W - ZW')."""
        dW = self.W.derivative()
        return tuple(
            p.derivative() * self.W - p * dW for p in (self.X, self.Y, self.Z)
        )

    def tangent(self, t):
        """Derivative of the affine-chart parametrization at t, as (vx, vy, vz, 0)."""
        if t is INFINITY:
            raise InvalidInput("tangent at parameter infinity is not chart-defined")
        nums = self.derivative_numerators()
        if isinstance(t, QI) and t.im != 0:
            w = self.W(t)
            if w.is_zero():
                raise InvalidInput("curve point lies outside the affine chart")
            w2 = w * w
            return tuple(n(t) / w2 for n in nums) + (QI.of(0),)
        t = rat(t)
        w = self.W(t)
        if w == 0:
            raise InvalidInput("curve point lies outside the affine chart")
        w2 = w * w
        return tuple(n(t) / w2 for n in nums) + (Fraction(0),)

    def reparametrized(self, moebius: "MoebiusReparam") -> "RationalSpaceCurve":
        return moebius.apply(self)

    def transformed(self, transform: "ProjectiveTransform") -> "RationalSpaceCurve":
        return transform.apply(self)


def _common_integer_scaling(coords: list[UPoly]) -> list[UPoly]:
    den = 1
    for p in coords:
        for c in p.coeffs:
            den = den * c.denominator // math.gcd(den, c.denominator)
    num_gcd = 0
    for p in coords:
        for c in p.coeffs:
            num_gcd = math.gcd(num_gcd, int(c * den))
    scale = Fraction(den, num_gcd if num_gcd else 1)
    return [p * scale for p in coords]


@dataclass(frozen=True)
class MoebiusReparam:
    """Parameter change t -> (a*t + b) / (c*t + d), acting homogeneously."""

    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction

    @staticmethod
    def of(a, b, c, d) -> "MoebiusReparam":
        m = MoebiusReparam(rat(a), rat(b), rat(c), rat(d))
        if m.det == 0:
            raise SingularMatrix("Moebius matrix is singular")
        return m

    @staticmethod
    def identity() -> "MoebiusReparam":
        return MoebiusReparam.of(1, 0, 0, 1)

    @property
    def det(self) -> Fraction:
        return self.a * self.d - self.b * self.c

    def apply(self, curve: RationalSpaceCurve) -> RationalSpaceCurve:
        """Substitute into the degree-d homogenization: the image point set in
        projective space is unchanged, only the parametrization moves."""
        if self.det == 0:
            raise SingularMatrix("Moebius matrix is singular")
        d = curve.degree
        num = UPoly((self.b, self.a))  # a*t + b
        den = UPoly((self.d, self.c))  # c*t + d
        out = []
        for p in curve.coords:
            # homogeneous substitution: sum_k c_k num^k den^(d-k)
            acc = UPoly.zero()
            for k in range(d + 1):
                c = p[k]
                if c:
                    acc = acc + c * num**k * den ** (d - k)
            out.append(acc)
        return RationalSpaceCurve(*out)

    def map_parameter(self, t):
        if t is INFINITY:
            if self.c == 0:
                return INFINITY
            return self.a / self.c
        t = rat(t)
        den = self.c * t + self.d
        if den == 0:
            return INFINITY
        return (self.a * t + self.b) / den


@dataclass(frozen=True)
class ProjectiveTransform:
    """Invertible 4x4 rational matrix acting on coordinate quadruples."""

    rows: tuple[tuple[Fraction, ...], ...]

    @staticmethod
    def of(rows) -> "ProjectiveTransform":
        mat = tuple(tuple(rat(v) for v in row) for row in rows)
        if len(mat) != 4 or any(len(r) != 4 for r in mat):
            raise InvalidInput("transform must be 4x4")
        t = ProjectiveTransform(mat)
        if t.det == 0:
            raise SingularMatrix("projective transform is singular")
        return t

    @staticmethod
    def identity() -> "ProjectiveTransform":
        return ProjectiveTransform.of(
            [[1 if i == j else 0 for j in range(4)] for i in range(4)]
        )

    @property
    def det(self) -> Fraction:
        return det_ring([list(r) for r in self.rows])

    @property
    def orientation_class(self) -> int:
        """+1 for orientation-preserving, -1 for mirrors; well defined because
        rescaling the matrix changes the determinant by a fourth power."""
        return sign(self.det)

    def apply(self, curve: RationalSpaceCurve) -> RationalSpaceCurve:
        new_coords = []
        for row in self.rows:
            acc = UPoly.zero()
            for entry, p in zip(row, curve.coords):
                if entry:
                    acc = acc + p * entry
            new_coords.append(acc)
        return RationalSpaceCurve(*new_coords)

    def apply_point(self, point: Sequence) -> tuple:
        return tuple(
            sum((rat(e) * rat(x) for e, x in zip(row, point)), Fraction(0))
            for row in self.rows
        )

    def inverse(self) -> "ProjectiveTransform":
        n = 4
        aug = [
            [Fraction(v) for v in row] + [Fraction(i == j) for j in range(n)]
            for i, row in enumerate(self.rows)
        ]
        for col in range(n):
            pivot = next(
                (r for r in range(col, n) if aug[r][col] != 0), None
            )
            if pivot is None:
                raise SingularMatrix("projective transform is singular")
            aug[col], aug[pivot] = aug[pivot], aug[col]
            inv = 1 / aug[col][col]
            aug[col] = [v * inv for v in aug[col]]
            for r in range(n):
                if r != col and aug[r][col]:
                    factor = aug[r][col]
                    aug[r] = [v - factor * w for v, w in zip(aug[r], aug[col])]
        return ProjectiveTransform.of([row[n:] for row in aug])


class Link:
    """A real algebraic link: components plus optional orientation flags.

    Orientation flag +1 means the component is traversed in the direction of
    increasing parameter, -1 the reverse.
    """

    def __init__(
        self,
        components: Sequence[RationalSpaceCurve],
        orientations: Optional[Sequence[int]] = None,
    ):
        if not components:
            raise InvalidInput("a link needs at least one component")
        self.components = tuple(components)
        if orientations is not None:
            orientations = tuple(int(o) for o in orientations)
            if len(orientations) != len(self.components):
                raise InvalidInput("one orientation flag per component required")
            if any(o not in (-1, 1) for o in orientations):
                raise InvalidInput("orientation flags must be +1 or -1")
        self.orientations = orientations
        self._validation: Optional[LinkValidationReport] = None

    @property
    def n_components(self) -> int:
        return len(self.components)

    def with_orientations(self, orientations: Sequence[int]) -> "Link":
        return Link(self.components, orientations)

    def transformed(self, transform: ProjectiveTransform) -> "Link":
        return Link(
            [transform.apply(c) for c in self.components], self.orientations
        )

    def validation(self) -> "LinkValidationReport":
        if self._validation is None:
            self._validation = validate_link(self)
        return self._validation


# -- validation ---------------------------------------------------------------


@dataclass
class CurveValidationReport:
    reduced: bool = True
    reduced_witness: Optional[UPoly] = None
    immersion: bool = True
    cusp_witness: Optional[str] = None
    birational: bool = True
    no_real_singularities: bool = True
    singular_witness: Optional[str] = None
    imaginary_singular_candidates: int = 0
    space_eliminant: Optional[UPoly] = None

    @property
    def valid(self) -> bool:
        return (
            self.reduced
            and self.immersion
            and self.birational
            and self.no_real_singularities
        )

    def raise_for_failure(self) -> None:
        if not self.reduced:
            raise ReducibleParametrization(
                f"common factor in the coordinate quadruple: {self.reduced_witness!r}"
            )
        if not self.immersion:
            raise CuspDetected(f"parametrization is not an immersion: {self.cusp_witness}")
        if not self.birational:
            raise ReducibleParametrization(
                "parametrization traverses its image more than once"
            )
        if not self.no_real_singularities:
            raise RealSingularityDetected(
                f"space curve has a real double point: {self.singular_witness}"
            )


def validate(curve: RationalSpaceCurve) -> CurveValidationReport:
    """Exact validation of the curve invariants."""
    report = CurveValidationReport()
    _check_reduced(curve, report)
    if not report.reduced:
        return report
    _check_immersion(curve, report)
    _check_space_double_points(curve, report)
    return report


def _check_reduced(curve: RationalSpaceCurve, report: CurveValidationReport) -> None:
    g = None
    for p in curve.coords:
        if p.is_zero:
            continue
        g = p if g is None else poly_gcd(g, p)
        if g.degree == 0:
            return
    if g is None or g.degree > 0:
        report.reduced = False
        report.reduced_witness = g


def _check_immersion(curve: RationalSpaceCurve, report: CurveValidationReport) -> None:
    coords = curve.coords
    derivs = [p.derivative() for p in coords]
    g = None
    for i in range(4):
        for j in range(i + 1, 4):
            m = coords[i] * derivs[j] - coords[j] * derivs[i]
            if m.is_zero:
                continue
            g = m if g is None else poly_gcd(g, m)
            if g.degree == 0:
                break
        if g is not None and g.degree == 0:
            break
    if g is None or g.degree > 0:
        report.immersion = False
        report.cusp_witness = f"affine cusp parameters: roots of {g!r}"
        return
    # at parameter infinity the velocity direction is the subleading
    # coefficient vector of the homogenization
    lead = curve.leading_vector()
    sub = curve.subleading_vector()
    rank2 = any(
        lead[i] * sub[j] - lead[j] * sub[i] != 0
        for i in range(4)
        for j in range(i + 1, 4)
    )
    if not rank2:
        report.immersion = False
        report.cusp_witness = "cusp at parameter infinity"


def _check_space_double_points(
    curve: RationalSpaceCurve, report: CurveValidationReport
) -> None:
    system = symmetric_double_point_system(list(curve.coords))
    try:
        solution = solve_system(system, eliminate=0, strict=False)
    except DegenerateElimination:
        report.birational = False
        return
    report.space_eliminant = solution.squarefree_eliminant
    real_count = len(solution.roots)
    if real_count:
        root = solution.roots[0]
        report.no_real_singularities = False
        report.singular_witness = (
            f"(e, f) solution with f in {root.survivor.interval()!r}"
        )
    report.imaginary_singular_candidates = solution.distinct_count - real_count
    # a double point with one branch at parameter infinity sits at the real
    # point P(infinity), so any coincidence there is a real singularity
    lead = list(curve.leading_vector())
    minors = []
    g = None
    for i in range(4):
        for j in range(i + 1, 4):
            m = curve.coords[i] * lead[j] - curve.coords[j] * lead[i]
            if m.is_zero:
                continue
            g = m if g is None else poly_gcd(g, m)
            if g.degree == 0:
                break
        if g is not None and g.degree == 0:
            break
    if g is None or g.degree > 0:
        report.no_real_singularities = False
        report.singular_witness = "double point through the point at parameter infinity"


@dataclass
class LinkValidationReport:
    component_reports: list[CurveValidationReport]
    disjoint: bool = True
    intersection_witness: Optional[str] = None

    @property
    def valid(self) -> bool:
        return self.disjoint and all(r.valid for r in self.component_reports)

    def raise_for_failure(self) -> None:
        for r in self.component_reports:
            r.raise_for_failure()
        if not self.disjoint:
            raise ComponentsIntersect(self.intersection_witness or "components intersect")


def validate_link(link: Link) -> LinkValidationReport:
    report = LinkValidationReport([validate(c) for c in link.components])
    if not all(r.valid for r in report.component_reports):
        return report
    n = link.n_components
    for i in range(n):
        for j in range(i + 1, n):
            witness = _intersection_witness(link.components[i], link.components[j])
            if witness is not None:
                report.disjoint = False
                report.intersection_witness = f"components {i} and {j}: {witness}"
                return report
    return report


def _intersection_witness(
    a: RationalSpaceCurve, b: RationalSpaceCurve
) -> Optional[str]:
    """None iff the complexifications are certifiably disjoint (including the
    parameter-infinity points); otherwise a description of the failure."""
    from .elimination import cross_double_point_system
    from .bipoly import resultant_bivariate

    system = [m for m in cross_double_point_system(list(a.coords), list(b.coords)) if not m.is_zero]
    if not system:
        return "coincidence system vanishes identically"
    if not any(m.is_constant for m in system):
        if len(system) < 2:
            return "coincidence system is not zero-dimensional"
        g = None
        for i in range(len(system)):
            if g is not None and g.degree == 0:
                break
            for j in range(i + 1, len(system)):
                r = resultant_bivariate(system[i], system[j], 0)
                if r.is_zero:
                    continue
                r = r.primitive()
                g = r if g is None else poly_gcd(g, r)
                if g.degree == 0:
                    break
        if g is None:
            return "all coincidence resultants vanish"
        if g.degree > 0:
            return f"nonconstant coincidence eliminant {g!r}"
    # parameter infinity of a against b, and vice versa, and both at infinity
    for lead, other in ((a.leading_vector(), b), (b.leading_vector(), a)):
        g = None
        for i in range(4):
            for j in range(i + 1, 4):
                m = other.coords[i] * lead[j] - other.coords[j] * lead[i]
                if m.is_zero:
                    continue
                g = m if g is None else poly_gcd(g, m)
                if g.degree == 0:
                    break
            if g is not None and g.degree == 0:
                break
        if g is None or g.degree > 0:
            return "coincidence at a parameter-infinity point"
    la, lb = a.leading_vector(), b.leading_vector()
    parallel = all(
        la[i] * lb[j] - la[j] * lb[i] == 0 for i in range(4) for j in range(i + 1, 4)
    )
    if parallel:
        return "both parameter-infinity points coincide"
    return None


def apply_transform(link: Link, transform: ProjectiveTransform) -> Link:
    """Transform every component; the caller reads transform.orientation_class
    to learn whether downstream writhe values flip."""
    return link.transformed(transform)


def reparametrize(curve: RationalSpaceCurve, moebius: MoebiusReparam) -> RationalSpaceCurve:
    """Change the parameter; the curve in projective space is unchanged."""
    return moebius.apply(curve)


# -- random sampling ------------------------------------------------------------


def sample_random_curve(
    degree: int,
    seed: int,
    coefficient_bound: int = 5,
    budget: int = 400,
) -> RationalSpaceCurve:
    """Deterministic random validated curve of exact degree `degree`."""
    if degree < 1:
        raise InvalidInput("degree must be at least 1")
    rng = random.Random(seed)
    for _ in range(budget):
        coords = [
            [rng.randint(-coefficient_bound, coefficient_bound) for _ in range(degree + 1)]
            for _ in range(4)
        ]
        if all(c[degree] == 0 for c in coords):
            continue
        if not any(any(c) for c in coords):
            continue
        try:
            curve = RationalSpaceCurve(*coords)
        except InvalidInput:
            continue
        if curve.degree != degree:
            continue
        if curve.W.is_zero:
            continue
        if validate(curve).valid:
            return curve
    raise SamplingExhausted(
        f"no valid degree-{degree} curve found in {budget} draws (seed {seed})"
    )
