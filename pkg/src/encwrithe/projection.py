"""Projection of a link from a rational center and exact double-point analysis.

The canonical frame: an orientation-preserving projective transform moves
the center to (0 : 0 : 1 : 0), after which projecting is coordinate
deletion, (X : Y : Z : W) -> (X : Y : W), with the fiber direction along z.

Same-component double points are solved in the symmetric coordinates
(e, f) = (s + t, s * t): real solutions with e^2 - 4f > 0 are crossings
(two real preimages), with e^2 - 4f < 0 solitary points (conjugate
imaginary preimages); e^2 - 4f = 0 is a genericity failure. Double points
between distinct components are solved directly in the parameter pair.

Every certificate flag is decided exactly. The certificate may be
conservative: it can reject a workable center, never accept a bad one.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Optional

from .algnum import AlgebraicNumber, algebraic_value
from .bipoly import BiPoly
from .curves import (
    Link,
    MoebiusReparam,
    ProjectiveTransform,
    RationalSpaceCurve,
)
from .elimination import (
    SystemSolution,
    TriangularRoot,
    cross_double_point_system,
    solve_system,
    symmetric_double_point_system,
)
from .errors import (
    CenterOnCurve,
    CenterOnSingularLine,
    DegenerateElimination,
    InvalidInput,
    NonGenericProjection,
    SamplingExhausted,
    TangentialPair,
    TriplePoint,
    ZeroDeterminant,
)
from .rationals import rat
from .upoly import UPoly, poly_gcd

CANONICAL_CENTER = (Fraction(0), Fraction(0), Fraction(1), Fraction(0))

# deterministic parameter changes used to move double points away from the
# parameter value t = infinity; all have positive determinant
_INFINITY_MOEBIUS = (
    (0, -1, 1, 0),
    (1, -1, 1, 1),
    (1, 1, 1, 2),
    (2, -1, 1, 1),
    (1, -2, 1, 2),
    (3, 1, 1, 1),
    (1, 1, 2, 3),
    (2, 3, 1, 2),
)


@dataclass(frozen=True)
class ProjectionCenter:
    coords: tuple[Fraction, Fraction, Fraction, Fraction]

    @staticmethod
    def of(*coords) -> "ProjectionCenter":
        if len(coords) == 1 and isinstance(coords[0], (tuple, list)):
            coords = tuple(coords[0])
        vals = tuple(rat(c) for c in coords)
        if len(vals) != 4 or all(v == 0 for v in vals):
            raise InvalidInput("center must be a nonzero 4-tuple")
        return ProjectionCenter(vals)

    def is_canonical(self) -> bool:
        return _proportional(self.coords, CANONICAL_CENTER)


def _proportional(a, b) -> bool:
    n = len(a)
    return all(
        a[i] * b[j] - a[j] * b[i] == 0 for i in range(n) for j in range(i + 1, n)
    )


def center_on_component(curve: RationalSpaceCurve, center) -> bool:
    """Exact test: does the projective point `center` lie on the curve?"""
    c = [rat(v) for v in center]
    if _proportional(curve.leading_vector(), c):
        return True
    g = None
    for i in range(4):
        for j in range(i + 1, 4):
            m = curve.coords[i] * c[j] - curve.coords[j] * c[i]
            if m.is_zero:
                continue
            g = m if g is None else poly_gcd(g, m)
            if g.degree == 0:
                return False
    # on a validated curve a nonconstant gcd always certifies a hit
    return True


def normalize_center(link: Link, center) -> tuple[Link, ProjectiveTransform]:
    """Move `center` to (0:0:1:0) by an orientation-preserving transform.

    Returns the transformed link and the transform used. Raises
    CenterOnCurve when the center lies on a component.
    """
    center = center.coords if isinstance(center, ProjectionCenter) else tuple(center)
    c = [rat(v) for v in center]
    for component in link.components:
        if center_on_component(component, c):
            raise CenterOnCurve(f"projection center {center} lies on the link")
    pivot = next(i for i in range(4) if c[i] != 0)
    basis = [i for i in range(4) if i != pivot]
    # columns: standard basis vectors around c placed as the third column
    columns = []
    inserted = False
    slots = []
    for position in range(4):
        if position == 2:
            slots.append("c")
        else:
            slots.append(basis.pop(0))
    matrix = [[Fraction(0)] * 4 for _ in range(4)]
    for col, slot in enumerate(slots):
        if slot == "c":
            for row in range(4):
                matrix[row][col] = c[row]
        else:
            matrix[slot][col] = Fraction(1)
    m = ProjectiveTransform.of(matrix)
    if m.det < 0:
        # swap the first two non-center columns to restore orientation
        for row in range(4):
            matrix[row][0], matrix[row][1] = matrix[row][1], matrix[row][0]
        m = ProjectiveTransform.of(matrix)
    transform = m.inverse()
    return link.transformed(transform), transform


# -- loci -----------------------------------------------------------------------


class LocusKind(Enum):
    CROSSING = "crossing"
    SOLITARY = "solitary"
    INTER_COMPONENT = "inter-component"


@dataclass
class DoublePointLocus:
    """A classified double point of the projection.

    Same-component loci carry the symmetric coordinates (e, f) of the
    preimage parameter pair; inter-component loci carry the parameter pair
    (s on component i, t on component j) directly, with s recovered as a
    polynomial in t.
    """

    comp_i: int
    comp_j: int
    kind: LocusKind
    root: TriangularRoot
    e: Optional[AlgebraicNumber] = None
    f: Optional[AlgebraicNumber] = None
    s: Optional[AlgebraicNumber] = None
    t: Optional[AlgebraicNumber] = None
    image_x: Optional[AlgebraicNumber] = None
    image_y: Optional[AlgebraicNumber] = None
    raw_sign: Optional[int] = None

    @property
    def is_same_component(self) -> bool:
        return self.kind is not LocusKind.INTER_COMPONENT

    def describe(self) -> str:
        if self.is_same_component:
            return (
                f"{self.kind.value} on component {self.comp_i}: "
                f"e in {self.e.interval()!r}, f in {self.f.interval()!r}"
            )
        return (
            f"{self.kind.value} between components {self.comp_i} and {self.comp_j}: "
            f"s in {self.s.interval()!r}, t in {self.t.interval()!r}"
        )


@dataclass
class GenericityCertificate:
    """Seven exact flags; the projection is usable iff all are true."""

    simple_roots: bool = True
    no_triple_points: bool = True
    no_tangential_pairs: bool = True
    transversal_crossings: bool = True
    no_infinity_parameters: bool = True
    center_off_curve: bool = True
    center_off_singular_lines: bool = True
    notes: list[str] = field(default_factory=list)

    @property
    def all_ok(self) -> bool:
        return (
            self.simple_roots
            and self.no_triple_points
            and self.no_tangential_pairs
            and self.transversal_crossings
            and self.no_infinity_parameters
            and self.center_off_curve
            and self.center_off_singular_lines
        )

    def first_failure_error(self) -> Exception:
        if not self.center_off_curve:
            return CenterOnCurve("; ".join(self.notes))
        if not self.center_off_singular_lines:
            return CenterOnSingularLine("; ".join(self.notes))
        if not self.no_tangential_pairs:
            return TangentialPair("; ".join(self.notes))
        if not self.no_triple_points:
            return TriplePoint("; ".join(self.notes))
        if not self.transversal_crossings:
            return ZeroDeterminant("; ".join(self.notes))
        return NonGenericProjection("; ".join(self.notes) or "non-generic projection")


@dataclass
class ProjectionAnalysis:
    """Everything the writhe needs about one projection, exactly computed."""

    link: Link  # normalized, possibly reparametrized componentwise
    transform: ProjectiveTransform
    center: tuple
    certificate: GenericityCertificate
    loci: list[DoublePointLocus]
    component_solutions: list[SystemSolution]
    expected_counts: list[int]

    @property
    def complex_double_point_counts(self) -> list[int]:
        """Complex double points (with multiplicity) per component, from the
        certified eliminant degree."""
        return [s.multiplicity_count for s in self.component_solutions]


def projected_triple(curve: RationalSpaceCurve) -> list[UPoly]:
    """Coordinates of the canonical projection: drop Z."""
    return [curve.X, curve.Y, curve.W]


def _projected_lead(curve: RationalSpaceCurve) -> list[Fraction]:
    lead = curve.leading_vector()
    return [lead[0], lead[1], lead[3]]


def _infinity_involved(curve: RationalSpaceCurve, other: RationalSpaceCurve | None = None) -> bool:
    """Does a double point of the (pair) projection involve parameter infinity?

    Checks whether any finite parameter of `other` (or of `curve` itself)
    maps to the image of curve's point at parameter infinity, or whether the
    two infinity images coincide.
    """
    lead = _projected_lead(curve)
    target = other if other is not None else curve
    triple = projected_triple(target)
    g = None
    for i in range(3):
        for j in range(i + 1, 3):
            m = triple[i] * lead[j] - triple[j] * lead[i]
            if m.is_zero:
                continue
            g = m if g is None else poly_gcd(g, m)
            if g.degree == 0:
                break
        if g is not None and g.degree == 0:
            break
    if g is None or g.degree > 0:
        # some finite parameter (possibly complex) maps to the image of the
        # point at parameter infinity
        return True
    if other is not None and _proportional(_projected_lead(curve), _projected_lead(other)):
        return True
    return False


def _resolve_infinity(link: Link) -> tuple[Link, list[str]]:
    """Reparametrize components until no double point involves t = infinity."""
    notes: list[str] = []
    components = list(link.components)
    for attempt in range(len(_INFINITY_MOEBIUS) + 1):
        offender = None
        n = len(components)
        for i in range(n):
            if _infinity_involved(components[i]):
                offender = i
                break
            for j in range(n):
                if j != i and _infinity_involved(components[i], components[j]):
                    offender = i
                    break
            if offender is not None:
                break
        if offender is None:
            return Link(components, link.orientations), notes
        if attempt == len(_INFINITY_MOEBIUS):
            break
        a, b, c, d = _INFINITY_MOEBIUS[attempt]
        moebius = MoebiusReparam.of(a, b, c, d)
        components[offender] = components[offender].reparametrized(moebius)
        notes.append(
            f"component {offender} reparametrized by t -> ({a}t+{b})/({c}t+{d})"
        )
    raise NonGenericProjection(
        "could not move double points away from parameter infinity"
    )


def _expected_count(degree: int) -> int:
    return (degree - 1) * (degree - 2) // 2


def analyze_projection(link: Link, center) -> ProjectionAnalysis:
    """Normalize, solve all double-point systems, classify, and certify."""
    report = link.validation()
    report.raise_for_failure()
    certificate = GenericityCertificate()

    try:
        nlink, transform = normalize_center(link, center)
    except CenterOnCurve as exc:
        certificate.center_off_curve = False
        certificate.notes.append(str(exc))
        raise

    try:
        nlink, infinity_notes = _resolve_infinity(nlink)
    except NonGenericProjection as exc:
        certificate.no_infinity_parameters = False
        certificate.notes.append(str(exc))
        raise
    certificate.notes.extend(infinity_notes)

    loci: list[DoublePointLocus] = []
    component_solutions: list[SystemSolution] = []
    expected_counts: list[int] = []

    for idx, component in enumerate(nlink.components):
        triple = projected_triple(component)
        system = symmetric_double_point_system(triple)
        expected = _expected_count(component.degree)
        expected_counts.append(expected)
        try:
            solution = solve_system(system, eliminate=0, strict=True)
        except DegenerateElimination as exc:
            certificate.simple_roots = False
            certificate.notes.append(f"component {idx}: {exc}")
            raise
        component_solutions.append(solution)
        if solution.multiplicity_count != expected or not solution.is_simple:
            certificate.simple_roots = False
            certificate.notes.append(
                f"component {idx}: eliminant degree {solution.multiplicity_count} "
                f"(expected {expected}, square-free: {solution.is_simple})"
            )
        for root in solution.roots:
            locus = _classify_same_component(idx, component, root, certificate)
            loci.append(locus)

    n = nlink.n_components
    for i in range(n):
        for j in range(i + 1, n):
            pair_loci = _solve_inter_component(
                i, j, nlink.components[i], nlink.components[j], certificate
            )
            loci.extend(pair_loci)

    _fill_images(nlink, loci, certificate)
    _check_triple_points(loci, certificate)
    _check_transversality(nlink, loci, certificate)
    _singular_line_flag(link, loci, certificate)

    loci.sort(key=_locus_sort_key)
    center_tuple = (
        center.coords
        if isinstance(center, ProjectionCenter)
        else tuple(rat(v) for v in center)
    )
    return ProjectionAnalysis(
        link=nlink,
        transform=transform,
        center=center_tuple,
        certificate=certificate,
        loci=loci,
        component_solutions=component_solutions,
        expected_counts=expected_counts,
    )


def _classify_same_component(
    idx: int,
    component: RationalSpaceCurve,
    root: TriangularRoot,
    certificate: GenericityCertificate,
) -> DoublePointLocus:
    f0 = root.survivor
    e_poly = root.eliminated_poly
    disc = e_poly * e_poly - UPoly((0, 4))  # e^2 - 4f as a polynomial in f
    disc_sign = f0.sign_of_poly(disc)
    if disc_sign == 0:
        certificate.no_tangential_pairs = False
        certificate.notes.append(
            f"component {idx}: tangential pair (e^2 = 4f) at f in {f0.interval()!r}"
        )
        kind = LocusKind.CROSSING  # placeholder; certificate already failed
    else:
        kind = LocusKind.CROSSING if disc_sign > 0 else LocusKind.SOLITARY
    if e_poly.degree < 1:
        e_num = AlgebraicNumber.from_rational(e_poly[0])
    else:
        e_num = algebraic_value(f0, e_poly, UPoly.const(1))
    return DoublePointLocus(
        comp_i=idx,
        comp_j=idx,
        kind=kind,
        root=root,
        e=e_num,
        f=f0,
    )


def _solve_inter_component(
    i: int,
    j: int,
    comp_i: RationalSpaceCurve,
    comp_j: RationalSpaceCurve,
    certificate: GenericityCertificate,
) -> list[DoublePointLocus]:
    system = cross_double_point_system(projected_triple(comp_i), projected_triple(comp_j))
    try:
        solution = solve_system(system, eliminate=0, strict=True)
    except DegenerateElimination as exc:
        certificate.simple_roots = False
        certificate.notes.append(f"components {i},{j}: {exc}")
        raise
    expected = comp_i.degree * comp_j.degree
    if solution.multiplicity_count != expected or not solution.is_simple:
        certificate.simple_roots = False
        certificate.notes.append(
            f"components {i},{j}: pair eliminant degree {solution.multiplicity_count} "
            f"(expected {expected}, square-free: {solution.is_simple})"
        )
    out = []
    for root in solution.roots:
        t0 = root.survivor
        if root.eliminated_poly.degree < 1:
            s_num = AlgebraicNumber.from_rational(root.eliminated_poly[0])
        else:
            s_num = algebraic_value(t0, root.eliminated_poly, UPoly.const(1))
        out.append(
            DoublePointLocus(
                comp_i=i,
                comp_j=j,
                kind=LocusKind.INTER_COMPONENT,
                root=root,
                s=s_num,
                t=t0,
            )
        )
    return out


def _image_fractions(
    component: RationalSpaceCurve, root: TriangularRoot, same_component: bool
) -> Optional[tuple[UPoly, UPoly, UPoly]]:
    """(num_x, num_y, den) as polynomials in the survivor coordinate."""
    f0 = root.survivor
    modulus = None if f0.is_exact else f0.defining
    X, Y, W = component.X, component.Y, component.W
    if same_component:
        xs = BiPoly.from_upoly(X, 0)
        xt = BiPoly.from_upoly(X, 1)
        ys = BiPoly.from_upoly(Y, 0)
        yt = BiPoly.from_upoly(Y, 1)
        ws = BiPoly.from_upoly(W, 0)
        wt = BiPoly.from_upoly(W, 1)
        num_x = (xs * wt + xt * ws).symmetric_in_ef()
        num_y = (ys * wt + yt * ws).symmetric_in_ef()
        den = (2 * ws * wt).symmetric_in_ef()
        e_poly = root.eliminated_poly
        return (
            num_x.substitute_upoly(0, e_poly, mod=modulus),
            num_y.substitute_upoly(0, e_poly, mod=modulus),
            den.substitute_upoly(0, e_poly, mod=modulus),
        )
    s_poly = root.eliminated_poly
    def at_s(p: UPoly) -> UPoly:
        acc = UPoly.zero()
        for c in reversed(p.coeffs):
            acc = acc * s_poly + UPoly.const(c)
            if modulus is not None:
                acc = acc % modulus
        return acc
    return at_s(X), at_s(Y), at_s(W)


def _fill_images(
    link: Link, loci: list[DoublePointLocus], certificate: GenericityCertificate
) -> None:
    for locus in loci:
        component = link.components[locus.comp_i]
        fractions = _image_fractions(component, locus.root, locus.is_same_component)
        num_x, num_y, den = fractions
        f0 = locus.root.survivor
        if f0.sign_of_poly(den) == 0:
            certificate.transversal_crossings = False
            certificate.notes.append(
                f"{locus.describe()}: image lies outside the affine chart"
            )
            continue
        locus.image_x = algebraic_value(f0, num_x, den)
        locus.image_y = algebraic_value(f0, num_y, den)


def _check_triple_points(
    loci: list[DoublePointLocus], certificate: GenericityCertificate
) -> None:
    usable = [l for l in loci if l.image_x is not None]
    for a_idx in range(len(usable)):
        for b_idx in range(a_idx + 1, len(usable)):
            a, b = usable[a_idx], usable[b_idx]
            if a.image_x.separate_from(b.image_x, 12):
                continue
            if a.image_y.separate_from(b.image_y, 12):
                continue
            if a.image_x.equals(b.image_x) and a.image_y.equals(b.image_y):
                certificate.no_triple_points = False
                certificate.notes.append(
                    f"coincident images: [{a.describe()}] and [{b.describe()}]"
                )


def _check_transversality(
    link: Link, loci: list[DoublePointLocus], certificate: GenericityCertificate
) -> None:
    # local imports: the writhe module owns the pinned frame conventions
    from .writhe import crossing_sign_raw, solitary_sign_raw

    for locus in loci:
        try:
            if locus.kind is LocusKind.CROSSING:
                locus.raw_sign = crossing_sign_raw(
                    link.components[locus.comp_i], locus.root
                )
            elif locus.kind is LocusKind.SOLITARY:
                locus.raw_sign = solitary_sign_raw(
                    link.components[locus.comp_i], locus.root
                )
            else:
                locus.raw_sign = crossing_sign_raw(
                    link.components[locus.comp_i],
                    locus.root,
                    other=link.components[locus.comp_j],
                )
        except ZeroDeterminant as exc:
            certificate.transversal_crossings = False
            certificate.notes.append(f"{locus.describe()}: {exc}")


def _singular_line_flag(
    link: Link, loci: list[DoublePointLocus], certificate: GenericityCertificate
) -> None:
    """Exclusion of centers on real lines through conjugate imaginary singular
    points: with imaginary space singularities present, a bad center makes two
    solitary loci share an image, which the triple-point scan has already
    looked for. Without them the flag holds vacuously."""
    candidates = sum(
        r.imaginary_singular_candidates for r in link.validation().component_reports
    )
    if candidates == 0:
        certificate.center_off_singular_lines = True
        return
    certificate.center_off_singular_lines = certificate.no_triple_points
    if not certificate.no_triple_points:
        certificate.notes.append(
            "imaginary space singularities present and solitary images collide"
        )


def _locus_sort_key(locus: DoublePointLocus):
    primary = (locus.comp_i, locus.comp_j, locus.kind.value)
    anchor = locus.f if locus.is_same_component else locus.t
    secondary = locus.e if locus.is_same_component else locus.s
    return primary + (anchor.lo, anchor.hi, secondary.lo, secondary.hi)


def double_point_system(curve: RationalSpaceCurve) -> SystemSolution:
    """Solve the same-parametrization double-point system of the canonical
    projection of a single curve (already in the normalized frame)."""
    system = symmetric_double_point_system(projected_triple(curve))
    return solve_system(system, eliminate=0, strict=True)


def classify_double_points(link: Link, center) -> list[DoublePointLocus]:
    """All classified double points of the projection from `center`."""
    return analyze_projection(link, center).loci


def genericity_check(link: Link, center) -> GenericityCertificate:
    """Run the full analysis and return the certificate (never raises for
    flag failures, only for broken preconditions)."""
    try:
        return analyze_projection(link, center).certificate
    except (CenterOnCurve,) as exc:
        cert = GenericityCertificate()
        cert.center_off_curve = False
        cert.notes.append(str(exc))
        return cert
    except NonGenericProjection as exc:
        cert = GenericityCertificate()
        cert.no_infinity_parameters = False
        cert.notes.append(str(exc))
        return cert
    except DegenerateElimination as exc:
        cert = GenericityCertificate()
        cert.simple_roots = False
        cert.notes.append(str(exc))
        return cert


def sample_generic_center(link: Link, seed: int = 0, budget: int = 240) -> ProjectionCenter:
    """Deterministic-given-seed rational center passing the full certificate."""
    rng = random.Random(f"center-{seed}-{link.n_components}")
    bound = 3
    tries_at_bound = 0
    for _ in range(budget):
        coords = tuple(rng.randint(-bound, bound) for _ in range(4))
        tries_at_bound += 1
        if tries_at_bound >= 40:
            bound *= 2
            tries_at_bound = 0
        if all(v == 0 for v in coords):
            continue
        center = ProjectionCenter.of(coords)
        try:
            analysis = analyze_projection(link, center)
        except (NonGenericProjection, DegenerateElimination, CenterOnCurve):
            continue
        if analysis.certificate.all_ok:
            return center
    raise SamplingExhausted(f"no generic center found in {budget} draws (seed {seed})")
