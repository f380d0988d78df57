"""Local writhe signs, diagram assembly, and the encomplexed writhe.

Sign conventions are pinned once and validated by two absolute anchors
(the model cubic family at tau = -1 and tau = +1, both of which must come
out -1); everything else in the package is relative to these choices:

* Ambient orientation: the standard orientation of the affine chart W = 1
  with ordered basis along (x, y, z). Projection is along z.

* Crossing. Preimage parameters s0, t0 on the (normalized) curve(s), chart
  points a = P(s0), b = P(t0), chart velocities v at s0 and w at t0, chord
  l = b - a. The local writhe is sign det[v; l; w] (rows in that order).
  Computed on cleared numerators: with V = (X'W - XW', Y'W - YW', Z'W - ZW')
  the determinant scales by W(s0)^3 W(t0)^3, so the chart sign is
  sign det[V(s0); L; V(t0)] * sign(W(s0) W(t0)), where L is the chord
  numerator. For a same-component crossing the cleared determinant is
  symmetric under s <-> t, hence a polynomial in (e, f).

* Solitary point. Of the two conjugate imaginary preimages choose t_a with
  Im z(P(t_a)) > 0, which orients the real fiber line along +z. With
  u = (x', y')(t_a) the complex velocity of the projected branch, the local
  writhe is the sign of the 4x4 determinant with rows u, i*u, e_x, e_y
  written in coordinates (Re x, Im x, Re y, Im y). Choosing the conjugate
  preimage instead flips both the fiber orientation and the determinant,
  leaving the writhe unchanged.

All determinant signs are certified exact; the only algebraic extension
ever needed is one square root over the eliminant field.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .algnum import (
    ComplexSqrtElem,
    SqrtElem,
    SqrtExtension,
    det_ring,
)
from .bipoly import BiPoly
from .curves import Link, RationalSpaceCurve
from .elimination import TriangularRoot
from .errors import MissingOrientation, ZeroDeterminant
from .projection import (
    DoublePointLocus,
    ProjectionAnalysis,
    analyze_projection,
    sample_generic_center,
)
from .upoly import UPoly


# -- crossing determinant -------------------------------------------------------


def crossing_det_bipoly(
    curve_a: RationalSpaceCurve, curve_b: RationalSpaceCurve
) -> BiPoly:
    """Cleared chart determinant det[V_a(s); chord; V_b(t)] as a polynomial in
    (s, t); variable 0 is the parameter on curve_a, variable 1 on curve_b."""
    na = curve_a.derivative_numerators()
    nb = curve_b.derivative_numerators()
    rows = []
    rows.append([BiPoly.from_upoly(p, 0) for p in na])
    chord = []
    for pa, pb in zip(
        (curve_a.X, curve_a.Y, curve_a.Z), (curve_b.X, curve_b.Y, curve_b.Z)
    ):
        chord.append(
            BiPoly.from_upoly(pb, 1) * BiPoly.from_upoly(curve_a.W, 0)
            - BiPoly.from_upoly(pa, 0) * BiPoly.from_upoly(curve_b.W, 1)
        )
    rows.append(chord)
    rows.append([BiPoly.from_upoly(p, 1) for p in nb])
    return det_ring(rows)


def _chart_product_sign_same(curve: RationalSpaceCurve, root: TriangularRoot) -> int:
    ws = BiPoly.from_upoly(curve.W, 0)
    wt = BiPoly.from_upoly(curve.W, 1)
    product = (ws * wt).symmetric_in_ef()
    f0 = root.survivor
    modulus = None if f0.is_exact else f0.defining
    reduced = product.substitute_upoly(0, root.eliminated_poly, mod=modulus)
    return f0.sign_of_poly(reduced)


def crossing_sign_raw(
    curve: RationalSpaceCurve,
    root: TriangularRoot,
    other: Optional[RationalSpaceCurve] = None,
) -> int:
    """Local writhe of a crossing, before any orientation flags.

    Same-component when `other` is None (root lives in (e, f)); otherwise an
    inter-component crossing with root.survivor the parameter on `other` and
    root.eliminated_poly recovering the parameter on `curve`.
    """
    f0 = root.survivor
    modulus = None if f0.is_exact else f0.defining
    if other is None:
        det = crossing_det_bipoly(curve, curve).symmetric_in_ef()
        det_reduced = det.substitute_upoly(0, root.eliminated_poly, mod=modulus)
        det_sign = f0.sign_of_poly(det_reduced)
        chart_sign = _chart_product_sign_same(curve, root)
    else:
        det = crossing_det_bipoly(curve, other)
        det_reduced = det.substitute_upoly(0, root.eliminated_poly, mod=modulus)
        det_sign = f0.sign_of_poly(det_reduced)
        wa_at_s = _compose_mod(curve.W, root.eliminated_poly, modulus)
        chart = (wa_at_s * other.W) if modulus is None else (wa_at_s * other.W) % modulus
        chart_sign = f0.sign_of_poly(chart)
    if chart_sign == 0:
        raise ZeroDeterminant("crossing image lies outside the affine chart")
    if det_sign == 0:
        raise ZeroDeterminant("crossing frame is degenerate (non-transversal branches)")
    return det_sign * chart_sign


def _compose_mod(p: UPoly, inner: UPoly, modulus: Optional[UPoly]) -> UPoly:
    acc = UPoly.zero()
    for c in reversed(p.coeffs):
        acc = acc * inner + UPoly.const(c)
        if modulus is not None:
            acc = acc % modulus
    return acc


# -- solitary determinant ---------------------------------------------------------


def _eval_complex(p: UPoly, t: ComplexSqrtElem, ext: SqrtExtension) -> ComplexSqrtElem:
    acc = ComplexSqrtElem(ext.from_rational(0), ext.from_rational(0))
    for c in reversed(p.coeffs):
        acc = acc * t + ComplexSqrtElem(ext.from_rational(c), ext.from_rational(0))
    return acc


def solitary_sign_raw(
    curve: RationalSpaceCurve,
    root: TriangularRoot,
    use_other_branch: bool = False,
) -> int:
    """Local writhe of a solitary double point.

    With use_other_branch=True the conjugate preimage is selected and the
    fiber orientation flipped accordingly; the result is provably the same,
    and the flag exists so tests can exercise that invariance.
    """
    f0 = root.survivor
    e_poly = root.eliminated_poly
    delta = UPoly((0, 4)) - e_poly * e_poly  # 4f - e^2 > 0 at a solitary point
    ext = SqrtExtension(f0, delta)
    half_e = e_poly * Fraction(1, 2)

    candidates = []
    for chi in (1, -1):
        t_val = ComplexSqrtElem(
            ext.element(half_e, UPoly.zero()),
            ext.element(UPoly.zero(), UPoly.const(Fraction(chi, 2))),
        )
        z_val = _eval_complex(curve.Z, t_val, ext)
        w_val = _eval_complex(curve.W, t_val, ext)
        # Im(z/w) has the sign of Im(Z * conj(W)) on the chart
        im_part = z_val.im * w_val.re - z_val.re * w_val.im
        candidates.append((chi, t_val, im_part))

    chosen = None
    for chi, t_val, im_part in candidates:
        s = im_part.sign()
        if s == 0:
            raise ZeroDeterminant(
                "solitary fiber is degenerate (z-coordinate not imaginary)"
            )
        if s > 0:
            chosen = (chi, t_val)
            break
    if chosen is None:
        raise ZeroDeterminant("no preimage with positive imaginary z-part")
    chi, t_val = chosen
    fiber_flip = 1
    if use_other_branch:
        chi, t_val, _ = candidates[0] if candidates[0][0] != chosen[0] else candidates[1]
        fiber_flip = -1

    nx, ny, _nz = curve.derivative_numerators()
    u1 = _eval_complex(nx, t_val, ext)
    u2 = _eval_complex(ny, t_val, ext)
    one = ext.from_rational(1)
    zero = ext.from_rational(0)
    rows = [
        [u1.re, u1.im, u2.re, u2.im],
        [-u1.im, u1.re, -u2.im, u2.re],
        [one, zero, zero, zero],
        [zero, zero, one, zero],
    ]
    det: SqrtElem = det_ring(rows)
    sigma = det.sign()
    if sigma == 0:
        raise ZeroDeterminant("solitary branch frame is degenerate")
    return sigma * fiber_flip


# -- diagrams and writhe ----------------------------------------------------------


@dataclass
class Diagram:
    """All classified, signed double points of one generic projection."""

    analysis: ProjectionAnalysis

    @property
    def loci(self) -> list[DoublePointLocus]:
        return self.analysis.loci

    @property
    def link(self) -> Link:
        return self.analysis.link

    @property
    def center(self) -> tuple:
        return self.analysis.center

    def same_component_loci(self) -> list[DoublePointLocus]:
        return [l for l in self.loci if l.is_same_component]

    def inter_component_loci(self) -> list[DoublePointLocus]:
        return [l for l in self.loci if not l.is_same_component]


def build_diagram(link: Link, center=None, seed: int = 0) -> Diagram:
    """Find, classify, and sign every double point of a generic projection.

    With center=None a deterministic generic center is sampled from `seed`.
    Raises the typed error of the first failing certificate flag otherwise.
    """
    if center is None:
        center = sample_generic_center(link, seed)
    analysis = analyze_projection(link, center)
    if not analysis.certificate.all_ok:
        raise analysis.certificate.first_failure_error()
    for locus in analysis.loci:
        if locus.raw_sign is None:
            raise ZeroDeterminant(f"unsigned locus: {locus.describe()}")
    return Diagram(analysis)


def writhe_unoriented(diagram: Diagram) -> int:
    """Sum of local writhes over solitary points and same-component crossings."""
    return sum(l.raw_sign for l in diagram.same_component_loci())


def _orientations(diagram: Diagram) -> tuple[int, ...]:
    flags = diagram.link.orientations
    if flags is None:
        raise MissingOrientation("link carries no orientation flags")
    return flags


def writhe_oriented(diagram: Diagram) -> int:
    """Sum over all double points, inter-component crossings included, using
    the link's orientation flags."""
    flags = _orientations(diagram)
    total = writhe_unoriented(diagram)
    for locus in diagram.inter_component_loci():
        total += locus.raw_sign * flags[locus.comp_i] * flags[locus.comp_j]
    return total


def linking_matrix(diagram: Diagram) -> list[list[Fraction]]:
    """Half the sum of oriented inter-component crossing signs, per pair."""
    flags = _orientations(diagram)
    n = diagram.link.n_components
    matrix = [[Fraction(0)] * n for _ in range(n)]
    for locus in diagram.inter_component_loci():
        value = Fraction(locus.raw_sign * flags[locus.comp_i] * flags[locus.comp_j], 2)
        matrix[locus.comp_i][locus.comp_j] += value
        matrix[locus.comp_j][locus.comp_i] += value
    return matrix


@dataclass
class WritheReport:
    """Headline numbers of one diagram plus the per-locus breakdown."""

    unoriented: int
    oriented: Optional[int]
    linking: Optional[list[list[Fraction]]]
    center: tuple
    loci: list[tuple[str, int]]
    counts: list[int]

    def linking_total(self) -> Optional[Fraction]:
        if self.linking is None:
            return None
        n = len(self.linking)
        return sum(
            (self.linking[i][j] for i in range(n) for j in range(i + 1, n)),
            Fraction(0),
        )


def writhe_report(link: Link, center=None, seed: int = 0) -> WritheReport:
    diagram = build_diagram(link, center=center, seed=seed)
    oriented = None
    linking = None
    if link.orientations is not None:
        oriented = writhe_oriented(diagram)
        linking = linking_matrix(diagram)
    return WritheReport(
        unoriented=writhe_unoriented(diagram),
        oriented=oriented,
        linking=linking,
        center=diagram.center,
        loci=[(l.describe(), l.raw_sign) for l in diagram.loci],
        counts=diagram.analysis.complex_double_point_counts,
    )
