"""Projection analysis: double-point systems, classification, genericity."""

from fractions import Fraction

import pytest

from encwrithe.algnum import AlgebraicNumber
from encwrithe.curves import Link, RationalSpaceCurve, sample_random_curve
from encwrithe.data import linked_circles, model_curve, model_link
from encwrithe.errors import CenterOnCurve, DegenerateElimination
from encwrithe.projection import (
    CANONICAL_CENTER,
    LocusKind,
    ProjectionCenter,
    analyze_projection,
    genericity_check,
    normalize_center,
    sample_generic_center,
)


def exact_pair(locus) -> tuple[Fraction, Fraction]:
    assert locus.e.is_exact and locus.f.is_exact
    return locus.e.exact_value, locus.f.exact_value


class TestModelSystem:
    def test_crossing_locus(self):
        analysis = analyze_projection(model_link(-1), CANONICAL_CENTER)
        assert len(analysis.loci) == 1
        locus = analysis.loci[0]
        assert locus.kind is LocusKind.CROSSING
        assert exact_pair(locus) == (0, -1)

    def test_solitary_locus(self):
        analysis = analyze_projection(model_link(1), CANONICAL_CENTER)
        assert len(analysis.loci) == 1
        locus = analysis.loci[0]
        assert locus.kind is LocusKind.SOLITARY
        assert exact_pair(locus) == (0, 1)

    def test_conic_empty(self):
        circle = RationalSpaceCurve([1, 0, -1], [0, 2], [0], [1, 0, 1])
        analysis = analyze_projection(Link([circle]), CANONICAL_CENTER)
        assert analysis.loci == []
        assert analysis.complex_double_point_counts == [0]

    def test_model_certificate_all_true(self):
        analysis = analyze_projection(model_link(-1), CANONICAL_CENTER)
        cert = analysis.certificate
        assert cert.all_ok
        assert cert.simple_roots and cert.no_triple_points
        assert cert.no_tangential_pairs and cert.transversal_crossings
        assert cert.no_infinity_parameters and cert.center_off_curve
        assert cert.center_off_singular_lines


class TestComplexCounts:
    @pytest.mark.parametrize(
        "degree,expected", [(3, 1), (4, 3), (5, 6)]
    )
    def test_count_with_multiplicity(self, degree, expected):
        curve = sample_random_curve(degree, seed=11)
        link = Link([curve])
        center = sample_generic_center(link, seed=2)
        analysis = analyze_projection(link, center)
        assert analysis.complex_double_point_counts == [expected]

    def test_real_loci_partition(self):
        curve = sample_random_curve(4, seed=5)
        link = Link([curve])
        analysis = analyze_projection(link, sample_generic_center(link, seed=1))
        for locus in analysis.loci:
            assert locus.kind in (LocusKind.CROSSING, LocusKind.SOLITARY)


class TestGenericityFailures:
    def test_tangent_line_center_fails_tangential_flag(self):
        # center on the tangent line at t = 1/2 projects along the tangent,
        # producing an image cusp: e^2 - 4f = 0 at the diagonal solution
        curve = model_curve(-1)
        t0 = Fraction(1, 2)
        point = curve.evaluate(t0)
        velocity = tuple(p.derivative()(t0) for p in curve.coords)
        center = tuple(p + v for p, v in zip(point, velocity))
        cert = genericity_check(Link([curve]), center)
        assert not cert.all_ok
        assert not cert.no_tangential_pairs

    def test_chord_center_is_still_generic(self):
        # the chord through P(-1), P(1) of the model curve is the z-axis: any
        # center on it identifies the same pair the standard projection does,
        # and the projection stays perfectly generic
        cert = genericity_check(model_link(-1), (0, 0, 1, 2))
        assert cert.all_ok

    def test_doubly_covered_image_degenerates(self):
        # circle in the y = 0 plane projects 2:1 onto a segment along z
        circle = RationalSpaceCurve([2], [0], [0, 2], [1, 0, 1])
        with pytest.raises(DegenerateElimination):
            analyze_projection(Link([circle]), CANONICAL_CENTER)

    def test_model_zero_standard_projection_cusped(self):
        cert = genericity_check(model_link(0), CANONICAL_CENTER)
        assert not cert.all_ok
        assert not cert.no_tangential_pairs


class TestNormalizeCenter:
    def test_canonical_center_gives_identity(self):
        link = model_link(-1)
        nlink, transform = normalize_center(link, CANONICAL_CENTER)
        assert transform.det == 1
        assert nlink.components[0] == link.components[0]

    def test_transform_moves_center_and_preserves_orientation(self):
        link = model_link(-1)
        center = (1, -2, 3, 5)
        _nlink, transform = normalize_center(link, center)
        image = transform.apply_point(center)
        assert image[0] == 0 and image[1] == 0 and image[3] == 0
        assert image[2] != 0
        assert transform.det > 0

    def test_center_on_curve_rejected(self):
        curve = model_curve(-1)
        with pytest.raises(CenterOnCurve):
            normalize_center(Link([curve]), curve.evaluate(2))

    def test_writhe_agrees_after_normalizing_noncanonical_center(self):
        # downstream check that normalization itself does not move the answer
        from encwrithe.writhe import build_diagram, writhe_unoriented

        link = model_link(-1)
        for center in [(0, 0, 1, 1), (1, 1, 5, 2)]:
            if genericity_check(link, center).all_ok:
                assert writhe_unoriented(build_diagram(link, center)) == -1


class TestInterComponent:
    def test_linked_circles_loci(self):
        link = linked_circles()
        center = sample_generic_center(link, seed=3)
        analysis = analyze_projection(link, center)
        inter = [l for l in analysis.loci if l.kind is LocusKind.INTER_COMPONENT]
        assert inter, "linked circles must cross in any generic projection"
        for locus in inter:
            # both parameters real algebraic with certified intervals
            assert isinstance(locus.s, AlgebraicNumber)
            assert isinstance(locus.t, AlgebraicNumber)

    def test_pair_count_bezout(self):
        link = linked_circles()
        center = sample_generic_center(link, seed=3)
        analysis = analyze_projection(link, center)
        # conic images meet in exactly 2*2 complex points
        # (the pair eliminant degree is certified during analysis; recompute)
        from encwrithe.elimination import cross_double_point_system, solve_system
        from encwrithe.projection import projected_triple

        nlink = analysis.link
        system = cross_double_point_system(
            projected_triple(nlink.components[0]),
            projected_triple(nlink.components[1]),
        )
        solution = solve_system(system, eliminate=0, strict=True)
        assert solution.multiplicity_count == 4


class TestMoebiusCommutation:
    def test_reparametrization_commutes_with_double_points(self):
        # an orientation-preserving parameter change moves the (e, f) roots
        # but fixes the image points, the classification, and the writhe
        from encwrithe.curves import MoebiusReparam, reparametrize
        from encwrithe.writhe import build_diagram, writhe_unoriented

        curve = sample_random_curve(4, seed=5)
        moved = reparametrize(curve, MoebiusReparam.of(1, -1, 1, 1))
        link_a, link_b = Link([curve]), Link([moved])
        center = sample_generic_center(link_a, seed=1)
        assert genericity_check(link_b, center).all_ok
        da = analyze_projection(link_a, center)
        db = analyze_projection(link_b, center)
        assert len(da.loci) == len(db.loci)
        for la, lb in zip(da.loci, db.loci):
            assert la.kind is lb.kind
        images_a = sorted(
            (float(l.image_x), float(l.image_y)) for l in da.loci
        )
        images_b = sorted(
            (float(l.image_x), float(l.image_y)) for l in db.loci
        )
        for (xa, ya), (xb, yb) in zip(images_a, images_b):
            assert abs(xa - xb) < 1e-6 and abs(ya - yb) < 1e-6
        wa = writhe_unoriented(build_diagram(link_a, center))
        wb = writhe_unoriented(build_diagram(link_b, center))
        assert wa == wb


class TestSpecOpWrappers:
    def test_double_point_system_counts(self):
        from encwrithe.projection import double_point_system
        from encwrithe.data import model_curve

        solution = double_point_system(model_curve(-1))
        assert solution.multiplicity_count == 1
        assert len(solution.roots) == 1

    def test_classify_double_points(self):
        from encwrithe.projection import classify_double_points
        from encwrithe.data import model_link

        loci = classify_double_points(model_link(1), CANONICAL_CENTER)
        assert [l.kind for l in loci] == [LocusKind.SOLITARY]


class TestCenterSampling:
    def test_deterministic(self):
        link = model_link(-1)
        a = sample_generic_center(link, seed=9)
        b = sample_generic_center(link, seed=9)
        assert a.coords == b.coords

    def test_certificate_passes(self):
        link = model_link(-1)
        center = sample_generic_center(link, seed=0)
        assert genericity_check(link, center).all_ok

    def test_line_first_sample_trivially_generic(self):
        line = Link([RationalSpaceCurve([0, 1], [0], [0], [1])])
        center = sample_generic_center(line, seed=0)
        analysis = analyze_projection(line, center)
        assert analysis.loci == []
