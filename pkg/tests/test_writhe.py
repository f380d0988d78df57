"""Local writhe signs and the encomplexed writhe.

The two sign computations of the model family are the absolute anchors of
every convention in the package: tau = -1 must give one crossing of local
writhe -1 (the 3x3 frame determinant is -16 rho^4 < 0 there), tau = +1 one
solitary point of local writhe -1 (the 4x4 intersection determinant is
-4 rho^3 < 0 and the writhe is opposite to the standard intersection
value). Everything else is tested relative to these.
"""

from fractions import Fraction

import pytest

from encwrithe.curves import Link, ProjectiveTransform, RationalSpaceCurve, sample_random_curve
from encwrithe.data import linked_circles, model_curve, model_link, separated_circles
from encwrithe.errors import MissingOrientation
from encwrithe.projection import (
    CANONICAL_CENTER,
    LocusKind,
    analyze_projection,
    sample_generic_center,
)
from encwrithe.writhe import (
    build_diagram,
    crossing_det_bipoly,
    linking_matrix,
    solitary_sign_raw,
    writhe_oriented,
    writhe_report,
    writhe_unoriented,
)

MIRROR_Z = ProjectiveTransform.of(
    [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, -1, 0], [0, 0, 0, 1]]
)


class TestGoldenAnchors:
    def test_crossing_sign_is_minus_one(self):
        diagram = build_diagram(model_link(-1), CANONICAL_CENTER)
        assert [l.kind for l in diagram.loci] == [LocusKind.CROSSING]
        assert [l.raw_sign for l in diagram.loci] == [-1]
        assert writhe_unoriented(diagram) == -1

    def test_solitary_sign_is_minus_one(self):
        diagram = build_diagram(model_link(1), CANONICAL_CENTER)
        assert [l.kind for l in diagram.loci] == [LocusKind.SOLITARY]
        assert [l.raw_sign for l in diagram.loci] == [-1]
        assert writhe_unoriented(diagram) == -1

    def test_first_move_preserves_writhe(self):
        values = {
            tau: writhe_unoriented(build_diagram(model_link(Fraction(tau)), CANONICAL_CENTER))
            for tau in ("-2", "-1", "-1/2", "1/2", "1", "2")
        }
        assert set(values.values()) == {-1}


class TestMirror:
    @pytest.mark.parametrize("tau", [-1, 1])
    def test_mirror_negates_each_local_sign(self, tau):
        link = model_link(tau)
        mirrored = link.transformed(MIRROR_Z)
        base = analyze_projection(link, CANONICAL_CENTER)
        flipped = analyze_projection(mirrored, CANONICAL_CENTER)
        assert len(base.loci) == len(flipped.loci) == 1
        # the mirror fixes the projection geometry: matched loci, negated sign
        assert base.loci[0].e.equals(flipped.loci[0].e)
        assert base.loci[0].f.equals(flipped.loci[0].f)
        assert base.loci[0].raw_sign == -flipped.loci[0].raw_sign

    def test_mirror_negates_writhe_of_sample(self):
        curve = sample_random_curve(4, seed=11)
        link = Link([curve])
        base = writhe_unoriented(build_diagram(link, seed=0))
        mirrored = writhe_unoriented(build_diagram(link.transformed(MIRROR_Z), seed=1))
        assert mirrored == -base

    def test_mirror_matched_loci_negate(self):
        # projecting the mirrored link from the mirrored center reproduces the
        # same (e, f) loci with every sign negated, solitary points included
        curve = sample_random_curve(4, seed=11)
        link = Link([curve])
        center = sample_generic_center(link, seed=2)
        base = analyze_projection(link, center)
        flipped = analyze_projection(
            link.transformed(MIRROR_Z), MIRROR_Z.apply_point(center.coords)
        )
        assert len(base.loci) == len(flipped.loci) == 3
        assert any(l.kind is LocusKind.SOLITARY for l in base.loci)
        for la, lb in zip(base.loci, flipped.loci):
            assert la.kind is lb.kind
            assert la.e.equals(lb.e) and la.f.equals(lb.f)
            assert la.raw_sign == -lb.raw_sign


class TestChoiceIndependence:
    def test_preimage_order_swap_same_component(self):
        # swapping the roles of the two preimages transposes the determinant
        # construction; symbolically the cleared determinant is symmetric
        curve = model_curve(-1)
        det = crossing_det_bipoly(curve, curve)
        assert det.swap_vars() == det

    def test_preimage_order_swap_inter_component(self):
        link = linked_circles()
        a, b = link.components
        assert crossing_det_bipoly(a, b) == crossing_det_bipoly(b, a).swap_vars()

    def test_conjugate_branch_toggle(self):
        analysis = analyze_projection(model_link(1), CANONICAL_CENTER)
        locus = analysis.loci[0]
        curve = analysis.link.components[0]
        assert solitary_sign_raw(curve, locus.root) == solitary_sign_raw(
            curve, locus.root, use_other_branch=True
        )

    def test_single_component_orientation_flip(self):
        link = model_link(-1)
        up = writhe_oriented(build_diagram(link.with_orientations([1]), CANONICAL_CENTER))
        down = writhe_oriented(build_diagram(link.with_orientations([-1]), CANONICAL_CENTER))
        assert up == down == -1


class TestOrientedWrithe:
    def test_single_component_oriented_equals_unoriented(self):
        link = model_link(-1).with_orientations([1])
        diagram = build_diagram(link, CANONICAL_CENTER)
        assert writhe_oriented(diagram) == writhe_unoriented(diagram)

    def test_missing_orientation_raises(self):
        diagram = build_diagram(model_link(-1), CANONICAL_CENTER)
        with pytest.raises(MissingOrientation):
            writhe_oriented(diagram)

    def test_linked_circles_identity_and_linking(self):
        link = linked_circles()
        diagram = build_diagram(link, seed=3)
        un = writhe_unoriented(diagram)
        orient = writhe_oriented(diagram)
        lk = linking_matrix(diagram)
        assert lk[0][0] == 0 and lk[1][1] == 0
        assert lk[0][1] == lk[1][0]
        assert abs(lk[0][1]) == 1  # linked once
        assert lk[0][1].denominator == 1  # integer linking number
        assert orient == un + 2 * lk[0][1]

    def test_separated_circles_unlinked(self):
        link = separated_circles()
        diagram = build_diagram(link, seed=2)
        lk = linking_matrix(diagram)
        assert lk[0][1] == 0
        assert writhe_oriented(diagram) == writhe_unoriented(diagram)

    def test_single_flip_negates_linking_fixes_unoriented(self):
        link = linked_circles()
        flipped = link.with_orientations([1, -1])
        d1 = build_diagram(link, seed=3)
        d2 = build_diagram(flipped, seed=3)
        assert writhe_unoriented(d1) == writhe_unoriented(d2)
        assert linking_matrix(d1)[0][1] == -linking_matrix(d2)[0][1]

    def test_global_flip_invariance(self):
        link = linked_circles()
        flipped = link.with_orientations([-1, -1])
        d1 = build_diagram(link, seed=3)
        d2 = build_diagram(flipped, seed=3)
        assert writhe_oriented(d1) == writhe_oriented(d2)
        assert linking_matrix(d1) == linking_matrix(d2)


class TestReport:
    def test_report_fields(self):
        report = writhe_report(linked_circles(), seed=3)
        assert report.unoriented == report.oriented - 2 * report.linking_total()
        assert len(report.loci) >= 1
        assert report.counts == [0, 0]

    def test_two_unlinked_conics_writhe_zero(self):
        report = writhe_report(separated_circles(), seed=1)
        assert report.unoriented == 0
        assert report.oriented == 0
