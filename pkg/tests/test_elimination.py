"""Triangular system solving: roots, counting certificate, degeneracies."""

from fractions import Fraction

import pytest

from encwrithe.bipoly import BiPoly
from encwrithe.elimination import (
    cross_double_point_system,
    solve_system,
    symmetric_double_point_system,
)
from encwrithe.errors import DegenerateElimination
from encwrithe.upoly import UPoly


def bp(terms) -> BiPoly:
    return BiPoly(terms)


class TestSolveSystem:
    def test_simple_intersection(self):
        # e - f = 0, e + f - 2 = 0 -> (e, f) = (1, 1)
        system = [bp({(1, 0): 1, (0, 1): -1}), bp({(1, 0): 1, (0, 1): 1, (0, 0): -2})]
        solution = solve_system(system, eliminate=0)
        assert len(solution.roots) == 1
        root = solution.roots[0]
        assert root.survivor.is_exact and root.survivor.exact_value == 1
        assert root.eliminated_poly(Fraction(1)) == 1

    def test_extraneous_roots_filtered_by_verification(self):
        # e^2 - f = 0 and e*f - 1 = 0 have one real solution (1, 1) when f = 1;
        # adding e - f keeps only points on the diagonal
        system = [
            bp({(2, 0): 1, (0, 1): -1}),
            bp({(1, 1): 1, (0, 0): -1}),
            bp({(1, 0): 1, (0, 1): -1}),
        ]
        solution = solve_system(system, eliminate=0, strict=False)
        assert len(solution.roots) == 1
        assert solution.roots[0].survivor.exact_value == 1

    def test_pair_of_survivor_only_polys_uses_gcd(self):
        # (f - 2) and (f - 2)(f + 1) share the root 2; e pinned by the third
        system = [
            bp({(0, 1): 1, (0, 0): -2}),
            bp({(0, 2): 1, (0, 1): -1, (0, 0): -2}),
            bp({(1, 0): 1, (0, 0): -5}),
        ]
        solution = solve_system(system, eliminate=0)
        assert len(solution.roots) == 1
        root = solution.roots[0]
        assert root.survivor.exact_value == 2
        assert root.eliminated_poly(Fraction(2)) == 5

    def test_inconsistent_constants_empty(self):
        system = [bp({(0, 1): 1, (0, 0): -2}), bp({(0, 1): 1, (0, 0): 2}), bp({(1, 0): 1})]
        solution = solve_system(system, eliminate=0)
        assert solution.roots == []

    def test_positive_dimensional_rejected(self):
        with pytest.raises(DegenerateElimination):
            solve_system([bp({(1, 0): 1, (0, 1): -1})], eliminate=0)

    def test_all_zero_rejected(self):
        with pytest.raises(DegenerateElimination):
            solve_system([BiPoly.zero()], eliminate=0)

    def test_proportional_pair_rejected(self):
        p = bp({(1, 0): 1, (0, 1): -1})
        with pytest.raises(DegenerateElimination):
            solve_system([p, 2 * p], eliminate=0)


class TestSystemBuilders:
    def test_symmetric_system_is_in_ef(self):
        # twisted cubic triple (t, t^2, 1): double point system must be empty
        coords = [UPoly([0, 1]), UPoly([0, 0, 1]), UPoly([1])]
        system = symmetric_double_point_system(coords)
        solution = solve_system(system, eliminate=0)
        assert solution.roots == []
        assert solution.multiplicity_count == 0

    def test_cross_system_detects_shared_point(self):
        # lines (t, 0, 1) and (0, t, 1) meet at the origin: s = 0, t = 0
        a = [UPoly([0, 1]), UPoly([0]), UPoly([1])]
        b = [UPoly([0]), UPoly([0, 1]), UPoly([1])]
        system = cross_double_point_system(a, b)
        solution = solve_system(system, eliminate=0)
        assert len(solution.roots) == 1
        root = solution.roots[0]
        assert root.survivor.exact_value == 0
        assert root.eliminated_poly(Fraction(0)) == 0
