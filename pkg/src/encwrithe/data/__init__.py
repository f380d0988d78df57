"""Bundled example curves and families.

The cubic model family (x, y, z) = (-t^2 - tau, -t^3 - tau*t, -t) realizes
the algebraic first Reidemeister move under the standard projection: one
crossing for tau < 0 turns into one solitary double point for tau > 0,
both with local writhe -1. The quartic wall family carries a genuine
discriminant crossing at tau = 0 (a real node), across which the invariant
jumps by 2.
"""

from __future__ import annotations

from pathlib import Path

from ..curves import Link, RationalSpaceCurve
from ..fileio import CurveFamily, parse_curve_file
from ..rationals import rat

_HERE = Path(__file__).parent

MODEL_FAMILY_PATH = _HERE / "model_family.jsonl"
WALL_QUARTIC_FAMILY_PATH = _HERE / "wall_quartic_family.jsonl"
MODEL_CROSSING_PATH = _HERE / "model_crossing.jsonl"
MODEL_SOLITARY_PATH = _HERE / "model_solitary.jsonl"
LINKED_CIRCLES_PATH = _HERE / "linked_circles.jsonl"


def model_curve(tau) -> RationalSpaceCurve:
    """The model cubic at deformation parameter tau."""
    tau = rat(tau)
    return RationalSpaceCurve(
        [-tau, 0, -1],
        [0, -tau, 0, -1],
        [0, -1],
        [1],
    )


def model_link(tau) -> Link:
    return Link([model_curve(tau)])


def model_family() -> CurveFamily:
    return parse_curve_file(MODEL_FAMILY_PATH)


def wall_quartic_family() -> CurveFamily:
    return parse_curve_file(WALL_QUARTIC_FAMILY_PATH)


def linked_circles() -> Link:
    return parse_curve_file(LINKED_CIRCLES_PATH)


def separated_circles(offset=10) -> Link:
    """Two unlinked circles, disjoint over the complex numbers.

    Parallel planes would NOT do: circles in parallel planes share the
    circular points on the common line at infinity. The second circle
    therefore lives in the perpendicular plane y = 0, centered far away on
    the x-axis.
    """
    offset = rat(offset)
    a = RationalSpaceCurve([1, 0, -1], [0, 2], [0], [1, 0, 1])
    b = RationalSpaceCurve(
        [offset + 1, 0, offset - 1], [0], [0, 2], [1, 0, 1]
    )
    return Link([a, b], orientations=[1, 1])
