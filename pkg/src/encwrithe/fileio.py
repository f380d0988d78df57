"""Line-oriented JSON curve files.

Line 1 is a header object; every following line is one component:

    {"kind": "link", "orientations": [1, -1]}
    {"x": [1, 0, -1], "y": [0, 1, 0, -1], "z": [0, -1], "w": [1]}

Rationals are serialized as "p/q" strings so exactness survives any
consumer. A family file declares a parameter and a grid, and coefficient
entries may be arithmetic expressions in the parameter:

    {"kind": "family", "parameter": "tau", "grid": ["-1", "0", "1"]}
    {"x": ["-tau", 0, -1], "y": [0, "-tau", 0, -1], "z": [0, -1], "w": [1]}
"""

from __future__ import annotations

import ast
import json
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Callable, Optional

from .curves import Link, RationalSpaceCurve
from .errors import InvalidInput, ParseError
from .rationals import rat, rat_str
from .upoly import UPoly

_COORD_KEYS = ("x", "y", "z", "w")


@dataclass
class CurveFamily:
    """One-parameter family of links with a rational evaluation grid."""

    parameter: str
    grid: list[Fraction]
    instantiate: Callable[[Fraction], Link]
    center: Optional[tuple] = None
    orientations: Optional[tuple] = None


def _eval_coeff_expr(text: str, parameter: str, value: Fraction) -> Fraction:
    """Safely evaluate an arithmetic coefficient expression at a parameter value."""
    try:
        tree = ast.parse(text, mode="eval")
    except SyntaxError as exc:
        raise ParseError(f"bad coefficient expression {text!r}: {exc}") from exc

    def walk(node):
        if isinstance(node, ast.Expression):
            return walk(node.body)
        if isinstance(node, ast.Constant):
            if isinstance(node.value, int):
                return Fraction(node.value)
            raise ParseError(f"non-integer literal in {text!r}")
        if isinstance(node, ast.Name):
            if node.id == parameter:
                return value
            raise ParseError(f"unknown symbol {node.id!r} in {text!r}")
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            v = walk(node.operand)
            return -v if isinstance(node.op, ast.USub) else v
        if isinstance(node, ast.BinOp) and isinstance(
            node.op, (ast.Add, ast.Sub, ast.Mult, ast.Div, ast.Pow)
        ):
            left, right = walk(node.left), walk(node.right)
            if isinstance(node.op, ast.Add):
                return left + right
            if isinstance(node.op, ast.Sub):
                return left - right
            if isinstance(node.op, ast.Mult):
                return left * right
            if isinstance(node.op, ast.Div):
                if right == 0:
                    raise ParseError(f"division by zero in {text!r}")
                return left / right
            exp = right
            if exp.denominator != 1 or exp < 0:
                raise ParseError(f"bad exponent in {text!r}")
            return left ** int(exp)
        raise ParseError(f"unsupported syntax in coefficient expression {text!r}")

    return walk(tree)


def _parse_coefficient(entry, parameter: Optional[str], value: Optional[Fraction], where: str) -> Fraction:
    if isinstance(entry, bool):
        raise ParseError(f"{where}: boolean is not a coefficient")
    if isinstance(entry, int):
        return Fraction(entry)
    if isinstance(entry, str):
        text = entry.strip()
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError):
            pass
        if parameter is None:
            raise ParseError(f"{where}: non-rational coefficient {entry!r} outside a family")
        return _eval_coeff_expr(text, parameter, value)
    if isinstance(entry, float):
        raise ParseError(f"{where}: floating point coefficient {entry!r}; use 'p/q' strings")
    raise ParseError(f"{where}: unreadable coefficient {entry!r}")


def _component_from_record(
    record: dict, index: int, parameter: Optional[str] = None, value: Optional[Fraction] = None
) -> RationalSpaceCurve:
    coords = []
    for key in _COORD_KEYS:
        if key not in record:
            raise ParseError(f"component {index}: missing coordinate {key!r}")
        entries = record[key]
        if not isinstance(entries, list) or not entries:
            raise ParseError(f"component {index}: coordinate {key!r} must be a nonempty list")
        coords.append(
            [
                _parse_coefficient(entry, parameter, value, f"component {index}, {key}[{pos}]")
                for pos, entry in enumerate(entries)
            ]
        )
    x, y, z, w = (UPoly(c) for c in coords)
    if x.is_zero and y.is_zero and z.is_zero and w.is_zero:
        raise ParseError(f"component {index}: zero quadruple")
    if w.is_zero:
        raise ParseError(
            f"component {index}: w is identically zero (curve lies in the plane at infinity)"
        )
    try:
        return RationalSpaceCurve(x, y, z, w)
    except InvalidInput as exc:
        raise ParseError(f"component {index}: {exc}") from exc


def parse_curve_file(path) -> Link | CurveFamily:
    """Parse a link or family file; validation is left to the caller."""
    path = Path(path)
    try:
        lines = path.read_text().splitlines()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    records = []
    for lineno, line in enumerate(lines, 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            records.append((lineno, json.loads(line)))
        except json.JSONDecodeError as exc:
            raise ParseError(f"{path}:{lineno}: invalid JSON: {exc}") from exc
    if not records:
        raise ParseError(f"{path}: empty file")
    _, header = records[0]
    if not isinstance(header, dict) or "kind" not in header:
        raise ParseError(f"{path}:1: first line must be a header object with 'kind'")
    body = records[1:]
    if not body:
        raise ParseError(f"{path}: no components")
    orientations = header.get("orientations")
    if orientations is not None:
        if not isinstance(orientations, list) or any(o not in (1, -1) for o in orientations):
            raise ParseError(f"{path}: orientations must be a list of +1/-1")
        orientations = tuple(orientations)

    if header["kind"] == "link":
        components = [
            _component_from_record(rec, idx) for idx, (_, rec) in enumerate(body)
        ]
        try:
            return Link(components, orientations)
        except InvalidInput as exc:
            raise ParseError(f"{path}: {exc}") from exc

    if header["kind"] == "family":
        parameter = header.get("parameter")
        if not isinstance(parameter, str) or not parameter.isidentifier():
            raise ParseError(f"{path}: family needs a 'parameter' identifier")
        raw_grid = header.get("grid")
        if not isinstance(raw_grid, list) or not raw_grid:
            raise ParseError(f"{path}: family needs a nonempty 'grid'")
        try:
            grid = [rat(v) for v in raw_grid]
        except (InvalidInput, ValueError) as exc:
            raise ParseError(f"{path}: bad grid entry: {exc}") from exc
        center = header.get("center")
        if center is not None:
            center = tuple(rat(v) for v in center)
        body_records = [rec for _, rec in body]

        def instantiate(tau: Fraction) -> Link:
            components = [
                _component_from_record(rec, idx, parameter, rat(tau))
                for idx, rec in enumerate(body_records)
            ]
            return Link(components, orientations)

        return CurveFamily(
            parameter=parameter,
            grid=grid,
            instantiate=instantiate,
            center=center,
            orientations=orientations,
        )

    raise ParseError(f"{path}: unknown kind {header['kind']!r}")


def link_to_lines(link: Link) -> list[str]:
    header: dict = {"kind": "link"}
    if link.orientations is not None:
        header["orientations"] = list(link.orientations)
    lines = [json.dumps(header)]
    for component in link.components:
        record = {
            key: [_coeff_json(c) for c in poly.coeffs] or [0]
            for key, poly in zip(_COORD_KEYS, component.coords)
        }
        lines.append(json.dumps(record))
    return lines


def _coeff_json(c: Fraction):
    if c.denominator == 1:
        return int(c)
    return rat_str(c)


def write_link_file(link: Link, path) -> None:
    Path(path).write_text("\n".join(link_to_lines(link)) + "\n")
