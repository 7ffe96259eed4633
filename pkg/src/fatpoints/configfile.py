"""JSON config files and the built-in named configurations.

A config file looks like::

    {"points": [{"x": ["1", "0"], "y": ["1", "1/2"], "m": 1}, ...]}

Coordinates are decimal integers or ``"p/q"`` rationals given as strings so
that no precision is lost.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from pathlib import Path

from .geometry import FatPointConfig, affine_config, grid_config, make_config, normalize_point

_RATIONAL = re.compile(r"^\s*[+-]?\d+(\s*/\s*\d+)?\s*$")


class ConfigFileError(ValueError):
    """A config document failed to parse; the message names the offending field."""


def format_scalar(x) -> str:
    return str(Fraction(x))


def parse_scalar(text, where: str) -> Fraction:
    if isinstance(text, bool) or not isinstance(text, (str, int)):
        raise ConfigFileError(f"{where}: expected a string like \"3\" or \"-2/5\", got {text!r}")
    if isinstance(text, str) and not _RATIONAL.match(text):
        raise ConfigFileError(f"{where}: not an integer or p/q rational: {text!r}")
    try:
        return Fraction(text.replace(" ", "") if isinstance(text, str) else text)
    except ZeroDivisionError:
        raise ConfigFileError(f"{where}: zero denominator in {text!r}") from None


def config_to_dict(Z: FatPointConfig) -> dict:
    return {
        "points": [
            {
                "x": [format_scalar(P.x.u), format_scalar(P.x.v)],
                "y": [format_scalar(P.y.u), format_scalar(P.y.v)],
                "m": m,
            }
            for P, m in Z
        ]
    }


def config_from_dict(doc) -> FatPointConfig:
    if not isinstance(doc, dict) or "points" not in doc:
        raise ConfigFileError("top level: expected an object with a 'points' list")
    pts = doc["points"]
    if not isinstance(pts, list):
        raise ConfigFileError("points: expected a list")
    points, mults = [], []
    for i, entry in enumerate(pts):
        where = f"points[{i}]"
        if not isinstance(entry, dict):
            raise ConfigFileError(f"{where}: expected an object with x, y, m")
        coords = []
        for key in ("x", "y"):
            pair = entry.get(key)
            if not isinstance(pair, list) or len(pair) != 2:
                raise ConfigFileError(f"{where}.{key}: expected a list of two strings")
            coords.append(tuple(parse_scalar(t, f"{where}.{key}[{k}]") for k, t in enumerate(pair)))
        m = entry.get("m", 1)
        if isinstance(m, bool) or not isinstance(m, int) or m < 1:
            raise ConfigFileError(f"{where}.m: expected a positive integer, got {m!r}")
        try:
            points.append(normalize_point(*coords))
        except ValueError as exc:
            raise ConfigFileError(f"{where}: {exc}") from None
        mults.append(m)
    try:
        return make_config(points, mults)
    except ValueError as exc:
        raise ConfigFileError(f"points: {exc}") from None


def dumps(Z: FatPointConfig) -> str:
    return json.dumps(config_to_dict(Z), indent=2)


def loads(text: str) -> FatPointConfig:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigFileError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    return config_from_dict(doc)


# three corners of a square plus a point at infinity: not a grid, alpha* = 2, 3, 4, 5, 6
NEAR_GRID = make_config(
    [((1, 0), (1, 0)), ((1, 0), (1, 1)), ((1, 1), (1, 0)), ((0, 1), (1, 1))]
)
# six affine points with alpha+ = 4 and alpha+ of the second symbolic power 6
SIX_POINTS = affine_config([(0, 0), (1, 1), (1, 2), (2, 2), (3, 0), (3, 3)])


def grid_minus_point(a: int) -> FatPointConfig:
    """The ``a x a`` affine grid on ``{0..a-1}`` without the point ``(0, 0)``."""
    return affine_config([(i, j) for i in range(a) for j in range(a) if (i, j) != (0, 0)])


_GRID = re.compile(r"^grid-(\d+)-(\d+)$")
_GRID_MINUS = re.compile(r"^grid-minus-point-(\d+)$")

NAMED = ("empty", "point", "example-2.9", "example-3.final", "grid-A-B", "grid-minus-point-A")


def named_config(name: str) -> FatPointConfig | None:
    """Look up a built-in configuration; ``None`` if the name is unknown."""
    if name == "empty":
        return make_config([])
    if name == "point":
        return affine_config([(0, 0)])
    if name == "example-2.9":
        return NEAR_GRID
    if name == "example-3.final":
        return SIX_POINTS
    if m := _GRID.match(name):
        a, b = int(m.group(1)), int(m.group(2))
        if a < 1 or b < 1:
            raise ConfigFileError(f"{name}: grid sides must be positive")
        return grid_config(range(a), range(b))
    if m := _GRID_MINUS.match(name):
        a = int(m.group(1))
        if a < 1:
            raise ConfigFileError(f"{name}: grid side must be positive")
        return grid_minus_point(a)
    return None


def load_config(ref: str) -> FatPointConfig:
    """Read a config file, or resolve a built-in name when no such file exists."""
    path = Path(ref)
    if not path.exists():
        Z = named_config(ref)
        if Z is not None:
            return Z
        raise ConfigFileError(f"{ref}: no such file or built-in configuration")
    try:
        text = path.read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise ConfigFileError(f"{ref}: {exc}") from None
    try:
        return loads(text)
    except ConfigFileError as exc:
        raise ConfigFileError(f"{ref}: {exc}") from None
