"""Plane-geometry figure generators.

Modular chord diagrams (times-table string art), skip-counting
polygons, curve stitching, rolling-circle parametric curves, and
escape-time Mandelbrot membership.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .turtle import Drawing

Segment = tuple[tuple[float, float], tuple[float, float]]


@dataclass(frozen=True)
class ChordDiagram:
    """Chords m -> (k*m mod n) on n equally spaced circle points.

    Residues are 0-based internally; rendering labels points 1..n with
    residue 0 shown as n. Chords are deduplicated unordered pairs with
    distinct endpoints.
    """

    n: int
    k: int
    chords: tuple[tuple[int, int], ...]


def modular_chords(n: int, k: int) -> ChordDiagram:
    if n < 2:
        raise ValueError("need at least 2 circle points")
    if k < 0:
        raise ValueError("multiplier must be non-negative")
    seen = set()
    chords = []
    for m in range(n):
        a, b = m, (k * m) % n
        if a == b:
            continue
        pair = (min(a, b), max(a, b))
        if pair not in seen:
            seen.add(pair)
            chords.append(pair)
    return ChordDiagram(n, k, tuple(chords))


def circle_point(index: int, n: int, radius: float = 1.0) -> tuple[float, float]:
    angle = 2.0 * math.pi * index / n
    return (radius * math.cos(angle), radius * math.sin(angle))


def chord_drawing(diagram: ChordDiagram, radius: float = 1.0, circle_samples: int = 0) -> Drawing:
    """Render chords (and optionally the circle outline) as a Drawing."""
    polylines = []
    if circle_samples >= 3:
        ring = [
            circle_point(i, circle_samples, radius)
            for i in range(circle_samples)
        ]
        ring.append(ring[0])
        polylines.append(tuple(ring))
    for a, b in diagram.chords:
        polylines.append(
            (circle_point(a, diagram.n, radius), circle_point(b, diagram.n, radius))
        )
    return Drawing(tuple(polylines))


def skip_count_path(n: int, skip: int, start: int = 1) -> list[int]:
    """Skip-counting cycle on a circle of n labels, 1-based.

    Steps by skip+1 positions until the start label recurs; both
    endpoints of the cycle carry the start label.
    """
    if n < 2:
        raise ValueError("need at least 2 circle points")
    if skip < 1:
        raise ValueError("skip must be at least 1")
    step = skip + 1
    start0 = start % n  # label n occupies residue 0
    path = [start0]
    current = (start0 + step) % n
    while current != start0:
        path.append(current)
        current = (current + step) % n
    path.append(start0)
    return [n if p == 0 else p for p in path]


def skip_count_drawing(n: int, skip: int, start: int = 1, radius: float = 1.0) -> Drawing:
    labels = skip_count_path(n, skip, start)
    points = tuple(circle_point(label % n, n, radius) for label in labels)
    return Drawing((points,))


def curve_stitch(count: int, style: str = "perpendicular") -> list[Segment]:
    """String-art segments whose envelope is a parabola.

    'perpendicular': join (i, 0) to (0, count - i) for i = 1..count-1,
    so the intercept labels always sum to `count`. 'vshape' mirrors the
    pattern across the y axis.
    """
    if count < 2:
        raise ValueError("count must be at least 2")
    base = [
        ((float(i), 0.0), (0.0, float(count - i))) for i in range(1, count)
    ]
    if style == "perpendicular":
        return base
    if style == "vshape":
        mirrored = [((-x1, y1), (-x2, y2)) for (x1, y1), (x2, y2) in base]
        return base + mirrored
    raise ValueError(f"unknown style {style!r}")


def stitch_drawing(count: int, style: str = "perpendicular") -> Drawing:
    return Drawing(tuple((p, q) for p, q in curve_stitch(count, style)))


@dataclass(frozen=True)
class Cardioid:
    """Polar r = 1 + cos(theta), theta in [0, 2*pi]."""


@dataclass(frozen=True)
class Cycloid:
    """Point on a circle of radius r rolling along a line; t in [0, 4*pi]."""

    r: float = 1.0

    def __post_init__(self):
        if self.r <= 0:
            raise ValueError("radius must be positive")


@dataclass(frozen=True)
class Epicycloid:
    """Point on a circle of radius r rolling outside a circle of radius R.

    x = (R+r) cos t - r cos((R+r)/r t), same with sine for y. R = r
    gives a cardioid.
    """

    R: float = 1.0
    r: float = 1.0

    def __post_init__(self):
        if self.R <= 0 or self.r <= 0:
            raise ValueError("radii must be positive")


ParametricCurve = Cardioid | Cycloid | Epicycloid


def evaluate_parametric(curve: ParametricCurve, t: float) -> tuple[float, float]:
    if isinstance(curve, Cardioid):
        r = 1.0 + math.cos(t)
        return (r * math.cos(t), r * math.sin(t))
    if isinstance(curve, Cycloid):
        return (curve.r * (t - math.sin(t)), curve.r * (1.0 - math.cos(t)))
    if isinstance(curve, Epicycloid):
        rsum = curve.R + curve.r
        ratio = rsum / curve.r
        return (
            rsum * math.cos(t) - curve.r * math.cos(ratio * t),
            rsum * math.sin(t) - curve.r * math.sin(ratio * t),
        )
    raise TypeError(f"unknown curve {curve!r}")


def parameter_range(curve: ParametricCurve) -> tuple[float, float]:
    if isinstance(curve, Cycloid):
        return (0.0, 4.0 * math.pi)
    return (0.0, 2.0 * math.pi)


def sample_parametric(curve: ParametricCurve, samples: int) -> Drawing:
    """Uniform parameter sampling over the curve's natural range."""
    if samples < 2:
        raise ValueError("need at least 2 samples")
    t0, t1 = parameter_range(curve)
    points = tuple(
        evaluate_parametric(curve, t0 + (t1 - t0) * i / (samples - 1))
        for i in range(samples)
    )
    return Drawing((points,))


@dataclass(frozen=True)
class EscapeResult:
    """bounded, or escaped at iteration k (z_1 = c, z_{k+1} = z_k^2 + c)."""

    escaped: bool
    iteration: int | None = None


def mandelbrot_escape(c: complex, max_iter: int) -> EscapeResult:
    """Escape-time membership test with radius 2."""
    if max_iter < 1:
        raise ValueError("max_iter must be at least 1")
    z = 0j
    for k in range(1, max_iter + 1):
        z = z * z + c
        if abs(z) > 2.0:
            return EscapeResult(True, k)
    return EscapeResult(False)


# Multiplication-table gallery reproducing the mod-360 figures.
MOD360_GALLERY = tuple((360, k) for k in (6, 7, 9, 10))
