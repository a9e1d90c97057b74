"""Turtle-graphics virtual machine.

Interprets command sequences (forward/move/turn/push/pop) into a
Drawing of polylines, draws the recursive branching tree, and emits
SVG with a bit-exact formatting contract.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field


class UnbalancedPop(ValueError):
    """Pop with an empty state stack: malformed program."""


@dataclass(frozen=True)
class Forward:
    """Move pen-down by distance (negative draws backward)."""

    distance: float


@dataclass(frozen=True)
class Move:
    """Move pen-up by distance."""

    distance: float


@dataclass(frozen=True)
class Turn:
    """Rotate in place; positive degrees turn counterclockwise (left)."""

    degrees: float


@dataclass(frozen=True)
class Push:
    """Save (position, heading) on the state stack."""


@dataclass(frozen=True)
class Pop:
    """Restore the most recently saved (position, heading)."""


TurtleCommand = Forward | Move | Turn | Push | Pop


@dataclass
class TurtleState:
    x: float = 0.0
    y: float = 0.0
    heading: float = 0.0  # degrees, 0 = +x axis, normalized to [0, 360)
    stack: list[tuple[float, float, float]] = field(default_factory=list)

    def copy(self) -> "TurtleState":
        return TurtleState(self.x, self.y, self.heading, list(self.stack))


@dataclass(frozen=True)
class Drawing:
    """Ordered polylines in abstract 2-D user units; each has >= 2 points."""

    polylines: tuple[tuple[tuple[float, float], ...], ...] = ()

    def __post_init__(self):
        for poly in self.polylines:
            if len(poly) < 2:
                raise ValueError("polyline needs at least 2 points")
            for x, y in poly:
                if not (math.isfinite(x) and math.isfinite(y)):
                    raise ValueError("points must be finite")

    @property
    def segment_count(self) -> int:
        return sum(len(p) - 1 for p in self.polylines)


def interpret(program, start: TurtleState | None = None) -> tuple[Drawing, TurtleState]:
    """Run a turtle program, returning the Drawing and the final state.

    Forward extends the current polyline; Move, Push and Pop break it.
    Turns keep the polyline open so closed shapes come out as a single
    path.
    """
    state = start.copy() if start is not None else TurtleState()
    polylines: list[tuple[tuple[float, float], ...]] = []
    current: list[tuple[float, float]] = []

    def flush():
        nonlocal current
        if len(current) >= 2:
            polylines.append(tuple(current))
        current = []

    for cmd in program:
        if isinstance(cmd, Forward):
            rad = math.radians(state.heading)
            nx = state.x + cmd.distance * math.cos(rad)
            ny = state.y + cmd.distance * math.sin(rad)
            if not current:
                current = [(state.x, state.y)]
            current.append((nx, ny))
            state.x, state.y = nx, ny
        elif isinstance(cmd, Move):
            flush()
            rad = math.radians(state.heading)
            state.x += cmd.distance * math.cos(rad)
            state.y += cmd.distance * math.sin(rad)
        elif isinstance(cmd, Turn):
            state.heading = (state.heading + cmd.degrees) % 360.0
        elif isinstance(cmd, Push):
            flush()
            state.stack.append((state.x, state.y, state.heading))
        elif isinstance(cmd, Pop):
            flush()
            if not state.stack:
                raise UnbalancedPop("pop with empty stack")
            state.x, state.y, state.heading = state.stack.pop()
        else:
            raise TypeError(f"unknown command {cmd!r}")
    flush()
    return Drawing(tuple(polylines)), state


def recursive_tree(
    length: float, theta: float, decrement: float, min_length: float = 5.0
) -> Drawing:
    """Branching tree: trunk, then three children at +theta, -theta, -theta.

    Each child shrinks by `decrement`; recursion stops when the length
    drops below `min_length`. The retreat along the trunk does not
    re-emit a segment, so the segment count equals the node count.
    """
    if decrement <= 0:
        raise ValueError("decrement must be positive")
    segments: list[tuple[tuple[float, float], tuple[float, float]]] = []

    def grow(x: float, y: float, heading: float, size: float):
        if size < min_length:
            return
        rad = math.radians(heading)
        nx = x + size * math.cos(rad)
        ny = y + size * math.sin(rad)
        segments.append(((x, y), (nx, ny)))
        child = size - decrement
        grow(nx, ny, heading + theta, child)
        grow(nx, ny, heading, child)
        grow(nx, ny, heading - theta, child)

    grow(0.0, 0.0, 90.0, length)
    return Drawing(tuple(segments))


def emit_svg(
    drawing: Drawing,
    stroke: str = "black",
    stroke_width: float = 1.0,
    background: str | None = None,
) -> str:
    """Serialize a Drawing to SVG text.

    One path per polyline, coordinates at 6 decimal places, y flipped
    so +y is up, viewBox = bounding box inflated 5% per side. Output is
    byte-identical for identical input.
    """
    # normalize -0.0 so golden output never shows "-0.000000" at the origin
    flipped = [
        tuple((x + 0.0, -y + 0.0) for x, y in poly) for poly in drawing.polylines
    ]
    if flipped:
        xs = [x for poly in flipped for x, _ in poly]
        ys = [y for poly in flipped for _, y in poly]
        min_x, max_x = min(xs), max(xs)
        min_y, max_y = min(ys), max(ys)
        pad_x = 0.05 * (max_x - min_x) or 0.5
        pad_y = 0.05 * (max_y - min_y) or 0.5
        vb = (
            min_x - pad_x,
            min_y - pad_y,
            (max_x - min_x) + 2 * pad_x,
            (max_y - min_y) + 2 * pad_y,
        )
    else:
        vb = (0.0, 0.0, 1.0, 1.0)
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        '<svg xmlns="http://www.w3.org/2000/svg" viewBox="{:.6f} {:.6f} {:.6f} {:.6f}">'.format(*vb),
    ]
    if background is not None:
        lines.append(
            '<rect x="{:.6f}" y="{:.6f}" width="{:.6f}" height="{:.6f}" fill="{}"/>'.format(
                vb[0], vb[1], vb[2], vb[3], background
            )
        )
    for poly in flipped:
        first = "M {:.6f} {:.6f}".format(*poly[0])
        rest = " L ".join("{:.6f} {:.6f}".format(x, y) for x, y in poly[1:])
        lines.append(
            '<path d="{} L {}" fill="none" stroke="{}" stroke-width="{:.6f}"/>'.format(
                first, rest, stroke, stroke_width
            )
        )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
