"""L-systems: parsing, parallel rewriting, and compilation to turtle commands.

The text format is line-oriented:

    axiom = F
    angle = 60
    F -> F-F++F-F
    # comments and blank lines are ignored

Symbols with no rule rewrite to themselves.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .turtle import Forward, Move, Pop, Push, Turn, TurtleCommand

DEFAULT_OUTPUT_CAP = 10**7
DEFAULT_ANGLE = 90.0


class LSystemError(ValueError):
    pass


class MissingAxiom(LSystemError):
    pass


class DuplicateRule(LSystemError):
    pass


class OutputTooLarge(LSystemError):
    """Expansion exceeded the output cap: runaway growth."""


class InvalidSystem(LSystemError):
    """Compiled command stream is malformed (e.g. unbalanced brackets)."""


@dataclass(frozen=True)
class LSystem:
    axiom: str
    rules: dict[str, str]
    angle: float | None = None
    warnings: tuple[str, ...] = ()

    def __post_init__(self):
        if not self.axiom:
            raise MissingAxiom("axiom must be non-empty")
        for sym in self.rules:
            if len(sym) != 1:
                raise LSystemError(f"rule symbol {sym!r} must be a single character")


@dataclass(frozen=True)
class RenderSpec:
    """How a symbol string becomes turtle commands.

    draw_symbols defaults to all uppercase letters appearing in the
    string except the structural placeholders X and Y (so the
    Sierpinski G draws but the plant X stays invisible); move_symbols
    defaults to lowercase 'f'. angle overrides the system's own angle.
    """

    order: int
    step: float = 10.0
    angle: float | None = None
    draw_symbols: frozenset[str] | None = None
    move_symbols: frozenset[str] = frozenset("f")

    def __post_init__(self):
        if self.order < 0:
            raise ValueError("order must be non-negative")
        if self.step <= 0:
            raise ValueError("step must be positive")


def parse(text: str) -> LSystem:
    """Parse the textual format into an LSystem."""
    axiom: str | None = None
    angle: float | None = None
    rules: dict[str, str] = {}
    warnings: list[str] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "->" in line:
            lhs, rhs = line.split("->", 1)
            sym = lhs.strip()
            replacement = rhs.strip()
            if len(sym) != 1:
                raise LSystemError(f"line {lineno}: rule symbol must be one character")
            if sym in rules:
                raise DuplicateRule(f"line {lineno}: duplicate rule for {sym!r}")
            if not replacement:
                warnings.append(f"line {lineno}: empty replacement deletes {sym!r}")
            rules[sym] = replacement
        elif "=" in line:
            key, value = (part.strip() for part in line.split("=", 1))
            if key == "axiom":
                axiom = value
            elif key == "angle":
                angle = float(value)
            elif key == "order":
                pass  # render parameter, accepted and ignored at parse time
            else:
                raise LSystemError(f"line {lineno}: unknown key {key!r}")
        else:
            raise LSystemError(f"line {lineno}: cannot parse {line!r}")
    if axiom is None:
        raise MissingAxiom("no axiom line")
    return LSystem(axiom, rules, angle, tuple(warnings))


def expand(system: LSystem, order: int, cap: int = DEFAULT_OUTPUT_CAP) -> str:
    """Apply `order` parallel rewriting passes to the axiom."""
    if order < 0:
        raise ValueError("order must be non-negative")
    current = system.axiom
    for _ in range(order):
        pieces = [system.rules.get(sym, sym) for sym in current]
        size = sum(len(p) for p in pieces)
        if size > cap:
            raise OutputTooLarge(f"expansion exceeds {cap} symbols")
        current = "".join(pieces)
    return current


def compile(system: LSystem, spec: RenderSpec, cap: int = DEFAULT_OUTPUT_CAP) -> list[TurtleCommand]:
    """Expand and map symbols to turtle commands.

    Draw symbols emit Forward(step), move symbols Move(step), '+' and
    '-' turn by the effective angle (spec overrides system), brackets
    push/pop, anything else is a no-op placeholder (e.g. X in the plant
    system). Bracket balance is validated statically.
    """
    word = expand(system, spec.order, cap)
    angle = spec.angle if spec.angle is not None else system.angle
    if angle is None:
        angle = DEFAULT_ANGLE
    draw = spec.draw_symbols
    if draw is None:
        draw = frozenset(
            sym for sym in word
            if sym.isalpha() and sym.isupper() and sym not in "XY"
        )
    commands: list[TurtleCommand] = []
    depth = 0
    for sym in word:
        if sym in draw:
            commands.append(Forward(spec.step))
        elif sym in spec.move_symbols:
            commands.append(Move(spec.step))
        elif sym == "+":
            commands.append(Turn(angle))
        elif sym == "-":
            commands.append(Turn(-angle))
        elif sym == "[":
            commands.append(Push())
            depth += 1
        elif sym == "]":
            commands.append(Pop())
            depth -= 1
            if depth < 0:
                raise InvalidSystem("unbalanced ']' in expanded string")
    if depth != 0:
        raise InvalidSystem("unclosed '[' in expanded string")
    return commands


# Named presets reproducing the fractal figure gallery.
PRESETS: dict[str, str] = {
    "koch": "axiom = F\nangle = 60\nF -> F-F++F-F\n",
    "sierpinski": "axiom = F\nangle = 60\nF -> G-F-G\nG -> F+G+F\n",
    "hilbert": "axiom = L\nangle = 90\nL -> +RF-LFL-FR+\nR -> -LF+RFR+FL-\n",
    "plant": "axiom = X\nangle = 20\nX -> F-[[X]+X]+F[+FX]-X\nF -> FF\n",
    "fibonacci": "axiom = A\nA -> AB\nB -> A\n",
}
