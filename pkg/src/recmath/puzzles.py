"""Exact solvers and counters for the classroom puzzle set.

Chessboard square counting, non-attacking rooks, triangle counting in a
triangulated triangle, domino tiling with witness, 4x4 Sudoku, the
ants-on-a-scale clear time, and lattice reachability under hop
constraints.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial


class InvalidGivens(ValueError):
    """Sudoku givens already violate a constraint."""


def count_subsquares(n: int) -> int:
    """Axis-aligned k x k subsquares of an n x n board: sum of k^2."""
    if n < 1:
        raise ValueError("n must be positive")
    return n * (n + 1) * (2 * n + 1) // 6


def count_rook_placements(n: int) -> int:
    """Non-attacking placements of n rooks on an n x n board: n!."""
    if n < 1:
        raise ValueError("n must be positive")
    return factorial(n)


def count_triangles(n: int) -> int:
    """Triangles of all sizes and both orientations in a side-n triangulation.

    Closed form floor(n(n+2)(2n+1)/8).
    """
    if n < 1:
        raise ValueError("n must be positive")
    return n * (n + 2) * (2 * n + 1) // 8


@dataclass(frozen=True)
class Board:
    """width x height grid with some cells removed; (col,row), 0-based."""

    width: int
    height: int
    removed: frozenset[tuple[int, int]] = frozenset()

    def __post_init__(self):
        if self.width < 1 or self.height < 1:
            raise ValueError("board dimensions must be positive")
        removed = frozenset((int(c), int(r)) for c, r in self.removed)
        for c, r in removed:
            if not (0 <= c < self.width and 0 <= r < self.height):
                raise ValueError(f"removed cell ({c},{r}) out of bounds")
        object.__setattr__(self, "removed", removed)

    def open_cells(self) -> list[tuple[int, int]]:
        return [
            (c, r)
            for r in range(self.height)
            for c in range(self.width)
            if (c, r) not in self.removed
        ]


def domino_tileable(board: Board):
    """Decide domino tileability; returns (bool, witness or None).

    The witness is a list of ((c1,r1),(c2,r2)) placements covering every
    open cell exactly once. Backtracks on the first open cell in
    row-major order, trying horizontal before vertical, so witnesses
    are deterministic.
    """
    open_cells = board.open_cells()
    if len(open_cells) % 2 != 0:
        return False, None
    free = set(open_cells)
    placements: list[tuple[tuple[int, int], tuple[int, int]]] = []

    def solve() -> bool:
        if not free:
            return True
        cell = min(free, key=lambda cr: (cr[1], cr[0]))
        c, r = cell
        for mate in ((c + 1, r), (c, r + 1)):
            if mate in free:
                free.discard(cell)
                free.discard(mate)
                placements.append((cell, mate))
                if solve():
                    return True
                placements.pop()
                free.add(cell)
                free.add(mate)
        return False

    if solve():
        return True, list(placements)
    return False, None


@dataclass(frozen=True)
class SudokuGrid4:
    """4x4 grid; 0 means empty, else 1..4."""

    cells: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.cells)
        if len(rows) != 4 or any(len(r) != 4 for r in rows):
            raise ValueError("grid must be 4x4")
        if any(not 0 <= x <= 4 for row in rows for x in row):
            raise ValueError("cells must be 0..4")
        object.__setattr__(self, "cells", rows)


def check_sudoku4(grid: SudokuGrid4) -> bool:
    """True if the filled cells violate no row/column/box constraint."""
    cells = grid.cells
    groups = []
    groups.extend(cells)  # rows
    groups.extend(tuple(cells[r][c] for r in range(4)) for c in range(4))
    for br in (0, 2):
        for bc in (0, 2):
            groups.append(
                tuple(cells[br + dr][bc + dc] for dr in (0, 1) for dc in (0, 1))
            )
    for group in groups:
        filled = [x for x in group if x != 0]
        if len(filled) != len(set(filled)):
            return False
    return True


def solve_sudoku4(grid: SudokuGrid4, cap: int = 16) -> list[SudokuGrid4]:
    """Enumerate completions by backtracking, up to `cap` solutions."""
    if not check_sudoku4(grid):
        raise InvalidGivens("given cells conflict")
    cells = [list(row) for row in grid.cells]
    solutions: list[SudokuGrid4] = []

    def ok(r, c, v):
        if v in cells[r]:
            return False
        if any(cells[i][c] == v for i in range(4)):
            return False
        br, bc = r - r % 2, c - c % 2
        return all(
            cells[br + dr][bc + dc] != v for dr in (0, 1) for dc in (0, 1)
        )

    def solve():
        if len(solutions) >= cap:
            return
        for r in range(4):
            for c in range(4):
                if cells[r][c] == 0:
                    for v in (1, 2, 3, 4):
                        if ok(r, c, v):
                            cells[r][c] = v
                            solve()
                            cells[r][c] = 0
                    return
        solutions.append(SudokuGrid4(tuple(tuple(row) for row in cells)))

    solve()
    return solutions


@dataclass(frozen=True)
class AntConfig:
    """Ants on a thin scale: position in [0, L], direction -1 or +1."""

    scale_length: float
    speed: float
    ants: tuple[tuple[float, int], ...]

    def __post_init__(self):
        if self.scale_length <= 0 or self.speed <= 0:
            raise ValueError("scale length and speed must be positive")
        ants = tuple((float(p), int(d)) for p, d in self.ants)
        for p, d in ants:
            if not 0 <= p <= self.scale_length:
                raise ValueError("ant position outside scale")
            if d not in (-1, 1):
                raise ValueError("direction must be -1 or +1")
        object.__setattr__(self, "ants", ants)


def ants_clear_time(config: AntConfig) -> float:
    """Time until the last ant falls off, by event simulation.

    Collisions reverse both ants; events are processed in time order,
    simultaneous events (within 1e-12) together. With no ants the
    answer is 0.
    """
    L, v = config.scale_length, config.speed
    ants = sorted(config.ants)  # order along the scale never changes
    pos = [p for p, _ in ants]
    dirs = [d for _, d in ants]
    alive = list(range(len(ants)))
    t = 0.0
    eps = 1e-12
    while alive:
        events = []  # (dt, kind, payload)
        for idx, i in enumerate(alive):
            if dirs[i] < 0:
                events.append((pos[i] / v, "fall", idx))
            else:
                events.append(((L - pos[i]) / v, "fall", idx))
        for a, b in zip(alive, alive[1:]):
            if dirs[a] > 0 and dirs[b] < 0:
                events.append(((pos[b] - pos[a]) / (2 * v), "collide", (a, b)))
        dt = min(e[0] for e in events)
        t += dt
        for i in alive:
            pos[i] += dirs[i] * v * dt
        for _, kind, payload in [e for e in events if e[0] <= dt + eps]:
            if kind == "collide":
                a, b = payload
                dirs[a], dirs[b] = -dirs[a], -dirs[b]
        survivors = []
        for i in alive:
            if (dirs[i] < 0 and pos[i] <= eps) or (dirs[i] > 0 and pos[i] >= L - eps):
                continue
            survivors.append(i)
        alive = survivors
    return t


def worst_case_clear_time(scale_length: float, speed: float) -> float:
    """Pass-through equivalence: the worst case is one full traversal, L/v."""
    if scale_length <= 0 or speed <= 0:
        raise ValueError("scale length and speed must be positive")
    return scale_length / speed


def dwarf_reachable(target: tuple[int, int], constraint: str = "equal") -> bool:
    """Lattice reachability for hop constraints.

    constraint: 'equal' (right hops = up hops, so only x == y),
    'right_exceeds_up' (x > y), or 'unconstrained'.
    """
    x, y = target
    if constraint == "equal":
        return x == y
    if constraint == "right_exceeds_up":
        return x > y
    if constraint == "unconstrained":
        return True
    raise ValueError(f"unknown constraint {constraint!r}")
