"""Perfect-play solvers for impartial combinatorial games.

Multi-heap Nim (eat apples/bananas/oranges, last fruit wins) and
single-pile subtraction games ("Make 10": add 1 or 2 to a pile, last
move wins, equivalent to removing from a pile). Normal play only.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache


class IllegalMove(ValueError):
    """A move that is not legal in the given position."""


@dataclass(frozen=True)
class Heaps:
    """An ordered tuple of non-negative heap counts.

    Heaps are ordered and zero heaps stay in place so the UI can
    address heaps by stable index. The position is terminal when all
    counts are zero (or the tuple is empty).
    """

    counts: tuple[int, ...]

    def __post_init__(self):
        counts = tuple(int(c) for c in self.counts)
        if any(c < 0 for c in counts):
            raise ValueError("heap counts must be non-negative")
        object.__setattr__(self, "counts", counts)

    @property
    def terminal(self) -> bool:
        return all(c == 0 for c in self.counts)


@dataclass(frozen=True)
class NimMove:
    heap_index: int
    take: int

    def __post_init__(self):
        if self.take < 1:
            raise ValueError("must take at least one object")
        if self.heap_index < 0:
            raise ValueError("heap_index must be non-negative")


@dataclass(frozen=True)
class SubtractionGame:
    """Pile of size `target`; players alternately remove s in `moves`."""

    target: int
    moves: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "moves", frozenset(int(s) for s in self.moves))
        if self.target < 0:
            raise ValueError("target must be non-negative")
        if not self.moves:
            raise ValueError("move set must be non-empty")
        if any(s < 1 for s in self.moves):
            raise ValueError("all moves must be positive")


@dataclass(frozen=True)
class GameAnalysis:
    """outcome is the winner under perfect play, mover = 'First'.

    optimal_moves lists every move reaching a zero-Grundy position;
    it is empty exactly when outcome is 'Second'.
    """

    outcome: str  # "First" | "Second"
    grundy: int
    optimal_moves: tuple = field(default_factory=tuple)


def nim_sum(h: Heaps) -> int:
    """Bitwise XOR of all heap counts; 0 for the empty position."""
    total = 0
    for c in h.counts:
        total ^= c
    return total


def legal_nim_moves(h: Heaps):
    """All legal moves, ordered by (heap_index, take)."""
    for i, c in enumerate(h.counts):
        for take in range(1, c + 1):
            yield NimMove(i, take)


def apply_move(h: Heaps, m: NimMove) -> Heaps:
    """Apply a Nim move; zero heaps are kept in place."""
    if m.heap_index >= len(h.counts):
        raise IllegalMove(f"heap index {m.heap_index} out of range")
    if m.take > h.counts[m.heap_index]:
        raise IllegalMove(
            f"cannot take {m.take} from heap of {h.counts[m.heap_index]}"
        )
    counts = list(h.counts)
    counts[m.heap_index] -= m.take
    return Heaps(tuple(counts))


def analyze_nim(h: Heaps) -> GameAnalysis:
    """Classify a Nim position and list all optimal moves.

    Bouton's theorem: the player to move wins iff the nim-sum is
    nonzero; the winning moves are exactly those leaving nim-sum 0.
    """
    g = nim_sum(h)
    if g == 0:
        return GameAnalysis("Second", 0, ())
    optimal = []
    for i, c in enumerate(h.counts):
        target = c ^ g
        if target < c:
            optimal.append(NimMove(i, c - target))
    return GameAnalysis("First", g, tuple(optimal))


def grundy_subtraction(game: SubtractionGame, n: int) -> int:
    """Grundy value of a pile of size n under the game's move set."""
    if not 0 <= n <= game.target:
        raise ValueError("pile size out of range")
    return _grundy_table(game.moves, n)[n]


@lru_cache(maxsize=None)
def _grundy_table(moves: frozenset[int], upto: int) -> tuple[int, ...]:
    table = []
    for n in range(upto + 1):
        seen = {table[n - s] for s in moves if s <= n}
        g = 0
        while g in seen:
            g += 1
        table.append(g)
    return tuple(table)


def analyze_subtraction(game: SubtractionGame) -> GameAnalysis:
    """Analyze the full pile; optimal moves reach zero-Grundy remainders."""
    table = _grundy_table(game.moves, game.target)
    g = table[game.target]
    if g == 0:
        return GameAnalysis("Second", 0, ())
    optimal = tuple(
        s for s in sorted(game.moves) if s <= game.target and table[game.target - s] == 0
    )
    return GameAnalysis("First", g, optimal)


def engine_nim_move(h: Heaps) -> NimMove | None:
    """Deterministic engine policy for interactive play.

    Winning positions: the optimal move with lowest heap_index, then
    smallest take. Losing positions: take 1 from the lowest-index
    non-empty heap. None when the position is terminal.
    """
    if h.terminal:
        return None
    analysis = analyze_nim(h)
    if analysis.optimal_moves:
        return min(analysis.optimal_moves, key=lambda m: (m.heap_index, m.take))
    for i, c in enumerate(h.counts):
        if c > 0:
            return NimMove(i, 1)
    return None


def engine_subtraction_move(game: SubtractionGame, remaining: int) -> int | None:
    """Engine policy for a subtraction game: optimal else smallest legal."""
    if remaining == 0:
        return None
    table = _grundy_table(game.moves, game.target)
    legal = [s for s in sorted(game.moves) if s <= remaining]
    if not legal:
        return None
    for s in legal:
        if table[remaining - s] == 0:
            return s
    return legal[0]
