"""Independent test oracles: brute-force enumerations kept deliberately
separate from the library implementations they check."""

from __future__ import annotations

from functools import lru_cache


@lru_cache(maxsize=None)
def nim_first_player_wins(counts: tuple[int, ...]) -> bool:
    """Exhaustive game-tree search, memoized on the sorted position."""
    counts = tuple(sorted(c for c in counts if c > 0))
    if not counts:
        return False  # mover has no move: previous player took the last object
    for i, c in enumerate(counts):
        for take in range(1, c + 1):
            child = counts[:i] + (c - take,) + counts[i + 1 :]
            if not nim_first_player_wins(child):
                return True
    return False


def subtraction_grundy_table(moves: set[int], upto: int) -> list[int]:
    """Retrograde mex table, written independently of the library."""
    table = []
    for n in range(upto + 1):
        reachable = set()
        for s in moves:
            if s <= n:
                reachable.add(table[n - s])
        g = 0
        while g in reachable:
            g += 1
        table.append(g)
    return table


def count_walks_brute(n: int, edges, start: int, end: int, length: int) -> int:
    """Enumerate all walks step by step over the edge multiset."""
    neighbors: dict[int, list[int]] = {v: [] for v in range(n)}
    for a, b in edges:
        if a == b:
            neighbors[a].append(a)
        else:
            neighbors[a].append(b)
            neighbors[b].append(a)
    frontier = {start: 1}
    for _ in range(length):
        nxt: dict[int, int] = {}
        for v, ways in frontier.items():
            for w in neighbors[v]:
                nxt[w] = nxt.get(w, 0) + ways
        frontier = nxt
    return frontier.get(end, 0)


def hierholzer_trail(n: int, edges) -> list[int] | None:
    """Construct an Euler trail/circuit, or None if impossible."""
    deg = [0] * n
    adj: dict[int, list[tuple[int, int]]] = {v: [] for v in range(n)}
    for idx, (a, b) in enumerate(edges):
        deg[a] += 1
        deg[b] += 1
        adj[a].append((b, idx))
        if a != b:
            adj[b].append((a, idx))
    odd = [v for v in range(n) if deg[v] % 2 == 1]
    if len(odd) not in (0, 2):
        return None
    start = odd[0] if odd else next((v for v in range(n) if deg[v] > 0), 0)
    used = [False] * len(edges)
    stack = [start]
    trail = []
    pointers = {v: 0 for v in range(n)}
    while stack:
        v = stack[-1]
        advanced = False
        while pointers[v] < len(adj[v]):
            w, idx = adj[v][pointers[v]]
            pointers[v] += 1
            if not used[idx]:
                used[idx] = True
                stack.append(w)
                advanced = True
                break
        if not advanced:
            trail.append(stack.pop())
    if not all(used):
        return None
    return trail[::-1]


def count_subsquares_brute(n: int) -> int:
    total = 0
    for size in range(1, n + 1):
        for row in range(n - size + 1):
            for col in range(n - size + 1):
                total += 1
    return total


def count_rooks_brute(n: int) -> int:
    """Backtracking over columns, one rook per row."""
    count = 0
    used = [False] * n

    def place(row: int):
        nonlocal count
        if row == n:
            count += 1
            return
        for col in range(n):
            if not used[col]:
                used[col] = True
                place(row + 1)
                used[col] = False

    place(0)
    return count


def count_triangles_brute(n: int) -> int:
    """Enumerate (row, offset, size, orientation) on the triangular lattice.

    Upward triangles of size s have apex rows 0..n-s; downward ones
    need s <= row and fit only while size + row <= n.
    """
    total = 0
    for size in range(1, n + 1):
        for row in range(n - size + 1):
            total += row + 1  # upward: offsets along the row
    for size in range(1, n + 1):
        for row in range(size, n - size + 1):
            total += row - size + 1  # downward
    return total


def ants_passthrough_time(scale_length: float, speed: float, ants) -> float:
    """Each ant's exit time as if collisions were pass-throughs."""
    times = [
        (p if d < 0 else scale_length - p) / speed for p, d in ants
    ]
    return max(times) if times else 0.0


def sudoku4_valid_complete(cells) -> bool:
    """Constraint checker independent of the solver."""
    for row in cells:
        if sorted(row) != [1, 2, 3, 4]:
            return False
    for c in range(4):
        if sorted(cells[r][c] for r in range(4)) != [1, 2, 3, 4]:
            return False
    for br in (0, 2):
        for bc in (0, 2):
            box = [cells[br + dr][bc + dc] for dr in (0, 1) for dc in (0, 1)]
            if sorted(box) != [1, 2, 3, 4]:
                return False
    return True
