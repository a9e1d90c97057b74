"""Small numeric kernel.

2-D rotation, disk masking, the two-loop circuit resistance matrix and
its positive-definiteness test, Buffon's-needle pi estimation, and
exact integer sequence identities (Fibonacci, Pascal, Gauss sum,
reciprocal-of-89 digits).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np


class NotSymmetric(ValueError):
    pass


class EstimateUndefined(ArithmeticError):
    """No needle crossed a line, so the estimate 2ln/(tc) divides by zero."""


def rotate(points, theta: float) -> list[tuple[float, float]]:
    """Rotate each (x, y) counterclockwise by theta radians about the origin."""
    c, s = math.cos(theta), math.sin(theta)
    return [(x * c - y * s, x * s + y * c) for x, y in points]


def disk_mask(lx: float, ly: float, ratio: float = 0.45):
    """Predicate marking pixels outside the centered disk of radius ratio*lx."""
    if lx < 1 or ly < 1:
        raise ValueError("dimensions must be at least 1")
    if ratio <= 0:
        raise ValueError("ratio must be positive")
    cx, cy = lx / 2.0, ly / 2.0
    r2 = (ratio * lx) ** 2

    def masked(x: float, y: float) -> bool:
        return (x - cx) ** 2 + (y - cy) ** 2 > r2

    return masked


@dataclass(frozen=True)
class ResistorSet:
    """Five positive resistances feeding the two-loop circuit matrix."""

    r1: float
    r2: float
    r3: float
    r4: float
    r5: float

    def __post_init__(self):
        if any(r <= 0 for r in (self.r1, self.r2, self.r3, self.r4, self.r5)):
            raise ValueError("all resistances must be strictly positive")


def resistor_matrix(resistors: ResistorSet) -> tuple[tuple[float, float], tuple[float, float]]:
    """[[R1+R2+R4, R2], [R2, R2+R3+R5]] from the two-loop KVL system."""
    r = resistors
    return ((r.r1 + r.r2 + r.r4, r.r2), (r.r2, r.r2 + r.r3 + r.r5))


def is_positive_definite(m) -> bool:
    """Leading-principal-minor test for a symmetric 2x2 matrix."""
    (a, b), (c, d) = m
    if b != c:
        raise NotSymmetric("matrix must be symmetric")
    return a > 0 and a * d - b * c > 0


@dataclass(frozen=True)
class NeedleSpec:
    """Short-needle Buffon drop: length l <= spacing t, n drops, fixed seed.

    Randomness comes from numpy's PCG64 stream seeded with `seed`, so a
    given spec reproduces bit-for-bit on any platform.
    """

    length: float
    spacing: float
    drops: int
    seed: int = 0

    def __post_init__(self):
        if not 0 < self.length <= self.spacing:
            raise ValueError("need 0 < length <= spacing (short needle)")
        if self.drops < 1:
            raise ValueError("need at least one drop")


def buffon_estimate(spec: NeedleSpec) -> tuple[float, int]:
    """Estimate pi as 2*l*n / (t*c) where c counts line crossings.

    Each drop samples the center-to-line distance d uniform on [0, t/2]
    and the needle angle uniform on [0, pi/2); the needle crosses iff
    d <= (l/2) sin(angle).
    """
    rng = np.random.Generator(np.random.PCG64(spec.seed))
    d = rng.uniform(0.0, spec.spacing / 2.0, spec.drops)
    phi = rng.uniform(0.0, math.pi / 2.0, spec.drops)
    crossings = int(np.count_nonzero(d <= (spec.length / 2.0) * np.sin(phi)))
    if crossings == 0:
        raise EstimateUndefined("no crossings in the sample")
    estimate = 2.0 * spec.length * spec.drops / (spec.spacing * crossings)
    return estimate, crossings


@lru_cache(maxsize=None)
def fibonacci(n: int) -> int:
    """F(1) = F(2) = 1, exact integers."""
    if n < 1:
        raise ValueError("n must be at least 1")
    a, b = 1, 1
    for _ in range(n - 1):
        a, b = b, a + b
    return a


def fib_sum_check(n: int) -> tuple[int, int]:
    """(sum of F(1)..F(n), F(n+2) - 1); the identity says they are equal."""
    lhs = sum(fibonacci(k) for k in range(1, n + 1))
    return lhs, fibonacci(n + 2) - 1


def fib_square_sum_check(n: int) -> tuple[int, int]:
    """(sum of F(k)^2 for k <= n, F(n)*F(n+1))."""
    lhs = sum(fibonacci(k) ** 2 for k in range(1, n + 1))
    return lhs, fibonacci(n) * fibonacci(n + 1)


def pascal_row(n: int) -> list[int]:
    """Row n of Pascal's triangle (row 0 = [1]) by the additive recurrence."""
    if n < 0:
        raise ValueError("n must be non-negative")
    row = [1]
    for _ in range(n):
        row = [1] + [row[i] + row[i + 1] for i in range(len(row) - 1)] + [1]
    return row


def fib_reciprocal_digits(base: int, count: int) -> str:
    """First fractional digits of 1/(base^2 - base - 1) by integer long division.

    Base 10 gives 1/89, base 5 gives 1/19; both hide the Fibonacci
    sequence in their digit expansions.
    """
    if base < 2:
        raise ValueError("base must be at least 2")
    if count < 1:
        raise ValueError("count must be at least 1")
    denominator = base * base - base - 1
    digits = []
    remainder = 1
    for _ in range(count):
        remainder *= base
        digit, remainder = divmod(remainder, denominator)
        if digit >= 10:
            raise ValueError("digit exceeds 9; bases above 10 not representable")
        digits.append(str(digit))
    return "".join(digits)


def gauss_sum(n: int) -> int:
    """1 + 2 + ... + n = n(n+1)/2."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return n * (n + 1) // 2
