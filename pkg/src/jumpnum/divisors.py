"""Exceptional divisor lattice: base changes, intersections, antinef closure."""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Sequence

from .errors import ContextMismatch, DimensionMismatch, InternalError, NotAntinef
from .proximity import ProximityMatrix, invert_proximity

STEP_BUDGET = 10**7


@lru_cache(maxsize=512)
def gram_matrix(matrix: ProximityMatrix) -> tuple[tuple[int, ...], ...]:
    return matrix.transpose_product()


@lru_cache(maxsize=512)
def _inverse(matrix: ProximityMatrix) -> tuple[tuple[int, ...], ...]:
    return invert_proximity(matrix)


@dataclass(frozen=True)
class Divisor:
    """Coefficients on E_1, ..., E_n relative to a fixed proximity matrix."""

    d: tuple[int, ...]
    context: ProximityMatrix

    def __post_init__(self):
        if len(self.d) != self.context.n:
            raise DimensionMismatch(f"{len(self.d)} coefficients for {self.context.n} curves")

    @property
    def n(self) -> int:
        return len(self.d)

    def star(self) -> tuple[int, ...]:
        """Coordinates d* = d P^T in the basis of total transforms."""
        p = self.context.p
        return tuple(sum(self.d[i] * p[j][i] for i in range(j + 1)) for j in range(self.n))

    def hat(self) -> tuple[int, ...]:
        """Coordinates d^ = d P^T P; also the factorization exponents."""
        g = gram_matrix(self.context)
        return tuple(sum(self.d[i] * g[i][j] for i in range(self.n)) for j in range(self.n))

    def __add__(self, other: Divisor) -> Divisor:
        _same_context(self, other)
        return Divisor(tuple(x + y for x, y in zip(self.d, other.d)), self.context)

    def __sub__(self, other: Divisor) -> Divisor:
        _same_context(self, other)
        return Divisor(tuple(x - y for x, y in zip(self.d, other.d)), self.context)

    def __le__(self, other: Divisor) -> bool:
        _same_context(self, other)
        return all(x <= y for x, y in zip(self.d, other.d))

    def positive_part(self) -> Divisor:
        return Divisor(tuple(max(x, 0) for x in self.d), self.context)


def _same_context(x: Divisor, y: Divisor) -> None:
    if x.context != y.context:
        raise ContextMismatch("divisors live on different resolutions")


def from_star(star: Sequence[int], context: ProximityMatrix) -> Divisor:
    x = _inverse(context)
    n = context.n
    return Divisor(tuple(sum(star[k] * x[j][k] for k in range(n)) for j in range(n)), context)


def from_hat(hat: Sequence[int], context: ProximityMatrix) -> Divisor:
    x = _inverse(context)
    n = context.n
    star = [sum(hat[k] * x[k][j] for k in range(n)) for j in range(n)]
    return from_star(star, context)


def exceptional(i: int, context: ProximityMatrix) -> Divisor:
    """E_i, the strict transform of the i-th exceptional curve."""
    return Divisor(tuple(int(k == i - 1) for k in range(context.n)), context)


def total_transform(i: int, context: ProximityMatrix) -> Divisor:
    """E*_i."""
    return from_star([int(k == i - 1) for k in range(context.n)], context)


def hat_basis(i: int, context: ProximityMatrix) -> Divisor:
    """E^_i, the divisor cut out by the i-th simple ideal."""
    return from_hat([int(k == i - 1) for k in range(context.n)], context)


def intersect(first: Divisor, second: Divisor) -> int:
    _same_context(first, second)
    return -sum(x * y for x, y in zip(first.star(), second.star()))


def is_antinef(divisor: Divisor) -> bool:
    return all(x >= 0 for x in divisor.hat())


def canonical_divisor(context: ProximityMatrix) -> Divisor:
    return Divisor(tuple(sum(row) for row in _inverse(context)), context)


Selector = Callable[[list[int]], int]


def smallest_first(candidates: list[int]) -> int:
    return candidates[0]


def largest_first(candidates: list[int]) -> int:
    return candidates[-1]


def random_selector(seed: int) -> Selector:
    rng = random.Random(seed)
    return lambda candidates: rng.choice(candidates)


def laufer(divisor: Divisor, select: Selector = smallest_first, budget: int = STEP_BUDGET) -> Divisor:
    """Add one E_nu at a time while some E_nu meets the divisor positively."""
    g = gram_matrix(divisor.context)
    d = list(divisor.d)
    h = list(divisor.hat())
    n = len(d)
    for _ in range(budget):
        bad = [nu for nu in range(n) if h[nu] < 0]
        if not bad:
            return Divisor(tuple(d), divisor.context)
        nu = select(bad)
        d[nu] += 1
        row = g[nu]
        for j in range(n):
            h[j] += row[j]
    raise InternalError(f"antinef closure exceeded {budget} steps")


def closure_vector(d: Sequence[int], gram, budget: int = STEP_BUDGET) -> list[int]:
    """Fast closure on raw vectors.

    Each round adds E_nu, smallest nu first, as many times in a row as the
    one-step rule would; the result agrees with :func:`laufer`.
    """
    n = len(d)
    d = list(d)
    h = [sum(d[i] * gram[i][j] for i in range(n)) for j in range(n)]
    steps = 0
    while True:
        for nu in range(n):
            if h[nu] < 0:
                break
        else:
            return d
        w = gram[nu][nu]
        q = (-h[nu] + w - 1) // w
        d[nu] += q
        row = gram[nu]
        for j in range(n):
            h[j] += q * row[j]
        steps += q
        if steps > budget:
            raise InternalError(f"antinef closure exceeded {budget} steps")


def antinef_closure(divisor: Divisor) -> Divisor:
    return Divisor(tuple(closure_vector(divisor.d, gram_matrix(divisor.context))), divisor.context)


@dataclass(frozen=True)
class CompleteIdealVector:
    valuation: tuple[int, ...]
    factorization: tuple[int, ...]

    def contains(self, other: CompleteIdealVector) -> bool:
        """True when ``other`` is a subideal: its valuations dominate ours."""
        return all(x <= y for x, y in zip(self.valuation, other.valuation))

    @property
    def is_unit(self) -> bool:
        return not any(self.valuation)


def ideal_of_divisor(divisor: Divisor) -> CompleteIdealVector:
    hat = divisor.hat()
    if any(x < 0 for x in hat):
        raise NotAntinef(f"factorization vector {hat} has negative entries")
    return CompleteIdealVector(valuation=divisor.d, factorization=hat)
