"""Brute-force multiplier ideals and thresholds.

Everything here works straight from the resolution data: floor the scaled
divisor, subtract the canonical divisor, take the antinef closure.  None of
it uses the closed-form description of the jump set, so it serves as the
reference the formulas are checked against.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from .divisors import CompleteIdealVector, Divisor, canonical_divisor, closure_vector, gram_matrix
from .errors import DimensionMismatch, InternalError, NegativeExponent, NonpositiveBound
from .proximity import PointBasis


@dataclass(frozen=True)
class MultiplierIdeal:
    exponent: Fraction
    ideal: CompleteIdealVector


def ideal_valuations(b: PointBasis) -> tuple[int, ...]:
    """v_i(a) = X_i . I, the E-coordinates of the pulled-back ideal."""
    a = b.a
    return tuple(sum(x * y for x, y in zip(row, a)) for row in b.rows)


def _floor_minus_canonical(b: PointBasis, c: Fraction) -> list[int]:
    k = canonical_divisor(b.proximity).d
    return [(c.numerator * v) // c.denominator - ki for v, ki in zip(ideal_valuations(b), k)]


def multiplier_valuations(b: PointBasis, c: Fraction) -> tuple[int, ...]:
    c = Fraction(c)
    if c < 0:
        raise NegativeExponent(f"exponent {c} is negative")
    return tuple(closure_vector(_floor_minus_canonical(b, c), gram_matrix(b.proximity)))


def multiplier_ideal(b: PointBasis, c) -> MultiplierIdeal:
    c = Fraction(c)
    v = multiplier_valuations(b, c)
    hat = Divisor(v, b.proximity).hat()
    return MultiplierIdeal(exponent=c, ideal=CompleteIdealVector(valuation=v, factorization=hat))


def candidate_grid(b: PointBasis, bound: Fraction, start: Fraction = Fraction(0)) -> list[Fraction]:
    """Exponents in (start, bound] where some floor(c v_i) can change."""
    bound = Fraction(bound)
    grid = set()
    for v in set(ideal_valuations(b)):
        k = (start.numerator * v) // start.denominator + 1
        top = (bound.numerator * v) // bound.denominator
        grid.update(Fraction(j, v) for j in range(k, top + 1))
    return sorted(grid)


def _unbounded_grid(b: PointBasis) -> Iterator[Fraction]:
    lo = Fraction(0)
    hi = Fraction(1)
    while True:
        yield from candidate_grid(b, hi, lo)
        lo, hi = hi, 2 * hi


def oracle_jumping_numbers(b: PointBasis, bound) -> list[Fraction]:
    bound = Fraction(bound)
    if bound <= 0:
        raise NonpositiveBound(f"bound {bound} must be positive")
    gram = gram_matrix(b.proximity)
    k = canonical_divisor(b.proximity).d
    vals = ideal_valuations(b)
    prev = closure_vector([-x for x in k], gram)
    jumps = []
    for c in candidate_grid(b, bound):
        num, den = c.numerator, c.denominator
        cur = closure_vector([(num * v) // den - ki for v, ki in zip(vals, k)], gram)
        if cur != prev:
            jumps.append(c)
        prev = cur
    return jumps


def _check_length(b: PointBasis, R: Sequence[int]) -> tuple[int, ...]:
    if len(R) != b.n:
        raise DimensionMismatch(f"R has {len(R)} entries, expected {b.n}")
    return tuple(R)


def ideal_of_exponents(b: PointBasis, R: Sequence[int]) -> tuple[int, ...]:
    """Valuation vector of the product of simple ideals p_i^{r_i}: entry j is R~ . X_j."""
    R = _check_length(b, R)
    rows = b.rows
    rt = [sum(R[i] * rows[i][j] for i in range(b.n)) for j in range(b.n)]
    return tuple(sum(x * y for x, y in zip(rt, row)) for row in rows)


def _threshold_term(b: PointBasis, R, i: int) -> Fraction:
    row = b.rows[i - 1]
    valuation = ideal_of_exponents(b, R)[i - 1]
    return Fraction(valuation + sum(row) + 1, ideal_valuations(b)[i - 1])


def c_R_direct(b: PointBasis, R: Sequence[int]) -> Fraction:
    R = _check_length(b, R)
    return min(_threshold_term(b, R, i) for i in range(1, b.n + 1))


def c_R_reduced(b: PointBasis, R: Sequence[int]) -> Fraction:
    R = _check_length(b, R)
    return min(_threshold_term(b, R, i) for i in b.structure.gamma_bar[1:])


def c_R_definitional(b: PointBasis, R: Sequence[int], limit: int = 10**6) -> Fraction:
    """First grid exponent whose multiplier ideal no longer contains b_R.

    Containment of complete ideals is componentwise comparison of valuation
    vectors.  Since b_R is antinef, a divisor's closure lies below it exactly
    when the divisor does, so the scan compares the raw divisor and only
    closes the two divisors around the answer as a consistency check.
    """
    R = _check_length(b, R)
    target = ideal_of_exponents(b, R)
    k = canonical_divisor(b.proximity).d
    vals = ideal_valuations(b)
    prev = Fraction(0)
    for count, c in enumerate(_unbounded_grid(b)):
        if count > limit:
            break
        num, den = c.numerator, c.denominator
        raw = [(num * v) // den - ki for v, ki in zip(vals, k)]
        if any(x > y for x, y in zip(raw, target)):
            gram = gram_matrix(b.proximity)
            here = closure_vector(raw, gram)
            before = multiplier_valuations(b, prev)
            if any(x > y for x, y in zip(before, target)) or all(
                x <= y for x, y in zip(here, target)
            ):
                raise InternalError(f"closure disagrees with raw comparison at {c}")
            return c
        prev = c
    raise InternalError("threshold scan did not terminate")
