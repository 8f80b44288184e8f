"""Plane branches through their equisingularity data."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, prod
from typing import Iterable, Sequence

from .closed_form import (
    JumpingSetDescription,
    generators,
    jump_values,
    multiplicities_from_jumps_below_one,
)
from .errors import Inconsistent, InvalidPairs, InvalidSequence, MalformedJumpSet, NonpositiveBound, ValidationError
from .proximity import PointBasis, point_basis_from_puiseux, rho, validate_point_basis


@dataclass(frozen=True)
class MultiplicitySequence:
    m: tuple[int, ...]

    @property
    def basis(self) -> PointBasis:
        """The ideal with no extra free points."""
        return validate_point_basis(self.m)

    @property
    def genus(self) -> int:
        return self.basis.structure.g


@dataclass(frozen=True)
class EquisingularityClass:
    curve: MultiplicitySequence
    t: int = 0


def validate_multiplicity_sequence(raw: Sequence[int]) -> MultiplicitySequence:
    try:
        b = validate_point_basis(tuple(raw))
    except ValidationError as exc:
        raise InvalidSequence(str(exc)) from exc
    if b.n > 1 and not b.structure.satellite[-1]:
        raise InvalidSequence(
            f"sequence {b.a} must end at its last satellite point; drop the trailing free points"
        )
    return MultiplicitySequence(b.a)


def ideal_from_class(ec: EquisingularityClass) -> PointBasis:
    if ec.t < 0:
        raise InvalidSequence(f"t = {ec.t} is negative")
    return validate_point_basis(ec.curve.m + (1,) * ec.t)


def characteristic_exponents(ms: MultiplicitySequence) -> tuple[int, ...]:
    b = ms.basis
    gs = b.structure
    out = [b.a[0]]
    for k in range(gs.g):
        out.append(out[-1] + rho(b.rows, gs, b.n, k))
    return tuple(out)


def characteristic_pairs(ms: MultiplicitySequence) -> tuple[tuple[int, int], ...]:
    b = ms.basis
    gs = b.structure
    betas = characteristic_exponents(ms)
    pairs = []
    for k in range(1, gs.g + 1):
        top, low = gs.gamma[k], gs.gamma[k - 1]
        pairs.append((betas[k] // b[top], b.rows[top - 1][low - 1]))
    return tuple(pairs)


def _check_pairs(pairs: Sequence[tuple[int, int]]) -> list[int]:
    """Validate and return the increments phi_i."""
    phis = []
    prev_m = None
    for i, (m, n) in enumerate(pairs, 1):
        if n < 2:
            raise InvalidPairs(f"pair {i}: n = {n} must be at least 2")
        if gcd(m, n) != 1:
            raise InvalidPairs(f"pair {i}: gcd({m}, {n}) must be 1")
        phi = m if prev_m is None else m - n * prev_m
        floor = n if prev_m is None else 0
        if phi <= floor:
            raise InvalidPairs(f"pair {i}: ({m}, {n}) does not exceed the previous pair")
        phis.append(phi)
        prev_m = m
    return phis


def sequence_from_pairs(pairs: Sequence[tuple[int, int]]) -> MultiplicitySequence:
    pairs = [tuple(p) for p in pairs]
    _check_pairs(pairs)
    exponents = []
    prev_m = None
    for m, n in pairs:
        if prev_m is None:
            exponents.append(Fraction(m, n))
        else:
            exponents.append(1 + Fraction(m - n * prev_m, n))
        prev_m = m
    exponents.append(Fraction(1))
    try:
        b = point_basis_from_puiseux(exponents)
    except Inconsistent as exc:
        raise InvalidPairs(str(exc)) from exc
    ms = MultiplicitySequence(b.a)
    if characteristic_pairs(ms) != tuple(pairs):
        raise InvalidPairs(f"pairs {pairs} do not round-trip through {b.a}")
    return ms


def pairs_to_generators(pairs: Sequence[tuple[int, int]]) -> JumpingSetDescription:
    """Generator pairs of the ideal with no extra free points, straight from the pairs."""
    pairs = [tuple(p) for p in pairs]
    phis = _check_pairs(pairs)
    g = len(pairs)
    if g == 0:
        return JumpingSetDescription(pairs=((1, 1),), caps=())
    ns = [n for _, n in pairs]

    def tail(i):  # n_i * ... * n_g, 1-based, empty when i > g
        return prod(ns[i - 1:])

    out = []
    for k in range(g):
        a_k = tail(k + 1)
        b_k = sum(tail(i + 1) * prod(ns[i - 1:k]) * phis[i - 1] for i in range(1, k + 2))
        out.append((a_k, b_k))
    caps = tuple(tail(k + 1) for k in range(1, g))
    return JumpingSetDescription(pairs=tuple(out), caps=caps)


def curve_jumping_numbers(ec: EquisingularityClass, bound) -> list[Fraction]:
    bound = Fraction(bound)
    if bound <= 0:
        raise NonpositiveBound(f"bound {bound} must be positive")
    seeds = [c for c in jump_values(generators(ec.curve.basis), 1) if c < 1] + [Fraction(1)]
    out = set()
    for c in seeds:
        while c <= bound:
            out.add(c)
            c += 1
    return sorted(out)


def equisingularity_from_jumps(jumps_below_one: Iterable) -> MultiplicitySequence:
    return MultiplicitySequence(multiplicities_from_jumps_below_one(jumps_below_one))


def ideal_jumps_from_curve(curve_jumps: Iterable, *, n: int | None = None, valuation: int | None = None,
                           bound=None) -> list[Fraction]:
    """Jumps of the ideal from those of a general curve plus n or v(a).

    ``curve_jumps`` must be complete on (0, bound]; ``bound`` defaults to its maximum.
    """
    values = sorted({Fraction(x) for x in curve_jumps})
    if (n is None) == (valuation is None):
        raise MalformedJumpSet("input", "give exactly one of n and the valuation")
    if not values or values[0] <= 0:
        raise MalformedJumpSet("input", "curve jumps must be positive")
    if 1 not in values:
        raise MalformedJumpSet("input", "1 is always a curve jump")
    bound = values[-1] if bound is None else Fraction(bound)
    if n is not None:
        seq = equisingularity_from_jumps([c for c in values if c < 1]).m
        if n < len(seq):
            raise MalformedJumpSet("tail", f"n = {n} is below the sequence length {len(seq)}")
        valuation = sum(x * x for x in seq) + n - len(seq)
    if valuation <= 0:
        raise MalformedJumpSet("input", f"valuation {valuation} must be positive")
    out = {c for c in values if c != 1 and c <= bound}
    k = 1
    while 1 + Fraction(k, valuation) <= bound:
        out.add(1 + Fraction(k, valuation))
        k += 1
    return sorted(out)
