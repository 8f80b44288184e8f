"""Jumping numbers from generator pairs, and the way back.

A simple complete ideal is summarised by pairs (a_k, b_k), one per star of
its dual graph plus one, where a_k is the multiplicity at the k-th star
(starting from the first point) and b_k is a normalised self-intersection.
Block k of the jump set is

    (s+1)/a_k + (t+1)/b_k + m/cap_k     with  (s+1)/a_k + (t+1)/b_k < 1/cap_k

and the last block has no cap and no m term.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt
from typing import Iterable, Sequence

from .errors import (
    Inconsistent,
    IndexOutOfRange,
    InternalError,
    MalformedJumpSet,
    NonpositiveBound,
    NotInteger,
    ValidationError,
)
from .proximity import PointBasis, point_basis_from_puiseux, validate_point_basis


@dataclass(frozen=True)
class JumpingSetDescription:
    pairs: tuple[tuple[int, int], ...]
    caps: tuple[int, ...]

    @property
    def blocks(self) -> int:
        return len(self.pairs)


@dataclass(frozen=True)
class JumpDecomposition:
    block: int
    s: int
    t: int
    m: int | None = None

    def value(self, d: JumpingSetDescription) -> Fraction:
        a, b = d.pairs[self.block]
        v = Fraction(self.s + 1, a) + Fraction(self.t + 1, b)
        if self.m is not None:
            v += Fraction(self.m, d.caps[self.block])
        return v

    def as_dict(self) -> dict:
        out = {"block": self.block, "s": self.s, "t": self.t}
        if self.m is not None:
            out["m"] = self.m
        return out


def _prefix_square(b: PointBasis, k: int) -> int:
    return sum(x * x for x in b.a[:k])


def generators(b: PointBasis) -> JumpingSetDescription:
    ends = b.structure.gamma_bar
    pairs = []
    for nu in range(len(ends) - 1):
        a = b[ends[nu]]
        num = _prefix_square(b, ends[nu + 1])
        if num % a:
            raise InternalError(f"b_{nu} = {num}/{a} is not an integer")
        pairs.append((a, num // a))
    caps = tuple(b[x] for x in ends[1:-1])
    return JumpingSetDescription(pairs=tuple(pairs), caps=caps)


def zariski_exponents(b: PointBasis) -> tuple[int, ...]:
    """(a_1, b_0, ..., b_g): valuations of the simple ideals at the terminal free points."""
    gs = b.structure
    rows = b.rows
    out = [b.a[0]]
    for nu in range(gs.g + 1):
        eta, gam = gs.gamma[nu], gs.gamma[nu + 1]
        out.append(_prefix_square(b, gam) // b[eta])
    # same integers read as valuations I . X_tau
    for nu in range(1, gs.g + 2):
        tau = gs.tau[nu]
        if out[nu] != sum(x * y for x, y in zip(b.a, rows[tau - 1])):
            raise InternalError(f"exponent {nu} disagrees with the valuation at point {tau}")
    return tuple(out)


def _block_values(d: JumpingSetDescription, nu: int, bound: Fraction):
    a, b = d.pairs[nu]
    capped = nu < len(d.caps)
    limit = Fraction(1, d.caps[nu]) if capped else None
    s = 0
    while True:
        head = Fraction(s + 1, a)
        if head + Fraction(1, b) > bound or (capped and head + Fraction(1, b) >= limit):
            break
        t = 0
        while True:
            base = head + Fraction(t + 1, b)
            if base > bound or (capped and base >= limit):
                break
            if capped:
                m = 0
                while base + m * limit <= bound:
                    yield base + m * limit, JumpDecomposition(nu, s, t, m)
                    m += 1
            else:
                yield base, JumpDecomposition(nu, s, t)
            t += 1
        s += 1


def enumerate_jumps(d: JumpingSetDescription, bound) -> list[tuple[Fraction, list[JumpDecomposition]]]:
    bound = Fraction(bound)
    if bound <= 0:
        raise NonpositiveBound(f"bound {bound} must be positive")
    found: dict[Fraction, list[JumpDecomposition]] = {}
    for nu in range(d.blocks):
        for value, dec in _block_values(d, nu, bound):
            found.setdefault(value, []).append(dec)
    return sorted(found.items())


def jump_values(d: JumpingSetDescription, bound) -> list[Fraction]:
    return [v for v, _ in enumerate_jumps(d, bound)]


def is_jumping_number(d: JumpingSetDescription, c) -> JumpDecomposition | None:
    """A decomposition of ``c`` in some block, or None."""
    c = Fraction(c)
    if c <= 0:
        return None
    for nu, (a, b) in enumerate(d.pairs):
        capped = nu < len(d.caps)
        limit = Fraction(1, d.caps[nu]) if capped else None
        s = 0
        while Fraction(s + 1, a) < c:
            head = Fraction(s + 1, a)
            rest = c - head
            if capped:
                t = 0
                while head + Fraction(t + 1, b) < limit and Fraction(t + 1, b) <= rest:
                    m = (rest - Fraction(t + 1, b)) / limit
                    if m.denominator == 1:
                        return JumpDecomposition(nu, s, t, int(m))
                    t += 1
            else:
                t1 = rest * b
                if t1.denominator == 1 and t1 >= 1:
                    return JumpDecomposition(nu, s, int(t1) - 1)
            s += 1
    return None


def xi_prime(d: JumpingSetDescription, nu: int) -> Fraction:
    if not 0 <= nu < d.blocks:
        raise IndexOutOfRange(f"block {nu} outside 0..{d.blocks - 1}")
    a, b = d.pairs[nu]
    return Fraction(1, a) + Fraction(1, b)


def lct(d: JumpingSetDescription) -> Fraction:
    return xi_prime(d, 0)


def hilbert_samuel(b: PointBasis) -> int:
    e = b.self_intersection
    first_above_one = next(v for v in jump_values(generators(b), 2) if v > 1)
    if 1 / (first_above_one - 1) != e:
        raise InternalError("smallest jump above 1 disagrees with the multiplicity")
    return e


def pairs_from_xi_primes(xis: Sequence[Fraction]) -> tuple[tuple[int, int], ...]:
    """Recover the generator pairs from the block minima alone.

    Works from the last block down: with the cap a known, a * xi = (u+v)/(uv)
    in lowest terms, and u <= v are the roots of w^2 - (u+v) w + uv.
    """
    cap = 1
    out = []
    for xi in reversed([Fraction(x) for x in xis]):
        q = cap * xi
        total, product = q.numerator, q.denominator
        disc = total * total - 4 * product
        root = isqrt(disc) if disc >= 0 else -1
        if root < 0 or root * root != disc or (total - root) % 2:
            raise NotInteger(f"{xi} is not 1/a + 1/b for integers with the known cap {cap}")
        u, v = (total - root) // 2, (total + root) // 2
        out.append((cap * u, cap * v))
        cap *= u
    return tuple(reversed(out))


def _positive_integer(x: Fraction) -> int | None:
    return int(x) if x.denominator == 1 and x > 0 else None


def order_from_three_smallest(xi, psi, zeta) -> int:
    xi, psi, zeta = Fraction(xi), Fraction(psi), Fraction(zeta)
    if not 0 < xi < psi < zeta:
        raise NotInteger(f"need 0 < {xi} < {psi} < {zeta}")
    if 6 * xi == 10 * psi - 5 * zeta:
        candidate = 5 / (3 * xi)
    else:
        gap = 2 * xi - psi
        if gap <= 0:
            raise NotInteger(f"2*{xi} - {psi} is not positive")
        candidate = 1 / gap
    order = _positive_integer(candidate)
    if order is None:
        raise NotInteger(f"order candidate {candidate} is not a positive integer")
    if (order == 1) != (xi > 1):
        raise NotInteger(f"order {order} contradicts smallest jump {xi}")
    if xi < 1 < zeta and order != 2:
        raise NotInteger(f"order {order} but the jumps straddle 1")
    return order


# the two configurations with fewer than three jumps below 1
_SHORT_PREFIXES = {
    (Fraction(5, 6),): (2, 1, 1),
    (Fraction(7, 10), Fraction(9, 10)): (2, 2, 1, 1),
}


def _integer_or_fail(step: str, x: Fraction, what: str) -> int:
    value = _positive_integer(x)
    if value is None:
        raise MalformedJumpSet(step, f"{what} = {x} is not a positive integer")
    return value


def multiplicities_from_jumps_below_one(below: Iterable) -> tuple[int, ...]:
    """Multiplicities up to the last terminal satellite from the jumps in (0, 1).

    Returns ``(1,)`` when there are no jumps below 1.
    """
    below = sorted({Fraction(x) for x in below})
    if any(not 0 < x < 1 for x in below):
        raise MalformedJumpSet("below-one", "values must lie strictly between 0 and 1")
    if not below:
        return (1,)
    if len(below) < 3:
        prefix = _SHORT_PREFIXES.get(tuple(below))
        if prefix is None:
            raise MalformedJumpSet(
                "short-prefix", f"{len(below)} jumps below 1 must be {'5/6' if len(below) == 1 else '7/10, 9/10'}"
            )
        return prefix

    try:
        a0 = order_from_three_smallest(*below[:3])
    except NotInteger as exc:
        raise MalformedJumpSet("order", str(exc)) from exc
    b0 = _integer_or_fail("pairs", 1 / (below[0] - Fraction(1, a0)), "b_0")
    pairs = [(a0, b0)]
    while True:
        a_prev, b_prev = pairs[-1]
        a_k = gcd(a_prev, b_prev)
        if a_k == 1:
            break
        if a_k == a_prev:
            raise MalformedJumpSet("pairs", f"gcd({a_prev}, {b_prev}) does not drop")
        threshold = Fraction(1, a_k)
        above = [x for x in below if x >= threshold]
        if not above:
            raise MalformedJumpSet("pairs", f"no jump at or above 1/{a_k}")
        b_k = _integer_or_fail("pairs", 1 / (above[0] - threshold), f"b for multiplicity {a_k}")
        pairs.append((a_k, b_k))

    exponents = []
    previous = pairs[0][0] ** 2
    for a_k, b_k in pairs:
        excess = a_k * b_k - previous
        if excess <= 0 or excess % a_k:
            raise MalformedJumpSet("exponents", f"pair ({a_k}, {b_k}) gives no valid increment")
        exponents.append(1 + Fraction(excess // a_k, a_k))
        previous = a_k * b_k
    exponents.append(Fraction(1))
    try:
        return point_basis_from_puiseux(exponents).a
    except (Inconsistent, ValidationError) as exc:
        raise MalformedJumpSet("exponents", str(exc)) from exc


def invert_jumping_numbers(jumps: Iterable) -> PointBasis:
    """Point basis from the complete list of jumping numbers in (0, 2]."""
    values = sorted({Fraction(x) for x in jumps})
    if not values or values[0] <= 0:
        raise MalformedJumpSet("input", "jumping numbers must be positive")
    if 2 not in values:
        raise MalformedJumpSet("input", "2 is always a jumping number; the list must cover (0, 2]")
    if 1 in values:
        raise MalformedJumpSet("input", "1 is never a jumping number")
    above = [x for x in values if x > 1]
    e = _integer_or_fail("multiplicity", 1 / (above[0] - 1), "1/(first jump above 1 - 1)")
    below = [x for x in values if x < 1]
    prefix = multiplicities_from_jumps_below_one(below)
    if not below:
        a = (1,) * e
    else:
        tail = e + 1 / (below[-1] - 1)
        if tail.denominator != 1 or tail < 0:
            raise MalformedJumpSet("tail", f"number of trailing free points {tail} is not a natural number")
        a = prefix + (1,) * int(tail)
    try:
        basis = validate_point_basis(a)
    except ValidationError as exc:
        raise MalformedJumpSet("tail", str(exc)) from exc
    top = values[-1]
    if jump_values(generators(basis), top) != values:
        raise MalformedJumpSet("verify", f"{basis.a} does not reproduce the given jumps")
    return basis
