"""Random and exhaustive generation of valid point bases."""

from __future__ import annotations

import random
from typing import Iterator

from .proximity import PointBasis, ProximityMatrix, point_basis_from_proximity

__all__ = ["all_point_bases", "basis_from_placements", "placement_options", "random_point_bases"]


def placement_options(i: int, target: dict[int, int]) -> list[int | None]:
    """Where point i may sit: free (None) or also on an older curve."""
    opts: list[int | None] = [None]
    if i >= 3:
        opts.append(i - 2)
        if (i - 1) in target and target[i - 1] != i - 2:
            opts.append(target[i - 1])
    return opts


def basis_from_placements(n: int, target: dict[int, int]) -> PointBasis:
    return point_basis_from_proximity(ProximityMatrix.from_pairs(n, target.items()))


def all_point_bases(n: int) -> Iterator[PointBasis]:
    """Every point basis with exactly n points."""

    def extend(i, target):
        if i > n:
            yield basis_from_placements(n, target)
            return
        for choice in placement_options(i, target):
            nxt = dict(target)
            if choice is not None:
                nxt[i] = choice
            yield from extend(i + 1, nxt)

    yield from extend(1, {})


def random_point_bases(n_max: int, a_max: int, count: int, seed: int) -> list[PointBasis]:
    """Distinct bases from randomly grown proximity trees, reproducible by seed.

    Returns fewer than ``count`` when the space is too small.
    """
    rng = random.Random(seed)
    seen: dict[tuple[int, ...], PointBasis] = {}
    attempts = 0
    while len(seen) < count and attempts < 50 * count:
        attempts += 1
        n = rng.randint(1, n_max)
        target: dict[int, int] = {}
        for i in range(1, n + 1):
            choice = rng.choice(placement_options(i, target))
            if choice is not None:
                target[i] = choice
        b = basis_from_placements(n, target)
        if b.a[0] <= a_max and b.a not in seen:
            seen[b.a] = b
    return list(seen.values())
