"""Point bases, proximity matrices and the terminal-satellite structure.

All public indices are 1-based.  Vectors are stored as tuples with
position ``i - 1`` holding the ``i``-th coordinate.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Sequence

from .errors import (
    Inconsistent,
    InconsistentProximity,
    IndexOutOfRange,
    NotPositive,
    NotSimple,
)


def _proximity_reach(a: Sequence[int]) -> list[int]:
    """For each i < n the k with a_i = a_{i+1} + ... + a_k, 1-based.

    Entry n is n itself (nothing is proximate to the last point).
    """
    n = len(a)
    reach = []
    for i in range(n - 1):
        total = 0
        k = i
        while total < a[i] and k + 1 < n:
            k += 1
            total += a[k]
        if total != a[i]:
            raise NotSimple(
                f"a_{i + 1} = {a[i]} is not a sum a_{i + 2} + ... + a_k of later multiplicities"
            )
        reach.append(k + 1)
    reach.append(n)
    return reach


@dataclass(frozen=True)
class PointBasis:
    """Multiplicity vector (a_1, ..., a_n) of a simple complete ideal.

    Construct through :func:`validate_point_basis`; the derived data below is
    computed lazily and cached.
    """

    a: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.a)

    def __getitem__(self, i: int) -> int:
        if not 1 <= i <= self.n:
            raise IndexOutOfRange(f"index {i} outside 1..{self.n}")
        return self.a[i - 1]

    def __iter__(self):
        return iter(self.a)

    def __len__(self):
        return len(self.a)

    @cached_property
    def reach(self) -> tuple[int, ...]:
        return tuple(_proximity_reach(self.a))

    @cached_property
    def proximity(self) -> ProximityMatrix:
        return proximity_from_point_basis(self)

    @cached_property
    def rows(self) -> tuple[tuple[int, ...], ...]:
        return invert_proximity(self.proximity)

    @cached_property
    def structure(self) -> GammaStructure:
        return classify(self.proximity)

    @cached_property
    def self_intersection(self) -> int:
        return sum(x * x for x in self.a)


def validate_point_basis(raw: Sequence[int]) -> PointBasis:
    """Check the simple-ideal conditions and return a :class:`PointBasis`."""
    a = tuple(raw)
    if not a:
        raise NotSimple("empty point basis")
    for i, x in enumerate(a, 1):
        if isinstance(x, bool) or not isinstance(x, int):
            raise NotSimple(f"a_{i} = {x!r} is not an integer")
        if x <= 0:
            raise NotPositive(f"a_{i} = {x} is not positive")
    if a[-1] != 1:
        raise NotSimple(f"last multiplicity a_{len(a)} = {a[-1]} must be 1")
    for i in range(len(a) - 1):
        if a[i] < a[i + 1]:
            raise NotSimple(f"a_{i + 1} < a_{i + 2}: multiplicities must not increase")
    reach = _proximity_reach(a)
    # each point may lie on at most two earlier exceptional curves
    hits = [[] for _ in a]
    for i, k in enumerate(reach, 1):
        for j in range(i + 1, k + 1):
            hits[j - 1].append(i)
    for j, sources in enumerate(hits, 1):
        if len(sources) > 2:
            raise InconsistentProximity(
                f"point {j} would be proximate to {len(sources)} earlier points {sources}"
            )
    return PointBasis(a)


@dataclass(frozen=True)
class ProximityMatrix:
    """Lower unitriangular matrix with -1 at (i, j) whenever i is proximate to j."""

    p: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return len(self.p)

    def entry(self, i: int, j: int) -> int:
        return self.p[i - 1][j - 1]

    def proximate_to(self, i: int) -> list[int]:
        """Earlier points j with i proximate to j."""
        return [j for j in range(1, i) if self.p[i - 1][j - 1] == -1]

    def transpose_product(self) -> tuple[tuple[int, ...], ...]:
        """P^T P, the negated intersection matrix of the exceptional curves."""
        n = self.n
        p = self.p
        return tuple(
            tuple(sum(p[k][i] * p[k][j] for k in range(n)) for j in range(n))
            for i in range(n)
        )

    @classmethod
    def from_pairs(cls, n: int, pairs) -> ProximityMatrix:
        """Build from (i, j) pairs meaning "i is proximate to j".

        Immediate predecessors are always proximate and may be omitted.
        """
        rows = [[0] * n for _ in range(n)]
        for i in range(n):
            rows[i][i] = 1
            if i:
                rows[i][i - 1] = -1
        for i, j in pairs:
            if not (1 <= j < i <= n):
                raise InconsistentProximity(f"pair {i}>{j} must satisfy 1 <= j < i <= {n}")
            rows[i - 1][j - 1] = -1
        matrix = cls(tuple(tuple(r) for r in rows))
        validate_proximity_matrix(matrix)
        return matrix


def validate_proximity_matrix(matrix: ProximityMatrix) -> None:
    n = matrix.n
    for i in range(1, n + 1):
        row = matrix.p[i - 1]
        if len(row) != n:
            raise InconsistentProximity("proximity matrix must be square")
        if row[i - 1] != 1:
            raise InconsistentProximity(f"diagonal entry ({i},{i}) must be 1")
        for j in range(1, n + 1):
            v = row[j - 1]
            if j > i and v != 0:
                raise InconsistentProximity(f"entry ({i},{j}) above the diagonal must be 0")
            if j < i and v not in (0, -1):
                raise InconsistentProximity(f"entry ({i},{j}) must be 0 or -1")
        if i >= 2 and row[i - 2] != -1:
            raise InconsistentProximity(f"point {i} must be proximate to point {i - 1}")
        targets = matrix.proximate_to(i)
        if len(targets) > 2:
            raise InconsistentProximity(f"point {i} is proximate to {len(targets)} points")
        for j in targets:
            if j < i - 1 and matrix.entry(i - 1, j) != -1:
                raise InconsistentProximity(
                    f"point {i} is proximate to {j} but point {i - 1} is not"
                )


def proximity_from_point_basis(b: PointBasis) -> ProximityMatrix:
    n = b.n
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        rows[i][i] = 1
    for i, k in enumerate(b.reach, 1):
        for j in range(i + 1, k + 1):
            rows[j - 1][i - 1] = -1
    return ProximityMatrix(tuple(tuple(r) for r in rows))


def invert_proximity(matrix: ProximityMatrix) -> tuple[tuple[int, ...], ...]:
    """Rows X_1, ..., X_n of the inverse, by forward substitution."""
    n = matrix.n
    rows: list[list[int]] = []
    for i in range(n):
        x = [0] * n
        x[i] = 1
        for j in range(i):
            if matrix.p[i][j] == -1:
                xj = rows[j]
                for k in range(j + 1):
                    x[k] += xj[k]
        rows.append(x)
    return tuple(tuple(r) for r in rows)


def point_basis_from_proximity(matrix: ProximityMatrix) -> PointBasis:
    validate_proximity_matrix(matrix)
    basis = validate_point_basis(invert_proximity(matrix)[-1])
    if basis.proximity != matrix:
        raise InconsistentProximity("matrix is not the proximity matrix of its bottom inverse row")
    return basis


@dataclass(frozen=True)
class GammaStructure:
    """Free/satellite classification and the run data of a point basis.

    ``gamma`` and ``tau`` carry the padded sequences gamma_0..gamma_{g+1} and
    tau_0..tau_{g+1}; ``runs[nu - 1]`` lists (s, r) pairs of segment nu and
    ``kappa[nu - 1]`` the cumulative indices kappa_{nu,0..m}.
    """

    n: int
    satellite: tuple[bool, ...]
    gamma: tuple[int, ...]
    tau: tuple[int, ...]
    runs: tuple[tuple[tuple[int, int], ...], ...]
    kappa: tuple[tuple[int, ...], ...]
    U: frozenset[int]

    @property
    def g(self) -> int:
        return len(self.gamma) - 2

    @property
    def terminal_satellites(self) -> tuple[int, ...]:
        return self.gamma[1:-1]

    @property
    def gamma_star(self) -> tuple[int, ...]:
        return tuple(x for x in self.terminal_satellites if x < self.n)

    @property
    def g_star(self) -> int:
        return len(self.gamma_star)

    @property
    def gamma_bar(self) -> tuple[int, ...]:
        """gamma_0, gamma_1..gamma_{g*}, n: the blocks of the jump set."""
        return (1,) + self.gamma_star + (self.n,)

    def is_free(self, i: int) -> bool:
        return not self.satellite[i - 1]

    @property
    def is_monomial(self) -> bool:
        return not self.gamma_star


def classify(matrix: ProximityMatrix) -> GammaStructure:
    n = matrix.n
    a = invert_proximity(matrix)[-1]
    satellite = tuple(any(j < i - 1 for j in matrix.proximate_to(i)) for i in range(1, n + 1))
    terminal = [
        i for i in range(1, n + 1) if satellite[i - 1] and (i == n or not satellite[i])
    ]
    tau = []
    for gam in terminal:
        t = gam
        while satellite[t - 1]:
            t -= 1
        tau.append(t)
    gamma = (1, *terminal, n)
    tau_ext = (1, *tau, n)

    runs = []
    kappa = []
    for nu in range(1, len(gamma)):
        lo, hi = gamma[nu - 1], gamma[nu]
        segment = a[lo - 1:hi]
        blocks: list[list[int]] = []
        for value in segment:
            if blocks and blocks[-1][0] == value:
                blocks[-1][1] += 1
            else:
                blocks.append([value, 1])
        blocks[-1][1] -= 1
        runs.append(tuple((s, r) for s, r in blocks))
        ks = [lo - 1]
        for _, r in blocks:
            ks.append(ks[-1] + r)
        kappa.append(tuple(ks))

    U = {n}
    for ks in kappa:
        for mu in range(1, len(ks), 2):
            U.update(range(ks[mu - 1] + 1, ks[mu] + 1))
    return GammaStructure(
        n=n,
        satellite=satellite,
        gamma=gamma,
        tau=tau_ext,
        runs=tuple(runs),
        kappa=tuple(kappa),
        U=frozenset(U),
    )


def puiseux_exponents(b: PointBasis) -> tuple[Fraction, ...]:
    gs = b.structure
    out = []
    for nu in range(1, gs.g + 2):
        start, stop = gs.gamma[nu - 1], gs.tau[nu]
        out.append(Fraction(sum(b.a[start - 1:stop]), b.a[start - 1]))
    return tuple(out)


def euclid_runs(dividend: int, divisor: int) -> list[tuple[int, int]]:
    """Euclidean division chain as (divisor, quotient) pairs.

    ``euclid_runs(9, 6)`` is ``[(6, 1), (3, 2)]``: six once, then three twice.
    """
    out = []
    while divisor:
        q, rem = divmod(dividend, divisor)
        out.append((divisor, q))
        dividend, divisor = divisor, rem
    return out


def continued_fraction(beta: Fraction) -> list[int]:
    """Partial quotients of a positive rational."""
    return [q for _, q in euclid_runs(beta.numerator, beta.denominator)]


def point_basis_from_puiseux(beta: Sequence[Fraction]) -> PointBasis:
    """Rebuild the multiplicities segment by segment, last segment first."""
    beta = [Fraction(x) for x in beta]
    if not beta:
        raise Inconsistent("need at least one exponent")
    for nu, x in enumerate(beta, 1):
        if x < 1:
            raise Inconsistent(f"exponent {nu} is {x}, below 1")
        if nu < len(beta) and x.denominator == 1:
            raise Inconsistent(f"exponent {nu} = {x} must not be an integer")
    if beta[-1].denominator != 1:
        raise Inconsistent(f"last exponent {beta[-1]} must be an integer")

    low = 1  # multiplicity at the right end of the current segment
    pieces = []
    for x in reversed(beta):
        s0, s1 = low * x.numerator, low * x.denominator
        seg = [v for v, q in euclid_runs(s0, s1) for _ in range(q)]
        if seg[-1] != low:
            raise Inconsistent(f"segment for {x} does not end at multiplicity {low}")
        pieces.append(seg)
        low = s1
    a = pieces[-1]
    for seg in reversed(pieces[:-1]):
        a = a + seg[1:]
    basis = validate_point_basis(a)
    if puiseux_exponents(basis) != tuple(beta):
        raise Inconsistent("exponents do not describe a consistent point basis")
    return basis


def rho(rows, gs: GammaStructure, i: int, nu: int) -> int:
    """Sum x_{i,j} for gamma_nu < j <= tau_{nu+1}; zero when i <= gamma_nu."""
    n = gs.n
    if not 1 <= i <= n:
        raise IndexOutOfRange(f"row {i} outside 1..{n}")
    if not 0 <= nu <= gs.g:
        raise IndexOutOfRange(f"block {nu} outside 0..{gs.g}")
    lo = gs.gamma[nu]
    if i <= lo:
        return 0
    return sum(rows[i - 1][lo:gs.tau[nu + 1]])


def truncated_dot(rows, i: int, j: int, lo: int = 1, hi: int | None = None) -> int:
    """Dot product of rows i and j restricted to coordinates lo..hi inclusive."""
    n = len(rows)
    if hi is None:
        hi = n
    for k in (i, j):
        if not 1 <= k <= n:
            raise IndexOutOfRange(f"row {k} outside 1..{n}")
    if not (1 <= lo and hi <= n):
        raise IndexOutOfRange(f"range {lo}..{hi} outside 1..{n}")
    xi, xj = rows[i - 1], rows[j - 1]
    return sum(xi[k] * xj[k] for k in range(lo - 1, hi))


def block_dot(rows, gs: GammaStructure, i: int, j: int, nu: int) -> int:
    """Rows i and j dotted over the half-open block (gamma_nu, gamma_{nu+1}]."""
    if not 0 <= nu <= gs.g:
        raise IndexOutOfRange(f"block {nu} outside 0..{gs.g}")
    lo, hi = gs.gamma[nu] + 1, gs.gamma[nu + 1]
    if lo > hi:
        return 0
    return truncated_dot(rows, i, j, lo, hi)
