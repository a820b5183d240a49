"""Exact integer lattices: canonical HNF, membership, LLL, enumeration.

Everything here is exact.  Bases are kept in a canonical column Hermite
normal form (pivot rows strictly increasing, pivots positive, entries to the
left of each pivot reduced into [0, pivot)), so two lattices are equal iff
their stored bases are identical tuples.  LLL runs on exact rationals
(``fractions.Fraction``); shortest vectors come from a plain Fincke-Pohst
depth-first enumeration with no pruning heuristics, guarded by an explicit
node budget.  Floating point appears nowhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Callable, Iterable, Optional, Sequence

from .errors import (
    DimensionMismatch,
    EnumerationBudgetExceeded,
    ZeroRank,
)

__all__ = [
    "IntVec",
    "GeneratingSet",
    "Lattice",
    "ShortVectorReport",
    "Determinant",
    "hnf",
    "contains",
    "determinant",
    "lll_reduce",
    "shortest_vectors",
    "vectors_up_to",
    "lp_norm",
    "lp_power_sum_cmp",
    "lattices_equal",
    "scale",
    "adjugate_solve",
    "iroot",
    "DEFAULT_DELTA",
    "DEFAULT_BUDGET",
]

IntVec = tuple[int, ...]

DEFAULT_DELTA = Fraction(99, 100)
DEFAULT_BUDGET = 10**9


@dataclass(frozen=True)
class GeneratingSet:
    """Ambient dimension plus integer generator columns (possibly dependent)."""

    n: int
    columns: tuple[IntVec, ...]

    def __post_init__(self):
        for c in self.columns:
            if len(c) != self.n:
                raise DimensionMismatch(f"column length {len(c)} != ambient {self.n}")


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, x, y) with g = gcd(a, b) >= 0 and a*x + b*y = g."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def _hnf_columns(n: int, columns: Iterable[Sequence[int]]) -> tuple[tuple[IntVec, ...], tuple[int, ...]]:
    """Canonical column HNF of the integer span of ``columns``.

    Returns (basis, pivot_rows).  Zero columns are dropped; the basis is in
    echelon order with positive pivots and entries left of each pivot
    reduced into [0, pivot).
    """
    piv: dict[int, list[int]] = {}  # pivot row -> column
    for col in columns:
        v = list(col)
        r = 0
        while r < n:
            if v[r] == 0:
                r += 1
                continue
            u = piv.get(r)
            if u is None:
                piv[r] = v
                break
            a, b = u[r], v[r]
            g, x, y = _xgcd(a, b)
            aa, bb = a // g, b // g
            piv[r] = [x * u[t] + y * v[t] for t in range(n)]
            v = [aa * v[t] - bb * u[t] for t in range(n)]
            # v[r] is now exactly 0; keep walking down
            r += 1
    order = sorted(piv)
    basis = [piv[r] for r in order]
    for j, r in enumerate(order):
        if basis[j][r] < 0:
            basis[j] = [-e for e in basis[j]]
    # canonical reduction: in each pivot row, entries of earlier columns
    # land in [0, pivot).  Processing pivot rows top-down is safe because
    # reducing by column j only touches rows >= its pivot row.
    for j in range(len(order)):
        pj = order[j]
        d = basis[j][pj]
        for i in range(j):
            q = basis[i][pj] // d
            if q:
                bj = basis[j]
                basis[i] = [basis[i][t] - q * bj[t] for t in range(n)]
    return tuple(tuple(c) for c in basis), tuple(order)


class Lattice:
    """Integer lattice with a canonical HNF basis.

    Construct via :func:`hnf` or :meth:`from_generators`; direct instances
    must already be canonical.
    """

    __slots__ = ("n", "basis", "pivots", "_gram")

    def __init__(self, n: int, basis: tuple[IntVec, ...], pivots: tuple[int, ...]) -> None:
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "pivots", pivots)
        object.__setattr__(self, "_gram", None)

    def __setattr__(self, name, value):  # pragma: no cover - guard only
        raise AttributeError("Lattice is immutable")

    @classmethod
    def from_generators(cls, n: int, columns: Iterable[Sequence[int]]) -> "Lattice":
        basis, pivots = _hnf_columns(n, columns)
        return cls(n, basis, pivots)

    @property
    def rank(self) -> int:
        return len(self.basis)

    def gram(self) -> tuple[tuple[int, ...], ...]:
        """Exact Gram matrix of the basis columns (cached)."""
        if self._gram is None:
            b = self.basis
            r = len(b)
            g = tuple(
                tuple(sum(b[i][t] * b[j][t] for t in range(self.n)) for j in range(r))
                for i in range(r)
            )
            object.__setattr__(self, "_gram", g)
        return self._gram

    def contains(self, v: Sequence[int]) -> bool:
        if len(v) != self.n:
            raise DimensionMismatch(f"vector length {len(v)} != ambient {self.n}")
        w = list(v)
        row_of = {r: j for j, r in enumerate(self.pivots)}
        for r in range(self.n):
            if w[r] == 0:
                continue
            j = row_of.get(r)
            if j is None:
                return False
            d = self.basis[j][r]
            if w[r] % d:
                return False
            q = w[r] // d
            col = self.basis[j]
            for t in range(r, self.n):
                w[t] -= q * col[t]
        return True

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Lattice)
            and self.n == other.n
            and self.basis == other.basis
        )

    def __hash__(self) -> int:
        return hash((self.n, self.basis))

    def __repr__(self) -> str:
        return f"Lattice(n={self.n}, rank={self.rank})"


def hnf(G: GeneratingSet) -> Lattice:
    """Canonical lattice for a generating set (column HNF span)."""
    return Lattice.from_generators(G.n, G.columns)


def contains(L: Lattice, v: Sequence[int]) -> bool:
    """Exact membership through HNF back-substitution."""
    return L.contains(v)


@dataclass(frozen=True)
class Determinant:
    """Exact lattice determinant.

    ``squared`` False: ``value`` = det(L) (an integer for these lattices).
    ``squared`` True: det(Gram) is not a perfect square; ``value`` holds it
    and det(L) = sqrt(value).
    """

    value: int
    squared: bool

    def __str__(self) -> str:
        return f"sqrt({self.value})" if self.squared else str(self.value)


def _int_det(M: list[list[int]]) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    a = [row[:] for row in M]
    n = len(a)
    sign = 1
    prev = 1
    for i in range(n - 1):
        if a[i][i] == 0:
            for r in range(i + 1, n):
                if a[r][i]:
                    a[i], a[r] = a[r], a[i]
                    sign = -sign
                    break
            else:
                return 0
        for r in range(i + 1, n):
            for c in range(i + 1, n):
                a[r][c] = (a[r][c] * a[i][i] - a[r][i] * a[i][c]) // prev
            a[r][i] = 0
        prev = a[i][i]
    return sign * a[n - 1][n - 1]


def determinant(L: Lattice) -> Determinant:
    """det(L), exact.  Product of HNF pivots when L has full rank."""
    if L.rank == 0:
        raise ZeroRank("determinant of a rank-0 lattice")
    if L.rank == L.n:
        d = 1
        for j, r in enumerate(L.pivots):
            d *= L.basis[j][r]
        return Determinant(d, squared=False)
    g = [list(row) for row in L.gram()]
    dg = _int_det(g)
    s = isqrt(dg)
    if s * s == dg:
        return Determinant(s, squared=False)
    return Determinant(dg, squared=True)


# ---------------------------------------------------------------------------
# exact Gram-Schmidt and LLL
# ---------------------------------------------------------------------------

def _gso(cols: Sequence[Sequence[int]]) -> tuple[list[list[Fraction]], list[Fraction]]:
    """Exact Gram-Schmidt data (mu, squared norms) for independent columns."""
    m = len(cols)
    n = len(cols[0]) if m else 0
    mu = [[Fraction(0)] * m for _ in range(m)]
    B = [Fraction(0)] * m
    bstar: list[list[Fraction]] = []
    for i in range(m):
        v = [Fraction(x) for x in cols[i]]
        for j in range(i):
            num = Fraction(0)
            cj = bstar[j]
            ci = cols[i]
            for t in range(n):
                if cj[t]:
                    num += ci[t] * cj[t]
            mij = num / B[j]
            mu[i][j] = mij
            if mij:
                v = [v[t] - mij * cj[t] for t in range(n)]
        bstar.append(v)
        B[i] = sum(x * x for x in v)
        mu[i][i] = Fraction(1)
    return mu, B


def lll_reduce(L: Lattice, delta: Fraction = DEFAULT_DELTA) -> list[IntVec]:
    """LLL-reduced basis of L with exact rational arithmetic.

    Returns basis columns (size-reduced, Lovasz condition with the given
    delta).  Deterministic; the input lattice object is not modified.
    """
    delta = Fraction(delta)
    if not Fraction(1, 4) < delta < 1:
        raise ValueError("delta must satisfy 1/4 < delta < 1")
    m = L.rank
    if m <= 1:
        return [tuple(c) for c in L.basis]
    n = L.n
    basis = [list(c) for c in L.basis]
    mu, B = _gso(basis)
    half = Fraction(1, 2)

    def size_reduce(k: int, j: int) -> None:
        mkj = mu[k][j]
        if mkj > half or mkj < -half:
            q = (mkj + half).__floor__()
            if q:
                bj = basis[j]
                bk = basis[k]
                for t in range(n):
                    bk[t] -= q * bj[t]
                mu[k][j] -= q
                mrow_k, mrow_j = mu[k], mu[j]
                for i in range(j):
                    if mrow_j[i]:
                        mrow_k[i] -= q * mrow_j[i]

    k = 1
    while k < m:
        for j in range(k - 1, -1, -1):
            size_reduce(k, j)
        if B[k] >= (delta - mu[k][k - 1] ** 2) * B[k - 1]:
            k += 1
            continue
        basis[k - 1], basis[k] = basis[k], basis[k - 1]
        mu_old = mu[k][k - 1]
        Bnew = B[k] + mu_old * mu_old * B[k - 1]
        mu[k][k - 1] = mu_old * B[k - 1] / Bnew
        B[k] = B[k - 1] * B[k] / Bnew
        B[k - 1] = Bnew
        for j in range(k - 1):
            mu[k - 1][j], mu[k][j] = mu[k][j], mu[k - 1][j]
        for i in range(k + 1, m):
            t = mu[i][k]
            mu[i][k] = mu[i][k - 1] - mu_old * t
            mu[i][k - 1] = t + mu[k][k - 1] * mu[i][k]
        k = max(k - 1, 1)
    return [tuple(c) for c in basis]


# ---------------------------------------------------------------------------
# Fincke-Pohst enumeration
# ---------------------------------------------------------------------------

class _Budget:
    __slots__ = ("left", "total")

    def __init__(self, total: int) -> None:
        self.left = total
        self.total = total

    def spend(self) -> None:
        self.left -= 1
        if self.left < 0:
            raise EnumerationBudgetExceeded(self.total)


def _coeff_interval(c: Fraction, t: Fraction) -> tuple[int, int]:
    """All integers x with (x - c)^2 <= t, as [lo, hi]; empty iff lo > hi.

    Exact: the predicate is evaluated by cross-multiplication, and if the
    interval holds any integer it holds the integer nearest to c.
    """
    if t < 0:
        return 1, 0
    p, q = c.numerator, c.denominator
    u, v = t.numerator, t.denominator
    uqq = u * q * q

    def ok(x: int) -> bool:
        d = x * q - p
        return d * d * v <= uqq

    x0 = (2 * p + q) // (2 * q)
    if not ok(x0):
        return 1, 0
    lo = hi = x0
    while ok(hi + 1):
        hi += 1
    while ok(lo - 1):
        lo -= 1
    return lo, hi


def _enumerate(
    basis: Sequence[IntVec],
    mu: list[list[Fraction]],
    B: list[Fraction],
    radius,
    budget: _Budget,
    visit: Callable[[tuple[int, ...], int], None],
    shrink: bool = False,
) -> int:
    """Depth-first sweep of all coefficient vectors with norm^2 <= radius.

    ``visit(coeffs, norm_sq)`` fires at every leaf inside the radius (the
    zero vector included).  With ``shrink`` the radius tightens to the
    smallest nonzero norm seen so far, turning the sweep into an exact
    shortest-vector search.  Returns the final radius.
    """
    m = len(basis)
    x = [0] * m
    state = [Fraction(radius)]
    # per-level nonzero-mu column lists keep the center updates sparse
    nz = [[j for j in range(i) if mu[i][j]] for i in range(m)]

    def rec(i: int, rho: Fraction, acc: list[Fraction]) -> None:
        if i < 0:
            norm = rho
            if shrink and norm and norm < state[0]:
                state[0] = norm
            visit(tuple(x), int(norm))
            return
        c = -acc[i]
        t = (state[0] - rho) / B[i]
        lo, hi = _coeff_interval(c, t)
        for xi in range(lo, hi + 1):
            budget.spend()
            d = xi - c
            rho2 = rho + d * d * B[i]
            if rho2 > state[0]:
                continue
            x[i] = xi
            if xi:
                acc2 = acc[:i]
                mrow = mu[i]
                for j in nz[i]:
                    acc2[j] += xi * mrow[j]
            else:
                acc2 = acc[:i]
            rec(i - 1, rho2, acc2)
        x[i] = 0

    rec(m - 1, Fraction(0), [Fraction(0)] * m)
    return int(state[0])


def _combine(basis: Sequence[IntVec], coeffs: Sequence[int], n: int) -> IntVec:
    v = [0] * n
    for xi, col in zip(coeffs, basis):
        if xi:
            for t in range(n):
                v[t] += xi * col[t]
    return tuple(v)


@dataclass(frozen=True)
class ShortVectorReport:
    """Exact shortest-vector data: squared length, kissing number, full set.

    ``kissing`` counts signed vectors (v and -v separately); ``vectors``
    is canonically ordered (ascending lexicographic).
    """

    lambda1_sq: int
    kissing: int
    vectors: tuple[IntVec, ...]

    def to_dict(self) -> dict:
        return {
            "lambda1_sq": self.lambda1_sq,
            "kissing": self.kissing,
            "vectors": [list(v) for v in self.vectors],
        }


def shortest_vectors(
    L: Lattice, budget: int = DEFAULT_BUDGET, delta: Fraction = DEFAULT_DELTA
) -> ShortVectorReport:
    """Exact lambda_1^2 and the complete set of vectors achieving it.

    Fincke-Pohst after LLL(99/100); the initial radius is the smallest
    basis-vector norm, then a shrinking pass finds the exact minimum and a
    second pass collects every vector at that norm.
    """
    if L.rank == 0:
        raise ZeroRank("shortest vector of a rank-0 lattice")
    reduced = lll_reduce(L, delta)
    mu, B = _gso(reduced)
    bud = _Budget(budget)
    r0 = min(sum(e * e for e in col) for col in reduced)
    lam = _enumerate(reduced, mu, B, r0, bud, lambda c, nrm: None, shrink=True)
    found: list[IntVec] = []

    def collect(coeffs: tuple[int, ...], norm: int) -> None:
        if norm == lam and any(coeffs):
            found.append(_combine(reduced, coeffs, L.n))

    _enumerate(reduced, mu, B, lam, bud, collect, shrink=False)
    found.sort()
    return ShortVectorReport(lambda1_sq=lam, kissing=len(found), vectors=tuple(found))


def vectors_up_to(
    L: Lattice, R: int, budget: int = DEFAULT_BUDGET, delta: Fraction = DEFAULT_DELTA
) -> list[IntVec]:
    """All lattice vectors with squared norm <= R (zero vector included)."""
    if R < 0:
        raise ValueError("radius must be >= 0")
    if L.rank == 0:
        return [(0,) * L.n]
    reduced = lll_reduce(L, delta)
    mu, B = _gso(reduced)
    bud = _Budget(budget)
    out: list[tuple[int, IntVec]] = []

    def collect(coeffs: tuple[int, ...], norm: int) -> None:
        out.append((norm, _combine(reduced, coeffs, L.n)))

    _enumerate(reduced, mu, B, R, bud, collect, shrink=False)
    out.sort()
    return [v for _, v in out]


# ---------------------------------------------------------------------------
# norms and exact l_p comparisons
# ---------------------------------------------------------------------------

def lp_norm(v: Sequence[int], p) -> int | float:
    """Sigma |v_i|^p, reported as the p-th power (no roots taken).

    Exact integer for integral p >= 1; for fractional p the return value is
    a float and only informational; use :func:`lp_power_sum_cmp` for exact
    comparisons.
    """
    pf = Fraction(p)
    if pf < 1:
        raise ValueError("p must be >= 1")
    if pf.denominator == 1:
        e = pf.numerator
        return sum(abs(x) ** e for x in v)
    return float(sum(abs(x) ** float(pf) for x in v))


def iroot(x: int, k: int) -> int:
    """floor(x ** (1/k)) for x >= 0, k >= 1, exact (Newton on integers)."""
    if x < 0 or k < 1:
        raise ValueError("iroot needs x >= 0, k >= 1")
    if x == 0 or k == 1:
        return x
    r = 1 << (-(-x.bit_length() // k))  # upper-bound seed
    while True:
        nr = ((k - 1) * r + x // r ** (k - 1)) // k
        if nr >= r:
            break
        r = nr
    while r ** k > x:
        r -= 1
    return r


def lp_power_sum_cmp(entries: Sequence[int], p, threshold) -> int:
    """Exact sign of (Sigma |e_i|^p) - threshold for rational p >= 1.

    Brackets each irrational term between dyadic rationals of increasing
    precision; terminates because a sum of real radicals of integers can
    only equal the rational threshold when every term is itself rational.
    """
    pf = Fraction(p)
    if pf < 1:
        raise ValueError("p must be >= 1")
    thr = Fraction(threshold)
    u, v = pf.numerator, pf.denominator
    powers = [abs(int(e)) ** u for e in entries if e]
    if v == 1:
        s = sum(powers)
        return (s > thr) - (s < thr)
    prec = 16
    while True:
        shift = prec * v
        lo = 0
        hi = 0
        all_exact = True
        for P in powers:
            val = P << shift
            r = iroot(val, v)
            lo += r
            if r**v == val:
                hi += r
            else:
                hi += r + 1
                all_exact = False
        # S in [lo, hi] / 2^prec ; compare against thr
        lhs_lo = lo * thr.denominator
        lhs_hi = hi * thr.denominator
        rhs = thr.numerator << prec
        if lhs_lo > rhs:
            return 1
        if lhs_hi < rhs:
            return -1
        if all_exact and lhs_lo == rhs:
            return 0
        prec *= 2


def lattices_equal(L1: Lattice, L2: Lattice) -> bool:
    """True iff the canonical HNF bases coincide."""
    if L1.n != L2.n:
        raise DimensionMismatch(f"{L1.n} != {L2.n}")
    return L1 == L2


def scale(L: Lattice, s: int) -> Lattice:
    """The lattice s*L for a positive integer s."""
    if s < 1:
        raise ValueError("scale factor must be a positive integer")
    return Lattice.from_generators(L.n, [tuple(s * e for e in col) for col in L.basis])


def adjugate_solve(L: Lattice, v: Sequence[int]) -> tuple[int, list[int]]:
    """For full-rank L: (D, X) with H X = D v, D = det(L), X integral.

    Since X = D * H^{-1} v, the vector v lies in L iff every X_i is
    divisible by D.  This turns batches of membership tests into cheap
    modular updates (used by the sign-pattern search).
    """
    if L.rank != L.n:
        raise ZeroRank("adjugate solve needs a full-rank lattice")
    if len(v) != L.n:
        raise DimensionMismatch(f"vector length {len(v)} != ambient {L.n}")
    n = L.n
    D = determinant(L).value
    X = [0] * n
    for r in range(n):
        acc = D * v[r]
        for c in range(r):
            h = L.basis[c][r]
            if h and X[c]:
                acc -= h * X[c]
        d = L.basis[r][r]
        q, rem = divmod(acc, d)
        if rem:
            raise ArithmeticError("adjugate solve lost integrality (bug)")
        X[r] = q
    return D, X
