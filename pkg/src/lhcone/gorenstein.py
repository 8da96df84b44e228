"""Gorenstein decisions for lecture hall cones and simple triangular cones.

The cone of a positive sequence s is cut out by x_1/s_1 >= 0 and
x_j/s_j - x_{j-1}/s_{j-1} >= 0; it is Gorenstein exactly when one integer
point c satisfies c_1 = 1 and c_j*s_{j-1} = c_{j-1}*s_j + gcd(s_j, s_{j-1})
for 2 <= j <= n.  The decision runs that recursion and reports either the
point or the first index where integrality breaks, with the rational value
that was forced there.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import floor, gcd, lcm

from .sequences import generate_from_u, generate_kl, generate_recurrence


class SingularMatrixError(ValueError):
    pass


@dataclass(frozen=True)
class GorensteinResult:
    point: tuple | None
    fails_at: int | None
    witness: Fraction | None

    @property
    def gorenstein(self):
        return self.point is not None


def _check_positive(s):
    if len(s) < 1 or any(x < 1 for x in s):
        raise ValueError("need a nonempty positive sequence")


def lecture_hall_gorenstein(s):
    """Decide the Gorenstein property of the cone of s by the index recursion.

    c_1 = 1 and c_j = (c_{j-1}*s_j + gcd(s_j, s_{j-1})) / s_{j-1}; the cone
    is Gorenstein iff every c_j is an integer, and then (c_1, ..., c_n) is
    the Gorenstein point.
    """
    _check_positive(s)
    c = [1]
    for j in range(2, len(s) + 1):
        num = c[-1] * s[j - 1] + gcd(s[j - 1], s[j - 2])
        q, r = divmod(num, s[j - 2])
        if r:
            return GorensteinResult(None, j, Fraction(num, s[j - 2]))
        c.append(q)
    return GorensteinResult(tuple(c), None, None)


def gorenstein_fail_index(l, b, horizon):
    """Smallest n <= horizon where the (l, b) cone stops being Gorenstein.

    Returns None if no failure shows up through the horizon.  A returned
    index certifies failure for every larger dimension as well: once the
    recursion leaves the integers it never comes back.
    """
    if horizon < 1:
        raise ValueError(f"need horizon >= 1, got {horizon}")
    s = generate_recurrence(l, b, horizon)
    c = 1
    for j in range(2, horizon + 1):
        num = c * s[j - 1] + gcd(s[j - 1], s[j - 2])
        q, r = divmod(num, s[j - 2])
        if r:
            return j
        c = q
    return None


def ell_sequence_point(l, n):
    """Closed-form Gorenstein point (s_1, s_1+s_2, ..., s_{n-1}+s_n) for ell:l."""
    s = generate_kl(l, l, n)
    return tuple([s[0]] + [s[i - 1] + s[i] for i in range(1, n)])


def u_generated_point(u, n, s1=1):
    """Gorenstein point of a u-generated sequence: c_1 = 1, c_2 = u_1,
    c_{i+1} = u_i*c_i - c_{i-1}.

    The sequence itself must exist and stay positive through n (validated by
    generating it, first term s1); the resulting point is checked against
    the index recursion identities.
    """
    s = generate_from_u(u, s1, n)
    c = [1]
    if n >= 2:
        c.append(u[0])
    for i in range(2, n):
        c.append(u[i - 1] * c[-1] - c[-2])
    for j in range(2, n + 1):
        assert c[j - 1] * s[j - 2] == c[j - 2] * s[j - 1] + gcd(s[j - 1], s[j - 2])
    return tuple(c)


@dataclass(frozen=True)
class TriangularCone:
    """A simple cone cut out by a lower-triangular matrix of rational rows
    with positive diagonal entries."""

    rows: tuple

    def __post_init__(self):
        n = len(self.rows)
        norm = []
        for i, row in enumerate(self.rows):
            row = tuple(Fraction(x) for x in row)
            if len(row) != n:
                raise ValueError(f"row {i + 1} has {len(row)} entries, expected {n}")
            if row[i] <= 0:
                raise ValueError(f"diagonal entry {i + 1} must be positive, got {row[i]}")
            if any(row[j] != 0 for j in range(i + 1, n)):
                raise ValueError(f"row {i + 1} has nonzero entries above the diagonal")
            norm.append(row)
        object.__setattr__(self, "rows", tuple(norm))


def lecture_hall_cone(s):
    """The triangular inequality matrix of the cone of s."""
    _check_positive(s)
    n = len(s)
    rows = []
    for j in range(1, n + 1):
        row = [Fraction(0)] * n
        row[j - 1] = Fraction(1, s[j - 1])
        if j > 1:
            row[j - 2] = Fraction(-1, s[j - 2])
        rows.append(tuple(row))
    return TriangularCone(tuple(rows))


def greedy_interior_point(cone):
    """Coordinatewise-minimal integer point with every row value positive.

    Rows are triangular, so row i constrains only c_1..c_i and the minimal
    admissible c_i is floor(R_i) + 1 with R_i the value that would make the
    row vanish.  On a Gorenstein cone this greedy point is the Gorenstein
    point.
    """
    c = []
    for i, row in enumerate(cone.rows):
        partial = sum((row[j] * c[j] for j in range(i)), Fraction(0))
        c.append(floor(-partial / row[i]) + 1)
    return tuple(c)


def simple_cone_gorenstein(rows):
    """Gorenstein decision for any full-dimensional simple cone.

    Row j of the (invertible) matrix spans a rank-1 lattice of values on
    integer vectors; its positive generator is q_j = gcd(L*row entries)/L
    over a common denominator L.  The cone is Gorenstein iff the solution
    of A*c = (q_1, ..., q_n) is an integer vector, and then c is the
    Gorenstein point.
    """
    A = [list(map(Fraction, row)) for row in rows]
    n = len(A)
    if n == 0 or any(len(row) != n for row in A):
        raise ValueError("need a nonempty square matrix")
    q = []
    for i, row in enumerate(A):
        L = lcm(*(x.denominator for x in row))
        g = gcd(*(int(x * L) for x in row))
        if g == 0:
            raise SingularMatrixError(f"row {i + 1} is zero")
        q.append(Fraction(g, L))
    c = _solve_exact(A, q)
    for i, x in enumerate(c):
        if x.denominator != 1:
            return GorensteinResult(None, i + 1, x)
    return GorensteinResult(tuple(int(x) for x in c), None, None)


def _solve_exact(A, rhs):
    # Gaussian elimination over Fraction, first-nonzero pivoting
    n = len(A)
    M = [row[:] + [rhs[i]] for i, row in enumerate(A)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if M[r][col] != 0), None)
        if pivot is None:
            raise SingularMatrixError("matrix is singular")
        M[col], M[pivot] = M[pivot], M[col]
        for r in range(col + 1, n):
            if M[r][col]:
                factor = M[r][col] / M[col][col]
                for j in range(col, n + 1):
                    M[r][j] -= factor * M[col][j]
    x = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        acc = M[i][n] - sum((M[i][j] * x[j] for j in range(i + 1, n)), Fraction(0))
        x[i] = acc / M[i][i]
    return x


def parse_matrix(text):
    """Parse a matrix from text: one row per line, entries 'p/q' or integers,
    whitespace-separated.  Blank lines are skipped."""
    rows = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        row = []
        for token in line.split():
            try:
                row.append(Fraction(token))
            except (ValueError, ZeroDivisionError):
                raise ValueError(f"line {lineno}: bad entry '{token}'") from None
        rows.append(tuple(row))
    if not rows:
        raise ValueError("matrix text holds no rows")
    width = len(rows[0])
    for lineno, row in enumerate(rows, start=1):
        if len(row) != width:
            raise ValueError(f"row {lineno} has {len(row)} entries, expected {width}")
    return tuple(rows)
