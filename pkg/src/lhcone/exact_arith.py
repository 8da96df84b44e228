"""Exact arithmetic kernel: dense integer polynomials and truncated power series.

A polynomial is a tuple of int coefficients indexed by degree with trailing
zeros stripped; the zero polynomial stores nothing and reports degree -inf.
A truncated series stores exactly M+1 coefficients for truncation degree M;
arithmetic on two series truncates to the smaller M.  Everything here is
immutable and pure, so values are safe to share across threads.
"""

from __future__ import annotations

NEG_INF = float("-inf")


class DensePoly:
    """Dense polynomial with exact integer coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("DensePoly is immutable")

    @property
    def degree(self):
        # -inf sentinel for the zero polynomial avoids special-casing callers
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def __bool__(self):
        return bool(self.coeffs)

    def __getitem__(self, m):
        if 0 <= m < len(self.coeffs):
            return self.coeffs[m]
        return 0

    def __eq__(self, other):
        if not isinstance(other, DensePoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return DensePoly(out)

    def __neg__(self):
        return DensePoly([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not self.coeffs or not other.coeffs:
            return DensePoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return DensePoly(out)

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def reverse(self):
        """The reciprocal polynomial: coefficients read back to front."""
        return DensePoly(tuple(reversed(self.coeffs)))

    def __repr__(self):
        return f"DensePoly({list(self.coeffs)!r})"


def monomial_complement(e):
    """The polynomial 1 - q^e, for e >= 1."""
    if e < 1:
        raise ValueError(f"exponent must be >= 1, got {e}")
    return DensePoly([1] + [0] * (e - 1) + [-1])


def is_palindromic(p):
    """True iff coeffs[i] == coeffs[deg - i] for all i (zero polynomial: True)."""
    cs = p.coeffs
    return cs == tuple(reversed(cs))


def is_unimodal(p):
    """True iff the coefficients weakly rise and then weakly fall."""
    cs = p.coeffs
    i = 0
    while i + 1 < len(cs) and cs[i] <= cs[i + 1]:
        i += 1
    while i + 1 < len(cs) and cs[i] >= cs[i + 1]:
        i += 1
    return i + 1 >= len(cs)


class TruncatedSeries:
    """Power series known exactly through degree M (inclusive).

    Stores exactly M+1 integer coefficients.  Equality and arithmetic between
    two series only see degrees up to the smaller truncation degree: the
    truncation is the contract, nothing beyond it is claimed.
    """

    __slots__ = ("coeffs", "truncation_degree")

    def __init__(self, coeffs, truncation_degree=None):
        cs = list(coeffs)
        if truncation_degree is None:
            if not cs:
                raise ValueError("a series needs at least the degree-0 coefficient")
            truncation_degree = len(cs) - 1
        if truncation_degree < 0:
            raise ValueError(f"truncation degree must be >= 0, got {truncation_degree}")
        if len(cs) > truncation_degree + 1:
            raise ValueError("more coefficients than the truncation degree admits")
        cs.extend([0] * (truncation_degree + 1 - len(cs)))
        object.__setattr__(self, "coeffs", tuple(cs))
        object.__setattr__(self, "truncation_degree", truncation_degree)

    def __setattr__(self, name, value):
        raise AttributeError("TruncatedSeries is immutable")

    @classmethod
    def from_poly(cls, p, truncation_degree):
        # exact whenever deg p <= M; higher terms fall outside the contract
        return cls(p.coeffs[: truncation_degree + 1], truncation_degree)

    def __getitem__(self, m):
        if not 0 <= m <= self.truncation_degree:
            raise IndexError(f"degree {m} beyond truncation {self.truncation_degree}")
        return self.coeffs[m]

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        m = min(self.truncation_degree, other.truncation_degree)
        return self.coeffs[: m + 1] == other.coeffs[: m + 1]

    __hash__ = None  # equality ignores coefficients beyond the smaller M

    def __add__(self, other):
        m = min(self.truncation_degree, other.truncation_degree)
        return TruncatedSeries(
            [self.coeffs[i] + other.coeffs[i] for i in range(m + 1)], m
        )

    def __mul__(self, other):
        m = min(self.truncation_degree, other.truncation_degree)
        a, b = self.coeffs, other.coeffs
        out = [0] * (m + 1)
        for i in range(m + 1):
            ai = a[i]
            if ai:
                for j in range(m + 1 - i):
                    out[i + j] += ai * b[j]
        return TruncatedSeries(out, m)

    def __repr__(self):
        return f"TruncatedSeries({list(self.coeffs)!r}, M={self.truncation_degree})"


def series_mul_poly(s, p):
    """Multiply a series by a polynomial, truncated at the series' degree."""
    M = s.truncation_degree
    out = [0] * (M + 1)
    for j, c in enumerate(p.coeffs):
        if j > M:
            break
        if c:
            for m in range(j, M + 1):
                out[m] += c * s.coeffs[m - j]
    return TruncatedSeries(out, M)


def product_form_series(exponents, M):
    """Coefficients of prod_i 1/(1 - q^{e_i}) through degree M.

    Each factor is divided in by a single prefix-sum pass with stride e,
    so the whole product costs O(len(exponents) * M).
    """
    if M < 0:
        raise ValueError(f"truncation degree must be >= 0, got {M}")
    coeffs = [1] + [0] * M
    for e in exponents:
        if e < 1:
            raise ValueError(f"exponent must be >= 1, got {e}")
        for m in range(e, M + 1):
            coeffs[m] += coeffs[m - e]
    return TruncatedSeries(coeffs, M)
