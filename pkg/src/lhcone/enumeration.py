"""Brute-force lattice-point oracle for lecture hall cones.

Everything algebraic in this package can be cross-checked here against a
direct enumeration of the lattice points 0 <= x_1/s_1 <= ... <= x_n/s_n.
The walk goes coordinate by coordinate: after fixing x_i = v the next
coordinate ranges over a ray x_{i+1} >= ceil(v*s_{i+1}/s_i), computed in
exact integers.  Only the first n-1 coordinates are materialized; the
innermost coordinate contributes a whole ray at once through a difference
array, so the cost is O(1) per visited prefix.

Visited prefixes are counted against a node budget.  The environment
variable LHCONE_BUDGET overrides the default cap; exceeding it raises
BudgetExceeded rather than letting an oversized instance spin forever.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import accumulate
from math import comb, prod

from .exact_arith import (
    DensePoly,
    TruncatedSeries,
    is_palindromic,
    is_unimodal,
    monomial_complement,
    series_mul_poly,
)
from .gorenstein import lecture_hall_gorenstein

DEFAULT_NODE_BUDGET = 50_000_000


class BudgetExceeded(RuntimeError):
    pass


def node_budget():
    raw = os.environ.get("LHCONE_BUDGET")
    return DEFAULT_NODE_BUDGET if raw is None else int(raw)


def _check_sequence(s):
    if len(s) < 1 or any(x < 1 for x in s):
        raise ValueError("need a nonempty positive sequence")


def weight_series(s, M, max_nodes=None):
    """Exact counts, by total weight 0..M, of the lattice points of the cone.

    The counts match the coefficients of the cone's generating function, so
    this is the oracle every closed form is tested against.
    """
    _check_sequence(s)
    if M < 0:
        raise ValueError(f"need M >= 0, got {M}")
    budget = node_budget() if max_nodes is None else max_nodes
    n = len(s)
    delta = [0] * (M + 1)
    if n == 1:
        # a single unconstrained coordinate: one point of every weight
        delta[0] = 1
        return TruncatedSeries(accumulate(delta), M)
    nodes = 0

    def walk(i, lo, w):
        # choose x_i = v >= lo with w the weight of x_1..x_{i-1}
        nonlocal nodes
        si = s[i - 1]
        snext = s[i]
        last = i == n - 1
        v = lo
        while True:
            nodes += 1
            if nodes > budget:
                raise BudgetExceeded(f"enumeration passed {budget} nodes")
            w2 = w + v
            lo_next = (v * snext + si - 1) // si
            # weight of any completion is at least w2 + lo_next, and that
            # floor grows with v, so the first overshoot ends the ray
            if w2 + lo_next > M:
                break
            if last:
                delta[w2 + lo_next] += 1
            else:
                walk(i + 1, lo_next, w2)
            v += 1

    walk(1, 0, 0)
    return TruncatedSeries(accumulate(delta), M)


def ehrhart_counts(s, T, max_nodes=None):
    """Lattice point counts i(t) = #{x in the cone : x_n <= t} for t = 0..T."""
    _check_sequence(s)
    if T < 0:
        raise ValueError(f"need T >= 0, got {T}")
    budget = node_budget() if max_nodes is None else max_nodes
    n = len(s)
    dd = [0] * (T + 1)
    if n == 1:
        dd[0] = 1
    else:
        nodes = 0

        def walk(i, lo):
            nonlocal nodes
            si = s[i - 1]
            snext = s[i]
            last = i == n - 1
            v = lo
            while True:
                nodes += 1
                if nodes > budget:
                    raise BudgetExceeded(f"enumeration passed {budget} nodes")
                end = (v * snext + si - 1) // si
                lo_next = end
                # the smallest reachable x_n decides viability; the chain of
                # ceilings is monotone in v, so overshoot ends the ray
                for j in range(i + 2, n + 1):
                    end = (end * s[j - 1] + s[j - 2] - 1) // s[j - 2]
                if end > T:
                    break
                if last:
                    dd[lo_next] += 1
                else:
                    walk(i + 1, lo_next)
                v += 1

        walk(1, 0)
    # first pass: prefixes whose x_n ray starts at or below t;
    # second pass: sum of ray lengths t - lo + 1
    return list(accumulate(accumulate(dd)))


def denominator_exponents(s):
    """The tail sums d_i = s_i + ... + s_n."""
    _check_sequence(s)
    return [sum(s[i:]) for i in range(len(s))]


def numerator_H(s, max_nodes=None):
    """The numerator polynomial over prod_i (1 - q^{d_i}), d_i = s_i+...+s_n.

    Computed by enumerating the weight series through degree sum(d_i) and
    clearing the denominator.  That the result is a polynomial with
    nonnegative coefficients summing to prod(s) is a theorem, so those
    checks are assertions: tripping one means an enumeration bug, not bad
    input.
    """
    d = denominator_exponents(s)
    D = sum(d)
    f = weight_series(s, D, max_nodes)
    cur = f
    for e in d:
        cur = series_mul_poly(cur, monomial_complement(e))
    H = DensePoly(cur.coeffs)
    assert all(c >= 0 for c in H.coeffs)
    assert H(1) == prod(s)
    return H


def detect_product_form(f, n):
    """Greedily factor a series as prod of n terms 1/(1 - q^{e_i}).

    Repeatedly takes the smallest positive degree with a nonzero
    coefficient as the next exponent and multiplies that factor out.
    Returns the sorted exponents, or None when the series is not such a
    product through its truncation degree (a negative coefficient showing
    up mid-extraction, leftovers after n factors, or fewer than n factors).
    """
    M = f.truncation_degree
    if f.coeffs[0] != 1:
        raise ValueError(f"series must start with 1, got {f.coeffs[0]}")
    residual = list(f.coeffs)
    exponents = []
    for _ in range(n):
        e = next((m for m in range(1, M + 1) if residual[m] != 0), None)
        if e is None:
            return None
        if residual[e] < 0:
            return None
        for m in range(M, e - 1, -1):
            residual[m] -= residual[m - e]
        if any(c < 0 for c in residual):
            return None
        exponents.append(e)
    if any(residual[m] != 0 for m in range(1, M + 1)):
        return None
    return sorted(exponents)


@dataclass(frozen=True)
class HStarVector:
    """Numerator of the Ehrhart series over (1 - x^{s_n})^{n+1}."""

    coeffs: DensePoly
    denominator_exponent: int
    power: int

    @property
    def symmetric(self):
        return is_palindromic(self.coeffs)

    @property
    def unimodal(self):
        return is_unimodal(self.coeffs)


def h_star(s, max_nodes=None):
    """The h*-vector of the rational polytope {x in the cone : x_n <= 1}.

    Ehrhart counts through T = (n+1)*s_n pin the numerator exactly; its
    positivity and the value at 1 are theorems and asserted as such.
    """
    _check_sequence(s)
    n = len(s)
    sn = s[-1]
    T = (n + 1) * sn
    counts = ehrhart_counts(s, T, max_nodes)
    series = TruncatedSeries(counts, T)
    denom = [0] * (T + 1)
    for k in range(n + 2):
        denom[k * sn] = (-1) ** k * comb(n + 1, k)
    Q = DensePoly(series_mul_poly(series, DensePoly(denom)).coeffs)
    assert Q.degree < T
    assert all(c >= 1 for c in Q.coeffs)
    assert Q(1) == sn * prod(s)
    return HStarVector(Q, sn, n + 1)


@dataclass(frozen=True)
class CrossCheckReport:
    """Three routes to the same yes/no: the index recursion, palindromicity
    of the weight-series numerator, palindromicity of the h*-vector."""

    recursion_gorenstein: bool
    numerator_palindromic: bool
    hstar_palindromic: bool

    @property
    def agree(self):
        return self.recursion_gorenstein == self.numerator_palindromic == self.hstar_palindromic


def cross_check_gorenstein(s, budget=1000, max_nodes=None):
    """Run all three Gorenstein criteria on one instance and report them.

    The two enumerations are only attempted when their sizes sum(d_i) and
    (n+1)*s_n stay within the budget; anything larger raises
    BudgetExceeded.  The three verdicts agreeing is a theorem, so a
    disagreement in the report is a hard failure to be treated as a bug.
    """
    _check_sequence(s)
    D = sum(denominator_exponents(s))
    T = (len(s) + 1) * s[-1]
    if D > budget or T > budget:
        raise BudgetExceeded(
            f"instance too large for cross-check: sum(d_i)={D}, (n+1)*s_n={T}, budget={budget}"
        )
    recursion = lecture_hall_gorenstein(s).gorenstein
    numerator = is_palindromic(numerator_H(s, max_nodes))
    hstar = is_palindromic(h_star(s, max_nodes).coeffs)
    return CrossCheckReport(recursion, numerator, hstar)
