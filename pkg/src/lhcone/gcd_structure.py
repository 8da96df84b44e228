"""Arithmetic invariants of the (l, b) recurrence: the gcd profile
(r, t, sigma, gamma, beta), the normalized gcd ratio table, the reduced
f-sequence, and the stable-growth index used by the failure threshold test.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .gorenstein import gorenstein_fail_index
from .sequences import generate_recurrence, validate_positivity


class HorizonTooSmallError(ValueError):
    pass


@dataclass(frozen=True)
class GcdProfile:
    r: int
    t: int
    sigma: int
    gamma: int
    beta: int


def gcd_profile(l, b):
    """r = gcd(l,b), t = gcd(l^2/r, b/r), sigma = r/t, l = sigma*t*gamma,
    b = sigma*t^2*beta.  The divisibility facts used here are theorems, so
    they are asserted, not checked."""
    if l == 0 or b == 0:
        raise ValueError(f"need l != 0 and b != 0, got l={l}, b={b}")
    r = gcd(l, b)
    t = gcd(l * l // r, b // r)
    assert r % t == 0
    sigma = r // t
    assert l % (sigma * t) == 0 and b % (sigma * t * t) == 0
    gamma = l // (sigma * t)
    beta = b // (sigma * t * t)
    assert gcd(gamma, beta) == gcd(gamma, t) == gcd(sigma, beta) == 1
    return GcdProfile(r, t, sigma, gamma, beta)


@dataclass(frozen=True)
class RatioTable:
    """Rows (n, gcd(s_{n+1}, s_n), normalizer t^{n-1}*sigma^{floor(n/2)}, u_n)."""

    rows: tuple

    @property
    def u_values(self):
        return [u for (_, _, _, u) in self.rows]

    def to_csv(self):
        lines = ["n,gcd,normalizer,u_n"]
        lines += [f"{n},{g},{norm},{u}" for (n, g, norm, u) in self.rows]
        return "\n".join(lines) + "\n"


def ratio_table(l, b, N):
    if b == 0 or not validate_positivity(l, b):
        raise ValueError(f"need a positive recurrence with b != 0, got l={l}, b={b}")
    if N < 1:
        raise ValueError(f"need N >= 1, got {N}")
    prof = gcd_profile(l, b)
    s = generate_recurrence(l, b, N + 1)
    rows = []
    for n in range(1, N + 1):
        g = gcd(s[n], s[n - 1])
        norm = prof.t ** (n - 1) * prof.sigma ** (n // 2)
        u, rem = divmod(g, norm)
        assert rem == 0 and u >= 1 and prof.t % u == 0
        rows.append((n, g, norm, u))
    return RatioTable(tuple(rows))


def f_sequence(l, b, n):
    """f_1..f_n with f_j = (l/t)f_{j-1} + (b/t^2)f_{j-2}, so s_j = t^{j-1}*f_j."""
    if b == 0 or not validate_positivity(l, b):
        raise ValueError(f"need a positive recurrence with b != 0, got l={l}, b={b}")
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    prof = gcd_profile(l, b)
    lt = l // prof.t
    btt = b // (prof.t * prof.t)
    f = [1, lt]
    for _ in range(n - 1):
        f.append(lt * f[-1] + btt * f[-2])
    s = generate_recurrence(l, b, n + 1)
    for j in range(1, n + 2):
        assert s[j - 1] == prof.t ** (j - 1) * f[j - 1]
    for j in range(1, n + 1):
        assert gcd(f[j], f[j - 1]) == prof.sigma ** (j // 2)
    return f[:n]


def _growth_value(s_n, n, prof):
    # s_n / (t^{n-2} * sigma^{floor((n-1)/2)}); n = 1 makes the exponent -1
    return Fraction(s_n) / (Fraction(prof.t) ** (n - 2) * prof.sigma ** ((n - 1) // 2))


def find_n0(l, b, horizon=None):
    """Smallest n0 whose whole window [n0, n0+horizon] satisfies the growth
    bound s_n/(t^{n-2}*sigma^{floor((n-1)/2)}) > t*(r+|b|).

    With no horizon given, the window defaults to max(64, 4 * first index
    where the bound holds).  Raises HorizonTooSmallError when no window
    starting at n0 <= horizon is clean.
    """
    if l <= 0 or b == 0 or l * l + 4 * b < 0:
        raise ValueError(f"need a positive recurrence with b != 0, got l={l}, b={b}")
    prof = gcd_profile(l, b)
    threshold = prof.t * (prof.r + abs(b))
    if horizon is None:
        s = generate_recurrence(l, b, 4096)
        first_hit = next(
            (n for n in range(1, 4097) if _growth_value(s[n - 1], n, prof) > threshold), None
        )
        if first_hit is None:
            raise HorizonTooSmallError("growth bound not reached within 4096 terms")
        horizon = max(64, 4 * first_hit)
    limit = 2 * horizon + 1
    s = generate_recurrence(l, b, max(limit, 1))
    good = [False] + [_growth_value(s[n - 1], n, prof) > threshold for n in range(1, limit + 1)]
    for n0 in range(1, horizon + 1):
        if all(good[n0 : n0 + horizon + 1]):
            return n0
    raise HorizonTooSmallError(
        f"no window of length {horizon + 1} starting at n0 <= {horizon} satisfies the bound"
    )


@dataclass(frozen=True)
class ThresholdVerdict:
    applicable: bool
    threshold: int | None
    actual: int | None

    @property
    def confirmed(self):
        return self.applicable and self.actual is not None and self.actual <= self.threshold


def failure_threshold_check(l, b):
    """Universal Gorenstein failure threshold when gcd(l,b) = gcd(l^2,b).

    Under that hypothesis the cone family stops being Gorenstein at
    dimension 5 (b > 0) or 6 (b < -1) at the latest; the verdict carries the
    predicted threshold and the actual first failing index.  Without the
    hypothesis the verdict is marked not applicable.
    """
    if b in (0, -1):
        raise ValueError(f"need b outside {{0, -1}}, got b={b}")
    if not validate_positivity(l, b):
        raise ValueError(f"recurrence l={l}, b={b} does not stay positive")
    if gcd(l, b) != gcd(l * l, b):
        return ThresholdVerdict(False, None, None)
    threshold = 5 if b > 0 else 6
    actual = gorenstein_fail_index(l, b, threshold)
    return ThresholdVerdict(True, threshold, actual)
