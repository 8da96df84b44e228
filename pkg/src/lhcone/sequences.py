"""Positive integer sequence families and their text form.

All generators fix the seeds s_0 = 0, s_1 = 1 (families) and produce the
terms s_1..s_n.  A sequence spec is parsed from one of the text forms

    rec:L,B       second-order recurrence s_j = L*s_{j-1} + B*s_{j-2}
    kl:K,L        alternating two-coefficient recurrence (K, L >= 2)
    ell:L         the kl:L,L special case (L >= 2)
    u:U1,...;S1   u-generated sequence with first term S1
    onemodk:K     1, K+1, 2K+1, ...
    list:S1,...   explicit terms

Parse errors carry the 0-based character position of the offending token.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd


class CoprimalityError(ValueError):
    """Consecutive terms share a factor; u-recognition does not apply."""


class SpecParseError(ValueError):
    def __init__(self, message, position):
        super().__init__(f"{message} (position {position})")
        self.position = position


def validate_positivity(l, b):
    """True iff every term of the (l, b) recurrence stays positive."""
    if b == 0:
        return l > 0
    return l > 0 and l * l + 4 * b >= 0


def generate_recurrence(l, b, n):
    """Terms s_1..s_n of s_j = l*s_{j-1} + b*s_{j-2} with s_0 = 0, s_1 = 1."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if not validate_positivity(l, b):
        raise ValueError(f"recurrence l={l}, b={b} does not stay positive")
    terms = [1]
    prev, cur = 0, 1
    for _ in range(n - 1):
        prev, cur = cur, l * cur + b * prev
        terms.append(cur)
    return terms


def generate_kl(k, l, n):
    """Terms a_1..a_n of the alternating recurrence.

    a_0 = 0, a_1 = 1, then a_{2i} = l*a_{2i-1} - a_{2i-2} and
    a_{2i+1} = k*a_{2i} - a_{2i-1}.  Positivity requires k, l >= 2.
    """
    if k < 2 or l < 2:
        raise ValueError(f"need k >= 2 and l >= 2, got k={k}, l={l}")
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    a = [0, 1]
    for i in range(2, n + 1):
        coeff = l if i % 2 == 0 else k
        a.append(coeff * a[-1] - a[-2])
    return a[1:]


def kl_product_exponents(k, l, n):
    """Denominator exponents of the product formula for the (k, l) family.

    With a the (k, l)-sequence and b the (l, k)-sequence (both with the
    index-0 term 0 prepended): (a_i + b_{i-1})_{i=1..n} for n even,
    (b_i + a_{i-1})_{i=1..n} for n odd.  For k = l both reduce to
    (a_i + a_{i-1}).
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    a = [0] + generate_kl(k, l, n)
    b = [0] + generate_kl(l, k, n)
    if n % 2 == 0:
        return [a[i] + b[i - 1] for i in range(1, n + 1)]
    return [b[i] + a[i - 1] for i in range(1, n + 1)]


def generate_from_u(u, s1, n):
    """The u-generated sequence: s_2 = u_1*s_1 - 1, s_{i+1} = u_i*s_i - s_{i-1}.

    Rejects (with the offending 1-based index) as soon as a term fails to be
    positive.
    """
    if s1 < 1:
        raise ValueError(f"first term must be positive, got {s1}")
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if len(u) < n - 1:
        raise ValueError(f"need {n - 1} multipliers for n={n}, got {len(u)}")
    for i, ui in enumerate(u[: n - 1], start=1):
        if ui < 1:
            raise ValueError(f"multiplier u_{i} must be positive, got {ui}")
    terms = [s1]
    for i in range(2, n + 1):
        if i == 2:
            nxt = u[0] * s1 - 1
        else:
            nxt = u[i - 2] * terms[-1] - terms[-2]
        if nxt < 1:
            raise ValueError(f"term {i} of the u-generated sequence is {nxt}, not positive")
        terms.append(nxt)
    return terms


def recognize_u_generated(s):
    """Recover the multiplier list u from s, or None when no such u exists.

    Requires gcd(s_i, s_{i+1}) = 1 for every consecutive pair; a violation
    raises CoprimalityError, which is a different outcome than returning
    None (the recognition criterion is only an iff under that hypothesis).
    """
    if len(s) < 1 or any(x < 1 for x in s):
        raise ValueError("need a nonempty positive sequence")
    for i in range(len(s) - 1):
        if gcd(s[i], s[i + 1]) != 1:
            raise CoprimalityError(
                f"terms {i + 1} and {i + 2} share a factor: gcd({s[i]}, {s[i + 1]}) != 1"
            )
    u = []
    for i in range(1, len(s)):
        if i == 1:
            num = s[1] + 1
        else:
            num = s[i] + s[i - 2]
        q, r = divmod(num, s[i - 1])
        if r != 0 or q < 1:
            return None
        u.append(q)
    return u


def one_mod_k(k, n):
    """1, k+1, 2k+1, ..., the arithmetic progression that is 1 mod k."""
    if k < 1:
        raise ValueError(f"need k >= 1, got {k}")
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    return [(i - 1) * k + 1 for i in range(1, n + 1)]


@dataclass(frozen=True)
class SequenceSpec:
    """A parsed sequence description: a family plus parameters, or a list."""

    kind: str
    params: tuple

    def needs_length(self):
        return self.kind in ("recurrence", "kl", "ell", "one_mod_k")

    def default_length(self):
        if self.kind == "explicit":
            return len(self.params)
        if self.kind == "u":
            u, _ = self.params
            return len(u) + 1
        return None

    def realize(self, n=None):
        """The terms s_1..s_n; n defaults to the natural length where one exists."""
        if n is None:
            n = self.default_length()
            if n is None:
                raise ValueError(f"a length n is required for kind '{self.kind}'")
        if self.kind == "explicit":
            if n > len(self.params):
                raise ValueError(f"list has {len(self.params)} terms, asked for {n}")
            return list(self.params[:n])
        if self.kind == "recurrence":
            l, b = self.params
            return generate_recurrence(l, b, n)
        if self.kind == "kl":
            k, l = self.params
            return generate_kl(k, l, n)
        if self.kind == "ell":
            (l,) = self.params
            return generate_kl(l, l, n)
        if self.kind == "u":
            u, s1 = self.params
            return generate_from_u(u, s1, n)
        if self.kind == "one_mod_k":
            (k,) = self.params
            return one_mod_k(k, n)
        raise ValueError(f"unknown kind '{self.kind}'")


def _parse_int_list(text, offset, what, minimum=None):
    vals = []
    pos = offset
    for part in text.split(","):
        token = part.strip()
        tokpos = pos + (len(part) - len(part.lstrip()))
        try:
            v = int(token)
        except ValueError:
            raise SpecParseError(f"expected an integer {what}, got '{token}'", tokpos) from None
        if minimum is not None and v < minimum:
            raise SpecParseError(f"{what} must be >= {minimum}, got {v}", tokpos)
        vals.append(v)
        pos += len(part) + 1
    return vals


def parse_sequence_spec(text):
    """Parse the 'kind:args' text form, reporting positions on errors."""
    head, sep, rest = text.partition(":")
    if not sep:
        raise SpecParseError("expected 'kind:...' with one of rec, kl, ell, u, onemodk, list", 0)
    kind = head.strip()
    arg_offset = len(head) + 1
    if kind == "rec":
        vals = _parse_int_list(rest, arg_offset, "coefficient")
        if len(vals) != 2:
            raise SpecParseError(f"rec takes exactly two coefficients, got {len(vals)}", arg_offset)
        l, b = vals
        if not validate_positivity(l, b):
            raise SpecParseError(f"recurrence l={l}, b={b} does not stay positive", arg_offset)
        return SequenceSpec("recurrence", (l, b))
    if kind == "kl":
        vals = _parse_int_list(rest, arg_offset, "parameter", minimum=2)
        if len(vals) != 2:
            raise SpecParseError(f"kl takes exactly two parameters, got {len(vals)}", arg_offset)
        return SequenceSpec("kl", tuple(vals))
    if kind == "ell":
        vals = _parse_int_list(rest, arg_offset, "parameter", minimum=2)
        if len(vals) != 1:
            raise SpecParseError(f"ell takes exactly one parameter, got {len(vals)}", arg_offset)
        return SequenceSpec("ell", tuple(vals))
    if kind == "onemodk":
        vals = _parse_int_list(rest, arg_offset, "parameter", minimum=1)
        if len(vals) != 1:
            raise SpecParseError(f"onemodk takes exactly one parameter, got {len(vals)}", arg_offset)
        return SequenceSpec("one_mod_k", tuple(vals))
    if kind == "list":
        vals = _parse_int_list(rest, arg_offset, "term", minimum=1)
        return SequenceSpec("explicit", tuple(vals))
    if kind == "u":
        left, usep, right = rest.partition(";")
        if not usep:
            raise SpecParseError("u form is 'u:u1,u2,...;s1'", arg_offset + len(rest))
        u = _parse_int_list(left, arg_offset, "multiplier", minimum=1)
        s1vals = _parse_int_list(right, arg_offset + len(left) + 1, "first term", minimum=1)
        if len(s1vals) != 1:
            raise SpecParseError("exactly one first term after ';'", arg_offset + len(left) + 1)
        return SequenceSpec("u", (tuple(u), s1vals[0]))
    raise SpecParseError(f"unknown kind '{kind}'", 0)
