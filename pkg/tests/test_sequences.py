import pytest
from hypothesis import given, strategies as st

from lhcone.sequences import (
    CoprimalityError,
    SpecParseError,
    generate_from_u,
    generate_kl,
    generate_recurrence,
    kl_product_exponents,
    one_mod_k,
    parse_sequence_spec,
    recognize_u_generated,
    validate_positivity,
)
from math import gcd


def test_positivity_predicate():
    assert validate_positivity(3, 9)
    assert validate_positivity(5, -5)
    assert validate_positivity(2, -1)
    assert validate_positivity(1, 0)
    assert not validate_positivity(0, 3)
    assert not validate_positivity(2, -2)  # discriminant 4 - 8 < 0


def test_recurrence_terms():
    assert generate_recurrence(3, 9, 5) == [1, 3, 18, 81, 405]
    assert generate_recurrence(1, 1, 6) == [1, 1, 2, 3, 5, 8]
    assert generate_recurrence(2, 0, 4) == [1, 2, 4, 8]


def test_recurrence_rejects_nonpositive():
    with pytest.raises(ValueError):
        generate_recurrence(2, -2, 5)
    with pytest.raises(ValueError):
        generate_recurrence(3, 9, 0)


@given(st.integers(1, 9), st.integers(-6, 9), st.integers(1, 12))
def test_recurrence_stays_positive(l, b, n):
    if not validate_positivity(l, b):
        return
    assert all(x >= 1 for x in generate_recurrence(l, b, n))


def test_kl_terms():
    assert generate_kl(2, 3, 8) == [1, 3, 5, 12, 19, 45, 71, 168]
    assert generate_kl(3, 3, 5) == [1, 3, 8, 21, 55]
    with pytest.raises(ValueError):
        generate_kl(1, 3, 4)


def test_kl_product_exponents():
    assert kl_product_exponents(2, 3, 4) == [1, 4, 7, 17]
    # k = l collapses to consecutive sums a_i + a_{i-1}
    a = [0] + generate_kl(3, 3, 5)
    assert kl_product_exponents(3, 3, 5) == [a[i] + a[i - 1] for i in range(1, 6)]


def test_u_generation_example():
    assert generate_from_u((3, 3, 2, 3), 1, 5) == [1, 2, 5, 8, 19]
    assert generate_from_u((4, 1, 2, 5, 1, 2, 5, 1), 1, 9) == [1, 3, 2, 1, 3, 2, 1, 3, 2]


def test_u_generation_rejects_with_index():
    # u = (1,) from s1 = 1 gives s2 = 0
    with pytest.raises(ValueError, match="term 2"):
        generate_from_u((1,), 1, 2)
    with pytest.raises(ValueError, match="u_2"):
        generate_from_u((2, 0), 1, 3)
    with pytest.raises(ValueError):
        generate_from_u((2,), 0, 2)


def test_recognize_round_trip():
    s = generate_from_u((3, 3, 2, 3), 1, 5)
    assert recognize_u_generated(s) == [3, 3, 2, 3]


def test_recognize_none_when_not_u_generated():
    assert recognize_u_generated((1, 3, 4)) is None


def test_recognize_raises_on_shared_factor():
    with pytest.raises(CoprimalityError):
        recognize_u_generated((2, 4, 7))
    with pytest.raises(CoprimalityError):
        recognize_u_generated((1, 2, 4))


def test_recognize_singleton():
    assert recognize_u_generated((7,)) == []


@given(
    st.lists(st.integers(1, 6), min_size=1, max_size=7),
    st.integers(1, 4),
)
def test_u_generated_sequences_have_coprime_neighbours(u, s1):
    try:
        s = generate_from_u(u, s1, len(u) + 1)
    except ValueError:
        return
    assert all(gcd(s[i], s[i + 1]) == 1 for i in range(len(s) - 1))
    assert recognize_u_generated(s) == list(u)


def test_one_mod_k():
    assert one_mod_k(4, 5) == [1, 5, 9, 13, 17]
    assert one_mod_k(1, 3) == [1, 2, 3]
    with pytest.raises(ValueError):
        one_mod_k(0, 3)


def test_parse_explicit():
    sp = parse_sequence_spec("list:1,3,5")
    assert sp.kind == "explicit" and sp.params == (1, 3, 5)
    assert not sp.needs_length()
    assert sp.realize() == [1, 3, 5]
    assert sp.realize(2) == [1, 3]
    with pytest.raises(ValueError):
        sp.realize(9)


def test_parse_families():
    assert parse_sequence_spec("rec:3,9").realize(4) == [1, 3, 18, 81]
    assert parse_sequence_spec("kl:2,3").realize(4) == [1, 3, 5, 12]
    assert parse_sequence_spec("ell:4").realize(3) == [1, 4, 15]
    assert parse_sequence_spec("onemodk:4").realize(3) == [1, 5, 9]


def test_parse_u_with_first_term():
    sp = parse_sequence_spec("u:3,3,2,3;1")
    assert sp.kind == "u"
    assert sp.realize() == [1, 2, 5, 8, 19]
    assert sp.default_length() == 5


def test_parse_errors_carry_positions():
    with pytest.raises(SpecParseError) as ei:
        parse_sequence_spec("list:1,x,5")
    assert ei.value.position == 7
    with pytest.raises(SpecParseError) as ei:
        parse_sequence_spec("zzz:1")
    assert ei.value.position == 0
    with pytest.raises(SpecParseError):
        parse_sequence_spec("rec:3")
    with pytest.raises(SpecParseError):
        parse_sequence_spec("kl:1,3")
    with pytest.raises(SpecParseError):
        parse_sequence_spec("no-colon")
    with pytest.raises(SpecParseError):
        parse_sequence_spec("rec:2,-2")


def test_family_realization_needs_length():
    sp = parse_sequence_spec("rec:3,9")
    assert sp.needs_length()
    with pytest.raises(ValueError):
        sp.realize()
