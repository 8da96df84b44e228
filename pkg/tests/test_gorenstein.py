from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from lhcone.gorenstein import (
    SingularMatrixError,
    TriangularCone,
    ell_sequence_point,
    gorenstein_fail_index,
    greedy_interior_point,
    lecture_hall_cone,
    lecture_hall_gorenstein,
    parse_matrix,
    simple_cone_gorenstein,
    u_generated_point,
)
from lhcone.sequences import generate_kl, generate_recurrence


def test_gorenstein_smallest_cases():
    r = lecture_hall_gorenstein((1,))
    assert r.gorenstein and r.point == (1,)
    r = lecture_hall_gorenstein((1, 2))
    assert r.point == (1, 3)
    r = lecture_hall_gorenstein((2, 1))
    assert r.point == (1, 1)


def test_gorenstein_odd_sequence():
    r = lecture_hall_gorenstein((1, 3, 5, 7))
    assert r.gorenstein
    assert r.point == (1, 4, 7, 10)


def test_fibonacci_fails_at_five():
    r = lecture_hall_gorenstein((1, 1, 2, 3, 5))
    assert not r.gorenstein
    assert r.fails_at == 5
    assert r.witness == Fraction(41, 3)
    # the length-4 prefix is still Gorenstein
    assert lecture_hall_gorenstein((1, 1, 2, 3)).gorenstein


def test_failure_is_monotone_in_length():
    s = generate_recurrence(3, 9, 10)
    seen_failure = False
    for n in range(1, 11):
        r = lecture_hall_gorenstein(s[:n])
        if seen_failure:
            assert not r.gorenstein and r.fails_at == 7
        elif not r.gorenstein:
            seen_failure = True
            assert n == 7
    assert seen_failure


def test_witness_values():
    r = lecture_hall_gorenstein(generate_recurrence(3, 9, 7))
    assert (r.fails_at, r.witness) == (7, Fraction(26491, 2))
    r = lecture_hall_gorenstein(generate_recurrence(5, -5, 6))
    assert (r.fails_at, r.witness) == (6, Fraction(13801, 11))
    r = lecture_hall_gorenstein(generate_recurrence(2, 1, 4))
    assert (r.fails_at, r.witness) == (4, Fraction(97, 5))


def test_rejects_nonpositive_terms():
    with pytest.raises(ValueError):
        lecture_hall_gorenstein((1, 0, 2))
    with pytest.raises(ValueError):
        lecture_hall_gorenstein(())


def test_fail_index_search():
    assert gorenstein_fail_index(3, 9, 64) == 7
    assert gorenstein_fail_index(2, 1, 64) == 4
    assert gorenstein_fail_index(5, -5, 64) == 6
    assert gorenstein_fail_index(2, -1, 50) is None  # 1,2,3,... stays Gorenstein


def test_ell_sequence_point():
    # consecutive-sum form, and it must agree with the recursion
    for l in (2, 3, 4):
        for n in range(1, 6):
            s = generate_kl(l, l, n)
            pt = ell_sequence_point(l, n)
            r = lecture_hall_gorenstein(s)
            assert r.gorenstein and r.point == pt


def test_u_generated_point_matches_recursion():
    pt = u_generated_point((4, 1, 2, 5, 1, 2, 5, 1), 9)
    assert pt == (1, 4, 3, 2, 7, 5, 3, 10, 7)
    r = lecture_hall_gorenstein((1, 3, 2, 1, 3, 2, 1, 3, 2))
    assert r.point == pt


def test_triangular_cone_validation():
    with pytest.raises(ValueError):
        TriangularCone(((Fraction(1), Fraction(1)), (Fraction(0), Fraction(1))))
    with pytest.raises(ValueError):
        TriangularCone(((Fraction(0),),))
    with pytest.raises(ValueError):
        TriangularCone(((Fraction(1),), (Fraction(1), Fraction(1))))


def test_lecture_hall_cone_rows():
    cone = lecture_hall_cone((1, 3, 5))
    assert cone.rows == (
        (Fraction(1), Fraction(0), Fraction(0)),
        (Fraction(-1), Fraction(1, 3), Fraction(0)),
        (Fraction(0), Fraction(-1, 3), Fraction(1, 5)),
    )


def test_greedy_interior_point_is_recursion_point():
    for s in [(1,), (1, 2), (1, 3, 5), (1, 2, 3, 4), (1, 3, 5, 7)]:
        cone = lecture_hall_cone(s)
        assert greedy_interior_point(cone) == lecture_hall_gorenstein(s).point


def test_greedy_interior_point_strictly_inside():
    for s in [(1, 1, 2, 3, 5), (2, 3, 1), (1, 9, 3, 4)]:
        cone = lecture_hall_cone(s)
        c = greedy_interior_point(cone)
        for row in cone.rows:
            assert sum(a * x for a, x in zip(row, c)) > 0


def test_simple_cone_agrees_with_recursion():
    for s in [(1,), (1, 2), (2, 1), (1, 3, 5), (1, 1, 2, 3, 5), (1, 9, 3, 4)]:
        rec = lecture_hall_gorenstein(s)
        sim = simple_cone_gorenstein(lecture_hall_cone(s).rows)
        assert sim.gorenstein == rec.gorenstein
        if rec.gorenstein:
            assert sim.point == rec.point
        else:
            assert sim.fails_at == rec.fails_at


def test_simple_cone_scale_invariance():
    # rows 2x >= 0 and -2x + y >= 0 cut the same cone as the (1,2) rows;
    # rescaling a row must not move the Gorenstein point
    r = simple_cone_gorenstein(parse_matrix("2 0\n-2 1\n"))
    assert r.gorenstein and r.point == (1, 3)
    r2 = simple_cone_gorenstein(lecture_hall_cone((1, 2)).rows)
    assert r2.point == (1, 3)


def test_simple_cone_non_triangular():
    # x >= 0, y >= 0, x + y bounded below by nothing new: use a genuinely
    # non-triangular Gorenstein cone, the positive quadrant rotated
    rows = parse_matrix("0 1\n1 -1\n")
    r = simple_cone_gorenstein(rows)
    assert r.gorenstein
    row_values = [sum(a * x for a, x in zip(row, r.point)) for row in rows]
    assert all(v >= 1 for v in row_values)


def test_simple_cone_singular():
    with pytest.raises(SingularMatrixError):
        simple_cone_gorenstein(parse_matrix("1 1\n1 1\n"))
    with pytest.raises(SingularMatrixError):
        simple_cone_gorenstein(parse_matrix("0 0\n0 1\n"))


def test_parse_matrix_fractions_and_blanks():
    rows = parse_matrix("1 0\n\n-1 1/2\n")
    assert rows == ((Fraction(1), Fraction(0)), (Fraction(-1), Fraction(1, 2)))


def test_parse_matrix_errors_name_the_line():
    with pytest.raises(ValueError, match="line 2"):
        parse_matrix("1 0\n-1 x\n")
    with pytest.raises(ValueError, match="row 3"):
        parse_matrix("1 0\n-1 1\n7\n")
    with pytest.raises(ValueError):
        parse_matrix("")


@given(st.lists(st.integers(1, 9), min_size=1, max_size=5))
def test_recursion_and_elimination_always_agree(s):
    rec = lecture_hall_gorenstein(s)
    sim = simple_cone_gorenstein(lecture_hall_cone(s).rows)
    assert sim.gorenstein == rec.gorenstein
    if rec.gorenstein:
        assert sim.point == rec.point


@given(st.lists(st.integers(1, 9), min_size=1, max_size=5))
def test_gorenstein_point_lands_on_all_facet_shifts(s):
    r = lecture_hall_gorenstein(s)
    if not r.gorenstein:
        return
    # c satisfies every defining inequality with slack exactly the gcd shift:
    # c_1 = s_1/s_1, c_j*s_{j-1} - c_{j-1}*s_j = gcd(s_j, s_{j-1})
    from math import gcd
    c = r.point
    assert c[0] == 1
    for j in range(1, len(s)):
        assert c[j] * s[j - 1] - c[j - 1] * s[j] == gcd(s[j], s[j - 1])
