import random
from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from macdonald.clifford import (
    ExactCircle, GaussianRat, c_coeff, circumcircle, clifford_circle_odd, clifford_point_even,
    constructive_clifford, det, formula_clifford, intersect, nline_new, on_circle, parse_points,
    random_config, second_intersection, solve, verify_config,
)
from macdonald.errors import GenericityViolation, SingularHankel, ZeroPoint

G = GaussianRat

gauss = st.builds(G, st.integers(-6, 6), st.integers(-6, 6))


def test_gaussian_arithmetic():
    i = G(0, 1)
    assert i * i == G(-1)
    assert (G(1, 2) / G(3, -1)) * G(3, -1) == G(1, 2)
    assert G(2, 1) ** -2 * G(2, 1) ** 2 == G(1)
    assert G(3, 4).norm() == 25
    assert str(G(Fraction(1, 2), -3)) == "1/2-3i"
    with pytest.raises(ZeroDivisionError):
        G(1) / G(0)


def test_parse_points():
    assert parse_points("2,0;0,2") == [G(2), G(0, 2)]
    assert parse_points("1/2,-1;") == [G(Fraction(1, 2), -1)]


def test_nline_validation():
    with pytest.raises(ZeroPoint):
        nline_new([G(1), G(0)])
    with pytest.raises(GenericityViolation):
        nline_new([G(1), G(2)])  # parallel lines
    L = nline_new([G(2), G(0, 2)])
    assert all(t.norm() == 1 for t in L.ts)


def test_lines_are_perpendicular_bisectors():
    L = nline_new([G(2), G(0, 2), G(1, 3)])
    for i, j in combinations(range(3), 2):
        z = intersect(L, i, j)
        for k in (i, j):
            y = L.ys[k]
            assert (z - y).norm() == z.norm()


def test_det_and_solve():
    assert det([]) == G(1)
    assert det([[G(1), G(2)], [G(3), G(4)]]) == G(-2)
    assert det([[G(1), G(2)], [G(2), G(4)]]) == G(0)
    assert solve([[G(2)]], [G(4, 2)]) == [G(2, 1)]
    with pytest.raises(SingularHankel):
        solve([[G(0)]], [G(1)])


def test_two_lines_meet_at_the_point():
    L = nline_new([G(2), G(0, 2)])
    assert clifford_point_even(L) == G(1, 1) == intersect(L, 0, 1)


def test_three_lines_give_the_circumcircle():
    L = nline_new([G(2), G(0, 2), G(1, 3)])
    c = formula_clifford(L)
    pts = [intersect(L, i, j) for i, j in combinations(range(3), 2)]
    assert c == circumcircle(*pts)
    assert all(on_circle(p, c) for p in pts)


def test_parity_guards():
    L = nline_new([G(2), G(0, 2), G(1, 3)])
    with pytest.raises(ValueError):
        clifford_point_even(L)
    with pytest.raises(ValueError):
        clifford_circle_odd(L.subset([0, 1]))


def test_circumcircle_and_second_intersection():
    c1 = circumcircle(G(0), G(2), G(0, 2))
    assert c1 == ExactCircle(G(1, 1), Fraction(2))
    with pytest.raises(GenericityViolation):
        circumcircle(G(0), G(1), G(2))
    c2 = ExactCircle(G(3, 1), Fraction(10))
    w = second_intersection(c1, c2, G(0))
    assert on_circle(w, c1) and on_circle(w, c2) and w != G(0)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_random_configurations_agree(n):
    rng = random.Random(100 + n)
    for _ in range(15):
        L = random_config(rng, n)
        chk = verify_config(L)
        assert chk.ok, chk.detail


def test_six_lines():
    rng = random.Random(6)
    for _ in range(3):
        assert verify_config(random_config(rng, 6)).ok


def test_even_point_lies_on_all_subset_circles():
    L = random_config(random.Random(11), 4)
    p = formula_clifford(L)
    for drop in range(4):
        assert on_circle(p, formula_clifford(L.subset([j for j in range(4) if j != drop])))


@given(st.lists(gauss, min_size=2, max_size=5, unique=True), st.randoms(use_true_random=False))
def test_c_coefficients_are_permutation_invariant(ys, rnd):
    try:
        L = nline_new(ys)
    except (ZeroPoint, GenericityViolation):
        assume(False)
    perm = list(range(len(ys)))
    rnd.shuffle(perm)
    M = L.subset(perm)
    for k in range(len(ys) + 1):
        assert c_coeff(L, k) == c_coeff(M, k)


@given(st.integers(2, 5), st.integers(0, 10**6), gauss)
def test_similarity_equivariance(n, seed, mu):
    assume(not mu.is_zero())
    L = random_config(random.Random(seed), n)
    try:
        M = nline_new([mu * y for y in L.ys])
        a, b = formula_clifford(L), formula_clifford(M)
    except (GenericityViolation, SingularHankel):
        assume(False)
    if n % 2 == 0:
        assert b == mu * a
    else:
        assert b.center == mu * a.center
        assert b.radius_sq == mu.norm() * a.radius_sq


def test_constructive_oracle_rejects_one_line():
    with pytest.raises(ValueError):
        constructive_clifford(nline_new([G(1)]))
