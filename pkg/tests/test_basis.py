from fractions import Fraction

import pytest
from hypothesis import given, settings

from genocchi.basis import (
    BasisExpansion,
    BasisKind,
    from_basis,
    genocchi_change_matrix,
    matrix_discrepancies,
    solve_upper_triangular,
    to_basis,
    to_bernoulli_basis,
    to_euler_basis,
    to_genocchi_basis,
)
from genocchi.polynomial import Polynomial, X
from genocchi.sequences import bernoulli_poly, euler_poly, genocchi_poly

from conftest import polynomials, random_polynomial

F = Fraction
EXPANDERS = {
    BasisKind.BERNOULLI: (to_bernoulli_basis, bernoulli_poly),
    BasisKind.EULER: (to_euler_basis, euler_poly),
    BasisKind.GENOCCHI: (to_genocchi_basis, genocchi_poly),
}


def test_bernoulli_examples():
    assert to_bernoulli_basis(Polynomial([1])).coefficients == (1,)
    assert to_bernoulli_basis(X).coefficients == (F(1, 2), 1)
    assert to_bernoulli_basis(bernoulli_poly(5)).coefficients == (0, 0, 0, 0, 0, 1)


def test_euler_examples():
    assert to_euler_basis(Polynomial([1])).coefficients == (1,)
    assert to_euler_basis(euler_poly(4)).coefficients == (0, 0, 0, 0, 1)
    assert to_euler_basis(X).coefficients == (F(1, 2), 1)


def test_genocchi_examples():
    e = to_genocchi_basis(Polynomial([1]))
    assert e.start == 1 and e.coefficients == (1,)
    assert to_genocchi_basis(genocchi_poly(4)).coefficients == (0, 0, 0, 1)
    e = to_genocchi_basis(X)
    assert e.indexed() == [(1, F(1, 2)), (2, F(1, 2))]
    assert e.coefficient(2) == F(1, 2)
    assert e.coefficient(7) == 0


def test_zero_polynomial_expansions():
    for kind in BasisKind:
        assert to_basis(Polynomial(), kind).coefficients == (0,)


def test_from_basis_examples():
    assert from_basis(BasisExpansion(BasisKind.GENOCCHI, (F(1),))) == Polynomial([1])
    assert from_basis(BasisExpansion(BasisKind.BERNOULLI, (F(0), F(1)))) == Polynomial([F(-1, 2), 1])
    assert from_basis(BasisExpansion(BasisKind.EULER, (F(1, 2), F(1)))) == X


def test_round_trip_200_random(rng):
    for _ in range(200):
        p = random_polynomial(rng, 12)
        for kind, (expand, _) in EXPANDERS.items():
            e = expand(p)
            assert e.kind is kind
            assert from_basis(e) == p
            assert expand(from_basis(e)) == e


@pytest.mark.parametrize("kind", list(EXPANDERS))
def test_unit_self_expansion(kind):
    expand, element = EXPANDERS[kind]
    for k in range(kind.start, 13):
        e = expand(element(k))
        unit = tuple(1 if j == k else 0 for j in range(kind.start, k + 1))
        assert e.coefficients == unit


def test_matrix_examples():
    m = genocchi_change_matrix(2)
    assert m.entries == ((1, -1, 0), (0, 2, -3), (0, 0, 3))
    assert genocchi_change_matrix(0).entries == ((1,),)
    cubic = genocchi_change_matrix(3)
    assert cubic.entries == ((1, -1, 0, 1), (0, 2, -3, 0), (0, 0, 3, -6), (0, 0, 0, 4))
    with pytest.raises(ValueError):
        genocchi_change_matrix(-1)


def test_matrix_discrepancy_only_at_cubic_corner():
    assert matrix_discrepancies(genocchi_change_matrix(2)) == []
    rows = matrix_discrepancies(genocchi_change_matrix(3))
    assert [(r["entry"], r["computed"], r["published"]) for r in rows] == [([1, 4], "1/1", "-1/1")]


def test_matrix_structure():
    for n in range(21):
        m = genocchi_change_matrix(n)
        for i in range(n + 1):
            assert m.entries[i][i] == i + 1
            for j in range(i):
                assert m.entries[i][j] == 0
        for j in range(n + 1):
            assert Polynomial(row[j] for row in m.entries) == genocchi_poly(j + 1)


def test_solve_examples():
    assert solve_upper_triangular(genocchi_change_matrix(2), Polynomial([-1, 2])) == [0, 1, 0]
    x2 = Polynomial([0, 0, 1])
    assert solve_upper_triangular(genocchi_change_matrix(2), x2) == list(to_genocchi_basis(x2).coefficients)
    assert solve_upper_triangular(genocchi_change_matrix(0), Polynomial([5])) == [5]
    with pytest.raises(ValueError):
        solve_upper_triangular(genocchi_change_matrix(1), x2)


@settings(max_examples=100)
@given(polynomials(10))
def test_matrix_path_matches_derivative_path(p):
    n = 10
    c = solve_upper_triangular(genocchi_change_matrix(n), p)
    e = to_genocchi_basis(p)
    assert c == [e.coefficient(k) for k in range(1, n + 2)]


def test_latex_layout():
    tex = genocchi_change_matrix(2).to_latex()
    assert "1 & -1 & 0 \\\\\n0 & 2 & -3 \\\\\n0 & 0 & 3" in tex
    assert "1 & x & x^{2}" in tex


def test_matrix_json():
    assert genocchi_change_matrix(1).to_json() == {"n": 1, "entries": [["1/1", "-1/1"], ["0/1", "2/1"]]}
