from __future__ import annotations

import random

import pytest
from hypothesis import given, settings, strategies as st

from conftest import group_matrix_values, laplace_det, solve
from groupdet.detlab import (
    SingularElementError,
    SymbolicLimitError,
    circulant_theta,
    frobenius_theta,
    group_matrix,
    inverse_element,
    numeric_det_at,
    symbolic_det,
    theta_e_product,
)
from groupdet.groups import make_group

SMALL = ["C1", "C2", "C3", "C4", "C5", "C6", "C2xC2", "D3"]


def fresh_point(G, seed, bound=9):
    rng = random.Random(seed)
    return [rng.randint(-bound, bound) for _ in range(G.order)]


def test_golden_c2_c3():
    assert str(symbolic_det(group_matrix(make_group("C2")))) == "x[e]^2 - x[a]^2"
    assert str(symbolic_det(group_matrix(make_group("C3")))) == "x[e]^3 - 3*x[e]*x[a]*x[a^2] + x[a]^3 + x[a^2]^3"


@pytest.mark.parametrize("spec", SMALL)
@settings(max_examples=15)
@given(seed=st.integers(0, 10**6))
def test_symbolic_and_numeric_match_cofactor_oracle(spec, seed):
    G = make_group(spec)
    vals = fresh_point(G, seed)
    expected = laplace_det(group_matrix_values(G, vals))
    theta = symbolic_det(group_matrix(G))
    F = theta.field
    assign = {i: F.scalar(v) for i, v in enumerate(vals)}
    assert theta.evaluate(assign) == expected
    assert numeric_det_at(group_matrix(G), vals) == expected


@pytest.mark.parametrize("spec", ["C6", "D3", "D4", "Q2", "C2xC4"])
def test_theta_is_homogeneous_of_degree_order(spec):
    G = make_group(spec)
    theta = symbolic_det(group_matrix(G))
    assert theta.is_homogeneous(G.order)
    # coefficient of x_e^|G| is 1
    assert theta.coefficient({G.identity_index: G.order}) == 1


@pytest.mark.parametrize("spec", ["C4", "C2xC2", "D3", "Q2"])
def test_frobenius_matches_symbolic(spec):
    G = make_group(spec)
    assert frobenius_theta(G) == symbolic_det(group_matrix(G))


@pytest.mark.parametrize("spec", ["D5", "D8", "Q4"])
def test_circulant_and_frobenius_match_numeric(spec):
    G = make_group(spec)
    for seed in range(3):
        vals = fresh_point(G, seed, bound=10 * G.order)
        det = numeric_det_at(group_matrix(G), vals)
        assert circulant_theta(G, vals) == det
        assert frobenius_theta(G, vals) == det


def test_symbolic_limit():
    with pytest.raises(SymbolicLimitError):
        symbolic_det(group_matrix(make_group("D5")))
    with pytest.raises(SymbolicLimitError):
        frobenius_theta(make_group("Q3"))


def test_inverse_c2_golden():
    G = make_group("C2")
    inv = inverse_element(G, [2, 1])
    assert [str(c.constant_value()) for c in inv.coeffs] == ["2/3", "-1/3"]


@pytest.mark.parametrize("spec", ["C6", "C2xC2", "D3", "D4", "Q2", "D5", "Q3"])
def test_inverse_matches_linear_solve(spec):
    # alpha * y = e is the linear system (group matrix) y = delta_e
    G = make_group(spec)
    for seed in range(3):
        vals = fresh_point(G, seed)
        M = group_matrix_values(G, vals)
        if numeric_det_at(group_matrix(G), vals) == 0:
            continue
        rhs = [1 if g == G.identity else 0 for g in G.elements()]
        expected = solve(M, rhs)
        inv = inverse_element(G, vals)
        assert [c.constant_value() for c in inv.coeffs] == expected


def test_singular_point_raises():
    with pytest.raises(SingularElementError):
        inverse_element(make_group("C2"), [1, 1])
    with pytest.raises(SingularElementError):
        inverse_element(make_group("D3"), [0] * 6)


@pytest.mark.parametrize("spec", ["C6", "D3", "Q2"])
def test_theta_e_product_symbolic(spec):
    G = make_group(spec)
    prod = theta_e_product(G)
    theta = symbolic_det(group_matrix(G))
    assert prod.coefficient(G.identity) == theta
    assert all(c.is_zero() for i, c in enumerate(prod.coeffs) if i != G.identity_index)


def test_missing_assignment_value():
    with pytest.raises(KeyError):
        numeric_det_at(group_matrix(make_group("C3")), {0: 1, 1: 2})
