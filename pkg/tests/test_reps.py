from __future__ import annotations

import pytest

from groupdet.groups import make_group
from groupdet.reps import (
    chi_prime,
    irreducible_set,
    is_homomorphism,
    literal_quaternion_reps,
    rotation_characters,
    table_rows,
)

GROUPS = ["C1", "C5", "C2xC4", "C3xC3", "D3", "D4", "D5", "D6", "D7", "D8", "Q2", "Q3", "Q4", "Q5"]


def trace(M):
    return sum((M[i][i] for i in range(1, len(M))), M[0][0])


def character_of(rep, i):
    return trace(rep.matrix(i))


@pytest.mark.parametrize("spec", GROUPS)
def test_every_table_entry_is_a_homomorphism(spec):
    for rep in irreducible_set(make_group(spec)).all:
        assert is_homomorphism(rep), rep.name


@pytest.mark.parametrize("spec", GROUPS)
def test_sum_of_squared_degrees(spec):
    G = make_group(spec)
    assert sum(d * d for d in irreducible_set(G).degrees()) == G.order


@pytest.mark.parametrize("spec", GROUPS)
def test_character_orthogonality(spec):
    # <chi_p, chi_q> = |G| delta_pq proves irreducibility and pairwise inequivalence
    G = make_group(spec)
    reps = irreducible_set(G).all
    for p in reps:
        for q in reps:
            s = sum(
                (character_of(p, i) * character_of(q, i).conjugate() for i in range(1, G.order)),
                character_of(p, 0) * character_of(q, 0).conjugate(),
            )
            assert s == (G.order if p is q else 0), (p.name, q.name)


@pytest.mark.parametrize(
    "spec,degrees",
    [
        ("D3", [1, 1, 2]),
        ("D4", [1, 1, 1, 1, 2]),
        ("D5", [1, 1, 2, 2]),
        ("D6", [1, 1, 1, 1, 2, 2]),
        ("Q2", [1, 1, 1, 1, 2]),
        ("Q3", [1, 1, 1, 1, 2, 2]),
    ],
)
def test_degree_lists(spec, degrees):
    assert irreducible_set(make_group(spec)).degrees() == degrees


def test_chi3_at_b_is_i_only_for_odd_quaternion():
    for spec, rational in [("Q3", False), ("Q5", False), ("Q2", True), ("Q4", True), ("D4", True)]:
        G = make_group(spec)
        chi3 = irreducible_set(G).character("chi3")
        assert chi3(G.a_pow_b(0)).is_rational() is rational


def test_d_odd_has_two_linear_characters():
    reps = irreducible_set(make_group("D5"))
    assert not reps.has_four_linear()
    with pytest.raises(KeyError):
        reps.character("chi3")


@pytest.mark.parametrize("spec", ["D4", "D5", "Q3"])
def test_rotation_characters(spec):
    G = make_group(spec)
    chis = rotation_characters(G)
    assert len(chis) == G.rotation_order
    for chi in chis:
        assert is_homomorphism(chi)
    with pytest.raises(ValueError):
        chi_prime(G, G.rotation_order)


def test_literal_quaternion_table_fails_for_even_l():
    G = make_group("Q3")
    literal = {rep.name: is_homomorphism(rep) for rep in literal_quaternion_reps(G)}
    assert literal == {"phi1": True, "phi2": False}
    assert all(is_homomorphism(rep) for rep in irreducible_set(G).degree_two)


def test_table_rows_shape():
    G = make_group("D4")
    rows = table_rows(G)
    assert [name for name, _ in rows] == ["chi1", "chi2", "chi3", "chi4", "phi1"]
    assert all(len(cells) == G.order for _, cells in rows)
