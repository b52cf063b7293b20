from __future__ import annotations

import itertools

import pytest
from hypothesis import given, strategies as st

from groupdet.groups import GroupKind, GroupSpecError, make_group, parse_group_spec

ALL = ["C1", "C2", "C6", "C2xC4", "C3xC3xC2", "D3", "D4", "D7", "Q2", "Q3", "Q5"]


@pytest.mark.parametrize("spec,order", [("C6", 6), ("C2xC2xC2", 8), ("D5", 10), ("Q3", 12), ("Q2", 8), ("c2xc3", 6)])
def test_order(spec, order):
    assert make_group(spec).order == order


@pytest.mark.parametrize("spec", ALL)
def test_group_axioms_brute_force(spec):
    G = make_group(spec)
    els = G.elements()
    assert len(set(els)) == G.order
    e = G.identity
    for g in els:
        assert G.mul(g, e) == g == G.mul(e, g)
        assert G.mul(g, G.inv(g)) == e
    for g, h, k in itertools.product(els, repeat=3):
        assert G.mul(G.mul(g, h), k) == G.mul(g, G.mul(h, k))


@pytest.mark.parametrize("m", [3, 4, 5, 8])
def test_dihedral_presentation(m):
    G = make_group(f"D{m}")
    a, b, e = G.a_pow(1), G.a_pow_b(0), G.identity

    def power(g, n):
        out = e
        for _ in range(n):
            out = G.mul(out, g)
        return out

    assert power(a, m) == e and all(power(a, k) != e for k in range(1, m))
    assert G.mul(b, b) == e
    assert G.mul(G.mul(G.inv(b), a), b) == G.inv(a)


@pytest.mark.parametrize("m", [2, 3, 4, 5])
def test_quaternion_presentation(m):
    G = make_group(f"Q{m}")
    a, b, e = G.a_pow(1), G.a_pow_b(0), G.identity

    def power(g, n):
        out = e
        for _ in range(n):
            out = G.mul(out, g)
        return out

    assert power(a, 2 * m) == e and all(power(a, k) != e for k in range(1, 2 * m))
    assert G.mul(b, b) == power(a, m)
    assert G.mul(G.mul(G.inv(b), a), b) == G.inv(a)
    # unique involution
    assert [g for g in G.elements() if g != e and G.mul(g, g) == e] == [power(a, m)]


def test_abelian_is_commutative_and_dq_are_not():
    C = make_group("C2xC6")
    assert all(C.mul(g, h) == C.mul(h, g) for g in C.elements() for h in C.elements())
    for spec in ["D3", "Q2"]:
        G = make_group(spec)
        assert any(G.mul(g, h) != G.mul(h, g) for g in G.elements() for h in G.elements())


def test_element_order_convention():
    G = make_group("D3")
    assert G.names() == ["e", "a", "a^2", "b", "a*b", "a^2*b"]
    assert make_group("C3").names() == ["e", "a", "a^2"]
    assert make_group("C2xC2").names() == ["(0,0)", "(0,1)", "(1,0)", "(1,1)"]


@pytest.mark.parametrize("spec", ALL)
def test_names_round_trip(spec):
    G = make_group(spec)
    for g in G.elements():
        assert G.parse_element(G.name(g)) == g


def test_rotation_subgroup():
    G = make_group("Q3")
    rot = G.rotation_subgroup()
    assert len(rot) == 6 and all(G.in_rotation(g) for g in rot)
    assert not G.in_rotation(G.a_pow_b(2))


@pytest.mark.parametrize("bad", ["D2", "D1", "Q1", "C0", "X5", "C", "D", "", "C2x", "Q-3"])
def test_invalid_specs(bad):
    with pytest.raises(GroupSpecError):
        parse_group_spec(bad)


def test_invalid_element():
    with pytest.raises(ValueError):
        make_group("D3").index((5, 0))


def test_spec_kinds_and_str():
    assert parse_group_spec("C2xC6").kind is GroupKind.ABELIAN
    assert str(parse_group_spec("d5")) == "D5"
    assert make_group("Q3") is make_group(parse_group_spec("Q3"))


def test_conductor():
    assert make_group("C2xC6").conductor == 6
    assert make_group("D5").conductor == 10
    assert make_group("D4").conductor == 4
    assert make_group("Q3").conductor == 12


@given(st.sampled_from(["D5", "Q4", "C3xC4"]), st.data())
def test_inverse_is_antihomomorphism(spec, data):
    G = make_group(spec)
    g = data.draw(st.sampled_from(G.elements()))
    h = data.draw(st.sampled_from(G.elements()))
    assert G.inv(G.mul(g, h)) == G.mul(G.inv(h), G.inv(g))
