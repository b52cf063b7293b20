"""Closed-form coefficient sums for the commutator calculus of alpha_1, alpha_3, alpha_4.

All builders take the variable list ``x`` (symbolic or constant) and return
:class:`Poly` values; ``h`` is an element index.
"""

from __future__ import annotations

from typing import Callable, Iterable, Sequence

from ..groups import FiniteGroup
from ..polyring import Poly
from ..reps import irreducible_set


def _sum(ring, terms: Iterable[Poly]) -> Poly:
    total = ring.zero()
    for t in terms:
        total = total + t
    return total


class Sums:
    """The recurring sums over <a>, G minus <a>, or G, bound to one group and variable list."""

    def __init__(self, G: FiniteGroup, x: Sequence[Poly]):
        self.G = G
        self.x = x
        self.ring = x[0].ring
        self.r = G.rotation_order
        self.rot = range(self.r)
        self.off = range(self.r, G.order)
        self.all = range(G.order)
        self.mul = G.mul_index
        self.inv = G.inv_index
        self.b = G.index(G.a_pow_b(0))
        reps = irreducible_set(G)
        self.chi3 = reps.character("chi3").at if reps.has_four_linear() else None

    def s(self, gs: Iterable[int], f: Callable[[int], Poly]) -> Poly:
        return _sum(self.ring, (f(g) for g in gs))

    def chi3_g_x_g_x_ginv_h(self, gs, h: int) -> Poly:
        """sum chi3(g) x_g x_{g^-1 h}."""
        x, M, I = self.x, self.mul, self.inv
        return self.s(gs, lambda g: (x[g] * x[M(I(g), h)]).scale(self.chi3(g)))

    def chi3_ginv_x_g_x_ginv_h(self, gs, h: int) -> Poly:
        """sum chi3(g^-1) x_g x_{g^-1 h}."""
        x, M, I = self.x, self.mul, self.inv
        return self.s(gs, lambda g: (x[g] * x[M(I(g), h)]).scale(self.chi3(I(g))))

    def chi3_g_x_g_x_gh(self, gs, h: int) -> Poly:
        """sum chi3(g) x_g x_{g h}."""
        x, M = self.x, self.mul
        return self.s(gs, lambda g: (x[g] * x[M(g, h)]).scale(self.chi3(g)))

    def chi3_g_x_g_x_hg(self, gs, h: int) -> Poly:
        """sum chi3(g) x_g x_{h g}."""
        x, M = self.x, self.mul
        return self.s(gs, lambda g: (x[g] * x[M(h, g)]).scale(self.chi3(g)))

    def chi3_g_x_g_x_hginv(self, gs, h: int) -> Poly:
        """sum chi3(g) x_g x_{h g^-1}."""
        x, M, I = self.x, self.mul, self.inv
        return self.s(gs, lambda g: (x[g] * x[M(h, I(g))]).scale(self.chi3(g)))

    def chi3_ginvh_x_g_x_ginv_h(self, gs, h: int) -> Poly:
        """sum chi3(g^-1 h) x_g x_{g^-1 h}."""
        x, M, I = self.x, self.mul, self.inv
        return self.s(gs, lambda g: (x[g] * x[M(I(g), h)]).scale(self.chi3(M(I(g), h))))

    def i_valued(self) -> bool:
        """chi3(b) = +-i, the table variant of Q_m with m odd."""
        return not self.chi3(self.b).is_rational()

    def imag_unit(self):
        F = self.ring.field
        return F.root_of_unity(F.L // 4)


# -- substitution-free identities ---------------------------------------------------


def conj_pair_lhs(S: Sums, h: int) -> Poly:
    """sum over g in <a> of x_{gb} x_{b^-1 g^-1 h}."""
    x, M, I, b = S.x, S.mul, S.inv, S.b
    return S.s(S.rot, lambda g: x[M(g, b)] * x[M(M(I(b), I(g)), h)])


def conj_pair_rhs(S: Sums, h: int) -> Poly:
    """sum over g in <a> of x_{gb} x_{h g b^-1}."""
    x, M, I, b = S.x, S.mul, S.inv, S.b
    return S.s(S.rot, lambda g: x[M(g, b)] * x[M(M(h, g), I(b))])


def coset_swap_lhs(S: Sums, h: int) -> Poly:
    """sum over g off <a> of x_g x_{g^-1 h}."""
    x, M, I = S.x, S.mul, S.inv
    return S.s(S.off, lambda g: x[g] * x[M(I(g), h)])


def coset_swap_rhs(S: Sums, h: int) -> Poly:
    """sum over g in <a> of x_g x_{g h}."""
    x, M = S.x, S.mul
    return S.s(S.rot, lambda g: x[g] * x[M(g, h)])


# -- [alpha_1, alpha_3] -------------------------------------------------------------------


def comm13_expansion(S: Sums, h: int) -> Poly:
    """Coefficient of h in the double-sum expansion of [alpha_1, alpha_3]."""
    return S.chi3_ginvh_x_g_x_ginv_h(S.all, h) - S.chi3_g_x_g_x_ginv_h(S.all, h)


def odd_rotation_sum(S: Sums, h: int) -> Poly:
    """sum over g in <a> of chi3(g) x_g x_{g^-1 h}; vanishes for h = a^k, k odd."""
    return S.chi3_g_x_g_x_ginv_h(S.rot, h)


def comm13_rotation_coeff(S: Sums, k: int) -> Poly:
    """Closed form for the coefficient of a^k in [alpha_1, alpha_3]."""
    h = k
    first = S.chi3_ginv_x_g_x_ginv_h(S.off, h)
    if k % 2:
        first = -first
    return first - S.chi3_g_x_g_x_ginv_h(S.off, h)


def comm13_coset_coeff(S: Sums, k: int) -> Poly:
    """Closed form for the coefficient of a^k b in [alpha_1, alpha_3]; branch keyed on chi3(b)."""
    h = S.mul(k, S.b)
    if S.i_valued():
        i = S.imag_unit()
        c = (1 + i) if k % 2 else (1 - i)
        return (S.chi3_g_x_g_x_gh(S.rot, h) - S.chi3_g_x_g_x_ginv_h(S.rot, h)).scale(c)
    if k % 2:
        return S.chi3_g_x_g_x_ginv_h(S.all, h).scale(-2)
    return S.ring.zero()


# -- [alpha_1, alpha_4] -------------------------------------------------------------------


def comm14_expansion(S: Sums, h: int) -> Poly:
    """Coefficient of h in the four-sum expansion of [alpha_1, alpha_4]."""
    return (
        S.chi3_g_x_g_x_hg(S.rot, h)
        - S.chi3_g_x_g_x_hginv(S.off, h)
        - S.chi3_g_x_g_x_gh(S.rot, h)
        + S.chi3_g_x_g_x_ginv_h(S.off, h)
    )


def comm14_rotation_coeff(S: Sums, k: int) -> Poly:
    """Closed form for the coefficient of a^k in [alpha_1, alpha_4]."""
    h = k
    first = S.chi3_ginv_x_g_x_ginv_h(S.off, h)
    if k % 2 == 0:
        first = -first
    return first + S.chi3_g_x_g_x_ginv_h(S.off, h)


def comm14_coset_coeff(S: Sums, k: int) -> Poly:
    """Closed form for the coefficient of a^k b in [alpha_1, alpha_4]; branch keyed on chi3(b)."""
    h = S.mul(k, S.b)
    if S.i_valued():
        i = S.imag_unit()
        c = (1 + i) if k % 2 else (1 - i)
        return (S.chi3_g_x_g_x_ginv_h(S.rot, h) - S.chi3_g_x_g_x_gh(S.rot, h)).scale(c)
    if k % 2:
        return S.chi3_g_x_g_x_ginv_h(S.all, h).scale(2)
    return S.ring.zero()
