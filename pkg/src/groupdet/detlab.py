"""Group determinants and their factorizations.

Every factorization can run symbolically (``assign=None``) or at a point
(``assign`` maps variable ids to numbers); the pointwise path builds the same
objects from constant polynomials.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .cyclotomic import CycloNumber
from .group_algebra import (
    AlgebraElement,
    A_values,
    alpha,
    alpha_chi,
    beta,
    product,
)
from .groups import FiniteGroup, GroupKind
from .polyring import Poly, poly_ring
from .reps import irreducible_set, rep_factor_det, rotation_characters

SYMBOLIC_LIMIT = 8


class SymbolicLimitError(ValueError):
    """Group too large for a symbolic determinant; use a numeric assignment instead."""


class SingularElementError(ZeroDivisionError):
    """The group determinant vanishes at the requested point."""


@dataclass(frozen=True)
class GroupMatrix:
    """entries[g][h] is the variable id of x_{g h^-1}."""

    group: FiniteGroup
    entries: tuple[tuple[int, ...], ...]


def group_matrix(G: FiniteGroup) -> GroupMatrix:
    n = G.order
    return GroupMatrix(G, tuple(tuple(G.mul_index(g, G.inv_index(h)) for h in range(n)) for g in range(n)))


def _check_limit(G: FiniteGroup, limit: int) -> None:
    if G.order > limit:
        raise SymbolicLimitError(f"|{G.spec}| = {G.order} exceeds the symbolic limit {limit}")


def symbolic_det(M: GroupMatrix, limit: int = SYMBOLIC_LIMIT) -> Poly:
    """Exact determinant by expansion along rows with memoized minors over column subsets.

    minor[S] is the determinant of rows 0..|S|-1 restricted to columns S.
    """
    G = M.group
    _check_limit(G, limit)
    ring = poly_ring(G)
    n = G.order
    minors: dict[int, Poly] = {0: ring.one()}
    for row in range(n):
        nxt: dict[int, Poly] = {}
        entries = M.entries[row]
        for S, sub in minors.items():
            if not sub:
                continue
            for j in range(n):
                bit = 1 << j
                if S & bit:
                    continue
                # sign of column j within S | {j}, counted from the right end
                above = bin(S >> (j + 1)).count("1")
                term = sub.mul_monomial(entries[j], -1 if above % 2 else 1)
                T = S | bit
                cur = nxt.get(T)
                nxt[T] = term if cur is None else cur + term
        minors = nxt
    return minors[(1 << n) - 1]


def _as_numbers(G: FiniteGroup, assign) -> list[CycloNumber]:
    F = poly_ring(G).field
    out = []
    for i in range(G.order):
        try:
            v = assign[i]
        except (KeyError, IndexError):
            raise KeyError(f"assignment missing variable {G.name(G.element(i))}") from None
        out.append(v if isinstance(v, CycloNumber) else F.scalar(v))
    return out


def numeric_det_at(M: GroupMatrix, assign) -> CycloNumber:
    """Determinant of the evaluated group matrix by exact Gaussian elimination."""
    G = M.group
    vals = _as_numbers(G, assign)
    F = vals[0].field
    n = G.order
    A = [[vals[M.entries[r][c]] for c in range(n)] for r in range(n)]
    det = F.one()
    for col in range(n):
        # prefer a rational pivot: its inverse is cheap
        pivot = None
        for r in range(col, n):
            if A[r][col]:
                if pivot is None or (A[r][col].is_rational() and not A[pivot][col].is_rational()):
                    pivot = r
                    if A[r][col].is_rational():
                        break
        if pivot is None:
            return F.zero()
        if pivot != col:
            A[col], A[pivot] = A[pivot], A[col]
            det = -det
        p = A[col][col]
        det = det * p
        p_inv = p.inverse()
        for r in range(col + 1, n):
            if A[r][col]:
                f = A[r][col] * p_inv
                row_c = A[col]
                row_r = A[r]
                for c in range(col + 1, n):
                    if row_c[c]:
                        row_r[c] = row_r[c] - f * row_c[c]
    return det


def point_vars(G: FiniteGroup, assign) -> list[Poly]:
    """Constant polynomials holding the assignment values."""
    ring = poly_ring(G)
    return [ring.const(v) for v in _as_numbers(G, assign)]


def _vars(G: FiniteGroup, assign, limit: int) -> list[Poly]:
    if assign is None:
        _check_limit(G, limit)
        return poly_ring(G).variables()
    return point_vars(G, assign)


def _result(p: Poly, assign):
    return p if assign is None else p.constant_value()


def frobenius_theta(G: FiniteGroup, assign=None, limit: int = SYMBOLIC_LIMIT):
    """prod over irreducibles phi of det(sum_g phi(g) x_g)^deg(phi)."""
    x = _vars(G, assign, limit)
    total = x[0].ring.one()
    for rep in irreducible_set(G).all:
        total = total * rep_factor_det(G, rep, x) ** rep.degree
    return _result(total, assign)


def frobenius_factors(G: FiniteGroup, x: Sequence[Poly] | None = None) -> list[tuple[str, int, Poly]]:
    """(name, multiplicity, det factor) per irreducible representation."""
    if x is None:
        x = poly_ring(G).variables()
    return [(rep.name, rep.degree, rep_factor_det(G, rep, x)) for rep in irreducible_set(G).all]


def circulant_factors(G: FiniteGroup, x: Sequence[Poly]) -> list[Poly]:
    """sum over g in <a> of chi'(g) A_g, one per character chi' of <a>."""
    if G.kind is GroupKind.ABELIAN:
        raise ValueError("circulant form needs D_m or Q_m")
    A = A_values(G, x)
    out = []
    for chi in rotation_characters(G):
        total = x[0].ring.zero()
        for g in range(G.rotation_order):
            total = total + A[g].scale(chi.at(g))
        out.append(total)
    return out


def circulant_theta(G: FiniteGroup, assign=None, limit: int = SYMBOLIC_LIMIT):
    """Theta(G) as the product of the circulant factors in the A_h."""
    if G.kind is GroupKind.ABELIAN:
        raise ValueError("circulant form needs D_m or Q_m")
    x = _vars(G, assign, limit)
    total = x[0].ring.one()
    for f in circulant_factors(G, x):
        total = total * f
    return _result(total, assign)


def theta_e_factors(G: FiniteGroup, x: Sequence[Poly]) -> list[AlgebraElement]:
    """Factors whose ordered product is Theta(G) e.

    Abelian: alpha_chi over all characters.  D_m / Q_m: beta(chi') over the
    characters of <a>, with the A_g as coefficients.
    """
    if G.kind is GroupKind.ABELIAN:
        return [alpha_chi(G, chi, x) for chi in irreducible_set(G).degree_one]
    A = A_values(G, x)
    return [beta(G, chi, A=A) for chi in rotation_characters(G)]


def theta_e_product(G: FiniteGroup, assign=None, limit: int = SYMBOLIC_LIMIT) -> AlgebraElement:
    x = _vars(G, assign, limit)
    return product(theta_e_factors(G, x))


def inverse_factors(G: FiniteGroup, x: Sequence[Poly]) -> list[AlgebraElement]:
    """Factors whose ordered product, divided by Theta(G), inverts alpha_1.

    Abelian: alpha_chi for chi != chi_1.  D_m, m odd: alpha_2 and beta(chi')
    for chi' != chi'_0.  Otherwise alpha_2 alpha_3 alpha_4 and beta(chi') for
    chi' outside {chi'_0, chi'_{|<a>|/2}}.
    """
    if G.kind is GroupKind.ABELIAN:
        return [alpha_chi(G, chi, x) for chi in irreducible_set(G).degree_one[1:]]
    A = A_values(G, x)
    chis = rotation_characters(G)
    r = G.rotation_order
    if not irreducible_set(G).has_four_linear():
        return [alpha(G, 2, x)] + [beta(G, chi, A=A) for chi in chis[1:]]
    skip = {0, r // 2}
    return [alpha(G, 2, x), alpha(G, 3, x), alpha(G, 4, x)] + [
        beta(G, chis[l], A=A) for l in range(r) if l not in skip
    ]


def inverse_element(G: FiniteGroup, assign) -> AlgebraElement:
    """alpha_1^{-1} at a point, from the factorization formulas."""
    x = point_vars(G, assign)
    theta = numeric_det_at(group_matrix(G), assign)
    if not theta:
        raise SingularElementError(f"Theta({G.spec}) vanishes at this assignment; alpha_1 is not invertible")
    return product(inverse_factors(G, x)).scale(theta.inverse())
