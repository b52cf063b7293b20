"""Irreducible representations of the supported groups and the Fourier transform.

Degree-one representations are :class:`Character` objects; the dihedral and
quaternion families add degree-two :class:`MatrixRep` objects.  Matrices are
tuples of row tuples of :class:`CycloNumber`; only sizes 1 and 2 occur.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from typing import Sequence

from .cyclotomic import CycloField, CycloNumber, cyclo_field
from .groups import FiniteGroup, GroupElement, GroupKind
from .polyring import Poly, poly_ring

Matrix = tuple[tuple[CycloNumber, ...], ...]


@dataclass(frozen=True)
class Character:
    """A degree-one representation; ``values[i]`` is the value at element index i of ``domain``.

    ``domain`` is the whole group, or ``<a>`` when ``on_rotation`` is set (then
    indices run over a^0 .. a^(r-1)).
    """

    name: str
    group: FiniteGroup
    values: tuple[CycloNumber, ...]
    on_rotation: bool = False

    degree = 1

    def __call__(self, g: GroupElement) -> CycloNumber:
        i = self.group.index(g)
        if self.on_rotation and i >= self.group.rotation_order:
            raise ValueError(f"{self.group.name(g)} is not in <a>")
        return self.values[i]

    def at(self, i: int) -> CycloNumber:
        return self.values[i]

    def matrix(self, i: int) -> Matrix:
        return ((self.values[i],),)


@dataclass(frozen=True)
class MatrixRep:
    name: str
    group: FiniteGroup
    degree: int
    values: tuple[Matrix, ...]

    def __call__(self, g: GroupElement) -> Matrix:
        return self.values[self.group.index(g)]

    def matrix(self, i: int) -> Matrix:
        return self.values[i]


@dataclass(frozen=True)
class RepSet:
    group: FiniteGroup
    field: CycloField
    degree_one: tuple[Character, ...]
    degree_two: tuple[MatrixRep, ...]

    @property
    def all(self) -> tuple:
        return self.degree_one + self.degree_two

    def degrees(self) -> list[int]:
        return [r.degree for r in self.all]

    def character(self, name: str) -> Character:
        for c in self.degree_one:
            if c.name == name:
                return c
        raise KeyError(f"{self.group.spec} has no degree-one representation {name}")

    def has_four_linear(self) -> bool:
        return len(self.degree_one) == 4


# -- matrix helpers -------------------------------------------------------------


def mat_mul(A: Sequence[Sequence], B: Sequence[Sequence]) -> tuple:
    n, k, p = len(A), len(B), len(B[0])
    return tuple(
        tuple(_dot([A[i][t] for t in range(k)], [B[t][j] for t in range(k)]) for j in range(p)) for i in range(n)
    )


def _dot(xs, ys):
    total = xs[0] * ys[0]
    for x, y in zip(xs[1:], ys[1:]):
        total = total + x * y
    return total


def mat_add(A, B) -> tuple:
    return tuple(tuple(a + b for a, b in zip(ra, rb)) for ra, rb in zip(A, B))


def mat_scale(A, c) -> tuple:
    return tuple(tuple(a * c for a in row) for row in A)


def mat_det(A):
    """Determinant of a 1x1 or 2x2 matrix over any commutative ring."""
    if len(A) == 1:
        return A[0][0]
    if len(A) == 2:
        return A[0][0] * A[1][1] - A[0][1] * A[1][0]
    raise ValueError("only degrees 1 and 2 occur")


def mat_conj(A) -> tuple:
    return tuple(tuple(a.conjugate() for a in row) for row in A)


def identity_matrix(F: CycloField, d: int) -> Matrix:
    return tuple(tuple(F.one() if i == j else F.zero() for j in range(d)) for i in range(d))


# -- tables -----------------------------------------------------------------------


def _omega(G: FiniteGroup, F: CycloField, power: int) -> CycloNumber:
    # omega is a primitive |<a>|-th root of unity
    r = G.rotation_order
    return F.root_of_unity((F.L // r) * power)


def _abelian_characters(G: FiniteGroup, F: CycloField) -> list[Character]:
    ns = G.spec.params
    chars = []
    for ls in itertools.product(*(range(n) for n in ns)):
        vals = []
        for g in G.elements():
            k = sum((F.L // n) * l * e for n, l, e in zip(ns, ls, g))
            vals.append(F.root_of_unity(k))
        name = "chi" + ("".join(map(str, ls)) if len(ns) == 1 else "(" + ",".join(map(str, ls)) + ")")
        chars.append(Character(name, G, tuple(vals)))
    return chars


def _linear_characters(G: FiniteGroup, F: CycloField) -> list[Character]:
    one, minus = F.one(), -F.one()

    def sign(n):
        return one if n % 2 == 0 else minus

    elems = G.elements()
    chars = [
        Character("chi1", G, tuple(one for _ in elems)),
        Character("chi2", G, tuple(sign(l) for _, l in elems)),
    ]
    m = G.spec.m
    if G.kind is GroupKind.DIHEDRAL and m % 2:
        return chars
    # value of chi3 at b: i for Q_m with m odd, otherwise 1
    c = F.root_of_unity(F.L // 4) if (G.kind is GroupKind.QUATERNION and m % 2) else one
    chars.append(Character("chi3", G, tuple(sign(k) * (c if l else one) for k, l in elems)))
    chars.append(Character("chi4", G, tuple(sign(k) * (-c if l else one) for k, l in elems)))
    return chars


def _two_dim(G: FiniteGroup, F: CycloField, literal_table: bool = False) -> list[MatrixRep]:
    m = G.spec.m
    if G.kind is GroupKind.DIHEDRAL:
        ls = range(1, (m - 1) // 2 + 1) if m % 2 else range(1, m // 2)
    else:
        ls = range(1, m)
    zero = F.zero()
    reps = []
    for l in ls:
        if G.kind is GroupKind.DIHEDRAL:
            s = F.one()
        elif literal_table:
            s = -F.one()
        else:
            # phi_l(b)^2 must equal phi_l(a^m) = (-1)^l I
            s = F.one() if l % 2 == 0 else -F.one()
        vals = []
        for k, b in G.elements():
            w, wi = _omega(G, F, l * k), _omega(G, F, -l * k)
            if b:
                vals.append(((zero, w), (s * wi, zero)))
            else:
                vals.append(((w, zero), (zero, wi)))
        reps.append(MatrixRep(f"phi{l}", G, 2, tuple(vals)))
    return reps


@functools.lru_cache(maxsize=None)
def irreducible_set(G: FiniteGroup) -> RepSet:
    """Complete set of irreducible representations, ordered chi1, chi2[, chi3, chi4], phi_1, ..."""
    F = cyclo_field(G.conductor)
    if G.kind is GroupKind.ABELIAN:
        return RepSet(G, F, tuple(_abelian_characters(G, F)), ())
    return RepSet(G, F, tuple(_linear_characters(G, F)), tuple(_two_dim(G, F)))


def literal_quaternion_reps(G: FiniteGroup) -> list[MatrixRep]:
    """Degree-two Q_m matrices with phi_l(b) = [[0, 1], [-1, 0]] for every l; fails to be a homomorphism for even l."""
    if G.kind is not GroupKind.QUATERNION:
        raise ValueError("only defined for Q_m")
    return _two_dim(G, cyclo_field(G.conductor), literal_table=True)


def chi_prime(G: FiniteGroup, l: int) -> Character:
    """chi'_l(a^k) = omega^(l k) on <a>, omega a primitive |<a>|-th root of unity."""
    if G.kind is GroupKind.ABELIAN:
        raise ValueError("chi' is only defined for D_m and Q_m")
    r = G.rotation_order
    if not 0 <= l < r:
        raise ValueError(f"l must lie in [0, {r}), got {l}")
    F = cyclo_field(G.conductor)
    return Character(f"chi'{l}", G, tuple(_omega(G, F, l * k) for k in range(r)), on_rotation=True)


def rotation_characters(G: FiniteGroup) -> list[Character]:
    return [chi_prime(G, l) for l in range(G.rotation_order)]


def is_homomorphism(rep: Character | MatrixRep) -> bool:
    """Exhaustive check of rep(gh) = rep(g) rep(h) and rep(e) = I."""
    G = rep.group
    n = G.rotation_order if getattr(rep, "on_rotation", False) else G.order
    F = cyclo_field(G.conductor)
    if rep.matrix(G.identity_index) != identity_matrix(F, rep.degree):
        return False
    for i in range(n):
        for j in range(n):
            if rep.matrix(G.mul_index(i, j)) != mat_mul(rep.matrix(i), rep.matrix(j)):
                return False
    return True


# -- symbolic factors ----------------------------------------------------------------


def rep_matrix_sum(rep: Character | MatrixRep, x: Sequence[Poly]) -> tuple:
    """The matrix sum_g rep(g) x_g with Poly entries."""
    G = rep.group
    d = rep.degree
    ring = x[0].ring
    acc = [[ring.zero() for _ in range(d)] for _ in range(d)]
    for i in range(G.order):
        M = rep.matrix(i)
        for r in range(d):
            for c in range(d):
                if M[r][c]:
                    acc[r][c] = acc[r][c] + x[i].scale(M[r][c])
    return tuple(tuple(row) for row in acc)


def rep_factor_det(G: FiniteGroup, rep: Character | MatrixRep, x: Sequence[Poly] | None = None) -> Poly:
    """det(sum_g rep(g) x_g) as a Poly."""
    if rep.group != G:
        raise ValueError("representation belongs to another group")
    if x is None:
        x = poly_ring(G).variables()
    return mat_det(rep_matrix_sum(rep, x))


# -- Fourier transform ---------------------------------------------------------------


@dataclass(frozen=True)
class FourierImage:
    blocks: tuple[Matrix, ...]

    def __mul__(self, other: FourierImage) -> FourierImage:
        return FourierImage(tuple(mat_mul(a, b) for a, b in zip(self.blocks, other.blocks)))


def fourier_transform(f, reps: RepSet | None = None) -> FourierImage:
    """Blockwise f^(phi) = sum_g conj(phi(g)) f(g) over a complete irreducible set.

    ``f`` is an :class:`~groupdet.group_algebra.AlgebraElement` whose
    coefficients are constants.
    """
    G = f.group
    if reps is None:
        reps = irreducible_set(G)
    vals = []
    for p in f.coeffs:
        if not p.is_constant():
            raise ValueError("Fourier transform needs numeric (constant) coefficients")
        vals.append(p.constant_value())
    blocks = []
    for rep in reps.all:
        acc = None
        for i, v in enumerate(vals):
            if not v:
                continue
            term = mat_scale(mat_conj(rep.matrix(i)), v)
            acc = term if acc is None else mat_add(acc, term)
        if acc is None:
            acc = tuple(tuple(reps.field.zero() for _ in range(rep.degree)) for _ in range(rep.degree))
        blocks.append(acc)
    return FourierImage(tuple(blocks))


def table_rows(G: FiniteGroup) -> list[tuple[str, list[str]]]:
    """Rows of the representation table: one per representation, one column per element."""
    reps = irreducible_set(G)
    rows = []
    for rep in reps.all:
        cells = []
        for i in range(G.order):
            M = rep.matrix(i)
            if rep.degree == 1:
                cells.append(str(M[0][0]))
            else:
                cells.append("[" + "; ".join(", ".join(str(v) for v in row) for row in M) + "]")
        rows.append((rep.name, cells))
    return rows
