"""Group algebra elements with polynomial coefficients.

Everything here is generic in the list ``x`` of polynomials standing for the
variables x_g (indexed by element index).  Passing the ring's variables gives
the symbolic objects; passing constant polynomials gives their values at a
point, which is how the randomized checks evaluate the same constructions.
"""

from __future__ import annotations

from typing import Mapping, Sequence

from .groups import FiniteGroup, GroupElement, GroupKind
from .polyring import Poly, PolyRing, poly_ring
from .reps import Character, irreducible_set


class AlgebraElement:
    """sum_g coeffs[g] g; coefficients are indexed by element index and always total."""

    __slots__ = ("group", "ring", "coeffs")

    def __init__(self, group: FiniteGroup, ring: PolyRing, coeffs: Sequence[Poly]):
        if len(coeffs) != group.order:
            raise ValueError("need one coefficient per group element")
        self.group = group
        self.ring = ring
        self.coeffs = tuple(coeffs)

    @classmethod
    def zero(cls, group: FiniteGroup, ring: PolyRing | None = None) -> AlgebraElement:
        ring = ring or poly_ring(group)
        return cls(group, ring, [ring.zero()] * group.order)

    @classmethod
    def basis(cls, group: FiniteGroup, g: GroupElement, coeff: Poly | None = None,
              ring: PolyRing | None = None) -> AlgebraElement:
        ring = ring or (coeff.ring if coeff is not None else poly_ring(group))
        coeffs = [ring.zero()] * group.order
        coeffs[group.index(g)] = ring.one() if coeff is None else coeff
        return cls(group, ring, coeffs)

    @classmethod
    def identity(cls, group: FiniteGroup, ring: PolyRing | None = None) -> AlgebraElement:
        return cls.basis(group, group.identity, ring=ring)

    def coefficient(self, g: GroupElement) -> Poly:
        return self.coeffs[self.group.index(g)]

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def support(self) -> list[int]:
        return [i for i, c in enumerate(self.coeffs) if c]

    def __eq__(self, other) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.group == other.group and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.group, self.coeffs))

    def _check(self, other: AlgebraElement) -> None:
        if other.group != self.group:
            raise ValueError(f"group mismatch: {self.group.spec} vs {other.group.spec}")

    def __add__(self, other: AlgebraElement) -> AlgebraElement:
        self._check(other)
        return AlgebraElement(self.group, self.ring, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: AlgebraElement) -> AlgebraElement:
        self._check(other)
        return AlgebraElement(self.group, self.ring, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self) -> AlgebraElement:
        return AlgebraElement(self.group, self.ring, [-a for a in self.coeffs])

    def scale(self, c) -> AlgebraElement:
        """Multiply every coefficient by a scalar or a Poly."""
        if isinstance(c, Poly):
            return AlgebraElement(self.group, self.ring, [a * c for a in self.coeffs])
        return AlgebraElement(self.group, self.ring, [a.scale(c) for a in self.coeffs])

    def __mul__(self, other: AlgebraElement) -> AlgebraElement:
        return convolve(self, other)

    def substitute(self, mapping) -> AlgebraElement:
        return substitute_all(self, mapping)

    def evaluate(self, assign) -> AlgebraElement:
        """Coefficient-wise evaluation; the result has constant coefficients."""
        ring = self.ring
        return AlgebraElement(self.group, ring, [ring.const(c.evaluate(assign)) for c in self.coeffs])

    def __str__(self) -> str:
        parts = []
        for i, c in enumerate(self.coeffs):
            if c:
                parts.append(f"({c})*{self.group.name(self.group.element(i))}")
        return " + ".join(parts) if parts else "0"

    def __repr__(self) -> str:
        return f"AlgebraElement({self.group.spec}: {self})"

    def to_json(self) -> dict:
        return {
            "group": str(self.group.spec),
            "coeffs": [
                {"element": self.group.name(self.group.element(i)), "poly": c.to_json()}
                for i, c in enumerate(self.coeffs)
            ],
        }


def convolve(u: AlgebraElement, v: AlgebraElement) -> AlgebraElement:
    """(uv)(k) = sum over g h = k of u(g) v(h)."""
    u._check(v)
    G = u.group
    out = [u.ring.zero()] * G.order
    table = G._mul
    for i, a in enumerate(u.coeffs):
        if not a:
            continue
        row = table[i]
        for j, b in enumerate(v.coeffs):
            if b:
                k = row[j]
                out[k] = out[k] + a * b
    return AlgebraElement(G, u.ring, out)


def commutator(u: AlgebraElement, v: AlgebraElement) -> AlgebraElement:
    """[u, v] = uv - vu."""
    return convolve(u, v) - convolve(v, u)


def augment_F(u: AlgebraElement) -> Poly:
    """The augmentation map: sum of all coefficients."""
    total = u.ring.zero()
    for c in u.coeffs:
        total = total + c
    return total


def substitute_all(u: AlgebraElement, mapping) -> AlgebraElement:
    return AlgebraElement(u.group, u.ring, [c.substitute(mapping) for c in u.coeffs])


def product(factors: Sequence[AlgebraElement]) -> AlgebraElement:
    """Left-to-right product; order matters outside the abelian family."""
    if not factors:
        raise ValueError("empty product")
    acc = factors[0]
    for f in factors[1:]:
        acc = convolve(acc, f)
    return acc


# -- constructions ----------------------------------------------------------------


def default_vars(G: FiniteGroup, x: Sequence[Poly] | None) -> Sequence[Poly]:
    return poly_ring(G).variables() if x is None else x


def _require_split(G: FiniteGroup) -> None:
    if G.kind is GroupKind.ABELIAN:
        raise ValueError(f"{G.spec} is abelian: no <a>/b split")


def _b(G: FiniteGroup) -> int:
    return G.index(G.a_pow_b(0))


def build_A(G: FiniteGroup, h: GroupElement, x: Sequence[Poly] | None = None) -> Poly:
    """A_h = sum over g in <a> of (x_g x_{hg} - x_{gb} x_{h g b^-1})."""
    _require_split(G)
    return build_A_index(G, G.index(h), default_vars(G, x))


def build_A_index(G: FiniteGroup, h: int, x: Sequence[Poly]) -> Poly:
    b = _b(G)
    b_inv = G.inv_index(b)
    mul = G.mul_index
    total = x[0].ring.zero()
    for g in range(G.rotation_order):
        gb = mul(g, b)
        total = total + x[g] * x[mul(h, g)] - x[gb] * x[mul(mul(h, g), b_inv)]
    return total


def A_values(G: FiniteGroup, x: Sequence[Poly] | None = None) -> list[Poly]:
    """A_h for every h in G, by element index."""
    _require_split(G)
    x = default_vars(G, x)
    return [build_A_index(G, h, x) for h in range(G.order)]


def build_A_intro(G: FiniteGroup, h: GroupElement, x: Sequence[Poly] | None = None) -> Poly:
    """Single-sum variant sum over g in <a> of chi2(g) x_g x_{hg} (kept only for comparison)."""
    _require_split(G)
    x = default_vars(G, x)
    chi2 = irreducible_set(G).character("chi2")
    hi = G.index(h)
    total = x[0].ring.zero()
    for g in range(G.rotation_order):
        total = total + (x[g] * x[G.mul_index(hi, g)]).scale(chi2.at(g))
    return total


def alpha_generic(G: FiniteGroup, x: Sequence[Poly] | None = None) -> AlgebraElement:
    """sum_g x_g g."""
    x = default_vars(G, x)
    return AlgebraElement(G, x[0].ring, list(x))


def alpha_chi(G: FiniteGroup, chi: Character, x: Sequence[Poly] | None = None) -> AlgebraElement:
    """sum_g chi(g) x_g g for an abelian group."""
    if G.kind is not GroupKind.ABELIAN:
        raise ValueError("alpha_chi is defined for abelian groups")
    x = default_vars(G, x)
    return AlgebraElement(G, x[0].ring, [x[i].scale(chi.at(i)) for i in range(G.order)])


def alpha(G: FiniteGroup, n: int, x: Sequence[Poly] | None = None) -> AlgebraElement:
    """The factor attached to chi_n, n in 1..4.

    alpha_1, alpha_3 use x_g throughout; alpha_2, alpha_4 use x_{g^-1} on <a>.
    """
    _require_split(G)
    reps = irreducible_set(G)
    if n in (3, 4) and not reps.has_four_linear():
        raise ValueError(f"alpha_{n} undefined for {G.spec}: m odd gives only two degree-one representations")
    if n not in (1, 2, 3, 4):
        raise ValueError(f"alpha index must be 1..4, got {n}")
    x = default_vars(G, x)
    chi = reps.character(f"chi{n}")
    r = G.rotation_order
    coeffs = []
    for i in range(G.order):
        src = G.inv_index(i) if (n in (2, 4) and i < r) else i
        coeffs.append(x[src].scale(chi.at(i)))
    return AlgebraElement(G, x[0].ring, coeffs)


def beta(G: FiniteGroup, chi: Character, x: Sequence[Poly] | None = None,
         A: Sequence[Poly] | None = None) -> AlgebraElement:
    """sum over g in <a> of chi'(g) A_g g."""
    _require_split(G)
    if A is None:
        A = A_values(G, x)
    ring = A[0].ring
    coeffs = [ring.zero()] * G.order
    for g in range(G.rotation_order):
        coeffs[g] = A[g].scale(chi.at(g))
    return AlgebraElement(G, ring, coeffs)


def beta_x(G: FiniteGroup, chi: Character, x: Sequence[Poly] | None = None) -> AlgebraElement:
    """sum over g in <a> of chi'(g) x_g g (the reading with bare variables)."""
    _require_split(G)
    x = default_vars(G, x)
    ring = x[0].ring
    coeffs = [ring.zero()] * G.order
    for g in range(G.rotation_order):
        coeffs[g] = x[g].scale(chi.at(g))
    return AlgebraElement(G, ring, coeffs)


def build_factor(G: FiniteGroup, which: str, chi: Character | None = None,
                 x: Sequence[Poly] | None = None) -> AlgebraElement:
    """Named constructor: generic, alpha1..alpha4, alpha_chi (needs chi), beta (needs chi')."""
    if which == "generic":
        return alpha_generic(G, x)
    if which in ("alpha1", "alpha2", "alpha3", "alpha4"):
        return alpha(G, int(which[-1]), x)
    if which == "alpha_chi":
        if chi is None:
            raise ValueError("alpha_chi needs a character")
        return alpha_chi(G, chi, x)
    if which == "beta":
        if chi is None:
            raise ValueError("beta needs a character of <a>")
        return beta(G, chi, x)
    raise ValueError(f"unknown factor {which!r}")


def variable_map(G: FiniteGroup, images: Mapping[int, Poly] | Sequence[Poly]) -> dict[int, Poly]:
    return {i: images[i] for i in range(G.order)}


def chi2_change_of_variable(G: FiniteGroup) -> list[Poly]:
    """x_g -> chi2(g) x_{g^-1} on <a>, chi2(g) x_g off <a>."""
    _require_split(G)
    x = poly_ring(G).variables()
    chi2 = irreducible_set(G).character("chi2")
    r = G.rotation_order
    return [x[G.inv_index(i) if i < r else i].scale(chi2.at(i)) for i in range(G.order)]


def chi3_change_of_variable(G: FiniteGroup) -> list[Poly]:
    """x_g -> chi3(g) x_g."""
    _require_split(G)
    x = poly_ring(G).variables()
    chi3 = irreducible_set(G).character("chi3")
    return [x[i].scale(chi3.at(i)) for i in range(G.order)]
