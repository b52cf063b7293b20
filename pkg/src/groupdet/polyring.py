"""Sparse multivariate polynomials in the group variables x_g.

Monomials are packed into a single Python int, 16 bits per variable id, so
multiplying monomials is integer addition.  A ``Poly`` is a dict from packed
monomial to nonzero :class:`CycloNumber`.
"""

from __future__ import annotations

import functools
from typing import Callable, Iterable, Mapping, Sequence

from .cyclotomic import CycloField, CycloNumber, cyclo_field
from .groups import FiniteGroup

EXP_BITS = 16
EXP_MASK = (1 << EXP_BITS) - 1
MAX_EXPONENT = EXP_MASK


# -- monomials ----------------------------------------------------------------


def monomial(exponents: Mapping[int, int]) -> int:
    """Pack ``{var_id: exponent}`` into a monomial key."""
    key = 0
    for v, e in exponents.items():
        if e < 0 or e > MAX_EXPONENT:
            raise ValueError(f"exponent {e} out of range")
        key += e << (EXP_BITS * v)
    return key


def monomial_exponents(key: int) -> dict[int, int]:
    """Unpack a monomial key; zero exponents are not reported."""
    out = {}
    v = 0
    while key:
        e = key & EXP_MASK
        if e:
            out[v] = e
        key >>= EXP_BITS
        v += 1
    return out


def monomial_degree(key: int) -> int:
    return sum(monomial_exponents(key).values())


def _grlex_key(key: int, nvars: int) -> tuple:
    exps = [(key >> (EXP_BITS * v)) & EXP_MASK for v in range(nvars)]
    return (sum(exps), *exps)


# -- rings --------------------------------------------------------------------


class VarTable:
    """Variable ids are element indices of the group; names are element names."""

    def __init__(self, group: FiniteGroup):
        self.group = group
        self.names = group.names()

    def __len__(self) -> int:
        return len(self.names)

    def __eq__(self, other) -> bool:
        return isinstance(other, VarTable) and other.group == self.group

    def __hash__(self) -> int:
        return hash(self.group)

    def var_id(self, g) -> int:
        return self.group.index(g)

    def element(self, var_id: int):
        return self.group.element(var_id)


class PolyRing:
    """Q(zeta_L)[x_g : g in G]."""

    def __init__(self, group: FiniteGroup, field: CycloField):
        self.group = group
        self.vars = VarTable(group)
        self.field = field
        self.nvars = group.order

    def __repr__(self) -> str:
        return f"PolyRing({self.group.spec}, L={self.field.L})"

    def __eq__(self, other) -> bool:
        return isinstance(other, PolyRing) and other.group == self.group and other.field.L == self.field.L

    def __hash__(self) -> int:
        return hash((self.group, self.field.L))

    def __reduce__(self):
        return (poly_ring, (self.group, self.field.L))

    def zero(self) -> Poly:
        return Poly(self, {})

    def one(self) -> Poly:
        return self.const(1)

    def const(self, c) -> Poly:
        c = self.coerce_scalar(c)
        return Poly(self, {0: c} if c else {})

    def var(self, var_id: int) -> Poly:
        if not 0 <= var_id < self.nvars:
            raise ValueError(f"variable id {var_id} out of range")
        return Poly(self, {1 << (EXP_BITS * var_id): self.field.one()})

    def x(self, g) -> Poly:
        """The variable x_g for a group element g."""
        return self.var(self.group.index(g))

    def variables(self) -> list[Poly]:
        return [self.var(i) for i in range(self.nvars)]

    def coerce_scalar(self, c) -> CycloNumber:
        if isinstance(c, CycloNumber):
            if c.field.L != self.field.L:
                raise ValueError(f"field mismatch: L={c.field.L} vs L={self.field.L}")
            return c
        return self.field.scalar(c)


def poly_ring(group: FiniteGroup, L: int | None = None) -> PolyRing:
    """Shared ring for a group; L defaults to the group's conductor."""
    return _poly_ring(group, group.conductor if L is None else L)


@functools.lru_cache(maxsize=None)
def _poly_ring(group: FiniteGroup, L: int) -> PolyRing:
    return PolyRing(group, cyclo_field(L))


class Poly:
    """Immutable sparse polynomial; ``terms`` never holds a zero coefficient."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: PolyRing, terms: dict[int, CycloNumber]):
        self.ring = ring
        self.terms = terms
        self._hash = None

    # -- basic queries ------------------------------------------------------

    @property
    def field(self) -> CycloField:
        return self.ring.field

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and 0 in self.terms)

    def constant_value(self) -> CycloNumber:
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return self.terms.get(0, self.ring.field.zero())

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((monomial_degree(m) for m in self.terms), default=-1)

    def is_homogeneous(self, d: int | None = None) -> bool:
        degs = {monomial_degree(m) for m in self.terms}
        if not degs:
            return True
        if len(degs) != 1:
            return False
        return d is None or degs == {d}

    def variables(self) -> set[int]:
        out: set[int] = set()
        for m in self.terms:
            out.update(monomial_exponents(m))
        return out

    def coefficient(self, exponents: Mapping[int, int] | int) -> CycloNumber:
        key = exponents if isinstance(exponents, int) else monomial(exponents)
        return self.terms.get(key, self.ring.field.zero())

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (int, CycloNumber)):
            return self.is_constant() and self.constant_value() == other
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other: Poly) -> None:
        if other.ring is not self.ring and other.ring != self.ring:
            raise ValueError(f"ring mismatch: {self.ring} vs {other.ring}")

    def _lift(self, other) -> Poly | None:
        if isinstance(other, Poly):
            self._check(other)
            return other
        if isinstance(other, (int, CycloNumber)) or hasattr(other, "denominator"):
            return self.ring.const(other)
        return None

    def __add__(self, other) -> Poly:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if not o.terms:
            return self
        if not self.terms:
            return o
        out = dict(self.terms)
        for m, c in o.terms.items():
            cur = out.get(m)
            if cur is None:
                out[m] = c
            else:
                s = cur + c
                if s:
                    out[m] = s
                else:
                    del out[m]
        return Poly(self.ring, out)

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly(self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> Poly:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> Poly:
        return (-self) + other

    def scale(self, c) -> Poly:
        c = self.ring.coerce_scalar(c)
        if not c:
            return self.ring.zero()
        if c == 1:
            return self
        return Poly(self.ring, {m: v * c for m, v in self.terms.items()})

    def __mul__(self, other) -> Poly:
        if not isinstance(other, Poly):
            if isinstance(other, (int, CycloNumber)) or hasattr(other, "denominator"):
                return self.scale(other)
            return NotImplemented
        self._check(other)
        a, b = self.terms, other.terms
        if not a or not b:
            return self.ring.zero()
        if len(a) < len(b):
            a, b = b, a
        if len(b) == 1:
            (mb, cb), = b.items()
            if cb == 1:
                return Poly(self.ring, {m + mb: c for m, c in a.items()})
            return Poly(self.ring, {m + mb: c * cb for m, c in a.items()})
        out: dict[int, CycloNumber] = {}
        get = out.get
        for mb, cb in b.items():
            for ma, ca in a.items():
                m = ma + mb
                c = ca * cb
                cur = get(m)
                out[m] = c if cur is None else cur + c
        return Poly(self.ring, {m: c for m, c in out.items() if c})

    def __rmul__(self, other) -> Poly:
        return self.__mul__(other)

    def __pow__(self, k: int) -> Poly:
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def mul_monomial(self, var_id: int, sign: int = 1) -> Poly:
        """Multiply by +-x_v; the hot step of the minor expansion."""
        shift = 1 << (EXP_BITS * var_id)
        if sign == 1:
            return Poly(self.ring, {m + shift: c for m, c in self.terms.items()})
        return Poly(self.ring, {m + shift: -c for m, c in self.terms.items()})

    # -- substitution / evaluation ---------------------------------------------

    def substitute(self, mapping: Mapping[int, Poly] | Sequence[Poly]) -> Poly:
        """Simultaneous substitution x_v -> mapping[v], fully expanded."""
        powers: dict[tuple[int, int], Poly] = {}
        out = self.ring.zero()
        for m, c in self.terms.items():
            term = self.ring.const(c)
            for v, e in monomial_exponents(m).items():
                key = (v, e)
                p = powers.get(key)
                if p is None:
                    try:
                        image = mapping[v]
                    except (KeyError, IndexError):
                        raise KeyError(f"substitution missing variable {self.ring.vars.names[v]}") from None
                    p = powers[key] = image ** e
                term = term * p
            out = out + term
        return out

    def evaluate(self, assign: Mapping[int, CycloNumber] | Sequence[CycloNumber]) -> CycloNumber:
        """Exact value at a total assignment of the occurring variables."""
        F = self.ring.field
        total = F.zero()
        powers: dict[tuple[int, int], CycloNumber] = {}
        for m, c in self.terms.items():
            val = c
            for v, e in monomial_exponents(m).items():
                key = (v, e)
                p = powers.get(key)
                if p is None:
                    try:
                        x = assign[v]
                    except (KeyError, IndexError):
                        raise KeyError(f"assignment missing variable {self.ring.vars.names[v]}") from None
                    if not isinstance(x, CycloNumber):
                        x = F.scalar(x)
                    p = powers[key] = x ** e
                val = val * p
            total = total + val
        return total

    def map_coefficients(self, fn: Callable[[CycloNumber], CycloNumber]) -> Poly:
        out = {}
        for m, c in self.terms.items():
            d = fn(c)
            if d:
                out[m] = d
        return Poly(self.ring, out)

    # -- text ---------------------------------------------------------------

    def sorted_terms(self) -> list[tuple[int, CycloNumber]]:
        n = self.ring.nvars
        return sorted(self.terms.items(), key=lambda t: _grlex_key(t[0], n), reverse=True)

    def monomial_text(self, key: int) -> str:
        names = self.ring.vars.names
        parts = []
        for v, e in sorted(monomial_exponents(key).items()):
            parts.append(f"x[{names[v]}]" + (f"^{e}" if e > 1 else ""))
        return "*".join(parts)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for i, (m, c) in enumerate(self.sorted_terms()):
            mono = self.monomial_text(m)
            if c.is_rational():
                q = c.to_fraction()
                neg = q < 0
                mag = -q if neg else q
                if mono:
                    body = mono if mag == 1 else f"{_q(mag)}*{mono}"
                else:
                    body = _q(mag)
                if i == 0:
                    out.append(("-" if neg else "") + body)
                else:
                    out.append((" - " if neg else " + ") + body)
            else:
                body = f"({c})" + (f"*{mono}" if mono else "")
                out.append(body if i == 0 else " + " + body)
        return "".join(out)

    def __repr__(self) -> str:
        return f"Poly({self})"

    def to_json(self) -> list[dict]:
        names = self.ring.vars.names
        return [
            {
                "coeff": str(c),
                "monomial": {names[v]: e for v, e in sorted(monomial_exponents(m).items())},
            }
            for m, c in self.sorted_terms()
        ]


def _q(q) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def poly_arith(op: str, p: Poly, q=None) -> Poly:
    """Dispatch by name: add, sub, mul, neg, scale."""
    if op == "neg":
        return -p
    if q is None:
        raise ValueError(f"{op} needs two operands")
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    if op == "scale":
        return p.scale(q)
    raise ValueError(f"unknown operation {op!r}")


def substitute(p: Poly, mapping) -> Poly:
    return p.substitute(mapping)


def evaluate(p: Poly, assign) -> CycloNumber:
    return p.evaluate(assign)


def poly_sum(polys: Iterable[Poly], ring: PolyRing) -> Poly:
    total = ring.zero()
    for p in polys:
        total = total + p
    return total
