"""Finite abelian products, dihedral groups D_m and generalized quaternion groups Q_m.

Elements are plain tuples in canonical form:

* abelian ``C_{n1} x ... x C_{nk}``: the exponent vector ``(e1, ..., ek)``;
* ``D_m`` / ``Q_m``: ``(k, l)`` meaning ``a^k b^l`` with ``0 <= k < r`` and
  ``l in {0, 1}``, where ``r = m`` for ``D_m`` and ``r = 2m`` for ``Q_m``.

Multiplication is computed once per group into an index table.
"""

from __future__ import annotations

import enum
import functools
import itertools
import math
import re
from dataclasses import dataclass
from typing import Tuple

GroupElement = Tuple[int, ...]


class GroupKind(enum.Enum):
    ABELIAN = "AbelianProduct"
    DIHEDRAL = "Dihedral"
    QUATERNION = "GenQuaternion"


class GroupSpecError(ValueError):
    """Malformed or out-of-range group specification."""


@dataclass(frozen=True)
class GroupSpec:
    kind: GroupKind
    params: tuple[int, ...]

    def __post_init__(self):
        if self.kind is GroupKind.ABELIAN:
            if not self.params or any(n < 1 for n in self.params):
                raise GroupSpecError(f"cyclic factor orders must be >= 1: {self.params}")
        elif self.kind is GroupKind.DIHEDRAL:
            if len(self.params) != 1 or self.params[0] < 3:
                raise GroupSpecError("D_m needs m >= 3")
        elif len(self.params) != 1 or self.params[0] < 2:
            raise GroupSpecError("Q_m needs m >= 2")

    def __str__(self) -> str:
        if self.kind is GroupKind.ABELIAN:
            return "x".join(f"C{n}" for n in self.params)
        prefix = "D" if self.kind is GroupKind.DIHEDRAL else "Q"
        return f"{prefix}{self.params[0]}"

    @property
    def m(self) -> int:
        if self.kind is GroupKind.ABELIAN:
            raise AttributeError("abelian groups have no m parameter")
        return self.params[0]


def parse_group_spec(text: str) -> GroupSpec:
    """Parse ``C2xC6``, ``D5``, ``Q3`` (case-insensitive)."""
    s = text.strip().lower()
    if re.fullmatch(r"c\d+(?:xc\d+)*", s):
        params = tuple(int(p) for p in re.findall(r"c(\d+)", s))
        return GroupSpec(GroupKind.ABELIAN, params)
    match = re.fullmatch(r"([dq])(\d+)", s)
    if match:
        kind = GroupKind.DIHEDRAL if match.group(1) == "d" else GroupKind.QUATERNION
        return GroupSpec(kind, (int(match.group(2)),))
    raise GroupSpecError(f"cannot parse group spec {text!r}; expected C<n>(xC<n>)*, D<m> or Q<m>")


class FiniteGroup:
    """A concrete group with an enumerated element list and multiplication table."""

    def __init__(self, spec: GroupSpec):
        self.spec = spec
        self.kind = spec.kind
        if spec.kind is GroupKind.ABELIAN:
            self.rotation_order = None
            self._elements = list(itertools.product(*(range(n) for n in spec.params)))
        else:
            m = spec.m
            self.rotation_order = m if spec.kind is GroupKind.DIHEDRAL else 2 * m
            r = self.rotation_order
            self._elements = [(k, 0) for k in range(r)] + [(k, 1) for k in range(r)]
        self.order = len(self._elements)
        self._index = {g: i for i, g in enumerate(self._elements)}
        self._mul = [[self._index[self._mul_raw(x, y)] for y in self._elements] for x in self._elements]
        self.identity_index = self._index[self.identity]
        self._inv = [row.index(self.identity_index) for row in self._mul]

    def __repr__(self) -> str:
        return f"FiniteGroup({self.spec})"

    def __str__(self) -> str:
        return str(self.spec)

    def __eq__(self, other) -> bool:
        return isinstance(other, FiniteGroup) and other.spec == self.spec

    def __hash__(self) -> int:
        return hash(self.spec)

    def __reduce__(self):
        return (make_group, (self.spec,))

    # -- structure ------------------------------------------------------------

    @property
    def identity(self) -> GroupElement:
        if self.kind is GroupKind.ABELIAN:
            return (0,) * len(self.spec.params)
        return (0, 0)

    @property
    def is_abelian_family(self) -> bool:
        return self.kind is GroupKind.ABELIAN

    @property
    def exponent(self) -> int:
        if self.kind is GroupKind.ABELIAN:
            return math.lcm(*self.spec.params)
        if self.kind is GroupKind.DIHEDRAL:
            return math.lcm(self.spec.m, 2)
        return math.lcm(2 * self.spec.m, 4)

    @property
    def conductor(self) -> int:
        """Smallest L with every representation entry in Q(zeta_L)."""
        if self.kind is GroupKind.QUATERNION:
            return math.lcm(2 * self.spec.m, 4)
        return self.exponent

    def _mul_raw(self, x: GroupElement, y: GroupElement) -> GroupElement:
        if self.kind is GroupKind.ABELIAN:
            return tuple((a + b) % n for a, b, n in zip(x, y, self.spec.params))
        r = self.rotation_order
        k1, l1 = x
        k2, l2 = y
        # a^k1 b^l1 a^k2 b^l2, using b a^k = a^-k b
        k = k1 - k2 if l1 else k1 + k2
        l = l1 + l2
        if l == 2:
            l = 0
            if self.kind is GroupKind.QUATERNION:
                k += self.spec.m
        return (k % r, l)

    def elements(self) -> list[GroupElement]:
        return list(self._elements)

    def element(self, i: int) -> GroupElement:
        return self._elements[i]

    def index(self, g: GroupElement) -> int:
        try:
            return self._index[tuple(g)]
        except (KeyError, TypeError):
            raise ValueError(f"{g!r} is not a canonical element of {self.spec}") from None

    def mul(self, x: GroupElement, y: GroupElement) -> GroupElement:
        return self._elements[self._mul[self.index(x)][self.index(y)]]

    def inv(self, x: GroupElement) -> GroupElement:
        return self._elements[self._inv[self.index(x)]]

    def mul_index(self, i: int, j: int) -> int:
        return self._mul[i][j]

    def inv_index(self, i: int) -> int:
        return self._inv[i]

    def mul_table(self) -> list[list[int]]:
        return [list(row) for row in self._mul]

    def in_rotation(self, g: GroupElement) -> bool:
        """Membership in <a>."""
        if self.kind is GroupKind.ABELIAN:
            raise ValueError("abelian groups carry no <a>/b split")
        return self.index(g) < self.rotation_order

    def rotation_subgroup(self) -> list[GroupElement]:
        if self.kind is GroupKind.ABELIAN:
            raise ValueError("abelian groups carry no <a>/b split")
        return self._elements[: self.rotation_order]

    def a_pow(self, k: int) -> GroupElement:
        return (k % self.rotation_order, 0)

    def a_pow_b(self, k: int) -> GroupElement:
        return (k % self.rotation_order, 1)

    # -- naming ---------------------------------------------------------------

    def name(self, g: GroupElement) -> str:
        """Printable element name: e, a, a^k, a^k*b for D/Q and single cyclic factors; tuples otherwise."""
        g = self._elements[self.index(g)]
        if self.kind is GroupKind.ABELIAN:
            if len(self.spec.params) == 1:
                return _power_name(g[0])
            return "(" + ",".join(str(e) for e in g) + ")"
        k, l = g
        if not l:
            return _power_name(k)
        if k == 0:
            return "b"
        return ("a" if k == 1 else f"a^{k}") + "*b"

    def names(self) -> list[str]:
        return [self.name(g) for g in self._elements]

    def parse_element(self, text: str) -> GroupElement:
        """Inverse of :meth:`name`."""
        s = text.replace(" ", "")
        for g in self._elements:
            if self.name(g) == s:
                return g
        raise ValueError(f"unknown element {text!r} in {self.spec}")

    def describe(self) -> str:
        return f"{self.spec} (order {self.order}): " + ", ".join(self.names())


def _power_name(k: int) -> str:
    if k == 0:
        return "e"
    if k == 1:
        return "a"
    return f"a^{k}"


def make_group(spec: GroupSpec | str) -> FiniteGroup:
    """Cached group construction from a spec or spec string."""
    if isinstance(spec, str):
        spec = parse_group_spec(spec)
    return _make_group(spec)


@functools.lru_cache(maxsize=None)
def _make_group(spec: GroupSpec) -> FiniteGroup:
    return FiniteGroup(spec)


def mul(G: FiniteGroup, x: GroupElement, y: GroupElement) -> GroupElement:
    return G.mul(x, y)


def inv(G: FiniteGroup, x: GroupElement) -> GroupElement:
    return G.inv(x)


def elements(G: FiniteGroup) -> list[GroupElement]:
    return G.elements()
