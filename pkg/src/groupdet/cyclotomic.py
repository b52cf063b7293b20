"""Exact arithmetic in the cyclotomic field Q(zeta_L).

A number is stored as integer numerators over a common positive denominator,
in the power basis 1, z, ..., z^(d-1) with d = phi(L).  Keeping the numerators
integral makes products cheap; the denominator is 1 almost everywhere in
determinant work.
"""

from __future__ import annotations

import functools
import math
from fractions import Fraction
from numbers import Rational


@functools.lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients (low degree first) of the n-th cyclotomic polynomial."""
    if n < 1:
        raise ValueError(f"conductor must be positive, got {n}")
    # x^n - 1 divided by Phi_d for every proper divisor d of n
    num = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            num = _exact_divide(num, cyclotomic_polynomial(d))
    return tuple(num)


def _exact_divide(num: list[int], den: tuple[int, ...]) -> list[int]:
    # den is monic, so long division stays in the integers
    num = list(num)
    dd = len(den) - 1
    quot = [0] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c:
            quot[i - dd] = c
            for j in range(dd + 1):
                num[i - dd + j] -= c * den[j]
    if any(num[:dd]):
        raise ArithmeticError("inexact cyclotomic division")
    return quot


class CycloField:
    """The field Q(zeta_L), with zeta_L = exp(2 pi i / L)."""

    def __init__(self, L: int):
        if L < 1:
            raise ValueError(f"conductor must be positive, got {L}")
        self.L = L
        self.modulus = cyclotomic_polynomial(L)
        self.degree = len(self.modulus) - 1
        d = self.degree
        # reduction rows: z^(d+j) expressed in the power basis, j = 0 .. d-2
        self._reduce: list[tuple[int, ...]] = []
        cur = [-c for c in self.modulus[:d]]
        for _ in range(max(d - 1, 0)):
            self._reduce.append(tuple(cur))
            cur = self._shift(cur)
        # powers z^k for k = 0 .. L-1
        self._powers: list[tuple[int, ...]] = []
        cur = [1] + [0] * (d - 1)
        for _ in range(L):
            self._powers.append(tuple(cur))
            cur = self._shift(cur)

    def _shift(self, v: list[int]) -> list[int]:
        # multiply a reduced vector by z
        d = self.degree
        top = v[d - 1]
        out = [0] + list(v[: d - 1])
        if top:
            for i in range(d):
                out[i] -= top * self.modulus[i]
        return out

    def __repr__(self) -> str:
        return f"CycloField({self.L})"

    def __reduce__(self):
        return (cyclo_field, (self.L,))

    def reduce(self, v: list[int]) -> tuple[int, ...]:
        """Reduce an integer coefficient list of any length modulo Phi_L."""
        d = self.degree
        if len(v) <= d:
            return tuple(v) + (0,) * (d - len(v))
        out = list(v[:d])
        extra = v[d:]
        red = self._reduce
        n_red = len(red)
        # higher powers than 2d-2 only arise from callers outside mul
        for j in range(len(extra) - 1, -1, -1):
            c = extra[j]
            if not c:
                continue
            if j < n_red:
                row = red[j]
                for i in range(d):
                    out[i] += c * row[i]
            else:
                row = self._powers[(d + j) % self.L]
                for i in range(d):
                    out[i] += c * row[i]
        return tuple(out)

    def zero(self) -> CycloNumber:
        return CycloNumber._make(self, (0,) * self.degree, 1)

    def one(self) -> CycloNumber:
        return self.scalar(1)

    def scalar(self, q) -> CycloNumber:
        """Embed an int or Fraction."""
        q = Fraction(q)
        nums = (q.numerator,) + (0,) * (self.degree - 1)
        return CycloNumber._make(self, nums, q.denominator)

    def root_of_unity(self, k: int) -> CycloNumber:
        """zeta_L^k; k is taken mod L."""
        return CycloNumber._make(self, self._powers[k % self.L], 1)

    def __call__(self, coeffs) -> CycloNumber:
        return CycloNumber.from_coeffs(self, coeffs)


@functools.lru_cache(maxsize=None)
def cyclo_field(L: int) -> CycloField:
    """Shared field instance for conductor L."""
    return CycloField(L)


def root_of_unity(F: CycloField, k: int) -> CycloNumber:
    return F.root_of_unity(k)


class CycloNumber:
    """An exact element of Q(zeta_L)."""

    __slots__ = ("field", "nums", "den", "_hash")

    def __init__(self, field: CycloField, coeffs):
        other = CycloNumber.from_coeffs(field, coeffs)
        self.field = field
        self.nums = other.nums
        self.den = other.den
        self._hash = None

    @classmethod
    def _make(cls, field: CycloField, nums: tuple[int, ...], den: int) -> CycloNumber:
        # nums/den must already be normalized
        obj = object.__new__(cls)
        obj.field = field
        obj.nums = nums
        obj.den = den
        obj._hash = None
        return obj

    @classmethod
    def _normalized(cls, field: CycloField, nums: tuple[int, ...], den: int) -> CycloNumber:
        if den != 1:
            if den < 0:
                nums = tuple(-c for c in nums)
                den = -den
            g = math.gcd(den, *nums)
            if g != 1:
                nums = tuple(c // g for c in nums)
                den //= g
        return cls._make(field, nums, den)

    @classmethod
    def from_coeffs(cls, field: CycloField, coeffs) -> CycloNumber:
        """Build from rationals c_0..c_k (coefficients of 1, z, ..., z^k); k may exceed phi(L)."""
        fr = [Fraction(c) for c in coeffs]
        if not fr:
            return field.zero()
        den = math.lcm(*(c.denominator for c in fr))
        ints = [c.numerator * (den // c.denominator) for c in fr]
        return cls._normalized(field, field.reduce(ints), den)

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, self.den) for c in self.nums)

    # -- predicates ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not any(self.nums)

    def __bool__(self) -> bool:
        return any(self.nums)

    def is_rational(self) -> bool:
        return not any(self.nums[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return Fraction(self.nums[0], self.den)

    def __eq__(self, other) -> bool:
        if isinstance(other, CycloNumber):
            return self.field.L == other.field.L and self.den == other.den and self.nums == other.nums
        if isinstance(other, (int, Rational)):
            return self.is_rational() and Fraction(self.nums[0], self.den) == other
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            if self.is_rational():
                self._hash = hash(Fraction(self.nums[0], self.den))
            else:
                self._hash = hash((self.field.L, self.nums, self.den))
        return self._hash

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other) -> CycloNumber:
        if isinstance(other, CycloNumber):
            if other.field is not self.field and other.field.L != self.field.L:
                raise ValueError(f"field mismatch: Q(zeta_{self.field.L}) vs Q(zeta_{other.field.L})")
            return other
        if isinstance(other, (int, Rational)):
            return self.field.scalar(other)
        raise TypeError(f"cannot combine CycloNumber with {type(other).__name__}")

    def __add__(self, other) -> CycloNumber:
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        if self.den == o.den:
            return CycloNumber._normalized(self.field, tuple(a + b for a, b in zip(self.nums, o.nums)), self.den)
        da, db = self.den, o.den
        nums = tuple(a * db + b * da for a, b in zip(self.nums, o.nums))
        return CycloNumber._normalized(self.field, nums, da * db)

    __radd__ = __add__

    def __neg__(self) -> CycloNumber:
        return CycloNumber._make(self.field, tuple(-a for a in self.nums), self.den)

    def __sub__(self, other) -> CycloNumber:
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> CycloNumber:
        return (-self) + other

    def __mul__(self, other) -> CycloNumber:
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        a, b = self.nums, o.nums
        F = self.field
        if not any(a[1:]):
            c = a[0]
            nums = tuple(c * x for x in b)
        elif not any(b[1:]):
            c = b[0]
            nums = tuple(c * x for x in a)
        else:
            d = F.degree
            prod = [0] * (2 * d - 1)
            for i, x in enumerate(a):
                if x:
                    for j, y in enumerate(b):
                        if y:
                            prod[i + j] += x * y
            nums = F.reduce(prod)
        den = self.den * o.den
        if den == 1:
            return CycloNumber._make(F, nums, 1)
        return CycloNumber._normalized(F, nums, den)

    __rmul__ = __mul__

    def inverse(self) -> CycloNumber:
        """Multiplicative inverse via the extended Euclidean algorithm against Phi_L."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in cyclotomic field")
        F = self.field
        if self.is_rational():
            return F.scalar(Fraction(self.den, self.nums[0]))
        s = _poly_inverse_mod([Fraction(c) for c in self.nums], [Fraction(c) for c in F.modulus])
        return CycloNumber.from_coeffs(F, [c * self.den for c in s])

    def __truediv__(self, other) -> CycloNumber:
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other) -> CycloNumber:
        return self._coerce(other) * self.inverse()

    def __pow__(self, k: int) -> CycloNumber:
        if k < 0:
            return self.inverse() ** (-k)
        result = self.field.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self) -> CycloNumber:
        """Complex conjugation, the automorphism z -> z^(L-1)."""
        F = self.field
        L = F.L
        out = [0] * F.degree
        for i, c in enumerate(self.nums):
            if c:
                row = F._powers[(-i) % L]
                for j in range(F.degree):
                    out[j] += c * row[j]
        return CycloNumber._make(F, tuple(out), self.den)

    # -- text -----------------------------------------------------------------

    def __str__(self) -> str:
        if self.is_rational():
            return _frac_str(Fraction(self.nums[0], self.den))
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                parts.append(f"({_frac_str(c)})")
            elif i == 1:
                parts.append(f"({_frac_str(c)})*z")
            else:
                parts.append(f"({_frac_str(c)})*z^{i}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"CycloNumber(L={self.field.L}, {self})"


def _frac_str(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _trim(p: list[Fraction]) -> list[Fraction]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_divmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    lead = b[-1]
    while len(_trim(a)) >= len(b):
        shift = len(a) - len(b)
        c = a[-1] / lead
        q[shift] = c
        for i, bc in enumerate(b):
            a[shift + i] -= c * bc
    return q, a


def _poly_sub_mul(a: list[Fraction], q: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    # a - q*b
    out = list(a) + [Fraction(0)] * max(0, len(q) + len(b) - 1 - len(a))
    for i, x in enumerate(q):
        if x:
            for j, y in enumerate(b):
                out[i + j] -= x * y
    return _trim(out)


def _poly_inverse_mod(a: list[Fraction], m: list[Fraction]) -> list[Fraction]:
    """s with s*a = 1 mod m, for coprime a and m over Q."""
    r0, r1 = _trim(list(m)), _trim(list(a))
    s0, s1 = [], [Fraction(1)]
    while len(r1) > 1:
        q, r = _poly_divmod(r0, r1)
        r0, r1 = r1, _trim(r)
        s0, s1 = s1, _poly_sub_mul(s0, q, s1)
    if not r1:
        raise ZeroDivisionError("element is not invertible")
    c = r1[0]
    return [x / c for x in s1]


def arith(op: str, a: CycloNumber, b: CycloNumber | None = None) -> CycloNumber:
    """Dispatch by name: add, sub, mul, neg."""
    if op == "neg":
        return -a
    if b is None:
        raise ValueError(f"{op} needs two operands")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown operation {op!r}")


def inverse(a: CycloNumber) -> CycloNumber:
    return a.inverse()


def conjugate(a: CycloNumber) -> CycloNumber:
    return a.conjugate()


def parse_cyclo(F: CycloField, text: str) -> CycloNumber:
    """Parse a rational string like '3', '-2/5' into F."""
    return F.scalar(Fraction(text.strip()))
