"""Exact arithmetic in Q(zeta), zeta = exp(i*pi/N).

Every value 2cos(k*pi/N) equals zeta^k + zeta^-k, so the real numbers needed
by the geometric representation live in this field.  Elements are stored as
coefficient tuples in the power basis 1, zeta, ..., zeta^(d-1) after reduction
modulo the cyclotomic polynomial Phi_2N (d = phi(2N)); that remainder is
canonical, so equality is tuple equality.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

__all__ = ["CyclotomicField", "AlgNum", "cyclotomic_poly"]


def _polydiv_exact(num: list[int], den: list[int]) -> list[int]:
    # coefficient lists, lowest degree first; den monic
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for k in range(len(out) - 1, -1, -1):
        c = num[k + len(den) - 1]
        out[k] = c
        if c:
            for j, d in enumerate(den):
                num[k + j] -= c * d
    if any(num[: len(den) - 1]):
        raise ArithmeticError("inexact cyclotomic division")
    return out


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Coefficients of Phi_n, lowest degree first."""
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly = _polydiv_exact(poly, list(cyclotomic_poly(d)))
    return tuple(poly)


def _norm(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


class CyclotomicField:
    """The field Q(exp(i*pi/N))."""

    _instances: dict[int, CyclotomicField] = {}

    def __new__(cls, N: int):
        if N < 1:
            raise ValueError("N must be positive")
        inst = cls._instances.get(N)
        if inst is None:
            inst = super().__new__(cls)
            inst.N = N
            inst.modulus = cyclotomic_poly(2 * N)
            inst.degree = len(inst.modulus) - 1
            inst.zero = AlgNum(inst, (0,) * inst.degree)
            inst.one = inst.from_power(0)
            cls._instances[N] = inst
        return inst

    def __reduce__(self):
        return (CyclotomicField, (self.N,))

    def __repr__(self):
        return f"CyclotomicField({self.N})"

    def reduce(self, coeffs: list) -> tuple:
        d, mod = self.degree, self.modulus
        coeffs = list(coeffs) + [0] * max(0, d - len(coeffs))
        for k in range(len(coeffs) - 1, d - 1, -1):
            c = coeffs[k]
            if c:
                base = k - d
                for j in range(d + 1):
                    coeffs[base + j] -= c * mod[j]
        return tuple(_norm(c) for c in coeffs[:d])

    def from_power(self, k: int, coeff=1) -> AlgNum:
        """``coeff * zeta**k`` for any integer k."""
        k %= 2 * self.N
        raw = [0] * (k + 1)
        raw[k] = coeff
        return AlgNum(self, self.reduce(raw))

    def two_cos(self, k: int) -> AlgNum:
        """Exact 2cos(k*pi/N)."""
        return self.from_power(k) + self.from_power(-k)

    def cos_pi_over(self, m: int) -> AlgNum:
        """Exact cos(pi/m); requires m | N."""
        if self.N % m:
            raise ValueError(f"cos(pi/{m}) is not in Q(zeta_{2 * self.N})")
        return self.two_cos(self.N // m) * Fraction(1, 2)

    def rational(self, q) -> AlgNum:
        return AlgNum(self, (_norm(Fraction(q)),) + (0,) * (self.degree - 1))


class AlgNum:
    """An element of a :class:`CyclotomicField`, immutable."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: CyclotomicField, coeffs: tuple):
        self.field = field
        self.coeffs = coeffs

    def _lift(self, other):
        if isinstance(other, AlgNum):
            if other.field is not self.field:
                raise ValueError("mixing elements of different cyclotomic fields")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.rational(other)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return AlgNum(self.field, tuple(_norm(a + b) for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return AlgNum(self.field, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return AlgNum(self.field, tuple(_norm(a - b) for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return AlgNum(self.field, tuple(_norm(a * other) for a in self.coeffs))
        other = self._lift(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        prod = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        return AlgNum(self.field, self.field.reduce(prod))

    __rmul__ = __mul__

    def __eq__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field.N, self.coeffs))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.coeffs)

    def conjugate(self) -> AlgNum:
        acc = self.field.zero
        for k, c in enumerate(self.coeffs):
            if c:
                acc = acc + self.field.from_power(-k, c)
        return acc

    def is_real(self) -> bool:
        return self == self.conjugate()

    def __complex__(self):
        z = complex(math.cos(math.pi / self.field.N), math.sin(math.pi / self.field.N))
        return sum(complex(c) * z**k for k, c in enumerate(self.coeffs))

    def __float__(self):
        val = complex(self)
        if abs(val.imag) > 1e-9:
            raise ValueError(f"{self!s} is not real")
        return val.real

    def __repr__(self):
        return f"AlgNum(N={self.field.N}, {self.coeffs})"

    def __str__(self):
        """Real elements print as a rational combination of cos(k*pi/N).

        If x = sum c_k zeta^k is real, then x = (x + conj x)/2 = sum c_k cos(k*pi/N).
        """
        N = self.field.N
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            if k == 0:
                parts.append(str(c))
            else:
                coef = "" if c == 1 else ("-" if c == -1 else f"{c}*")
                parts.append(f"{coef}cos({k}pi/{N})")
        if not parts:
            return "0"
        return " + ".join(parts).replace("+ -", "- ")
