"""Exact multivariate polynomials over Q with the type A permutation action.

Variables are x_1..x_n (0-based internally), each of degree 2.  The simple
reflection s_i swaps x_i and x_{i+1} and has root alpha_i = x_i - x_{i+1}.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Iterable, Mapping, Sequence

__all__ = [
    "MultiPoly",
    "monomials",
    "act",
    "root",
    "demazure",
    "invariant_split",
    "reflect",
]

Exp = tuple[int, ...]


def _norm(c):
    c = Fraction(c)
    return c.numerator if c.denominator == 1 else c


class MultiPoly:
    __slots__ = ("n", "terms", "_hash")

    def __init__(self, n: int, terms: Mapping[Exp, object] | None = None):
        self.n = n
        clean = {}
        for e, c in (terms or {}).items():
            e = tuple(e)
            if len(e) != n:
                raise ValueError(f"exponent {e} does not have {n} entries")
            c = _norm(c)
            if c:
                clean[e] = c
        self.terms = dict(sorted(clean.items(), reverse=True))
        self._hash = None

    @classmethod
    def _raw(cls, n: int, terms: dict) -> MultiPoly:
        obj = cls.__new__(cls)
        obj.n = n
        obj.terms = dict(sorted(((e, c) for e, c in terms.items() if c), reverse=True))
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c, n: int) -> MultiPoly:
        return cls(n, {(0,) * n: c})

    @classmethod
    def var(cls, i: int, n: int) -> MultiPoly:
        if not 0 <= i < n:
            raise IndexError(f"variable {i} out of range for n={n}")
        e = [0] * n
        e[i] = 1
        return cls._raw(n, {tuple(e): 1})

    @classmethod
    def monomial(cls, e: Exp, c=1) -> MultiPoly:
        return cls(len(e), {tuple(e): c})

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def _coerce(self, other) -> MultiPoly:
        if isinstance(other, MultiPoly):
            if other.n != self.n:
                raise ValueError(f"variable count mismatch: {self.n} vs {other.n}")
            return other
        if isinstance(other, (int, Fraction)):
            return MultiPoly.const(other, self.n)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = _norm(out.get(e, 0) + c)
        return MultiPoly._raw(self.n, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw(self.n, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[Exp, object] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return MultiPoly._raw(self.n, {e: _norm(c) for e, c in out.items()})

    __rmul__ = __mul__

    def scale(self, c) -> MultiPoly:
        c = _norm(c)
        if not c:
            return MultiPoly(self.n)
        return MultiPoly._raw(self.n, {e: _norm(v * c) for e, v in self.terms.items()})

    def __pow__(self, k: int) -> MultiPoly:
        if k < 0:
            raise ValueError("negative power")
        out = MultiPoly.const(1, self.n)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.n == other.n and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == MultiPoly.const(other, self.n)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, tuple(self.terms.items())))
        return self._hash

    def coeff(self, e: Exp):
        return self.terms.get(tuple(e), 0)

    def constant_term(self):
        return self.terms.get((0,) * self.n, 0)

    def degrees(self) -> set[int]:
        """Set of degrees (with deg x_i = 2) that occur."""
        return {2 * sum(e) for e in self.terms}

    def degree(self) -> int:
        """Degree of a homogeneous polynomial; -inf convention is avoided by raising on zero."""
        degs = self.degrees()
        if not degs:
            raise ValueError("zero polynomial has no degree")
        if len(degs) > 1:
            raise ValueError(f"{self} is not homogeneous")
        return degs.pop()

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.terms.items():
            mono = "*".join(
                f"x{i + 1}" if k == 1 else f"x{i + 1}^{k}" for i, k in enumerate(e) if k
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"MultiPoly({self})"

    def to_json(self) -> list:
        return [[list(e), str(c)] for e, c in self.terms.items()]


@lru_cache(maxsize=None)
def monomials(n: int, total: int) -> tuple[Exp, ...]:
    """Exponent vectors of total degree ``total`` (so polynomial degree 2*total)."""
    if total < 0:
        return ()
    out = []
    for combo in combinations_with_replacement(range(n), total):
        e = [0] * n
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    return tuple(sorted(out, reverse=True))


def act(perm: Sequence[int], p: MultiPoly) -> MultiPoly:
    """Substitute x_j -> x_{perm[j]}."""
    if len(perm) != p.n:
        raise ValueError(f"permutation of degree {len(perm)} applied to {p.n} variables")
    out = {}
    for e, c in p.terms.items():
        new = [0] * p.n
        for j, k in enumerate(e):
            new[perm[j]] += k
        out[tuple(new)] = c
    return MultiPoly._raw(p.n, out)


def reflect(i: int, p: MultiPoly) -> MultiPoly:
    """s_i . p, swapping x_i and x_{i+1}."""
    if not 0 <= i < p.n - 1:
        raise IndexError(f"s_{i + 1} needs at least {i + 2} variables")
    out = {}
    for e, c in p.terms.items():
        e = list(e)
        e[i], e[i + 1] = e[i + 1], e[i]
        out[tuple(e)] = c
    return MultiPoly._raw(p.n, out)


def root(i: int, n: int) -> MultiPoly:
    return MultiPoly.var(i, n) - MultiPoly.var(i + 1, n)


def demazure(i: int, p: MultiPoly) -> MultiPoly:
    """(p - s_i p) / alpha_i, computed monomial by monomial.

    For a = e_i > b = e_{i+1}, (x^a y^b - x^b y^a)/(x - y) = (xy)^b (x^(a-b-1) + ... + y^(a-b-1)).
    """
    if not 0 <= i < p.n - 1:
        raise IndexError(f"s_{i + 1} needs at least {i + 2} variables")
    out: dict[Exp, object] = {}
    for e, c in p.terms.items():
        a, b = e[i], e[i + 1]
        if a == b:
            continue
        sign = 1 if a > b else -1
        lo, d = min(a, b), abs(a - b)
        base = list(e)
        for k in range(d):
            base[i] = lo + k
            base[i + 1] = lo + d - 1 - k
            key = tuple(base)
            out[key] = out.get(key, 0) + sign * c
    return MultiPoly._raw(p.n, {e: _norm(c) for e, c in out.items()})


def invariant_split(i: int, p: MultiPoly) -> tuple[MultiPoly, MultiPoly]:
    """p = a + b * alpha_i with a, b both s_i-invariant."""
    half = Fraction(1, 2)
    a = (p + reflect(i, p)).scale(half)
    b = demazure(i, p).scale(half)
    return a, b


def from_terms(n: int, items: Iterable[tuple[Exp, object]]) -> MultiPoly:
    acc: dict[Exp, object] = {}
    for e, c in items:
        acc[tuple(e)] = acc.get(tuple(e), 0) + c
    return MultiPoly(n, acc)
