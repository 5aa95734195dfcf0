"""Sparse Laurent polynomials in one variable ``v`` with integer coefficients.

A polynomial is stored as a mapping ``exponent -> coefficient`` with no zero
coefficients, so two polynomials are equal iff their term maps are equal.

>>> v = LaurentPoly.gen()
>>> (v + v**-1) * (v + v**-1)
LaurentPoly({-2: 1, 0: 2, 2: 1})
>>> lp_bar(v + v**3)
LaurentPoly({-3: 1, -1: 1})
"""

from __future__ import annotations

import json
from collections.abc import Iterable, Mapping

__all__ = [
    "LaurentPoly",
    "lp_mul",
    "lp_bar",
    "lp_eval_one",
    "lp_in_vZv",
    "ZERO",
    "ONE",
    "V",
    "V_INV",
]


class LaurentPoly:
    """An immutable element of Z[v, v^-1]."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, int] = {}
        for e, c in items:
            if c:
                acc[int(e)] = acc.get(int(e), 0) + int(c)
        self._terms = {e: acc[e] for e in sorted(acc) if acc[e]}
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[int, int]) -> LaurentPoly:
        # caller guarantees: sorted keys, no zero coefficients
        p = object.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def gen(cls) -> LaurentPoly:
        return cls._raw({1: 1})

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> LaurentPoly:
        return cls._raw({exponent: coeff}) if coeff else ZERO

    @classmethod
    def constant(cls, c: int) -> LaurentPoly:
        return cls.monomial(0, c)

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int], start: int = 0) -> LaurentPoly:
        """Build from a dense coefficient list whose first entry has exponent ``start``."""
        return cls._raw({start + i: int(c) for i, c in enumerate(coeffs) if c})

    # -- accessors ---------------------------------------------------------

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coeff(self, exponent: int) -> int:
        return self._terms.get(exponent, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self) -> int | None:
        return next(reversed(self._terms)) if self._terms else None

    def valuation(self) -> int | None:
        return next(iter(self._terms)) if self._terms else None

    def leading_coeff(self) -> int:
        d = self.degree()
        return 0 if d is None else self._terms[d]

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        acc = dict(self._terms)
        for e, c in other._terms.items():
            acc[e] = acc.get(e, 0) + c
        return LaurentPoly(acc)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return lp_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomials can be inverted in Z[v, v^-1]")
            (e, c), = self._terms.items()
            if c not in (1, -1):
                raise ValueError("monomial coefficient must be a unit")
            return LaurentPoly.monomial(e * k, c ** (-k))
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by ``v**k``."""
        return LaurentPoly._raw({e + k: c for e, c in self._terms.items()})

    def scale(self, c: int) -> LaurentPoly:
        if not c:
            return ZERO
        return LaurentPoly._raw({e: c * a for e, a in self._terms.items()})

    def __call__(self, value):
        return sum(c * value**e for e, c in self._terms.items())

    # -- comparison / hashing ----------------------------------------------

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self._terms == other._terms
        if isinstance(other, int):
            return self._terms == ({0: other} if other else {})
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    def __repr__(self):
        return f"LaurentPoly({self._terms})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for e, c in reversed(self._terms.items()):
            if e == 0:
                mono = str(abs(c))
            else:
                var = "v" if e == 1 else f"v^{e}"
                mono = var if abs(c) == 1 else f"{abs(c)}*{var}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, mono))
        head_sign, head = parts[0]
        out = ("-" if head_sign == "-" else "") + head
        for sign, mono in parts[1:]:
            out += f" {sign} {mono}"
        return out

    # -- serialization -----------------------------------------------------

    def to_json(self) -> dict:
        return {"coeffs": {str(e): c for e, c in self._terms.items()}}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"))

    @classmethod
    def from_json(cls, obj: Mapping | str) -> LaurentPoly:
        if isinstance(obj, str):
            obj = json.loads(obj)
        return cls({int(e): int(c) for e, c in obj["coeffs"].items()})

    @classmethod
    def parse(cls, text: str) -> LaurentPoly:
        """Parse strings such as ``"1 + v^2"``, ``"v^-1 - v"`` or ``"3*v^4"``.

        The letter ``q`` is accepted as an alias for ``v^2``.
        """
        s = text.replace(" ", "").replace("**", "^")
        if not s:
            raise ValueError("empty polynomial")
        if s[0] not in "+-":
            s = "+" + s
        terms: dict[int, int] = {}
        i = 0
        while i < len(s):
            sign = -1 if s[i] == "-" else 1
            j = i + 1
            while j < len(s) and not (s[j] in "+-" and s[j - 1] != "^"):
                j += 1
            chunk = s[i + 1 : j]
            i = j
            if not chunk:
                raise ValueError(f"malformed polynomial {text!r}")
            coeff, _, var = chunk.partition("*")
            if not var and chunk[0] in "vq":
                coeff, var = "1", chunk
            c = sign * int(coeff)
            if not var:
                e = 0
            else:
                name, _, power = var.partition("^")
                if name not in ("v", "q"):
                    raise ValueError(f"unknown variable {name!r} in {text!r}")
                e = int(power.strip("()")) if power else 1
                if name == "q":
                    e *= 2
            terms[e] = terms.get(e, 0) + c
        return cls(terms)


def _coerce(x):
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly.constant(x)
    return NotImplemented


def lp_mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Exact convolution product."""
    if not a._terms or not b._terms:
        return ZERO
    acc: dict[int, int] = {}
    for e1, c1 in a._terms.items():
        for e2, c2 in b._terms.items():
            e = e1 + e2
            acc[e] = acc.get(e, 0) + c1 * c2
    return LaurentPoly(acc)


def lp_bar(a: LaurentPoly) -> LaurentPoly:
    """The ring involution ``v -> v^-1``."""
    return LaurentPoly._raw({-e: c for e, c in reversed(a._terms.items())})


def lp_eval_one(a: LaurentPoly) -> int:
    return sum(a._terms.values())


def lp_in_vZv(a: LaurentPoly) -> bool:
    """True iff every exponent is at least 1 (the zero polynomial qualifies)."""
    return all(e >= 1 for e in a._terms)


ZERO = LaurentPoly._raw({})
ONE = LaurentPoly._raw({0: 1})
V = LaurentPoly._raw({1: 1})
V_INV = LaurentPoly._raw({-1: 1})
