"""The Hecke algebra in the standard basis and its Kazhdan-Lusztig basis.

Normalisation: ``delta_s**2 = (v^-1 - v) delta_s + 1``, ``b_s = delta_s + v``
and ``h_{y,x}`` lies in ``vZ[v]`` for y < x.

Two independent routes produce b_x:

* :func:`kl_basis_direct` solves bar-invariance coefficient by coefficient,
  descending through the lower Bruhat interval;
* :func:`kl_basis_mu_recursion` uses ``b_x = b_w b_s - sum mu(z,w) b_z``.

:func:`build_kl_table` runs the recursion for the whole group through the
compiled (or fallback) kernel in :mod:`soergelkit.klkernel`.
"""

from __future__ import annotations

import csv
import io
import json
import os
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from . import klkernel
from .coxeter import CoxeterSystem, bruhat_leq, format_word, longest_element, mult, bruhat_lower_set
from .laurent import ONE, V, V_INV, ZERO, LaurentPoly, lp_bar, lp_eval_one, lp_in_vZv

__all__ = [
    "HeckeElt",
    "KLSolveError",
    "KLTable",
    "delta",
    "hk_mul",
    "hk_bar",
    "bar_delta",
    "kl_basis_direct",
    "kl_basis_mu_recursion",
    "build_kl_table",
    "kl_polynomial",
    "mu",
    "kl_expand",
    "kl_times_bs",
    "kl_structure_constants",
    "pairing",
    "PAIRINGS",
    "inversion_defect",
    "CONVENTIONS",
    "specialize_v1",
    "group_algebra_mul",
]

V_MINUS_VINV = V - V_INV
VINV_MINUS_V = V_INV - V


class KLSolveError(ArithmeticError):
    """The bar-invariance solve produced a coefficient outside vZ[v]."""


class HeckeElt:
    """A finitely supported map W -> Z[v, v^-1], read as sum h_x delta_x."""

    __slots__ = ("system", "terms")

    def __init__(self, system: CoxeterSystem, terms: Mapping[int, LaurentPoly] | None = None):
        self.system = system
        self.terms: dict[int, LaurentPoly] = {}
        if terms:
            for x, c in terms.items():
                c = c if isinstance(c, LaurentPoly) else LaurentPoly.constant(c)
                if c:
                    self.terms[x] = c

    @classmethod
    def _raw(cls, system, terms):
        h = object.__new__(cls)
        h.system = system
        h.terms = terms
        return h

    def coeff(self, x: int) -> LaurentPoly:
        return self.terms.get(x, ZERO)

    def support(self) -> list[int]:
        return sorted(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def _check(self, other: HeckeElt):
        if other.system is not self.system:
            raise ValueError("Hecke elements from different systems")

    def __add__(self, other: HeckeElt) -> HeckeElt:
        self._check(other)
        return HeckeElt._raw(self.system, _add_into(dict(self.terms), other.terms, ONE))

    def __sub__(self, other: HeckeElt) -> HeckeElt:
        self._check(other)
        return HeckeElt._raw(self.system, _add_into(dict(self.terms), other.terms, -ONE))

    def __neg__(self) -> HeckeElt:
        return HeckeElt._raw(self.system, {x: -c for x, c in self.terms.items()})

    def scale(self, c: LaurentPoly | int) -> HeckeElt:
        c = c if isinstance(c, LaurentPoly) else LaurentPoly.constant(c)
        if not c:
            return HeckeElt(self.system)
        return HeckeElt(self.system, {x: c * h for x, h in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, HeckeElt):
            return hk_mul(self, other)
        if isinstance(other, (int, LaurentPoly)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, LaurentPoly)):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, HeckeElt):
            return NotImplemented
        return self.system is other.system and self.terms == other.terms

    def __repr__(self):
        return f"HeckeElt({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for x in sorted(self.terms, reverse=True):
            parts.append(f"({self.terms[x]})*d[{format_word(self.system.words[x])}]")
        return " + ".join(parts)

    def to_json(self) -> dict:
        return {
            format_word(self.system.words[x]): self.terms[x].to_json()
            for x in sorted(self.terms)
        }


def _add_into(acc: dict, terms: Mapping[int, LaurentPoly], factor: LaurentPoly) -> dict:
    for x, c in terms.items():
        new = acc.get(x, ZERO) + factor * c
        if new:
            acc[x] = new
        else:
            acc.pop(x, None)
    return acc


def delta(sys: CoxeterSystem, x: int) -> HeckeElt:
    return HeckeElt._raw(sys, {x: ONE})


def _times_delta_s(sys: CoxeterSystem, terms: dict[int, LaurentPoly], s: int) -> dict:
    rm, lengths = sys.right_mult, sys.lengths
    out: dict[int, LaurentPoly] = {}
    for x, c in terms.items():
        xs = rm[x][s]
        out[xs] = out.get(xs, ZERO) + c
        if lengths[xs] < lengths[x]:
            out[x] = out.get(x, ZERO) + VINV_MINUS_V * c
    return {x: c for x, c in out.items() if c}


def hk_mul(a: HeckeElt, b: HeckeElt) -> HeckeElt:
    """Product in the standard basis: a * delta_y is built letter by letter."""
    a._check(b)
    sys = a.system
    acc: dict[int, LaurentPoly] = {}
    for y, cy in b.terms.items():
        part = a.terms
        for s in sys.words[y]:
            part = _times_delta_s(sys, part, s)
        _add_into(acc, part, cy)
    return HeckeElt._raw(sys, acc)


def bar_delta(sys: CoxeterSystem, x: int) -> HeckeElt:
    """bar(delta_x) = bar(delta_{xs}) (delta_s + v - v^-1), memoized."""
    cache = sys._cache.setdefault("bar_delta", {0: {0: ONE}})
    if x not in cache:
        chain = []
        w = x
        while w not in cache:
            chain.append(w)
            w = sys.right_mult[w][sys.words[w][-1]]
        for u in reversed(chain):
            s = sys.words[u][-1]
            prev = cache[sys.right_mult[u][s]]
            terms = _times_delta_s(sys, prev, s)
            _add_into(terms, prev, V_MINUS_VINV)
            cache[u] = terms
    return HeckeElt._raw(sys, dict(cache[x]))


def hk_bar(a: HeckeElt) -> HeckeElt:
    """The KL involution: v -> v^-1 on coefficients, delta_x -> bar(delta_x)."""
    acc: dict[int, LaurentPoly] = {}
    for x, c in a.terms.items():
        _add_into(acc, bar_delta(a.system, x).terms, lp_bar(c))
    return HeckeElt._raw(a.system, acc)


def kl_basis_direct(sys: CoxeterSystem, x: int) -> HeckeElt:
    """b_x from bar-invariance alone.

    Writing b_x = sum h_y delta_y with h_x = 1, the delta_y coefficient of
    bar(b_x) - b_x only involves h_z for l(z) > l(y); hence
    ``h_y - bar(h_y) = p_y`` with p_y known, and h_y is the positive-degree
    part of p_y.  p_y must be antisymmetric under bar; if it is not,
    :class:`KLSolveError` is raised instead of truncating.
    """
    cache = sys._cache.setdefault("kl_direct", {})
    if x in cache:
        return HeckeElt._raw(sys, dict(cache[x]))
    h: dict[int, LaurentPoly] = {x: ONE}
    below = bruhat_lower_set(sys, x)
    bars = {z: bar_delta(sys, z).terms for z in range(x + 1) if below[z]}
    lx = sys.lengths[x]
    for y in range(x - 1, -1, -1):
        if not below[y] or sys.lengths[y] == lx:
            continue
        p = ZERO
        for z, hz in h.items():
            r = bars[z].get(y)
            if r is not None:
                p = p + lp_bar(hz) * r
        if not p:
            continue
        if p + lp_bar(p):
            raise KLSolveError(
                f"bar-invariance defect {p} at y={format_word(sys.words[y])}, "
                f"x={format_word(sys.words[x])} is not antisymmetric"
            )
        hy = LaurentPoly({e: c for e, c in p.items() if e > 0})
        if not lp_in_vZv(hy):
            raise KLSolveError("solved coefficient left vZ[v]")
        h[y] = hy
    cache[x] = h
    return HeckeElt._raw(sys, dict(h))


def _kl_mu(sys: CoxeterSystem, b_w: HeckeElt, w: int, s: int) -> list[tuple[int, int]]:
    rm, lengths = sys.right_mult, sys.lengths
    out = []
    for z, h in b_w.terms.items():
        if z != w and lengths[rm[z][s]] < lengths[z]:
            m = h.coeff(1)
            if m:
                out.append((z, m))
    return sorted(out)


def kl_basis_mu_recursion(sys: CoxeterSystem, x: int, descent: int | None = None) -> HeckeElt:
    """b_x = b_w b_s - sum_{z < w, zs < z} mu(z, w) b_z for x = ws > w.

    ``descent`` picks the right descent s of x; the default is the last letter
    of the ShortLex normal word.  The result does not depend on the choice.
    """
    cache = sys._cache.setdefault("kl_mu", {0: {0: ONE}})
    if descent is None and x in cache:
        return HeckeElt._raw(sys, dict(cache[x]))
    if descent is not None and not sys.is_right_descent(x, descent):
        raise ValueError(f"generator {descent + 1} is not a right descent")
    if descent is None:
        # fill the chain of prefixes bottom-up to keep recursion shallow
        chain = []
        w = x
        while w not in cache:
            chain.append(w)
            w = sys.right_mult[w][sys.words[w][-1]]
        for u in reversed(chain[1:]):
            kl_basis_mu_recursion(sys, u)
    s = sys.words[x][-1] if descent is None else descent
    w = sys.right_mult[x][s]
    b_w = kl_basis_mu_recursion(sys, w)
    b_s = HeckeElt._raw(sys, {sys.right_mult[0][s]: ONE, 0: V})
    acc = hk_mul(b_w, b_s).terms
    for z, m in _kl_mu(sys, b_w, w, s):
        _add_into(acc, kl_basis_mu_recursion(sys, z).terms, LaurentPoly.constant(-m))
    if descent is None:
        cache[x] = acc
    return HeckeElt._raw(sys, dict(acc))


@dataclass(eq=False)
class KLTable:
    """All h_{y,x} (y <= x) and mu(y,x) for one system."""

    system: CoxeterSystem
    polys: dict[tuple[int, int], LaurentPoly]
    mus: dict[tuple[int, int], int]
    backend: str = "python"
    _cols: dict[int, dict[int, LaurentPoly]] = field(default_factory=dict, repr=False)
    _mu_below: dict[int, list[tuple[int, int]]] = field(default_factory=dict, repr=False)

    def __post_init__(self):
        for (y, x), p in self.polys.items():
            self._cols.setdefault(x, {})[y] = p
        for (y, x), m in sorted(self.mus.items(), key=lambda kv: (kv[0][1], kv[0][0])):
            self._mu_below.setdefault(x, []).append((y, m))

    def poly(self, y: int, x: int) -> LaurentPoly:
        return self.polys.get((y, x), ZERO)

    def mu(self, y: int, x: int) -> int:
        return self.mus.get((y, x), 0)

    def basis(self, x: int) -> HeckeElt:
        return HeckeElt._raw(self.system, dict(self._cols[x]))

    def mu_below(self, x: int) -> list[tuple[int, int]]:
        """Pairs (z, mu(z, x)) with z < x and mu nonzero, sorted by z."""
        return self._mu_below.get(x, [])

    def pairs(self) -> list[tuple[int, int]]:
        """(y, x) with y <= x, sorted by (l(x), x, l(y), y)."""
        L = self.system.lengths
        return sorted(self.polys, key=lambda p: (L[p[1]], p[1], L[p[0]], p[0]))

    def rows(self) -> list[dict]:
        words = self.system.words
        return [
            {
                "y_word": format_word(words[y]),
                "x_word": format_word(words[x]),
                "poly": self.polys[(y, x)].to_json(),
                "mu": self.mu(y, x),
            }
            for y, x in self.pairs()
        ]

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["y_word", "x_word", "poly_json", "mu"])
        for row in self.rows():
            writer.writerow(
                [row["y_word"], row["x_word"], json.dumps(row["poly"], separators=(",", ":")), row["mu"]]
            )
        return buf.getvalue()

    def to_json(self) -> str:
        return json.dumps({"type": self.system.name, "size": self.system.size, "entries": self.rows()})


def default_threads() -> int:
    return os.cpu_count() or 1


def build_kl_table(
    sys: CoxeterSystem, threads: int | None = None, backend: str | None = None
) -> KLTable:
    """Full KL table via the selected kernel; memoized on the system."""
    backend = backend or klkernel.BACKEND
    cache = sys._cache.setdefault("kl_table", {})
    if backend in cache:
        return cache[backend]
    rows = klkernel.kl_rows(sys, threads or default_threads(), backend)
    polys: dict[tuple[int, int], LaurentPoly] = {}
    mus: dict[tuple[int, int], int] = {}
    for x, row in enumerate(rows):
        for y, coeffs in row.items():
            p = LaurentPoly.from_coeffs(coeffs)
            if y != x and not lp_in_vZv(p):
                raise KLSolveError(f"kernel produced h outside vZ[v] at ({y}, {x})")
            polys[(y, x)] = p
            if y != x and len(coeffs) > 1 and coeffs[1]:
                mus[(y, x)] = coeffs[1]
    table = KLTable(sys, polys, mus, backend)
    cache[backend] = table
    return table


def kl_polynomial(table: KLTable, y: int, x: int) -> LaurentPoly:
    """h_{y,x}; zero unless y <= x."""
    return table.poly(y, x)


def mu(table: KLTable, y: int, x: int) -> int:
    return table.mu(y, x)


def kl_expand(table: KLTable, h: HeckeElt) -> dict[int, LaurentPoly]:
    """Coordinates of h in the KL basis, peeling off the longest support element."""
    sys = table.system
    rest = dict(h.terms)
    out: dict[int, LaurentPoly] = {}
    while rest:
        x = max(rest, key=lambda u: (sys.lengths[u], u))
        c = rest[x]
        out[x] = c
        _add_into(rest, table._cols[x], -c)
    return dict(sorted(out.items()))


def kl_times_bs(table: KLTable, coords: Mapping[int, LaurentPoly], s: int) -> dict[int, LaurentPoly]:
    """Right multiplication by b_s in KL coordinates.

    b_x b_s = (v + v^-1) b_x if xs < x, else b_{xs} + sum_{z<x, zs<z} mu(z,x) b_z.
    """
    sys = table.system
    rm, lengths = sys.right_mult, sys.lengths
    out: dict[int, LaurentPoly] = {}
    v_plus = V + V_INV
    for x, c in coords.items():
        xs = rm[x][s]
        if lengths[xs] < lengths[x]:
            out[x] = out.get(x, ZERO) + v_plus * c
        else:
            out[xs] = out.get(xs, ZERO) + c
            for z, m in table.mu_below(x):
                if lengths[rm[z][s]] < lengths[z]:
                    out[z] = out.get(z, ZERO) + c.scale(m)
    return {x: c for x, c in sorted(out.items()) if c}


def kl_structure_constants(table: KLTable, x: int) -> dict[int, dict[int, LaurentPoly]]:
    """KL coordinates of b_x b_y for every y, computed entirely in the KL basis."""
    sys = table.system
    prods: dict[int, dict[int, LaurentPoly]] = {0: {x: ONE}}
    for y in range(1, sys.size):
        s = sys.words[y][-1]
        w = sys.right_mult[y][s]
        acc = kl_times_bs(table, prods[w], s)
        for z, m in table.mu_below(w):
            if sys.lengths[sys.right_mult[z][s]] < sys.lengths[z]:
                _add_into(acc, prods[z], LaurentPoly.constant(-m))
        prods[y] = acc
    return prods


def _kronecker(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a * b


def _bar_kronecker(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return lp_bar(a) * b


PAIRINGS = {"kronecker": _kronecker, "bar_kronecker": _bar_kronecker}


def pairing(a: HeckeElt, b: HeckeElt, form: str = "kronecker") -> LaurentPoly:
    """Standard form; default (delta_x, delta_y) = [x == y], bilinear."""
    a._check(b)
    f = PAIRINGS[form]
    acc = ZERO
    for x, c in a.terms.items():
        d = b.terms.get(x)
        if d is not None:
            acc = acc + f(c, d)
    return acc


CONVENTIONS = ("paper", "corrected")


def inversion_defect(table: KLTable, x: int, y: int, convention: str = "corrected") -> LaurentPoly:
    """sum_z sign * h_{z,x} h_{zw0, yw0} minus [x == y].

    ``paper`` uses the sign (-1)^(l(y)+l(x)); ``corrected`` uses (-1)^(l(z)+l(x)).
    """
    if convention not in CONVENTIONS:
        raise ValueError(f"unknown convention {convention!r}")
    sys = table.system
    w0 = longest_element(sys)
    L = sys.lengths
    yw0 = mult(sys, y, w0)
    acc = ZERO
    for z in range(sys.size):
        hzx = table.poly(z, x)
        if not hzx:
            continue
        other = table.poly(mult(sys, z, w0), yw0)
        if not other:
            continue
        exponent = L[y] + L[x] if convention == "paper" else L[z] + L[x]
        term = hzx * other
        acc = acc - term if exponent % 2 else acc + term
    return acc - (ONE if x == y else ZERO)


def specialize_v1(a: HeckeElt) -> dict[int, int]:
    """v -> 1: the image in the group algebra Z[W] as {w: coefficient}."""
    out = {}
    for x, c in sorted(a.terms.items()):
        n = lp_eval_one(c)
        if n:
            out[x] = n
    return out


def group_algebra_mul(sys: CoxeterSystem, a: Mapping[int, int], b: Mapping[int, int]) -> dict[int, int]:
    acc: dict[int, int] = {}
    for x, c in a.items():
        for y, d in b.items():
            xy = mult(sys, x, y)
            acc[xy] = acc.get(xy, 0) + c * d
    return {w: c for w, c in sorted(acc.items()) if c}


def b_s(sys: CoxeterSystem, s: int) -> HeckeElt:
    """delta_s + v."""
    return HeckeElt._raw(sys, {sys.right_mult[0][s]: ONE, 0: V})


def bruhat_interval(sys: CoxeterSystem, y: int, x: int) -> Iterable[int]:
    return (z for z in range(sys.size) if bruhat_leq(sys, y, z) and bruhat_leq(sys, z, x))
