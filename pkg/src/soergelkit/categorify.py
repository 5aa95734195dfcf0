"""Split Grothendieck group of Soergel bimodules, read through the character map.

A class is a finite sum of shifted indecomposables ``B_w(k)`` with
non-negative multiplicities.  Bott-Samelson classes are decomposed by taking
the KL-basis coordinates of ``b_s1 ... b_sn`` and reading ``c v^k`` as ``c``
copies of ``B_w(k)``; that is, ``chi(B_w) = b_w`` is taken as given.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .coxeter import CoxeterSystem, GroupTooLarge, build_system, coxeter_matrix, format_word
from .hecke import (
    HeckeElt,
    KLTable,
    b_s,
    build_kl_table,
    delta,
    hk_mul,
    kl_expand,
    kl_structure_constants,
    pairing,
)
from .laurent import ZERO, LaurentPoly

__all__ = [
    "NotEffective",
    "InvalidTarget",
    "SBimClass",
    "bs_class",
    "chi",
    "phi",
    "hom_graded_rank",
    "positivity_scan",
    "PoloWitness",
    "polo_search",
]


class NotEffective(ValueError):
    """The element has a negative KL coordinate, so no bimodule realizes it."""


class InvalidTarget(ValueError):
    pass


class SBimClass:
    """Class ``sum mult * [B_w(shift)]`` in the split Grothendieck group."""

    __slots__ = ("system", "combo")

    def __init__(self, system: CoxeterSystem, combo: Mapping[tuple[int, int], int] | None = None):
        self.system = system
        clean = {}
        for (w, k), m in (combo or {}).items():
            if m < 0:
                raise NotEffective(f"negative multiplicity {m} for B_{w}({k})")
            if m:
                clean[(int(w), int(k))] = clean.get((int(w), int(k)), 0) + int(m)
        self.combo = dict(sorted(clean.items()))

    @classmethod
    def indecomposable(cls, system: CoxeterSystem, w: int, shift: int = 0) -> SBimClass:
        return cls(system, {(w, shift): 1})

    @classmethod
    def from_laurent(cls, system: CoxeterSystem, coords: Mapping[int, LaurentPoly]) -> SBimClass:
        combo = {}
        for w, poly in coords.items():
            for k, c in poly.items():
                if c < 0:
                    raise NotEffective(
                        f"coefficient {poly} of b_{format_word(system.words[w])} is not in Z>=0[v, v^-1]"
                    )
                combo[(w, k)] = c
        return cls(system, combo)

    def as_laurent(self) -> dict[int, LaurentPoly]:
        out: dict[int, LaurentPoly] = {}
        for (w, k), m in self.combo.items():
            out[w] = out.get(w, ZERO) + LaurentPoly.monomial(k, m)
        return dict(sorted(out.items()))

    def __add__(self, other: SBimClass) -> SBimClass:
        merged = dict(self.combo)
        for key, m in other.combo.items():
            merged[key] = merged.get(key, 0) + m
        return SBimClass(self.system, merged)

    def shift(self, k: int) -> SBimClass:
        """[B(k)] = v^k [B]."""
        return SBimClass(self.system, {(w, s + k): m for (w, s), m in self.combo.items()})

    def __eq__(self, other):
        if not isinstance(other, SBimClass):
            return NotImplemented
        return self.system is other.system and self.combo == other.combo

    def __hash__(self):
        return hash(tuple(self.combo.items()))

    def summands(self) -> list[dict]:
        words = self.system.words
        L = self.system.lengths
        items = sorted(self.combo.items(), key=lambda kv: (-L[kv[0][0]], kv[0][0], -kv[0][1]))
        return [{"w": format_word(words[w]), "shift": k, "mult": m} for (w, k), m in items]

    def to_json(self, word: Sequence[int] | None = None) -> dict:
        out = {}
        if word is not None:
            out["word"] = [s + 1 for s in word]
        out["summands"] = self.summands()
        return out

    def __str__(self):
        if not self.combo:
            return "0"
        parts = []
        for item in self.summands():
            term = f"B[{item['w']}]({item['shift']})"
            parts.append(term if item["mult"] == 1 else f"{item['mult']}*{term}")
        return " + ".join(parts)

    def __repr__(self):
        return f"SBimClass({self})"


def _table(sys: CoxeterSystem) -> KLTable:
    return build_kl_table(sys)


def bs_class(sys: CoxeterSystem, word: Sequence[int]) -> SBimClass:
    """Decomposition class of BS(word); the word need not be reduced."""
    prod = delta(sys, 0)
    for s in word:
        if not 0 <= s < sys.rank:
            raise ValueError(f"generator index {s} out of range")
        prod = hk_mul(prod, b_s(sys, s))
    return SBimClass.from_laurent(sys, kl_expand(_table(sys), prod))


def chi(c: SBimClass) -> HeckeElt:
    """[B_w(k)] -> v^k b_w, extended additively."""
    table = _table(c.system)
    acc = HeckeElt(c.system)
    for w, poly in c.as_laurent().items():
        acc = acc + table.basis(w).scale(poly)
    return acc


def phi(h: HeckeElt) -> SBimClass:
    """Inverse of :func:`chi` on effective elements; raises :class:`NotEffective`."""
    return SBimClass.from_laurent(h.system, kl_expand(_table(h.system), h))


def hom_graded_rank(b: SBimClass, b2: SBimClass, form: str = "kronecker") -> LaurentPoly:
    """Graded rank of Hom(B, B') as (chi(B), chi(B'))."""
    return pairing(chi(b), chi(b2), form)


def positivity_scan(sys: CoxeterSystem, structure_constants: bool = True) -> dict:
    """Look for negative coefficients in KL polynomials and KL structure constants."""
    table = _table(sys)
    words = sys.words
    kl_bad = []
    for (y, x), p in sorted(table.polys.items(), key=lambda kv: (kv[0][1], kv[0][0])):
        if any(c < 0 for _, c in p.items()):
            kl_bad.append({"y": format_word(words[y]), "x": format_word(words[x]), "poly": str(p)})
    report = {
        "type": sys.name,
        "size": sys.size,
        "kl_polys_checked": len(table.polys),
        "kl_violations": kl_bad,
    }
    if structure_constants:
        sc_bad = []
        checked = 0
        for x in range(sys.size):
            prods = kl_structure_constants(table, x)
            for y in range(sys.size):
                for z, c in prods[y].items():
                    checked += 1
                    if any(a < 0 for _, a in c.items()):
                        sc_bad.append(
                            {
                                "x": format_word(words[x]),
                                "y": format_word(words[y]),
                                "z": format_word(words[z]),
                                "coeff": str(c),
                            }
                        )
        report["structure_constants_checked"] = checked
        report["structure_violations"] = sc_bad
    report["ok"] = not kl_bad and not report.get("structure_violations")
    return report


@dataclass(frozen=True)
class PoloWitness:
    m: int
    N: int
    y_word: tuple[int, ...]
    x_word: tuple[int, ...]
    poly: LaurentPoly

    def to_json(self) -> dict:
        return {
            "found": True,
            "m": self.m,
            "N": self.N,
            "y_word": format_word(self.y_word),
            "x_word": format_word(self.x_word),
            "poly": self.poly.to_json(),
        }


def _check_target(q: LaurentPoly):
    if not q:
        raise InvalidTarget("target polynomial is zero")
    for e, c in q.items():
        if e < 0 or e % 2:
            raise InvalidTarget(f"{q} is not a polynomial in q = v^2")
        if c < 0:
            raise InvalidTarget(f"{q} has a negative coefficient")
    if q.leading_coeff() != 1:
        raise InvalidTarget(f"{q} is not monic")


def polo_search(q: LaurentPoly, max_n: int, max_elements: int = 20000) -> PoloWitness | None:
    """Find the smallest N <= max_n with some h_{y,x}(v) = v^m q in S_N.

    ``q`` is written in v (even exponents only, so ``1 + v^2`` is ``1 + q``).
    N runs from 2.  Within S_N, x runs in ShortLex order and, for each x, y
    walks down the interval from the top (decreasing l(y), then ShortLex), so
    the witness found for a given x has the smallest available m.
    Returns None when nothing is found within the bounds.
    """
    _check_target(q)
    qval = q.valuation()
    for N in range(2, max_n + 1):
        try:
            sys = build_system(coxeter_matrix(f"A{N - 1}"), max_elements)
        except GroupTooLarge:
            break
        table = _table(sys)
        L = sys.lengths
        for y, x in sorted(table.polys, key=lambda p: (p[1], -L[p[0]], p[0])):
            h = table.polys[(y, x)]
            m = h.valuation() - qval
            if h == q.shift(m):
                return PoloWitness(m, N, sys.words[y], sys.words[x], h)
    return None

