"""Grothendieck group of the principal block, identified with Z[W] via [M_w] -> w.

Only classes are modelled.  Translation through the s-wall acts as right
multiplication by (1 + s); projective classes come from the inductive
recursion ``[Pr_x] = [Pr_w](1 + s) - sum m_z [Pr_z]`` with the m_z taken from
the KL mu-values, and are then compared against ``b_x`` at v = 1.
"""

from __future__ import annotations

import csv
import io
from typing import Mapping

from .coxeter import CoxeterSystem, format_word, longest_element, mult
from .hecke import CONVENTIONS, KLTable, build_kl_table
from .laurent import lp_eval_one

__all__ = [
    "GrothOElt",
    "verma_class",
    "theta_action",
    "proj_class",
    "simple_class",
    "bgg_check",
    "proj_matrix_csv",
    "simple_matrix_csv",
]


class GrothOElt:
    """Integer combination of Verma classes."""

    __slots__ = ("system", "coords")

    def __init__(self, system: CoxeterSystem, coords: Mapping[int, int] | None = None):
        self.system = system
        self.coords = {w: c for w, c in sorted((coords or {}).items()) if c}

    def coeff(self, w: int) -> int:
        return self.coords.get(w, 0)

    def __add__(self, other: GrothOElt) -> GrothOElt:
        acc = dict(self.coords)
        for w, c in other.coords.items():
            acc[w] = acc.get(w, 0) + c
        return GrothOElt(self.system, acc)

    def __sub__(self, other: GrothOElt) -> GrothOElt:
        return self + other.scale(-1)

    def scale(self, k: int) -> GrothOElt:
        return GrothOElt(self.system, {w: k * c for w, c in self.coords.items()})

    def __eq__(self, other):
        if isinstance(other, GrothOElt):
            return self.system is other.system and self.coords == other.coords
        if isinstance(other, Mapping):
            return self.coords == {w: c for w, c in other.items() if c}
        return NotImplemented

    def __repr__(self):
        words = self.system.words
        body = " + ".join(f"{c}*[M_{format_word(words[w])}]" for w, c in self.coords.items())
        return f"GrothOElt({body or 0})"

    def to_json(self) -> dict:
        return {format_word(self.system.words[w]): c for w, c in self.coords.items()}


def verma_class(sys: CoxeterSystem, w: int) -> GrothOElt:
    return GrothOElt(sys, {w: 1})


def theta_action(a: GrothOElt, s: int) -> GrothOElt:
    """[M_w] -> [M_w] + [M_ws]."""
    rm = a.system.right_mult
    acc: dict[int, int] = {}
    for w, c in a.coords.items():
        acc[w] = acc.get(w, 0) + c
        ws = rm[w][s]
        acc[ws] = acc.get(ws, 0) + c
    return GrothOElt(a.system, acc)


def proj_class(sys: CoxeterSystem, x: int, table: KLTable | None = None) -> GrothOElt:
    """[Pr_x] by induction on Bruhat order (memoized per system)."""
    table = table or build_kl_table(sys)
    cache = sys._cache.setdefault("proj_class", {0: verma_class(sys, 0)})
    if x in cache:
        return cache[x]
    chain = []
    u = x
    while u not in cache:
        chain.append(u)
        u = sys.right_mult[u][sys.words[u][-1]]
    L, rm = sys.lengths, sys.right_mult
    for u in reversed(chain):
        s = sys.words[u][-1]
        w = rm[u][s]
        acc = theta_action(cache[w], s)
        for z, m in table.mu_below(w):
            if L[rm[z][s]] < L[z]:
                acc = acc - proj_class(sys, z, table).scale(m)
        cache[u] = acc
    return cache[x]


def simple_class(
    sys: CoxeterSystem, y: int, convention: str = "corrected", table: KLTable | None = None
) -> GrothOElt:
    """[L_y] = sum_{x >= y} (-1)^(l(x)+l(y)) h_{xw0, yw0}(1) [M_x].

    Here the sign already depends on the summation index, so both conventions
    produce the same class; the argument is accepted for symmetry with
    :func:`soergelkit.hecke.inversion_defect`.
    """
    if convention not in CONVENTIONS:
        raise ValueError(f"unknown convention {convention!r}")
    table = table or build_kl_table(sys)
    w0 = longest_element(sys)
    L = sys.lengths
    yw0 = mult(sys, y, w0)
    acc = {}
    for x in range(sys.size):
        h = table.poly(mult(sys, x, w0), yw0)
        if h:
            acc[x] = (-1) ** (L[x] + L[y]) * lp_eval_one(h)
    return GrothOElt(sys, acc)


def bgg_check(sys: CoxeterSystem, x: int, y: int, table: KLTable | None = None) -> bool:
    """(Pr_x : M_y) from the recursion equals h_{y,x}(1)."""
    table = table or build_kl_table(sys)
    return proj_class(sys, x, table).coeff(y) == lp_eval_one(table.poly(y, x))


def _matrix_csv(sys: CoxeterSystem, columns) -> str:
    words = [format_word(w) for w in sys.words]
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["class"] + words)
    for x, elt in enumerate(columns):
        writer.writerow([words[x]] + [elt.coeff(y) for y in range(sys.size)])
    return buf.getvalue()


def proj_matrix_csv(sys: CoxeterSystem) -> str:
    """Row x lists the Verma multiplicities (Pr_x : M_y)."""
    table = build_kl_table(sys)
    return _matrix_csv(sys, [proj_class(sys, x, table) for x in range(sys.size)])


def simple_matrix_csv(sys: CoxeterSystem, convention: str = "corrected") -> str:
    table = build_kl_table(sys)
    return _matrix_csv(sys, [simple_class(sys, y, convention, table) for y in range(sys.size)])
