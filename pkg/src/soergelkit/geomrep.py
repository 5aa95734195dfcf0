"""The geometric representation of a Coxeter group over exact cyclotomic numbers.

On the basis of simple roots the form is ``(a_s, a_t) = -cos(pi/m_st)`` and
``s`` acts by ``x -> x - 2 (x, a_s) a_s``.  All matrices are tuples of rows of
:class:`~soergelkit.cyclotomic.AlgNum`.
"""

from __future__ import annotations

import math
from itertools import permutations
from typing import TYPE_CHECKING, Sequence

from .cyclotomic import AlgNum, CyclotomicField

if TYPE_CHECKING:
    from .coxeter import CoxeterMatrix, CoxeterSystem

__all__ = [
    "InfiniteBond",
    "field_for",
    "build_form",
    "reflection_matrix",
    "reflection_matrices",
    "element_matrix",
    "mat_mul",
    "identity",
    "determinant",
    "preserves_form",
    "verify_relations",
    "faithfulness_check",
    "matrix_closure_size",
    "float_matrix",
    "format_matrix",
]

Matrix = tuple[tuple[AlgNum, ...], ...]


class InfiniteBond(ValueError):
    """Raised when a form is requested for a matrix with an m_st = infinity entry."""


def field_for(cm: CoxeterMatrix) -> CyclotomicField:
    N = 2
    for row in cm.m:
        for m in row:
            if m > 1:
                N = math.lcm(N, m)
    return CyclotomicField(N)


def build_form(cm: CoxeterMatrix, allow_infinite: bool = False) -> Matrix:
    """Gram matrix of the simple roots.

    An infinite bond gets the limiting value -1; unless ``allow_infinite`` is
    set this raises :class:`InfiniteBond` instead.
    """
    F = field_for(cm)
    rows = []
    for s in range(cm.rank):
        row = []
        for t in range(cm.rank):
            m = cm.m[s][t]
            if m == 0:
                if not allow_infinite:
                    raise InfiniteBond(f"m[{s}][{t}] is infinite")
                row.append(F.rational(-1))
            else:
                row.append(-F.cos_pi_over(m))
        rows.append(tuple(row))
    return tuple(rows)


def identity(F: CyclotomicField, n: int) -> Matrix:
    return tuple(tuple(F.one if i == j else F.zero for j in range(n)) for i in range(n))


def reflection_matrix(form: Matrix, s: int) -> Matrix:
    """Matrix of s on the simple-root basis; column t is s(a_t)."""
    n = len(form)
    F = form[0][0].field
    rows = []
    for u in range(n):
        row = []
        for t in range(n):
            entry = F.one if u == t else F.zero
            if u == s:
                entry = entry - form[t][s] * 2
            row.append(entry)
        rows.append(tuple(row))
    return tuple(rows)


def reflection_matrices(form: Matrix) -> list[Matrix]:
    return [reflection_matrix(form, s) for s in range(len(form))]


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    n, k, m = len(a), len(b), len(b[0])
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            acc = a[i][0] * b[0][j]
            for t in range(1, k):
                acc = acc + a[i][t] * b[t][j]
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


def transpose(a: Matrix) -> Matrix:
    return tuple(zip(*a))


def determinant(a: Matrix) -> AlgNum:
    n = len(a)
    F = a[0][0].field
    total = F.zero
    for perm in permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = F.one
        for i in range(n):
            term = term * a[i][perm[i]]
            if term.is_zero():
                break
        total = total - term if inversions % 2 else total + term
    return total


def preserves_form(mat: Matrix, form: Matrix) -> bool:
    return mat_mul(mat_mul(transpose(mat), form), mat) == form


def element_matrix(word: Sequence[int], refl: Sequence[Matrix]) -> Matrix:
    F = refl[0][0][0].field
    out = identity(F, len(refl))
    for s in word:
        out = mat_mul(out, refl[s])
    return out


def _power(a: Matrix, k: int) -> Matrix:
    F = a[0][0].field
    out = identity(F, len(a))
    for _ in range(k):
        out = mat_mul(out, a)
    return out


def verify_relations(sys_or_matrix, orders: Sequence[Sequence[int]] | None = None) -> list[dict]:
    """Check ``s^2 = 1`` and ``(st)^m_st = 1`` exactly.

    The reflections come from the system's own Coxeter matrix; ``orders``
    overrides the exponents being checked (used as a negative control).
    Infinite bonds are skipped.  Returns the list of violations.
    """
    cm = getattr(sys_or_matrix, "matrix", sys_or_matrix)
    form = build_form(cm, allow_infinite=True)
    refl = reflection_matrices(form)
    orders = cm.m if orders is None else orders
    F = form[0][0].field
    one = identity(F, cm.rank)
    violations = []
    for s in range(cm.rank):
        for t in range(s, cm.rank):
            m = 2 if s == t else orders[s][t]
            if m == 0:
                continue
            base = refl[s] if s == t else mat_mul(refl[s], refl[t])
            if _power(base, m if s != t else 2) != one:
                violations.append({"s": s, "t": t, "m": m})
    return violations


def faithfulness_check(sys: CoxeterSystem) -> bool:
    """True iff the |W| element matrices are pairwise distinct."""
    form = build_form(sys.matrix, allow_infinite=True)
    refl = reflection_matrices(form)
    seen = set()
    for w in range(sys.size):
        mat = element_matrix(sys.words[w], refl)
        seen.add(tuple(tuple(e.coeffs for e in row) for row in mat))
    return len(seen) == sys.size


def matrix_closure_size(cm: CoxeterMatrix, cap: int = 20000) -> int:
    """Order of the matrix group generated by the reflections, by plain closure."""
    form = build_form(cm, allow_infinite=True)
    refl = reflection_matrices(form)
    F = form[0][0].field
    start = identity(F, cm.rank)
    key = lambda m: tuple(tuple(e.coeffs for e in row) for row in m)  # noqa: E731
    seen = {key(start)}
    frontier = [start]
    while frontier:
        nxt = []
        for mat in frontier:
            for r in refl:
                prod = mat_mul(mat, r)
                k = key(prod)
                if k not in seen:
                    seen.add(k)
                    nxt.append(prod)
                    if len(seen) > cap:
                        raise RuntimeError("matrix group exceeds cap")
        frontier = nxt
    return len(seen)


def float_matrix(mat: Matrix) -> list[list[float]]:
    """Floating-point view; for display only."""
    return [[float(e) for e in row] for row in mat]


def format_matrix(mat: Matrix) -> str:
    lines = []
    for row in mat:
        exact = ", ".join(str(e) for e in row)
        approx = ", ".join(f"{float(e):.9f}" for e in row)
        lines.append(f"[{exact}]    ~ [{approx}]")
    return "\n".join(lines)
