"""Finite Coxeter groups enumerated from their Coxeter matrix.

Elements are plain integers indexing the enumeration, sorted by
``(length, ShortLex normal word)``; index 0 is the identity.  Two words give
the same element iff their matrices in the geometric representation agree,
which is decided exactly.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence

import numpy as np

from . import geomrep
from .laurent import LaurentPoly

__all__ = [
    "InvalidMatrix",
    "GroupTooLarge",
    "CoxeterMatrix",
    "CoxeterSystem",
    "coxeter_matrix",
    "build_system",
    "named_system",
    "mult",
    "element_of_word",
    "bruhat_leq",
    "bruhat_matrix",
    "bruhat_lower_set",
    "longest_element",
    "length_gen_poly",
    "parse_word",
    "format_word",
]

DEFAULT_MAX_ELEMENTS = 20000


class InvalidMatrix(ValueError):
    pass


class GroupTooLarge(RuntimeError):
    pass


@dataclass(frozen=True)
class CoxeterMatrix:
    """Symmetric matrix of orders m_st, with 0 standing for infinity."""

    m: tuple[tuple[int, ...], ...]
    name: str | None = None

    def __post_init__(self):
        m = tuple(tuple(int(x) for x in row) for row in self.m)
        object.__setattr__(self, "m", m)
        n = len(m)
        if n == 0:
            raise InvalidMatrix("rank must be positive")
        for i, row in enumerate(m):
            if len(row) != n:
                raise InvalidMatrix("matrix is not square")
            if row[i] != 1:
                raise InvalidMatrix(f"diagonal entry m[{i}][{i}] = {row[i]} (must be 1)")
            for j, x in enumerate(row):
                if x != m[j][i]:
                    raise InvalidMatrix(f"m[{i}][{j}] != m[{j}][{i}]")
                if i != j and (x < 0 or x == 1):
                    raise InvalidMatrix(f"off-diagonal m[{i}][{j}] = {x} (must be >= 2 or 0 for infinity)")

    @property
    def rank(self) -> int:
        return len(self.m)

    def is_finite_bonded(self) -> bool:
        return all(x != 0 for row in self.m for x in row)

    def to_json(self) -> dict:
        return {"rank": self.rank, "m": [list(r) for r in self.m]}

    @classmethod
    def from_json(cls, obj: dict, name: str | None = None) -> CoxeterMatrix:
        cm = cls(tuple(tuple(r) for r in obj["m"]), name)
        if "rank" in obj and obj["rank"] != cm.rank:
            raise InvalidMatrix(f"rank field {obj['rank']} disagrees with matrix size {cm.rank}")
        return cm

    @classmethod
    def load(cls, path: str | Path) -> CoxeterMatrix:
        path = Path(path)
        return cls.from_json(json.loads(path.read_text()), name=path.stem)


def _from_edges(rank: int, edges: dict[tuple[int, int], int], name: str) -> CoxeterMatrix:
    m = [[1 if i == j else 2 for j in range(rank)] for i in range(rank)]
    for (i, j), v in edges.items():
        m[i][j] = m[j][i] = v
    return CoxeterMatrix(tuple(map(tuple, m)), name)


def _irreducible(kind: str, n: int | None, m: int | None) -> CoxeterMatrix:
    name = f"{kind}{n}" if m is None else f"I2({m})"
    if kind == "A":
        if n < 1:
            raise InvalidMatrix("A_n needs n >= 1")
        return _from_edges(n, {(i, i + 1): 3 for i in range(n - 1)}, name)
    if kind in ("B", "C"):
        if n < 2:
            raise InvalidMatrix("B_n needs n >= 2")
        edges = {(i, i + 1): 3 for i in range(n - 1)}
        edges[(n - 2, n - 1)] = 4
        return _from_edges(n, edges, name)
    if kind == "D":
        if n < 4:
            raise InvalidMatrix("D_n needs n >= 4")
        edges = {(i, i + 1): 3 for i in range(n - 2)}
        edges[(n - 3, n - 1)] = 3
        return _from_edges(n, edges, name)
    if kind == "E":
        if n not in (6, 7, 8):
            raise InvalidMatrix("E_n needs n in 6..8")
        # Bourbaki labelling: 1-3-4-5-...-n with 2 attached to 4
        edges = {(0, 2): 3, (1, 3): 3}
        edges.update({(i, i + 1): 3 for i in range(2, n - 1)})
        return _from_edges(n, edges, name)
    if kind == "F":
        if n != 4:
            raise InvalidMatrix("only F4 exists")
        return _from_edges(4, {(0, 1): 3, (1, 2): 4, (2, 3): 3}, name)
    if kind == "G":
        if n != 2:
            raise InvalidMatrix("only G2 exists")
        return _from_edges(2, {(0, 1): 6}, name)
    if kind == "H":
        if n not in (2, 3, 4):
            raise InvalidMatrix("H_n needs n in 2..4")
        edges = {(i, i + 1): 3 for i in range(n - 1)}
        edges[(0, 1)] = 5
        return _from_edges(n, edges, name)
    if kind == "I":
        if m is None or m < 2:
            raise InvalidMatrix("I2(m) needs m >= 2")
        return _from_edges(2, {(0, 1): m}, name)
    raise InvalidMatrix(f"unknown Cartan type {kind!r}")


_TYPE_RE = re.compile(r"^([a-z])_?(\d+)?(?:\((\d+)\))?$")


def coxeter_matrix(type_string: str) -> CoxeterMatrix:
    """Parse a type such as ``"A3"``, ``"b_3"``, ``"H3"``, ``"I2(7)"`` or ``"A1xA1"``."""
    pieces = re.split(r"[x×*]", type_string.strip().lower())
    blocks = []
    for piece in pieces:
        mt = _TYPE_RE.match(piece.strip())
        if not mt:
            raise InvalidMatrix(f"cannot parse Coxeter type {type_string!r}")
        kind, n, m = mt.group(1).upper(), mt.group(2), mt.group(3)
        if kind == "I":
            if n not in (None, "2") or m is None:
                raise InvalidMatrix(f"dihedral types are written I2(m), got {piece!r}")
            blocks.append(_irreducible("I", 2, int(m)))
        else:
            if n is None or m is not None:
                raise InvalidMatrix(f"cannot parse Coxeter type {piece!r}")
            blocks.append(_irreducible(kind, int(n), None))
    if len(blocks) == 1:
        return blocks[0]
    rank = sum(b.rank for b in blocks)
    m = [[2] * rank for _ in range(rank)]
    off = 0
    for b in blocks:
        for i in range(b.rank):
            for j in range(b.rank):
                m[off + i][off + j] = b.m[i][j]
        off += b.rank
    for i in range(rank):
        m[i][i] = 1
    return CoxeterMatrix(tuple(map(tuple, m)), "x".join(b.name for b in blocks))


@dataclass(frozen=True, eq=False)
class CoxeterSystem:
    """A completely enumerated finite Coxeter group.  Treat as read-only."""

    matrix: CoxeterMatrix
    words: tuple[tuple[int, ...], ...]
    lengths: tuple[int, ...]
    right_mult: tuple[tuple[int, ...], ...]
    left_mult: tuple[tuple[int, ...], ...]
    right_descents: tuple[int, ...]
    left_descents: tuple[int, ...]
    _cache: dict = field(default_factory=dict, repr=False)

    @property
    def size(self) -> int:
        return len(self.words)

    @property
    def rank(self) -> int:
        return self.matrix.rank

    @property
    def name(self) -> str:
        return self.matrix.name or "W"

    @property
    def max_length(self) -> int:
        return self.lengths[-1]

    def __len__(self):
        return len(self.words)

    def __repr__(self):
        return f"CoxeterSystem({self.name}, size={self.size})"

    def length(self, w: int) -> int:
        return self.lengths[w]

    def word(self, w: int) -> tuple[int, ...]:
        return self.words[w]

    def element(self, word: Sequence[int]) -> int:
        return element_of_word(self, word)

    def is_right_descent(self, w: int, s: int) -> bool:
        return bool(self.right_descents[w] >> s & 1)

    def is_left_descent(self, w: int, s: int) -> bool:
        return bool(self.left_descents[w] >> s & 1)

    def inverse(self, w: int) -> int:
        return element_of_word(self, reversed(self.words[w]))

    def right_mult_array(self) -> np.ndarray:
        arr = self._cache.get("rm_array")
        if arr is None:
            arr = np.array(self.right_mult, dtype=np.int32).reshape(self.size, self.rank)
            self._cache["rm_array"] = arr
        return arr

    def strata(self) -> list[range]:
        """Index ranges of the elements of each length."""
        bounds = [0]
        for k in range(1, self.max_length + 1):
            bounds.append(self.lengths.index(k))
        bounds.append(self.size)
        return [range(bounds[k], bounds[k + 1]) for k in range(self.max_length + 1)]


def build_system(cm: CoxeterMatrix, max_elements: int = DEFAULT_MAX_ELEMENTS) -> CoxeterSystem:
    """Enumerate W breadth-first in ShortLex order.

    Within a length stratum elements are expanded in lex order of their normal
    words and generators in increasing order, so the first word reaching a new
    element is its ShortLex-minimal reduced word and discovery order equals
    ``(length, lex)`` order.
    """
    if max_elements < 1:
        raise ValueError("max_elements must be positive")
    form = geomrep.build_form(cm, allow_infinite=True)
    rank = cm.rank
    # right multiplication by s: column t of M(w) gains coeff[s][t] * column s,
    # column s is negated
    coeff = [[-(form[t][s] * 2) for t in range(rank)] for s in range(rank)]
    F = form[0][0].field

    def key(cols):
        return tuple(e.coeffs for col in cols for e in col)

    def times(cols, s):
        cs = cols[s]
        out = []
        for t in range(rank):
            if t == s:
                out.append(tuple(-e for e in cs))
            else:
                c = coeff[s][t]
                if c.is_zero():
                    out.append(cols[t])
                else:
                    out.append(tuple(a + c * b for a, b in zip(cols[t], cs)))
        return out

    ident = [tuple(F.one if i == j else F.zero for i in range(rank)) for j in range(rank)]
    index = {key(ident): 0}
    mats = [ident]
    words: list[tuple[int, ...]] = [()]
    lengths = [0]
    right: list[list[int]] = [[-1] * rank]
    stratum = [0]
    while stratum:
        new = []
        for w in stratum:
            for s in range(rank):
                if right[w][s] >= 0:
                    continue
                cols = times(mats[w], s)
                k = key(cols)
                u = index.get(k)
                if u is None:
                    u = len(words)
                    if u >= max_elements:
                        raise GroupTooLarge(
                            f"{cm.name or 'group'} has more than {max_elements} elements"
                        )
                    index[k] = u
                    mats.append(cols)
                    words.append(words[w] + (s,))
                    lengths.append(lengths[w] + 1)
                    right.append([-1] * rank)
                    new.append(u)
                right[w][s] = u
                right[u][s] = w
        stratum = new

    size = len(words)
    right_t = tuple(tuple(r) for r in right)
    left = [[0] * rank for _ in range(size)]
    for w in range(size):
        # s*w is the element with word (s,) + word(w)
        for s in range(rank):
            u = right_t[0][s]
            for t in words[w]:
                u = right_t[u][t]
            left[w][s] = u
    rdes = tuple(
        sum(1 << s for s in range(rank) if lengths[right_t[w][s]] < lengths[w]) for w in range(size)
    )
    ldes = tuple(
        sum(1 << s for s in range(rank) if lengths[left[w][s]] < lengths[w]) for w in range(size)
    )
    return CoxeterSystem(
        matrix=cm,
        words=tuple(words),
        lengths=tuple(lengths),
        right_mult=right_t,
        left_mult=tuple(tuple(r) for r in left),
        right_descents=rdes,
        left_descents=ldes,
    )


_NAMED: dict[tuple[str, int], CoxeterSystem] = {}


def named_system(type_string: str, max_elements: int = DEFAULT_MAX_ELEMENTS) -> CoxeterSystem:
    """Build (and memoize) the system for a type string."""
    cm = coxeter_matrix(type_string)
    k = (cm.name, max_elements)
    if k not in _NAMED:
        _NAMED[k] = build_system(cm, max_elements)
    return _NAMED[k]


def element_of_word(sys: CoxeterSystem, word: Sequence[int]) -> int:
    """Evaluate an arbitrary (not necessarily reduced) word."""
    w = 0
    rm = sys.right_mult
    for s in word:
        if not 0 <= s < sys.rank:
            raise ValueError(f"generator index {s} out of range for rank {sys.rank}")
        w = rm[w][s]
    return w


def mult(sys: CoxeterSystem, a: int, b: int) -> int:
    rm = sys.right_mult
    for s in sys.words[b]:
        a = rm[a][s]
    return a


def bruhat_lower_set(sys: CoxeterSystem, x: int) -> np.ndarray:
    """Boolean mask of {y : y <= x}, memoized; built as D | D*s with D the set below xs."""
    cache = sys._cache.setdefault("downsets", {})
    got = cache.get(x)
    if got is not None:
        return got
    rm = sys.right_mult_array()
    chain = []
    w = x
    while w not in cache and w != 0:
        chain.append(w)
        w = sys.right_mult[w][sys.words[w][-1]]
    if w == 0 and 0 not in cache:
        base = np.zeros(sys.size, dtype=bool)
        base[0] = True
        cache[0] = base
    down = cache[w]
    for u in reversed(chain):
        s = sys.words[u][-1]
        # y <= u  iff  min(y, ys) <= us
        down = down | down[rm[:, s]]
        cache[u] = down
    return cache[x]


def bruhat_leq(sys: CoxeterSystem, y: int, x: int) -> bool:
    if sys.lengths[y] > sys.lengths[x]:
        return False
    return bool(bruhat_lower_set(sys, x)[y])


def bruhat_matrix(sys: CoxeterSystem) -> np.ndarray:
    """``M[y, x]`` is True iff y <= x."""
    return np.stack([bruhat_lower_set(sys, x) for x in range(sys.size)], axis=1)


def longest_element(sys: CoxeterSystem) -> int:
    w0 = sys.size - 1
    if sys.lengths.count(sys.lengths[w0]) != 1 or sys.right_descents[w0] != (1 << sys.rank) - 1:
        raise ArithmeticError("enumeration has no unique longest element")
    return w0


def length_gen_poly(sys: CoxeterSystem) -> LaurentPoly:
    """Poincare polynomial sum_w q^l(w); the exponent is the q-degree."""
    counts: dict[int, int] = {}
    for ell in sys.lengths:
        counts[ell] = counts.get(ell, 0) + 1
    return LaurentPoly(counts)


def parse_word(text: str) -> tuple[int, ...]:
    """``"2,1,3,2"`` (1-based) -> ``(1, 0, 2, 1)``; empty string or ``e`` is the identity."""
    text = text.strip()
    if text in ("", "e", "-", "()"):
        return ()
    try:
        word = tuple(int(tok) - 1 for tok in text.split(","))
    except ValueError as exc:
        raise ValueError(f"bad word {text!r}; expected comma-separated generator numbers") from exc
    if any(s < 0 for s in word):
        raise ValueError(f"generator numbers are 1-based, got {text!r}")
    return word


def format_word(word: Sequence[int]) -> str:
    """Inverse of :func:`parse_word`; the identity prints as ``e``."""
    return ",".join(str(s + 1) for s in word) if word else "e"

