"""Bott-Samelson bimodules in type A, computed in explicit coordinates.

BS(s_1..s_m) = R (x)_{R^{s_1}} R (x) ... (x)_{R^{s_m}} R, shifted by m, with
R = Q[x_1..x_n].  Each factor R is free over R^s on {1, alpha_s}, so BS is a
free left R-module on the 2^m tensors 1 (x) c_1 (x) ... (x) c_m with c_k in
{1, alpha_{s_k}}.  A label is the 0/1 vector choosing c_k; its degree is
2*|label| - m.

Right multiplication is brought back to this form by splitting slots from the
right (``p = a + b alpha`` with a, b invariant, then moving a, b one slot to
the left).  Bimodule maps are stored by the images of the basis tensors; left
linearity is then automatic and right linearity is checked (or solved for)
against the generators x_i.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Iterable, Sequence

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from .coxeter import CoxeterSystem
from .laurent import LaurentPoly
from .multipoly import MultiPoly, act, demazure, invariant_split, monomials, root

__all__ = [
    "ShapeMismatch",
    "SplitFailed",
    "TensorElt",
    "BimoduleMap",
    "labels",
    "label_degree",
    "basis_tensor",
    "normalize",
    "pure_tensor",
    "graded_left_rank",
    "element_perm",
    "act_element",
    "compose",
    "identity_map",
    "split_BsBs",
    "mult_map",
    "unit_map",
    "hom_basis",
    "hom_basis_Bs_Bs",
    "hom_rank_lab",
    "cyclic_generation_check",
    "generation_profile",
    "module_coords",
    "default_vars",
    "demazure",
    "invariant_split",
    "act",
]

Label = tuple[int, ...]
Word = tuple[int, ...]


class ShapeMismatch(ValueError):
    pass


class SplitFailed(RuntimeError):
    pass


def default_vars(word: Sequence[int]) -> int:
    """Smallest n for which every s_i in ``word`` acts on x_1..x_n."""
    return max(word, default=0) + 2


def labels(m: int) -> tuple[Label, ...]:
    return tuple(product((0, 1), repeat=m))


def label_degree(label: Label) -> int:
    return 2 * sum(label) - len(label)


def _check_word(word: Sequence[int], n: int) -> Word:
    word = tuple(int(s) for s in word)
    for s in word:
        if not 0 <= s < n - 1:
            raise ValueError(f"generator s_{s + 1} needs at least {s + 2} variables, have {n}")
    return word


@dataclass(frozen=True, eq=False)
class TensorElt:
    """Element of BS(word) as left coefficients on the free basis."""

    word: Word
    n: int
    coords: dict = field(default_factory=dict)
    shift: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "word", tuple(self.word))
        if self.shift is None:
            object.__setattr__(self, "shift", len(self.word))
        clean = {tuple(b): f for b, f in self.coords.items() if f}
        object.__setattr__(self, "coords", dict(sorted(clean.items())))

    @classmethod
    def zero(cls, word: Sequence[int], n: int) -> TensorElt:
        return cls(tuple(word), n, {})

    def _same_space(self, other: TensorElt):
        if self.word != other.word or self.n != other.n:
            raise ShapeMismatch(f"BS{self.word} and BS{other.word} (n={self.n}, {other.n}) differ")

    def __add__(self, other: TensorElt) -> TensorElt:
        self._same_space(other)
        acc = dict(self.coords)
        for b, f in other.coords.items():
            acc[b] = acc[b] + f if b in acc else f
        return TensorElt(self.word, self.n, acc, self.shift)

    def __neg__(self):
        return TensorElt(self.word, self.n, {b: -f for b, f in self.coords.items()}, self.shift)

    def __sub__(self, other: TensorElt) -> TensorElt:
        return self + (-other)

    def left_mul(self, f) -> TensorElt:
        if not isinstance(f, MultiPoly):
            f = MultiPoly.const(f, self.n)
        return TensorElt(self.word, self.n, {b: f * g for b, g in self.coords.items()}, self.shift)

    def right_mul(self, g) -> TensorElt:
        if not isinstance(g, MultiPoly):
            g = MultiPoly.const(g, self.n)
        acc = TensorElt.zero(self.word, self.n)
        for b, f in self.coords.items():
            acc = acc + _basis_times(self.word, self.n, b, g).left_mul(f)
        return acc

    def __eq__(self, other):
        if not isinstance(other, TensorElt):
            return NotImplemented
        return self.word == other.word and self.n == other.n and self.coords == other.coords

    def __hash__(self):
        return hash((self.word, self.n, tuple(self.coords.items())))

    def __bool__(self):
        return bool(self.coords)

    def degrees(self) -> set[int]:
        out = set()
        for b, f in self.coords.items():
            out |= {d + 2 * sum(b) - self.shift for d in f.degrees()}
        return out

    def degree(self) -> int:
        degs = self.degrees()
        if len(degs) != 1:
            raise ValueError(f"element is not homogeneous (degrees {sorted(degs)})")
        return degs.pop()

    def __str__(self):
        if not self.coords:
            return "0"
        parts = []
        for b, f in self.coords.items():
            slots = " (x) ".join(["1"] + [f"a{self.word[k] + 1}" if c else "1" for k, c in enumerate(b)])
            parts.append(f"({f})*[{slots}]")
        return " + ".join(parts)

    def to_json(self) -> dict:
        return {
            "word": [s + 1 for s in self.word],
            "n": self.n,
            "coords": {"".join(map(str, b)): f.to_json() for b, f in self.coords.items()},
        }


def _slot_poly(word: Word, n: int, k: int, bit: int) -> MultiPoly:
    return root(word[k], n) if bit else MultiPoly.const(1, n)


def basis_tensor(word: Sequence[int], n: int, label: Label) -> TensorElt:
    word = _check_word(word, n)
    if len(label) != len(word):
        raise ShapeMismatch(f"label {label} does not fit word of length {len(word)}")
    return TensorElt(word, n, {tuple(label): MultiPoly.const(1, n)})


def _normalize_slots(word: Word, n: int, slots: Sequence[MultiPoly]) -> dict[Label, MultiPoly]:
    """Coordinates of the pure tensor slots[0] (x) ... (x) slots[m]."""
    m = len(word)
    if len(slots) != m + 1:
        raise ShapeMismatch(f"BS{word} needs {m + 1} slots, got {len(slots)}")
    states: list[tuple[list[MultiPoly], Label]] = [(list(slots), ())]
    for k in range(m, 0, -1):
        s = word[k - 1]
        nxt = []
        for polys, suffix in states:
            a, b = invariant_split(s, polys[k])
            head = polys[: k - 1]
            if a:
                nxt.append((head + [polys[k - 1] * a], (0,) + suffix))
            if b:
                nxt.append((head + [polys[k - 1] * b], (1,) + suffix))
        states = nxt
    out: dict[Label, MultiPoly] = {}
    for polys, label in states:
        out[label] = out[label] + polys[0] if label in out else polys[0]
    return out


def pure_tensor(word: Sequence[int], n: int, slots: Sequence) -> TensorElt:
    word = _check_word(word, n)
    polys = [p if isinstance(p, MultiPoly) else MultiPoly.const(p, n) for p in slots]
    return TensorElt(word, n, _normalize_slots(word, n, polys))


def normalize(word: Sequence[int], n: int, terms: Iterable[tuple[object, Sequence]]) -> TensorElt:
    """Normal form of sum coeff * (slot_0 (x) ... (x) slot_m)."""
    word = _check_word(word, n)
    acc = TensorElt.zero(word, n)
    for coeff, slots in terms:
        acc = acc + pure_tensor(word, n, slots).left_mul(coeff)
    return acc


@lru_cache(maxsize=None)
def _basis_times(word: Word, n: int, label: Label, g: MultiPoly) -> TensorElt:
    slots = [MultiPoly.const(1, n)] + [_slot_poly(word, n, k, c) for k, c in enumerate(label)]
    slots[-1] = slots[-1] * g
    return TensorElt(word, n, _normalize_slots(word, n, slots))


def graded_left_rank(word: Sequence[int]) -> LaurentPoly:
    """sum over basis tensors of v^(-deg); equals (v + v^-1)^len(word)."""
    acc: dict[int, int] = {}
    for b in labels(len(word)):
        d = -label_degree(b)
        acc[d] = acc.get(d, 0) + 1
    return LaurentPoly(acc)


def element_perm(sys: CoxeterSystem, w: int) -> tuple[int, ...]:
    """Permutation pi of {0..n-1} with w . x_j = x_{pi(j)}, for W of type A_{n-1}."""
    n = sys.rank + 1
    for s in range(sys.rank):
        for t in range(sys.rank):
            want = 1 if s == t else (3 if abs(s - t) == 1 else 2)
            if sys.matrix.m[s][t] != want:
                raise ValueError(f"{sys.name} is not of type A in the standard labelling")
    perm = list(range(n))
    for s in reversed(sys.words[w]):
        perm = [s + 1 if p == s else s if p == s + 1 else p for p in perm]
    return tuple(perm)


def act_element(sys: CoxeterSystem, w: int, p: MultiPoly) -> MultiPoly:
    return act(element_perm(sys, w), p)


@dataclass(frozen=True, eq=False)
class BimoduleMap:
    """Degree-homogeneous map BS(domain) -> BS(codomain), by images of basis tensors."""

    domain: Word
    codomain: Word
    n: int
    degree: int
    images: dict

    def __post_init__(self):
        object.__setattr__(self, "domain", tuple(self.domain))
        object.__setattr__(self, "codomain", tuple(self.codomain))
        full = {}
        for b in labels(len(self.domain)):
            img = self.images.get(b, TensorElt.zero(self.codomain, self.n))
            if img.word != self.codomain or img.n != self.n:
                raise ShapeMismatch(f"image of {b} does not lie in BS{self.codomain}")
            full[b] = img
        object.__setattr__(self, "images", full)

    def __call__(self, t: TensorElt) -> TensorElt:
        if t.word != self.domain or t.n != self.n:
            raise ShapeMismatch(f"map from BS{self.domain} applied to element of BS{t.word}")
        acc = TensorElt.zero(self.codomain, self.n)
        for b, f in t.coords.items():
            acc = acc + self.images[b].left_mul(f)
        return acc

    def entry(self, b: Label, c: Label) -> MultiPoly:
        return self.images[b].coords.get(c, MultiPoly(self.n))

    def __add__(self, other: BimoduleMap) -> BimoduleMap:
        self._same_shape(other)
        return BimoduleMap(
            self.domain, self.codomain, self.n, self.degree,
            {b: self.images[b] + other.images[b] for b in self.images},
        )

    def __sub__(self, other: BimoduleMap) -> BimoduleMap:
        return self + other.scale(-1)

    def scale(self, c) -> BimoduleMap:
        return BimoduleMap(
            self.domain, self.codomain, self.n, self.degree,
            {b: img.left_mul(c) for b, img in self.images.items()},
        )

    def _same_shape(self, other: BimoduleMap):
        if (self.domain, self.codomain, self.n) != (other.domain, other.codomain, other.n):
            raise ShapeMismatch("maps have different source or target")

    def __eq__(self, other):
        if not isinstance(other, BimoduleMap):
            return NotImplemented
        return (
            (self.domain, self.codomain, self.n) == (other.domain, other.codomain, other.n)
            and self.images == other.images
        )

    __hash__ = None

    def is_zero(self) -> bool:
        return not any(self.images.values())

    def is_right_linear(self) -> bool:
        for b in self.images:
            for i in range(self.n):
                x = MultiPoly.var(i, self.n)
                if self(_basis_times(self.domain, self.n, b, x)) != self.images[b].right_mul(x):
                    return False
        return True

    def has_degree(self) -> bool:
        for b, img in self.images.items():
            if img and img.degrees() != {label_degree(b) + self.degree}:
                return False
        return True

    def __str__(self):
        lines = [f"BS{list(s + 1 for s in self.domain)} -> BS{list(s + 1 for s in self.codomain)}, degree {self.degree}"]
        for b, img in self.images.items():
            lines.append(f"  {''.join(map(str, b)) or '-'} |-> {img}")
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {
            "domain": [s + 1 for s in self.domain],
            "codomain": [s + 1 for s in self.codomain],
            "n": self.n,
            "degree": self.degree,
            "images": {"".join(map(str, b)): img.to_json()["coords"] for b, img in self.images.items()},
        }


def identity_map(word: Sequence[int], n: int) -> BimoduleMap:
    word = _check_word(word, n)
    return BimoduleMap(word, word, n, 0, {b: basis_tensor(word, n, b) for b in labels(len(word))})


def compose(f: BimoduleMap, g: BimoduleMap) -> BimoduleMap:
    """f o g."""
    if g.codomain != f.domain or g.n != f.n:
        raise ShapeMismatch(f"cannot compose: BS{g.codomain} is not BS{f.domain}")
    return BimoduleMap(g.domain, f.codomain, f.n, f.degree + g.degree, {b: f(img) for b, img in g.images.items()})


def mult_map(s: int = 0, n: int = 2) -> BimoduleMap:
    """B_s -> R, f (x) g -> fg (degree +1)."""
    one = _check_word((s,), n)
    images = {c: pure_tensor((), n, [_slot_poly(one, n, 0, c[0])]) for c in labels(1)}
    return BimoduleMap(one, (), n, 1, images)


def unit_map(s: int = 0, n: int = 2) -> BimoduleMap:
    """R -> B_s, 1 -> alpha (x) 1 + 1 (x) alpha (degree +1)."""
    one = _check_word((s,), n)
    alpha = root(s, n)
    image = pure_tensor(one, n, [alpha, 1]) + pure_tensor(one, n, [1, alpha])
    return BimoduleMap((), one, n, 1, {(): image})


def split_BsBs(n: int = 2, s: int = 0) -> tuple[BimoduleMap, BimoduleMap, dict]:
    """Orthogonal idempotents e1 + e2 = id on B_s B_s with images B_s(-1), B_s(1).

    pa: f(x)g(x)h -> f d_s(g) (x) h        (degree -1)
    ia: f(x)h -> (f(x)a(x)h - fa(x)1(x)h)/2 (degree +1)
    pb: f(x)g(x)h -> fg (x) h              (degree +1)
    ib: f(x)h -> f(x)1(x)h                 (degree -1)
    e1 = ia o pa and e2 = ib o pb; every identity is checked, not assumed.
    """
    ss = _check_word((s, s), n)
    one = (s,)
    alpha = root(s, n)
    half = Fraction(1, 2)

    def bs_bs(slots):
        return pure_tensor(ss, n, slots)

    def bs(slots):
        return pure_tensor(one, n, slots)

    pa, pb = {}, {}
    for b in labels(2):
        mid = _slot_poly(ss, n, 0, b[0])
        right = _slot_poly(ss, n, 1, b[1])
        pa[b] = bs([demazure(s, mid), right])
        pb[b] = bs([mid, right])
    ia, ib = {}, {}
    for c in labels(1):
        right = _slot_poly(one, n, 0, c[0])
        ia[c] = (bs_bs([1, alpha, right]) - bs_bs([alpha, 1, right])).left_mul(half)
        ib[c] = bs_bs([1, 1, right])
    maps = {
        "pa": BimoduleMap(ss, one, n, -1, pa),
        "ia": BimoduleMap(one, ss, n, 1, ia),
        "pb": BimoduleMap(ss, one, n, 1, pb),
        "ib": BimoduleMap(one, ss, n, -1, ib),
    }
    e1 = compose(maps["ia"], maps["pa"])
    e2 = compose(maps["ib"], maps["pb"])
    ident = identity_map(ss, n)
    id_one = identity_map(one, n)
    checks = {
        "bimodule_maps": all(f.is_right_linear() and f.has_degree() for f in maps.values()),
        "e1_idempotent": compose(e1, e1) == e1,
        "e2_idempotent": compose(e2, e2) == e2,
        "e1e2_zero": compose(e1, e2).is_zero(),
        "e2e1_zero": compose(e2, e1).is_zero(),
        "complete": e1 + e2 == ident,
        "pa_ia_identity": compose(maps["pa"], maps["ia"]) == id_one,
        "pb_ib_identity": compose(maps["pb"], maps["ib"]) == id_one,
    }
    if not all(checks.values()):
        failed = [k for k, ok in checks.items() if not ok]
        raise SplitFailed(f"B_s B_s splitting identities failed: {failed}")
    # image of e1 is ia(B_s), shifted by deg ia = +1, i.e. B_s(-1); image of e2 is B_s(1)
    rank_bs = graded_left_rank(one)
    rank_e1 = rank_bs * LaurentPoly.monomial(-maps["ia"].degree)
    rank_e2 = rank_bs * LaurentPoly.monomial(-maps["ib"].degree)
    report = {
        "checks": checks,
        "e1_image": "B_s(-1)",
        "e2_image": "B_s(1)",
        "e1_image_rank": rank_e1,
        "e2_image_rank": rank_e2,
        "ranks_sum_to_BsBs": rank_e1 + rank_e2 == graded_left_rank(ss),
        "maps": maps,
    }
    return e1, e2, report


def _to_fraction(x) -> Fraction:
    return Fraction(int(x.numerator), int(x.denominator))


def _rank(vectors: list[dict], keys: Sequence) -> int:
    if not vectors:
        return 0
    index = {k: i for i, k in enumerate(keys)}
    rows = [[QQ(0)] * len(keys) for _ in vectors]
    for r, vec in enumerate(vectors):
        for k, c in vec.items():
            rows[r][index[k]] = QQ(c.numerator, c.denominator) if isinstance(c, Fraction) else QQ(c)
    return DomainMatrix(rows, (len(vectors), len(keys)), QQ).rank()


def _unknowns(dom: Word, cod: Word, n: int, k: int) -> list[tuple[Label, Label, tuple[int, ...]]]:
    out = []
    for b in labels(len(dom)):
        for c in labels(len(cod)):
            d = label_degree(b) + k - label_degree(c)
            if d >= 0 and d % 2 == 0:
                out.extend((b, c, e) for e in monomials(n, d // 2))
    return out


def _map_from_vector(dom: Word, cod: Word, n: int, k: int, unknowns, vec) -> BimoduleMap:
    coords: dict[Label, dict[Label, dict]] = {}
    for (b, c, e), val in zip(unknowns, vec):
        if val:
            coords.setdefault(b, {}).setdefault(c, {})[e] = val
    images = {
        b: TensorElt(cod, n, {c: MultiPoly(n, terms) for c, terms in per.items()})
        for b, per in coords.items()
    }
    return BimoduleMap(dom, cod, n, k, images)


def _vector_of_map(f: BimoduleMap) -> dict:
    vec = {}
    for b, img in f.images.items():
        for c, poly in img.coords.items():
            for e, val in poly.terms.items():
                vec[(b, c, e)] = Fraction(val)
    return vec


def _solve_degree(dom: Word, cod: Word, n: int, k: int):
    """Q-basis of degree-k bimodule maps BS(dom) -> BS(cod)."""
    unknowns = _unknowns(dom, cod, n, k)
    if not unknowns:
        return unknowns, []
    xs = [MultiPoly.var(i, n) for i in range(n)]
    columns = []
    for b0, c0, e in unknowns:
        mono = MultiPoly.monomial(e)
        col: dict = {}
        # contribution to phi((1 (x) c_b) x_i) through the b0 coefficient
        for b in labels(len(dom)):
            for i, x in enumerate(xs):
                g = _basis_times(dom, n, b, x).coords.get(b0)
                if g:
                    for e2, val in (g * mono).terms.items():
                        key = (b, i, c0, e2)
                        col[key] = col.get(key, 0) + val
        # minus phi(1 (x) c_b0) x_i
        for i, x in enumerate(xs):
            for c, poly in _basis_times(cod, n, c0, x).left_mul(mono).coords.items():
                for e2, val in poly.terms.items():
                    key = (b0, i, c, e2)
                    col[key] = col.get(key, 0) - val
        columns.append({key: val for key, val in col.items() if val})
    rows = sorted({key for col in columns for key in col})
    index = {key: r for r, key in enumerate(rows)}
    if not rows:
        basis = [[Fraction(int(i == j)) for j in range(len(unknowns))] for i in range(len(unknowns))]
        return unknowns, basis
    mat = [[QQ(0)] * len(unknowns) for _ in rows]
    for j, col in enumerate(columns):
        for key, val in col.items():
            val = Fraction(val)
            mat[index[key]][j] = QQ(val.numerator, val.denominator)
    null = DomainMatrix(mat, (len(rows), len(unknowns)), QQ).nullspace().to_list()
    basis = [[_to_fraction(x) for x in row] for row in null]
    return unknowns, basis


def hom_basis(
    domain: Sequence[int],
    codomain: Sequence[int],
    n: int | None = None,
    max_degree: int | None = None,
) -> tuple[list[tuple[BimoduleMap, int]], dict]:
    """Free left R-module generators of Hom(BS(domain), BS(codomain)).

    Degree k runs from the lowest possible value up to ``max_degree``
    (default: top basis degree max(len(domain), len(codomain)) plus 4).  In
    each degree the full solution space is computed and extended greedily
    past the R-span of the generators already found.
    """
    n = n or default_vars(tuple(domain) + tuple(codomain))
    dom, cod = _check_word(domain, n), _check_word(codomain, n)
    lo = -(len(dom) + len(cod))
    hi = max(len(dom), len(cod)) + 4 if max_degree is None else max_degree
    gens: list[tuple[BimoduleMap, int]] = []
    dims = {}
    free = True
    for k in range(lo, hi + 1):
        unknowns, sol = _solve_degree(dom, cod, n, k)
        if not unknowns:
            continue
        keys = unknowns
        span = []
        expected = 0
        for g, kg in gens:
            if (k - kg) % 2 or k < kg:
                continue
            for e in monomials(n, (k - kg) // 2):
                mono = MultiPoly.monomial(e)
                span.append(_vector_of_map(_left_scale(g, mono)))
                expected += 1
        rank = _rank(span, keys)
        for vec in sol:
            cand = {u: v for u, v in zip(keys, vec) if v}
            if _rank(span + [cand], keys) > rank:
                span.append(cand)
                rank += 1
                gens.append((_map_from_vector(dom, cod, n, k, keys, vec), k))
                expected += 1
        dims[k] = len(sol)
        if rank != len(sol) or expected != len(sol):
            free = False
    info = {"degree_range": (lo, hi), "dimensions": dims, "free": free}
    return gens, info


def _left_scale(f: BimoduleMap, mono: MultiPoly) -> BimoduleMap:
    return BimoduleMap(
        f.domain, f.codomain, f.n, f.degree + mono.degree(),
        {b: img.left_mul(mono) for b, img in f.images.items()},
    )


def hom_basis_Bs_Bs(n: int = 2, s: int = 0, max_degree: int | None = None) -> list[tuple[BimoduleMap, int]]:
    gens, _ = hom_basis((s,), (s,), n, max_degree)
    return gens


def hom_rank_lab(domain: Sequence[int], codomain: Sequence[int], n: int | None = None,
                 max_degree: int | None = None) -> LaurentPoly:
    """sum of v^deg over the free generators found by :func:`hom_basis`."""
    gens, _ = hom_basis(domain, codomain, n, max_degree)
    acc: dict[int, int] = {}
    for _, k in gens:
        acc[k] = acc.get(k, 0) + 1
    return LaurentPoly(acc)


def generation_profile(word: Sequence[int], n: int | None = None) -> dict[int, tuple[int, int]]:
    """degree -> (dim of sub-bimodule generated by 1(x)...(x)1, dim of BS(word))."""
    n = n or default_vars(word)
    word = _check_word(word, n)
    m = len(word)
    one = MultiPoly.const(1, n)
    out = {}
    for d in range(-m, m + 1, 2):
        keys = []
        for b in labels(m):
            t = d - label_degree(b)
            if t >= 0 and t % 2 == 0:
                keys.extend((b, e) for e in monomials(n, t // 2))
        total = (d + m) // 2
        vectors = []
        for tg in range(total + 1):
            for eg in monomials(n, tg):
                right = pure_tensor(word, n, [one] * m + [MultiPoly.monomial(eg)])
                for ef in monomials(n, total - tg):
                    elt = right.left_mul(MultiPoly.monomial(ef))
                    vec = {}
                    for b, f in elt.coords.items():
                        for e, c in f.terms.items():
                            vec[(b, e)] = Fraction(c)
                    if vec:
                        vectors.append(vec)
        out[d] = (_rank(vectors, keys), len(keys))
    return out


def cyclic_generation_check(word: Sequence[int], n: int | None = None) -> bool:
    """Is BS(word) generated as a bimodule by 1 (x) 1 (x) ... (x) 1?

    Checked degree by degree up to the top basis degree; beyond that every
    basis tensor is already known to lie in the span or not.
    """
    return all(sub == full for sub, full in generation_profile(word, n).values())


def module_coords(t: TensorElt) -> dict[Label, Fraction]:
    """Coordinates of Q (x)_R t, i.e. the constant terms of the left coefficients."""
    return {b: Fraction(f.constant_term()) for b, f in t.coords.items() if f.constant_term()}
