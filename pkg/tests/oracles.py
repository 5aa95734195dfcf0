"""Reference computations that share no code with the package.

Symmetric groups are handled as permutation tuples: Bruhat order by the
tableau criterion and KL polynomials by the classical R-polynomial recursion
in q, converted at the end to h_{y,x}(v) = v^(l(x)-l(y)) P_{y,x}(v^-2).
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations


def perm_of_word(word, n):
    """Product s_{i1} ... s_{ik} as a permutation in one-line notation (0-based)."""
    p = list(range(n))
    for i in word:
        # right multiplication by s_i swaps positions i and i+1
        p[i], p[i + 1] = p[i + 1], p[i]
    return tuple(p)


def compose(p, q):
    """(p q)(j) = p(q(j))."""
    return tuple(p[j] for j in q)


def inversions(p):
    n = len(p)
    return sum(1 for i in range(n) for j in range(i + 1, n) if p[i] > p[j])


def bruhat_leq(y, w):
    n = len(y)
    for i in range(1, n + 1):
        ys = sorted(y[:i], reverse=True)
        ws = sorted(w[:i], reverse=True)
        if any(a > b for a, b in zip(ys, ws)):
            return False
    return True


def _right_s(p, i):
    p = list(p)
    p[i], p[i + 1] = p[i + 1], p[i]
    return tuple(p)


def _padd(a, b, k=1):
    out = dict(a)
    for e, c in b.items():
        out[e] = out.get(e, 0) + k * c
    return {e: c for e, c in out.items() if c}


def _pmul(a, b):
    out = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
    return {e: c for e, c in out.items() if c}


class SymmetricKL:
    """Classical KL polynomials P_{y,w}(q) for S_n."""

    def __init__(self, n):
        self.n = n
        self.elements = sorted(permutations(range(n)), key=lambda p: (inversions(p), p))
        self.length = {p: inversions(p) for p in self.elements}
        self.R = lru_cache(maxsize=None)(self._R)
        self._P = {}

    def _right_descent(self, w):
        for i in range(self.n - 1):
            if w[i] > w[i + 1]:
                return i
        return None

    def _R(self, y, w):
        if not bruhat_leq(y, w):
            return {}
        if y == w:
            return {0: 1}
        i = self._right_descent(w)
        ws, ys = _right_s(w, i), _right_s(y, i)
        if self.length[ys] < self.length[y]:
            return self.R(ys, ws)
        # (q - 1) R_{y,ws} + q R_{ys,ws}
        return _padd(_pmul({1: 1, 0: -1}, self.R(y, ws)), _pmul({1: 1}, self.R(ys, ws)))

    def P(self, y, w):
        key = (y, w)
        if key in self._P:
            return self._P[key]
        if not bruhat_leq(y, w):
            out = {}
        elif y == w:
            out = {0: 1}
        else:
            rhs = {}
            for z in self.elements:
                if z != y and bruhat_leq(y, z) and bruhat_leq(z, w):
                    rhs = _padd(rhs, _pmul(self.R(y, z), self.P(z, w)))
            d = self.length[w] - self.length[y]
            out = {e: -c for e, c in rhs.items() if 2 * e < d}
        self._P[key] = out
        return out

    def h(self, y, w):
        """As a dict exponent -> coefficient in v."""
        d = self.length[w] - self.length[y]
        return {d - 2 * e: c for e, c in self.P(y, w).items()}


def subword_lower_set(system, x):
    """{u : u is a subword product of the normal word of x} (subword property)."""
    reached = {0}
    for s in system.words[x]:
        reached |= {system.right_mult[u][s] for u in reached}
    return reached


def poincare_from_degrees(degrees):
    """prod_i (1 + q + ... + q^(d_i - 1)) as a coefficient list."""
    out = [1]
    for d in degrees:
        new = [0] * (len(out) + d - 1)
        for i, c in enumerate(out):
            for j in range(d):
                new[i + j] += c
        out = new
    return out
