"""Pure-Python KL table kernel (fallback for the compiled ``_klcore``).

Both kernels compute every b_x by

    b_x = b_w b_s - sum_{z < w, zs < z} mu(z, w) b_z,    x = ws > w,

with s the last letter of the normal word of x.  Polynomials are dense
coefficient lists indexed by exponent 0..width-1; rows only hold y <= x.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from typing import Sequence

Row = dict[int, list[int]]


def _row(x: int, rows: list[Row | None], right_mult, lengths, last_letter, width: int) -> Row:
    s = last_letter[x]
    w = right_mult[x][s]
    acc: Row = {}
    for y, h in rows[w].items():
        ys = right_mult[y][s]
        tgt = acc.get(ys)
        if tgt is None:
            tgt = acc[ys] = [0] * width
        for e, c in enumerate(h):
            if c:
                tgt[e] += c
        tgt = acc.get(y)
        if tgt is None:
            tgt = acc[y] = [0] * width
        if lengths[ys] > lengths[y]:
            for e in range(width - 1):
                if h[e]:
                    tgt[e + 1] += h[e]
        else:
            for e in range(1, width):
                if h[e]:
                    tgt[e - 1] += h[e]
    for z, hz in rows[w].items():
        mu = hz[1] if width > 1 else 0
        if mu and z != w and lengths[right_mult[z][s]] < lengths[z]:
            for y, h in rows[z].items():
                tgt = acc.get(y)
                if tgt is None:
                    tgt = acc[y] = [0] * width
                for e, c in enumerate(h):
                    if c:
                        tgt[e] -= mu * c
    return {y: h for y, h in sorted(acc.items()) if any(h)}


def kl_rows(
    right_mult: Sequence[Sequence[int]],
    lengths: Sequence[int],
    last_letter: Sequence[int],
    strata: Sequence[range],
    width: int,
    threads: int = 1,
) -> list[Row]:
    """Return ``rows[x][y]`` = coefficient list of h_{y,x} (exponent = index)."""
    n = len(lengths)
    rows: list[Row | None] = [None] * n
    rows[0] = {0: [1] + [0] * (width - 1)}
    pool = ThreadPoolExecutor(threads) if threads > 1 else None
    try:
        for stratum in strata[1:]:
            if pool is None:
                for x in stratum:
                    rows[x] = _row(x, rows, right_mult, lengths, last_letter, width)
            else:
                done = pool.map(
                    lambda x: _row(x, rows, right_mult, lengths, last_letter, width), stratum
                )
                for x, r in zip(stratum, done):
                    rows[x] = r
    finally:
        if pool is not None:
            pool.shutdown()
    return rows
