"""Selects the KL table kernel: compiled ``_klcore`` if importable, else pure Python.

Set ``SOERGELKIT_PURE_PYTHON=1`` to force the fallback.
"""

from __future__ import annotations

import logging
import os

from . import _klcore_py

log = logging.getLogger(__name__)

try:
    if os.environ.get("SOERGELKIT_PURE_PYTHON"):
        raise ImportError("pure Python kernel requested")
    from . import _klcore  # type: ignore[attr-defined]
except ImportError:
    _klcore = None

BACKEND = "compiled" if _klcore is not None else "python"

__all__ = ["BACKEND", "available_backends", "kl_rows"]


def available_backends() -> list[str]:
    return ["compiled", "python"] if _klcore is not None else ["python"]


def kl_rows(sys, threads: int = 1, backend: str | None = None) -> list[dict[int, list[int]]]:
    """``rows[x][y]`` = dense coefficient list of h_{y,x}, for y <= x only."""
    backend = backend or BACKEND
    last = [w[-1] if w else 0 for w in sys.words]
    strata = sys.strata()
    width = sys.max_length + 1
    if backend == "compiled":
        if _klcore is None:
            raise RuntimeError("compiled kernel is not available")
        try:
            cube = _klcore.kl_cube(sys.right_mult_array(), sys.lengths, last, strata, width, threads)
        except OverflowError:
            log.warning("int64 overflow in compiled kernel; recomputing with Python integers")
            return _klcore_py.kl_rows(sys.right_mult, sys.lengths, last, strata, width, threads)
        support = cube.any(axis=2)
        rows = []
        for x in range(sys.size):
            ys = support[x].nonzero()[0]
            rows.append(dict(zip(ys.tolist(), cube[x, ys].tolist())))
        return rows
    if backend == "python":
        return _klcore_py.kl_rows(sys.right_mult, sys.lengths, last, strata, width, threads)
    raise ValueError(f"unknown backend {backend!r}")
