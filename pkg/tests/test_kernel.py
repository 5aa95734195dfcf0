import os
import subprocess
import sys

import pytest

from soergelkit import klkernel
from soergelkit.coxeter import build_system, coxeter_matrix
from soergelkit.hecke import build_kl_table

needs_compiled = pytest.mark.skipif(
    "compiled" not in klkernel.available_backends(), reason="compiled kernel not built"
)


@needs_compiled
@pytest.mark.parametrize("name", ["A3", "B3", "H3", "D4", "A4", "I2(9)"])
def test_backends_agree(name):
    W = build_system(coxeter_matrix(name))
    assert klkernel.kl_rows(W, 1, "compiled") == klkernel.kl_rows(W, 1, "python")


@pytest.mark.parametrize("backend", klkernel.available_backends())
def test_thread_count_does_not_change_result(backend):
    W = build_system(coxeter_matrix("B4"))
    assert klkernel.kl_rows(W, 1, backend) == klkernel.kl_rows(W, 8, backend)


def test_unknown_backend():
    W = build_system(coxeter_matrix("A1"))
    with pytest.raises(ValueError):
        klkernel.kl_rows(W, 1, "gpu")


def test_tables_are_memoized_per_backend():
    W = build_system(coxeter_matrix("A2"))
    assert build_kl_table(W) is build_kl_table(W)
    assert build_kl_table(W, backend="python").backend == "python"


def test_pure_python_selected_by_environment():
    env = dict(os.environ, SOERGELKIT_PURE_PYTHON="1")
    out = subprocess.run(
        [sys.executable, "-c", "from soergelkit import klkernel; print(klkernel.BACKEND)"],
        env=env, capture_output=True, text=True, check=True,
    )
    assert out.stdout.strip() == "python"
