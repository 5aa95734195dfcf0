import pytest

from soergelkit.coxeter import CoxeterMatrix, coxeter_matrix, named_system
from soergelkit.geomrep import (
    InfiniteBond,
    build_form,
    determinant,
    element_matrix,
    faithfulness_check,
    format_matrix,
    identity,
    mat_mul,
    matrix_closure_size,
    preserves_form,
    reflection_matrices,
    verify_relations,
)


@pytest.mark.parametrize("name", ["A3", "B3", "H3", "I2(5)", "G2", "D4"])
def test_relations_and_form(name):
    W = named_system(name)
    form = build_form(W.matrix)
    refl = reflection_matrices(form)
    one = identity(form[0][0].field, W.rank)
    assert verify_relations(W) == []
    for r in refl:
        assert mat_mul(r, r) == one
        assert preserves_form(r, form)
        assert determinant(r) == -one[0][0]


def test_negative_control_detects_wrong_orders():
    W = named_system("A3")
    wrong = [list(row) for row in W.matrix.m]
    wrong[0][1] = wrong[1][0] = 2
    assert verify_relations(W, orders=wrong) == [{"s": 0, "t": 1, "m": 2}]


@pytest.mark.parametrize("name", ["A3", "H3", "I2(7)"])
def test_faithful(name):
    W = named_system(name)
    assert faithfulness_check(W)
    assert matrix_closure_size(W.matrix) == W.size


def test_element_matrix_is_homomorphism():
    W = named_system("B3")
    refl = reflection_matrices(build_form(W.matrix))
    for a, b in [(3, 17), (40, 5), (12, 12)]:
        ab = W.element(W.words[a] + W.words[b])
        assert element_matrix(W.words[ab], refl) == mat_mul(
            element_matrix(W.words[a], refl), element_matrix(W.words[b], refl)
        )


def test_infinite_bond():
    cm = CoxeterMatrix([[1, 0], [0, 1]])
    with pytest.raises(InfiniteBond):
        build_form(cm)
    form = build_form(cm, allow_infinite=True)
    assert float(form[0][1]) == -1.0


def test_display_has_exact_and_float_parts():
    text = format_matrix(build_form(coxeter_matrix("I2(5)")))
    assert "cos" in text and "-0.809" in text
