import json

import numpy as np
import pytest

from soergelkit.coxeter import (
    CoxeterMatrix,
    GroupTooLarge,
    InvalidMatrix,
    build_system,
    bruhat_leq,
    bruhat_matrix,
    coxeter_matrix,
    element_of_word,
    format_word,
    length_gen_poly,
    longest_element,
    mult,
    named_system,
    parse_word,
)
from oracles import poincare_from_degrees, subword_lower_set

# degrees of the basic invariants; |W| is their product and the Poincare
# polynomial is prod [d_i]_q
DEGREES = {
    "A1": [2],
    "A2": [2, 3],
    "A3": [2, 3, 4],
    "A4": [2, 3, 4, 5],
    "B2": [2, 4],
    "B3": [2, 4, 6],
    "D4": [2, 4, 4, 6],
    "G2": [2, 6],
    "H3": [2, 6, 10],
    "F4": [2, 6, 8, 12],
    "I2(5)": [2, 5],
    "I2(8)": [2, 8],
    "A1xA1": [2, 2],
}


@pytest.mark.parametrize("name", sorted(DEGREES))
def test_poincare_polynomial(name):
    W = named_system(name)
    expected = poincare_from_degrees(DEGREES[name])
    assert W.size == sum(expected)
    poly = length_gen_poly(W)
    assert [poly.coeff(k) for k in range(len(expected))] == expected


@pytest.mark.parametrize("name", ["A3", "B3", "H3", "D4", "I2(7)"])
def test_longest_element(name):
    W = named_system(name)
    w0 = longest_element(W)
    reflections = sum(d - 1 for d in DEGREES.get(name, [2, 7]))
    assert W.lengths[w0] == reflections
    assert all(W.is_right_descent(w0, s) and W.is_left_descent(w0, s) for s in range(W.rank))
    # l(w w0) = l(w0) - l(w)
    assert all(W.lengths[mult(W, w, w0)] == W.lengths[w0] - W.lengths[w] for w in range(W.size))


@pytest.mark.parametrize("name", ["A3", "B3", "H3"])
def test_normal_words_are_shortlex_reduced(name):
    W = named_system(name)
    for w, word in enumerate(W.words):
        assert len(word) == W.lengths[w]
        assert element_of_word(W, word) == w
    keys = [(len(word), word) for word in W.words]
    assert keys == sorted(keys)


@pytest.mark.parametrize("name", ["A3", "B3", "H3"])
def test_group_axioms(name):
    W = named_system(name)
    rng = np.random.default_rng(7)
    for _ in range(200):
        a, b, c = (int(i) for i in rng.integers(0, W.size, 3))
        assert mult(W, mult(W, a, b), c) == mult(W, a, mult(W, b, c))
        assert mult(W, a, W.inverse(a)) == 0


@pytest.mark.parametrize("name", ["A3", "B3", "H3", "I2(6)"])
def test_bruhat_matches_subword_property(name):
    W = named_system(name)
    M = bruhat_matrix(W)
    for x in range(W.size):
        lower = subword_lower_set(W, x)
        assert {y for y in range(W.size) if M[y, x]} == lower


def test_bruhat_is_partial_order():
    W = named_system("B3")
    M = bruhat_matrix(W)
    assert M.diagonal().all()
    assert not (M & M.T & ~np.eye(W.size, dtype=bool)).any()
    # transitivity: M @ M has no pairs outside M
    assert not ((M.astype(int) @ M.astype(int) > 0) & ~M).any()
    assert bruhat_leq(W, 0, longest_element(W))


@pytest.mark.parametrize(
    "bad",
    [
        [[1, 2], [3, 1]],
        [[2, 3], [3, 1]],
        [[1, 1], [1, 1]],
        [[1, 3]],
        [[1, -1], [-1, 1]],
    ],
)
def test_invalid_matrices(bad):
    with pytest.raises(InvalidMatrix):
        CoxeterMatrix(bad)


def test_type_strings():
    assert coxeter_matrix("a3").m == coxeter_matrix("A3").m
    assert coxeter_matrix("C3").m == coxeter_matrix("B3").m
    assert coxeter_matrix("I2(5)").m == ((1, 5), (5, 1))
    with pytest.raises(ValueError):
        coxeter_matrix("Q7")


def test_group_too_large():
    with pytest.raises(GroupTooLarge):
        build_system(coxeter_matrix("A5"), max_elements=100)
    with pytest.raises(GroupTooLarge):
        build_system(CoxeterMatrix([[1, 0], [0, 1]]), max_elements=50)


def test_matrix_json_round_trip(tmp_path):
    cm = coxeter_matrix("H3")
    path = tmp_path / "h3.json"
    path.write_text(json.dumps(cm.to_json()))
    assert CoxeterMatrix.load(path).m == cm.m


def test_word_parsing():
    assert parse_word("2,1,3,2") == (1, 0, 2, 1)
    assert parse_word("e") == () == parse_word("")
    assert format_word(()) == "e"
    assert format_word((1, 0)) == "2,1"
    with pytest.raises(ValueError):
        parse_word("0,1")
    with pytest.raises(ValueError):
        parse_word("a,b")
