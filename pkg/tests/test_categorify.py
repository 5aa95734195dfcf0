import pytest
from hypothesis import given, settings, strategies as st

from soergelkit.categorify import (
    InvalidTarget,
    NotEffective,
    SBimClass,
    bs_class,
    chi,
    hom_graded_rank,
    phi,
    polo_search,
    positivity_scan,
)
from soergelkit.coxeter import named_system
from soergelkit.hecke import b_s, build_kl_table, delta, hk_mul
from soergelkit.laurent import ONE, V, LaurentPoly, lp_eval_one


def test_bs_squared_splits():
    W = named_system("A2")
    s = W.element((0,))
    assert bs_class(W, (0, 0)) == SBimClass(W, {(s, 1): 1, (s, -1): 1})


def test_bs_sts_in_a2():
    W = named_system("A2")
    sts, s = W.element((0, 1, 0)), W.element((0,))
    assert bs_class(W, (0, 1, 0)) == SBimClass(W, {(sts, 0): 1, (s, 0): 1})
    assert [d["w"] for d in bs_class(W, (0, 1, 0)).summands()] == ["1,2,1", "1"]


def test_first_singular_element_of_a3():
    # b_{s2 s1 s3} b_{s2} has no mu-correction, so BS(2,1,3,2) stays indecomposable
    # even though h_{s2, x} = v + v^3 has two terms
    W = named_system("A3")
    x = W.element((1, 0, 2, 1))
    assert bs_class(W, (1, 0, 2, 1)) == SBimClass(W, {(x, 0): 1})
    s121 = W.element((0, 1, 0))
    assert bs_class(W, (0, 1, 0)) == SBimClass(W, {(s121, 0): 1, (W.element((0,)), 0): 1})


def test_empty_word_is_identity():
    W = named_system("A2")
    assert bs_class(W, ()) == SBimClass(W, {(0, 0): 1})


@pytest.mark.parametrize("name", ["A2", "B2", "A3"])
def test_chi_of_bs_class_is_hecke_product(name):
    W = named_system(name)
    words = [(0,), (0, 1), (1, 0, 1, 0), (0, 0, 1), (1, 0, 1, 1, 0, 1)]
    for word in words:
        prod = delta(W, 0)
        for s in word:
            prod = hk_mul(prod, b_s(W, s))
        cls = bs_class(W, word)
        assert chi(cls) == prod
        total = sum(lp_eval_one(c) for _, c in prod.terms.items())
        assert total == 2 ** len(word)


def test_chi_phi_inverse_on_kl_basis():
    W = named_system("A3")
    table = build_kl_table(W)
    for x in range(W.size):
        cls = phi(table.basis(x))
        assert cls == SBimClass(W, {(x, 0): 1})
        assert chi(cls) == table.basis(x)


@settings(max_examples=50, deadline=None)
@given(st.dictionaries(st.tuples(st.integers(0, 5), st.integers(-3, 3)), st.integers(0, 4), max_size=5))
def test_phi_chi_identity_on_random_classes(combo):
    W = named_system("A2")
    cls = SBimClass(W, combo)
    assert phi(chi(cls)) == cls


def test_phi_rejects_negative():
    W = named_system("A2")
    with pytest.raises(NotEffective):
        phi(delta(W, 1))
    with pytest.raises(NotEffective):
        SBimClass(W, {(0, 0): -1})


def test_shift_and_sum():
    W = named_system("A1")
    a = SBimClass.indecomposable(W, 1)
    assert chi(a.shift(2)) == chi(a).scale(V ** 2)
    assert chi(a + a.shift(1)) == chi(a).scale(ONE + V)


def test_hom_rank():
    W = named_system("A2")
    bs = SBimClass.indecomposable(W, W.element((0,)))
    assert hom_graded_rank(bs, bs) == ONE + V ** 2
    for x in range(W.size):
        for y in range(W.size):
            a, b = SBimClass.indecomposable(W, x), SBimClass.indecomposable(W, y)
            assert hom_graded_rank(a, b) == hom_graded_rank(b, a)
    # Hom(R, B_s) has rank v
    assert hom_graded_rank(SBimClass.indecomposable(W, 0), bs) == V


@pytest.mark.parametrize("name", ["A1", "A2", "A3", "B2", "I2(5)"])
def test_positivity(name):
    report = positivity_scan(named_system(name))
    assert report["ok"]
    assert report["kl_violations"] == [] and report["structure_violations"] == []


def test_polo_examples():
    one = polo_search(ONE, 2)
    assert (one.m, one.N, one.y_word, one.x_word) == (0, 2, (), ())
    hit = polo_search(LaurentPoly.parse("1 + q"), 4)
    assert hit.N == 4 and hit.m == 1
    assert hit.poly == V + V ** 3
    assert polo_search(LaurentPoly.parse("1 + v^100"), 4) is None


@pytest.mark.parametrize("bad", ["1 + 2*q", "1 - q", "v + 1", "0", "q^-1 + 1"])
def test_polo_rejects_bad_targets(bad):
    with pytest.raises(InvalidTarget):
        polo_search(LaurentPoly.parse(bad), 3)


def test_json_layout():
    W = named_system("A2")
    data = bs_class(W, (0, 0)).to_json((0, 0))
    assert data == {
        "word": [1, 1],
        "summands": [{"w": "1", "shift": 1, "mult": 1}, {"w": "1", "shift": -1, "mult": 1}],
    }
    assert str(bs_class(W, (0, 0))) == "B[1](1) + B[1](-1)"
