import pytest

from src.algebra import fqsym, qsym
from src.algebra.comb import ColoredPermutation
from src.algebra.errors import InputFormatError, LevelMismatchError
from src.algebra.fqsym import F, FQSymElem


def test_product_shuffles_the_shifted_right_factor():
    product = F(3, (2, 1), "02") * F(3, (1, 2), "10")
    expected = (F(3, (2, 1, 3, 4), "0210") + F(3, (2, 3, 1, 4), "0120") + F(3, (2, 3, 4, 1), "0102")
                + F(3, (3, 2, 1, 4), "1020") + F(3, (3, 2, 4, 1), "1002") + F(3, (3, 4, 2, 1), "1002"))
    assert product == expected


def test_coproduct_standardizes_both_halves():
    delta = F(3, (1, 4, 2, 3), "0021").coproduct()
    key = ColoredPermutation
    assert delta.terms == {
        (fqsym.UNIT, key((1, 4, 2, 3), (0, 0, 2, 1))): 1,
        (key((1,), (0,)), key((3, 1, 2), (0, 2, 1))): 1,
        (key((1, 2), (0, 0)), key((1, 2), (2, 1))): 1,
        (key((1, 3, 2), (0, 0, 2)), key((1,), (1,))): 1,
        (key((1, 4, 2, 3), (0, 0, 2, 1)), fqsym.UNIT): 1,
    }


def test_small_antipodes():
    assert F(2, (1,), "1").antipode() == -F(2, (1,), "1")
    assert F(1, (1, 2), "00").antipode() == F(1, (2, 1), "00")
    assert FQSymElem.one(2).antipode() == FQSymElem.one(2)


def test_antipode_axiom(random_fqsym):
    for size in (1, 2, 3):
        a = random_fqsym(level=2, size=size, terms=2)
        convolved = a.coproduct().map_factor(0, lambda key: FQSymElem.monomial(2, key).antipode()).contract()
        assert convolved == FQSymElem.one(2).scale(a.counit())


def test_counit():
    assert (F(2, (1,), "0") + FQSymElem.one(2).scale(5)).counit() == 5


def test_descent_class_is_a_fundamental_when_colors_respect_descents():
    assert fqsym.d_map(F(2, (1, 3, 2), "010")) == qsym.F(2, [(1, 1), (1, 0)])
    assert fqsym.descent_class((), (), 2) == {(): 1}


def test_descent_class_without_the_descent_condition():
    # the color descent at position 1 is not a descent of sigma
    image = fqsym.d_map(F(2, (1, 2), "10"))
    assert image == qsym.M(2, [(1, 1)]) + qsym.M(2, [(0, 1), (1, 0)])
    assert image != qsym.F(2, [(1, 1)])


def test_d_map_sends_the_embedded_complete_function_to_h():
    assert fqsym.d_map(fqsym.s_embed((1, 1), 2)) == qsym.complete_symmetric((1, 1), 2)
    assert fqsym.s_embed((0, 0), 2) == FQSymElem.one(2)


def test_d_map_is_a_hopf_morphism(random_fqsym):
    a = random_fqsym(level=2, size=2, terms=2)
    b = random_fqsym(level=2, size=1, terms=2)
    assert fqsym.d_map(a * b) == fqsym.d_map(a) * fqsym.d_map(b)
    assert fqsym.d_map(a.antipode()) == fqsym.d_map(a).antipode()


def test_key_validation():
    with pytest.raises(InputFormatError):
        F(2, (1, 1), "00")
    with pytest.raises(InputFormatError):
        F(2, (1, 2), "0")
    with pytest.raises(LevelMismatchError):
        F(2, (1,), "2")
    with pytest.raises(InputFormatError):
        FQSymElem(2, {"nope": 1})


def test_degrees_follow_the_color_word():
    a = F(3, (2, 1, 3), "021")
    assert a.degrees() == [(1, 1, 1)]
    assert a.pretty() == "F[[2,1,3],[0,2,1]]"
