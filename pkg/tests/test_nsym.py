from fractions import Fraction

import pytest

from src.algebra import nsym
from src.algebra.element import Tensor
from src.algebra.errors import InputFormatError, PreconditionError
from src.algebra.nsym import NSymBasis, NSymElem, S


def test_product_concatenates():
    assert S(2, [(1, 0)]) * S(2, [(0, 1), (1, 1)]) == S(2, [(1, 0), (0, 1), (1, 1)])


def test_coproduct_splits_every_column():
    delta = S(1, [(2,), (1,)]).coproduct()
    assert len(delta) == 6
    assert delta.terms[(((1,),), ((1,), (1,)))] == 1
    assert delta.terms[(((2,), (1,)), ())] == 1


def test_antipode():
    assert S(1, [(2,)]).antipode() == -S(1, [(2,)]) + S(1, [(1,), (1,)])
    assert S(1, [(1,)]).antipode() == -S(1, [(1,)])


def test_complete_of_zero_is_the_unit():
    assert nsym.complete((0, 0), 2) == NSymElem.one(2)
    assert nsym.complete((1, 2), 2) == S(2, [(1, 2)])


def test_power_sum_basis():
    assert nsym.phi(1, [(2,)]) == 2 * S(1, [(2,)]) - S(1, [(1,), (1,)])


def test_upsilon_basis():
    assert nsym.upsilon(1, [(2,)]) == S(1, [(2,)]) / 2 - S(1, [(1,), (1,)]) / 4
    assert nsym.upsilon(1, [(1,), (1,)]) == S(1, [(1,), (1,)]) / 4


def test_upsilon_is_multiplicative():
    assert nsym.upsilon(2, [(1, 0), (0, 1)]) == nsym.upsilon(2, [(1, 0)]) * nsym.upsilon(2, [(0, 1)])


def test_power_sums_are_primitive():
    p = nsym.phi_power((1, 1), 2)
    one = NSymElem.one(2)
    assert p.coproduct() == Tensor.pure(p, one) + Tensor.pure(one, p)


@pytest.mark.parametrize("basis", [NSymBasis.PHI, NSymBasis.UPSILON])
def test_coordinates_invert_from_coordinates(basis):
    coords = {((1, 0), (0, 1)): Fraction(3), ((1, 1),): Fraction(1, 2)}
    a = nsym.from_coordinates(2, basis, coords)
    assert nsym.coordinates(a, basis).terms == coords


def test_convert_phi_to_upsilon_and_back():
    a = NSymElem(1, {((1,), (2,)): 1, ((3,),): -2})
    there = nsym.convert(a, NSymBasis.PHI, NSymBasis.UPSILON)
    assert nsym.convert(there, NSymBasis.UPSILON, NSymBasis.PHI) == a


@pytest.mark.parametrize("level, index", [
    (1, ((2,),)),
    (1, ((1,), (1,), (1,))),
    (2, ((1, 0), (1, 1))),
])
def test_upsilon_from_phi_agrees_with_triangular_route(level, index):
    in_phi = nsym.upsilon_from_phi(index, level)
    assert nsym.from_coordinates(level, NSymBasis.PHI, in_phi.terms) == nsym.upsilon(level, index)


def test_antipode_in_phi_coordinates():
    a = NSymElem(1, {((1,), (2,)): 1})
    expected = NSymElem(1, {((2,), (1,)): 1})
    assert nsym.antipode(a, NSymBasis.PHI) == expected
    assert nsym.phi_from_s(nsym.s_from_phi(a).antipode()) == expected


def test_antipode_in_upsilon_coordinates_is_refused():
    with pytest.raises(PreconditionError):
        nsym.antipode(S(1, [(1,)]), NSymBasis.UPSILON)


def test_euler_element():
    assert nsym.euler_chi((2,), 1) == 2 * S(1, [(2,)]) - S(1, [(1,), (1,)])
    chi = nsym.euler_chi((1, 1), 2)
    assert chi.coefficient(((1, 1),)) == 2
    assert chi.coefficient(((1, 0), (0, 1))) == -1
    assert chi.coefficient(((0, 1), (1, 0))) == -1


def test_zero_degree_power_sums_are_refused():
    with pytest.raises(PreconditionError):
        nsym.phi_power((0,), 1)
    with pytest.raises(PreconditionError):
        nsym.upsilon_power((0, 0), 2)
    with pytest.raises(PreconditionError):
        nsym.euler_chi((0,), 1)


def test_degree_of_needs_a_homogeneous_element():
    assert nsym.degree_of(S(2, [(1, 0), (0, 2)])) == (1, 2)
    with pytest.raises(PreconditionError):
        nsym.degree_of(S(1, [(1,)]) + S(1, [(2,)]))


def test_basis_names():
    assert nsym.parse_nsym_basis("Φ") is NSymBasis.PHI
    assert nsym.parse_nsym_basis("upsilon") is NSymBasis.UPSILON
    with pytest.raises(InputFormatError):
        nsym.parse_nsym_basis("R")
