from fractions import Fraction

import pytest

from src.algebra import comb, qsym, subalg, theta
from src.algebra.comb import INF
from src.algebra.errors import PreconditionError
from src.algebra.functionals import NuK
from src.algebra.qsym import Basis, M, QSymElem
from src.algebra.theta import PeakPair


def _compositions(level, max_weight):
    return [I for n in comb.lpartites_up_to_weight(max_weight, level) for I in comb.compositions_of(n)]


def test_peak_function_without_peaks():
    expected = (2 * M(2, [(2, 1)]) + 4 * M(2, [(1, 1), (1, 0)]) + 4 * M(2, [(1, 0), (1, 1)])
                + 8 * M(2, [(1, 0), (0, 1), (1, 0)]))
    found = theta.peak_function(PeakPair.of((), "010"), 2)
    assert found == expected
    assert qsym.coordinates(found, Basis.F) == {
        ((2, 1),): 2,
        ((2, 0), (0, 1)): -2,
        ((1, 0), (1, 1)): 2,
        ((1, 1), (1, 0)): 4,
        ((1, 0), (1, 0), (0, 1)): -2,
        ((1, 0), (0, 1), (1, 0)): 4,
    }


def test_peak_functions_of_one_letter():
    assert theta.peak_function(PeakPair.of((), "1"), 2) == 2 * M(2, [(0, 1)])


def test_peak_function_relation():
    def f(S, u):
        return theta.peak_function(PeakPair.of(S, u), 2)

    assert f({2}, "010") == f((), "010") - f((), "001") + f({2}, "001")


def test_peak_pair_validation():
    with pytest.raises(PreconditionError):
        PeakPair.of({1}, "000")
    with pytest.raises(PreconditionError):
        PeakPair.of({2, 3}, "0000")
    assert PeakPair.of([2], [0, 1, 1]) == PeakPair(frozenset({2}), (0, 1, 1))


@pytest.mark.parametrize("n, level, count", [(3, 1, 2), (1, 2, 2), (2, 2, 4), (3, 2, 12)])
def test_admissible_pairs_count_odd_compositions(n, level, count):
    assert len(theta.admissible_pairs(n, level)) == count
    odd = [I for m in comb.lpartites_of_weight(n, level) for I in comb.compositions_of(m)
           if comb.is_odd_composition(I)]
    assert len(odd) == count


def test_eta_as_peak_functions():
    assert theta.eta_theta_convert("eta-to-theta", ((3,),), 1) == qsym.eta(1, [(3,)])
    assert theta.eta_in_theta(((3,),), 1) == {
        PeakPair(frozenset(), (0, 0, 0)): 1,
        PeakPair(frozenset({2}), (0, 0, 0)): -1,
    }


@pytest.mark.parametrize("n", [1, 2, 3])
def test_peak_functions_as_eta(n):
    for p in theta.admissible_pairs(n, 2):
        assert theta.eta_theta_convert("theta-to-eta", p, 2) == theta.peak_function(p, 2)
        assert theta.theta_basis_change(p, 2) == {p: Fraction(1)}


def test_dictionary_preconditions():
    with pytest.raises(PreconditionError):
        theta.eta_in_theta(((2,),), 1)
    with pytest.raises(PreconditionError):
        theta.theta_in_eta(PeakPair.of({2}, "010"), 2)
    with pytest.raises(PreconditionError):
        theta.eta_theta_convert("sideways", ((1,),), 1)


def test_theta_on_monomials():
    assert theta.theta_inf(M(1, [(2,), (1,)])) == -2 * M(1, [(3,)])
    assert theta.theta_inf(M(1, [(2,)])) == QSymElem.zero(1)
    assert theta.theta_inf(QSymElem.one(2)) == QSymElem.one(2)


@pytest.mark.parametrize("level, max_weight", [(1, 4), (2, 2)])
def test_theta_is_the_morphism_induced_by_nu(level, max_weight):
    k = (INF,) * level
    for I in _compositions(level, max_weight):
        assert theta.theta_inf(M(level, I)) == theta.theta_k(M(level, I), k)


@pytest.mark.parametrize("level, max_weight", [(1, 4), (2, 3)])
def test_theta_on_fundamentals_is_a_peak_function(level, max_weight):
    for I in _compositions(level, max_weight):
        keyed = QSymElem(level, {I: 1})
        assert theta.theta_inf(keyed, Basis.F) == theta.theta_inf(qsym.F(level, I))


def test_theta_only_reads_m_or_f():
    with pytest.raises(PreconditionError):
        theta.theta_inf(M(1, [(1,)]), Basis.P)


def test_theta_k_at_level_one():
    def keyed(*I):
        return QSymElem(1, {tuple((x,) for x in I): 1})

    assert theta.theta_k_level1(keyed(1, 1), 1) == 2 * M(1, [(2,)]) + 4 * M(1, [(1,), (1,)])
    assert theta.theta_k_level1(keyed(1, 2), 1) == (2 * M(1, [(3,)]) + 4 * M(1, [(1,), (2,)])
                                                   + 4 * M(1, [(2,), (1,)]) + 8 * M(1, [(1,), (1,), (1,)]))
    assert theta.theta_k_level1(keyed(2, 1), 1) == (4 * M(1, [(1,), (2,)]) + 4 * M(1, [(2,), (1,)])
                                                   + 8 * M(1, [(1,), (1,), (1,)]))


@pytest.mark.parametrize("k", [1, 2])
def test_theta_k_closed_form_matches_the_induced_morphism(k):
    for I in _compositions(1, 3):
        keyed = QSymElem(1, {I: 1})
        assert theta.theta_k_level1(keyed, k) == theta.theta_k(qsym.F(1, I), (k,))


def test_theta_k_agrees_with_theta_in_low_degrees():
    for I in _compositions(1, 3):
        keyed = QSymElem(1, {I: 1})
        assert theta.theta_k_level1(keyed, 3) == theta.theta_inf(keyed, Basis.F)
    keyed = QSymElem(1, {((2,), (2,)): 1})
    assert theta.theta_k_level1(keyed, INF) == theta.theta_inf(keyed, Basis.F)


def test_theta_k_preconditions():
    with pytest.raises(PreconditionError):
        theta.theta_k_level1(QSymElem(1, {((1,),): 1}), 0)
    with pytest.raises(PreconditionError):
        theta.theta_k_level1(QSymElem(2, {((1, 0),): 1}), 1)
    with pytest.raises(PreconditionError):
        theta.theta_k_level1(QSymElem(1, {((1,),): 1}), 1, Basis.M)


def test_peak_functions_are_odd():
    spec = subalg.OddEvenSpec.build(2, (INF, INF), "odd")
    for p in theta.admissible_pairs(2, 2):
        assert subalg.membership(theta.peak_function(p, 2), spec)


def test_induced_map_checks_the_level():
    with pytest.raises(PreconditionError):
        theta.induced_map(NuK(1, (INF,)), M(2, [(1, 0)]))
