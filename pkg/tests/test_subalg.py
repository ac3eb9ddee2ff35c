import pytest

from src.algebra import comb, functionals, linalg, nsym, qsym, subalg, theta
from src.algebra.comb import INF
from src.algebra.errors import InputFormatError, PreconditionError
from src.algebra.qsym import Basis, M, QSymElem
from src.algebra.subalg import OddEvenSpec


@pytest.fixture
def odd1():
    return OddEvenSpec.build(1, (INF,), "odd")


@pytest.fixture
def even1():
    return OddEvenSpec.build(1, (INF,), "even")


def test_spec_validation():
    with pytest.raises(InputFormatError):
        OddEvenSpec.build(1, (INF,), "neither")
    spec = OddEvenSpec.build(2, (INF, 0), "odd")
    assert spec.forbids((2, 0))
    assert not spec.forbids((1, 0))
    assert not spec.forbids((0, 2))
    assert not spec.forbids((1, 1))


def test_odd_and_even_bases(odd1, even1):
    assert subalg.odd_basis(odd1, (4,)) == [((1,), (3,)), ((3,), (1,)), ((1,), (1,), (1,), (1,))]
    assert subalg.even_basis(even1, (4,)) == [((4,),), ((2,), (2,))]


def test_bases_belong_to_their_parity(odd1, even1):
    with pytest.raises(PreconditionError):
        subalg.even_basis(odd1, (2,))
    with pytest.raises(PreconditionError):
        subalg.odd_basis(even1, (2,))
    with pytest.raises(PreconditionError):
        subalg.odd_basis(odd1, (2,), Basis.F)


def test_dimension_matches_enumeration():
    spec = OddEvenSpec.build(2, (INF, INF), "odd")
    assert subalg.basis_dimension(spec, (1, 1)) == 2
    assert subalg.basis_dimension(spec, (2, 1)) == len(subalg.odd_basis(spec, (2, 1)))


@pytest.mark.parametrize("parity, expected", [("odd", (3, 5)), ("even", (2, 6))])
def test_ideal_is_complementary(parity, expected):
    spec = OddEvenSpec.build(1, (INF,), parity)
    assert subalg.basis_dimension(spec, (4,)) == expected[0]
    assert subalg.ideal_dimension(spec, (4,)) == expected[1]
    assert sum(expected) == len(comb.compositions_of((4,)))


def test_ideal_dimension_at_level_two():
    spec = OddEvenSpec.build(2, (INF, INF), "odd")
    assert subalg.ideal_dimension(spec, (1, 1)) == 1


@pytest.mark.parametrize("kind", ["Phi", "Upsilon", "Chi"])
def test_generator_families_span_the_same_ideal(odd1, kind):
    assert subalg.ideal_dimension(odd1, (3,), kind) == 2
    assert subalg.ideal_dimension(odd1, (4,), kind) == 5


def test_ideal_is_orthogonal_to_the_subalgebra(odd1, even1):
    for spec, n in [(odd1, (4,)), (even1, (3,)), (OddEvenSpec.build(2, (INF, INF), "odd"), (1, 1))]:
        for t in subalg.ideal_piece(spec, n):
            for b in subalg.basis_elements(spec, n):
                assert functionals.pair(t, b) == 0


def test_generator_degrees_with_a_finite_threshold():
    spec = OddEvenSpec.build(3, (4, 0, 3), "odd")
    found = subalg.generator_degrees(spec, 7)
    assert len(found) == 9
    assert set(found) == {(2, 0, 0), (4, 0, 0), (0, 0, 2), (2, 0, 2), (4, 0, 2),
                          (1, 0, 1), (1, 0, 3), (3, 0, 1), (3, 0, 3)}


def test_ideal_generators(odd1, even1):
    found = subalg.ideal_generators(odd1, "Phi", 4)
    assert [n for n, _ in found] == [(2,), (4,)]
    assert found[0][1] == nsym.phi_power((2,), 1)
    assert [n for n, _ in subalg.ideal_generators(even1, "S", 3)] == [(1,), (3,)]
    with pytest.raises(PreconditionError):
        subalg.ideal_generators(odd1, "S", 2)
    with pytest.raises(InputFormatError):
        subalg.ideal_generators(odd1, "Omega", 2)


def test_membership_in_the_odd_subalgebra(odd1):
    assert not subalg.membership(M(1, [(2,)]), odd1, cross_check=True)
    assert subalg.membership(qsym.P(1, [(1,)]), odd1, cross_check=True)
    assert subalg.membership(qsym.P(1, [(1,), (1,)]), odd1, cross_check=True)
    assert subalg.membership(qsym.P(1, [(1,), (3,)]) - 2 * qsym.P(1, [(3,), (1,)]), odd1, cross_check=True)


def test_membership_in_the_even_subalgebra(even1):
    assert subalg.membership(M(1, [(2,)]), even1, cross_check=True)
    assert not subalg.membership(M(1, [(1,), (1,)]), even1, cross_check=True)


def test_membership_checks_the_level(odd1):
    with pytest.raises(PreconditionError):
        subalg.membership(M(2, [(1, 0)]), odd1)


def test_products_of_generators_stay_inside(odd1):
    a = qsym.P(1, [(1,)]) * qsym.P(1, [(3,)])
    assert subalg.membership(a, odd1)
    assert subalg.membership_by_span(a, odd1)


def test_lyndon_generators(odd1):
    assert subalg.lyndon_generators(odd1, 3) == [((1,),), ((3,),)]
    with pytest.raises(InputFormatError):
        subalg.lyndon_generators(odd1, 3, "colex")


def test_sym_generator_degrees(odd1):
    assert subalg.sym_generator_degrees(odd1, 4) == [(1,), (3,)]


@pytest.mark.parametrize("level, k, max_weight, expected", [
    (1, (INF,), 9, [1, 1, 1, 2, 3, 5, 8, 13, 21, 34]),
    (2, (INF, 0), 7, [1, 2, 6, 20, 64, 206, 662, 2128]),
    (2, (INF, INF), 7, [1, 2, 4, 12, 32, 86, 232, 624]),
    (3, (INF, INF, INF), 5, [1, 3, 9, 37, 141, 534]),
])
def test_hilbert_series(level, k, max_weight, expected):
    spec = OddEvenSpec.build(level, k, "odd")
    series = subalg.hilbert_series(spec, max_weight, "both")
    assert series.weight_graded() == expected


def test_hilbert_series_of_the_even_subalgebra(even1):
    assert subalg.hilbert_series(even1, 4).weight_graded() == [1, 0, 1, 0, 2]
    with pytest.raises(PreconditionError):
        subalg.hilbert_series(even1, 4, "closed_form")


def test_hilbert_series_by_degree():
    spec = OddEvenSpec.build(2, (INF, INF), "odd")
    series = subalg.hilbert_series(spec, 2)
    assert series.coefficient((1, 1)) == 2
    assert series.coefficient((2, 0)) == 1


def test_membership_is_decided_degree_by_degree(odd1):
    assert not subalg.membership(M(1, [(2,)]), odd1)
    assert not subalg.membership(M(1, [(4,)]), odd1)
    assert not subalg.membership(M(1, [(2,)]) - M(1, [(4,)]), odd1, cross_check=True)
    assert not subalg.membership(qsym.P(1, [(1,)]) + M(1, [(4,)]), odd1, cross_check=True)


def test_mixed_degree_members_of_the_odd_subalgebra(odd1):
    a = qsym.P(1, [(1,)]) + qsym.P(1, [(1,), (1,)]) - 3 * qsym.P(1, [(1,), (3,)])
    assert subalg.membership(a, odd1, cross_check=True)
    assert not subalg.membership(qsym.P(1, [(1,)]) + M(1, [(2,)]), odd1, cross_check=True)
    spec = OddEvenSpec.build(2, (INF, INF), "odd")
    b = qsym.P(2, [(1, 0)]) + qsym.P(2, [(0, 1), (1, 0)]) + qsym.P(2, [(2, 1)])
    assert subalg.membership(b, spec, cross_check=True)
    assert not subalg.membership(b + M(2, [(1, 1)]), spec, cross_check=True)


def test_mixed_degree_members_of_the_even_subalgebra(even1):
    a = M(1, [(2,)]) + M(1, [(4,)]) + 2 * M(1, [(2,), (2,)])
    assert subalg.membership(a, even1, cross_check=True)
    assert not subalg.membership(M(1, [(2,)]) + M(1, [(1,), (1,)]), even1, cross_check=True)
    assert not subalg.membership(a + M(1, [(3,)]), even1, cross_check=True)


LEVEL_ONE_K = [(INF,), (1,), (2,), (3,)]
LEVEL_TWO_K = [(INF, INF), (INF, 0), (1, 1), (2, 3)]


def test_membership_agrees_with_the_span_test(rng, random_qsym):
    for index in range(40):
        level = 1 + index % 2
        k = rng.choice(LEVEL_ONE_K if level == 1 else LEVEL_TWO_K)
        spec = OddEvenSpec.build(level, k, rng.choice(["odd", "even"]))
        member = QSymElem.zero(level)
        for w in rng.sample(range(1, 5), 2):
            n = rng.choice(comb.lpartites_of_weight(w, level))
            for element in subalg.basis_elements(spec, n):
                member = member + rng.randint(-2, 2) * element
        noise = random_qsym(level=level, max_weight=4, terms=2)
        assert subalg.membership(member, spec)
        assert subalg.membership_by_span(member, spec)
        for a in (noise, member + noise):
            assert subalg.membership(a, spec) == subalg.membership_by_span(a, spec)


@pytest.mark.parametrize("level, k", [(1, k) for k in [(INF,), (2,), (4,)]] + [
    (2, (INF, INF)), (2, (INF, 0)), (2, (2, 1)),
])
def test_generator_families_span_the_same_ideal_in_each_degree(level, k):
    spec = OddEvenSpec.build(level, k, "odd")
    for n in comb.lpartites_up_to_weight(5, level):
        phi = subalg.ideal_piece(spec, n, "Phi")
        assert linalg.same_span(phi, subalg.ideal_piece(spec, n, "Chi"))
        assert linalg.same_span(phi, subalg.ideal_piece(spec, n, "Upsilon"))


def test_theta_images_lie_in_the_odd_subalgebra(odd1):
    for w in range(1, 6):
        for I in comb.compositions_of_weight(w, 1):
            assert subalg.membership(theta.theta_inf(qsym.F(1, I)), odd1)
    spec = OddEvenSpec.build(2, (INF, INF), "odd")
    for w in range(1, 4):
        for I in comb.compositions_of_weight(w, 2):
            assert subalg.membership(theta.theta_inf(qsym.F(2, I)), spec)


@pytest.mark.parametrize("k", [1, 2, 3, INF])
def test_theta_k_images_lie_in_o_k(k):
    spec = OddEvenSpec.build(1, (k,), "odd")
    for w in range(1, 6):
        for I in comb.compositions_of_weight(w, 1):
            assert subalg.membership(theta.theta_k(qsym.F(1, I), (k,)), spec)
            assert subalg.membership(theta.theta_k_level1(QSymElem(1, {I: 1}), k), spec)


def test_even_and_next_odd_thresholds_give_equal_dimensions():
    for j in range(3):
        lower = OddEvenSpec.build(1, (2 * j,), "odd")
        upper = OddEvenSpec.build(1, (2 * j + 1,), "odd")
        for n in range(1, 9):
            assert subalg.basis_dimension(lower, (n,)) == subalg.basis_dimension(upper, (n,))


def test_subalgebras_shrink_as_the_threshold_grows():
    chain = [OddEvenSpec.build(2, k, "odd") for k in [(0, 0), (1, 1), (2, 3), (INF, INF)]]
    for n in comb.lpartites_up_to_weight(5, 2):
        dims = [subalg.basis_dimension(spec, n) for spec in chain]
        assert dims == sorted(dims, reverse=True)
        assert dims[0] == len(comb.compositions_of(n))


def test_hilbert_series_of_level_three_through_weight_seven():
    spec = OddEvenSpec.build(3, (INF, INF, INF), "odd")
    assert subalg.hilbert_enumerate(spec, 7).weight_graded() == [1, 3, 9, 37, 141, 534, 2035, 7740]


@pytest.mark.parametrize("level, k", [
    (1, (0,)), (1, (2,)), (1, (INF,)),
    (2, (0, 0)), (2, (INF, 0)), (2, (INF, INF)),
    (3, (0, 0, 0)), (3, (4, 0, 3)), (3, (INF, INF, INF)),
])
def test_closed_form_matches_enumeration_through_weight_eight(level, k):
    spec = OddEvenSpec.build(level, k, "odd")
    assert subalg.hilbert_closed_form(spec, 8) == subalg.hilbert_enumerate(spec, 8)
