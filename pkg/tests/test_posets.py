import pytest

from src.algebra import fqsym, posets, subalg
from src.algebra.comb import INF, ColoredPermutation
from src.algebra.errors import PosetError, PreconditionError
from src.algebra.qsym import M
from src.serialization.schema import parse_poset


@pytest.fixture
def bowtie(bowtie_payload):
    return parse_poset(bowtie_payload)


def test_diamond_flags():
    d = posets.diamond()
    assert d.multirank == (2,)
    assert d.flag_f([(2,)]) == 1
    assert d.flag_f([(1,), (1,)]) == 2
    assert d.f_homomorphism() == M(1, [(2,)]) + 2 * M(1, [(1,), (1,)])
    assert d.mobius() == 1


def test_flag_numbers_need_the_multirank():
    with pytest.raises(PreconditionError):
        posets.diamond().flag_f([(1,)])


def test_k_eulerian_depends_on_the_threshold(bowtie):
    assert bowtie.is_k_eulerian((1, 1))
    assert not bowtie.is_k_eulerian((0, 2))
    assert bowtie.mobius("0", "d") == 0


def test_dehn_sommerville_violation(bowtie):
    report = bowtie.dehn_sommerville_check((0, 2))
    assert not report.holds
    assert any(v.index == [[0, 2], [1, 0]] and v.position == 0 and v.value == 1 for v in report.violations)
    assert report.checked >= len(report.violations)


def test_dehn_sommerville_holds_below_the_eulerian_threshold(bowtie):
    assert bowtie.dehn_sommerville_check((1, 1)).holds


def test_f_homomorphism_of_a_multigraded_poset(seven_payload):
    expected = (M(2, [(1, 2)]) + M(2, [(1, 0), (0, 2)]) + 2 * M(2, [(0, 1), (1, 1)]) + M(2, [(1, 1), (0, 1)])
                + M(2, [(0, 2), (1, 0)]) + M(2, [(1, 0), (0, 1), (0, 1)]) + M(2, [(0, 1), (1, 0), (0, 1)])
                + 2 * M(2, [(0, 1), (0, 1), (1, 0)]))
    assert parse_poset(seven_payload).f_homomorphism() == expected


def test_boolean_algebra_is_eulerian():
    b3 = posets.boolean(3, (0, 0, 1), 2)
    assert b3.multirank == (2, 1)
    assert b3.mobius() == -1
    assert b3.is_k_eulerian((INF, INF))
    assert b3.dehn_sommerville_check((INF, INF)).holds
    spec = subalg.OddEvenSpec.build(2, (INF, INF), "odd")
    assert subalg.membership(b3.f_homomorphism(), spec)


def test_product_is_multiplicative():
    d, c = posets.diamond(), posets.chain(1)
    p = d.product(c)
    assert len(p) == 8
    assert p.mobius() == d.mobius() * c.mobius()
    assert p.f_homomorphism() == d.f_homomorphism() * c.f_homomorphism()
    assert p.f_homomorphism() == (M(1, [(3,)]) + 3 * M(1, [(1,), (2,)]) + 3 * M(1, [(2,), (1,)])
                                  + 6 * M(1, [(1,), (1,), (1,)]))


def test_intervals(bowtie):
    lower = bowtie.interval("0", "c")
    assert lower.multirank == (1, 1)
    assert lower.mobius() == 1
    with pytest.raises(PreconditionError):
        bowtie.interval("a", "d")


def test_colored_chain_poset():
    c = posets.chain(2, 2, (0, 1))
    assert c.multirank == (1, 1)
    assert c.mobius() == 0
    assert c.f_homomorphism() == M(2, [(1, 0), (0, 1)])


def test_poset_axioms():
    with pytest.raises(PosetError):
        posets.MultigradedPoset(1, ["0", "1"], [("0", "1"), ("1", "0")], {"0": [0], "1": [1]})
    with pytest.raises(PosetError):
        posets.MultigradedPoset(1, ["0", "1"], [("0", "1")], {"0": [0], "1": [2]})
    with pytest.raises(PosetError):
        posets.MultigradedPoset(1, ["0", "a", "b"], [("0", "a"), ("0", "b")], {"0": [0], "a": [1], "b": [1]})
    with pytest.raises(PosetError):
        posets.MultigradedPoset(1, ["0", "1"], [("0", "1")], {"0": [0]})
    with pytest.raises(PosetError):
        posets.chain(2, 1, (0,))


@pytest.mark.parametrize("build", [posets.colored_antichain, posets.colored_chain])
@pytest.mark.parametrize("colors", [(0, 1), (0, 1, 0), (1, 1, 0)])
def test_gamma_of_naturally_labeled_posets(build, colors):
    p = build(colors, 2)
    assert p.gamma() == p.j_map().f_homomorphism()
    assert fqsym.d_map(p.gamma_hat()) == p.gamma()


def test_linear_extensions():
    assert posets.colored_chain((0, 1), 2).linear_extensions() == [ColoredPermutation((1, 2), (0, 1))]
    assert len(posets.colored_antichain((0, 1, 1), 2).linear_extensions()) == 6


def test_gamma_is_multiplicative():
    left = posets.colored_antichain((0,), 2)
    right = posets.colored_chain((1, 0), 2)
    assert left.disjoint_union(right).gamma() == left.gamma() * right.gamma()


def test_disjoint_union_shifts_values():
    union = posets.colored_chain((0, 1), 2).disjoint_union(posets.colored_antichain((1,), 2))
    assert union.elements == [(1, 0), (2, 1), (3, 1)]
    assert union.relations == [((1, 0), (2, 1))]


def test_coproduct_splits_along_order_ideals():
    pairs = posets.colored_antichain((0, 1), 2).coproduct()
    assert len(pairs) == 4
    assert [(len(a), len(b)) for a, b in pairs] == [(0, 2), (1, 1), (1, 1), (2, 0)]
    assert len(posets.colored_chain((0, 1, 0), 2).coproduct()) == 4


def test_restrict_standardizes_values():
    p = posets.colored_chain((0, 1, 1), 2)
    sub = p.restrict([(1, 0), (3, 1)])
    assert sub.elements == [(1, 0), (2, 1)]
    assert sub.relations == [((1, 0), (2, 1))]


def test_colored_poset_validation():
    with pytest.raises(PosetError):
        posets.ColoredPoset(2, [(1, 0), (3, 1)])
    with pytest.raises(PosetError):
        posets.ColoredPoset(2, [(1, 2)])
    with pytest.raises(PosetError):
        posets.ColoredPoset(2, [(1, 0), (2, 0)], [((1, 0), (2, 0)), ((2, 0), (1, 0))])


def test_eulerian_posets_map_into_the_odd_subalgebra(bowtie, diamond_json):
    assert bowtie.is_k_eulerian((1, 1))
    assert subalg.membership(bowtie.f_homomorphism(), subalg.OddEvenSpec.build(2, (1, 1), "odd"), cross_check=True)
    diamond = parse_poset(diamond_json)
    assert subalg.membership(diamond.f_homomorphism(), subalg.OddEvenSpec.build(1, (INF,), "odd"), cross_check=True)
    for n, coloring, level in [(2, (0, 1), 2), (3, (0, 1, 2), 3), (4, (0, 0, 1, 1), 2)]:
        poset = posets.boolean(n, coloring, level)
        assert poset.is_k_eulerian((INF,) * level)
        spec = subalg.OddEvenSpec.build(level, (INF,) * level, "odd")
        assert subalg.membership(poset.f_homomorphism(), spec)
