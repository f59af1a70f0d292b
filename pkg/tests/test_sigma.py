import random
from fractions import Fraction

import pytest

from nearindep.graphs import (
    disjoint_union,
    graph_from_pair_mask,
    make_graph,
    make_named,
)
from nearindep.limits import CapabilityError
from nearindep.sigma import (
    SigmaDistribution,
    SigmaPair,
    combine_union,
    q_ratio,
    sigma01,
    sigma01_recursive,
    sigma01_tree_dp,
    sigma_distribution_bruteforce,
    star_q,
)

from conftest import random_graph


def all_labelled(n):
    npairs = n * (n - 1) // 2
    for m in range(1 << npairs):
        yield graph_from_pair_mask(n, m)


def test_distribution_examples():
    assert sigma_distribution_bruteforce(make_named("empty", 2)).counts == (4,)
    assert sigma_distribution_bruteforce(make_named("complete", 3)).counts == (4, 3, 0, 1)
    d = sigma_distribution_bruteforce(make_named("path", 4))
    assert d.counts[0] == 8 and d.counts[1] == 5
    assert sigma_distribution_bruteforce(make_named("empty", 0)).counts == (1,)


def test_distribution_invariants():
    with pytest.raises(ValueError):
        SigmaDistribution(2, (3,))
    d = sigma_distribution_bruteforce(make_named("path", 3))
    assert sum(d.counts) == 8 and d.pair() == SigmaPair(5, 2)


def test_distribution_cap():
    with pytest.raises(CapabilityError):
        sigma_distribution_bruteforce(make_named("empty", 26))


def test_recursive_examples():
    # P3 checked against the subset-sweep oracle first, then frozen
    p3 = make_named("path", 3)
    assert sigma_distribution_bruteforce(p3).pair() == SigmaPair(5, 2)
    assert sigma01_recursive(p3) == SigmaPair(5, 2)
    assert sigma01_recursive(make_named("star", 6)) == SigmaPair(33, 5)
    assert sigma01_recursive(make_named("path", 4)) == SigmaPair(8, 5)


def test_tree_dp_examples():
    assert sigma01_tree_dp(make_named("path", 2)) == SigmaPair(3, 1)
    assert sigma01_tree_dp(make_named("star", 10)) == SigmaPair(513, 9)
    with pytest.raises(ValueError):
        sigma01_tree_dp(make_named("complete", 3))


def test_tree_dp_matches_recursion_on_all_trees():
    from nearindep.generate import gen_trees

    for n in range(1, 11):
        for t in gen_trees(n):
            assert sigma01_tree_dp(t) == sigma01_recursive(t)


def test_combine_union():
    k2 = SigmaPair(3, 1)
    assert combine_union(k2, k2) == SigmaPair(9, 6)
    assert combine_union(SigmaPair(7, 4), SigmaPair(2, 0)) == SigmaPair(14, 8)
    acc = SigmaPair(1, 0)
    for t in range(1, 7):
        acc = combine_union(acc, k2)
        assert acc == SigmaPair(3**t, t * 3 ** (t - 1))


def test_sigma01_dispatch():
    g = disjoint_union(make_named("path", 2), make_named("empty", 3))
    assert sigma01(g) == SigmaPair(24, 8)
    assert sigma01(make_named("empty", 0)) == SigmaPair(1, 0)
    assert sigma01(make_named("path", 4)) == SigmaPair(8, 5)


def test_sigma01_equals_recursion_everywhere(rng):
    for _ in range(150):
        g = random_graph(rng.randint(0, 8), rng)
        assert sigma01(g) == sigma01_recursive(g)


def test_q_ratio():
    assert q_ratio(make_named("path", 4)) == Fraction(5, 8)
    assert q_ratio(make_named("matching_plus_isolated", 4, 2)) == Fraction(2, 3)
    for t in range(1, 8):
        for m in range(4):
            g = make_named("matching_plus_isolated", 2 * t + m, t)
            assert q_ratio(g) == Fraction(t, 3)


def test_star_q():
    assert [star_q(n) for n in (1, 2, 3, 4)] == [
        Fraction(0),
        Fraction(1, 3),
        Fraction(2, 5),
        Fraction(1, 3),
    ]
    with pytest.raises(ValueError):
        star_q(0)


def test_star_closed_forms():
    for n in range(1, 21):
        want = SigmaPair((1 << (n - 1)) + 1, n - 1)
        s = make_named("star", n)
        assert sigma01_tree_dp(s) == want
        assert sigma01_recursive(s) == want


def test_oracle_equivalence_exhaustive_small():
    for n in range(6):
        for g in all_labelled(n):
            assert sigma_distribution_bruteforce(g).pair() == sigma01_recursive(g)


def test_pivot_independence(rng):
    for _ in range(60):
        g = random_graph(rng.randint(0, 8), rng)
        reference = sigma01_recursive(g)
        r = random.Random(rng.getrandbits(32))
        assert sigma01_recursive(g, pivot_rng=r) == reference


def test_edge_removal_can_raise_q():
    p4 = make_named("path", 4)
    cut = make_graph(4, [(0, 1), (2, 3)])
    assert q_ratio(p4) == Fraction(5, 8) < Fraction(2, 3) == q_ratio(cut)


def test_sigma_pair_validation():
    with pytest.raises(ValueError):
        SigmaPair(0, 0)
    with pytest.raises(ValueError):
        SigmaPair(1, -1)
