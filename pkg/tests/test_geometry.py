import random

import pytest
from hypothesis import given, strategies as st

from coarsesets.budgets import preset
from coarsesets.geometry import (Radius, ball, cellularity_probe,
                                 chain_component, chain_partition,
                                 prec_mapping_check, restricted_ball,
                                 word_radius)
from coarsesets.groups import (FiniteSample, FreeGroup, GroupError, IntGroup,
                               Window, enumerate_window)

import oracles

Z = IntGroup()


def zradius(*elements):
    return Radius(Z, frozenset(elements))


def test_ball_examples():
    assert ball(Z, 5, zradius(-1, 1)) == {4, 5, 6}
    assert ball(Z, 7, Radius(Z, frozenset())) == {7}
    f = FreeGroup(2)
    got = ball(f, "b", Radius(f, frozenset({"a", "A"})))
    assert got == {"ab", "Ab", "b"}


def test_restricted_ball_examples():
    powers = frozenset(2**n for n in range(21))
    sample = FiniteSample(Z, powers)
    assert restricted_ball(sample, 1, zradius(-1, 1)) == {1, 2}
    assert restricted_ball(FiniteSample(Z, frozenset()), 1, zradius(-1, 1)) == frozenset()
    win = enumerate_window(Z, Window(Z, 10))
    assert restricted_ball(win, 0, zradius(-1, 1)) == {-1, 0, 1}


@given(g=st.integers(-10**6, 10**6),
       f=st.frozensets(st.integers(-50, 50), max_size=10))
def test_ball_law(g, f):
    b = ball(Z, g, Radius(Z, f))
    assert g in b
    assert len(b) <= len(f) + 1


def test_radius_symmetrize_and_thicken():
    r = zradius(1, 2)
    assert not r.is_symmetric()
    s = r.symmetrize()
    assert s.elements == frozenset({-2, -1, 1, 2})
    assert s.is_symmetric()
    t = zradius(5).thicken(2)
    assert t.elements == frozenset(range(-2, 3)) | frozenset(range(3, 8))
    assert word_radius(Z, 2).elements <= t.elements


def test_chain_component_examples():
    sample = FiniteSample(Z, frozenset({0, 1, 2, 10, 11}))
    assert chain_component(sample, 0, zradius(-1, 1)) == {0, 1, 2}
    assert chain_component(sample, 10, zradius(-1, 1)) == {10, 11}
    # radius covering all differences reaches everything in one step
    big = zradius(*{a - b for a in sample.elements for b in sample.elements})
    assert chain_component(sample, 0, big) == sample.elements
    single = FiniteSample(Z, frozenset({7}))
    assert chain_component(single, 7, zradius(-1, 1)) == {7}
    with pytest.raises(GroupError):
        chain_component(sample, 5, zradius(-1, 1))


def test_chain_partition_is_partition():
    rng = random.Random(7)
    elems = frozenset(rng.sample(range(-300, 300), 80))
    sample = FiniteSample(Z, elems)
    comps = chain_partition(sample, zradius(1, 2))
    assert sorted(x for c in comps for x in c) == sorted(elems)
    total = sum(len(c) for c in comps)
    assert total == len(elems)


def test_chain_component_matches_union_find():
    rng = random.Random(11)
    for _ in range(30):
        elems = frozenset(rng.sample(range(-500, 500), rng.randint(5, 120)))
        kset = frozenset(rng.sample(range(1, 6), rng.randint(1, 3)))
        radius = Radius(Z, kset)
        expected = {frozenset(c)
                    for c in oracles.union_find_components(Z, elems, kset)}
        got = {frozenset(c) for c in chain_partition(FiniteSample(Z, elems), radius)}
        assert got == expected
        a = min(elems)
        comp = chain_component(FiniteSample(Z, elems), a, radius)
        assert comp in expected


@given(st.data())
def test_chain_component_monotone_in_radius(data):
    elems = data.draw(st.frozensets(st.integers(-40, 40), min_size=1, max_size=25))
    small = data.draw(st.frozensets(st.integers(1, 4), min_size=1, max_size=2))
    extra = data.draw(st.frozensets(st.integers(1, 6), max_size=2))
    sample = FiniteSample(Z, elems)
    a = min(elems)
    c1 = chain_component(sample, a, Radius(Z, small))
    c2 = chain_component(sample, a, Radius(Z, small | extra))
    assert c1 <= c2


def test_cellularity_powers_of_four():
    elems = frozenset(4**n for n in range(9))
    sample = FiniteSample(Z, elems, Window(Z, 4**9))
    rep = cellularity_probe(sample, zradius(-1, 1), preset("small"))
    assert rep.verdict == "CELLULAR_AT_SCALE"
    assert rep.kprime_label == "wordball:1"


def test_cellularity_window_fails():
    sample = enumerate_window(Z, Window(Z, 64))
    rep = cellularity_probe(sample, zradius(-1, 1), preset("small"))
    assert rep.verdict == "NOT_CELLULAR_AT_SCALE"
    assert rep.offender is not None


def test_cellularity_singleton():
    sample = FiniteSample(Z, frozenset({3}), Window(Z, 100))
    rep = cellularity_probe(sample, zradius(-1, 1), preset("small"))
    assert rep.verdict == "CELLULAR_AT_SCALE"


def test_prec_identity_and_doubling():
    window = Window(Z, 100)
    domain = enumerate_window(Z, window)
    ident = {x: x for x in domain.elements}
    scale = preset("small")
    rep = prec_mapping_check(ident, domain, zradius(-1, 1), scale)
    assert rep.verdict == "PREC"
    assert rep.k_label == "wordball:1"
    double = {x: 2 * x for x in domain.elements}
    rep2 = prec_mapping_check(double, domain, zradius(-1, 1), scale)
    assert rep2.verdict == "PREC"
    assert rep2.k_label == "wordball:2"


def test_prec_square_fails():
    window = Window(Z, 100)
    domain = enumerate_window(Z, window)
    square = {x: x * x for x in domain.elements}
    rep = prec_mapping_check(square, domain, zradius(-1, 1), preset("medium"))
    assert rep.verdict == "NOT_PREC"
    assert rep.witness is not None


def test_prec_composition():
    window = Window(Z, 200)
    domain = enumerate_window(Z, window)
    scale = preset("medium")
    f = {x: 2 * x for x in domain.elements}
    rep_f = prec_mapping_check(f, domain, zradius(-1, 1), scale)
    image = FiniteSample(Z, frozenset(f.values()), Window(Z, 400))
    g = {y: 2 * y for y in image.elements}
    k_radius = word_radius(Z, int(rep_f.k_label.split(":")[1]))
    rep_g = prec_mapping_check(g, image, k_radius, scale)
    assert rep_g.verdict == "PREC"
    comp = {x: g[f[x]] for x in domain.elements}
    rep_c = prec_mapping_check(comp, domain, zradius(-1, 1), scale)
    assert rep_c.verdict == "PREC"
    assert int(rep_c.k_label.split(":")[1]) <= int(rep_g.k_label.split(":")[1])
