import random

import pytest
from hypothesis import given, settings, strategies as st

from coarsesets.groups import (FiniteSample, FreeGroup, GroupError, IntGroup,
                               Window, XorGroup)
from coarsesets.structures import (NestedChain, cantor_offsets,
                                   detect_pwip, extract_pwip_from_chain,
                                   gen_cantor_geodesic, gen_ip, gen_pwip,
                                   gen_wn)

import oracles

Z = IntGroup()


def test_gen_ip_powers_of_two():
    sample = gen_ip(Z, (1, 2, 4, 8, 16))
    assert sample.elements == frozenset(range(1, 32))


def test_gen_ip_small_cases():
    assert gen_ip(Z, (5,)).elements == frozenset({5})
    f = FreeGroup(2)
    assert gen_ip(f, ("a", "b")).elements == frozenset({"a", "b", "ab"})
    with pytest.raises(GroupError):
        gen_ip(Z, (1, 1))
    with pytest.raises(GroupError):
        gen_ip(Z, ())


def test_gen_ip_prefix_monotone():
    rng = random.Random(3)
    for _ in range(20):
        gens = rng.sample(range(1, 200), 6)
        small = gen_ip(Z, gens[:4]).elements
        big = gen_ip(Z, gens).elements
        assert small <= big


def test_gen_pwip_worked_example():
    sample = gen_pwip(Z, (10, 100, 1000), (1, 2, 3))
    assert sample.elements == frozenset({11, 102, 112, 1003, 1013, 1103, 1113})


def test_gen_pwip_small_example():
    sample = gen_pwip(Z, (1, 2), (0, 10))
    assert sample.elements == frozenset({1, 12, 13})


def test_gen_pwip_identity_shifts_matches_ip():
    rng = random.Random(5)
    nonzero = [x for x in range(-100, 101) if x != 0]
    for _ in range(50):
        k = rng.randint(1, 6)
        gens = tuple(rng.sample(nonzero, k))
        assert gen_pwip(Z, gens, (0,) * k).elements == gen_ip(Z, gens).elements
    f = FreeGroup(2)
    assert (gen_pwip(f, ("a", "b"), ("", "")).elements
            == gen_ip(f, ("a", "b")).elements)


def test_gen_wn_counts():
    assert len(gen_wn(3, 2)) == 7
    assert gen_wn(4, 0).elements == frozenset({0})
    assert len(gen_wn(4, 2)) == 11
    with pytest.raises(GroupError):
        gen_wn(3, 4)
    sample = gen_wn(8, 2)
    assert all(XorGroup.support(x) <= 2 for x in sample.elements)


def test_cantor_offsets_separation():
    offs = cantor_offsets(6)
    assert offs[0] == 0
    for n in range(1, 6):
        assert offs[n] - (offs[n - 1] + 3**n) >= 2 * 3 ** (n + 1) - 3**n


def test_cantor_geodesic_blocks():
    sample = gen_cantor_geodesic(2)
    offs = cantor_offsets(2)
    block1 = {x - offs[0] for x in sample.elements if offs[0] <= x <= offs[0] + 3}
    assert block1 == {0, 2}
    block2 = {x - offs[1] for x in sample.elements if offs[1] <= x <= offs[1] + 9}
    assert block2 == {0, 2, 6, 8}


def test_cantor_geodesic_block_sizes():
    sample = gen_cantor_geodesic(5)
    offs = cantor_offsets(5)
    for n in range(1, 6):
        o = offs[n - 1]
        block = [x for x in sample.elements if o <= x <= o + 3**n]
        assert len(block) == 2**n


def test_detect_pwip_recovers_generated_set():
    sample = gen_pwip(Z, (10, 100, 1000), (1, 2, 3))
    witness = detect_pwip(sample, 3)
    assert witness is not None
    assert witness.validate(sample.elements)
    values = {v for _, v in witness.products}
    assert values <= sample.elements


def test_detect_pwip_depth2_triviality():
    rng = random.Random(13)
    for _ in range(100):
        elems = frozenset(rng.sample(range(-10**6, 10**6), rng.randint(3, 12)))
        witness = detect_pwip(FiniteSample(Z, elems), 2)
        assert witness is not None
        assert witness.validate(elems)


def test_detect_pwip_too_small():
    assert detect_pwip(FiniteSample(Z, frozenset({0})), 2) is None
    assert detect_pwip(FiniteSample(Z, frozenset({0, 5})), 2) is None
    with pytest.raises(GroupError):
        detect_pwip(FiniteSample(Z, frozenset({0})), 0)


def test_detect_pwip_depth_monotone():
    rng = random.Random(17)
    for _ in range(20):
        elems = frozenset(rng.sample(range(-200, 200), 15))
        sample = FiniteSample(Z, elems)
        if detect_pwip(sample, 3) is not None:
            assert detect_pwip(sample, 2) is not None


def _random_oracle_instances():
    rng = random.Random(23)
    cases = []
    for _ in range(120):
        n = rng.randint(1, 14)
        cases.append((Z, frozenset(rng.sample(range(-60, 60), n))))
    for _ in range(50):
        n = rng.randint(1, 25)
        cases.append((Z, frozenset(rng.sample(range(-2000, 2000), n))))
    xg = XorGroup(6)
    for _ in range(30):
        n = rng.randint(1, 20)
        cases.append((xg, frozenset(rng.sample(range(64), n))))
    # structured negatives and larger positives
    cases.append((Z, frozenset(2**n for n in range(12))))
    cases.append((Z, frozenset(3**n for n in range(9))))
    cases.append((Z, frozenset(range(40))))
    cases.append((Z, frozenset(rng.sample(range(-10000, 10000), 40))))
    return cases


def test_detect_pwip_oracle_equivalence():
    checked = 0
    for group, elems in _random_oracle_instances():
        sample = FiniteSample(group, elems)
        for depth in (1, 2, 3):
            if 2**depth - 1 > len(elems):
                continue
            got = detect_pwip(sample, depth)
            expected = oracles.pwip_exists(group, elems, depth)
            assert (got is not None) == expected, (group.spec, sorted(elems), depth)
            if got is not None:
                assert got.validate(elems)
            checked += 1
    assert checked >= 200


def test_detect_pwip_powers_depth3_negative():
    sample = FiniteSample(Z, frozenset(2**n for n in range(12)))
    assert detect_pwip(sample, 3) is None
    assert oracles.pwip_exists_depth3(Z, sample.elements) is False


def test_witness_json_shape():
    witness = detect_pwip(FiniteSample(Z, frozenset({1, 5, 9, 20})), 2)
    d = witness.to_json_dict()
    assert d["depth"] == "2"
    assert len(d["generators"]) == 2
    assert len(d["shifts"]) == 2
    assert len(d["products"]) == 3
    assert all(set(p) == {"indices", "value"} for p in d["products"])


def _dyadic_chain(k, w):
    sets = []
    for n in range(k + 1):
        bound = w - (2**n - 1)
        sets.append(frozenset(x for x in range(-bound, bound + 1)
                              if x % 2**n == 0))
    gens = tuple(2**n for n in range(k))
    reps = (0,) * k
    return NestedChain(Z, tuple(sets), gens, reps)


def test_nested_chain_check_and_extract():
    chain = _dyadic_chain(4, 64)
    chain.check()
    out = extract_pwip_from_chain(chain)
    assert out.elements == frozenset(range(16))
    assert out.elements <= chain.sets[0]
    assert detect_pwip(out, 3) is not None


def test_nested_chain_violations():
    chain = _dyadic_chain(3, 32)
    bad = NestedChain(Z, chain.sets, chain.gens, (1,) + chain.reps[1:])
    with pytest.raises(GroupError):
        bad.check()
    bad2 = NestedChain(Z, chain.sets, (3, 2, 4), chain.reps)
    with pytest.raises(GroupError):
        bad2.check()


def test_extract_single_level():
    sets = (frozenset(range(-10, 11)), frozenset(range(-5, 6)))
    chain = NestedChain(Z, sets, (2,), (3,))
    out = extract_pwip_from_chain(chain)
    assert out.elements == frozenset({3, 5})
