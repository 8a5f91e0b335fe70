import json
import random

import pytest

from schurcount.counting import count_schur_rings, omega_layer_odd, omega_two_layer, omega_two_s
from schurcount.enumeration import (
    BudgetExceeded,
    budget_from_env,
    crosscheck,
    enumerate_bruteforce,
    enumerate_constructive,
    field_kind_two,
    tally_by_subfield,
)
from schurcount.schur import GroupPartition, intersect_partitions, is_schur_ring
from schurcount.units import SubgroupOfUnits, layer_of

SMALL = [(3, 1), (3, 2), (3, 3), (5, 1), (5, 2), (7, 1), (7, 2), (11, 1), (13, 1), (2, 1), (2, 2), (2, 3), (2, 4)]


@pytest.mark.parametrize("p,n", SMALL)
def test_sound_and_counted(p, n):
    res = enumerate_constructive(p, n)
    assert len(res) == len(res.as_set()) == count_schur_rings(p, n)
    assert all(is_schur_ring(r) for r in res.rings)
    assert sum(res.tally.values()) == len(res)


@pytest.mark.parametrize("n,count", [(4, 3), (8, 10), (9, 7), (3, 2), (5, 3), (7, 4), (11, 4), (13, 6), (16, 37)])
def test_bruteforce_agrees(n, count):
    from schurcount.units import prime_power_parts

    bf = enumerate_bruteforce(n)
    p, e = prime_power_parts(n)
    assert len(bf) == count
    assert bf.as_set() == enumerate_constructive(p, e).as_set()


def test_bruteforce_trivial_moduli():
    assert enumerate_bruteforce(1).rings == [GroupPartition.of(1, [[0]])]
    assert len(enumerate_bruteforce(2)) == 1
    with pytest.raises(ValueError):
        enumerate_bruteforce(0)


def test_bruteforce_finds_non_prime_power_rings():
    # Z_6 is a dot product of Z_2 and Z_3; every valid partition should be found
    for part in enumerate_bruteforce(6).rings:
        assert is_schur_ring(part)
    assert len(enumerate_bruteforce(6)) >= 6


def test_budget(monkeypatch):
    with pytest.raises(BudgetExceeded):
        enumerate_bruteforce(9, budget=3)
    monkeypatch.setenv("SCHUR_BUDGET", "3")
    assert budget_from_env(100) == 3
    with pytest.raises(BudgetExceeded):
        enumerate_bruteforce(9)
    monkeypatch.setenv("SCHUR_BUDGET", "lots")
    with pytest.raises(ValueError):
        budget_from_env(100)


def test_constructive_errors():
    with pytest.raises(BudgetExceeded):
        enumerate_constructive(3, 7, bound=1000)
    with pytest.raises(ValueError):
        enumerate_constructive(3, -1)
    with pytest.raises(ValueError):
        enumerate_constructive(6, 2)


def test_parallel_check_matches_serial():
    assert enumerate_constructive(3, 3, jobs=2).as_set() == enumerate_constructive(3, 3).as_set()


def test_z27_tally():
    t = tally_by_subfield(enumerate_constructive(3, 3))
    assert {k: sorted(v.values()) for k, v in t.by_layer.items()} == {
        0: [10], 1: [7], 2: [3, 3], 3: [1, 1]}
    assert sum(t.by_subgroup.values()) == 25
    for k, fields in t.by_layer.items():
        assert set(fields.values()) == {omega_layer_odd(3, k)(2)}


def test_z8_rational_tally_is_five():
    t = tally_by_subfield(enumerate_constructive(2, 3))
    full = SubgroupOfUnits.of(8, [1, 3, 5, 7])
    assert t.by_subgroup[full] == omega_two_layer(3, 0) == 5


def test_z16_layer_three():
    t = tally_by_subfield(enumerate_constructive(2, 4))
    kinds = {field_kind_two(h, 3): c for h, c in t.by_layer[3].items()}
    assert kinds == {"cyclotomic": 3, "real": 4, "imaginary": 4}
    assert (omega_two_layer(4, 3), omega_two_s(4, 3)) == (3, 4)


@pytest.mark.parametrize("p,n", [(3, 3), (3, 4), (5, 2), (5, 3), (7, 2), (13, 2), (2, 3), (2, 4), (2, 5)])
def test_layer_uniformity_and_top(p, n):
    t = tally_by_subfield(enumerate_constructive(p, n))
    for k, fields in t.by_layer.items():
        if p != 2 or k < 3:
            assert len(set(fields.values())) == 1
        else:
            others = {c for h, c in fields.items() if field_kind_two(h, k) != "cyclotomic"}
            assert len(others) == 1
    assert set(t.by_layer[n].values()) == {1}


@pytest.mark.parametrize("p,n", [(3, 3), (2, 4), (2, 5), (5, 2)])
def test_intersection_closure(p, n):
    res = enumerate_constructive(p, n)
    rings = res.as_set()
    rng = random.Random(p * 100 + n)
    for _ in range(150):
        a, b = rng.choice(res.rings), rng.choice(res.rings)
        assert intersect_partitions(a, b) in rings


@pytest.mark.parametrize("p,n", [(3, 3), (3, 4), (2, 4), (2, 5), (5, 2)])
def test_wedge_witness(p, n):
    res = enumerate_constructive(p, n)
    images = res.omega_images()
    for ring, tags in res.provenance.items():
        k = layer_of(images[ring])
        if 0 < k < n:
            assert any(t[0] == "wedge" for t in tags), ring


@pytest.mark.parametrize("p,n", [(3, 3), (2, 4), (5, 2), (3, 4), (2, 5)])
def test_crosscheck(p, n):
    rep = crosscheck(p, n)
    assert rep.ok, rep.text()


def test_crosscheck_runs_brute_force_when_small():
    rep = crosscheck(2, 3)
    assert any(name == "brute force agreement" for name, _, _ in rep.lines)


def test_dump_schema():
    res = enumerate_constructive(3, 2)
    data = json.loads(res.dump_json())
    assert len(data) == 7
    for item in data:
        part = GroupPartition.from_dict(item)
        assert part in res.as_set()
        assert item["omega_image"] == res.omega_images()[part].sorted()
    assert [GroupPartition.from_dict(d) for d in data] == res.rings
