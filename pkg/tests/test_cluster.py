from itertools import combinations
from math import comb

import pytest

from localslices import ResourceError, ValidationError, build_model, cluster_hom, d_quiver, enumerate_tilting, ext1_dim, is_tilting
from localslices.cluster import compatibility_graph, projective_tilting

from helpers import model, tilting


def catalan(n):
    return comb(2 * n, n) // (n + 1)


def d_cluster_count(n):
    # number of clusters of type D_n
    return (3 * n - 2) * comb(2 * n - 2, n - 1) // n


@pytest.mark.parametrize("name, expected", [
    ("A2", catalan(3)), ("A3", catalan(4)), ("A4", catalan(5)), ("D4", d_cluster_count(4)),
])
def test_tilting_counts_match_cluster_numbers(name, expected):
    assert len(tilting(name)) == expected


@pytest.mark.parametrize("name", ["A2", "A3", "D4"])
def test_every_indecomposable_is_rigid(name):
    m = model(name)
    assert all(ext1_dim(m, x, x) == 0 for x in m.fundamental_domain())
    assert set(compatibility_graph(m).nodes) == set(m.fundamental_domain())


@pytest.mark.parametrize("name", ["A3", "D4"])
def test_ext1_symmetric(name):
    m = model(name)
    fd = m.fundamental_domain()
    assert all(ext1_dim(m, x, y) == ext1_dim(m, y, x) for x in fd for y in fd)


@pytest.mark.parametrize("name", ["A3", "D4"])
def test_almost_complete_objects_have_two_complements(name):
    m = model(name)
    ts = {frozenset(t) for t in tilting(name)}
    fd = m.fundamental_domain()
    seen = set()
    for t in ts:
        for x in t:
            rest = t - {x}
            if rest in seen:
                continue
            seen.add(rest)
            completions = [y for y in fd if rest | {y} in ts]
            assert len(completions) == 2


def test_projectives_are_tilting():
    m = model("D4")
    t = projective_tilting(m)
    assert is_tilting(m, t)
    assert t in tilting("D4")


def test_cluster_hom_grades_for_modules():
    # Hom in the cluster category between modules lives in grades 0 and 1 only
    m = model("A3")
    mods = m.module_range()
    for x in mods:
        for y in mods:
            assert set(cluster_hom(m, x, y).grades) <= {0, 1}


def test_cluster_hom_of_shift_is_ext():
    m = model("A2")
    p1, p2 = m.proj_pos["1"], m.proj_pos["2"]
    assert cluster_hom(m, p1, p1).total == 1
    assert ext1_dim(m, p1, p2) == 0


def test_is_tilting_rejects_wrong_size_and_unknown():
    m = model("A2")
    assert not is_tilting(m, [m.proj_pos["1"]])
    with pytest.raises(ValidationError):
        is_tilting(m, ["99:1", "0:1"])


def test_enumeration_caps():
    with pytest.raises(ValidationError):
        enumerate_tilting(model("A2"), "greedy")
    with pytest.raises(ResourceError):
        enumerate_tilting(build_model(d_quiver(7)))


def test_naive_scan_definition_for_a2():
    m = model("A2")
    fd = m.fundamental_domain()
    naive = [c for c in combinations(fd, 2) if all(ext1_dim(m, x, y) == 0 for x in c for y in c)]
    assert len(naive) == 5
