import itertools
import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from localslices import (
    BoundaryError, Quiver, ValidationError, Verdict, build_zq, d_quiver, enumerate_local_slices,
    is_local_section, is_local_slice, is_presection, is_section, linear_quiver, synthetic_tube,
)
from localslices.slices import MAX_ENUMERATION_RANK, connected_subsets, presection_violations
from localslices.translation import zq_id
from localslices.verify import random_acyclic_quiver


def height_section(q, h):
    return [zq_id(h[v], v) for v in q.vertices]


def is_height_function(q, h):
    # arrow u -> v of Q: (n,u) -> (n,v) or (n,v) -> (n+1,u), so h(u) - h(v) is 0 or 1
    return all(h[a.source] - h[a.target] in (0, 1) for a in q.arrows)


@st.composite
def quiver_and_heights(draw):
    seed = draw(st.integers(0, 10 ** 6))
    rng = random.Random(seed)
    q = random_acyclic_quiver(rng, draw(st.integers(1, 6)))
    h = {v: draw(st.integers(2, 5)) for v in q.vertices}
    return q, h


@settings(max_examples=150, deadline=None)
@given(quiver_and_heights())
def test_section_iff_height_function(data):
    # sections of ZQ for a tree Q are exactly the graphs of height functions
    q, h = data
    g = build_zq(q, 0, 7)
    s = height_section(q, h)
    verdict = is_section(g, s)
    assert verdict is Verdict.of(is_height_function(q, h))
    assert is_presection(g, s) is verdict
    assert is_local_section(g, s) is verdict


def test_boundary_verdict_and_bool():
    g = build_zq(linear_quiver(2), 0, 3)
    v = is_section(g, ["0:1", "0:2"])
    assert v is Verdict.BOUNDARY
    with pytest.raises(BoundaryError):
        bool(v)
    assert bool(is_section(g, ["1:1", "1:2"]))


def test_empty_and_unknown_candidates():
    g = build_zq(linear_quiver(2), 0, 3)
    with pytest.raises(ValidationError):
        is_section(g, [])
    with pytest.raises(ValidationError):
        is_section(g, ["7:1"])


def test_two_points_of_one_orbit_is_not_a_section():
    g = build_zq(linear_quiver(2), 0, 5)
    assert is_section(g, ["2:1", "2:2", "3:1"]) is Verdict.FALSE


def test_connected_subsets_against_brute_force():
    g = build_zq(d_quiver(4), 0, 2)
    for k in (1, 2, 3, 4):
        ours = sorted(sorted(s) for s in connected_subsets(g, k))
        und = nx.Graph(list(g.arrows))
        brute = sorted(sorted(c) for c in itertools.combinations(g.ids, k) if nx.is_connected(und.subgraph(c)))
        assert ours == brute


@pytest.mark.parametrize("q", [linear_quiver(2), linear_quiver(3, reverse=True), d_quiver(4)])
def test_enumeration_equals_height_functions(q):
    # interior local slices of a ZQ window are the sections with every level strictly inside
    lo, hi = 0, 4
    g = build_zq(q, lo, hi)
    expected = []
    for hs in itertools.product(range(lo + 1, hi), repeat=len(q.vertices)):
        h = dict(zip(q.vertices, hs))
        if is_height_function(q, h):
            expected.append(sorted(height_section(q, h)))
    assert enumerate_local_slices(g) == sorted(expected)


def test_enumeration_rank_cap():
    from localslices import ResourceError

    g = build_zq(linear_quiver(2), 0, 3)
    with pytest.raises(ResourceError):
        enumerate_local_slices(g, MAX_ENUMERATION_RANK + 1)


@pytest.mark.parametrize("rank", [1, 2, 3])
@pytest.mark.parametrize("height", [2, 5, 8])
def test_tubes_have_no_local_slices(rank, height):
    assert enumerate_local_slices(synthetic_tube(rank, height), rank) == []


def test_full_tube_ray_has_no_interior_violations():
    t = synthetic_tube(2, 6)
    ray = [f"t0.{j}" for j in range(1, 7)]
    assert presection_violations(t, ray) == []
    assert is_presection(t, ray) is Verdict.BOUNDARY


def test_short_tube_ray_fails_at_its_top():
    t = synthetic_tube(2, 6)
    ray = [f"t0.{j}" for j in range(1, 4)]
    assert ("t0.3", "P1") in presection_violations(t, ray)
    assert is_presection(t, ray) is Verdict.FALSE


def test_local_slice_needs_rank():
    g = build_zq(linear_quiver(2), 0, 3)
    g = g.replace(rank_hint=None)
    with pytest.raises(ValidationError):
        is_local_slice(g, ["1:1", "1:2"])


def test_local_slice_in_a2_window():
    g = build_zq(Quiver.from_edges([("1", "2")]), 0, 4)
    assert is_local_slice(g, ["2:2", "2:1"]) is Verdict.TRUE
    assert is_local_slice(g, ["2:1", "1:2"]) is Verdict.TRUE
    assert is_local_slice(g, ["2:1", "3:2"]) is Verdict.FALSE
