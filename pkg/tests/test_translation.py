import pytest

from localslices import ValidationError, build_zq, d_quiver, delete_points, linear_quiver, quotient_by_automorphism, synthetic_tube
from localslices.translation import Point, TranslationQuiver, is_sectional, parse_zq_id, zq_id


def test_zq_window_shape():
    q = d_quiver(4)
    g = build_zq(q, 0, 3)
    assert len(g) == 16
    assert len(g.arrows) == 3 * 4 + 3 * 3
    assert g.structure_violations() == []
    assert g.tau_of("2:3") == "1:3" and g.tau_inverse("1:3") == "2:3"
    assert g.frontier == {zq_id(n, v) for n in (0, 3) for v in q.vertices}


def test_zq_mesh_matches_neighbours():
    # arrows into (n,v) come from tau(n,v)'s successors: exactly the Q-neighbours of v
    q = d_quiver(5)
    g = build_zq(q, -2, 4)
    nb = q.neighbours()
    for p in g.ids:
        if p in g.frontier:
            continue
        n, v = parse_zq_id(p)
        around = {parse_zq_id(x)[1] for x in g.predecessors(p)} | {parse_zq_id(x)[1] for x in g.successors(p)}
        assert around == set(nb[v])


def test_zq_rejects_cyclic_and_empty_window():
    from localslices import Quiver

    with pytest.raises(ValidationError):
        build_zq(Quiver.from_edges([("1", "2"), ("2", "1")]), 0, 2)
    with pytest.raises(ValidationError):
        build_zq(linear_quiver(2), 3, 1)


def test_mesh_violation_reported_with_point():
    g = build_zq(linear_quiver(3), 0, 4)
    arrows = [a for a in g.arrows if a != ("2:2", "2:3")]
    broken = g.replace(arrows=arrows)
    assert "2:3" in broken.structure_violations() or "3:2" in broken.structure_violations()
    with pytest.raises(ValidationError) as err:
        broken.check()
    assert err.value.point in broken.ids


def test_duplicate_tau_rejected():
    pts = [Point("a", "o", 0), Point("b", "o", 1)]
    with pytest.raises(ValidationError) as err:
        TranslationQuiver("transcribed", pts, [], [("b", "a"), ("b", "a")])
    assert err.value.point == "b"


def test_quotient_by_shift():
    g = build_zq(linear_quiver(2), 0, 6)

    def phi(p):
        n, v = parse_zq_id(p)
        img = zq_id(n + 3, v)
        return img if img in g else None

    c = quotient_by_automorphism(g, phi)
    assert len(c) == 6
    assert c.frontier == frozenset()
    assert c.structure_violations() == []
    assert all(c.tau_of(p) is not None for p in c.ids)


def test_delete_points_keeps_full_subquiver():
    g = build_zq(linear_quiver(3), 0, 4)
    d = delete_points(g, ["2:2"])
    assert "2:2" not in d and len(d) == len(g) - 1
    assert all("2:2" not in a for a in d.arrows)
    with pytest.raises(ValidationError):
        delete_points(g, ["9:9"])


@pytest.mark.parametrize("rank, height", [(1, 3), (2, 4), (3, 5)])
def test_tube_axioms(rank, height):
    t = synthetic_tube(rank, height)
    assert len(t) == rank * height
    assert t.structure_violations() == []
    assert all(t.tau_of(p) is not None for p in t.ids)


def test_sectional_paths():
    g = build_zq(linear_quiver(2), 0, 4)
    assert is_sectional(g, ["1:1", "1:2", "2:1"]) is False  # tau(2:1) = 1:1
    assert is_sectional(g, ["1:1", "1:2"])


def test_a2_unit_window():
    g = build_zq(linear_quiver(2), 0, 1)
    assert len(g) == 4
    assert set(g.arrows) == {("0:1", "0:2"), ("0:2", "1:1"), ("1:1", "1:2")}
    assert g.tau_of("1:1") == "0:1" and g.tau_of("1:2") == "0:2"


@pytest.mark.parametrize("k", [0, 1, 4, 7])
def test_a3_window_recount(k):
    # recount straight from the unfolding rule: per level one copy of each arrow,
    # plus one connecting arrow per arrow and per gap between consecutive levels
    g = build_zq(linear_quiver(3), 0, k)
    assert len(g) == 3 * (k + 1)
    assert len(g.arrows) == 2 * (k + 1) + 2 * k
