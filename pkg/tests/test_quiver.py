import pytest

from localslices import Quiver, ValidationError, classify, d_quiver, linear_quiver
from localslices.quiver import dynkin_type, positive_root_count


def test_from_edges_names_arrows_in_order():
    q = Quiver.from_edges([("x", "y"), ("y", "z")])
    assert [a.id for a in q.arrows] == ["a1", "a2"]
    assert q.vertices == ("x", "y", "z")


def test_undeclared_endpoint_points_at_arrow():
    with pytest.raises(ValidationError) as err:
        Quiver(["1"], [("a", "1", "2")])
    assert err.value.pointer == "/arrows/0/to"


def test_duplicate_vertex_rejected():
    with pytest.raises(ValidationError):
        Quiver(["1", "1"], [])


@pytest.mark.parametrize("q, label", [
    (linear_quiver(1), "A1"),
    (linear_quiver(5, reverse=True), "A5"),
    (d_quiver(4), "D4"),
    (d_quiver(6), "D6"),
    (Quiver.from_edges([("1", "2"), ("2", "3"), ("3", "4"), ("4", "5"), ("3", "6")]), "E6"),
])
def test_dynkin_labels(q, label):
    assert dynkin_type(q) == label
    assert classify(q).tree


def test_non_dynkin_and_cycles():
    kronecker = Quiver(["1", "2"], [("a", "1", "2"), ("b", "1", "2")])
    assert dynkin_type(kronecker) is None
    assert not classify(kronecker).tree
    cyc = Quiver.from_edges([("1", "2"), ("2", "3"), ("3", "1")])
    c = classify(cyc)
    assert c.connected and not c.acyclic and c.dynkin is None
    star = Quiver.from_edges([("0", str(i)) for i in range(1, 5)])
    assert dynkin_type(star) is None  # affine D4~


def test_positive_roots_closed_forms():
    # counts of positive roots: n(n+1)/2 for A_n, n(n-1) for D_n, 36/63/120 for E
    assert [positive_root_count(f"A{n}") for n in range(1, 6)] == [1, 3, 6, 10, 15]
    assert [positive_root_count(f"D{n}") for n in range(4, 7)] == [12, 20, 30]
    assert positive_root_count("E8") == 120


def test_paths_and_distance():
    q = d_quiver(4)
    assert q.path_count("1", "4") == 1
    assert q.path_count("4", "1") == 0
    assert q.tree_distance("1", "2") == 2
    assert q.opposite().path_count("4", "1") == 1
    assert [a.id for a in q.without_arrows(["a1"]).arrows] == ["a2", "a3"]
