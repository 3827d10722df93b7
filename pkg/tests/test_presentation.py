from fractions import Fraction

import pytest

from localslices import Presentation, Quiver, ValidationError, equivalent, linear_quiver
from localslices.presentation import deduplicate, find_equivalence, kernel_relations

SQUARE = Quiver(["1", "2", "3", "4"], [("a", "1", "2"), ("b", "2", "4"), ("c", "1", "3"), ("d", "3", "4")])


def pres(rels, q=SQUARE):
    return Presentation(q, [[(tuple(p.split(".")), Fraction(c)) for p, c in r] for r in rels])


def test_commutativity_up_to_arrow_scaling():
    assert equivalent(pres([[("a.b", 1), ("c.d", -1)]]), pres([[("a.b", 2), ("c.d", 5)]]))


def test_zero_relation_differs_from_commutativity():
    assert not equivalent(pres([[("a.b", 1), ("c.d", -1)]]), pres([[("a.b", 1)]]))
    assert not equivalent(pres([[("a.b", 1)], [("c.d", 1)]]), pres([[("a.b", 1), ("c.d", -1)]]))


def test_equivalence_through_vertex_relabelling():
    other = Quiver(["w", "x", "y", "z"], [("p", "w", "x"), ("q", "x", "z"), ("r", "w", "y"), ("s", "y", "z")])
    left = pres([[("c.d", 1)]])
    right = pres([[("p.q", 1)]], other)
    vmap, amap = find_equivalence(left, right)
    assert vmap["1"] == "w" and amap["c"] in ("p", "r")


def test_relation_validation():
    with pytest.raises(ValidationError):
        pres([[("a", 1)]])
    with pytest.raises(ValidationError):
        pres([[("a.b", 1), ("c", 1)]])
    with pytest.raises(ValidationError):
        pres([[("a.b", 0)]])


def test_nilpotency_index():
    q = linear_quiver(4)
    assert Presentation(q, [[(("a1", "a2"), 1)], [(("a2", "a3"), 1)]]).nilpotency_index() == 2
    assert Presentation(q, [[(("a1", "a2"), 1)]]).nilpotency_index() == 3  # a2.a3 survives
    assert Presentation(q, []).nilpotency_index() == 4


def test_kernel_of_radical_square_zero():
    q = linear_quiver(4)
    basis = [(v,) for v in q.vertices] + [(a.id,) for a in q.arrows]
    index = {b: i for i, b in enumerate(basis)}

    def image(path):
        vec = [0] * len(basis)
        if len(path) == 1:
            vec[index[path]] = 1
        return vec

    rels, top = kernel_relations(q, image, len(basis))
    assert top == 2
    got = Presentation(q, rels, top)
    assert equivalent(got, Presentation(q, [[(("a1", "a2"), 1)], [(("a2", "a3"), 1)]]))


def test_deduplicate_keeps_first():
    p1 = pres([[("a.b", 1), ("c.d", -1)]])
    p2 = pres([[("a.b", 3), ("c.d", 1)]])
    p3 = pres([[("a.b", 1)]])
    assert deduplicate([p1, p2, p3, p1]) == [0, 2]
