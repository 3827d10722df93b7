import itertools

import pytest

from localslices import Quiver, ValidationError, build_model, d_quiver, knit, linear_quiver
from localslices.derived import is_zq_arrow
from localslices.translation import parse_zq_id

QUIVERS = {
    "A1": linear_quiver(1), "A3": linear_quiver(3), "A3r": linear_quiver(3, reverse=True),
    "A4alt": Quiver.from_edges([("1", "2"), ("3", "2"), ("3", "4")]),
    "D4": d_quiver(4), "D5": d_quiver(5),
    "E6": Quiver.from_edges([("1", "2"), ("2", "3"), ("4", "3"), ("4", "5"), ("3", "6")]),
}
ROOTS = {"A1": 1, "A3": 6, "A3r": 6, "A4alt": 10, "D4": 12, "D5": 20, "E6": 36}


def tits_form(q, x):
    idx = {v: i for i, v in enumerate(q.vertices)}
    return sum(c * c for c in x) - sum(x[idx[a.source]] * x[idx[a.target]] for a in q.arrows)


@pytest.mark.parametrize("name", sorted(QUIVERS))
def test_knitting_gives_positive_roots(name):
    # Gabriel: indecomposables <-> positive roots, i.e. positive vectors with q(x) = 1
    q = QUIVERS[name]
    k = knit(q)
    vecs = list(k.dim_vectors.values())
    assert len(vecs) == ROOTS[name]
    assert len(set(vecs)) == len(vecs)
    assert all(min(v) >= 0 and tits_form(q, v) == 1 for v in vecs)


def test_linear_a_dims_are_intervals():
    q = linear_quiver(4)
    vecs = set(knit(q).dim_vectors.values())
    intervals = {tuple(int(i <= t <= j) for t in range(4)) for i, j in itertools.combinations_with_replacement(range(4), 2)}
    assert vecs == intervals


def test_non_dynkin_rejected():
    with pytest.raises(ValidationError):
        knit(Quiver.from_edges([("0", str(i)) for i in range(1, 5)]))


@pytest.mark.parametrize("name, size", [("A1", 2), ("A3", 9), ("D4", 16), ("D5", 25)])
def test_fundamental_domain_size(name, size):
    # ind of the cluster category: positive roots plus the rank
    m = build_model(QUIVERS[name])
    fd = m.fundamental_domain()
    assert len(fd) == size == ROOTS[name] + len(QUIVERS[name].vertices)
    assert all(m.is_interior(p) for p in fd)


@pytest.mark.parametrize("name", ["A3", "A4alt", "D4", "D5"])
def test_automorphisms_preserve_arrows(name):
    q = QUIVERS[name]
    m = build_model(q)
    for auto in (m.nu, m.shift, m.F):
        for s, t in m.window.arrows:
            assert is_zq_arrow(q, auto(s), auto(t))
            assert is_zq_arrow(q, auto(s, -1), auto(t, -1))


@pytest.mark.parametrize("name", ["A3", "D4"])
def test_fd_rep_is_f_orbit_representative(name):
    m = build_model(QUIVERS[name])
    fd = set(m.fundamental_domain())
    for p in m.window.ids:
        if not m.is_interior(p):
            continue
        rep, k = m.fd_rep(p)
        assert rep in fd and m.F(p, k) == rep


def test_nakayama_of_linear_a():
    m = build_model(linear_quiver(3))
    # I_1 is the simple injective at the far end of the knitted component
    n, v = parse_zq_id(m.inj_pos["1"])
    assert m.dim_vectors[m.inj_pos["1"]] == (1, 1, 1)
    assert m.nu(m.proj_pos["1"]) == m.inj_pos["1"]
