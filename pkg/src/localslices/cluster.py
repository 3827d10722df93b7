"""The cluster category ``D / F`` at the level of orbit representatives.

Objects are points of the fundamental domain of a :class:`DerivedModel`.
``Hom_C(X, Y)`` is graded by ``i`` with piece ``Hom_D(X, F^i Y)``; only the
``i`` with ``F^i Y`` between ``X`` and ``nu X`` (levelwise) can contribute,
which gives a finite and certified scan range.
"""

from itertools import combinations
from typing import NamedTuple

import networkx as nx

from .errors import ResourceError, ValidationError
from .translation import parse_zq_id

MAX_TILTING_RANK = 6


class GradedHom(NamedTuple):
    grades: dict  # i -> dim Hom_D(X, F^i Y), nonzero entries only
    scan: tuple  # (first, last) grade examined

    @property
    def total(self):
        return sum(self.grades.values())


def _check_rep(m, x):
    if x not in m._fd_set():
        raise ValidationError(f"{x} is not a fundamental-domain representative", point=x)


def grade_range(m, x, y):
    """All ``i`` such that ``F^i y`` lies levelwise between ``x`` and ``nu x``."""
    a, v = parse_zq_id(x)
    b = a + m.nu.offset[v]
    lvl = lambda k: parse_zq_id(m.F(y, k))[0]
    k = 0
    while lvl(k) >= a:
        k -= 1
    while lvl(k) < a:
        k += 1
    first = last = k
    last -= 1
    while lvl(last + 1) <= b:
        last += 1
    return first, last


def cluster_hom(m, x, y):
    """Graded ``Hom_C(X, Y)``; ``x`` and ``y`` may be any points of ZQ."""
    first, last = grade_range(m, x, y)
    grades = {}
    for i in range(first, last + 1):
        fy = m.F(y, i)
        if not (m.is_interior(x) and m.is_interior(fy)):
            raise ResourceError(f"window too small to certify Hom({x}, F^{i} {y}); enlarge it")
        d = m.mesh.hom_dim(x, fy)
        if d:
            grades[i] = d
    return GradedHom(grades, (first, last))


def ext1_dim(m, x, y):
    return cluster_hom(m, x, m.shift(y)).total


def is_tilting(m, candidate):
    candidate = list(candidate)
    for x in candidate:
        _check_rep(m, x)
    if len(set(candidate)) != m.rank or len(candidate) != m.rank:
        return False
    return all(ext1_dim(m, x, y) == 0 for x in candidate for y in candidate)


def compatibility_graph(m):
    """Fundamental-domain points without self-extensions, joined when Ext^1 vanishes both ways."""
    fd = m.fundamental_domain()
    g = nx.Graph()
    rigid = [x for x in fd if ext1_dim(m, x, x) == 0]
    g.add_nodes_from(rigid)
    for x, y in combinations(rigid, 2):
        if ext1_dim(m, x, y) == 0 and ext1_dim(m, y, x) == 0:
            g.add_edge(x, y)
    return g


def _canonical(m, objs):
    order = {p: i for i, p in enumerate(m.fundamental_domain())}
    return tuple(sorted(objs, key=order.get))


def enumerate_tilting(m, method="clique"):
    """All tilting objects, each as a tuple of representatives in domain order; sorted."""
    if m.rank > MAX_TILTING_RANK:
        raise ResourceError(f"rank {m.rank} exceeds the tilting enumeration cap {MAX_TILTING_RANK}")
    order = {p: i for i, p in enumerate(m.fundamental_domain())}
    if method == "clique":
        g = compatibility_graph(m)
        found = [c for c in nx.enumerate_all_cliques(g) if len(c) == m.rank]
    elif method == "naive":
        found = [c for c in combinations(m.fundamental_domain(), m.rank) if is_tilting(m, c)]
    else:
        raise ValidationError(f"unknown enumeration method {method!r}")
    out = {_canonical(m, c) for c in found}
    return sorted(out, key=lambda t: [order[p] for p in t])


def projective_tilting(m):
    return _canonical(m, m.proj_pos.values())
