"""Shared builders for the test-suite (independent of the code under test where possible)."""

from collections import Counter
from functools import lru_cache

import networkx as nx
from networkx.algorithms.isomorphism import DiGraphMatcher

from localslices import build_algebra, build_model, d_quiver, enumerate_tilting, equivalent, linear_quiver
from localslices import io
from localslices.presentation import find_equivalence


ACCEPTANCE_LINES = {}


def report(n, ok, detail):
    """Record and print one acceptance line; returns ``ok`` for asserting."""
    line = f"{'PASS' if ok else 'FAIL'} criterion {n:>2}: {detail}"
    ACCEPTANCE_LINES[n] = line
    print(line)
    return ok


@lru_cache(maxsize=None)
def model(name):
    kind, n = name[0], int(name[1:])
    return build_model(linear_quiver(n) if kind == "A" else d_quiver(n))


@lru_cache(maxsize=None)
def tilting(name):
    return tuple(enumerate_tilting(model(name)))


@lru_cache(maxsize=None)
def algebra(name, t):
    return build_algebra(model(name), t)


def figure3():
    doc = io.golden_raw("figure3")
    pres = {k: io.presentation_from_json(v) for k, v in doc["presentations"].items()}
    return pres, doc["slices"], doc["pairs"]


@lru_cache(maxsize=None)
def five_arrow_witnesses():
    """Tilting objects of the D4 model whose endomorphism algebra is the 5-arrow algebra B."""
    b = figure3()[0]["B"]
    return tuple(t for t in tilting("D4") if equivalent(algebra("D4", t).presentation, b))


def loewy_dimension(label):
    """Dimension vector of a module written by its Loewy layers, e.g. ``4/23/1``."""
    return Counter(ch for ch in label if ch.isdigit())


def _graph(g, marked=()):
    h = nx.DiGraph()
    for p in g.ids:
        h.add_node(p, marked=p in marked)
    for s, t in g.arrows:
        h.add_edge(s, t, kind="arrow")
    for s, t in g.tau:
        # tau edges never parallel an arrow in these quivers
        h.add_edge(s, t, kind="tau")
    return h


def translation_isomorphisms(g1, g2, marked1=(), marked2=()):
    """All isomorphisms of translation quivers ``g1 -> g2`` respecting the marked sets."""
    m = DiGraphMatcher(
        _graph(g1, set(marked1)), _graph(g2, set(marked2)),
        node_match=lambda a, b: a["marked"] == b["marked"],
        edge_match=lambda a, b: a["kind"] == b["kind"],
    )
    return list(m.isomorphisms_iter())


def figure2_matching(alg, vertex_map):
    """Isomorphism from the golden figure-2 window onto the computed cluster quiver.

    Only isomorphisms that send every module to a point with the same
    dimension vector (read through ``vertex_map``) are accepted.
    """
    fig2 = io.translation_from_json(io.golden_raw("figure2"))
    cq = alg.model.cluster_quiver()
    dims = {}
    for p in alg.mod_quiver.ids:
        dv = alg.module_action(p).dim_vector
        dims[p] = Counter({vertex_map[x]: n for x, n in dv.items() if n})
    for iso in translation_isomorphisms(fig2, cq, fig2.marked, alg.tau_t):
        if all(loewy_dimension(fig2.label(p)) == dims[q] for p, q in iso.items() if p not in fig2.marked):
            return iso
    return None


def vertex_map_to_golden(alg):
    b = figure3()[0]["B"]
    return find_equivalence(alg.presentation, b)
