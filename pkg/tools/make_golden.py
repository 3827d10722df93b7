"""Regenerate src/localslices/data/*.json from the hand transcriptions below.

Point ids of the finite figures are Loewy series written top/.../socle, with
the composition factors of a layer run together ("23" is the layer 2 3).
"""

import os

from localslices.io import dumps, presentation_to_json, translation_to_json
from localslices.presentation import Presentation
from localslices.quiver import Quiver
from localslices.translation import Point, TranslationQuiver

DATA = os.path.join(os.path.dirname(__file__), "..", "src", "localslices", "data")


def with_orbits(kind, levels, arrows, tau, **kw):
    tmp = TranslationQuiver(kind, [Point(p, p, n) for p, n in levels], arrows, tau, **kw)
    orbit_of = {p: c[0] for c in tmp.tau_orbits() for p in c}
    return tmp.replace(points=[Point(p, orbit_of[p], n) for p, n in levels])


def write(name, doc, note):
    doc["note"] = note
    with open(os.path.join(DATA, f"{name}.json"), "w", encoding="utf-8") as fh:
        fh.write(dumps(doc))


def figure1():
    levels = [
        ("1", 0), ("3/21", 1), ("3/2", 2), ("3/1", 2), ("4/3/2", 3), ("3", 3), ("5/3/1", 3),
        ("4/3", 4), ("5/3", 4), ("45/3", 5), ("5", 6), ("4", 6), ("2/5", 7), ("2", 8),
    ]
    arrows = [
        ("1", "3/21"), ("2", "3/21"), ("3/21", "3/2"), ("3/21", "3/1"), ("3/2", "4/3/2"), ("3/2", "3"),
        ("3/1", "3"), ("3/1", "5/3/1"), ("4/3/2", "4/3"), ("3", "4/3"), ("3", "5/3"), ("5/3/1", "5/3"),
        ("4/3", "45/3"), ("5/3", "45/3"), ("45/3", "5"), ("45/3", "4"), ("5", "2/5"), ("2/5", "2"),
    ]
    tau = [
        ("3", "3/21"), ("4/3", "3/2"), ("5/3", "3/1"), ("45/3", "3"), ("5", "4/3"), ("4", "5/3"),
        ("2", "5"), ("3/2", "1"), ("3/1", "2"),
    ]
    g = with_orbits("transcribed", levels, arrows, tau, rank_hint=5, labels={p: p for p, _ in levels})
    sets = {
        "Sigma": ["3/21", "3/2", "4/3/2", "3/1", "5/3/1"],
        "Sigma_prime": ["2/5", "5", "45/3", "5/3", "5/3/1"],
    }
    write("figure1", translation_to_json(g, sets),
          "AR quiver of a bound quiver algebra with five simples; the two drawn copies of the simple 2 are one point")


def figure2():
    center = ["1", "23/1", "4/23", "4"]
    arms = {
        "top": ["2/1", "3", "4/2", "tauT2"],
        "mid": ["tauT4", "4/23/1", "tauT1", "1/4"],
        "bot": ["3/1", "2", "4/3", "tauT3"],
    }
    levels = [(c, 2 * k) for k, c in enumerate(center)]
    for row in arms.values():
        levels += [(p, 2 * k + 1) for k, p in enumerate(row)]
    levels.sort(key=lambda e: (e[1], e[0]))
    arrows, tau = [], []
    for k in range(4):
        for row in arms.values():
            arrows.append((center[k], row[k]))
            arrows.append((row[k], center[(k + 1) % 4]))
    for k in range(4):
        tau.append((center[k], center[k - 1]))
        for row in arms.values():
            tau.append((row[k], row[k - 1]))
    marked = ["tauT1", "tauT2", "tauT3", "tauT4"]
    labels = {p: p for p, _ in levels}
    g = with_orbits("quotient-cyclic", levels, arrows, tau, rank_hint=4, marked=marked, labels=labels)
    write("figure2", translation_to_json(g), "AR quiver of a cluster category of type D4; marked points are tau of the tilting summands")


def figure3():
    q = Quiver(["1", "2", "3", "4"], [
        ("alpha", "4", "2"), ("beta", "2", "1"), ("gamma", "4", "3"), ("delta", "3", "1"), ("epsilon", "1", "4"),
    ])
    b = Presentation(q, [
        {("alpha", "beta"): 1, ("gamma", "delta"): -1}, {("beta", "epsilon"): 1}, {("delta", "epsilon"): 1},
        {("epsilon", "alpha"): 1}, {("epsilon", "gamma"): 1},
    ])
    c1 = Presentation(q.without_arrows(["epsilon"]), [{("alpha", "beta"): 1, ("gamma", "delta"): -1}])
    c2 = Presentation(q.without_arrows(["alpha", "gamma"]), [{("beta", "epsilon"): 1}, {("delta", "epsilon"): 1}])
    c3 = Presentation(q.without_arrows(["beta", "delta"]), [{("epsilon", "alpha"): 1}, {("epsilon", "gamma"): 1}])
    doc = {
        "format": "localslices/1", "type": "figure-bundle",
        "presentations": {k: presentation_to_json(v) for k, v in {"B": b, "C1": c1, "C2": c2, "C3": c3}.items()},
        "slices": {
            "Sigma1": ["4/23/1", "4/23", "4/2", "4/3"],
            "Sigma2": ["1/4", "1", "2/1", "3/1"],
            "Sigma3": ["4/2", "4/3", "4", "1/4"],
        },
        "pairs": {"Sigma1": "C1", "Sigma2": "C2", "Sigma3": "C3"},
    }
    write("figure3", doc, "the D4 cluster-tilted algebra, its three tilted quotients and their local slices (ids from figure2)")


def example51():
    lo, hi = -3, 8
    levels, arrows, tau = [], [], []
    for k in range(lo, hi + 1):
        levels += [(f"c{k}", k), (f"b{k}", k), (f"a{k}", k)]
        arrows += [(f"c{k}", f"b{k}"), (f"c{k}", f"a{k}"), (f"b{k}", f"a{k}")]
        if k < hi:
            arrows += [(f"b{k}", f"c{k + 1}"), (f"a{k}", f"b{k + 1}"), (f"a{k}", f"c{k + 1}")]
        if k > lo:
            tau += [(f"{o}{k}", f"{o}{k - 1}") for o in "cba"]
    frontier = [f"{o}{k}" for k in (lo, hi) for o in "abc"]
    labels = {"a1": "M", "b2": "P1", "c3": "P2", "b1": "tauT1", "c2": "tauT2"}
    g = TranslationQuiver("transcribed", [Point(p, p[0], n) for p, n in levels], arrows, tau, rank_hint=3,
                          marked=["b1", "c2"], frontier=frontier, labels=labels)
    write("example51", translation_to_json(g),
          "window of a transjective component of a cluster-tilted algebra of Euclidean type A2~; M = rad P1; marked points are deleted")


if __name__ == "__main__":
    os.makedirs(DATA, exist_ok=True)
    figure1()
    figure2()
    figure3()
    example51()
