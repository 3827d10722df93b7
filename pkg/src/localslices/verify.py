"""Named property suites with machine-readable reports."""

import random
from typing import NamedTuple

from .cluster import enumerate_tilting, ext1_dim
from .derived import build_model
from .errors import LocalSlicesError, ValidationError
from .io import golden_raw, named_sets, translation_from_json
from .mesh import path_oracle_dim
from .quiver import Quiver, d_quiver, linear_quiver
from .repair import repair_for_point
from .slices import Verdict, enumerate_local_slices, is_local_section, is_local_slice, is_presection, is_section
from .tilted import build_algebra
from .translation import build_zq, synthetic_tube

SUITES = ("axioms", "mesh", "cluster", "tilted", "repair", "all")


class PropertyResult(NamedTuple):
    suite: str
    name: str
    passed: bool
    checked: int
    counterexample: object = None

    def to_json(self):
        return {
            "suite": self.suite, "property": self.name, "passed": self.passed, "checked": self.checked,
            "counterexample": self.counterexample,
        }


def random_acyclic_quiver(rng, n):
    """Connected acyclic quiver on ``n`` vertices: a random tree, sometimes with one extra edge."""
    edges = []
    for v in range(2, n + 1):
        u = rng.randrange(1, v)
        edges.append((u, v) if rng.random() < 0.5 else (v, u))
    if n >= 3 and rng.random() < 0.3:
        u, v = sorted(rng.sample(range(1, n + 1), 2))
        if (u, v) not in edges and (v, u) not in edges:
            edges.append((u, v))
    q = Quiver.from_edges(edges, vertices=[str(i) for i in range(1, n + 1)])
    if q.topological_order() is None:
        q = Quiver.from_edges(edges[:-1], vertices=[str(i) for i in range(1, n + 1)])
    return q


def random_connected_subset(rng, g, k):
    interior = [p for p in g.ids if p not in g.frontier]
    start = rng.choice(interior)
    chosen = [start]
    while len(chosen) < k:
        border = sorted({
            y for x in chosen for y in list(g.successors(x)) + list(g.predecessors(x))
            if y not in chosen and y not in g.frontier
        })
        if not border:
            return None
        chosen.append(rng.choice(border))
    return chosen


def check_equivalence_sample(rng, samples, max_vertices=6):
    """Presection, local section and section agree on random connected subsets of ZQ windows."""
    bad, done = None, 0
    while done < samples:
        q = random_acyclic_quiver(rng, rng.randint(1, max_vertices))
        g = build_zq(q, 0, 6)
        s = random_connected_subset(rng, g, len(q.vertices))
        if s is None:
            continue
        done += 1
        verdicts = (is_presection(g, s), is_local_section(g, s), is_section(g, s))
        if len(set(verdicts)) != 1 or Verdict.BOUNDARY in verdicts:
            bad = bad or {"quiver": [[a.source, a.target] for a in q.arrows], "set": s, "verdicts": [v.value for v in verdicts]}
    return done, bad


def _axioms(quivers, seed):
    out = []
    for name in ("figure1", "figure2", "example51"):
        try:
            translation_from_json(golden_raw(name))
            out.append(PropertyResult("axioms", f"golden {name} validates", True, 1))
        except ValidationError as err:
            out.append(PropertyResult("axioms", f"golden {name} validates", False, 1, {"point": err.point, "error": str(err)}))
    for label, g in quivers:
        bad = g.structure_violations()
        out.append(PropertyResult("axioms", f"translation axioms of {label}", not bad, len(g), {"points": bad} if bad else None))
    fig1 = golden_raw("figure1")
    g = translation_from_json(fig1)
    sets = named_sets(fig1)
    ok = all(is_local_slice(g, s) is Verdict.TRUE and is_section(g, s) is Verdict.FALSE for s in sets.values())
    out.append(PropertyResult("axioms", "figure1 local slices that are not sections", ok, len(sets)))
    rng = random.Random(seed)
    done, bad = check_equivalence_sample(rng, 200)
    out.append(PropertyResult("axioms", "presection, local section and section coincide in ZQ", bad is None, done, bad))
    tubes = [(r, h) for r in (1, 2, 3) for h in (2, 4, 6)]
    bad = [[r, h] for r, h in tubes if enumerate_local_slices(synthetic_tube(r, h), r)]
    out.append(PropertyResult("axioms", "tubes carry no local slice", not bad, len(tubes), bad or None))
    return out


def _mesh():
    out = []
    bad, count = None, 0
    for q in (linear_quiver(2), linear_quiver(3), d_quiver(4)):
        m = build_model(q)
        mc = m.mesh
        for v in q.vertices:
            x = f"0:{v}"
            for n in range(-1, mc.cone_depth(v) + 2):
                for w in q.vertices:
                    y = f"{n}:{w}"
                    count += 1
                    a, b = mc.hom_dim(x, y), path_oracle_dim(q, x, y)
                    if a != b and bad is None:
                        bad = {"source": x, "target": y, "mesh": a, "oracle": b}
        fd = m.fundamental_domain()
        serre = [(x, y) for x in fd for y in fd if mc.hom_dim(x, m.nu(y)) != mc.hom_dim(y, x)]
        out.append(PropertyResult("mesh", f"Serre duality on {q.vertices}", not serre, len(fd) ** 2, serre[:1] or None))
    out.insert(0, PropertyResult("mesh", "knitting ranks equal path/mesh oracle", bad is None, count, bad))
    return out


def _cluster():
    out = []
    for q in (linear_quiver(2), linear_quiver(3)):
        m = build_model(q)
        a, b = enumerate_tilting(m), enumerate_tilting(m, "naive")
        out.append(PropertyResult("cluster", f"clique and naive tilting enumerations agree for A{len(q.vertices)}",
                                  a == b, len(a), None if a == b else {"clique": len(a), "naive": len(b)}))
        fd = m.fundamental_domain()
        asym = [[x, y] for x in fd for y in fd if ext1_dim(m, x, y) != ext1_dim(m, y, x)]
        out.append(PropertyResult("cluster", f"Ext1 symmetry for A{len(q.vertices)}", not asym, len(fd) ** 2, asym[:1] or None))
    return out


def _tilted():
    out = []
    for q in (linear_quiver(3), d_quiver(4)):
        m = build_model(q)
        bad, count = None, 0
        for t in enumerate_tilting(m):
            alg = build_algebra(m, t)
            for s in alg.local_slices():
                count += 1
                ann = alg.annihilator(s)
                if ann.dim != ann.generated_dim or not alg.inherited_relations_agree(s, ann):
                    bad = bad or {"tilting": list(t), "slice": list(s), "ann": ann.dim, "generated": ann.generated_dim}
        out.append(PropertyResult("tilted", f"annihilators generated by arrows ({q.vertices})", bad is None, count, bad))
    return out


def _repair():
    out = []
    m = build_model(d_quiver(4))
    bad, count = None, 0
    for t in enumerate_tilting(m):
        alg = build_algebra(m, t)
        for p in alg.mod_quiver.ids:
            count += 1
            try:
                result, _ = repair_for_point(alg, p)
            except LocalSlicesError as err:
                bad = bad or {"tilting": list(t), "point": p, "error": str(err)}
                continue
            d = result.distances
            if any(a >= b for a, b in zip(d, d[1:])):
                bad = bad or {"tilting": list(t), "point": p, "distances": d}
    out.append(PropertyResult("repair", "section repair succeeds with strictly increasing distance (D4)", bad is None, count, bad))
    return out


def verify_suite(name, quivers=(), seed=0):
    """Run a suite; ``quivers`` is an optional list of ``(label, TranslationQuiver)`` to check axioms on."""
    if name not in SUITES:
        raise ValidationError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    runners = {
        "axioms": lambda: _axioms(quivers, seed), "mesh": _mesh, "cluster": _cluster,
        "tilted": _tilted, "repair": _repair,
    }
    names = [n for n in SUITES if n != "all"] if name == "all" else [name]
    results = []
    for n in names:
        results.extend(runners[n]())
    return results


__all__ = ["PropertyResult", "SUITES", "verify_suite"]
