"""Finite translation quivers: windows of ZQ, orbit quotients, deletions, tubes.

Points carry an opaque string id, an orbit id and an integer level.  Points
in ``frontier`` sit at the edge of a truncated window: some of their
neighbours or translates are missing, so local predicates cannot be decided
there.
"""

from collections import defaultdict
from dataclasses import dataclass, field
from functools import cached_property
from typing import NamedTuple, Optional

from .errors import ValidationError
from .quiver import Quiver

KINDS = ("zq-window", "quotient-cyclic", "deleted", "transcribed", "tube")


class Point(NamedTuple):
    id: str
    orbit: str
    level: int


def zq_id(level, vertex):
    return f"{level}:{vertex}"


def parse_zq_id(point_id):
    level, _, vertex = point_id.partition(":")
    return int(level), vertex


@dataclass(frozen=True, eq=False)
class TranslationQuiver:
    kind: str
    points: tuple
    arrows: tuple
    tau: tuple  # pairs (p, tau p)
    rank_hint: Optional[int] = None
    marked: frozenset = frozenset()
    frontier: frozenset = frozenset()
    labels: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValidationError(f"unknown translation quiver kind {self.kind!r}", pointer="/kind")
        pts = tuple(p if isinstance(p, Point) else Point(str(p[0]), str(p[1]), int(p[2])) for p in self.points)
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "arrows", tuple((str(s), str(t)) for s, t in self.arrows))
        object.__setattr__(self, "tau", tuple((str(s), str(t)) for s, t in self.tau))
        object.__setattr__(self, "marked", frozenset(self.marked))
        object.__setattr__(self, "frontier", frozenset(self.frontier))
        index = {}
        for i, p in enumerate(pts):
            if p.id in index:
                raise ValidationError(f"duplicate point id {p.id!r}", pointer=f"/points/{i}/id", point=p.id)
            index[p.id] = p
        object.__setattr__(self, "_index", index)
        object.__setattr__(self, "_ids", tuple(p.id for p in pts))
        succ, pred = defaultdict(list), defaultdict(list)
        seen = set()
        for i, (s, t) in enumerate(self.arrows):
            for end in (s, t):
                if end not in index:
                    raise ValidationError(f"arrow endpoint {end!r} is not a point", pointer=f"/arrows/{i}", point=end)
            if (s, t) in seen:
                raise ValidationError(f"repeated arrow {s}->{t}", pointer=f"/arrows/{i}", point=s)
            seen.add((s, t))
            succ[s].append(t)
            pred[t].append(s)
        object.__setattr__(self, "_succ", dict(succ))
        object.__setattr__(self, "_pred", dict(pred))
        tau_map, tau_inv = {}, {}
        for i, (s, t) in enumerate(self.tau):
            for end in (s, t):
                if end not in index:
                    raise ValidationError(f"tau endpoint {end!r} is not a point", pointer=f"/tau/{i}", point=end)
            if s in tau_map:
                raise ValidationError(f"tau defined twice at {s!r}", pointer=f"/tau/{i}", point=s)
            if t in tau_inv:
                raise ValidationError(f"tau is not injective at {t!r}", pointer=f"/tau/{i}", point=s)
            tau_map[s] = t
            tau_inv[t] = s
        object.__setattr__(self, "_tau", tau_map)
        object.__setattr__(self, "_tau_inv", tau_inv)
        for m in self.marked | self.frontier:
            if m not in index:
                raise ValidationError(f"unknown point {m!r} in marked/frontier", point=m)

    # -- lookups -------------------------------------------------------------

    def __contains__(self, point_id):
        return point_id in self._index

    def __len__(self):
        return len(self.points)

    @property
    def ids(self):
        return self._ids

    def point(self, point_id):
        try:
            return self._index[point_id]
        except KeyError:
            raise ValidationError(f"unknown point {point_id!r}", point=point_id) from None

    def level(self, point_id):
        return self.point(point_id).level

    def orbit(self, point_id):
        return self.point(point_id).orbit

    def successors(self, p):
        return self._succ.get(p, [])

    def predecessors(self, p):
        return self._pred.get(p, [])

    def tau_of(self, p):
        return self._tau.get(p)

    def tau_inverse(self, p):
        return self._tau_inv.get(p)

    def has_arrow(self, s, t):
        return t in self._succ.get(s, ())

    @cached_property
    def levels_monotone(self):
        """True when no arrow goes down a level, so paths can be cut off by level."""
        return all(self._index[s].level <= self._index[t].level for s, t in self.arrows)

    def is_interior(self, p):
        self.point(p)
        return p not in self.frontier

    def label(self, p):
        return self.labels.get(p, p)

    def by_label(self, label):
        hits = [p for p, lab in self.labels.items() if lab == label]
        if len(hits) != 1:
            raise ValidationError(f"label {label!r} matches {len(hits)} points")
        return hits[0]

    def tau_orbits(self):
        """Classes of the equivalence relation generated by ``p ~ tau p``."""
        parent = {p.id: p.id for p in self.points}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for s, t in self.tau:
            a, b = find(s), find(t)
            if a != b:
                parent[max(a, b)] = min(a, b)
        classes = defaultdict(list)
        for p in self.ids:
            classes[find(p)].append(p)
        return sorted((sorted(c) for c in classes.values()), key=lambda c: c[0])

    def components(self):
        parent = {p: p for p in self.ids}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for s, t in self.arrows:
            a, b = find(s), find(t)
            if a != b:
                parent[max(a, b)] = min(a, b)
        comps = defaultdict(set)
        for p in self.ids:
            comps[find(p)].add(p)
        return list(comps.values())

    def mesh_violations(self):
        """Points ``z`` where arrows into ``z`` do not match arrows out of ``tau z``."""
        bad = []
        for z, tz in self._tau.items():
            if z in self.frontier or tz in self.frontier:
                continue
            if set(self.predecessors(z)) != set(self.successors(tz)):
                bad.append(z)
        return sorted(bad)

    def structure_violations(self):
        """Mesh failures plus tau leaving its orbit or (for ZQ windows) its level rule."""
        bad = set(self.mesh_violations())
        for z, tz in self._tau.items():
            if self.orbit(z) != self.orbit(tz):
                bad.add(z)
            elif self.kind == "zq-window" and self.level(tz) != self.level(z) - 1:
                bad.add(z)
        return sorted(bad)

    def check(self):
        bad = self.structure_violations()
        if bad:
            raise ValidationError(f"translation quiver axioms fail at {bad[0]!r}", point=bad[0])
        return self

    def replace(self, **changes):
        data = dict(
            kind=self.kind, points=self.points, arrows=self.arrows, tau=self.tau, rank_hint=self.rank_hint,
            marked=self.marked, frontier=self.frontier, labels=dict(self.labels),
        )
        data.update(changes)
        return TranslationQuiver(**data)


# -- constructions ---------------------------------------------------------


def build_zq(q: Quiver, lo: int, hi: int) -> TranslationQuiver:
    """The window of ZQ on levels ``lo..hi``.

    Point ``(n, v)`` is named ``"n:v"``.  For every arrow ``u -> v`` of ``q``
    there are arrows ``(n,u) -> (n,v)`` and ``(n,v) -> (n+1,u)``, and
    ``tau(n,v) = (n-1,v)``.
    """
    order = q.topological_order()
    if order is None:
        raise ValidationError("ZQ needs an acyclic quiver")
    if lo > hi:
        raise ValidationError(f"empty window [{lo}, {hi}]")
    if not q.vertices:
        raise ValidationError("ZQ of the empty quiver")
    points = [Point(zq_id(n, v), v, n) for n in range(lo, hi + 1) for v in order]
    arrows = []
    for n in range(lo, hi + 1):
        for a in q.arrows:
            arrows.append((zq_id(n, a.source), zq_id(n, a.target)))
            if n + 1 <= hi:
                arrows.append((zq_id(n, a.target), zq_id(n + 1, a.source)))
    tau = [(zq_id(n, v), zq_id(n - 1, v)) for n in range(lo + 1, hi + 1) for v in order]
    frontier = {zq_id(n, v) for n in {lo, hi} for v in order}
    return TranslationQuiver("zq-window", points, arrows, tau, rank_hint=len(q.vertices), frontier=frontier)


def quotient_by_automorphism(g: TranslationQuiver, phi, prefer=None) -> TranslationQuiver:
    """Identify points of a window along a free automorphism ``phi``.

    ``phi`` maps a point id to a point id, or to ``None`` when the image
    falls outside the window.  ``prefer`` optionally names one representative
    per orbit; otherwise the lowest point of each class represents it.
    """
    parent = {p: p for p in g.ids}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for p in g.ids:
        img = phi(p)
        if img is None:
            continue
        if img == p:
            raise ValidationError(f"automorphism fixes {p!r}", point=p)
        if img not in g:
            continue
        a, b = find(p), find(img)
        if a != b:
            parent[max(a, b)] = min(a, b)
    classes = defaultdict(list)
    for p in g.ids:
        classes[find(p)].append(p)
    prefer = set(prefer) if prefer is not None else None
    order = {p: i for i, p in enumerate(g.ids)}
    rep_of = {}
    for members in classes.values():
        if prefer is not None:
            chosen = [m for m in members if m in prefer]
            if len(chosen) != 1:
                raise ValidationError(f"orbit of {members[0]!r} has {len(chosen)} preferred representatives")
            rep = chosen[0]
        else:
            rep = min(members, key=lambda m: (g.level(m), order[m]))
        if all(m in g.frontier for m in members):
            raise ValidationError(f"window too small: orbit of {rep!r} has no interior member", point=rep)
        for m in members:
            rep_of[m] = rep
    arrows, tau = set(), {}
    for p in g.ids:
        if p in g.frontier:
            continue
        for t in g.successors(p):
            arrows.add((rep_of[p], rep_of[t]))
        for s in g.predecessors(p):
            arrows.add((rep_of[s], rep_of[p]))
        tp = g.tau_of(p)
        if tp is not None:
            prev = tau.setdefault(rep_of[p], rep_of[tp])
            if prev != rep_of[tp]:
                raise ValidationError(f"automorphism does not commute with tau at {p!r}", point=p)
    reps = [g.point(r) for r in g.ids if rep_of[r] == r]
    if prefer is not None:
        reps.sort(key=lambda pt: (pt.level, order[pt.id]))
    out = TranslationQuiver(
        "quotient-cyclic", reps, sorted(arrows, key=lambda e: (order[e[0]], order[e[1]])),
        sorted(tau.items(), key=lambda e: order[e[0]]), rank_hint=g.rank_hint,
    )
    orbit_of = {}
    for orbit in out.tau_orbits():
        if any(out.tau_of(p) is None for p in orbit):
            raise ValidationError(f"window too small: tau orbit of {orbit[0]!r} is not a cycle", point=orbit[0])
        for p in orbit:
            orbit_of[p] = orbit[0]
    # phi may permute the orbits of g, so orbit names are recomputed
    return out.replace(points=[Point(p.id, orbit_of[p.id], p.level) for p in out.points])


def delete_points(g: TranslationQuiver, marked) -> TranslationQuiver:
    """Full translation subquiver on the complement of ``marked``."""
    marked = set(marked)
    for m in marked:
        g.point(m)
    keep = [p for p in g.points if p.id not in marked]
    arrows = [(s, t) for s, t in g.arrows if s not in marked and t not in marked]
    tau = [(s, t) for s, t in g.tau if s not in marked and t not in marked]
    labels = {k: v for k, v in g.labels.items() if k not in marked}
    return TranslationQuiver(
        "deleted", keep, arrows, tau, rank_hint=g.rank_hint, frontier=g.frontier - marked, labels=labels,
    )


def tube_id(i, j):
    return f"t{i}.{j}"


def synthetic_tube(rank: int, height: int) -> TranslationQuiver:
    """Stable tube of the given rank truncated at quasi-length ``height``.

    Point ``(i, j)`` has position ``i`` mod ``rank`` and quasi-length ``j``.
    Arrows ``(i,j) -> (i,j+1)`` and ``(i,j+1) -> (i+1,j)``; ``tau(i,j) = (i-1,j)``.
    The top row is the frontier.
    """
    if rank < 1 or height < 2:
        raise ValidationError("synthetic_tube needs rank >= 1 and height >= 2")
    points = [Point(tube_id(i, j), f"row{j}", i) for j in range(1, height + 1) for i in range(rank)]
    arrows = set()
    for j in range(1, height):
        for i in range(rank):
            arrows.add((tube_id(i, j), tube_id(i, j + 1)))
            arrows.add((tube_id(i, j + 1), tube_id((i + 1) % rank, j)))
    tau = [(tube_id(i, j), tube_id((i - 1) % rank, j)) for j in range(1, height + 1) for i in range(rank)]
    frontier = {tube_id(i, height) for i in range(rank)}
    order = {p.id: k for k, p in enumerate(points)}
    return TranslationQuiver(
        "tube", points, sorted(arrows, key=lambda e: (order[e[0]], order[e[1]])), tau, rank_hint=rank,
        frontier=frontier,
    )


def is_sectional(g: TranslationQuiver, path) -> bool:
    """True iff no ``i`` has ``tau(x_{i+1}) == x_{i-1}``."""
    path = list(path)
    if not path:
        raise ValidationError("empty path")
    for s, t in zip(path, path[1:]):
        if not g.has_arrow(s, t):
            raise ValidationError(f"{s!r} -> {t!r} is not an arrow", point=s)
    return all(g.tau_of(path[i + 1]) != path[i - 1] for i in range(1, len(path) - 1))
