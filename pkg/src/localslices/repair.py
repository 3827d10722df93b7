"""Sections of ZQ through a point that avoid a forbidden set, and lifts of local slices.

A section of ZQ for a tree Q is a height function ``h`` on the vertices with
``|h(u) - h(v)| <= 1`` along edges in the right direction; it is stored as the
dict ``h`` and turned into point ids on demand.  The repair loop starts from
the level slice through ``M`` and repeatedly pushes the subtree behind each
nearest forbidden point one step away with ``tau`` or ``tau^-1``.
"""

from typing import NamedTuple

from .errors import AlgorithmFailure, BoundaryError, ValidationError
from .quiver import classify
from .slices import Verdict, enumerate_local_slices, is_local_slice, is_section
from .translation import parse_zq_id, zq_id


class RepairRound(NamedTuple):
    distance: int
    nearest: tuple  # forbidden section points at that distance
    moves: tuple  # (vertex, direction) per processed point; -1 is tau, +1 is tau^-1


class RepairResult(NamedTuple):
    section: tuple
    rounds: tuple

    @property
    def distances(self):
        return [r.distance for r in self.rounds]


def _points(h):
    return {v: zq_id(n, v) for v, n in h.items()}


def _subtree_beyond(q, root, cut_from):
    """Vertices reachable from ``root`` without crossing the edge to ``cut_from``."""
    nb = q.neighbours()
    seen = {root}
    todo = [root]
    while todo:
        x = todo.pop()
        for y in nb[x]:
            if y not in seen and not (x == root and y == cut_from):
                seen.add(y)
                todo.append(y)
    return seen


def section_through_avoiding(m, point, forbidden, max_rounds=None):
    """A section of ZQ containing ``point`` and disjoint from ``forbidden``.

    ``forbidden`` must be closed enough for the window (all F-translates of
    the relevant points that lie in it).  Raises AlgorithmFailure if the
    distance to the forbidden set fails to grow or the round cap is hit.
    """
    q = m.quiver
    if not classify(q).tree:
        raise ValidationError("section repair needs a tree quiver")
    forbidden = frozenset(forbidden)
    if point in forbidden:
        raise ValidationError(f"{point} is itself forbidden", point=point)
    n0, v0 = parse_zq_id(point)
    if v0 not in q.vertices:
        raise ValidationError(f"{point} is not a point of ZQ", point=point)
    rank = len(q.vertices)
    cap = rank * rank if max_rounds is None else max_rounds
    dist = {v: q.tree_distance(v0, v) for v in q.vertices}
    nb = q.neighbours()
    h = {v: n0 for v in q.vertices}
    window = m.window
    rounds = []
    while True:
        pts = _points(h)
        if any(p not in window or p in window.frontier for p in pts.values()):
            raise BoundaryError("section left the model window")
        verdict = is_section(window, pts.values())
        if verdict is not Verdict.TRUE:
            raise AlgorithmFailure(f"intermediate set {sorted(pts.values())} is not a section")
        if pts[v0] != point:
            raise AlgorithmFailure(f"{point} left the section")
        hits = [v for v in q.vertices if pts[v] in forbidden]
        if not hits:
            return RepairResult(tuple(sorted(pts.values())), tuple(rounds))
        if len(rounds) >= cap:
            raise AlgorithmFailure(f"section repair did not finish within {cap} rounds")
        d = min(dist[v] for v in hits)
        if rounds and d <= rounds[-1].distance:
            raise AlgorithmFailure(f"distance did not increase: {rounds[-1].distance} then {d}")
        nearest = sorted(v for v in hits if dist[v] == d)
        moves = []
        for v in nearest:
            n = h[v]
            for other in (zq_id(n - 1, v), zq_id(n + 1, v)):
                if other in forbidden:
                    raise AlgorithmFailure(f"{other} is forbidden next to the forbidden point {pts[v]}")
            parent = next(u for u in nb[v] if dist[u] == d - 1)
            direction = -1 if window.has_arrow(pts[parent], pts[v]) else 1
            for w in _subtree_beyond(q, v, parent):
                h[w] += direction
            moves.append((v, direction))
        rounds.append(RepairRound(d, tuple(pts[v] for v in nearest), tuple(moves)))


def forbidden_positions(alg):
    """All F-translates of the points ``tau T_x`` inside the model window."""
    m = alg.model
    out = set()
    for x in alg.tilting:
        base = m.tau(x)
        for k in range(-(m.hi - m.lo), m.hi - m.lo + 1):
            p = m.F(base, k)
            if p in m.window:
                out.add(p)
    return frozenset(out)


def repair_for_point(alg, point):
    """Run the repair at ``point`` of the module quiver and project the section down."""
    m = alg.model
    if point not in alg.mod_quiver:
        raise ValidationError(f"{point} is not a point of the module quiver", point=point)
    result = section_through_avoiding(m, point, forbidden_positions(alg))
    image = tuple(sorted(m.fd_rep(p)[0] for p in result.section))
    if len(set(image)) != m.rank or is_local_slice(alg.mod_quiver, image) is not Verdict.TRUE:
        raise AlgorithmFailure(f"projected section {list(image)} is not a local slice")
    return result, image


def lift_local_slice(alg, s):
    """A section of the model window mapping bijectively onto the local slice ``s``."""
    m = alg.model
    g = alg.mod_quiver
    s = sorted(s)
    if is_local_slice(g, s) is not Verdict.TRUE:
        raise ValidationError(f"{s} is not a local slice")
    mc = m.mesh
    lifted = {s[0]: s[0]}
    todo = [s[0]]
    members = set(s)
    while todo:
        c = todo.pop()
        n, v = parse_zq_id(lifted[c])
        around = [zq_id(*z) for z in mc.successors((n, v)) + mc.predecessors((n, v))]
        for t in list(g.successors(c)) + list(g.predecessors(c)):
            if t not in members or t in lifted:
                continue
            hits = [p for p in around if m.fd_rep(p)[0] == t]
            if len(hits) != 1:
                raise AlgorithmFailure(f"cannot lift the arrow between {c} and {t} uniquely")
            lifted[t] = hits[0]
            todo.append(t)
    section = tuple(sorted(lifted.values()))
    if len(section) != m.rank or is_section(m.window, section) is not Verdict.TRUE:
        raise AlgorithmFailure(f"lift {list(section)} is not a section")
    if set(section) & forbidden_positions(alg):
        raise AlgorithmFailure(f"lift {list(section)} meets a forbidden position")
    return section


def local_slices_through(g, point):
    """Local slices of ``g`` (a translation quiver or an algebra) containing ``point``."""
    if hasattr(g, "mod_quiver"):
        g = g.mod_quiver
    g.point(point)
    return [s for s in enumerate_local_slices(g) if point in s]
