"""Presections, local sections, sections and local slices as predicates.

Predicates answer with a :class:`Verdict`.  A candidate touching a frontier
point of a truncated window gets ``Verdict.BOUNDARY``: the missing neighbours
could go either way, so no boolean is claimed.
"""

import enum
from collections import deque

from .errors import BoundaryError, ResourceError, ValidationError

MAX_ENUMERATION_RANK = 8


class Verdict(enum.Enum):
    TRUE = "true"
    FALSE = "false"
    BOUNDARY = "boundary-indeterminate"

    def __bool__(self):
        if self is Verdict.BOUNDARY:
            raise BoundaryError("verdict is boundary-indeterminate")
        return self is Verdict.TRUE

    @classmethod
    def of(cls, flag):
        return cls.TRUE if flag else cls.FALSE


def _points(g, s):
    s = frozenset(s)
    if not s:
        raise ValidationError("empty slice candidate")
    for p in s:
        g.point(p)
    return s


def _touches_frontier(g, s):
    return any(p in g.frontier for p in s)


def is_connected(g, s):
    s = set(s)
    start = min(s)
    seen = {start}
    todo = [start]
    while todo:
        x = todo.pop()
        for y in list(g.successors(x)) + list(g.predecessors(x)):
            if y in s and y not in seen:
                seen.add(y)
                todo.append(y)
    return len(seen) == len(s)


def presection_violations(g, s):
    """``(point, rule)`` pairs where (P1) or (P2) fails, checked at interior points of ``s`` only."""
    s = _points(g, s)
    bad = []
    for x in sorted(s):
        if x in g.frontier:
            continue
        for y in g.successors(x):
            if y not in s and g.tau_of(y) not in s:
                bad.append((x, "P1"))
                break
        for w in g.predecessors(x):
            if w not in s and g.tau_inverse(w) not in s:
                bad.append((x, "P2"))
                break
    return bad


def _escape(g, s, sectional):
    """Look for a path that leaves ``s`` and comes back to it.

    Returns True if one exists, False if not, None if the search ran into the
    frontier (where the continuation is unknown).
    """
    top = None
    if g.levels_monotone:
        top = max(g.level(p) for p in s)
    hit_frontier = False
    seen = set()
    todo = deque()
    for x in sorted(s):
        for y in g.successors(x):
            if y not in s:
                state = (x, y) if sectional else y
                if state not in seen:
                    seen.add(state)
                    todo.append((x, y))
    while todo:
        prev, cur = todo.popleft()
        if top is not None and g.level(cur) > top:
            continue
        if cur in g.frontier:
            hit_frontier = True
            continue
        for nxt in g.successors(cur):
            if sectional and g.tau_of(nxt) == prev:
                continue
            if nxt in s:
                return True
            state = (cur, nxt) if sectional else nxt
            if state not in seen:
                seen.add(state)
                todo.append((cur, nxt))
    return None if hit_frontier else False


def is_presection(g, s) -> Verdict:
    s = _points(g, s)
    if _touches_frontier(g, s):
        return Verdict.BOUNDARY
    return Verdict.of(is_connected(g, s) and not presection_violations(g, s))


def is_sectionally_convex(g, s) -> Verdict:
    s = _points(g, s)
    found = _escape(g, s, sectional=True)
    if found is None:
        return Verdict.BOUNDARY
    return Verdict.of(not found)


def is_local_section(g, s) -> Verdict:
    s = _points(g, s)
    pre = is_presection(g, s)
    if pre is not Verdict.TRUE:
        return pre
    return is_sectionally_convex(g, s)


def _acyclic(g, s):
    indeg = {p: 0 for p in s}
    for p in s:
        for t in g.successors(p):
            if t in s:
                indeg[t] += 1
    ready = [p for p, d in indeg.items() if d == 0]
    count = 0
    while ready:
        p = ready.pop()
        count += 1
        for t in g.successors(p):
            if t in s:
                indeg[t] -= 1
                if indeg[t] == 0:
                    ready.append(t)
    return count == len(s)


def orbit_hits(g, s):
    """Number of points of ``s`` on each tau-orbit of the component containing ``s``."""
    s = _points(g, s)
    component = next(c for c in g.components() if s & c)
    hits = {}
    for orbit in g.tau_orbits():
        if orbit[0] in component:
            hits[orbit[0]] = sum(1 for p in orbit if p in s)
    return hits


def is_section(g, s) -> Verdict:
    s = _points(g, s)
    if _touches_frontier(g, s):
        return Verdict.BOUNDARY
    if not is_connected(g, s) or not _acyclic(g, s):
        return Verdict.FALSE
    if any(n != 1 for n in orbit_hits(g, s).values()):
        return Verdict.FALSE
    found = _escape(g, s, sectional=False)
    if found is None:
        return Verdict.BOUNDARY
    return Verdict.of(not found)


def is_local_slice(g, s) -> Verdict:
    if g.rank_hint is None:
        raise ValidationError("is_local_slice needs a rank_hint on the translation quiver")
    s = _points(g, s)
    if _touches_frontier(g, s):
        return Verdict.BOUNDARY
    if len(s) != g.rank_hint:
        return Verdict.FALSE
    return is_local_section(g, s)


def connected_subsets(g, k, allowed=None):
    """Connected ``k``-subsets of ``allowed`` (default: all points), each exactly once."""
    nodes = [p for p in g.ids if allowed is None or p in allowed]
    index = {p: i for i, p in enumerate(nodes)}
    adj = {p: set() for p in nodes}
    for s, t in g.arrows:
        if s in index and t in index and s != t:
            adj[s].add(t)
            adj[t].add(s)

    def extend(sub, border, ext, root):
        if len(sub) == k:
            yield frozenset(sub)
            return
        ext = sorted(ext, key=index.get)
        while ext:
            w = ext.pop(0)
            fresh = {u for u in adj[w] if index[u] > index[root] and u not in sub and u not in border}
            yield from extend(sub | {w}, border | adj[w], ext + sorted(fresh - set(ext), key=index.get), root)

    for v in nodes:
        yield from extend({v}, adj[v] | {v}, {u for u in adj[v] if index[u] > index[v]}, v)


def _sort_key(s):
    return sorted(s)


def enumerate_local_slices(g, rank=None):
    """All fully interior local slices, sorted lexicographically on sorted point ids."""
    if rank is None:
        rank = g.rank_hint
    if rank is None:
        raise ValidationError("enumerate_local_slices needs a rank")
    if rank > MAX_ENUMERATION_RANK:
        raise ResourceError(f"rank {rank} exceeds the enumeration cap {MAX_ENUMERATION_RANK}")
    interior = {p for p in g.ids if p not in g.frontier}
    found = set()
    for s in connected_subsets(g, rank, interior):
        if presection_violations(g, s):
            continue
        if is_sectionally_convex(g, s) is Verdict.TRUE:
            found.add(s)
    return sorted((sorted(s) for s in found))
