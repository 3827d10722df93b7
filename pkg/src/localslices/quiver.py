"""Finite quivers (directed multigraphs with named arrows) and their classification."""

from collections import Counter, defaultdict, deque
from dataclasses import dataclass
from typing import NamedTuple, Optional

from .errors import ValidationError


class Arrow(NamedTuple):
    id: str
    source: str
    target: str


@dataclass(frozen=True)
class Quiver:
    vertices: tuple
    arrows: tuple

    def __init__(self, vertices, arrows):
        verts = tuple(str(v) for v in vertices)
        arrs = tuple(a if isinstance(a, Arrow) else Arrow(*(str(x) for x in a)) for a in arrows)
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "arrows", arrs)
        self._validate()

    def _validate(self):
        seen = set()
        for i, v in enumerate(self.vertices):
            if v in seen:
                raise ValidationError(f"duplicate vertex id {v!r}", pointer=f"/vertices/{i}")
            seen.add(v)
        ids = set()
        for i, a in enumerate(self.arrows):
            if a.id in ids:
                raise ValidationError(f"duplicate arrow id {a.id!r}", pointer=f"/arrows/{i}/id")
            ids.add(a.id)
            for end, key in ((a.source, "from"), (a.target, "to")):
                if end not in seen:
                    raise ValidationError(
                        f"arrow {a.id!r} has undeclared endpoint {end!r}", pointer=f"/arrows/{i}/{key}"
                    )

    @classmethod
    def from_edges(cls, edges, vertices=None, prefix="a"):
        """Build from ``(source, target)`` pairs, naming arrows ``a1, a2, ...``."""
        edges = [(str(s), str(t)) for s, t in edges]
        if vertices is None:
            vertices = []
            for s, t in edges:
                for x in (s, t):
                    if x not in vertices:
                        vertices.append(x)
        return cls(vertices, [Arrow(f"{prefix}{i + 1}", s, t) for i, (s, t) in enumerate(edges)])

    def arrow(self, arrow_id):
        for a in self.arrows:
            if a.id == arrow_id:
                return a
        raise KeyError(arrow_id)

    def arrows_from(self, v):
        return [a for a in self.arrows if a.source == v]

    def arrows_to(self, v):
        return [a for a in self.arrows if a.target == v]

    def opposite(self):
        return Quiver(self.vertices, [Arrow(a.id, a.target, a.source) for a in self.arrows])

    def without_arrows(self, arrow_ids):
        drop = set(arrow_ids)
        return Quiver(self.vertices, [a for a in self.arrows if a.id not in drop])

    def topological_order(self):
        """Vertices in a topological order (ties by declaration order); ``None`` if cyclic."""
        indeg = Counter(a.target for a in self.arrows)
        pos = {v: i for i, v in enumerate(self.vertices)}
        ready = sorted((v for v in self.vertices if indeg[v] == 0), key=pos.get)
        out = []
        while ready:
            v = ready.pop(0)
            out.append(v)
            for a in self.arrows_from(v):
                indeg[a.target] -= 1
                if indeg[a.target] == 0:
                    ready.append(a.target)
                    ready.sort(key=pos.get)
        return out if len(out) == len(self.vertices) else None

    def neighbours(self):
        nb = defaultdict(set)
        for a in self.arrows:
            nb[a.source].add(a.target)
            nb[a.target].add(a.source)
        return nb

    def tree_distance(self, u, v):
        """Edge count of the shortest walk in the underlying graph."""
        nb = self.neighbours()
        dist = {u: 0}
        todo = deque([u])
        while todo:
            x = todo.popleft()
            if x == v:
                return dist[x]
            for y in sorted(nb[x]):
                if y not in dist:
                    dist[y] = dist[x] + 1
                    todo.append(y)
        raise ValidationError(f"{u!r} and {v!r} are not connected")

    def path_count(self, u, v):
        """Number of directed paths from ``u`` to ``v`` (acyclic quivers only)."""
        order = self.topological_order()
        if order is None:
            raise ValidationError("path_count needs an acyclic quiver")
        count = {x: 0 for x in self.vertices}
        count[u] = 1
        for x in order:
            if count[x]:
                for a in self.arrows_from(x):
                    count[a.target] += count[x]
        return count[v]


class Classification(NamedTuple):
    connected: bool
    acyclic: bool
    tree: bool
    dynkin: Optional[str]


def _is_connected(q):
    if not q.vertices:
        return True
    nb = q.neighbours()
    seen = {q.vertices[0]}
    todo = [q.vertices[0]]
    while todo:
        x = todo.pop()
        for y in nb[x]:
            if y not in seen:
                seen.add(y)
                todo.append(y)
    return len(seen) == len(q.vertices)


def dynkin_type(q):
    """ADE label such as ``'D4'`` of the underlying graph, or ``None``."""
    n = len(q.vertices)
    if n == 0 or not _is_connected(q):
        return None
    pairs = Counter(frozenset((a.source, a.target)) for a in q.arrows)
    if any(len(p) == 1 or c > 1 for p, c in pairs.items()):
        return None
    if len(pairs) != n - 1:
        return None
    nb = q.neighbours()
    degrees = sorted((len(nb[v]) for v in q.vertices), reverse=True)
    if n == 1 or degrees[0] <= 2:
        return f"A{n}"
    if degrees[0] > 3 or degrees[1] > 2:
        return None
    center = next(v for v in q.vertices if len(nb[v]) == 3)
    arms = []
    for start in sorted(nb[center]):
        length, prev, cur = 1, center, start
        while True:
            nxt = [y for y in nb[cur] if y != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            length += 1
        arms.append(length)
    p, q_, r = sorted(arms)
    if p == 1 and q_ == 1:
        return f"D{n}"
    if p == 1 and q_ == 2 and r in (2, 3, 4):
        return f"E{n}"
    return None


def classify(q: Quiver) -> Classification:
    connected = _is_connected(q)
    acyclic = q.topological_order() is not None
    edges = {frozenset((a.source, a.target)) for a in q.arrows}
    simple = len(edges) == len(q.arrows) and all(len(e) == 2 for e in edges)
    tree = connected and simple and len(q.arrows) == len(q.vertices) - 1
    return Classification(connected, acyclic, tree, dynkin_type(q))


def positive_root_count(label):
    """Number of positive roots of a simply laced Dynkin type."""
    kind, n = label[0], int(label[1:])
    if kind == "A":
        return n * (n + 1) // 2
    if kind == "D":
        return n * (n - 1)
    return {6: 36, 7: 63, 8: 120}[n]


def linear_quiver(n, reverse=False):
    edges = [(str(i), str(i + 1)) for i in range(1, n)]
    if reverse:
        edges = [(t, s) for s, t in edges]
    return Quiver.from_edges(edges, vertices=[str(i) for i in range(1, n + 1)])


def d_quiver(n):
    """``D_n`` with arms 1-3-4-...-n and 2-3, all arrows pointing towards the high end."""
    edges = [("1", "3"), ("2", "3")] + [(str(i), str(i + 1)) for i in range(3, n)]
    return Quiver.from_edges(edges, vertices=[str(i) for i in range(1, n + 1)])
