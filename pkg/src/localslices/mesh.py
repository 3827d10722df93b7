"""Hom spaces of the mesh category of ZQ for a Dynkin quiver Q.

For a fixed source ``x`` the functor ``Hom(x, -)`` is built level by level:
``Hom(x, z)`` is the cokernel of ``Hom(x, tau z) -> sum over w -> z of Hom(x, w)``,
so every space comes with an explicit basis of path representatives and
every arrow with a matrix.  Everything is translation invariant, so one such
representation per vertex of Q (source at level 0) covers all of ZQ.

The knitting recursion ``h(z) = max(0, sum h(w) - h(tau z))`` is run alongside
and must agree with the ranks exactly.  :func:`path_oracle_dim` is an
independent brute-force check (all paths modulo all mesh insertions).
"""

import threading
from collections import defaultdict
from fractions import Fraction
from typing import NamedTuple

from .errors import AlgorithmFailure, BoundaryError, ResourceError, ValidationError
from .linalg import ONE, ZERO, add_scaled, mat_vec, quotient_map
from .translation import parse_zq_id, zq_id

DEFAULT_PATH_CAP = 10 ** 6


class MorphismVector(NamedTuple):
    source: str
    target: str
    coeffs: tuple

    def is_zero(self):
        return all(c == 0 for c in self.coeffs)

    def __add__(self, other):
        _same_ends(self, other)
        return MorphismVector(self.source, self.target, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def scale(self, c):
        return MorphismVector(self.source, self.target, tuple(c * a for a in self.coeffs))


def _same_ends(f, g):
    if (f.source, f.target) != (g.source, g.target):
        raise ValidationError(f"morphisms {f.source}->{f.target} and {g.source}->{g.target} differ in endpoints")


class HomSpace(NamedTuple):
    source: str
    target: str
    basis: tuple  # path representatives, each a tuple of point ids
    dim: int


class _Rep:
    """``Hom((0, src), -)`` as a representation of ZQ."""

    def __init__(self, dims, paths, mats, knitted, top):
        self.dims = dims
        self.paths = paths
        self.mats = mats
        self.knitted = knitted
        self.top = top


class MeshCategory:
    def __init__(self, q):
        order = q.topological_order()
        if order is None:
            raise ValidationError("mesh category needs an acyclic quiver")
        self.q = q
        self.order = order
        self.into = {v: [a.source for a in q.arrows if a.target == v] for v in q.vertices}
        self.out = {v: [a.target for a in q.arrows if a.source == v] for v in q.vertices}
        self._reps = {}
        self._locks = defaultdict(threading.Lock)
        self._guard = threading.Lock()

    # -- geometry of ZQ ------------------------------------------------------

    def predecessors(self, z):
        n, v = z
        return [(n, u) for u in self.into[v]] + [(n - 1, w) for w in self.out[v]]

    def successors(self, z):
        n, v = z
        return [(n, w) for w in self.out[v]] + [(n + 1, u) for u in self.into[v]]

    def _point(self, pid):
        n, v = parse_zq_id(pid)
        if v not in self.into:
            raise ValidationError(f"{pid!r} is not a point of ZQ", point=pid)
        return n, v

    # -- the representations -------------------------------------------------

    def _rep(self, src):
        rep = self._reps.get(src)
        if rep is not None:
            return rep
        with self._guard:
            lock = self._locks[src]
        with lock:
            rep = self._reps.get(src)
            if rep is None:
                rep = self._build(src)
                self._reps[src] = rep
        return rep

    def _build(self, src):
        start = (0, src)
        dims = {start: 1}
        paths = {start: [(start,)]}
        mats = {}
        knitted = {start: 1}
        n = 0
        top = 0
        while True:
            alive = False
            for v in self.order:
                z = (n, v)
                if z == start:
                    alive = True
                    continue
                preds = self.predecessors(z)
                tz = (n - 1, v)
                h = max(0, sum(knitted.get(p, 0) for p in preds) - knitted.get(tz, 0))
                blocks = [(p, dims[p]) for p in preds if dims.get(p)]
                total = sum(d for _, d in blocks)
                if total == 0:
                    if h:
                        raise AlgorithmFailure(f"knitting gives {h} at {zq_id(*z)} but no paths arrive")
                    continue
                rel = []
                for j in range(dims.get(tz, 0)):
                    row = []
                    for p, d in blocks:
                        m = mats[(tz, p)]
                        row.extend(m[i][j] for i in range(d))
                    rel.append(row)
                qm, kept = quotient_map(total, rel)
                if len(kept) != h:
                    raise AlgorithmFailure(
                        f"knitting recursion gives {h} but the mesh quotient has rank {len(kept)} "
                        f"at {zq_id(*z)} from source {src}"
                    )
                if h:
                    knitted[z] = h
                else:
                    continue
                dims[z] = len(kept)
                offset = 0
                owner = []
                for p, d in blocks:
                    mats[(p, z)] = [row[offset:offset + d] for row in qm]
                    owner.extend((p, i) for i in range(d))
                    offset += d
                paths[z] = [paths[owner[c][0]][owner[c][1]] + (z,) for c in kept]
                alive = True
                top = n
            if not alive and n > 0:
                break
            n += 1
        return _Rep(dims, paths, mats, knitted, top)

    # -- public queries (point ids) -------------------------------------------

    def _rel(self, x, y):
        a, v = self._point(x)
        b, w = self._point(y)
        return v, a, (b - a, w)

    def hom_dim(self, x, y):
        v, _, key = self._rel(x, y)
        return self._rep(v).dims.get(key, 0)

    def knitted_dim(self, x, y):
        v, _, key = self._rel(x, y)
        return self._rep(v).knitted.get(key, 0)

    def hom_basis(self, x, y):
        v, a, key = self._rel(x, y)
        rel_paths = self._rep(v).paths.get(key, [])
        basis = tuple(tuple(zq_id(n + a, w) for n, w in p) for p in rel_paths)
        return HomSpace(x, y, basis, len(basis))

    def cone_depth(self, v):
        """Highest level (relative to the source) with a nonzero Hom from ``(0, v)``."""
        return self._rep(v).top

    def identity(self, x):
        return MorphismVector(x, x, (ONE,))

    def zero(self, x, y):
        return MorphismVector(x, y, (ZERO,) * self.hom_dim(x, y))

    def basis_vector(self, x, y, i):
        d = self.hom_dim(x, y)
        if not 0 <= i < d:
            raise ValidationError(f"basis index {i} out of range for Hom({x}, {y}) of dimension {d}")
        return MorphismVector(x, y, tuple(ONE if j == i else ZERO for j in range(d)))

    def _push(self, v, a, vec, at, path):
        """Push ``vec`` in Hom(source, at) along ``path`` (relative coordinates)."""
        rep = self._rep(v)
        cur = at
        for pid in path:
            n, w = self._point(pid)
            nxt = (n - a, w)
            if nxt not in self.successors(cur):
                raise ValidationError(f"{zq_id(cur[0] + a, cur[1])} -> {pid} is not an arrow of ZQ")
            if not rep.dims.get(nxt):
                return None, nxt
            vec = mat_vec(rep.mats[(cur, nxt)], vec) if rep.dims.get(cur) else None
            if vec is None:
                return None, nxt
            cur = nxt
        return vec, cur

    def reduce_path(self, path):
        """Normal form of a path (sequence of point ids) as a MorphismVector."""
        path = list(path)
        if not path:
            raise ValidationError("empty path")
        x, y = path[0], path[-1]
        v, a, key = self._rel(x, y)
        vec, _ = self._push(v, a, [ONE], (0, v), path[1:])
        if vec is None:
            return self.zero(x, y)
        return MorphismVector(x, y, tuple(vec))

    def compose(self, f, g):
        """``f: x -> y`` then ``g: y -> z``; returns ``x -> z``."""
        if f.target != g.source:
            raise ValidationError(f"cannot compose {f.source}->{f.target} with {g.source}->{g.target}")
        x, y, z = f.source, f.target, g.target
        out = [ZERO] * self.hom_dim(x, z)
        if not out or f.is_zero() or g.is_zero():
            return MorphismVector(x, z, tuple(out))
        v, a, ykey = self._rel(x, y)
        for c, path in zip(g.coeffs, self.hom_basis(y, z).basis):
            if c:
                vec, _ = self._push(v, a, list(f.coeffs), ykey, path[1:])
                if vec is not None:
                    add_scaled(out, vec, c)
        return MorphismVector(x, z, tuple(out))

    def transport(self, f, auto, power=1):
        """Image of ``f`` under a point automorphism of ZQ (e.g. ``F``)."""
        if power == 0:
            return f
        x, y = auto(f.source, power), auto(f.target, power)
        out = [ZERO] * self.hom_dim(x, y)
        for c, path in zip(f.coeffs, self.hom_basis(f.source, f.target).basis):
            if c:
                img = self.reduce_path([auto(p, power) for p in path])
                add_scaled(out, img.coeffs, c)
        return MorphismVector(x, y, tuple(out))


# -- model-level API with window checks ---------------------------------------


def _interior(m, *points):
    for p in points:
        if not m.is_interior(p):
            raise BoundaryError(f"point {p} is not interior to the model window [{m.lo}, {m.hi}]")


def hom_dim(m, x, y):
    _interior(m, x, y)
    return m.mesh.hom_dim(x, y)


def hom_basis(m, x, y):
    _interior(m, x, y)
    return m.mesh.hom_basis(x, y)


def compose(m, f, g):
    return m.mesh.compose(f, g)


def transport_F(m, f, power=1):
    _interior(m, m.F(f.source, power), m.F(f.target, power))
    return m.mesh.transport(f, m.F, power)


# -- brute-force oracle --------------------------------------------------------


def _sparse_rank(rows):
    pivots = {}
    rank = 0
    for row in rows:
        row = {k: Fraction(c) for k, c in row.items() if c}
        while row:
            lead = min(row)
            if lead not in pivots:
                c = row[lead]
                pivots[lead] = {k: x / c for k, x in row.items()}
                rank += 1
                break
            c = row[lead]
            for k, x in pivots[lead].items():
                val = row.get(k, ZERO) - c * x
                if val:
                    row[k] = val
                else:
                    row.pop(k, None)
    return rank


def path_oracle_dim(q, x, y, cap=DEFAULT_PATH_CAP):
    """``dim Hom(x, y)`` as (#paths) - rank(span of all mesh insertions ``p * m_z * r``).

    Independent of :class:`MeshCategory`; exponential, for tests only.
    """
    mc = MeshCategory(q)
    sx, sy = mc._point(x), mc._point(y)
    memo = {}

    def paths_to(a, b):
        key = (a, b)
        if key in memo:
            return memo[key]
        if a == b:
            out = [(a,)]
        elif a[0] > b[0]:
            out = []
        else:
            out = []
            for s in mc.successors(a):
                for tail in paths_to(s, b):
                    out.append((a,) + tail)
                    if len(out) > cap:
                        raise ResourceError(f"more than {cap} paths between {x} and {y}")
        memo[key] = out
        return out

    all_paths = paths_to(sx, sy)
    index = {p: i for i, p in enumerate(all_paths)}
    if not all_paths:
        return 0
    on_path = {p for path in all_paths for p in path}
    rows = []
    for z in on_path:
        tz = (z[0] - 1, z[1])
        if tz not in on_path:
            continue
        mids = [w for w in mc.successors(tz) if w in set(mc.predecessors(z))]
        for head in paths_to(sx, tz):
            for tail in paths_to(z, sy):
                row = defaultdict(int)
                for w in mids:
                    row[index[head + (w,) + tail]] += 1
                rows.append(row)
    return len(all_paths) - _sparse_rank(rows)
