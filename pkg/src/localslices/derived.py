"""Combinatorial model of the bounded derived category of a Dynkin quiver.

Points of ZQ are ``(level, vertex)`` pairs with string ids ``"n:v"``.  The
indecomposable projective ``P_v`` sits at ``(0, v)``, and ``Hom(P_u, P_v)``
counts paths ``u -> v`` in ``Q``, so the level-0 slice is ``Q`` itself.

Every automorphism used here (Nakayama ``nu``, ``shift`` and
``F = tau^-1 shift``) acts on a point ``(n, v)`` as ``(n + off[v], sigma(v))``
and is stored as that table.
"""

from dataclasses import dataclass, field
from typing import NamedTuple

from .errors import AlgorithmFailure, ValidationError
from .quiver import Quiver, classify, positive_root_count
from .translation import Point, TranslationQuiver, build_zq, parse_zq_id, zq_id


class Knitted(NamedTuple):
    """AR quiver of mod kQ as a subset of ZQ together with dimension vectors."""

    quiver: TranslationQuiver
    dim_vectors: dict  # point id -> tuple over q.vertices


class Shift(NamedTuple):
    """Point automorphism ``(n, v) -> (n + offset[v], target[v])``."""

    offset: dict
    target: dict

    def __call__(self, pid, power=1):
        n, v = parse_zq_id(pid)
        if power >= 0:
            for _ in range(power):
                n, v = n + self.offset[v], self.target[v]
        else:
            back = {t: s for s, t in self.target.items()}
            for _ in range(-power):
                v = back[v]
                n -= self.offset[v]
        return zq_id(n, v)


def is_zq_arrow(q, s, t):
    """Is ``s -> t`` an arrow of ZQ?"""
    n, u = parse_zq_id(s)
    m, v = parse_zq_id(t)
    if m == n:
        return any(a.source == u and a.target == v for a in q.arrows)
    if m == n + 1:
        return any(a.source == v and a.target == u for a in q.arrows)
    return False


def _require_dynkin(q):
    c = classify(q)
    if not c.dynkin:
        raise ValidationError("derived model needs a Dynkin quiver")
    return c.dynkin


def knit(q: Quiver) -> Knitted:
    """Knit the AR quiver of mod kQ from the projectives.

    ``dim(n, v) = sum of dims of the predecessors - dim(n-1, v)``; a result
    with no positive entry means ``(n-1, v)`` was injective.
    """
    label = _require_dynkin(q)
    order = q.topological_order()
    verts = list(q.vertices)
    dims = {}
    for v in verts:
        dims[(0, v)] = tuple(q.path_count(w, v) for w in verts)
    n = 0
    while True:
        n += 1
        alive = False
        for v in order:
            acc = [0] * len(verts)
            preds = [(n, a.source) for a in q.arrows if a.target == v]
            preds += [(n - 1, a.target) for a in q.arrows if a.source == v]
            for p in preds:
                for i, x in enumerate(dims.get(p, ())):
                    acc[i] += x
            prev = dims.get((n - 1, v))
            if prev is None:
                continue
            acc = [a - b for a, b in zip(acc, prev)]
            if all(x <= 0 for x in acc):
                continue
            if any(x < 0 for x in acc):
                raise AlgorithmFailure(f"knitting produced a mixed-sign vector at {zq_id(n, v)}")
            dims[(n, v)] = tuple(acc)
            alive = True
        if not alive:
            break
        if n > 4 * positive_root_count(label):
            raise AlgorithmFailure("knitting does not terminate")
    if len(dims) != positive_root_count(label):
        raise AlgorithmFailure(f"knitted {len(dims)} modules, expected {positive_root_count(label)}")
    ids = {key: zq_id(*key) for key in dims}
    pts = sorted(dims, key=lambda k: (k[0], order.index(k[1])))
    arrows = []
    for (n, v) in pts:
        for a in q.arrows:
            if a.source == v and (n, a.target) in dims:
                arrows.append((ids[(n, v)], ids[(n, a.target)]))
            if a.target == v and (n + 1, a.source) in dims:
                arrows.append((ids[(n, v)], ids[(n + 1, a.source)]))
    tau = [(ids[(n, v)], ids[(n - 1, v)]) for (n, v) in pts if (n - 1, v) in dims]
    tq = TranslationQuiver(
        "transcribed", [Point(ids[k], k[1], k[0]) for k in pts], arrows, tau, rank_hint=len(verts),
    )
    return Knitted(tq, {ids[k]: d for k, d in dims.items()})


@dataclass(eq=False)
class DerivedModel:
    quiver: Quiver
    dim_vectors: dict
    proj_pos: dict
    inj_pos: dict
    nu: Shift
    shift: Shift
    F: Shift
    lo: int
    hi: int
    _window: TranslationQuiver = field(default=None, repr=False)
    _mesh: object = field(default=None, repr=False)

    @property
    def rank(self):
        return len(self.quiver.vertices)

    @property
    def window(self):
        if self._window is None:
            self._window = build_zq(self.quiver, self.lo, self.hi)
        return self._window

    @property
    def mesh(self):
        if self._mesh is None:
            from .mesh import MeshCategory

            self._mesh = MeshCategory(self.quiver)
        return self._mesh

    def is_interior(self, pid):
        n, v = parse_zq_id(pid)
        return v in self.proj_pos and self.lo < n < self.hi

    def tau(self, pid, power=1):
        n, v = parse_zq_id(pid)
        return zq_id(n - power, v)

    def module_range(self):
        return list(self.dim_vectors)

    def fundamental_domain(self):
        """Module range plus the shifted projective slice, ordered by level."""
        pts = list(self.dim_vectors) + [self.shift(p) for p in self.proj_pos.values()]
        order = {v: i for i, v in enumerate(self.quiver.topological_order())}
        return sorted(pts, key=lambda p: (parse_zq_id(p)[0], order[parse_zq_id(p)[1]]))

    def fd_rep(self, pid):
        """``(rep, k)`` with ``rep = F^k(pid)`` in the fundamental domain."""
        fd = self._fd_set()
        n, _ = parse_zq_id(pid)
        span = max(self.F.offset.values())
        # F raises levels by at least 1, so |k| is bounded by the level gap
        guess = -((n - self._fd_low) // span) if span else 0
        for k in sorted(range(guess - abs(n) - 3, guess + abs(n) + 4), key=lambda k: abs(k - guess)):
            p = self.F(pid, k)
            if p in fd:
                return p, k
        raise AlgorithmFailure(f"no fundamental-domain representative for {pid}")

    def _fd_set(self):
        fd = getattr(self, "_fd_cache", None)
        if fd is None:
            fd = frozenset(self.fundamental_domain())
            self._fd_cache = fd
            self._fd_low = min(parse_zq_id(p)[0] for p in fd)
        return fd

    def cluster_quiver(self):
        """The AR quiver of the cluster category: the window modulo F."""
        fd = self._fd_set()
        w = self.window
        from .translation import quotient_by_automorphism

        def phi(p):
            img = self.F(p)
            return img if img in w else None

        out = quotient_by_automorphism(w, phi, prefer=[p for p in w.ids if p in fd])
        return out.replace(rank_hint=self.rank)


def build_model(q: Quiver, margin=2) -> DerivedModel:
    """Embed the knitted AR quiver into ZQ and read off ``nu``, ``shift`` and ``F``."""
    knitted = knit(q)
    verts = list(q.vertices)
    dims = knitted.dim_vectors
    proj_pos = {v: zq_id(0, v) for v in verts}
    for v in verts:
        expected = tuple(q.path_count(w, v) for w in verts)
        if dims[proj_pos[v]] != expected:
            raise AlgorithmFailure(f"projective at {proj_pos[v]} has the wrong dimension vector")
    # the level-0 slice must reproduce Q (fixes the Hom convention)
    for a in q.arrows:
        if not knitted.quiver.has_arrow(proj_pos[a.source], proj_pos[a.target]):
            raise AlgorithmFailure(f"level-0 slice misses arrow {a.id}")
    inj_pos = {}
    for v in verts:
        want = tuple(q.path_count(v, w) for w in verts)
        hits = [p for p, d in dims.items() if d == want]
        if len(hits) != 1:
            raise AlgorithmFailure(f"injective I_{v} found {len(hits)} times")
        inj_pos[v] = hits[0]
    nu_off, nu_tgt = {}, {}
    for v in verts:
        n, w = parse_zq_id(inj_pos[v])
        nu_off[v], nu_tgt[v] = n, w
    if sorted(nu_tgt.values()) != sorted(verts):
        raise AlgorithmFailure("Nakayama permutation is not a bijection")
    nu = Shift(nu_off, nu_tgt)
    shift = Shift({v: o + 1 for v, o in nu_off.items()}, dict(nu_tgt))
    F = Shift({v: o + 2 for v, o in nu_off.items()}, dict(nu_tgt))
    for auto in (nu, shift, F):
        for a in q.arrows:
            for s, t in ((zq_id(0, a.source), zq_id(0, a.target)), (zq_id(0, a.target), zq_id(1, a.source))):
                if not is_zq_arrow(q, auto(s), auto(t)):
                    raise AlgorithmFailure(f"automorphism breaks the arrow {s}->{t}")
    top = max(F.offset.values())
    fd_top = max(shift.offset.values())
    # F^-2 .. F^2 of the fundamental domain plus a margin
    lo = -2 * top - margin
    hi = fd_top + 2 * top + margin
    return DerivedModel(q, dims, proj_pos, inj_pos, nu, shift, F, lo, hi)
