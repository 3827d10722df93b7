"""Bound quivers: a quiver plus a finite list of relations.

A path is a tuple of arrow ids read left to right (``(a, b)`` is ``a`` then
``b``).  A relation is a tuple of ``(path, coefficient)`` terms, all paths of
length at least 2 and sharing source and target.

Two presentations are compared as ideals, never as strings: up to a quiver
isomorphism, a nonzero rescaling of every arrow (torus action) and any change
of generators of the same ideal.
"""

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations, product
from typing import Optional

import networkx as nx
from networkx.algorithms.isomorphism import DiGraphMatcher

from .errors import AlgorithmFailure, ResourceError, ValidationError
from .linalg import ONE, ZERO, Echelon, integer_left_kernel, nullspace
from .quiver import Quiver

MAX_PATH_LENGTH = 40


def path_ends(q, path):
    if not path:
        raise ValidationError("empty path")
    arrows = [q.arrow(a) for a in path]
    for a, b in zip(arrows, arrows[1:]):
        if a.target != b.source:
            raise ValidationError(f"arrows {a.id} and {b.id} do not compose")
    return arrows[0].source, arrows[-1].target


def paths_of_length(q, n):
    """All paths with ``n >= 1`` arrows, in lexicographic order of arrow positions."""
    out = [(a.id,) for a in q.arrows]
    target = {a.id: a.target for a in q.arrows}
    for _ in range(n - 1):
        out = [p + (a.id,) for p in out for a in q.arrows if a.source == target[p[-1]]]
    return out


def _column_key(q):
    pos = {a.id: i for i, a in enumerate(q.arrows)}
    return lambda p: (len(p), [pos[a] for a in p])


class _Columns:
    """Paths of length ``lo..hi`` from ``x`` to ``z``, in (length, lex) order."""

    def __init__(self, q, lo, hi):
        self.by_pair = defaultdict(list)
        for n in range(lo, hi + 1):
            for p in paths_of_length(q, n):
                self.by_pair[path_ends(q, p)].append(p)
        key = _column_key(q)
        self.index = {}
        for pair, ps in self.by_pair.items():
            ps.sort(key=key)
            self.index[pair] = {p: i for i, p in enumerate(ps)}

    def vector(self, pair, terms):
        idx = self.index.get(pair, {})
        v = [ZERO] * len(idx)
        for p, c in terms:
            if p in idx:
                v[idx[p]] += c
        return v

    def terms(self, pair, vec):
        ps = self.by_pair[pair]
        return tuple((ps[i], c) for i, c in enumerate(vec) if c)


def _normalize(terms):
    acc = defaultdict(lambda: ZERO)
    for p, c in terms:
        acc[tuple(p)] += Fraction(c)
    return tuple(sorted(((p, c) for p, c in acc.items() if c), key=lambda t: (len(t[0]), t[0])))


@dataclass(frozen=True)
class Presentation:
    quiver: Quiver
    relations: tuple
    nilpotency: Optional[int] = None  # every path of this length lies in the ideal

    def __post_init__(self):
        rels = []
        for i, r in enumerate(self.relations):
            terms = _normalize(r.items() if isinstance(r, dict) else r)
            if not terms:
                raise ValidationError("zero relation", pointer=f"/relations/{i}")
            ends = {path_ends(self.quiver, p) for p, _ in terms}
            if len(ends) != 1:
                raise ValidationError("relation mixes paths with different endpoints", pointer=f"/relations/{i}")
            if any(len(p) < 2 for p, _ in terms):
                raise ValidationError("relation contains a path of length < 2", pointer=f"/relations/{i}")
            rels.append(terms)
        object.__setattr__(self, "relations", tuple(rels))

    def relation_ends(self, r):
        return path_ends(self.quiver, r[0][0])

    def is_homogeneous(self):
        return all(len({len(p) for p, _ in r}) == 1 for r in self.relations)

    def nilpotency_index(self):
        """Smallest ``L`` such that every path of length ``L`` is in the ideal."""
        if self.nilpotency is not None:
            return self.nilpotency
        if not self.is_homogeneous():
            raise ValidationError("nilpotency of a non-homogeneous presentation must be given explicitly")
        for n in range(2, MAX_PATH_LENGTH + 1):
            paths = paths_of_length(self.quiver, n)
            cols, spans = _ideal_degree(self, n)
            if all(spans[path_ends(self.quiver, p)].contains(cols.vector(path_ends(self.quiver, p), [(p, ONE)]))
                   for p in paths):
                return n
        raise ResourceError(f"ideal does not contain all paths of length <= {MAX_PATH_LENGTH}")

    def rename_arrows(self, mapping, quiver):
        rels = [tuple((tuple(mapping[a] for a in p), c) for p, c in r) for r in self.relations]
        return Presentation(quiver, rels, self.nilpotency)


def _ideal_degree(pres, n):
    """Degree-``n`` part of a homogeneous ideal, per endpoint pair."""
    q = pres.quiver
    cols = _Columns(q, n, n)
    spans = {pair: Echelon(len(idx)) for pair, idx in cols.index.items()}
    for r in pres.relations:
        k = len(r[0][0])
        if k > n:
            continue
        for i in range(n - k + 1):
            for left in _paths_upto(q, i, exact=True):
                for right in _paths_upto(q, n - k - i, exact=True):
                    terms = _glue(q, left, r, right)
                    if terms:
                        pair = path_ends(q, terms[0][0])
                        spans[pair].add(cols.vector(pair, terms))
    return cols, spans


def _paths_upto(q, n, exact=False):
    """Paths with exactly (or at most) ``n`` arrows, including the empty path ``()``."""
    out = [()] if (n == 0 or not exact) else []
    for k in range(1, n + 1):
        if exact and k != n:
            continue
        out.extend(paths_of_length(q, k))
    return out


def _glue(q, left, rel, right):
    """Terms of ``left * rel * right``, or ``()`` if the product is not composable."""
    src, tgt = path_ends(q, rel[0][0])
    if left and q.arrow(left[-1]).target != src:
        return ()
    if right and q.arrow(right[0]).source != tgt:
        return ()
    return tuple((tuple(left) + p + tuple(right), c) for p, c in rel)


def truncated_ideal(pres, top):
    """The ideal projected to paths of length ``2..top``, per endpoint pair.

    Exact when ``top`` is at least the nilpotency index (every longer path is
    in the ideal, so projecting along them loses nothing).
    """
    q = pres.quiver
    cols = _Columns(q, 2, top)
    spans = {pair: Echelon(len(idx)) for pair, idx in cols.index.items()}
    nil = pres.nilpotency_index()
    if nil > top:
        raise ValidationError(f"truncation length {top} is below the nilpotency index {nil}")
    for n in range(nil, top + 1):
        for p in paths_of_length(q, n):
            pair = path_ends(q, p)
            spans[pair].add(cols.vector(pair, [(p, ONE)]))
    lefts = _paths_upto(q, top)
    for r in pres.relations:
        k = min(len(p) for p, _ in r)
        for left in lefts:
            if len(left) + k > top:
                continue
            for right in _paths_upto(q, top - k - len(left)):
                terms = _glue(q, left, r, right)
                if terms:
                    terms = [(p, c) for p, c in terms if len(p) <= top]
                    if terms:
                        pair = path_ends(q, terms[0][0])
                        spans[pair].add(cols.vector(pair, terms))
    return cols, spans


def kernel_relations(q, image, dim):
    """Minimal relations of the algebra map ``kQ -> A`` given on paths by ``image``.

    ``image(path)`` returns a coordinate vector of length ``dim`` and must be
    multiplicative.  Returns ``(relations, nilpotency)`` where relations are
    chosen degreewise as a complement of ``rad*I + I*rad`` in ``I``, using the
    reduced echelon form on (length, lex) ordered paths.
    """
    images = {}
    top = None
    for n in range(1, MAX_PATH_LENGTH + 1):
        ps = paths_of_length(q, n)
        vanish = True
        for p in ps:
            v = image(p)
            images[p] = v
            if any(v):
                vanish = False
        if n >= 2 and vanish:
            top = n
            break
        if not ps:
            top = max(n, 2)
            break
    if top is None:
        raise ResourceError(f"path algebra map does not vanish on paths of length {MAX_PATH_LENGTH}")
    cols = _Columns(q, 1, top)
    kernels = {}
    for pair, ps in cols.by_pair.items():
        matrix = [[images[p][r] for p in ps] for r in range(dim)]
        ker = Echelon(len(ps), nullspace(matrix, len(ps)))
        for row in ker.rows:
            if any(c and len(ps[i]) < 2 for i, c in enumerate(row)):
                raise AlgorithmFailure(f"an arrow between {pair} is not independent modulo longer paths")
        kernels[pair] = ker
    # J = rad * I + I * rad, truncated at ``top``
    spans_j = {pair: Echelon(len(idx)) for pair, idx in cols.index.items()}
    for pair, ker in kernels.items():
        x, z = pair
        for row in ker.rows:
            terms = cols.terms(pair, row)
            for a in q.arrows:
                if a.target == x:
                    prod = [((a.id,) + p, c) for p, c in terms if len(p) + 1 <= top]
                    if prod:
                        spans_j[(a.source, z)].add(cols.vector((a.source, z), prod))
                if a.source == z:
                    prod = [(p + (a.id,), c) for p, c in terms if len(p) + 1 <= top]
                    if prod:
                        spans_j[(x, a.target)].add(cols.vector((x, a.target), prod))
    relations = []
    vpos = {v: i for i, v in enumerate(q.vertices)}
    for pair in sorted(kernels, key=lambda p: (vpos[p[0]], vpos[p[1]])):
        j = spans_j[pair]
        for row in kernels[pair].rows:
            if j.add(row):
                relations.append(cols.terms(pair, row))
    relations.sort(key=lambda r: _column_key(q)(r[0][0]))
    return relations, top


# -- equivalence -----------------------------------------------------------------


def _digraph(q):
    g = nx.DiGraph()
    g.add_nodes_from(q.vertices)
    for a in q.arrows:
        if g.has_edge(a.source, a.target):
            g[a.source][a.target]["mult"] += 1
        else:
            g.add_edge(a.source, a.target, mult=1)
    for v in q.vertices:
        if g.has_edge(v, v):
            g.nodes[v]["loops"] = g[v][v]["mult"]
    return g


def quiver_isomorphisms(q1, q2):
    """Yield ``(vertex_map, arrow_map)`` pairs from ``q1`` onto ``q2``."""
    if len(q1.vertices) != len(q2.vertices) or len(q1.arrows) != len(q2.arrows):
        return
    g1, g2 = _digraph(q1), _digraph(q2)
    matcher = DiGraphMatcher(g1, g2, edge_match=lambda a, b: a["mult"] == b["mult"])
    for vmap in matcher.isomorphisms_iter():
        groups = defaultdict(list)
        for a in q1.arrows:
            groups[(a.source, a.target)].append(a.id)
        choices = []
        for (s, t), ids in groups.items():
            targets = [b.id for b in q2.arrows if b.source == vmap[s] and b.target == vmap[t]]
            choices.append([list(zip(ids, perm)) for perm in permutations(targets)])
        for combo in product(*choices):
            yield dict(vmap), {a: b for pairs in combo for a, b in pairs}


def weisfeiler_lehman_key(q):
    return nx.weisfeiler_lehman_graph_hash(_digraph(q), edge_attr="mult")


def _torus_consistent(equations, arrows):
    """Is there ``lam`` in ``(k^*)^arrows`` with ``lam^exp == ratio`` for every equation?

    Over an algebraically closed field this holds iff every integer relation
    among the exponent vectors is satisfied by the ratios.
    """
    if not equations:
        return True
    rows = [[e.get(a, 0) for a in arrows] for e, _ in equations]
    for n in integer_left_kernel(rows):
        value = Fraction(1)
        for k, (_, ratio) in zip(n, equations):
            value *= ratio ** k
        if value != 1:
            return False
    return True


def _exponents(path):
    out = defaultdict(int)
    for a in path:
        out[a] += 1
    return out


def equivalent_same_quiver(p1, p2):
    """Ideals equal up to rescaling arrows, both presentations on the same quiver."""
    q = p1.quiver
    top = max(p1.nilpotency_index(), p2.nilpotency_index())
    cols, s1 = truncated_ideal(p1, top)
    _, s2 = truncated_ideal(p2, top)
    arrows = [a.id for a in q.arrows]
    equations = []
    for pair, e1 in s1.items():
        e2 = s2[pair]
        if e1.pivots != e2.pivots:
            return False
        ps = cols.by_pair[pair]
        for r1, r2, piv in zip(e1.rows, e2.rows, e1.pivots):
            for c, (x1, x2) in enumerate(zip(r1, r2)):
                if (x1 == 0) != (x2 == 0):
                    return False
                if x1 and c != piv:
                    ex = _exponents(ps[c])
                    for a, k in _exponents(ps[piv]).items():
                        ex[a] -= k
                    equations.append((ex, x2 / x1))
    return _torus_consistent(equations, arrows)


def find_equivalence(p1, p2):
    """A ``(vertex_map, arrow_map)`` from ``p1`` to ``p2`` matching the ideals up to rescaling, or None."""
    for vmap, amap in quiver_isomorphisms(p1.quiver, p2.quiver):
        back = {b: a for a, b in amap.items()}
        moved = p2.rename_arrows(back, p1.quiver)
        if equivalent_same_quiver(p1, moved):
            return vmap, amap
    return None


def equivalent(p1, p2):
    return find_equivalence(p1, p2) is not None


def deduplicate(presentations):
    """Indices of pairwise inequivalent representatives, first occurrence kept."""
    buckets = defaultdict(list)
    keep = []
    for i, p in enumerate(presentations):
        key = weisfeiler_lehman_key(p.quiver)
        if any(equivalent(presentations[j], p) for j in buckets[key]):
            continue
        buckets[key].append(i)
        keep.append(i)
    return keep
