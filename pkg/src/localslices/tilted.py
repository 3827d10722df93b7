"""Cluster-tilted algebras ``B = End_C(T)`` and their tilted quotients.

Vertices of ``B`` are the summands of ``T`` (named by their fundamental-domain
point ids).  A basis element ``(x, y, g, j)`` is the ``j``-th basis morphism of
``Hom_D(T_y, F^g T_x)``; it is an element of ``e_x B e_y`` and, as an arrow,
points ``x -> y``.  Paths compose left to right, and modules are right
modules: ``M e_x = Hom_C(T_x, M)`` with ``m . b = m o b``.

Products are computed in the derived model:
``(x,y,g) . (y,z,h) = b2 followed by F^h(b1)``, a morphism
``T_z -> F^h T_y -> F^(g+h) T_x``.
"""

from collections import defaultdict
from typing import NamedTuple

from .cluster import cluster_hom, is_tilting
from .errors import AlgorithmFailure, ValidationError
from .linalg import ONE, ZERO, Echelon, add_scaled, is_zero, nullspace, quotient_map, unit
from .presentation import Presentation, kernel_relations
from .quiver import Arrow, Quiver
from .slices import Verdict, enumerate_local_slices, is_local_slice
from .translation import delete_points


class BasisElement(NamedTuple):
    source: str
    target: str
    grade: int
    index: int


class ModuleAction(NamedTuple):
    point: str
    blocks: tuple  # (summand, grade, dim) in basis order
    dim_vector: dict  # summand -> dim
    matrices: dict  # basis index -> matrix (column j = image of the j-th module basis vector)

    @property
    def dim(self):
        return sum(self.dim_vector.values())


class AnnIdeal(NamedTuple):
    slice: tuple
    basis: tuple  # coefficient vectors over the algebra basis, in echelon form
    arrow_generators: tuple  # arrow ids lying in the ideal
    generated_dim: int  # dimension of the two-sided ideal generated by those arrows

    @property
    def dim(self):
        return len(self.basis)


class ClusterTiltedAlgebra:
    def __init__(self, model, tilting):
        tilting = list(tilting)
        if not is_tilting(model, tilting):
            raise ValidationError(f"{tilting} is not a tilting object")
        order = {p: i for i, p in enumerate(model.fundamental_domain())}
        self.model = model
        self.tilting = tuple(sorted(tilting, key=order.get))
        self._build_basis()
        self._build_products()
        self._build_quiver()
        self._mod_quiver = None
        self._actions = {}

    # -- structure -------------------------------------------------------------

    def _hom_target(self, x, g):
        return self.model.F(x, g)

    def _build_basis(self):
        m = self.model
        self.basis = []
        self.blocks = {}
        for x in self.tilting:
            for y in self.tilting:
                graded = cluster_hom(m, y, x)
                for g in sorted(graded.grades):
                    start = len(self.basis)
                    for j in range(graded.grades[g]):
                        self.basis.append(BasisElement(x, y, g, j))
                    self.blocks[(x, y, g)] = (start, graded.grades[g])
        self.identity = {}
        for x in self.tilting:
            block = self.blocks.get((x, x, 0))
            if block is None or block[1] != 1:
                raise AlgorithmFailure(f"End_D({x}) is not one-dimensional")
            self.identity[x] = block[0]

    @property
    def dim(self):
        return len(self.basis)

    def _morphism(self, b):
        mc = self.model.mesh
        return mc.basis_vector(b.target, self._hom_target(b.source, b.grade), b.index)

    def _product_of(self, b1, b2):
        """Coordinates of ``b1 . b2`` (requires ``b1.target == b2.source``)."""
        mc = self.model.mesh
        f2 = self._morphism(b2)
        f1 = mc.transport(self._morphism(b1), self.model.F, b2.grade)
        prod = mc.compose(f2, f1)
        out = [ZERO] * self.dim
        if prod.is_zero():
            return out
        key = (b1.source, b2.target, b1.grade + b2.grade)
        if key not in self.blocks:
            raise AlgorithmFailure(f"nonzero product lands outside the graded blocks at {key}")
        start, _ = self.blocks[key]
        for j, c in enumerate(prod.coeffs):
            out[start + j] = c
        return out

    def _build_products(self):
        self.table = {}
        for i, b1 in enumerate(self.basis):
            for j, b2 in enumerate(self.basis):
                if b1.target == b2.source:
                    vec = self._product_of(b1, b2)
                    self.table[(i, j)] = tuple((k, c) for k, c in enumerate(vec) if c)

    def multiply(self, u, v):
        out = [ZERO] * self.dim
        for i, a in enumerate(u):
            if not a:
                continue
            for j, b in enumerate(v):
                if b:
                    for k, c in self.table.get((i, j), ()):
                        out[k] += a * b * c
        return out

    def unit_vector(self, i):
        return unit(self.dim, i)

    def radical_indices(self):
        ids = set(self.identity.values())
        return [i for i in range(self.dim) if i not in ids]

    def _build_quiver(self):
        rad = self.radical_indices()
        rad2 = Echelon(self.dim)
        for i in rad:
            for j in rad:
                if (i, j) in self.table:
                    rad2.add(self.multiply(unit(self.dim, i), unit(self.dim, j)))
        self.rad2_dim = rad2.dim
        arrows = []
        self.arrow_vectors = {}
        self.arrow_grades = {}
        pos = {x: k for k, x in enumerate(self.tilting)}
        # homogeneous complement of rad^2 in rad, one (x, y, g) block at a time
        for (x, y, g), (start, size) in sorted(self.blocks.items(), key=lambda kv: (pos[kv[0][0]], pos[kv[0][1]], kv[0][2])):
            ech = Echelon(self.dim, [r for r in rad2.rows if all(not r[k] for k in range(self.dim) if not start <= k < start + size)])
            for k in range(start, start + size):
                if k in self.identity.values():
                    continue
                if ech.add(unit(self.dim, k)):
                    aid = f"a{len(arrows) + 1}"
                    arrows.append(Arrow(aid, x, y))
                    self.arrow_vectors[aid] = unit(self.dim, k)
                    self.arrow_grades[aid] = g
        self.quiver = Quiver(self.tilting, arrows)
        if len(arrows) + self.rad2_dim != len(rad):
            raise AlgorithmFailure("arrows do not complete rad^2 to rad")
        self._check_generation()
        rels, nil = kernel_relations(self.quiver, self.path_image, self.dim)
        self.presentation = Presentation(self.quiver, rels, nil)

    def _check_generation(self):
        """Arrows and idempotents generate B (checked on the path images)."""
        span = Echelon(self.dim, [unit(self.dim, i) for i in self.identity.values()])
        frontier = [self.arrow_vectors[a.id] for a in self.quiver.arrows]
        for v in frontier:
            span.add(v)
        while frontier:
            nxt = []
            for v in frontier:
                for a in self.quiver.arrows:
                    w = self.multiply(v, self.arrow_vectors[a.id])
                    if not is_zero(w) and span.add(w):
                        nxt.append(w)
            frontier = nxt
        if span.dim != self.dim:
            raise AlgorithmFailure(f"arrows generate {span.dim} of {self.dim} dimensions")

    def path_image(self, path):
        vec = self.arrow_vectors[path[0]]
        for a in path[1:]:
            vec = self.multiply(vec, self.arrow_vectors[a])
        return vec

    @property
    def relations(self):
        return self.presentation.relations

    # -- modules -----------------------------------------------------------------

    @property
    def mod_quiver(self):
        """AR quiver of mod B: the cluster AR quiver minus the points ``tau T_x``."""
        if self._mod_quiver is None:
            cq = self.model.cluster_quiver()
            self._tau_t = tuple(cq.tau_of(x) for x in self.tilting)
            self._mod_quiver = delete_points(cq, self._tau_t).replace(kind="deleted", rank_hint=self.model.rank)
        return self._mod_quiver

    @property
    def tau_t(self):
        self.mod_quiver
        return self._tau_t

    def module_action(self, point):
        if point in self._actions:
            return self._actions[point]
        if point not in self.mod_quiver:
            raise ValidationError(f"{point} is not a point of the module quiver", point=point)
        m = self.model
        mc = m.mesh
        blocks, offsets, dimv = [], {}, {}
        total = 0
        for x in self.tilting:
            graded = cluster_hom(m, x, point)
            dimv[x] = graded.total
            for i in sorted(graded.grades):
                offsets[(x, i)] = total
                blocks.append((x, i, graded.grades[i]))
                total += graded.grades[i]
        matrices = {}
        for k, b in enumerate(self.basis):
            mat = [[ZERO] * total for _ in range(total)]
            f = self._morphism(b)
            for (x, i, d) in blocks:
                if x != b.source:
                    continue
                for j in range(d):
                    mvec = mc.basis_vector(x, m.F(point, i), j)
                    img = mc.compose(f, mc.transport(mvec, m.F, b.grade))
                    if img.is_zero():
                        continue
                    tgt = (b.target, i + b.grade)
                    if tgt not in offsets:
                        raise AlgorithmFailure(f"module action leaves the graded blocks at {tgt}")
                    col = offsets[(x, i)] + j
                    for r, c in enumerate(img.coeffs):
                        mat[offsets[tgt] + r][col] = c
            matrices[k] = mat
        action = ModuleAction(point, tuple(blocks), dimv, matrices)
        self._actions[point] = action
        return action

    # -- annihilators and quotients ---------------------------------------------------

    def two_sided_ideal(self, generators):
        """Echelon basis of the two-sided ideal generated by the given vectors."""
        units = [unit(self.dim, i) for i in range(self.dim)]
        ech = Echelon(self.dim)
        for g in generators:
            for u in units:
                left = self.multiply(u, g)
                if is_zero(left):
                    continue
                for w in units:
                    ech.add(self.multiply(left, w))
        return ech

    def annihilator(self, s, check=True):
        s = tuple(sorted(s))
        if check:
            verdict = is_local_slice(self.mod_quiver, s)
            if verdict is not Verdict.TRUE:
                raise ValidationError(f"{list(s)} is not a local slice ({verdict.value})")
        rows = []
        for p in s:
            act = self.module_action(p)
            n = act.dim
            for r in range(n):
                for c in range(n):
                    row = [act.matrices[k][r][c] for k in range(self.dim)]
                    if any(row):
                        rows.append(row)
        ann = Echelon(self.dim, nullspace(rows, self.dim))
        gens = tuple(a.id for a in self.quiver.arrows if ann.contains(self.arrow_vectors[a.id]))
        generated = self.two_sided_ideal([self.arrow_vectors[a] for a in gens])
        return AnnIdeal(s, tuple(tuple(r) for r in ann.rows), gens, generated.dim)

    def tilted_quotient(self, s, ann=None):
        """Presentation of ``B / Ann(s)`` on the quiver without the annihilated arrows."""
        if ann is None:
            ann = self.annihilator(s)
        if ann.generated_dim != ann.dim:
            raise AlgorithmFailure(f"annihilator of {list(s)} is not generated by arrows")
        qm, kept = quotient_map(self.dim, [list(r) for r in ann.basis])
        reduced = self.quiver.without_arrows(ann.arrow_generators)

        def image(path):
            v = self.path_image(path)
            return [sum((a * b for a, b in zip(row, v) if a and b), ZERO) for row in qm]

        rels, nil = kernel_relations(reduced, image, len(kept))
        return Presentation(reduced, rels, nil)

    def inherited_relations_agree(self, s, ann=None):
        """The kernel onto ``B / Ann`` equals the kernel onto ``B`` restricted to the reduced quiver.

        Both kernels are compared as spans of paths of length ``>= 2`` up to the
        nilpotency length of ``B`` (the two computations are independent).
        """
        if ann is None:
            ann = self.annihilator(s)
        quotient = self.tilted_quotient(s, ann)
        reduced = quotient.quiver
        inherited, _ = kernel_relations(reduced, self.path_image, self.dim)
        full = Presentation(reduced, inherited, self.presentation.nilpotency)
        from .presentation import equivalent_same_quiver

        return equivalent_same_quiver(quotient, full)

    def local_slices(self):
        return enumerate_local_slices(self.mod_quiver)

    def realizing_tilted_algebras(self):
        """Distinct tilted quotients, with the slices realising each one."""
        from .presentation import deduplicate, equivalent

        slices = self.local_slices()
        quotients = [self.tilted_quotient(s) for s in slices]
        keep = deduplicate(quotients)
        fibres = defaultdict(list)
        for s, pres in zip(slices, quotients):
            owner = next(k for k in keep if equivalent(quotients[k], pres))
            fibres[owner].append(s)
        return [(quotients[k], fibres[k]) for k in keep]

    def canonical_slice_image(self):
        """Image of the injective slice ``nu P_v``; needs every summand in the module range."""
        m = self.model
        if any(x not in m.dim_vectors for x in self.tilting):
            raise ValidationError("canonical slice image needs all summands in the module range")
        image = tuple(sorted(m.fd_rep(p)[0] for p in m.inj_pos.values()))
        for p in image:
            if p not in self.mod_quiver:
                raise AlgorithmFailure(f"injective position {p} is a deleted point")
        return image

    def grade_one_arrows(self):
        return tuple(a for a, g in self.arrow_grades.items() if g == 1)

    def grade_one_dim(self):
        return sum(size for (x, y, g), (_, size) in self.blocks.items() if g == 1)


def build_algebra(model, tilting):
    return ClusterTiltedAlgebra(model, tilting)
