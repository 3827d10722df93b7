"""Exact linear algebra over the rationals.

Vectors are plain lists of :class:`fractions.Fraction`; matrices are lists of
rows.  Everything here is deterministic: pivots are always chosen as the
leftmost nonzero column, so echelon forms are canonical.
"""

from fractions import Fraction
from math import gcd

ZERO = Fraction(0)
ONE = Fraction(1)


def to_fraction(value):
    if isinstance(value, Fraction):
        return value
    if isinstance(value, str):
        return Fraction(value)
    return Fraction(value)


def fraction_str(value):
    value = to_fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def zeros(n):
    return [ZERO] * n


def unit(n, i):
    v = [ZERO] * n
    v[i] = ONE
    return v


def is_zero(v):
    return all(x == 0 for x in v)


def add_scaled(target, source, scale):
    """In place: target += scale * source."""
    if scale == 0:
        return target
    for i, x in enumerate(source):
        if x:
            target[i] += scale * x
    return target


def mat_vec(matrix, v):
    return [sum((a * b for a, b in zip(row, v) if a and b), ZERO) for row in matrix]


def mat_mul(a, b):
    if not a:
        return []
    ncols = len(b[0]) if b else 0
    out = []
    for row in a:
        acc = [ZERO] * ncols
        for k, x in enumerate(row):
            if x:
                add_scaled(acc, b[k], x)
        out.append(acc)
    return out


def transpose(matrix, ncols=None):
    if not matrix:
        return [[] for _ in range(ncols or 0)]
    return [list(col) for col in zip(*matrix)]


class Echelon:
    """Reduced row echelon basis of a subspace of ``k^n``.

    Rows are added incrementally; each new vector is reduced against the
    current basis and, if nonzero, normalised and used to clear its pivot
    column from the existing rows.
    """

    def __init__(self, n, rows=()):
        self.n = n
        self.rows = []
        self.pivots = []
        for r in rows:
            self.add(r)

    def __len__(self):
        return len(self.rows)

    @property
    def dim(self):
        return len(self.rows)

    def reduce(self, v):
        """Return ``v`` reduced modulo the span (zero at every pivot)."""
        v = [to_fraction(x) for x in v]
        for row, p in zip(self.rows, self.pivots):
            c = v[p]
            if c:
                add_scaled(v, row, -c)
        return v

    def contains(self, v):
        return is_zero(self.reduce(v))

    def add(self, v):
        """Add ``v`` to the span. Returns True if the dimension grew."""
        r = self.reduce(v)
        p = next((i for i, x in enumerate(r) if x), None)
        if p is None:
            return False
        c = r[p]
        if c != 1:
            r = [x / c for x in r]
        for row in self.rows:
            d = row[p]
            if d:
                add_scaled(row, r, -d)
        # keep rows sorted by pivot for canonical output
        idx = 0
        while idx < len(self.pivots) and self.pivots[idx] < p:
            idx += 1
        self.rows.insert(idx, r)
        self.pivots.insert(idx, p)
        return True

    def coordinates(self, v):
        """Coefficients of ``v`` in terms of the rows; ``None`` if not in span."""
        coeffs = [to_fraction(v[p]) for p in self.pivots]
        test = [to_fraction(x) for x in v]
        for row, c in zip(self.rows, coeffs):
            if c:
                add_scaled(test, row, -c)
        if not is_zero(test):
            return None
        return coeffs

    def free_columns(self):
        ps = set(self.pivots)
        return [i for i in range(self.n) if i not in ps]

    def same_span(self, other):
        return self.n == other.n and self.pivots == other.pivots and self.rows == other.rows


def rank(rows, ncols=None):
    if not rows:
        return 0
    return Echelon(ncols if ncols is not None else len(rows[0]), rows).dim


def nullspace(matrix, ncols):
    """Basis of ``{x : matrix x = 0}``, one vector per free column."""
    ech = Echelon(ncols, matrix)
    basis = []
    for f in ech.free_columns():
        x = [ZERO] * ncols
        x[f] = ONE
        for row, p in zip(ech.rows, ech.pivots):
            x[p] = -row[f]
        basis.append(x)
    return basis


def quotient_map(n, sub_rows):
    """Projection ``k^n -> k^n / span(sub_rows)``.

    Returns ``(Q, kept)`` where ``kept`` lists the free columns whose unit
    vectors descend to a basis of the quotient and ``Q`` is the matrix of the
    projection in that basis (``len(kept)`` rows, ``n`` columns).
    """
    ech = Echelon(n, sub_rows)
    kept = ech.free_columns()
    pos = {c: j for j, c in enumerate(kept)}
    q = [[ZERO] * n for _ in kept]
    for c in kept:
        q[pos[c]][c] = ONE
    for row, p in zip(ech.rows, ech.pivots):
        # e_p == -sum_{c free} row[c] e_c  modulo the subspace
        for c in kept:
            if row[c]:
                q[pos[c]][p] = -row[c]
    return q, kept


def integer_left_kernel(rows):
    """Lattice basis of ``{n in Z^m : sum_i n_i rows[i] = 0}`` for integer rows.

    Uses unimodular row operations on ``[rows | I]``; rows whose left block
    vanishes at the end span the kernel lattice exactly.
    """
    m = len(rows)
    if m == 0:
        return []
    width = len(rows[0])
    aug = [list(map(int, r)) + [1 if i == j else 0 for j in range(m)] for i, r in enumerate(rows)]
    top = 0
    for col in range(width):
        while True:
            live = [i for i in range(top, m) if aug[i][col] != 0]
            if not live:
                break
            piv = min(live, key=lambda i: abs(aug[i][col]))
            aug[top], aug[piv] = aug[piv], aug[top]
            done = True
            for i in range(top + 1, m):
                if aug[i][col]:
                    q = aug[i][col] // aug[top][col]
                    aug[i] = [a - q * b for a, b in zip(aug[i], aug[top])]
                    if aug[i][col]:
                        done = False
            if done:
                top += 1
                break
    return [row[width:] for row in aug if all(x == 0 for x in row[:width])]


def lcm_denominators(values):
    out = 1
    for v in values:
        d = to_fraction(v).denominator
        out = out * d // gcd(out, d)
    return out
