"""Exact matrices and subspaces over GF(q).

Rows are tuples of element codes.  A Subspace is stored as the RREF of a
generator matrix with zero rows dropped, which is a unique canonical
representative: subspace equality is entrywise basis equality and
subspaces can be hashed into vertex sets.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product

from .field import FieldCtx, FieldError


class BudgetExceeded(RuntimeError):
    """An exhaustive enumeration would exceed its configured budget."""

    def __init__(self, count, limit):
        super().__init__("enumeration of %d items exceeds budget %d" % (count, limit))
        self.count = count
        self.limit = limit


def _rref(ctx, rows, ncols):
    """Reduced row echelon form.  Returns (nonzero rows, pivot columns)."""
    sub_t, mul_t, inv_t = ctx.sub_t, ctx.mul_t, ctx.inv_t
    rows = [list(r) for r in rows]
    nrows = len(rows)
    pivots = []
    r = 0
    for c in range(ncols):
        pr = r
        while pr < nrows and not rows[pr][c]:
            pr += 1
        if pr == nrows:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        rr = rows[r]
        v = rr[c]
        if v != 1:
            mt = mul_t[inv_t[v]]
            for j in range(c, ncols):
                rr[j] = mt[rr[j]]
        for i in range(nrows):
            if i != r and rows[i][c]:
                ri = rows[i]
                mt = mul_t[ri[c]]
                for j in range(c, ncols):
                    x = rr[j]
                    if x:
                        ri[j] = sub_t[ri[j]][mt[x]]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return [tuple(row) for row in rows[:r]], tuple(pivots)


def _rank(ctx, rows, ncols):
    return len(_rref(ctx, rows, ncols)[0])


@dataclass(frozen=True)
class MatGF:
    """Dense matrix over GF(q); rows is a tuple of row tuples."""

    ctx: FieldCtx
    rows: tuple

    @property
    def nrows(self):
        return len(self.rows)

    @property
    def ncols(self):
        return len(self.rows[0]) if self.rows else 0

    @classmethod
    def from_rows(cls, ctx, rows):
        rows = tuple(tuple(int(x) for x in r) for r in rows)
        widths = {len(r) for r in rows}
        if len(widths) > 1:
            raise ValueError("ragged rows")
        for r in rows:
            for x in r:
                if not 0 <= x < ctx.q:
                    raise FieldError("entry %r not in GF(%d)" % (x, ctx.q))
        return cls(ctx, rows)

    def col(self, j):
        return tuple(r[j] for r in self.rows)

    def columns(self):
        return [self.col(j) for j in range(self.ncols)]

    def transpose(self):
        return MatGF(self.ctx, tuple(zip(*self.rows)) if self.rows else ())

    def __repr__(self):
        return "MatGF(GF(%d), %s)" % (self.ctx.q, format_matrix(self))


def parse_matrix(ctx, text):
    """Rows separated by ';', entries by ','; extension-field entries use ':'."""
    rows = []
    for rtext in text.strip().split(";"):
        rows.append([ctx.parse_element(e) for e in rtext.split(",")])
    return MatGF.from_rows(ctx, rows)


def format_matrix(m):
    return ";".join(",".join(m.ctx.format_element(x) for x in row) for row in m.rows)


def rref(m):
    """RREF preserving shape.  Returns (MatGF, rank, pivot columns)."""
    reduced, pivots = _rref(m.ctx, m.rows, m.ncols)
    rank = len(reduced)
    pad = [tuple([0] * m.ncols)] * (m.nrows - rank)
    return MatGF(m.ctx, tuple(reduced) + tuple(pad)), rank, pivots


def matrank(m):
    return _rank(m.ctx, m.rows, m.ncols)


def matmul(a, b):
    if a.ctx != b.ctx or a.ncols != b.nrows:
        raise ValueError("shape or field mismatch")
    ctx = a.ctx
    add_t, mul_t = ctx.add_t, ctx.mul_t
    bt = list(zip(*b.rows))
    out = []
    for row in a.rows:
        orow = []
        for col in bt:
            acc = 0
            for x, y in zip(row, col):
                if x and y:
                    acc = add_t[acc][mul_t[x][y]]
            orow.append(acc)
        out.append(tuple(orow))
    return MatGF(ctx, tuple(out))


def matvec(m, v):
    """m (r x c) applied to column vector v of length c."""
    ctx = m.ctx
    add_t, mul_t = ctx.add_t, ctx.mul_t
    out = []
    for row in m.rows:
        acc = 0
        for x, y in zip(row, v):
            if x and y:
                acc = add_t[acc][mul_t[x][y]]
        out.append(acc)
    return tuple(out)


def dot(ctx, u, v):
    add_t, mul_t = ctx.add_t, ctx.mul_t
    acc = 0
    for x, y in zip(u, v):
        if x and y:
            acc = add_t[acc][mul_t[x][y]]
    return acc


@dataclass(frozen=True)
class Subspace:
    """Subspace of F_q^n held as its canonical RREF basis (no zero rows)."""

    ctx: FieldCtx
    n: int
    basis: tuple  # RREF rows

    @property
    def dim(self):
        return len(self.basis)

    def matrix(self):
        return MatGF(self.ctx, self.basis)

    def pivots(self):
        return tuple(next(j for j, x in enumerate(row) if x) for row in self.basis)

    def contains(self, vec):
        return not any(self.reduce(vec))

    def reduce(self, vec):
        """Residue of vec modulo this subspace (eliminate pivot coordinates)."""
        ctx = self.ctx
        sub_t, mul_t = ctx.sub_t, ctx.mul_t
        v = list(vec)
        for row, p in zip(self.basis, self.pivots()):
            f = v[p]
            if f:
                mt = mul_t[f]
                for j in range(p, self.n):
                    if row[j]:
                        v[j] = sub_t[v[j]][mt[row[j]]]
        return tuple(v)

    def __le__(self, other):
        return all(other.contains(row) for row in self.basis)


def span(ctx, vectors, n=None):
    vectors = [tuple(v) for v in vectors]
    if n is None:
        if not vectors:
            raise ValueError("ambient dimension needed for empty span")
        n = len(vectors[0])
    reduced, _ = _rref(ctx, vectors, n)
    return Subspace(ctx, n, tuple(reduced))


def subspace_sum(x, y):
    _check_peer(x, y)
    return span(x.ctx, list(x.basis) + list(y.basis), x.n)


def intersect(x, y):
    """x cap y via the left kernel of the stacked bases (exact, no tolerances)."""
    _check_peer(x, y)
    ctx = x.ctx
    dx = x.dim
    stacked = MatGF(ctx, tuple(x.basis) + tuple(y.basis))
    left = kernel(stacked.transpose())  # coefficient vectors c with c . stacked = 0
    vecs = []
    for c in left.basis:
        w = [0] * x.n
        add_t, mul_t = ctx.add_t, ctx.mul_t
        for coef, row in zip(c[:dx], x.basis):
            if coef:
                mt = mul_t[coef]
                for j, e in enumerate(row):
                    if e:
                        w[j] = add_t[w[j]][mt[e]]
        vecs.append(tuple(w))
    return span(ctx, vecs, x.n)


def kernel(m):
    """Right kernel {v : m v = 0} as a canonical Subspace of F_q^ncols."""
    ctx = m.ctx
    n = m.ncols
    reduced, pivots = _rref(ctx, m.rows, n)
    pivset = set(pivots)
    free = [j for j in range(n) if j not in pivset]
    vecs = []
    for j in free:
        v = [0] * n
        v[j] = 1
        for row, p in zip(reduced, pivots):
            if row[j]:
                v[p] = ctx.neg_t[row[j]]
        vecs.append(tuple(v))
    return span(ctx, vecs, n)


def _check_peer(x, y):
    if x.ctx != y.ctx or x.n != y.n:
        raise ValueError("subspaces live in different ambient spaces")


def gaussian_binomial(n, k, q):
    """Number of k-dim subspaces of F_q^n."""
    if not 0 <= k <= n:
        return 0
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (k - i) - 1
    assert num % den == 0
    return num // den


def count_by_rref_profiles(n, k, q):
    """Same count, summed over pivot-column profiles (independent cross-check)."""
    total = 0
    for pivs in combinations(range(n), k):
        free = sum(1 for i, p in enumerate(pivs)
                   for j in range(p + 1, n) if j not in pivs)
        total += q ** free
    return total


def enumerate_subspaces(ctx, n, k, budget=None):
    """All k-dim subspaces of F_q^n, each exactly once, built directly in RREF.

    Pivot-column sets run in colexicographic order; free entries in odometer
    order (last free position fastest).  Raises BudgetExceeded up front.
    """
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    count = gaussian_binomial(n, k, ctx.q)
    if budget is not None and count > budget:
        raise BudgetExceeded(count, budget)
    if k == 0:
        yield Subspace(ctx, n, ())
        return
    elems = list(ctx.elements())
    for pivs in sorted(combinations(range(n), k), key=lambda c: c[::-1]):
        pivset = set(pivs)
        free_pos = [(i, j) for i, p in enumerate(pivs)
                    for j in range(p + 1, n) if j not in pivset]
        base = []
        for i, p in enumerate(pivs):
            row = [0] * n
            row[p] = 1
            base.append(row)
        for vals in product(elems, repeat=len(free_pos)):
            rows = [row[:] for row in base]
            for (i, j), v in zip(free_pos, vals):
                rows[i][j] = v
            yield Subspace(ctx, n, tuple(tuple(r) for r in rows))


def projective_points(ctx, n):
    """All normalized representatives of 1-dim subspaces of F_q^n.

    Normalization: first non-zero coordinate equals 1.  Deterministic order:
    by position of the leading 1, then odometer on the tail.
    """
    elems = list(ctx.elements())
    for i in range(n):
        head = (0,) * i + (1,)
        for tail in product(elems, repeat=n - 1 - i):
            yield head + tail


def normalize_point(ctx, vec):
    """Scale vec so its first non-zero coordinate is 1."""
    for x in vec:
        if x:
            if x == 1:
                return tuple(vec)
            inv = ctx.inv_t[x]
            mt = ctx.mul_t[inv]
            return tuple(mt[y] for y in vec)
    raise ValueError("zero vector has no projective point")
