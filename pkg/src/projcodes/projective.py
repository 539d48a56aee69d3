"""Dual-side machinery: functional tuples, special point sets, the code
construction C(x*_1,...,x*_n), monomial maps, and equivalence classes.

Points of PG(k-1, q) are normalized tuples (first non-zero coordinate 1).
Functional tuples keep their scalars: scaling a single functional changes
the code, only a global scalar leaves it fixed.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product
from math import factorial

from .codes import CodeError, LinearCode
from .field import FieldCtx
from .matspace import (BudgetExceeded, MatGF, _rank, matvec, normalize_point)


@dataclass(frozen=True)
class FunctionalTuple:
    """Ordered non-zero functionals on W = F_q^k, in dual-basis coordinates.

    Invariants: the functionals span W* (so the built code has dimension k)
    and are pairwise non-proportional (so the code is projective).
    """

    ctx: FieldCtx
    k: int
    funcs: tuple

    def __post_init__(self):
        ctx, k = self.ctx, self.k
        object.__setattr__(self, "funcs",
                           tuple(tuple(f) for f in self.funcs))
        for f in self.funcs:
            if len(f) != k:
                raise CodeError("functional of wrong arity")
            if not any(f):
                raise CodeError("zero functional")
        pts = [normalize_point(ctx, f) for f in self.funcs]
        if len(set(pts)) != len(pts):
            raise CodeError("proportional functionals at distinct positions")
        if _rank(ctx, list(self.funcs), k) != k:
            raise CodeError("functionals do not span the dual space")

    @property
    def n(self):
        return len(self.funcs)

    def points(self):
        ctx = self.ctx
        return tuple(normalize_point(ctx, f) for f in self.funcs)

    def replace(self, i, f):
        funcs = list(self.funcs)
        funcs[i] = tuple(f)
        return FunctionalTuple(self.ctx, self.k, tuple(funcs))


def code_from_functionals(t):
    """The code whose generator columns are the functionals: row i is
    (f_1(b_i), ..., f_n(b_i)) for the standard basis of W.  Always projective."""
    rows = tuple(tuple(f[i] for f in t.funcs) for i in range(t.k))
    return LinearCode.from_generator(t.ctx, rows)


def functionals_of(code):
    """The functional tuple read off the canonical RREF generator columns."""
    if not code.is_projective():
        raise CodeError("functional tuples exist for projective codes only")
    return FunctionalTuple(code.ctx, code.k, tuple(code.columns()))


@dataclass(frozen=True)
class SpecialSet:
    """Unordered n-element point set of PG(k-1,q) spanning the space."""

    ctx: FieldCtx
    k: int
    points: frozenset

    def __post_init__(self):
        ctx, k = self.ctx, self.k
        pts = frozenset(tuple(p) for p in self.points)
        object.__setattr__(self, "points", pts)
        for p in pts:
            if len(p) != k or normalize_point(ctx, p) != p:
                raise CodeError("points must be normalized length-k vectors")
        if _rank(ctx, sorted(pts), k) != k:
            raise CodeError("point set is not special (does not span)")

    @property
    def n(self):
        return len(self.points)

    def sorted_points(self):
        return sorted(self.points)

    @classmethod
    def of_code(cls, code):
        return cls(code.ctx, code.k, frozenset(code.projective_system().points))

    def to_json(self):
        return {"k": self.k, "q": self.ctx.q,
                "modulus": list(self.ctx.modulus) if self.ctx.m > 1 else None,
                "points": [list(p) for p in self.sorted_points()]}

    @classmethod
    def from_json(cls, obj):
        ctx = FieldCtx.from_order(obj["q"], obj.get("modulus"))
        return cls(ctx, obj["k"], frozenset(tuple(p) for p in obj["points"]))


def independent_subset(item):
    """Greedy leftmost k-element independent subset; returns indices.

    Accepts a FunctionalTuple or any sequence of point/functional vectors.
    """
    if isinstance(item, FunctionalTuple):
        ctx, k, vecs = item.ctx, item.k, item.funcs
    elif isinstance(item, SpecialSet):
        ctx, k, vecs = item.ctx, item.k, item.sorted_points()
    else:
        raise TypeError("need a FunctionalTuple or SpecialSet")
    kept = []
    for i, v in enumerate(vecs):
        if _rank(ctx, [vecs[j] for j in kept] + [v], k) > len(kept):
            kept.append(i)
            if len(kept) == k:
                return tuple(kept)
    raise AssertionError("input violated the spanning invariant")


@dataclass(frozen=True)
class MonomialMap:
    """L(e_i) = scalars[i] * e_{sigma[i]} (0-based indices)."""

    sigma: tuple
    scalars: tuple

    def __post_init__(self):
        n = len(self.sigma)
        if sorted(self.sigma) != list(range(n)):
            raise CodeError("sigma is not a permutation")
        if len(self.scalars) != n or not all(self.scalars):
            raise CodeError("need n non-zero scalars")

    @classmethod
    def identity(cls, n):
        return cls(tuple(range(n)), (1,) * n)


def apply_monomial(l, c):
    """Image of code c under the monomial map, re-canonicalized."""
    ctx = c.ctx
    mul_t = ctx.mul_t
    rows = []
    for v in c.gen.rows:
        w = [0] * c.n
        for i, x in enumerate(v):
            w[l.sigma[i]] = mul_t[l.scalars[i]][x]
        rows.append(tuple(w))
    return LinearCode.from_generator(ctx, rows)


def monomial_maps(ctx, n):
    """All (q-1)^n * n! monomial maps, deterministic order."""
    nz = list(ctx.nonzero())
    for sigma in permutations(range(n)):
        for scalars in product(nz, repeat=n):
            yield MonomialMap(sigma, scalars)


def dual_automorphism_aligning(ctx, src_reps, dst_reps):
    """Invertible k x k matrix L over GF(q) with L src_i = dst_i exactly.

    Both rep lists must be bases of F_q^k; L = D S^{-1} with reps as columns.
    """
    k = len(src_reps)
    s = MatGF(ctx, tuple(zip(*src_reps)))  # columns = src reps
    d = MatGF(ctx, tuple(zip(*dst_reps)))
    sinv = _invert(s)
    from .matspace import matmul
    return matmul(d, sinv)


def _invert(m):
    ctx = m.ctx
    k = m.nrows
    if m.ncols != k:
        raise ValueError("not square")
    aug = [list(row) + [1 if i == j else 0 for j in range(k)]
           for i, row in enumerate(m.rows)]
    from .matspace import _rref
    reduced, pivots = _rref(ctx, aug, 2 * k)
    if pivots[:k] != tuple(range(k)) or len(reduced) != k:
        raise ValueError("singular matrix")
    return MatGF(ctx, tuple(tuple(row[k:]) for row in reduced))


def apply_dual(l, t):
    """Re-representation of a functional tuple by an automorphism of W*:
    the tuple (L f_1, ..., L f_n) builds the same code."""
    return FunctionalTuple(t.ctx, t.k, tuple(matvec(l, f) for f in t.funcs))


def gl_matrices(ctx, k, budget=None):
    """All invertible k x k matrices, by filtering the q^(k^2) candidates."""
    total = ctx.q ** (k * k)
    if budget is not None and total > budget:
        raise BudgetExceeded(total, budget)
    elems = list(ctx.elements())
    for entries in product(elems, repeat=k * k):
        rows = tuple(entries[i * k:(i + 1) * k] for i in range(k))
        if _rank(ctx, rows, k) == k:
            yield MatGF(ctx, rows)


def class_enumerate(x, budget=2_000_000):
    """All codes C(f_1,...,f_n) over orderings and scalar choices of the
    special set x, deduplicated by canonical form.

    A global scalar never changes the code, so the first scalar is pinned
    to 1; the candidate count is (q-1)^(n-1) * n!.
    """
    ctx, k, n = x.ctx, x.k, x.n
    total = factorial(n) * (ctx.q - 1) ** (n - 1)
    if total > budget:
        raise BudgetExceeded(total, budget)
    nz = list(ctx.nonzero())
    mul_t = ctx.mul_t
    pts = x.sorted_points()
    out = set()
    from .matspace import _rref
    for perm in permutations(pts):
        for scalars in product(nz, repeat=n - 1):
            scal = (1,) + scalars
            rows = tuple(tuple(mul_t[a][p[i]] for a, p in zip(scal, perm))
                         for i in range(k))
            reduced, _ = _rref(ctx, rows, n)
            out.add(tuple(reduced))
    from .grassmann import GrassmannParams
    params = GrassmannParams(ctx, n, k)
    return {LinearCode(params, MatGF(ctx, rows)) for rows in out}


def automorphism_group_order(c, budget=2_000_000):
    """Number of monomial maps fixing the code (brute force)."""
    ctx, n = c.ctx, c.n
    total = factorial(n) * (ctx.q - 1) ** n
    if total > budget:
        raise BudgetExceeded(total, budget)
    nz = list(ctx.nonzero())
    mul_t = ctx.mul_t
    gen = c.gen.rows
    target = gen
    from .matspace import _rref
    count = 0
    for sigma in permutations(range(n)):
        for scalars in product(nz, repeat=n):
            rows = []
            for v in gen:
                w = [0] * n
                for i, x in enumerate(v):
                    if x:
                        w[sigma[i]] = mul_t[scalars[i]][x]
                rows.append(tuple(w))
            reduced, _ = _rref(ctx, rows, n)
            if tuple(reduced) == target:
                count += 1
    return count


def classes_equal(x, y, budget=2_000_000):
    """True iff some invertible k x k matrix maps point set x onto y."""
    if x.ctx != y.ctx or x.k != y.k:
        raise CodeError("special sets over different spaces")
    if x.n != y.n:
        return False
    ctx = x.ctx
    ypts = y.points
    for l in gl_matrices(ctx, x.k, budget=budget):
        image = {normalize_point(ctx, matvec(l, p)) for p in x.points}
        if image == ypts:
            return True
    return False
