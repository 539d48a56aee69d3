"""The Grassmann graph: k-dim subspaces of F_q^n, adjacent when their
intersection has dimension k-1."""

from __future__ import annotations

from dataclasses import dataclass

from .field import FieldCtx
from .matspace import (Subspace, _rank, enumerate_subspaces, matvec, MatGF,
                       projective_points, span)


@dataclass(frozen=True)
class GrassmannParams:
    ctx: FieldCtx
    n: int
    k: int

    def __post_init__(self):
        if not 0 < self.k < self.n:
            raise ValueError("need 0 < k < n")

    def require_graph(self):
        """Graph-level operations assume 1 < k < n-1; for k in {1, n-1}
        all distinct vertices are adjacent and the graph is degenerate."""
        if not 1 < self.k < self.n - 1:
            raise ValueError(
                "Grassmann graph operations need 1 < k < n-1 "
                "(for k = 1 or k = n-1 any two distinct vertices are adjacent)")

    @property
    def q(self):
        return self.ctx.q


def _check_pair(x, y):
    if x.ctx != y.ctx or x.n != y.n:
        raise ValueError("subspaces from different ambient spaces")
    if x.dim != y.dim:
        raise ValueError("vertices of the Grassmann graph must have equal dimension")


def intersection_dim(x, y):
    _check_pair(x, y)
    r = _rank(x.ctx, list(x.basis) + list(y.basis), x.n)
    return x.dim + y.dim - r


def adjacent(x, y):
    return intersection_dim(x, y) == x.dim - 1


def distance(x, y):
    """Grassmann-graph distance: k - dim(x cap y)."""
    return x.dim - intersection_dim(x, y)


def _insert_vector(ctx, basis, pivots, vec):
    """Canonical basis of span(basis + vec); basis must be RREF, vec outside it."""
    sub_t, mul_t, inv_t = ctx.sub_t, ctx.mul_t, ctx.inv_t
    n = len(vec)
    v = list(vec)
    for row, p in zip(basis, pivots):
        f = v[p]
        if f:
            mt = mul_t[f]
            for j in range(p, n):
                if row[j]:
                    v[j] = sub_t[v[j]][mt[row[j]]]
    pv = 0
    while pv < n and not v[pv]:
        pv += 1
    assert pv < n, "vector already in the subspace"
    if v[pv] != 1:
        mt = mul_t[inv_t[v[pv]]]
        v = [mt[x] for x in v]
    out = []
    placed = False
    newrow = tuple(v)
    for row, p in zip(basis, pivots):
        if not placed and pv < p:
            out.append(newrow)
            placed = True
        if row[pv]:
            mt = mul_t[row[pv]]
            row = tuple(sub_t[x][mt[y]] for x, y in zip(row, newrow))
        out.append(row)
    if not placed:
        out.append(newrow)
    return tuple(out)


def hyperplanes_of(x):
    """All (dim-1)-subspaces of x, canonical in the ambient space."""
    ctx = x.ctx
    k = x.dim
    bmat = MatGF(ctx, x.basis)
    for coeff in enumerate_subspaces(ctx, k, k - 1):
        rows = [matvec(bmat.transpose(), c) for c in coeff.basis]
        yield span(ctx, rows, x.n)


def neighbors(x, params=None):
    """Every k-dim y with dim(x cap y) = k-1, each exactly once.

    Built as h + line for each hyperplane h of x and each projective point
    outside x, deduplicated by canonical basis.
    """
    ctx = x.ctx
    if params is not None:
        params.require_graph()
    else:
        GrassmannParams(ctx, x.n, x.dim).require_graph()
    outside = [pt for pt in projective_points(ctx, x.n) if not x.contains(pt)]
    seen = set()
    for h in hyperplanes_of(x):
        hb, hp = h.basis, h.pivots()
        for v in outside:
            b = _insert_vector(ctx, hb, hp, v)
            if b not in seen:
                seen.add(b)
                yield Subspace(ctx, x.n, b)
