"""Linear [n,k]_q codes as canonical subspaces of F_q^n.

A code is identified with its RREF generator matrix, so code equality is
generator equality.  Predicates (non-degenerate, projective, MDS) are
computed from the generator columns and cached.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .field import FieldCtx
from .grassmann import GrassmannParams
from .matspace import (MatGF, Subspace, _rank, _rref, normalize_point,
                       parse_matrix)


class CodeError(ValueError):
    """Invalid code construction or a predicate precondition failure."""


@dataclass(frozen=True)
class ProjectiveSystem:
    """Ordered point list of a non-degenerate code: the generator columns
    read as points of PG(k-1, q).  Order is significant; repeats allowed."""

    ctx: FieldCtx
    k: int
    points: tuple  # normalized representatives, length n


class LinearCode:
    __slots__ = ("params", "gen", "space", "_nondeg", "_points", "_mds")

    def __init__(self, params, gen_rref):
        self.params = params
        self.gen = gen_rref
        self.space = Subspace(params.ctx, params.n, gen_rref.rows)
        self._nondeg = None
        self._points = None
        self._mds = None

    @classmethod
    def from_generator(cls, ctx, rows):
        """Canonical code from any full-rank generator matrix."""
        if isinstance(rows, MatGF):
            m = rows
        else:
            m = MatGF.from_rows(ctx, rows)
        k, n = m.nrows, m.ncols
        reduced, _ = _rref(ctx, m.rows, n)
        if len(reduced) < k:
            raise CodeError("not a generator matrix: rank %d < %d rows"
                            % (len(reduced), k))
        return cls(GrassmannParams(ctx, n, k), MatGF(ctx, tuple(reduced)))

    @classmethod
    def from_subspace(cls, s):
        return cls(GrassmannParams(s.ctx, s.n, s.dim), s.matrix())

    @classmethod
    def from_text(cls, ctx, text):
        return cls.from_generator(ctx, parse_matrix(ctx, text))

    @property
    def ctx(self):
        return self.params.ctx

    @property
    def n(self):
        return self.params.n

    @property
    def k(self):
        return self.params.k

    def columns(self):
        """Generator columns as raw (unnormalized) vectors of length k."""
        return self.gen.columns()

    def is_nondegenerate(self):
        if self._nondeg is None:
            self._nondeg = all(any(c) for c in self.columns())
        return self._nondeg

    def projective_system(self):
        if not self.is_nondegenerate():
            raise CodeError("degenerate code has no projective system")
        if self._points is None:
            ctx = self.ctx
            self._points = tuple(normalize_point(ctx, c) for c in self.columns())
        return ProjectiveSystem(self.ctx, self.k, self._points)

    def is_projective(self):
        if not self.is_nondegenerate():
            return False
        pts = self.projective_system().points
        return len(set(pts)) == self.n

    def is_mds_arc(self):
        """True iff the projective system is an n-arc: every k columns
        linearly independent."""
        if not self.is_projective():
            raise CodeError("MDS/arc predicate requires a projective code")
        if self._mds is None:
            ctx = self.ctx
            cols = self.columns()
            k = self.k
            self._mds = all(
                _rank(ctx, [cols[i] for i in idx], k) == k
                for idx in combinations(range(self.n), k))
        return self._mds

    # -- identity ----------------------------------------------------------

    def key(self):
        return (self.ctx._key, self.gen.rows)

    def __eq__(self, other):
        return isinstance(other, LinearCode) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        from .matspace import format_matrix
        return "LinearCode([%d,%d]_%d: %s)" % (self.n, self.k, self.ctx.q,
                                               format_matrix(self.gen))

    # -- JSON form ----------------------------------------------------------

    def to_json(self):
        return {"q": self.ctx.q,
                "modulus": list(self.ctx.modulus) if self.ctx.m > 1 else None,
                "n": self.n, "k": self.k,
                "gen": [list(r) for r in self.gen.rows]}

    @classmethod
    def from_json(cls, obj):
        ctx = FieldCtx.from_order(obj["q"], obj.get("modulus"))
        code = cls.from_generator(ctx, obj["gen"])
        if code.n != obj["n"] or code.k != obj["k"]:
            raise CodeError("JSON n/k fields disagree with the generator shape")
        return code
