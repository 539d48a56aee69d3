"""Certified paths between projective codes in the Grassmann graph.

Moves operate on functional tuples: scaling one functional, transposing
two positions, or swapping one point for a fresh one.  Every move carries
a witness hyperplane H of W whose image under the evaluation map is a
(k-1)-dim subspace contained in both endpoint codes, so each emitted edge
is independently checkable.  Moves that leave the code unchanged are
compressed out of the certificate.
"""

from __future__ import annotations

from dataclasses import dataclass

from .codes import CodeError, LinearCode
from .field import FieldCtx
from .grassmann import intersection_dim
from .matspace import (MatGF, Subspace, _rank, dot, kernel, span)
from .projective import (FunctionalTuple, apply_dual, code_from_functionals,
                         dual_automorphism_aligning, functionals_of,
                         independent_subset)


class PathError(ValueError):
    """Invalid input to a path construction."""


@dataclass(frozen=True)
class PathStep:
    kind: str            # "scale" | "transpose" | "swap"
    indices: tuple       # affected coordinate position(s), 0-based
    detail: object       # scalar / index pair / (old point, new functional)
    witness: Subspace    # hyperplane H of W certifying the move
    before: FunctionalTuple = None
    after: FunctionalTuple = None


@dataclass
class PathCertificate:
    vertices: list
    steps: list
    swap_stages: int = 0
    compressed: int = 0

    @property
    def length(self):
        return len(self.steps)

    def endpoints(self):
        return self.vertices[0], self.vertices[-1]

    def to_json(self):
        c = self.vertices[0]
        ctx = c.ctx
        steps = []
        for s in self.steps:
            rec = {"kind": s.kind, "i": s.indices[0], "j": None, "a": None,
                   "witness": [list(r) for r in s.witness.basis]}
            if s.kind == "transpose":
                rec["j"] = s.indices[1]
            elif s.kind == "scale":
                rec["a"] = s.detail
            elif s.kind == "swap":
                old, new = s.detail
                rec["old_point"] = list(old)
                rec["new"] = list(new)
            steps.append(rec)
        return {"params": {"q": ctx.q,
                           "modulus": list(ctx.modulus) if ctx.m > 1 else None,
                           "n": c.n, "k": c.k},
                "vertices": [[list(r) for r in v.gen.rows] for v in self.vertices],
                "steps": steps,
                "swap_stages": self.swap_stages,
                "compressed": self.compressed}

    @classmethod
    def from_json(cls, obj):
        p = obj["params"]
        ctx = FieldCtx.from_order(p["q"], p.get("modulus"))
        vertices = [LinearCode.from_generator(ctx, rows) for rows in obj["vertices"]]
        steps = []
        for rec in obj["steps"]:
            kind = rec["kind"]
            if kind == "transpose":
                indices, detail = (rec["i"], rec["j"]), (rec["i"], rec["j"])
            elif kind == "scale":
                indices, detail = (rec["i"],), rec["a"]
            else:
                indices = (rec["i"],)
                detail = (tuple(rec["old_point"]), tuple(rec["new"]))
            witness = span(ctx, [tuple(r) for r in rec["witness"]], p["k"])
            steps.append(PathStep(kind, indices, detail, witness))
        return cls(vertices, steps, obj["swap_stages"], obj["compressed"])


def _sub_vec(ctx, u, v):
    sub_t = ctx.sub_t
    return tuple(sub_t[x][y] for x, y in zip(u, v))


def _witness(ctx, k, diff, fallback):
    """Hyperplane ker(diff); if diff = 0 the move is a no-op and the
    scale-style witness ker(fallback) serves."""
    vec = diff if any(diff) else fallback
    return kernel(MatGF(ctx, (vec,)))


def scale_step(t, i, a):
    """Replace f_i by a*f_i; witness is the hyperplane f_i x = 0."""
    if a == 0:
        raise PathError("scale factor must be non-zero")
    ctx = t.ctx
    f = t.funcs[i]
    mt = ctx.mul_t[a]
    t2 = t.replace(i, tuple(mt[x] for x in f))
    w = kernel(MatGF(ctx, (f,)))
    return t2, PathStep("scale", (i,), a, w, t, t2)


def transpose_step(t, i, j):
    """Swap positions i and j; witness is the hyperplane f_i x = f_j x."""
    if i == j:
        raise PathError("transposition needs distinct positions")
    ctx = t.ctx
    fi, fj = t.funcs[i], t.funcs[j]
    diff = _sub_vec(ctx, fi, fj)
    if not any(diff):
        raise AssertionError("equal functionals at distinct positions")
    funcs = list(t.funcs)
    funcs[i], funcs[j] = fj, fi
    t2 = FunctionalTuple(ctx, t.k, tuple(funcs))
    w = kernel(MatGF(ctx, (diff,)))
    return t2, PathStep("transpose", (i, j), (i, j), w, t, t2)


def swap_step(t, i, y):
    """Replace f_i by the functional y; witness is the hyperplane f_i x = y x.

    The caller must keep the tuple special: the replacement is validated by
    the FunctionalTuple invariants.
    """
    y = tuple(y)
    if not any(y):
        raise PathError("replacement functional is zero")
    ctx = t.ctx
    fi = t.funcs[i]
    try:
        t2 = t.replace(i, y)
    except CodeError as e:
        raise PathError("swap breaks tuple conditions: %s" % e)
    from .matspace import normalize_point
    diff = _sub_vec(ctx, fi, y)
    w = _witness(ctx, t.k, diff, fi)
    detail = (normalize_point(ctx, fi), y)
    return t2, PathStep("swap", (i,), detail, w, t, t2)


class _Builder:
    """Accumulates moves, recording a vertex only when the code changes."""

    def __init__(self, t):
        self.t = t
        self.vertices = [code_from_functionals(t)]
        self.steps = []
        self.compressed = 0
        self.swap_stages = 0

    def push(self, t2, step):
        c2 = code_from_functionals(t2)
        if c2 == self.vertices[-1]:
            self.compressed += 1
        else:
            self.vertices.append(c2)
            self.steps.append(step)
        self.t = t2

    def scale(self, i, a):
        self.push(*scale_step(self.t, i, a))

    def transpose(self, i, j):
        self.push(*transpose_step(self.t, i, j))

    def swap(self, i, y):
        self.swap_stages += 1
        self.push(*swap_step(self.t, i, y))

    def certificate(self):
        return PathCertificate(self.vertices, self.steps,
                               self.swap_stages, self.compressed)


def scalar_chain(t, scalars):
    """Scale coordinate i by scalars[i], one move per coordinate.

    Returns (final tuple, partial certificate)."""
    if len(scalars) != t.n or not all(scalars):
        raise PathError("need %d non-zero scalars" % t.n)
    b = _Builder(t)
    for i, a in enumerate(scalars):
        if a != 1:
            b.scale(i, a)
    return b.t, b.certificate()


def permutation_chain(t, sigma):
    """Reorder the tuple so position j ends up holding f_{sigma(j)},
    via at most n-1 transpositions (selection order, deterministic)."""
    n = t.n
    if sorted(sigma) != list(range(n)):
        raise PathError("sigma is not a permutation")
    target = [t.funcs[sigma[j]] for j in range(n)]
    b = _Builder(t)
    for j in range(n):
        if b.t.funcs[j] != target[j]:
            i = next(i for i in range(j + 1, n) if b.t.funcs[i] == target[j])
            b.transpose(j, i)
    return b.t, b.certificate()


def _match_tail(b, t_target):
    """Transpositions then scalings turning b.t into t_target exactly;
    assumes the point sets already coincide."""
    ctx = b.t.ctx
    from .matspace import normalize_point
    tgt_pts = [normalize_point(ctx, f) for f in t_target.funcs]
    n = b.t.n
    for j in range(n):
        cur_pts = [normalize_point(ctx, f) for f in b.t.funcs]
        if cur_pts[j] != tgt_pts[j]:
            i = next(i for i in range(j + 1, n) if cur_pts[i] == tgt_pts[j])
            b.transpose(j, i)
    for j in range(n):
        f, y = b.t.funcs[j], t_target.funcs[j]
        p = next(i for i, x in enumerate(f) if x)
        a = ctx.div(y[p], f[p])
        if a != 1:
            b.scale(j, a)
    assert b.t.funcs == t_target.funcs


def _swap_chain(b, target_points):
    """Lex-least one-point swaps until the current point set equals the target."""
    while True:
        cur = set(b.t.points())
        if cur == target_points:
            return
        p = min(cur - target_points)
        q = min(target_points - cur)
        i = b.t.points().index(p)
        b.swap(i, q)


def connect(c, c2):
    """Certified projective path from c to c2:
    align an independent subset of the point sets by a dual automorphism,
    swap leftover points one at a time, then match ordering and scalars."""
    _require_same_params(c, c2)
    for x in (c, c2):
        if not x.is_projective():
            raise PathError("connect requires projective codes")
    if c == c2:
        return PathCertificate([c], [])
    ctx = c.ctx
    tx, ty = functionals_of(c), functionals_of(c2)
    ptsx, ptsy = tx.points(), ty.points()
    ix = independent_subset(tx)
    iy = independent_subset(ty)
    l = dual_automorphism_aligning(ctx, [ptsx[i] for i in ix],
                                   [ptsy[i] for i in iy])
    t0 = apply_dual(l, tx)
    assert code_from_functionals(t0) == c, "re-representation must fix the code"
    b = _Builder(t0)
    _swap_chain(b, set(ptsy))
    _match_tail(b, ty)
    cert = b.certificate()
    assert cert.vertices[0] == c and cert.vertices[-1] == c2
    assert cert.swap_stages <= c.n - c.k
    return cert


def mds_chain(c, c2):
    """All-MDS path between MDS codes; requires the union of the two point
    sets to be an arc, so every intermediate n-subset is an n-arc."""
    _require_same_params(c, c2)
    for x in (c, c2):
        if not (x.is_projective() and x.is_mds_arc()):
            raise PathError("mds_chain requires MDS codes")
    if c == c2:
        return PathCertificate([c], [])
    ctx, k = c.ctx, c.k
    tx, ty = functionals_of(c), functionals_of(c2)
    union = sorted(set(tx.points()) | set(ty.points()))
    if not _is_arc(ctx, union, k):
        raise PathError("no arc chain available: the union of the point sets "
                        "is not an arc")
    b = _Builder(tx)
    _swap_chain(b, set(ty.points()))
    _match_tail(b, ty)
    cert = b.certificate()
    assert cert.vertices[0] == c and cert.vertices[-1] == c2
    return cert


def _is_arc(ctx, points, k):
    from itertools import combinations
    return all(_rank(ctx, list(sub), k) == k
               for sub in combinations(points, k))


def _require_same_params(c, c2):
    if c.params != c2.params:
        raise PathError("codes have different (n, k, q)")


@dataclass(frozen=True)
class CheckResult:
    ok: bool
    reason: str = ""

    def __bool__(self):
        return self.ok


def verify_certificate(cert, predicate="projective"):
    """Re-check every certificate invariant from first principles.

    Checks vertex predicates, pairwise adjacency by rank, and (when the
    steps carry their functional tuples) that each witness hyperplane has
    dimension k-1 and maps into both neighbouring codes with equal image.
    """
    if not cert.vertices:
        return CheckResult(False, "empty vertex list")
    c0 = cert.vertices[0]
    ctx, n, k = c0.ctx, c0.n, c0.k
    for idx, v in enumerate(cert.vertices):
        if v.params != c0.params:
            return CheckResult(False, "vertex %d has mismatched parameters" % idx)
        try:
            if predicate == "projective":
                good = v.is_projective()
            elif predicate == "mds":
                good = v.is_projective() and v.is_mds_arc()
            else:
                raise ValueError("unknown predicate %r" % predicate)
        except CodeError:
            good = False
        if not good:
            return CheckResult(False, "vertex %d fails predicate %r" % (idx, predicate))
    if len(cert.steps) != len(cert.vertices) - 1:
        return CheckResult(False, "step count does not match vertex count")
    for idx, (a, b) in enumerate(zip(cert.vertices, cert.vertices[1:])):
        if intersection_dim(a.space, b.space) != k - 1:
            return CheckResult(False, "vertices %d,%d are not adjacent" % (idx, idx + 1))
    for idx, s in enumerate(cert.steps):
        w = s.witness
        if w.n != k or w.dim != k - 1:
            return CheckResult(False, "step %d witness is not a hyperplane of W" % idx)
        if s.before is None or s.after is None:
            continue  # JSON round-trips drop the tuples; dims already checked
        va, vb = cert.vertices[idx], cert.vertices[idx + 1]
        if code_from_functionals(s.before) != va:
            return CheckResult(False, "step %d 'before' tuple mismatch" % idx)
        if code_from_functionals(s.after) != vb:
            return CheckResult(False, "step %d 'after' tuple mismatch" % idx)
        img_a = _evaluate_image(s.before, w)
        img_b = _evaluate_image(s.after, w)
        if img_a != img_b:
            return CheckResult(False, "step %d witness images differ" % idx)
        if img_a.dim != k - 1:
            return CheckResult(False, "step %d witness image has wrong dimension" % idx)
        if not (img_a <= va.space and img_a <= vb.space):
            return CheckResult(False, "step %d witness image not in both codes" % idx)
    return CheckResult(True)


def _evaluate_image(t, h):
    """Image of the hyperplane h of W under the evaluation map
    x -> (f_1 x, ..., f_n x)."""
    ctx = t.ctx
    rows = [tuple(dot(ctx, f, hvec) for f in t.funcs) for hvec in h.basis]
    return span(ctx, rows, t.n)
