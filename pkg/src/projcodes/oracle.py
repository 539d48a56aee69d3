"""Brute-force ground truth: exhaustive code enumeration, predicate-restricted
BFS, component censuses, and detour detection.

Deliberately independent of the pathfinder: everything here is built from
subspace enumeration, grassmann.neighbors and the code predicates, so the
reports can act as an oracle for the constructive machinery.
"""

from __future__ import annotations

import io
from collections import deque
from dataclasses import dataclass

from .codes import LinearCode
from .grassmann import intersection_dim, neighbors
from .matspace import BudgetExceeded, enumerate_subspaces, gaussian_binomial

DEFAULT_BUDGET = 10 ** 6


def _pred_all(c):
    return True


def _pred_nondegenerate(c):
    return c.is_nondegenerate()


def _pred_projective(c):
    return c.is_projective()


def _pred_mds(c):
    return c.is_projective() and c.is_mds_arc()


PREDICATES = {
    "all": _pred_all,
    "nondegenerate": _pred_nondegenerate,
    "projective": _pred_projective,
    "mds": _pred_mds,
}


def get_predicate(name):
    try:
        return PREDICATES[name]
    except KeyError:
        raise ValueError("unknown predicate %r (choose from %s)"
                         % (name, ", ".join(sorted(PREDICATES))))


@dataclass
class SubgraphReport:
    q: int
    n: int
    k: int
    predicate: str
    vertex_count: int
    component_count: int
    component_sizes: list
    diameter_within: int  # largest finite eccentricity
    detour_pairs: int     # pairs with within-distance > Grassmann distance

    def to_json(self):
        return {"q": self.q, "n": self.n, "k": self.k,
                "predicate": self.predicate,
                "vertex_count": self.vertex_count,
                "component_count": self.component_count,
                "component_sizes": self.component_sizes,
                "diameter_within": self.diameter_within,
                "detour_pairs": self.detour_pairs}


def enumerate_codes(params, predicate, budget=DEFAULT_BUDGET):
    """All codes with the given parameters passing the predicate,
    sorted by canonical generator (deterministic)."""
    if isinstance(predicate, str):
        predicate = get_predicate(predicate)
    out = []
    for s in enumerate_subspaces(params.ctx, params.n, params.k, budget=budget):
        c = LinearCode.from_subspace(s)
        if predicate(c):
            out.append(c)
    out.sort(key=lambda c: c.gen.rows)
    return out


def neighbors_within(code, predicate):
    """Neighbouring codes in the predicate-restricted subgraph."""
    if isinstance(predicate, str):
        predicate = get_predicate(predicate)
    for s in neighbors(code.space, code.params):
        c = LinearCode.from_subspace(s)
        if predicate(c):
            yield c


def bfs_within(start, predicate, _memo=None):
    """Exact BFS distances from start inside the restricted subgraph.

    Unreachable vertices are absent from the map.  `_memo` may be shared
    across calls to reuse neighbour lists.
    """
    if isinstance(predicate, str):
        predicate = get_predicate(predicate)
    if not predicate(start):
        raise ValueError("start vertex fails the predicate")
    memo = _memo if _memo is not None else {}
    dist = {start: 0}
    frontier = deque([start])
    while frontier:
        v = frontier.popleft()
        nbrs = memo.get(v)
        if nbrs is None:
            nbrs = list(neighbors_within(v, predicate))
            memo[v] = nbrs
        d = dist[v] + 1
        for w in nbrs:
            if w not in dist:
                dist[w] = d
                frontier.append(w)
    return dist


def adjacency_within(vertices, predicate):
    """Adjacency lists over the given vertex set, one neighbour sweep each."""
    if isinstance(predicate, str):
        predicate = get_predicate(predicate)
    vset = set(vertices)
    adj = {}
    for v in vertices:
        adj[v] = [w for w in neighbors_within(v, predicate) if w in vset]
    return adj


def _bfs_on_lists(adj, start):
    dist = {start: 0}
    frontier = deque([start])
    while frontier:
        v = frontier.popleft()
        d = dist[v] + 1
        for w in adj[v]:
            if w not in dist:
                dist[w] = d
                frontier.append(w)
    return dist


def report(params, predicate, budget=DEFAULT_BUDGET):
    """Full component census of the predicate-restricted subgraph, plus the
    count of pairs whose within-subgraph distance exceeds k - dim(cap)."""
    name = predicate if isinstance(predicate, str) else getattr(predicate, "__name__", "custom")
    vertices = enumerate_codes(params, predicate, budget=budget)
    adj = adjacency_within(vertices, predicate)
    seen = set()
    component_sizes = []
    diameter = 0
    detours = 0
    all_dists = {}
    for v in vertices:
        if v in seen:
            continue
        comp = _bfs_on_lists(adj, v)
        seen.update(comp)
        component_sizes.append(len(comp))
    for v in vertices:
        dist = _bfs_on_lists(adj, v)
        all_dists[v] = dist
        if dist:
            diameter = max(diameter, max(dist.values()))
    k = params.k
    for i, v in enumerate(vertices):
        dv = all_dists[v]
        for w in vertices[i + 1:]:
            dw = dv.get(w)
            if dw is not None and dw > k - intersection_dim(v.space, w.space):
                detours += 1
    component_sizes.sort(reverse=True)
    return SubgraphReport(params.q, params.n, params.k,
                          name if isinstance(name, str) else str(name),
                          len(vertices), len(component_sizes),
                          component_sizes, diameter, detours)


def pairwise_distances_csv(params, predicate, budget=DEFAULT_BUDGET, limit=500):
    """CSV of within-subgraph pairwise distances ('' when unreachable)."""
    vertices = enumerate_codes(params, predicate, budget=budget)
    if len(vertices) > limit:
        raise BudgetExceeded(len(vertices), limit)
    adj = adjacency_within(vertices, predicate)
    from .matspace import format_matrix
    labels = [format_matrix(v.gen) for v in vertices]
    buf = io.StringIO()
    buf.write("code," + ",".join('"%s"' % l for l in labels) + "\n")
    for v, lab in zip(vertices, labels):
        dist = _bfs_on_lists(adj, v)
        row = [str(dist[w]) if w in dist else "" for w in vertices]
        buf.write('"%s",' % lab + ",".join(row) + "\n")
    return buf.getvalue()


def count_subspaces(params):
    return gaussian_binomial(params.n, params.k, params.q)
