import os

import pytest

from projcodes import oracle
from projcodes.codes import LinearCode
from projcodes.field import FieldCtx
from projcodes.grassmann import GrassmannParams, distance
from projcodes.matspace import BudgetExceeded, span

GOLDEN = os.path.join(os.path.dirname(__file__), "golden")


def params(q, n, k):
    return GrassmannParams(FieldCtx.from_order(q), n, k)


def test_get_predicate():
    assert oracle.get_predicate("mds") is oracle.PREDICATES["mds"]
    with pytest.raises(ValueError, match="unknown predicate"):
        oracle.get_predicate("nope")


def test_enumeration_counts_projective():
    assert len(oracle.enumerate_codes(params(3, 4, 2), "projective")) == 8
    assert len(oracle.enumerate_codes(params(2, 6, 3), "projective")) == 30
    assert len(oracle.enumerate_codes(params(2, 7, 3), "projective")) == 30


def test_projective_count_5_3_2_golden():
    """The [5,3]_2 projective-code count, frozen in a golden file the first
    time the enumeration runs."""
    got = len(oracle.enumerate_codes(params(2, 5, 3), "projective"))
    path = os.path.join(GOLDEN, "count_5_3_2_projective.txt")
    if not os.path.exists(path):
        os.makedirs(GOLDEN, exist_ok=True)
        with open(path, "w") as fh:
            fh.write("%d\n" % got)
    with open(path) as fh:
        assert got == int(fh.read().strip())
    assert got == 15


def test_counts_cross_checked_by_orbit_counting():
    """#codes = #(ordered tuples of distinct spanning points) * (q-1)^n
    / |GL(k,q)|, since monomial data maps onto generator matrices with
    GL-sized fibres."""
    from itertools import permutations
    from projcodes.matspace import _rank, projective_points

    def count(q, n, k):
        ctx = FieldCtx.from_order(q)
        pts = list(projective_points(ctx, k))
        tuples = sum(1 for t in permutations(pts, n) if _rank(ctx, list(t), k) == k)
        gl = 1
        for i in range(k):
            gl *= q ** k - q ** i
        num = tuples * (q - 1) ** n
        assert num % gl == 0
        return num // gl

    assert count(3, 4, 2) == 8
    assert count(2, 5, 3) == 15
    assert count(2, 6, 3) == 30
    assert count(2, 7, 3) == 30


def test_enumeration_budget_refusal():
    with pytest.raises(BudgetExceeded):
        oracle.enumerate_codes(params(2, 7, 3), "all", budget=100)


def test_bfs_within_matches_grassmann_distance_without_restriction():
    p = params(3, 4, 2)
    codes = oracle.enumerate_codes(p, "all")
    start = codes[0]
    dist = oracle.bfs_within(start, "all")
    assert len(dist) == len(codes)
    for c in codes:
        assert dist[c] == distance(start.space, c.space)


def test_bfs_within_rejects_bad_start(f2):
    degenerate = LinearCode.from_text(f2, "1,0,0,0;0,1,0,0")
    with pytest.raises(ValueError, match="predicate"):
        oracle.bfs_within(degenerate, "projective")


def test_report_projective_connected():
    for q, n, k, count in [(3, 4, 2, 8), (2, 5, 3, 15),
                           (2, 6, 3, 30), (2, 7, 3, 30)]:
        rep = oracle.report(params(q, n, k), "projective")
        assert rep.vertex_count == count
        assert rep.component_count == 1
        assert rep.component_sizes == [count]
        assert rep.detour_pairs == 0
        js = rep.to_json()
        assert js["vertex_count"] == count and js["predicate"] == "projective"


def test_report_nondegenerate_5_3_2():
    rep = oracle.report(params(2, 5, 3), "nondegenerate")
    assert rep.component_count == 1
    assert rep.detour_pairs == 0
    # nondegenerate is weaker than projective, so at least as many vertices
    assert rep.vertex_count >= 15


def test_detour_in_nondegenerate_subgraph_9_2_2(f2):
    """A genuine detour: two planes of F_2^9 at Grassmann distance 2 whose
    within-subgraph distance (nondegenerate codes only) is larger.

    Coordinates are indexed by a 3x3 grid, position (a, b) -> 3a + b.
    X is spanned by the indicators of rows a != 1 and a != 2; Y by the
    indicators of columns b != 1 and b != 2.  Every candidate middle plane
    span{x, y} with x in X, y in Y has a zero coordinate, so no common
    neighbour survives the predicate and the BFS distance exceeds 2."""
    def row_vec(excluded):
        return tuple(0 if a == excluded else 1 for a in range(3) for b in range(3))

    def col_vec(excluded):
        return tuple(0 if b == excluded else 1 for a in range(3) for b in range(3))

    x = LinearCode.from_subspace(span(f2, [row_vec(1), row_vec(2)]))
    y = LinearCode.from_subspace(span(f2, [col_vec(1), col_vec(2)]))
    assert x.is_nondegenerate() and y.is_nondegenerate()
    assert distance(x.space, y.space) == 2
    # direct check: every common-neighbour candidate is degenerate
    from itertools import product
    for cx in product(range(2), repeat=2):
        for cy in product(range(2), repeat=2):
            if not any(cx) or not any(cy):
                continue
            u = [0] * 9
            v = [0] * 9
            for c, vec in zip(cx, [row_vec(1), row_vec(2)]):
                if c:
                    u = [p ^ q for p, q in zip(u, vec)]
            for c, vec in zip(cy, [col_vec(1), col_vec(2)]):
                if c:
                    v = [p ^ q for p, q in zip(v, vec)]
            mid = LinearCode.from_subspace(span(f2, [u, v]))
            assert not mid.is_nondegenerate()
    # and BFS agrees: the within-subgraph distance is strictly larger
    dist = oracle.bfs_within(x, "nondegenerate")
    assert dist[y] > 2


def test_pairwise_distances_csv():
    p = params(3, 4, 2)
    csv = oracle.pairwise_distances_csv(p, "projective")
    lines = csv.strip().split("\n")
    assert len(lines) == 9  # header + 8 codes
    assert lines[0].startswith("code,")
    # connected subgraph: no blank cells
    for line in lines[1:]:
        cells = line.split(",")[-8:]
        assert all(c != "" for c in cells)
    with pytest.raises(BudgetExceeded):
        oracle.pairwise_distances_csv(p, "all", limit=10)


def test_count_subspaces():
    assert oracle.count_subspaces(params(3, 4, 2)) == 130
    assert oracle.count_subspaces(params(2, 7, 3)) == 11811
