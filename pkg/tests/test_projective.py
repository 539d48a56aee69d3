from math import factorial

import pytest

from projcodes.codes import CodeError, LinearCode
from projcodes.matspace import BudgetExceeded, enumerate_subspaces
from projcodes.projective import (FunctionalTuple, MonomialMap, SpecialSet,
                                  apply_dual, apply_monomial,
                                  automorphism_group_order, class_enumerate,
                                  classes_equal, code_from_functionals,
                                  dual_automorphism_aligning, functionals_of,
                                  gl_matrices, independent_subset,
                                  monomial_maps)

SIMPLEX_73 = "1,0,0,1,1,0,1;0,1,0,1,0,1,1;0,0,1,0,1,1,1"
ARC_423 = "1,0,1,1;0,1,1,2"


def test_functional_tuple_validation(f3):
    FunctionalTuple(f3, 2, ((1, 0), (0, 1), (1, 1)))
    with pytest.raises(CodeError, match="zero"):
        FunctionalTuple(f3, 2, ((1, 0), (0, 0)))
    with pytest.raises(CodeError, match="proportional"):
        FunctionalTuple(f3, 2, ((1, 0), (0, 1), (0, 2)))
    with pytest.raises(CodeError, match="span"):
        FunctionalTuple(f3, 3, ((1, 0, 0), (0, 1, 0), (1, 1, 0)))
    with pytest.raises(CodeError, match="arity"):
        FunctionalTuple(f3, 2, ((1, 0, 0), (0, 1, 0)))


def test_code_functionals_roundtrip(f3, f2):
    for text, ctx in [(ARC_423, f3), (SIMPLEX_73, f2)]:
        c = LinearCode.from_text(ctx, text)
        t = functionals_of(c)
        assert code_from_functionals(t) == c
    with pytest.raises(CodeError):
        functionals_of(LinearCode.from_text(f2, "1,0,1;0,1,0"))


def test_scaling_one_functional_changes_code_global_does_not(f3):
    t = functionals_of(LinearCode.from_text(f3, ARC_423))
    c = code_from_functionals(t)
    # scale position 3 alone
    t_one = t.replace(3, tuple(f3.mul(2, a) for a in t.funcs[3]))
    assert code_from_functionals(t_one) != c
    # scale every position by the same unit
    t_all = FunctionalTuple(f3, 2, tuple(
        tuple(f3.mul(2, a) for a in f) for f in t.funcs))
    assert code_from_functionals(t_all) == c


def test_special_set(f3):
    x = SpecialSet(f3, 2, frozenset({(1, 0), (0, 1), (1, 1), (1, 2)}))
    assert x.n == 4
    assert SpecialSet.from_json(x.to_json()) == x
    c = LinearCode.from_text(f3, ARC_423)
    assert SpecialSet.of_code(c) == x
    with pytest.raises(CodeError, match="normalized"):
        SpecialSet(f3, 2, frozenset({(2, 1), (0, 1), (1, 1)}))
    with pytest.raises(CodeError, match="span"):
        SpecialSet(f3, 2, frozenset({(1, 0)}))


def test_independent_subset(f2):
    # greedy leftmost skips the dependent third position
    t = FunctionalTuple(f2, 3, ((1, 0, 0), (0, 1, 0), (1, 1, 0), (0, 0, 1)))
    assert independent_subset(t) == (0, 1, 3)
    x = SpecialSet(f2, 2, frozenset({(1, 0), (0, 1), (1, 1)}))
    idx = independent_subset(x)
    pts = x.sorted_points()
    assert len(idx) == 2 and pts[idx[0]] != pts[idx[1]]


def test_monomial_map_validation_and_count(f3):
    with pytest.raises(CodeError):
        MonomialMap((0, 0, 1), (1, 1, 1))
    with pytest.raises(CodeError):
        MonomialMap((0, 1), (1, 0))
    assert MonomialMap.identity(3).sigma == (0, 1, 2)
    maps = list(monomial_maps(f3, 3))
    assert len(maps) == factorial(3) * 2 ** 3
    assert len(set(maps)) == len(maps)


def test_apply_monomial_preserves_class(f3):
    c = LinearCode.from_text(f3, ARC_423)
    x = SpecialSet.of_code(c)
    l = MonomialMap((2, 0, 3, 1), (1, 2, 2, 1))
    c2 = apply_monomial(l, c)
    assert c2.is_projective()
    assert SpecialSet.of_code(c2) == x  # same unordered point set
    assert apply_monomial(MonomialMap.identity(4), c) == c


def test_class_is_the_monomial_orbit(f3):
    c = LinearCode.from_text(f3, ARC_423)
    x = SpecialSet.of_code(c)
    members = class_enumerate(x)
    orbit = {apply_monomial(l, c) for l in monomial_maps(f3, 4)}
    assert members == orbit
    assert c in members


def test_class_size_formula(f3, f2):
    """|class| * |Aut| = (q-1)^n * n! at both desk instances."""
    for text, ctx in [(ARC_423, f3), (SIMPLEX_73, f2)]:
        c = LinearCode.from_text(ctx, text)
        x = SpecialSet.of_code(c)
        members = class_enumerate(x)
        m = automorphism_group_order(c)
        assert len(members) * m == (ctx.q - 1) ** c.n * factorial(c.n)


def test_known_class_sizes(f3, f2):
    c = LinearCode.from_text(f3, ARC_423)
    assert len(class_enumerate(SpecialSet.of_code(c))) == 8
    assert automorphism_group_order(c) == 48
    s = LinearCode.from_text(f2, SIMPLEX_73)
    assert len(class_enumerate(SpecialSet.of_code(s))) == 30
    assert automorphism_group_order(s) == 168


def test_class_partitions_projective_codes_4_2_3(f3):
    codes = [LinearCode.from_subspace(s) for s in enumerate_subspaces(f3, 4, 2)]
    proj = [c for c in codes if c.is_projective()]
    members = class_enumerate(SpecialSet.of_code(proj[0]))
    assert members == set(proj)  # single class at this instance


def test_dual_automorphism_alignment(f3):
    src = [(1, 0), (1, 1)]
    dst = [(0, 1), (1, 2)]
    l = dual_automorphism_aligning(f3, src, dst)
    from projcodes.matspace import matvec
    assert [matvec(l, v) for v in src] == [tuple(v) for v in dst]
    with pytest.raises(ValueError, match="singular"):
        dual_automorphism_aligning(f3, [(1, 0), (2, 0)], dst)


def test_apply_dual_preserves_code(f3):
    t = functionals_of(LinearCode.from_text(f3, ARC_423))
    l = dual_automorphism_aligning(f3, [(1, 0), (0, 1)], [(1, 1), (1, 2)])
    t2 = apply_dual(l, t)
    # re-representing every functional by the same automorphism keeps the code
    assert t2 != t
    assert code_from_functionals(t2) == code_from_functionals(t)


def test_gl_matrices_count(f2, f3):
    assert sum(1 for _ in gl_matrices(f2, 2)) == 6
    assert sum(1 for _ in gl_matrices(f3, 2)) == 48  # (9-1)(9-3)
    with pytest.raises(BudgetExceeded):
        list(gl_matrices(f3, 3, budget=100))


def test_classes_equal(f3):
    a = SpecialSet.of_code(LinearCode.from_text(f3, ARC_423))
    b = SpecialSet.of_code(LinearCode.from_text(f3, "1,0,1,1;0,1,2,1"))
    assert classes_equal(a, b)
    assert classes_equal(a, a)


def test_budget_refusals(f3):
    x = SpecialSet.of_code(LinearCode.from_text(f3, ARC_423))
    with pytest.raises(BudgetExceeded):
        class_enumerate(x, budget=10)
    with pytest.raises(BudgetExceeded):
        automorphism_group_order(LinearCode.from_text(f3, ARC_423), budget=10)
