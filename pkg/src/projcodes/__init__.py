"""Projective [n,k]_q codes in the Grassmann graph: exact GF(q) linear
algebra, code predicates, equivalence classes, certified connectivity
paths, and brute-force verification oracles."""

from .field import FieldCtx, FieldElement, FieldError
from .matspace import (BudgetExceeded, MatGF, Subspace, gaussian_binomial,
                       enumerate_subspaces, intersect, kernel, rref, span,
                       subspace_sum)
from .grassmann import GrassmannParams, adjacent, distance, neighbors
from .codes import CodeError, LinearCode, ProjectiveSystem
from .projective import (FunctionalTuple, MonomialMap, SpecialSet,
                         apply_monomial, automorphism_group_order,
                         class_enumerate, classes_equal, code_from_functionals,
                         dual_automorphism_aligning, functionals_of,
                         independent_subset)
from .pathfinder import (PathCertificate, PathError, PathStep, connect,
                         mds_chain, verify_certificate)
from .oracle import SubgraphReport, bfs_within, enumerate_codes, report

__version__ = "0.1.0"
