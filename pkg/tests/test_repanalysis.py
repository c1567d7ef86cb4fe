from __future__ import annotations

from fractions import Fraction

import pytest

from cycbrauer import combinat as cb
from cycbrauer.brauer import BrauerAlgebra
from cycbrauer.hecke import HeckeAlgebra
from cycbrauer.repanalysis import (ModulePresentation, SplittingError, StructureConstants,
                                   composition_multiplicities, decomposition_matrix,
                                   is_two_sided_ideal, radical, simple_head)

E11 = [[1, 0], [0, 0]]
E12 = [[0, 1], [0, 0]]
E22 = [[0, 0], [0, 1]]
E21 = [[0, 0], [1, 0]]


def test_upper_triangular_radical():
    A = StructureConstants.from_matrices([E11, E12, E22])
    assert A.is_associative()
    J = radical(A)
    assert J == [{1: 1}]
    assert is_two_sided_ideal(A, J)


def test_full_matrix_algebra_is_semisimple():
    A = StructureConstants.from_matrices([E11, E12, E21, E22])
    assert radical(A) == []


def test_not_closed_under_products():
    with pytest.raises(ValueError):
        StructureConstants.from_matrices([E12, E21])


@pytest.fixture(scope="module")
def B22():
    return BrauerAlgebra(2, 2, [1, 0])


def test_radical_codimension_is_sum_of_squares(B22):
    A = StructureConstants.from_algebra(B22)
    J = radical(A)
    assert is_two_sided_ideal(A, J)
    dims = [B22.simple_dimension(f, lam) for f, lam in cb.cell_labels(2, 2)]
    assert B22.dimension - len(J) == sum(d * d for d in dims) == 8


def test_generic_parameters_give_semisimple_algebra():
    B = BrauerAlgebra(2, 2, [Fraction(1, 3), Fraction(-2, 7)])
    assert radical(StructureConstants.from_algebra(B)) == []
    D = decomposition_matrix(B.weakly_cellular_basis())
    assert D.is_identity()


def test_decomposition_matrix_nongeneric(B22):
    D = decomposition_matrix(B22.weakly_cellular_basis())
    assert D.is_unitriangular(cb.cell_ge)
    assert D.reconciles()
    assert ((0, ((1, 1), ())) not in D.cols)
    assert D.entry((0, ((1, 1), ())), (0, ((1,), (1,)))) == 1
    assert D.entry((0, ((1,), (1,))), (0, ((1,), (1,)))) == 1
    assert D.entry((0, ((1,), (1,))), (0, ((), (2,)))) == 1
    assert sum(map(sum, D.entries)) == len(D.cols) + 2


def test_f0_block_matches_hecke(B22):
    D = decomposition_matrix(B22.weakly_cellular_basis()).restrict(lambda lab: lab[0] == 0)
    H = HeckeAlgebra(2, 2, [1, 0])
    Dh = decomposition_matrix(H.cellular_basis("n"))
    assert [lab[1] for lab in D.rows] == Dh.rows
    assert [lab[1] for lab in D.cols] == Dh.cols
    assert D.entries == Dh.entries


def test_level_one_hand_case():
    # ω_0 = 0: E_1 acts by zero and C(1, ∅) is a copy of D(0, (1, 1))
    B = BrauerAlgebra(1, 2, [Fraction(-1, 2)])
    assert B.omega[0] == 0
    W = B.weakly_cellular_basis()
    D = decomposition_matrix(W)
    top = (1, ((),))
    assert top not in D.cols
    assert D.entries[D.rows.index(top)] == [0, 1]
    assert D.is_unitriangular(cb.cell_ge) and D.reconciles()
    A = StructureConstants.from_algebra(B)
    assert len(radical(A)) == 1


def test_simple_head_dimension_is_gram_rank(B22):
    W = B22.weakly_cellular_basis()
    for lab in W.labels:
        assert simple_head(W, lab).dim == B22.simple_dimension(*lab)


def test_trace_of_quotient_adds_up(B22):
    W = B22.weakly_cellular_basis()
    lab = (0, ((1, 1), ()))
    C = ModulePresentation.from_cell(W, lab)
    D = simple_head(W, (0, ((1,), (1,))))
    for el in (B22.s(1), B22.x(1), B22.e(1), B22.s(1) * B22.x(2)):
        assert C.trace(el) == D.trace(el)


def test_multiplicity_solver_rejects_dependent_characters(B22):
    W = B22.weakly_cellular_basis()
    D = simple_head(W, (0, ((2,), ())))
    with pytest.raises(SplittingError):
        composition_multiplicities(D, {"a": D, "b": D}, [B22.one(), B22.s(1)])
