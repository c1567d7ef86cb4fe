from __future__ import annotations

from fractions import Fraction

import pytest

from cycbrauer import combinat as cb
from cycbrauer import weights as wt
from cycbrauer.brauer import expected_dimension
from cycbrauer.linalg import matmul
from cycbrauer.tensor_o import (LieBasis, TensorModule, TruncationError, bracket_is_lie,
                                build_vector_data, build_y_operators, cyclotomic_annihilates,
                                j_xi, leading_key, singular_vector, straighten_word,
                                verify_singular)
from cycbrauer.weights import RootDatum

F = Fraction
D4 = RootDatum("D", 4, (4,), 1)
C_D4 = (F(-7, 3),)


@pytest.fixture(scope="module")
def M():
    return TensorModule(D4, C_D4, 2)


@pytest.mark.parametrize("phi,n", [("B", 2), ("C", 2), ("D", 3), ("B", 3)])
def test_lie_bracket(phi, n):
    L = LieBasis(RootDatum(phi, n, (n,), 2))
    assert bracket_is_lie(L)
    dims = {"B": n * (2 * n + 1), "C": n * (2 * n + 1), "D": n * (2 * n - 1)}
    assert len(L.pairs) == dims[phi]


def test_u_minus_is_the_nilradical(M):
    L = M.lie
    # D_4 with I = {α_1, α_2, α_3}: 𝔲⁻ has the six roots −(ε_a + ε_b)
    assert len(L.u_minus) == 6
    for q in L.u_minus:
        assert sum(L.weight(q)) == -2


def test_cartan_acts_by_weight(M):
    mu = wt.hat_lambda(D4, C_D4, 0, ((1,), (1,)))
    for key in M.weight_space(mu):
        for i in range(1, 5):
            img = M.act_lie((i, i), {key: F(1)})
            assert img == ({key: mu[i - 1]} if mu[i - 1] else {})


def test_root_vectors_shift_weight(M):
    mu = wt.hat_lambda(D4, C_D4, 1, ((), ()))
    for key in M.weight_space(mu)[:20]:
        for q in M.lie.pairs:
            for key2 in M.act_lie(q, {key: F(1)}):
                assert M.key_weight(key2) == wt.add(mu, M.lie.weight(q))


def test_symmetric_generators(M):
    mu = wt.hat_lambda(D4, C_D4, 0, ((1,), (1,)))
    basis = M.weight_space(mu)
    S = M.letter_matrix("S1", basis)
    E = M.letter_matrix("E1", basis)
    ident = [[F(int(i == j)) for j in range(len(basis))] for i in range(len(basis))]
    assert matmul(S, S) == ident
    assert matmul(E, E) == [[M.omega[0] * x for x in row] for row in E]
    assert matmul(E, S) == E


def test_omega_zero_is_dimension(M):
    assert M.omega[0] == D4.N


def test_cyclotomic_relation_on_tensor(M):
    assert cyclotomic_annihilates(M, [mu for _, mu in M.hat_weights()])


def test_relation_audit(M):
    audit = M.relation_audit()
    assert len(audit) > 0 and all(ok for _, ok in audit)


def test_literal_braid_variant_fails_on_tensor_space():
    M3 = TensorModule(RootDatum("D", 6, (6,), 1), C_D4, 3)
    mu = wt.hat_lambda(M3.datum, C_D4, 1, ((1,), ()))
    audit = dict(M3.relation_audit([mu], literal_15_16=True))
    assert not audit["E1E2E1 = E2"]


def test_endomorphism_rank(M):
    assert M.endomorphism_rank() == expected_dimension(2, 2) == 12


@pytest.mark.parametrize("phi,i", [("D", 1), ("D", 2), ("B", 2)])
def test_singular_vectors(phi, i):
    d = RootDatum(phi, 4, (4,), i)
    c = C_D4 if i == 1 else (0,)
    Mx = TensorModule(d, c, 2)
    for f, lam in cb.cell_labels(d.a, 2):
        rep = verify_singular(Mx, f, lam)
        assert rep.expected == len(cb.enumerate_delta(f, cb.conjugate(lam), 2, d.a))
        assert rep.passed, rep


def test_type_c_column_labels_are_not_singular():
    # ε = −1 turns S into −P, so n_{λ'} symmetrises where the other types antisymmetrise
    d = RootDatum("C", 4, (4,), 1)
    Mx = TensorModule(d, C_D4, 2)
    failing = []
    for f, lam in cb.cell_labels(2, 2):
        rep = verify_singular(Mx, f, lam)
        assert rep.independent == rep.expected == rep.singular_dimension
        if not rep.annihilated:
            failing.append(lam)
    assert failing == [((1, 1), ()), ((), (1, 1))]


def test_leading_keys(M):
    for f, lam in cb.cell_labels(2, 2):
        for D in cb.enumerate_delta(f, cb.conjugate(lam), 2, 2):
            v = singular_vector(M, f, lam, D.t, D.xi, D.d)
            key, _ = leading_key(M, f, lam, D.t, D.xi, D.d)
            top = max(M.filtration_degree(k) for k in v)
            assert v.get(key) in (1, -1)
            assert M.filtration_degree(key) == top


def test_leading_key_degree_counts_factors():
    d = RootDatum("D", 4, (4,), 1)
    Mx = TensorModule(d, C_D4, 2)
    lam = ((), (1, 1))
    data = build_vector_data(0, lam, d)
    D = cb.enumerate_delta(0, cb.conjugate(lam), 2, 2)[0]
    key, _ = leading_key(Mx, 0, lam, D.t, D.xi, D.d)
    assert len(key[0]) == sum(data.a)


EX = RootDatum("D", 41, (20, 41), 1)
EX_LAM = ((), (2,), (2, 1), (1,))
EX_XI = (0,) * 6 + (1, 0, 3, 0)


def test_worked_example_vector_data():
    assert cb.conjugate(EX_LAM) == ((1,), (2, 1), (1, 1), ())
    data = build_vector_data(2, EX_LAM, EX)
    assert data.i_lambda == (21, 21, -41, -41, -40, -20)
    assert data.l == (-20, -41, -40, -41, 21, 21)
    assert data.a == (3, 2, 2, 2, 1, 1)
    assert data.j == (6, 3, 4, 3, 1, 1)
    assert j_xi(2, EX_XI, 10, EX) == (-27, 7, 10, 8)


def test_worked_example_y_operators():
    ys = build_y_operators(2, EX_LAM, EX_XI, EX)
    assert ys.per_c[0] == [(-6, -21), (-21, 41), (41, 20)]
    assert ys.per_c[1] == ys.per_c[3] == [(-3, -21), (-21, 41)]
    assert ys.per_c[4] == ys.per_c[5] == [(21, 1)]
    assert ys.per_s == [[(27, 7)], [(30, 10), (-28, 30), (28, 8)]]
    # the third factor chains through −22: −4 → −22 → 40
    assert ys.per_c[2] == [(-4, -22), (-22, 40)]


@pytest.fixture(scope="module")
def EXL():
    return LieBasis(EX)


def test_y_factors_lie_in_nilradical(EXL):
    L = EXL
    ys = build_y_operators(2, EX_LAM, EX_XI, EX)
    mono, sign = straighten_word(ys.word, L)
    assert sign in (1, -1)
    assert len(mono) == len(ys.word)
    assert all(q in L.u_minus_set for q in mono)


def test_y_factors_carry_j_to_l(EXL):
    data = build_vector_data(2, EX_LAM, EX)
    for lc, jc, word in zip(data.l, data.j, build_y_operators(2, EX_LAM, EX_XI, EX).per_c):
        idx = jc
        for i, j in word:
            (idx, _), = EXL.act_on_index(*EXL.canonical(i, j)[0], idx)
        assert idx == lc


def test_straighten_rejects_levi_vectors(EXL):
    with pytest.raises(ValueError):
        straighten_word([(2, 1)], EXL)
    # f_{20,4} sits in the Levi factor of the first block
    with pytest.raises(ValueError):
        straighten_word([(-4, -20), (-20, 40)], EXL)


def test_truncation_guard():
    Mx = TensorModule(D4, C_D4, 2, degree_bound=1)
    mu = wt.hat_lambda(D4, C_D4, 0, ((), (2,)))
    with pytest.raises(TruncationError):
        Mx.weight_space(mu)


def test_needs_cut_point_datum():
    with pytest.raises(ValueError):
        TensorModule(RootDatum.parabolic("D", 4, [1, 2, 3]), C_D4, 1)


def test_weight_spaces_hold_hat_weights(M):
    for (f, lam), mu in M.hat_weights():
        basis = M.weight_space(mu)
        assert basis
        assert all(M.key_weight(k) == mu for k in basis)
