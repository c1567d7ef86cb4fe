from __future__ import annotations

from collections import Counter
from itertools import permutations
from math import factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cycbrauer import combinat as cb
from cycbrauer.combinat import Permutation

from .strategies import multipartitions_st


LAM = ((3, 2), (3, 1))


def test_conjugate_worked_example():
    assert cb.conjugate(((), (2,), (2, 1), (1,))) == ((1,), (2, 1), (1, 1), ())


def test_conjugate_of_empty():
    assert cb.conjugate(((), (), ())) == ((), (), ())


@given(multipartitions_st())
def test_conjugate_is_involution(lam):
    assert cb.conjugate(cb.conjugate(lam)) == lam
    assert cb.size(cb.conjugate(lam)) == cb.size(lam)


def test_dominance_small_cases():
    assert cb.dominance_ge(((2,), ()), ((1,), (1,)))
    assert not cb.dominance_ge(((1,), (1,)), ((2,), ()))
    with pytest.raises(ValueError):
        cb.dominance_ge(((1,),), ((1,), ()))


@pytest.mark.parametrize("a,m", [(1, 5), (2, 4), (3, 3)])
def test_dominance_is_partial_order(a, m):
    lams = cb.multipartitions(a, m)
    ge = {(x, y): cb.dominance_ge(x, y) for x in lams for y in lams}
    for x in lams:
        assert ge[x, x]
        for y in lams:
            if x != y and ge[x, y]:
                assert not ge[y, x]
            for z in lams:
                if ge[x, y] and ge[y, z]:
                    assert ge[x, z]


@pytest.mark.parametrize("a,m", [(2, 3), (2, 4), (3, 3)])
def test_dominance_reverses_under_conjugation(a, m):
    lams = cb.multipartitions(a, m)
    for x in lams:
        for y in lams:
            assert cb.dominance_ge(x, y) == cb.dominance_ge(cb.conjugate(y), cb.conjugate(x))


@pytest.mark.parametrize("a,m", [(2, 4), (3, 3)])
def test_multipartition_listing_refines_dominance(a, m):
    lams = cb.multipartitions(a, m)
    for i, x in enumerate(lams):
        for y in lams[:i]:
            assert not cb.dominance_ge(x, y) or x == y


def test_initial_and_final_tableaux_worked_example():
    t_up, t_low = cb.initial_and_final_tableaux(LAM)
    assert t_up == (((1, 2, 3), (4, 5)), ((6, 7, 8), (9,)))
    assert t_low == (((5, 7, 9), (6, 8)), ((1, 3, 4), (2,)))


def test_single_box_tableaux():
    assert cb.initial_and_final_tableaux(((1,),)) == ((((1,),),), (((1,),),))


def test_right_action_example():
    w = Permutation.from_word((1, 2), 9)
    assert cb.act(cb.initial_tableau(LAM), w) == (((3, 1, 2), (4, 5)), ((6, 7, 8), (9,)))


@given(multipartitions_st(max_size=3))
def test_d_of_initial_is_identity(lam):
    t = cb.initial_tableau(lam)
    assert cb.d_of(t) == Permutation.identity(cb.size(lam))


@pytest.mark.parametrize("lam", [LAM, ((2, 1), (), (1, 1)), ((1,), (2, 1), (1, 1), ())])
def test_d_of_round_trip_and_length(lam):
    t0 = cb.initial_tableau(lam)
    pos = cb.tableau_entries(t0)
    for s in cb.standard_tableaux(lam):
        d = cb.d_of(s)
        assert cb.act(t0, d) == s
        # inversions of the filling read along t^λ
        seq = [cb.tableau_entries(s)[box] for box, _ in sorted(pos.items(), key=lambda kv: kv[1])]
        inv = sum(1 for i in range(len(seq)) for j in range(i + 1, len(seq)) if seq[i] > seq[j])
        assert d.length() == inv


@pytest.mark.parametrize("lam", [LAM, ((2, 1), (), (1, 1)), ((1,), (2,), (1, 1)), ((2,), (2,))])
def test_w_lambda_factorisation(lam):
    r = cb.size(lam)
    w = Permutation.identity(r)
    for factor in cb.w_components(lam):
        w = w * factor
    w = w * cb.w_bracket(cb.profile(lam), r)
    assert w == cb.w_lambda(lam)


def test_w_bracket_display():
    assert cb.w_bracket((0, 4, 8, 9), 9).images == (6, 7, 8, 9, 2, 3, 4, 5, 1)


def test_w_bracket_single_block():
    assert cb.w_bracket((0, 5), 5) == Permutation.identity(5)


@given(multipartitions_st(max_size=3))
def test_w_bracket_inverse_is_mirror(lam):
    r = cb.size(lam)
    b = cb.profile(lam)
    mirror = cb.profile(tuple(reversed(lam)))
    assert cb.w_bracket(b, r) * cb.w_bracket(mirror, r) == Permutation.identity(r)
    assert mirror == cb.profile(cb.conjugate(lam))


@given(st.permutations(range(1, 6)), st.permutations(range(1, 6)), st.permutations(range(1, 6)))
def test_permutation_group_laws(x, y, z):
    x, y, z = Permutation(tuple(x)), Permutation(tuple(y)), Permutation(tuple(z))
    assert (x * y) * z == x * (y * z)
    assert x * x.inverse() == Permutation.identity(5)
    assert Permutation.from_word(x.reduced_word(), 5) == x
    assert len(x.reduced_word()) == x.length()
    assert (x * y).sign() == x.sign() * y.sign()


def _hook_free_count(lam) -> int:
    """Brute force: fillings of the boxes that are standard."""
    bx = cb.boxes(lam)
    count = 0
    for perm in permutations(range(1, len(bx) + 1)):
        t = cb._fill(lam, dict(zip(bx, perm)))
        count += cb.is_standard(t)
    return count


@pytest.mark.parametrize("lam", [((2, 1),), ((2,), (1,)), ((1, 1), (1,), (1,)), ((3, 1), (1,)), ((2, 2), ())])
def test_standard_tableaux_counts(lam):
    tabs = cb.standard_tableaux(lam)
    assert len(tabs) == len(set(tabs)) == cb.count_standard(lam) == _hook_free_count(lam)
    assert all(cb.is_standard(t) for t in tabs)


@pytest.mark.parametrize("a,r", [(1, 4), (2, 3), (2, 4), (3, 3)])
def test_sum_of_squares(a, r):
    total = sum(cb.count_standard(lam) ** 2 for lam in cb.multipartitions(a, r))
    assert total == a ** r * factorial(r)


@pytest.mark.parametrize("r", range(1, 8))
def test_coset_constructions_agree(r):
    for f in range(r // 2 + 1):
        filt = set(cb.cosets_D(r, f))
        cons = set(cb.cosets_D_constructive(r, f))
        assert filt == cons
        assert len(filt) == cb.coset_count(r, f) == factorial(r) // (2 ** f * factorial(f) * factorial(r - 2 * f))


def test_coset_count_above_filter_threshold():
    assert len(cb.D_set(9, 2)) == cb.coset_count(9, 2) == 378


def test_delta_sizes_sum_to_dimension():
    for a, r in [(2, 1), (2, 2), (2, 3), (1, 4), (3, 2)]:
        total = sum(len(cb.enumerate_delta(f, lam, r, a)) ** 2 for f, lam in cb.cell_labels(a, r))
        odd = 1
        for k in range(1, 2 * r, 2):
            odd *= k
        assert total == a ** r * odd


def test_delta_f0_is_tableaux():
    lam = ((2,), (1,))
    D = cb.enumerate_delta(0, lam, 3)
    assert [x.t for x in D] == list(cb.standard_tableaux(lam))
    assert all(x.xi == (0, 0, 0) and x.d == Permutation.identity(3) for x in D)


def test_delta_brute_force():
    """δ(f, λ) against a direct scan of tableaux, dot vectors and all of S_r."""
    a, r = 2, 5
    for f in (1, 2):
        for lam in cb.multipartitions(a, r - 2 * f):
            got = {(x.t, x.xi, x.d) for x in cb.enumerate_delta(f, lam, r, a)}
            want = set()
            tabs = [s for s in set(_all_fillings(lam)) if cb.is_standard(s)]
            for d in map(Permutation, permutations(range(1, r + 1))):
                im = d.images
                m = r - 2 * f
                head_sorted = all(im[i] < im[i + 1] for i in range(m - 1))
                pairs = [(im[m + 2 * s], im[m + 2 * s + 1]) for s in range(f)]
                if not head_sorted or any(x > y for x, y in pairs):
                    continue
                if any(pairs[i][0] > pairs[i + 1][0] for i in range(f - 1)):
                    continue
                for xi in _dots(a, r, f):
                    for t in tabs:
                        want.add((t, xi, d))
            assert got == want
            assert len(got) == len(tabs) * a ** f * cb.coset_count(r, f)


def _all_fillings(lam):
    bx = cb.boxes(lam)
    for perm in permutations(range(1, len(bx) + 1)):
        yield cb._fill(lam, dict(zip(bx, perm)))


def _dots(a, r, f):
    from itertools import product
    for vals in product(range(a), repeat=f):
        xi = [0] * r
        for s, v in enumerate(vals, start=1):
            xi[r - 2 * s] = v
        yield tuple(xi)


def test_delta_rejects_bad_size():
    with pytest.raises(ValueError):
        cb.enumerate_delta(1, ((1,), ()), 2)


def test_cell_labels_and_order():
    labels = cb.cell_labels(2, 2)
    assert labels[0] == (1, ((), ()))
    assert len(labels) == 6
    assert cb.cell_ge((1, ((), ())), (0, ((2,), ())))
    assert not cb.cell_ge((0, ((2,), ())), (1, ((), ())))
    assert cb.cell_ge((0, ((2,), ())), (0, ((1,), (1,))))


def test_u_restricted_examples():
    assert cb.u_restricted(((3,),), [5])
    assert cb.u_restricted(((1,), (1,)), [1, 0])
    assert cb.u_restricted(((2,), ()), [1, 0])
    assert not cb.u_restricted(((1, 1), ()), [1, 0])
    assert cb.u_restricted(((1, 1), ()), [2, 0])
    # a non-integral difference splits the orbits and removes every constraint
    assert cb.u_restricted(((2, 1), ()), [0, "1/2"])


def test_u_restricted_orbit_sorting():
    # the order of parameters inside an orbit does not matter
    for lam in cb.multipartitions(2, 3):
        assert cb.u_restricted(lam, [1, 0]) == cb.u_restricted(tuple(reversed(lam)), [0, 1])


@given(multipartitions_st(a=3, max_size=3), st.permutations([0, 1, 3]))
def test_u_restricted_is_permutation_equivariant(lam, order):
    u = [3, 1, 0]
    perm = [u.index(x) for x in order]
    assert cb.u_restricted(lam, u) == cb.u_restricted(tuple(lam[i] for i in perm), order)


def test_row_stabilizer_size():
    grp = cb.row_stabilizer(LAM)
    assert len(set(grp)) == 6 * 2 * 6
    counts = Counter(len(p.images) for p in grp)
    assert counts == {9: 72}
