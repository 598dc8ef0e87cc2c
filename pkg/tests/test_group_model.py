import math
from itertools import permutations, product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from fubini_molien.algebra import Mat, TrigPoly, quarter_turn
from fubini_molien.errors import ClosureError, SpecError
from fubini_molien.group_model import (
    GroupSpec,
    build_element,
    check_preserves_form,
    close_group,
    coset_reps,
    spec_generators,
    verify_semidirect,
)

from conftest import REFLECT, SIGN_GENS, lorentz_involutions, lorentz_spec


def signed_permutations(n):
    """All n x n signed permutation matrices, enumerated directly."""
    out = set()
    for perm in permutations(range(n)):
        for signs in product((1, -1), repeat=n):
            rows = [[0] * n for _ in range(n)]
            for i, (j, s) in enumerate(zip(perm, signs)):
                rows[i][j] = s
            out.add(Mat.of(rows))
    return out


def test_close_sign_pair():
    G = close_group([Mat.diag([-1, -1])])
    assert G.order == 2
    assert set(G) == {Mat.identity(2), Mat.diag([-1, -1])}


def test_close_cyclic4():
    G = close_group([quarter_turn()])
    assert G.order == 4
    assert set(G) == {quarter_turn(k) for k in range(4)}


def test_close_dihedral8_is_all_signed_permutations():
    G = close_group([quarter_turn(), REFLECT])
    assert G.order == 8
    assert set(G) == signed_permutations(2)


def test_close_trivial():
    G = close_group([], dim=3)
    assert list(G) == [Mat.identity(3)]


@pytest.mark.parametrize("gens", [[quarter_turn(), REFLECT], SIGN_GENS, [Mat.of([[0, 1, 0], [0, 0, 1], [1, 0, 0]])]])
def test_closure_is_closed(gens):
    G = close_group(gens)
    elems = set(G)
    assert Mat.identity(G.dim) in elems
    assert len(elems) == G.order
    for a in G:
        assert a.inverse() in elems
        for b in G:
            assert a @ b in elems


def test_close_cap_exceeded():
    with pytest.raises(ClosureError):
        close_group([Mat.of([[2, 0], [0, 1]])], cap=50)


def test_close_refuses_singular_and_float():
    with pytest.raises(ClosureError):
        close_group([Mat.of([[1, 1], [1, 1]])])
    with pytest.raises(ClosureError):
        close_group([Mat.of([[0.0, -1.0], [1.0, 0.0]])])


def test_coset_reps_single():
    lam = Mat.diag([1, -1])
    assert coset_reps([lam]).reps == (Mat.identity(2), lam)


def test_coset_reps_lex_order():
    l1, l2 = Mat.diag([1, -1, 1]), Mat.diag([1, 1, -1])
    cs = coset_reps([l1, l2])
    assert cs.indices == ((0, 0), (0, 1), (1, 0), (1, 1))
    assert cs.reps == (Mat.identity(3), l2, l1, l1 @ l2)
    assert cs[(1, 0)] == l1


def test_coset_reps_paper_product_block():
    cs = coset_reps(lorentz_involutions(1.0))
    block = cs[(1, 1)].block(2, 2, 2)
    assert block.max_abs_diff(Mat.diag([-1, -1])) < 1e-12
    assert cs[(1, 1)].block(0, 0, 2) == Mat.identity(2)


def test_coset_reps_rejects_bad_involutions():
    with pytest.raises(SpecError, match="involution 1"):
        coset_reps([Mat.of([[1, 1], [0, 1]])])
    with pytest.raises(SpecError, match="commute"):
        coset_reps([Mat.diag([1, -1]), Mat.of([[0, 1], [1, 0]])])
    with pytest.raises(SpecError, match="coincide"):
        coset_reps([Mat.diag([1, -1]), Mat.diag([1, -1])])


@pytest.mark.parametrize("theta", [0.3, 1.0, 2.5])
def test_coset_reps_quotient_axioms(theta):
    cs = coset_reps(lorentz_involutions(theta))
    assert len(cs) == 4
    for a in cs.reps:
        for b in cs.reps:
            assert min((a @ b).max_abs_diff(c) for c in cs.reps) < 1e-10


def test_verify_signdiag8():
    report = verify_semidirect(SIGN_GENS[:1], SIGN_GENS[1:])
    assert report.overall
    assert report.gamma_order == 8 and report.sigma_order == 2
    assert report.delta_normal_each == [True, True]
    assert report.failures == []


def test_verify_trivial_sigma():
    report = verify_semidirect([], [Mat.diag([-1, 1])])
    assert report.overall


def test_verify_counterexample():
    report = verify_semidirect([quarter_turn()], [Mat.diag([1, -1]), Mat.diag([-1, 1])])
    assert not report.intersections_trivial
    assert not report.overall
    assert report.sigma_normal


def test_verify_broken_commutativity_flips_a_flag():
    swap = Mat.of([[1, 0, 0], [0, 0, 1], [0, 1, 0]])
    report = verify_semidirect(SIGN_GENS[:1], [SIGN_GENS[1], swap])
    assert not report.overall
    assert not all(report.flags()[k] for k in ("sigma_normal", "delta_normal", "product_covers", "intersections_trivial"))


def test_verify_non_normal_sigma():
    # <reflection> is not normal in the dihedral group
    report = verify_semidirect([REFLECT], [Mat.of([[0, 1], [1, 0]])])
    assert not report.sigma_normal


def test_verify_rejects_non_involution():
    with pytest.raises(SpecError):
        verify_semidirect([], [quarter_turn()])


def test_build_element_identity_coset():
    M = build_element(lorentz_spec(1.0), (0, 0))
    c, s = TrigPoly.cos_k(1), TrigPoly.sin_k(1)
    expected = Mat.of([[c, -s, 0, 0], [s, c, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])
    assert M == expected


@pytest.mark.parametrize("theta", [0.3, 1.0])
def test_build_element_first_involution(theta):
    M = build_element(lorentz_spec(theta), (1, 0))
    c, s = math.cosh(theta), math.sinh(theta)
    assert M.block(0, 0, 2) == build_element(lorentz_spec(theta), (0, 0)).block(0, 0, 2)
    assert M.block(2, 2, 2).max_abs_diff(Mat.of([[c, s], [-s, -c]])) < 1e-15
    assert M[0, 2] == 0 and M[3, 1] == 0


def test_build_element_trivial_spec():
    assert build_element(GroupSpec(dim=3), ()) == Mat.identity(3)


def test_build_element_index_out_of_range():
    with pytest.raises(IndexError):
        build_element(lorentz_spec(), (1, 0, 1))
    with pytest.raises(IndexError):
        build_element(lorentz_spec(), (2, 0))


@pytest.mark.parametrize("theta", [0.3, 1.0, 2.5])
def test_build_element_at_zero_is_rep(theta):
    spec = lorentz_spec(theta)
    cs = coset_reps(spec.involutions)
    for index, rep in cs.items():
        assert build_element(spec, index).at(0.0).max_abs_diff(rep) == 0


def test_preserves_form_examples():
    lam1, _ = lorentz_involutions(0.7)
    ok, residual = check_preserves_form(lam1, (1, 1, 1, -1))
    assert ok and residual < 1e-10
    assert not check_preserves_form(Mat.diag([2, 1, 1, 1]), (1, 1, 1, -1))[0]
    ok, residual = check_preserves_form(Mat.identity(4), (1, 1, 1, -1))
    assert ok and residual == 0


@given(st.floats(-3, 3))
def test_paper_reps_preserve_lorentz_form(theta):
    for rep in coset_reps(lorentz_involutions(theta)).reps:
        assert check_preserves_form(rep, (1, 1, 1, -1))[0]


def test_rotation_preserves_lorentz_form_at_samples():
    g = spec_generators(lorentz_spec())[0]
    for phi in (0.1, 1.0, 2.0):
        assert check_preserves_form(g.at(phi), (1, 1, 1, -1))[0]


def test_group_spec_validation():
    with pytest.raises(SpecError, match="overlaps"):
        GroupSpec(dim=4, circle_blocks=[(0, 1), (1, 2)])
    with pytest.raises(SpecError):
        GroupSpec(dim=2, circle_blocks=[(0, 2)])
    with pytest.raises(SpecError, match="involution 1"):
        GroupSpec(dim=2, involutions=[quarter_turn()])
    with pytest.raises(SpecError, match="exact"):
        GroupSpec(dim=2, finite_factor=[Mat.of([[0.0, -1.0], [1.0, 0.0]])])
    with pytest.raises(SpecError):
        GroupSpec(dim=3, involutions=[Mat.diag([1, -1])])
