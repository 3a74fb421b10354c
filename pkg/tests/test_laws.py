import numpy as np
import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from sphereloop.errors import DomainError, PreconditionError
from sphereloop.hilbert import (DEFAULT_TOL, apply_J, make_rng, max_norm, random_orthogonal_V,
                                random_sphere_point)
from sphereloop.laws import (IdentityReport, bol_prediction, check_bol, check_discontinuity,
                             check_left_alternative, check_lpa, check_lpa2, check_second_Al,
                             check_trans_ident, continuity_probe, coplanar_with_e0,
                             count_solution_dimension, limit_right_translation, limit_time,
                             particular_solution, solution_set_membership, solution_witnesses)
from sphereloop.loop import inverse, left_inner, left_translation, odot, power

from .conftest import points

S3 = np.sqrt(3.0) / 2
E0 = np.array([1.0, 0.0, 0.0])
ANTI = -E0
E1 = np.array([0.0, 1.0, 0.0])
E2 = np.array([0.0, 0.0, 1.0])


def unit(*v):
    v = np.asarray(v, dtype=float)
    return v / np.linalg.norm(v)


# -- report semantics -------------------------------------------------------------

@pytest.mark.parametrize("residual,predicted,expected", [
    (1e-11, True, True), (1e-9, True, False),
    (5e-10, False, False), (2.0, False, True),
])
def test_report_pass_rule(residual, predicted, expected):
    r = IdentityReport("x", residual, predicted, (), 1e-10)
    assert r.passed is expected


def test_report_to_dict_is_plain():
    r = check_left_alternative(E1)
    d = r.to_dict()
    assert d["witness"] == [[0.0, 1.0, 0.0]]
    assert isinstance(d["residual"], float) and d["passed"] is True


# -- left power alternative -----------------------------------------------------------

def test_lpa_half_powers_give_x():
    op, trans = check_lpa([0.5, S3, 0.0], 0.5, 0.5)
    assert op.residual <= 1e-10 and trans.residual <= 1e-10
    assert op.passed and trans.passed


def test_lpa_square_of_equator_point_is_antipode():
    op, trans = check_lpa(E1, 1, 1)
    assert op.passed
    assert not trans.predicted_holds
    assert trans.residual == pytest.approx(2.0, abs=1e-12)
    assert trans.passed


def test_lpa_inverse_exponents():
    x = unit(0.99, 0.1, 0.05)
    op, trans = check_lpa(x, 3, -3)
    assert trans.residual <= 1e-10


def test_lpa_rejects_poles():
    with pytest.raises(PreconditionError):
        check_lpa(E0, 1, 1)
    with pytest.raises(PreconditionError):
        check_lpa(E1, 2, 0.5)


@given(points(1, min_dim=3), st.floats(-2, 2), st.floats(-2, 2))
def test_lpa_operator_form_always_holds(pts, s, t):
    (x,) = pts
    assume(abs(x[0]) < 1 - 1e-3)
    try:
        op, trans = check_lpa(x, s, t)
    except PreconditionError:
        assume(False)
    assert op.residual <= 1e-9
    if trans.predicted_holds and np.linalg.norm(power(x, s + t).vec + np.eye(len(x))[0]) > 1e-3:
        assert trans.residual <= 1e-9


def test_left_alternative_examples():
    r = check_left_alternative(E1)
    assert not r.predicted_holds and r.residual == pytest.approx(2.0, abs=1e-12)
    r = check_left_alternative([0.6, 0.8, 0.0])
    assert r.predicted_holds and r.residual <= 1e-10
    r = check_left_alternative(ANTI)
    assert r.residual <= 1e-12


def test_left_alternative_on_equator_flips_e2():
    Lx = left_translation(E1)
    np.testing.assert_allclose(Lx @ Lx @ E2, E2, atol=1e-15)
    np.testing.assert_allclose(left_translation(odot(E1, E1)) @ E2, -E2, atol=1e-15)


def test_left_alternative_needs_dim_three():
    with pytest.raises(DomainError):
        check_left_alternative([0.0, 1.0])


def test_lpa2_examples():
    comm, neg = check_lpa2([0.5, S3, 0.0])
    assert comm.residual <= 1e-12
    assert neg.residual > 0.1 and not neg.predicted_holds and neg.passed
    comm, neg = check_lpa2([0.0, 1.0])
    assert neg.predicted_holds and neg.residual <= 1e-12


def test_lpa2_rejects_poles():
    with pytest.raises(PreconditionError):
        check_lpa2(ANTI)


# -- Bol ------------------------------------------------------------------------------

def test_bol_random_off_exception_set():
    rng = make_rng(21)
    for dim in range(3, 9):
        for _ in range(100):
            x = random_sphere_point(dim, rng)
            y = random_sphere_point(dim, rng)
            r = check_bol(x, y)
            assert r.predicted_holds and r.residual <= 1e-9


def test_bol_fails_at_antipode():
    r = check_bol(E1, ANTI)
    assert not r.predicted_holds and r.passed
    Lx = left_translation(E1)
    np.testing.assert_allclose(Lx @ -np.eye(3) @ Lx @ E2, -E2, atol=1e-15)
    rhs = left_translation(odot(E1, odot(ANTI, E1)))
    np.testing.assert_allclose(rhs @ E2, E2, atol=1e-15)


def test_bol_fails_on_the_family():
    # y odot x = -x^-1, i.e. y = (x^-1 composed with -x^-1) away from -x^-2
    rng = make_rng(22)
    for dim in range(3, 7):
        for _ in range(20):
            x = random_sphere_point(dim, rng)
            target = -apply_J(x)
            # solutions y of y odot x = -x^-1 form a sphere; take a random one
            y = solution_witnesses(x, 1, rng)[0]
            assume_far = np.linalg.norm(y.vec + power(x, -2).vec) > 1e-3
            if not assume_far:
                continue
            assert np.linalg.norm(odot(y, x).vec - target) <= 1e-9
            r = check_bol(x, y)
            assert not r.predicted_holds
            assert r.residual >= 1.0


def test_bol_circle_always_holds():
    rng = make_rng(23)
    for _ in range(50):
        r = check_bol(random_sphere_point(2, rng), random_sphere_point(2, rng))
        assert r.residual <= 1e-12


def test_bol_at_minus_inverse_square_is_a_finding():
    # The encoded prediction says Bol holds at y = -x^-2; numerically it fails
    # by at least 1 in max-norm. Kept as a recorded finding, not a silent exception.
    rng = make_rng(30)
    for dim in range(3, 7):
        for _ in range(50):
            x = random_sphere_point(dim, rng)
            y = particular_solution(x)
            assert bol_prediction(x, y)
            r = check_bol(x, y)
            assert r.residual >= 1.0 and not r.passed


# -- the equation x odot a = -a^-1 ------------------------------------------------------

def test_solution_membership_examples():
    assert solution_set_membership(E1, E0)
    assert solution_set_membership(E1, E2)
    assert not solution_set_membership(E1, E1)
    assert not solution_set_membership(E1, ANTI)


def test_solution_membership_rejects_poles():
    with pytest.raises(PreconditionError):
        solution_set_membership(E0, E1)


def test_count_solution_dimension_examples():
    assert count_solution_dimension(E1) == 1
    assert count_solution_dimension([0.0, 1.0]) == 0
    assert count_solution_dimension(unit(0.2, 0.1, -0.3, 0.5, 0.4)) == 3


@given(points(1, min_dim=3))
def test_witnesses_solve_the_equation(pts):
    (a,) = pts
    assume(abs(a[0]) < 1 - 1e-3)
    for w in solution_witnesses(a, 3, make_rng(0)):
        assert solution_set_membership(a, w)
        assert np.linalg.norm(odot(w, a).vec + apply_J(a)) <= 1e-9


def test_membership_matches_equation():
    rng = make_rng(24)
    for dim in (3, 4, 5):
        a = random_sphere_point(dim, rng)
        for _ in range(300):
            x = random_sphere_point(dim, rng)
            direct = np.linalg.norm(odot(x, a).vec + apply_J(a)) <= 1e-9
            assert solution_set_membership(a, x) == direct


def test_particular_solution_solves():
    a = unit(0.4, -0.2, 0.7, 0.1)
    p = particular_solution(a)
    assert np.linalg.norm(odot(p, a).vec + apply_J(a)) <= 1e-12


# -- Kikkawa consequences ----------------------------------------------------------------

def test_trans_ident_examples():
    y, z = unit(0.2, 0.5, -0.3), unit(-0.6, 0.1, 0.4)
    assert check_trans_ident(E0, y, z).residual <= 1e-12
    assert check_trans_ident(unit(0.1, 0.9, 0.2), y, y).residual <= 1e-12


def test_trans_ident_sweep():
    rng = make_rng(25)
    worst = 0.0
    for dim in range(3, 9):
        for _ in range(200):
            x, y, z = (random_sphere_point(dim, rng) for _ in range(3))
            worst = max(worst, check_trans_ident(x, y, z).residual)
    assert worst <= 1e-9


def test_trans_ident_needs_the_inner_map_in_this_order():
    # swapping to L(y, x) breaks the identity
    x, y, z = unit(0.1, 0.8, 0.3), unit(-0.4, 0.2, 0.9), unit(0.5, -0.5, 0.7)
    lhs = odot(odot(x, y), inverse(odot(x, z))).vec
    swapped = left_inner(y, x) @ odot(y, inverse(z)).vec
    assert np.linalg.norm(lhs - swapped) > 1e-3


def test_second_Al_examples():
    x, y, z = unit(0.1, 0.8, 0.3), unit(-0.4, 0.2, 0.9), unit(0.5, -0.5, 0.7)
    assert check_second_Al(x, y, z, 1.0).residual <= 1e-12
    A = left_inner(x, y)
    np.testing.assert_allclose(A @ apply_J(z), apply_J(A @ z), atol=1e-12)
    assert check_second_Al(x, y, z, -1.0).residual <= 1e-12


@given(points(3, min_dim=3), st.floats(-3, 3))
def test_second_Al_random(pts, t):
    x, y, z = pts
    r = check_second_Al(x, y, z, t)
    assert r.residual <= 1e-9


def test_second_Al_rejects_antipode():
    with pytest.raises(PreconditionError):
        check_second_Al(E1, E2, ANTI, 0.5)


@given(points(2, min_dim=2))
def test_kikkawa_identities(pts):
    x, y = pts
    A = left_inner(x, y)
    # kik_inv: L(y, x) is ill-conditioned when y odot x is near -e0
    if np.linalg.norm(odot(y, x).vec + np.eye(len(x))[0]) > 1e-6:
        assert max_norm(A.T - left_inner(y, x)) <= 1e-9
    # lip_inv
    assert max_norm(A.T - left_inner(inverse(x), odot(x, y))) <= 1e-9
    # bruck
    assert np.linalg.norm(A @ odot(y, x).vec - odot(x, y).vec) <= 1e-9


# -- the discontinuity at -e0 ----------------------------------------------------------------

def test_limit_right_translation_examples():
    L = limit_right_translation(E1)
    # the map fixes the x_perp axis up to J: e1 -> -e1, e2 -> e2
    np.testing.assert_allclose(L @ E1, -E1, atol=1e-15)
    np.testing.assert_allclose(L @ E2, E2, atol=1e-15)


def test_limit_is_never_minus_identity():
    rng = make_rng(26)
    for dim in range(3, 8):
        for _ in range(50):
            x = random_sphere_point(dim, rng)
            assert max_norm(limit_right_translation(x) + np.eye(dim)) >= 1.0


def test_limit_time_sweep_converges():
    assert limit_time(E1) == pytest.approx(2.0)
    lim = limit_right_translation(E1)
    gaps = [max_norm(left_translation(power(E1, t)) - lim) for t in (1.9, 1.99, 1.999)]
    assert gaps[0] > gaps[1] > gaps[2]
    assert gaps[2] < 1e-2


def test_limit_time_general_x():
    x = unit(0.3, 0.4, -0.2, 0.6)
    T = limit_time(x)
    lim = limit_right_translation(x)
    gaps = [max_norm(left_translation(power(x, T - h)) - lim) for h in (1e-1, 1e-2, 1e-3, 1e-4)]
    assert all(a > b for a, b in zip(gaps, gaps[1:]))
    assert gaps[-1] < 1e-3


def test_discontinuity_examples():
    r = check_discontinuity(E1, E2)
    assert r.residual == pytest.approx(2.0) and not r.predicted_holds and r.passed
    r = check_discontinuity(E1, [0.6, 0.8, 0.0])
    assert r.predicted_holds and r.residual <= 1e-9
    r = check_discontinuity([0.0, 1.0], [0.6, -0.8])
    assert r.predicted_holds and r.residual <= 1e-9


def test_discontinuity_random_pairs():
    rng = make_rng(27)
    for dim in range(3, 7):
        for _ in range(200):
            x, y = random_sphere_point(dim, rng), random_sphere_point(dim, rng)
            r = check_discontinuity(x, y)
            if r.extras["gram_det"] > 100 * DEFAULT_TOL.eps_res:
                assert r.passed


def test_discontinuity_coplanar_random():
    rng = make_rng(28)
    for dim in range(3, 7):
        for _ in range(100):
            x = random_sphere_point(dim, rng)
            c, s = rng.normal(size=2)
            y = c * np.eye(dim)[0] + s * x.copy()
            y[0] = c
            y /= np.linalg.norm(y)
            assert coplanar_with_e0(x, y)
            assert check_discontinuity(x, y).residual <= 1e-9


def test_discontinuity_invariant_under_OV():
    rng = make_rng(29)
    x, y = random_sphere_point(4, rng), random_sphere_point(4, rng)
    A = random_orthogonal_V(4, rng)
    a = check_discontinuity(x, y).residual
    b = check_discontinuity(A @ x, A @ y).residual
    assert a == pytest.approx(b, abs=1e-12)


def test_discontinuity_rejects_poles():
    with pytest.raises(PreconditionError):
        check_discontinuity(E0, E1)


def test_continuity_probe_examples():
    y = unit(0.2, 0.7, -0.4)
    assert continuity_probe(E0, y, 1e-4) <= 3.0
    x = np.array([-0.9, np.sqrt(1 - 0.81), 0.0])
    r1 = continuity_probe(x, y, 1e-5)
    assert np.isfinite(r1) and r1 <= 100.0
    r2 = continuity_probe(x, y, 5e-6)
    assert abs(r1 - r2) <= 0.1 * r1


def test_continuity_probe_bad_step():
    with pytest.raises(DomainError):
        continuity_probe(E1, E2, 0.5)
    with pytest.raises(PreconditionError):
        continuity_probe(ANTI, E2, 1e-3)
