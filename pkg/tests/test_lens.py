import math

import mpmath
import pytest
from hypothesis import given, settings, strategies as st

from invariants import cyclotomic as cy
from invariants.errors import DomainError
from invariants.lens import (
    CASE_C1,
    CASE_ETA,
    CASE_SPHERE,
    CASE_ZERO,
    LensSpace,
    lens_normalize,
    oriented_homeomorphic,
    xi,
    xi_equal,
    xi_ratio,
)
from invariants.numtheory import BezoutPair, dedekind_fast, jacobi, mod_inverse


def lens_spaces(p_min, p_max):
    for p in range(p_min, p_max + 1):
        for q in range(1, p):
            if math.gcd(p, q) == 1:
                yield lens_normalize(p, q)


def odd(r_max):
    return range(3, r_max + 1, 2)


def e(x):
    return mpmath.expjpi(2 * x)


def xi_numeric(p, q, r):
    """Closed-form value evaluated in floating point, independent of the field arithmetic."""
    s = mpmath.mpf(dedekind_fast(q, p).numerator) / dedekind_fast(q, p).denominator
    c = math.gcd(p, r)
    q_star = mod_inverse(q, p)
    p_star = (1 - q_star * q) // p
    framing = e(-12 * s / r)
    if c == 1:
        r_prime, p_prime = mod_inverse(r, p), mod_inverse(p, r)
        return (jacobi(p, r) * framing * e(mpmath.mpf(r_prime * (q + q_star)) / p)
                * (e(mpmath.mpf(2 * p_prime) / r) - e(mpmath.mpf(-2 * p_prime) / r))
                / (e(mpmath.mpf(2) / r) - e(mpmath.mpf(-2) / r)))
    eta = -1 if (q_star - 1) % c == 0 else 1
    pc, rc = p // c, r // c
    rc_prime = mod_inverse(rc, pc) if pc > 1 else 0
    pc_prime = (1 - rc_prime * rc) // pc
    gauss = mpmath.sqrt(c) if c % 4 == 1 else mpmath.mpc(0, 1) * mpmath.sqrt(c)
    sign = (-1) ** (((r - 1) // 2) * ((c - 1) // 2)) * jacobi(pc, rc) * jacobi(q, c)
    return (sign * framing
            * e(mpmath.mpf(rc_prime * (q + q_star - eta * p_star * p)) / (p * c))
            * e(mpmath.mpf(-2 * eta * pc_prime) / (r * c))
            * gauss * eta
            / (e(mpmath.mpf(-2) / r) - e(mpmath.mpf(2) / r)))


# lens spaces


def test_lens_normalize_examples():
    assert lens_normalize(25, 31) == lens_normalize(25, 6)
    assert (lens_normalize(25, 31).p, lens_normalize(25, 31).q) == (25, 6)
    assert lens_normalize(25, -19).q == 6
    sphere = lens_normalize(1, 0)
    assert (sphere.p, sphere.q, sphere.h1_order) == (1, 0, 1)
    assert str(lens_normalize(25, 11)) == "L(25,11)"


@pytest.mark.parametrize("p,q", [(25, 5), (0, 1), (-3, 1), (4, 2)])
def test_lens_normalize_rejects(p, q):
    with pytest.raises(DomainError):
        lens_normalize(p, q)


@pytest.mark.parametrize("p,q", [(25, 31), (4, 2), (25, -19), (0, 0), (1, 1)])
def test_lens_space_rejects_unnormalized_fields(p, q):
    with pytest.raises(DomainError, match="not normalized"):
        LensSpace(p, q)


def test_lens_space_direct_construction():
    assert LensSpace(25, 6) == lens_normalize(25, 31)
    assert LensSpace(1, 0) == lens_normalize(1, 0)


def test_oriented_homeomorphic():
    l6 = lens_normalize(25, 6)
    assert oriented_homeomorphic(l6, lens_normalize(25, 21))
    assert not oriented_homeomorphic(l6, lens_normalize(25, 11))
    assert oriented_homeomorphic(l6, l6)
    assert not oriented_homeomorphic(l6, lens_normalize(24, 7))
    assert oriented_homeomorphic(lens_normalize(1, 0), lens_normalize(1, 0))


# xi: case dispatch and traces


@pytest.mark.parametrize("r", [2, 1, 0, -3, 10])
def test_xi_rejects_bad_levels(r):
    with pytest.raises(DomainError):
        xi(lens_normalize(25, 6), r)


def test_xi_zero_case_for_multiples_of_25():
    for r in (25, 75, 125):
        trace = xi(lens_normalize(25, 6), r)
        assert trace.case_tag == CASE_ZERO and trace.is_zero
        assert trace.value.is_zero() and trace.value_approx == 0
        assert trace.eta == 0


def test_xi_eta_case_trace():
    trace = xi(lens_normalize(25, 6), 15)
    assert trace.case_tag == CASE_ETA
    assert (trace.c, trace.eta, trace.q_star, trace.p_star) == (5, -1, 21, -5)
    assert isinstance(trace.bezout, BezoutPair)
    assert trace.bezout.a_prime * 5 + trace.bezout.b_prime * 3 == 1
    assert trace.conductor == 375 and trace.value.conductor == 375


def test_xi_c1_trace():
    trace = xi(lens_normalize(25, 6), 7)
    assert trace.case_tag == CASE_C1 and trace.c == 1 and trace.eta == 0
    r_prime, p_prime = trace.bezout
    assert 7 * r_prime % 25 == 1 and 25 * p_prime % 7 == 1
    assert trace.p_star * 25 + trace.q_star * 6 == 1


def test_xi_of_sphere():
    trace = xi(lens_normalize(1, 0), 7)
    assert trace.case_tag == CASE_SPHERE
    assert trace.value == cy.one(7)
    assert trace.q_star is None and trace.eta == 0


def test_xi_theorem_pair_agrees_at_three():
    assert xi(lens_normalize(25, 6), 3).value == xi(lens_normalize(25, 11), 3).value


def test_case_trichotomy():
    for lens in lens_spaces(2, 30):
        q_star = mod_inverse(lens.q, lens.p)
        for r in odd(31):
            trace = xi(lens, r)
            c = math.gcd(lens.p, r)
            up, down = (q_star + 1) % c == 0, (q_star - 1) % c == 0
            if c == 1:
                assert trace.case_tag == CASE_C1
            else:
                assert not (up and down)
                assert trace.case_tag == (CASE_ETA if up or down else CASE_ZERO)
                if trace.case_tag == CASE_ETA:
                    assert (q_star + trace.eta) % c == 0
            assert (trace.eta != 0) == (trace.case_tag == CASE_ETA)


def test_xi_matches_numeric_closed_form():
    for lens in lens_spaces(2, 20):
        for r in odd(21):
            trace = xi(lens, r)
            if trace.is_zero:
                continue
            with mpmath.workdps(30):
                expected = complex(xi_numeric(lens.p, lens.q, r))
            assert abs(trace.value_approx - expected) < 1e-9, (lens, r)


# topological invariance and well-definedness


def test_inverse_homeomorphism_invariance():
    for lens in lens_spaces(2, 60):
        partner = lens_normalize(lens.p, mod_inverse(lens.q, lens.p))
        if partner.q < lens.q:
            continue
        for r in odd(21):
            assert xi(lens, r).value == xi(partner, r).value, (lens, r)


def test_bezout_divisibility_exhaustive():
    for lens in lens_spaces(2, 100):
        p, q = lens.p, lens.q
        q_star = mod_inverse(q, p)
        p_star = (1 - q_star * q) // p
        for r in odd(45):
            c = math.gcd(p, r)
            if c == 1:
                continue
            for eta in (-1, 1):
                if (q_star + eta) % c == 0:
                    assert (q + q_star - eta * p_star * p + 2 * eta) % (c * c) == 0, (lens, r)


def test_bezout_shift_leaves_xi_unchanged():
    for lens in lens_spaces(3, 100):
        for r in odd(45):
            if math.gcd(lens.p, r) == 1:
                continue
            base = xi(lens, r)
            if base.is_zero:
                continue
            for k in (-2, -1, 1, 2):
                assert xi(lens, r, bezout_shift=k).value == base.value, (lens, r, k)


@given(st.data())
@settings(max_examples=20)
def test_c1_quantum_integer_is_real(data):
    p = data.draw(st.integers(2, 40))
    q = data.draw(st.integers(1, p - 1).filter(lambda q: math.gcd(p, q) == 1))
    r = data.draw(st.sampled_from([r for r in odd(61) if math.gcd(p, r) == 1]))
    trace = xi(lens_normalize(p, q), r)
    (num,), (den,) = trace.numerator, trace.denominator
    quotient = num.value * den.inverse
    assert cy.conjugate(quotient) == quotient
    assert abs(cy.to_complex(quotient).imag) < 1e-12
    assert math.isfinite(abs(trace.value_approx))


# equality and ratios


def test_xi_equal_examples():
    l6, l11 = lens_normalize(25, 6), lens_normalize(25, 11)
    assert xi_equal(l6, l11, 7)
    assert not xi_equal(l6, l11, 5)
    assert xi_equal(l6, l11, 75)
    assert not xi_equal(lens_normalize(1, 0), lens_normalize(2, 1), 5)


def test_xi_ratio_theorem_example():
    ratio = xi_ratio(lens_normalize(25, 11), lens_normalize(25, 6), 5)
    assert ratio.conductor == 125
    assert ratio == cy.root_of_unity(125, -50)
    assert ratio == cy.embed(cy.root_of_unity(5, 3), 125)
    assert ratio == cy.conjugate(cy.root_of_unity(125, 50))
    assert ratio != cy.one(125)
    assert abs(cy.to_complex(ratio) - complex(mpmath.expjpi(mpmath.mpf(-4) / 5))) < 1e-12


def test_xi_ratio_trivial_cases():
    l6, l11 = lens_normalize(25, 6), lens_normalize(25, 11)
    assert xi_ratio(l6, l6, 15) == cy.one(375)
    assert xi_ratio(l11, l6, 3) == cy.one(75)


def test_xi_ratio_zero_denominator():
    with pytest.raises(DomainError, match="zero"):
        xi_ratio(lens_normalize(25, 11), lens_normalize(25, 6), 25)


def test_xi_ratio_zero_numerator():
    # L(9,2): 2* = 5 and 9 divides neither 4 nor 6
    assert xi(lens_normalize(9, 2), 9).is_zero
    assert xi_ratio(lens_normalize(9, 2), lens_normalize(9, 1), 9).is_zero()


def test_xi_ratio_inverts_denominator():
    spaces = list(lens_spaces(2, 7)) + [lens_normalize(1, 0)]
    for r in (3, 5, 9):
        for l1 in spaces:
            for l2 in spaces:
                t2 = xi(l2, r)
                if t2.is_zero:
                    continue
                ratio = xi_ratio(l1, l2, r)
                m = ratio.conductor
                assert m == math.lcm(l1.p, l2.p) * r
                assert ratio * cy.embed(t2.value, m) == cy.embed(xi(l1, r).value, m), (l1, l2, r)
