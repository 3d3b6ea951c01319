# Quantum invariants of lens spaces: the SO(3) invariants xi_r(L(p,q), e_r)
# in closed form, Ohtsuki's tau series, and the equality predicates between them
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Tuple, Union

from invariants import cyclotomic as cy
from invariants.cyclotomic import CycloElement
from invariants.errors import DomainError
from invariants.numtheory import BezoutPair, bezout_pair, dedekind_fast, jacobi, mod_inverse, prime_factors
from invariants.series import binomial_series

CASE_C1 = "C1"
CASE_ETA = "C_GT1_ETA"
CASE_ZERO = "ZERO"
CASE_SPHERE = "SPHERE"
XI_CASES = (CASE_C1, CASE_ETA, CASE_ZERO, CASE_SPHERE)


@dataclass(frozen=True)
class LensSpace:
    p: int
    q: int

    def __post_init__(self):
        # canonical representative only; lens_normalize reduces q mod p first
        if self.p < 1 or not 0 <= self.q < self.p or math.gcd(self.p, self.q) != 1:
            raise DomainError(f"L({self.p},{self.q}) is not normalized: need p >= 1, 0 <= q < p, gcd(p, q) = 1")

    @property
    def h1_order(self) -> int:
        return self.p

    def __str__(self) -> str:
        return f"L({self.p},{self.q})"


@dataclass(frozen=True)
class XiFactor:
    # a factor living in Q(zeta_r) together with its inverse
    value: CycloElement
    inverse: CycloElement


@dataclass(frozen=True)
class XiTrace:
    lens: LensSpace
    r: int
    c: int
    case_tag: str
    eta: int
    q_star: Optional[int]
    p_star: Optional[int]
    # BezoutPair of (p/c, r/c) when c > 1; (r', p') when c == 1
    bezout: Optional[Union[BezoutPair, Tuple[int, int]]]
    value: CycloElement
    value_approx: complex
    # value = sign * zeta_{pr}^root_exponent * embed(prod(numerator) / prod(denominator))
    sign: int = 0
    root_exponent: int = 0
    numerator: Tuple[XiFactor, ...] = ()
    denominator: Tuple[XiFactor, ...] = ()

    @property
    def conductor(self) -> int:
        return self.lens.p * self.r

    @property
    def is_zero(self) -> bool:
        return self.case_tag == CASE_ZERO


@dataclass(frozen=True)
class TauSeries:
    p: int
    q: int
    order: int
    lambdas: Tuple[Fraction, ...]


def lens_normalize(p: int, q: int) -> LensSpace:
    if p < 1:
        raise DomainError(f"lens space needs p >= 1, got p={p}")
    if math.gcd(p, q) != 1:
        raise DomainError(f"lens space needs gcd(p, q) = 1, got gcd({p}, {q}) = {math.gcd(p, q)}")
    return LensSpace(p=p, q=q % p)


def _check_level(r: int) -> None:
    if r < 3 or r % 2 == 0:
        raise DomainError(f"level r must be odd and >= 3, got r={r}")


def _framing_exponent(lens: LensSpace) -> int:
    # e_r^{-12 s(q,p)} = zeta_{pr}^a with a = -12 p s(q,p), an integer
    a = -12 * lens.p * dedekind_fast(lens.q, lens.p)
    assert a.denominator == 1, f"12 p s(q,p) is not integral for {lens}"
    return int(a)


@lru_cache(maxsize=None)
def _quantum_denominator(r: int, sign: int) -> XiFactor:
    # sign * (e_r^2 - e_r^{-2})
    value = cy.root_difference(r, 2, -2)
    inv = cy.inverse_root_difference(r, 2, -2)
    if sign < 0:
        value, inv = -value, -inv
    return XiFactor(value, inv)


@lru_cache(maxsize=None)
def _quantum_numerator(r: int, p_prime: int) -> XiFactor:
    # e_r^{2p'} - e_r^{-2p'}
    return XiFactor(cy.root_difference(r, 2 * p_prime, -2 * p_prime),
                    cy.inverse_root_difference(r, 2 * p_prime, -2 * p_prime))


@lru_cache(maxsize=None)
def _gauss_factor(r: int, c: int) -> XiFactor:
    g = cy.gauss_eps_sqrt(c)
    # g^2 = c or -c according to c mod 4
    square = c if c % 4 == 1 else -c
    return XiFactor(cy.embed(g, r), cy.embed(g * Fraction(1, square), r))


def _residual(numerator: Tuple[XiFactor, ...], denominator: Tuple[XiFactor, ...], r: int) -> CycloElement:
    acc = cy.one(r)
    for f in numerator:
        acc = acc * f.value
    for f in denominator:
        acc = acc * f.inverse
    return acc


def _assemble(lens: LensSpace, r: int, c: int, case_tag: str, eta: int, q_star, p_star, bezout,
              sign: int, exponent: int, numerator, denominator) -> XiTrace:
    n = lens.p * r
    exponent %= n
    value = cy.embed_times_root(_residual(numerator, denominator, r), n, exponent, sign)
    return XiTrace(
        lens=lens, r=r, c=c, case_tag=case_tag, eta=eta, q_star=q_star, p_star=p_star, bezout=bezout,
        value=value, value_approx=cy.to_complex(value),
        sign=sign, root_exponent=exponent, numerator=numerator, denominator=denominator,
    )


def xi(lens: LensSpace, r: int, bezout_shift: int = 0) -> XiTrace:
    """xi_r(L(p,q), e_r), evaluated exactly in Q(zeta_{pr}).

    bezout_shift=k evaluates with the representative ((p/c)' + k r/c, (r/c)' - k p/c)
    of the Bezout pair; the value does not depend on it.
    """
    _check_level(r)
    p, q = lens.p, lens.q
    c = math.gcd(p, r)

    if p == 1:
        return _assemble(lens, r, c, CASE_SPHERE, 0, None, None, None, 1, 0, (), ())

    q_star = mod_inverse(q, p)
    p_star = (1 - q_star * q) // p
    a = _framing_exponent(lens)

    if c == 1:
        r_prime = mod_inverse(r, p)
        p_prime = mod_inverse(p, r)
        exponent = a + r * r_prime * (q + q_star)
        return _assemble(
            lens, r, c, CASE_C1, 0, q_star, p_star, (r_prime, p_prime),
            jacobi(p, r), exponent,
            (_quantum_numerator(r, p_prime),), (_quantum_denominator(r, 1),),
        )

    # c is odd and > 1, so at most one of q* - 1, q* + 1 is divisible by it
    if (q_star - 1) % c == 0:
        eta = -1
    elif (q_star + 1) % c == 0:
        eta = 1
    else:
        return XiTrace(
            lens=lens, r=r, c=c, case_tag=CASE_ZERO, eta=0, q_star=q_star, p_star=p_star, bezout=None,
            value=cy.zero(p * r), value_approx=0j,
        )

    pc, rc = p // c, r // c
    pair = bezout_pair(pc, rc)
    pc_prime = pair.a_prime + bezout_shift * rc
    rc_prime = pair.b_prime - bezout_shift * pc
    sign = (-1) ** (((r - 1) // 2) * ((c - 1) // 2)) * jacobi(pc, rc) * jacobi(q, c) * eta
    # e_{pc}^X = zeta_{pr}^{X r/c} and e_{rc}^Y = zeta_{pr}^{Y p/c}
    exponent = (a
                + rc * rc_prime * (q + q_star - eta * p_star * p)
                + pc * (-2 * eta * pc_prime))
    return _assemble(
        lens, r, c, CASE_ETA, eta, q_star, p_star, BezoutPair(pc_prime, rc_prime, pc, rc),
        sign, exponent,
        (_gauss_factor(r, c),), (_quantum_denominator(r, -1),),
    )


def _zero_diagnostic(trace: XiTrace) -> str:
    return (f"xi_{trace.r}({trace.lens}) is zero: c = {trace.c} divides neither "
            f"q* + 1 = {trace.q_star + 1} nor q* - 1 = {trace.q_star - 1}")


def _cancel(a: Tuple[XiFactor, ...], b: Tuple[XiFactor, ...]):
    left, right = list(a), list(b)
    for f in list(left):
        if f in right:
            left.remove(f)
            right.remove(f)
    return tuple(left), tuple(right)


def xi_ratio(lens1: LensSpace, lens2: LensSpace, r: int) -> CycloElement:
    """xi_r(L1) / xi_r(L2) in Q(zeta_{lcm(p1,p2) r}).

    Equal factors of the two traces cancel and the rest are inverted factor-wise,
    so no dense element of Q(zeta_{pr}) is ever inverted.
    """
    t1, t2 = xi(lens1, r), xi(lens2, r)
    if t2.is_zero:
        raise DomainError(f"xi_ratio: zero denominator; {_zero_diagnostic(t2)}")
    m = math.lcm(lens1.p, lens2.p) * r
    if t1.is_zero:
        return cy.zero(m)
    num1, num2 = _cancel(t1.numerator, t2.numerator)
    den1, den2 = _cancel(t1.denominator, t2.denominator)
    residual = cy.one(r)
    for f in num1 + den2:
        residual = residual * f.value
    for f in den1 + num2:
        residual = residual * f.inverse
    exponent = t1.root_exponent * (m // t1.conductor) - t2.root_exponent * (m // t2.conductor)
    return cy.embed_times_root(residual, m, exponent % m, t1.sign * t2.sign)


def xi_equal(lens1: LensSpace, lens2: LensSpace, r: int) -> bool:
    v1, v2 = xi(lens1, r).value, xi(lens2, r).value
    if v1.conductor != v2.conductor:
        m = math.lcm(lens1.p, lens2.p) * r
        v1, v2 = cy.embed(v1, m), cy.embed(v2, m)
    return v1 == v2


def oriented_homeomorphic(lens1: LensSpace, lens2: LensSpace) -> bool:
    if lens1.p != lens2.p:
        return False
    if lens1.p == 1:
        return True
    return lens2.q in (lens1.q, mod_inverse(lens1.q, lens1.p))


def tau_series(lens: LensSpace, order: int) -> TauSeries:
    """tau(L(p,q)) = t^{-3s} (t^{1/2p} - t^{-1/2p}) / (t^{1/2} - t^{-1/2}) expanded in h = t - 1."""
    if order < 0:
        raise DomainError(f"tau_series: order must be >= 0, got {order}")
    p = lens.p
    s = dedekind_fast(lens.q, p)
    m = order + 1
    # both differences vanish at h = 0; cancel one h before dividing
    num = (binomial_series(Fraction(1, 2 * p), m) - binomial_series(Fraction(-1, 2 * p), m)).shift_down()
    den = (binomial_series(Fraction(1, 2), m) - binomial_series(Fraction(-1, 2), m)).shift_down()
    tau = binomial_series(-3 * s, order) * (num / den)
    return TauSeries(p=p, q=lens.q, order=order, lambdas=tau.coeffs)


def tau_equal(lens1: LensSpace, lens2: LensSpace) -> bool:
    return lens1.p == lens2.p and dedekind_fast(lens1.q, lens1.p) == dedekind_fast(lens2.q, lens2.p)


def tau_series_equal(s1: TauSeries, s2: TauSeries) -> bool:
    n = min(s1.order, s2.order)
    return s1.p == s2.p and s1.lambdas[: n + 1] == s2.lambdas[: n + 1]


def lawrence_ring_ok(series: TauSeries) -> bool:
    """Every lambda_n lies in Z[1/2, 1/p] (in Z when p = 1)."""
    allowed = set(prime_factors(series.p)) | {2} if series.p > 1 else set()
    return all(set(prime_factors(lam.denominator)) <= allowed for lam in series.lambdas)