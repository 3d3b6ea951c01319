# Exact arithmetic in cyclotomic fields Q(zeta_n)
# elements live in the power basis 1, z, ..., z^(phi(n)-1) modulo Phi_n,
# stored as integer numerators over one common positive denominator
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Mapping, Sequence, Tuple, Union

import mpmath
import numpy as np

from invariants.errors import DomainError

Rational = Union[int, Fraction]


@dataclass(frozen=True)
class CycloPolynomial:
    n: int
    coeffs: Tuple[int, ...]  # low degree first, monic

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1


def _poly_exact_div(num: List[int], den: Sequence[int]) -> List[int]:
    # exact division by a monic integer polynomial (low degree first)
    num = list(num)
    dd = len(den) - 1
    out = [0] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c:
            out[i - dd] = c
            for j, a in enumerate(den):
                num[i - dd + j] -= c * a
    if any(num[:dd]):
        raise ArithmeticError("non-exact polynomial division")
    return out


@lru_cache(maxsize=None)
def cyclo_poly(n: int) -> CycloPolynomial:
    if n < 1:
        raise DomainError(f"cyclo_poly: n must be positive, got {n}")
    # x^n - 1 divided by Phi_d for every proper divisor d
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly = _poly_exact_div(poly, cyclo_poly(d).coeffs)
    return CycloPolynomial(n=n, coeffs=tuple(poly))


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    return cyclo_poly(n).degree


@lru_cache(maxsize=None)
def _reduction_terms(n: int) -> Tuple[np.ndarray, np.ndarray]:
    # nonzero non-leading coefficients of Phi_n as (positions, values)
    coeffs = cyclo_poly(n).coeffs[:-1]
    idx = [j for j, a in enumerate(coeffs) if a]
    vals = np.empty(len(idx), dtype=object)
    vals[:] = [coeffs[j] for j in idx]
    return np.array(idx, dtype=np.int64), vals


def _reduce(n: int, vec: np.ndarray) -> np.ndarray:
    """Reduce a length-n group-ring vector (exponents already mod n) modulo Phi_n."""
    phi = euler_phi(n)
    idx, vals = _reduction_terms(n)
    for i in range(len(vec) - 1, phi - 1, -1):
        c = vec[i]
        if c:
            # z^i = -z^(i-phi) * (Phi_n(z) - z^phi)
            vec[i - phi + idx] -= c * vals
            vec[i] = 0
    return vec[:phi]


def _canonical(n: int, numerators: Sequence[int], denominator: int) -> "CycloElement":
    nums = [int(a) for a in numerators]
    if denominator < 0:
        nums = [-a for a in nums]
        denominator = -denominator
    g = math.gcd(denominator, *nums)
    return CycloElement(n, tuple(a // g for a in nums), denominator // g)


def _from_group_ring(n: int, vec: np.ndarray, denominator: int = 1) -> "CycloElement":
    return _canonical(n, _reduce(n, vec).tolist(), denominator)


def _zeros(n: int) -> np.ndarray:
    return np.zeros(n, dtype=object)


@dataclass(frozen=True)
class CycloElement:
    conductor: int
    numerators: Tuple[int, ...]
    denominator: int = 1

    @property
    def coeffs(self) -> Tuple[Fraction, ...]:
        return tuple(Fraction(a, self.denominator) for a in self.numerators)

    def terms(self) -> Dict[int, Fraction]:
        return {k: Fraction(a, self.denominator) for k, a in enumerate(self.numerators) if a}

    def is_zero(self) -> bool:
        return not any(self.numerators)

    def monomial(self):
        # (k, coefficient) when the element is a single power-basis term
        nz = [(k, a) for k, a in enumerate(self.numerators) if a]
        if len(nz) != 1:
            return None
        k, a = nz[0]
        return k, Fraction(a, self.denominator)

    def _check(self, other: "CycloElement") -> None:
        if self.conductor != other.conductor:
            raise DomainError(
                f"conductor mismatch: {self.conductor} vs {other.conductor}; embed into a common field first"
            )

    def __add__(self, other: "CycloElement") -> "CycloElement":
        return add(self, other)

    def __sub__(self, other: "CycloElement") -> "CycloElement":
        return sub(self, other)

    def __mul__(self, other: Union["CycloElement", Rational]) -> "CycloElement":
        if isinstance(other, (int, Fraction)):
            return scale(self, other)
        return mul(self, other)

    __rmul__ = __mul__

    def __neg__(self) -> "CycloElement":
        return neg(self)

    def __pow__(self, k: int) -> "CycloElement":
        if k < 0:
            return inverse(self) ** (-k)
        result = one(self.conductor)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __repr__(self) -> str:
        body = " + ".join(f"({c})*z^{k}" for k, c in self.terms().items()) or "0"
        return f"CycloElement[{self.conductor}]({body})"


def from_terms(n: int, terms: Mapping[int, Rational]) -> CycloElement:
    if n < 1:
        raise DomainError(f"conductor must be positive, got {n}")
    fracs = {k: Fraction(c) for k, c in terms.items()}
    den = math.lcm(1, *(c.denominator for c in fracs.values()))
    vec = _zeros(n)
    for k, c in fracs.items():
        vec[k % n] += c.numerator * (den // c.denominator)
    return _from_group_ring(n, vec, den)


def zero(n: int) -> CycloElement:
    return CycloElement(n, (0,) * euler_phi(n), 1)


def from_int(n: int, value: Rational) -> CycloElement:
    return from_terms(n, {0: value})


def one(n: int) -> CycloElement:
    return from_int(n, 1)


def root_of_unity(n: int, k: int) -> CycloElement:
    return from_terms(n, {k: 1})


def add(x: CycloElement, y: CycloElement) -> CycloElement:
    x._check(y)
    den = math.lcm(x.denominator, y.denominator)
    fx, fy = den // x.denominator, den // y.denominator
    return _canonical(x.conductor, [a * fx + b * fy for a, b in zip(x.numerators, y.numerators)], den)


def neg(x: CycloElement) -> CycloElement:
    return CycloElement(x.conductor, tuple(-a for a in x.numerators), x.denominator)


def sub(x: CycloElement, y: CycloElement) -> CycloElement:
    return add(x, neg(y))


def scale(x: CycloElement, c: Rational) -> CycloElement:
    c = Fraction(c)
    return _canonical(x.conductor, [a * c.numerator for a in x.numerators], x.denominator * c.denominator)


def _sparse(x: CycloElement) -> Tuple[np.ndarray, np.ndarray]:
    idx = [k for k, a in enumerate(x.numerators) if a]
    vals = np.empty(len(idx), dtype=object)
    vals[:] = [x.numerators[k] for k in idx]
    return np.array(idx, dtype=np.int64), vals


def mul(x: CycloElement, y: CycloElement) -> CycloElement:
    x._check(y)
    n = x.conductor
    if sum(1 for a in x.numerators if a) > sum(1 for a in y.numerators if a):
        x, y = y, x
    y_idx, y_vals = _sparse(y)
    vec = _zeros(n)
    for i, a in enumerate(x.numerators):
        if a:
            # y's exponents are distinct below phi(n) <= n, so targets never collide
            vec[(i + y_idx) % n] += a * y_vals
    return _from_group_ring(n, vec, x.denominator * y.denominator)


def _poly_trim(a: List[Fraction]) -> List[Fraction]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_divmod(a: List[Fraction], b: List[Fraction]) -> Tuple[List[Fraction], List[Fraction]]:
    a = list(a)
    db = len(b) - 1
    lead = b[-1]
    quot = [Fraction(0)] * max(len(a) - db, 1)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i] / lead
        if c:
            quot[i - db] = c
            for j, bj in enumerate(b):
                a[i - db + j] -= c * bj
    return _poly_trim(quot), _poly_trim(a[:db] if db else [])


def _poly_sub_mul(a: List[Fraction], b: List[Fraction], c: List[Fraction]) -> List[Fraction]:
    # a - b*c
    out = list(a) + [Fraction(0)] * max(0, len(b) + len(c) - 1 - len(a))
    for i, bi in enumerate(b):
        if bi:
            for j, cj in enumerate(c):
                out[i + j] -= bi * cj
    return _poly_trim(out)


def inverse(x: CycloElement) -> CycloElement:
    """Inverse by the extended Euclidean algorithm against Phi_n over Q."""
    if x.is_zero():
        raise DomainError("inverse: element is zero")
    n = x.conductor
    mono = x.monomial()
    if mono is not None:
        k, c = mono
        return from_terms(n, {-k: 1 / c})
    # track s with s*x = r (mod Phi_n)
    r0 = [Fraction(c) for c in cyclo_poly(n).coeffs]
    r1 = _poly_trim([Fraction(a, x.denominator) for a in x.numerators])
    s0: List[Fraction] = []
    s1: List[Fraction] = [Fraction(1)]
    while len(r1) > 1:
        quot, rem = _poly_divmod(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, _poly_sub_mul(s0, quot, s1)
    # r1 is a nonzero constant since Phi_n is irreducible
    return from_terms(n, {k: c / r1[0] for k, c in enumerate(s1)})


def embed(x: CycloElement, m: int) -> CycloElement:
    n = x.conductor
    if m < 1 or m % n:
        raise DomainError(f"embed: conductor {n} does not divide {m}")
    if m == n:
        return x
    step = m // n
    vec = _zeros(m)
    for k, a in enumerate(x.numerators):
        if a:
            vec[k * step] += a
    return _from_group_ring(m, vec, x.denominator)


def conjugate(x: CycloElement) -> CycloElement:
    n = x.conductor
    vec = _zeros(n)
    for k, a in enumerate(x.numerators):
        if a:
            vec[-k % n] += a
    return _from_group_ring(n, vec, x.denominator)


@lru_cache(maxsize=None)
def gauss_eps_sqrt(c: int) -> CycloElement:
    """Quadratic Gauss sum sum_j zeta_c^(j^2), equal to eps(c)*sqrt(c) for odd c."""
    if c < 1 or c % 2 == 0:
        raise DomainError(f"gauss_eps_sqrt: c must be odd and positive, got {c}")
    vec = _zeros(c)
    for j in range(c):
        vec[j * j % c] += 1
    return _from_group_ring(c, vec)


def to_complex(x: CycloElement, precision: int = 15) -> complex:
    if precision > 15:
        return complex(to_mpc(x, precision))
    n = x.conductor
    coeffs = np.array([float(c) for c in x.coeffs])
    powers = np.exp(2j * np.pi * np.arange(len(coeffs)) / n)
    return complex(np.dot(coeffs, powers))


def to_mpc(x: CycloElement, dps: int = 30) -> mpmath.mpc:
    n = x.conductor
    with mpmath.workdps(dps + 10):
        total = mpmath.fsum(
            mpmath.mpf(a) / x.denominator * mpmath.expjpi(mpmath.mpf(2 * k) / n)
            for k, a in enumerate(x.numerators)
            if a
        )
    return total


def embed_times_root(x: CycloElement, m: int, k: int, c: Rational = 1) -> CycloElement:
    """c * zeta_m^k * embed(x, m) with a single reduction modulo Phi_m."""
    n = x.conductor
    if m < 1 or m % n:
        raise DomainError(f"embed: conductor {n} does not divide {m}")
    c = Fraction(c)
    step = m // n
    vec = _zeros(m)
    for i, a in enumerate(x.numerators):
        if a:
            vec[(i * step + k) % m] += a * c.numerator
    return _from_group_ring(m, vec, x.denominator * c.denominator)


def root_difference(n: int, a: int, b: int) -> CycloElement:
    return from_terms(n, {a: 1, b: -1}) if (a - b) % n else zero(n)


def inverse_root_difference(n: int, a: int, b: int) -> CycloElement:
    """Closed-form inverse of zeta^a - zeta^b.

    With u = zeta^(a-b) of order d > 1, 1/(u - 1) = (1/d) * sum_{j<d} j u^j.
    """
    k = (a - b) % n
    if k == 0:
        raise DomainError(f"inverse: zeta_{n}^{a} - zeta_{n}^{b} is zero")
    d = n // math.gcd(n, k)
    return from_terms(n, {j * k - b: Fraction(j, d) for j in range(1, d)})
