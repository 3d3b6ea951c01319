# Elementary number theory for lens spaces: inverses, Jacobi symbols,
# negative continued fractions and Dedekind sums (three independent ways)
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Tuple

from invariants.errors import DomainError

DEDEKIND_METHODS = ("direct", "hickerson", "fast")


@dataclass(frozen=True)
class NegContFrac:
    # terms read outermost first: p/q = m_n - 1/(m_{n-1} - ... - 1/m_1)
    terms: Tuple[int, ...]
    p: int
    q: int

    @property
    def n(self) -> int:
        return len(self.terms)

    def value(self) -> Fraction:
        acc = Fraction(self.terms[-1])
        for m in reversed(self.terms[:-1]):
            acc = m - 1 / acc
        return acc


@dataclass(frozen=True)
class BezoutPair:
    # a_prime * a + b_prime * b == 1
    a_prime: int
    b_prime: int
    a: int
    b: int


@dataclass(frozen=True)
class HickersonTerms:
    """12 s(q,p) split as (sum m_i - 3n) + (q + q*)/p."""
    contfrac: NegContFrac
    q_star: int
    integral: int
    fractional: Fraction

    @property
    def twelve_s(self) -> Fraction:
        return self.integral + self.fractional


def egcd(a: int, b: int) -> Tuple[int, int, int]:
    if a == 0 and b == 0:
        raise DomainError("egcd: both inputs are zero")
    x0, y0, x1, y1 = 1, 0, 0, 1
    r0, r1 = a, b
    while r1:
        quot, rem = divmod(r0, r1)
        r0, r1 = r1, rem
        x0, x1 = x1, x0 - quot * x1
        y0, y1 = y1, y0 - quot * y1
    if r0 < 0:
        r0, x0, y0 = -r0, -x0, -y0
    return r0, x0, y0


def mod_inverse(a: int, m: int) -> int:
    if m < 2:
        raise DomainError(f"mod_inverse: modulus must be >= 2, got {m}")
    g, x, _ = egcd(a % m, m)
    if g != 1:
        raise DomainError(f"mod_inverse: gcd({a}, {m}) = {g} != 1")
    return x % m


def bezout_pair(a: int, b: int) -> BezoutPair:
    if math.gcd(a, b) != 1:
        raise DomainError(f"bezout_pair: gcd({a}, {b}) = {math.gcd(a, b)} != 1")
    if a == 1:
        return BezoutPair(a_prime=1, b_prime=0, a=a, b=b)
    if a > 1:
        b_prime = mod_inverse(b, a)
        return BezoutPair(a_prime=(1 - b_prime * b) // a, b_prime=b_prime, a=a, b=b)
    _, x, y = egcd(a, b)
    return BezoutPair(a_prime=x, b_prime=y, a=a, b=b)


def jacobi(a: int, n: int) -> int:
    if n < 1 or n % 2 == 0:
        raise DomainError(f"jacobi: n must be odd and positive, got {n}")
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        # quadratic reciprocity
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def neg_cont_frac(p: int, q: int) -> NegContFrac:
    if not 0 < q < p or math.gcd(p, q) != 1:
        raise DomainError(f"neg_cont_frac: need 0 < q < p with gcd 1, got p={p}, q={q}")
    terms: List[int] = []
    a, b = p, q
    while b:
        m = -(-a // b)
        terms.append(m)
        a, b = b, m * b - a
    return NegContFrac(terms=tuple(terms), p=p, q=q)


def sawtooth(x: Fraction) -> Fraction:
    if x.denominator == 1:
        return Fraction(0)
    return x - math.floor(x) - Fraction(1, 2)


def _check_coprime(q: int, p: int, who: str) -> None:
    if p < 1:
        raise DomainError(f"{who}: p must be positive, got {p}")
    if math.gcd(p, q) != 1:
        raise DomainError(f"{who}: gcd({p}, {q}) = {math.gcd(p, q)} != 1")


def dedekind_direct(q: int, p: int) -> Fraction:
    """Sawtooth definition s(q,p) = sum_k ((k/p))((kq/p)), O(p).

    For 0 < k < p and gcd(q,p) = 1 neither argument is integral, so
    ((k/p))((kq/p)) = (2k - p)(2(kq mod p) - p) / (4p^2) and the sum stays in integers.
    """
    _check_coprime(q, p, "dedekind_direct")
    q %= p
    acc = sum((2 * k - p) * (2 * (k * q % p) - p) for k in range(1, p))
    return Fraction(acc, 4 * p * p)


def hickerson_terms(q: int, p: int) -> HickersonTerms:
    _check_coprime(q, p, "hickerson_terms")
    q %= p
    if p < 2:
        raise DomainError("hickerson_terms: p must be >= 2")
    cf = neg_cont_frac(p, q)
    q_star = mod_inverse(q, p)
    return HickersonTerms(
        contfrac=cf,
        q_star=q_star,
        integral=sum(cf.terms) - 3 * cf.n,
        fractional=Fraction(q + q_star, p),
    )


def dedekind_hickerson(q: int, p: int) -> Fraction:
    _check_coprime(q, p, "dedekind_hickerson")
    if p == 1:
        return Fraction(0)
    return hickerson_terms(q, p).twelve_s / 12


def dedekind_fast(q: int, p: int) -> Fraction:
    _check_coprime(q, p, "dedekind_fast")
    q %= p
    total = Fraction(0)
    sign = 1
    # reciprocity: s(q,p) = -s(p mod q, q) - 1/4 + (p/q + q/p + 1/(pq))/12, base s(0,1) = 0
    while p > 1:
        total += sign * (Fraction(-1, 4) + (Fraction(p, q) + Fraction(q, p) + Fraction(1, p * q)) / 12)
        p, q = q, p % q
        sign = -sign
    return total


def dedekind(q: int, p: int, method: str = "fast") -> Fraction:
    if method == "direct":
        return dedekind_direct(q, p)
    if method == "hickerson":
        return dedekind_hickerson(q, p)
    if method == "fast":
        return dedekind_fast(q, p)
    raise DomainError(f"unknown Dedekind method {method!r}; choose one of {', '.join(DEDEKIND_METHODS)}")


def prime_factors(n: int) -> Dict[int, int]:
    # trial division, small n only
    if n < 1:
        raise DomainError(f"prime_factors: n must be positive, got {n}")
    factors: Dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            factors[d] = factors.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors
