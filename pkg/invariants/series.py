# Truncated power series in h with exact rational coefficients
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Tuple, Union

from invariants.errors import DomainError

Rational = Union[int, Fraction]


@dataclass(frozen=True)
class TruncatedSeries:
    coeffs: Tuple[Fraction, ...]  # c_0 .. c_N

    @classmethod
    def of(cls, coeffs: Sequence[Rational], order: int) -> "TruncatedSeries":
        padded = [Fraction(c) for c in coeffs[: order + 1]]
        padded += [Fraction(0)] * (order + 1 - len(padded))
        return cls(tuple(padded))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k]

    def _check(self, other: "TruncatedSeries") -> None:
        if self.order != other.order:
            raise DomainError(f"series orders differ: {self.order} vs {other.order}")

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        return TruncatedSeries(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        return TruncatedSeries(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        n = self.order
        out = [Fraction(0)] * (n + 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j in range(n + 1 - i):
                    out[i + j] += a * other.coeffs[j]
        return TruncatedSeries(tuple(out))

    def __truediv__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        b0 = other.coeffs[0]
        if b0 == 0:
            raise DomainError("series division needs a divisor with nonzero constant term")
        n = self.order
        out = []
        for k in range(n + 1):
            acc = self.coeffs[k] - sum(out[j] * other.coeffs[k - j] for j in range(k))
            out.append(acc / b0)
        return TruncatedSeries(tuple(out))

    def shift_down(self) -> "TruncatedSeries":
        """Divide by h; the constant term must vanish and the result loses one order."""
        if self.coeffs[0] != 0:
            raise DomainError("shift_down: constant term is not zero")
        return TruncatedSeries(self.coeffs[1:])


def binomial_series(alpha: Rational, order: int) -> TruncatedSeries:
    # (1 + h)^alpha = sum_k binom(alpha, k) h^k
    alpha = Fraction(alpha)
    coeffs = [Fraction(1)]
    for k in range(1, order + 1):
        coeffs.append(coeffs[-1] * (alpha - k + 1) / k)
    return TruncatedSeries(tuple(coeffs))
