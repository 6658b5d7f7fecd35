"""Dense exact-integer polynomials in q.

Coefficients are stored lowest degree first with no trailing zeros; the
zero polynomial is the empty tuple.  Degrees stay small (a few hundred),
so multiplication is plain convolution.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Sequence


def _normalize(coeffs: Sequence[int]) -> tuple[int, ...]:
    n = len(coeffs)
    while n and coeffs[n - 1] == 0:
        n -= 1
    return tuple(coeffs[:n])


@dataclass(frozen=True)
class QPolynomial:
    coefficients: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coefficients", _normalize(tuple(self.coefficients)))

    @classmethod
    def one(cls) -> "QPolynomial":
        return cls((1,))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def coefficient(self, k: int) -> int:
        if 0 <= k < len(self.coefficients):
            return self.coefficients[k]
        return 0

    def __add__(self, other: "QPolynomial") -> "QPolynomial":
        a, b = self.coefficients, other.coefficients
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, x in enumerate(b):
            out[i] += x
        return QPolynomial(out)

    def __mul__(self, other: "QPolynomial") -> "QPolynomial":
        a, b = self.coefficients, other.coefficients
        if not a or not b:
            return QPolynomial(())
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return QPolynomial(out)

    def substitute_power(self, m: int) -> "QPolynomial":
        """Replace q by q^m."""
        if m < 1:
            raise ValueError("power must be >= 1")
        if not self.coefficients:
            return QPolynomial(())
        out = [0] * (m * self.degree + 1)
        for i, x in enumerate(self.coefficients):
            out[m * i] = x
        return QPolynomial(out)

    def evaluate(self, q: int) -> int:
        acc = 0
        for x in reversed(self.coefficients):
            acc = acc * q + x
        return acc

    def total(self) -> int:
        return sum(self.coefficients)

    def to_json(self) -> str:
        """Serialize as a JSON array of decimal strings, lowest degree first."""
        return json.dumps([str(x) for x in self.coefficients])

    @classmethod
    def from_json(cls, text: str) -> "QPolynomial":
        return cls(tuple(int(x) for x in json.loads(text)))


def q_integer(m: int) -> QPolynomial:
    """[m]_q = 1 + q + ... + q^(m-1); [0]_q is the zero polynomial."""
    if m < 0:
        raise ValueError("need m >= 0")
    return QPolynomial((1,) * m)
