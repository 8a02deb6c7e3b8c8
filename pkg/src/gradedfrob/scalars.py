"""Exact scalar fields: arbitrary-precision rationals and prime fields GF(p).

Scalars are plain Python values (``fractions.Fraction`` over the rationals,
canonical residues ``int`` in ``[0, p)`` over GF(p)); a ``Field`` object
carries the arithmetic.  Nothing in this package ever touches floating point.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Scalar = Union[Fraction, int]

MAX_PRIME = 2**31


class ScalarError(ValueError):
    """Malformed scalar literal or field declaration."""


def _is_prime(n: int) -> bool:
    # Deterministic Miller-Rabin; bases {2, 3, 5, 7} cover n < 3.2 * 10^9.
    if n < 2:
        return False
    for p in (2, 3, 5, 7):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class Field:
    """An exact field: the rationals (characteristic 0) or GF(p)."""

    kind: str  # "rationals" | "prime"
    characteristic: int = 0

    def __post_init__(self):
        if self.kind == "rationals":
            if self.characteristic != 0:
                raise ScalarError("rationals have characteristic 0")
        elif self.kind == "prime":
            p = self.characteristic
            if not (2 <= p < MAX_PRIME):
                raise ScalarError(f"prime field characteristic out of range: {p}")
            if not _is_prime(p):
                raise ScalarError(f"{p} is not prime")
        else:
            raise ScalarError(f"unknown field kind {self.kind!r}")

    @property
    def is_prime_field(self) -> bool:
        return self.kind == "prime"

    @property
    def zero(self) -> Scalar:
        return 0 if self.is_prime_field else Fraction(0)

    @property
    def one(self) -> Scalar:
        return 1 if self.is_prime_field else Fraction(1)

    def from_int(self, n: int) -> Scalar:
        if self.is_prime_field:
            return n % self.characteristic
        return Fraction(n)

    def add(self, a: Scalar, b: Scalar) -> Scalar:
        if self.is_prime_field:
            return (a + b) % self.characteristic
        return a + b

    def sub(self, a: Scalar, b: Scalar) -> Scalar:
        if self.is_prime_field:
            return (a - b) % self.characteristic
        return a - b

    def neg(self, a: Scalar) -> Scalar:
        if self.is_prime_field:
            return -a % self.characteristic
        return -a

    def mul(self, a: Scalar, b: Scalar) -> Scalar:
        if self.is_prime_field:
            return a * b % self.characteristic
        return a * b

    def inv(self, a: Scalar) -> Scalar:
        if self.is_zero(a):
            raise ZeroDivisionError("inverse of zero")
        if self.is_prime_field:
            return pow(a, self.characteristic - 2, self.characteristic)
        return 1 / a

    def div(self, a: Scalar, b: Scalar) -> Scalar:
        return self.mul(a, self.inv(b))

    def is_zero(self, a: Scalar) -> bool:
        return a == 0

    def parse(self, text: str) -> Scalar:
        """Parse "a" or "a/b" into a canonical scalar of this field."""
        text = text.strip()
        if "/" in text:
            if self.is_prime_field:
                raise ScalarError(
                    f"fraction literal {text!r} not allowed over GF({self.characteristic})"
                )
            num_text, _, den_text = text.partition("/")
            try:
                num, den = int(num_text), int(den_text)
            except ValueError:
                raise ScalarError(f"malformed scalar literal {text!r}") from None
            if den == 0:
                raise ScalarError(f"zero denominator in {text!r}")
            return Fraction(num, den)
        try:
            n = int(text)
        except ValueError:
            raise ScalarError(f"malformed scalar literal {text!r}") from None
        return self.from_int(n)

    def render(self, a: Scalar) -> str:
        if self.is_prime_field:
            return str(a % self.characteristic)
        frac = Fraction(a)
        if frac.denominator == 1:
            return str(frac.numerator)
        return f"{frac.numerator}/{frac.denominator}"

    def sample(self, rng: random.Random, bound: int = 1) -> Scalar:
        """Draw a scalar: uniform on [-bound, bound] over Q, uniform on GF(p)."""
        if self.is_prime_field:
            return rng.randrange(self.characteristic)
        if bound < 1:
            raise ScalarError("sample bound must be >= 1")
        return Fraction(rng.randint(-bound, bound))

    def sample_set_size(self, bound: int) -> int:
        """Number of distinct values ``sample`` can return."""
        if self.is_prime_field:
            return self.characteristic
        return 2 * bound + 1

    def __str__(self) -> str:
        return "Q" if not self.is_prime_field else f"F{self.characteristic}"


QQ = Field("rationals")


def prime_field(p: int) -> Field:
    return Field("prime", p)


def parse_field(text: str) -> Field:
    """Parse a field declaration literal: "Q" or "F<p>" (e.g. "F7")."""
    text = text.strip()
    if text == "Q":
        return QQ
    if text.startswith("F"):
        try:
            p = int(text[1:])
        except ValueError:
            raise ScalarError(f"malformed field literal {text!r}") from None
        return prime_field(p)
    raise ScalarError(f"unknown field literal {text!r}")
