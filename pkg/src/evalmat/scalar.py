"""Exact scalars over two coefficient domains.

Rationals are plain ``fractions.Fraction`` values (always reduced, positive
denominator, ``str()`` gives the wire format "num/den" or "num"). Prime-field
elements are ``FpElement`` instances holding a value in [0, p) plus a
reference to their shared ``PrimeField`` context. Mixing domains raises
``DomainMismatchError``; plain ``int`` operands are coerced into either
domain.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Union

MAX_MODULUS = 1 << 62

Scalar = Union[Fraction, "FpElement"]


class DomainMismatchError(TypeError):
    """Operands belong to different scalar domains."""


class SizeMismatchError(ValueError):
    """A size-regime precondition (e.g. n = k+1) does not hold."""


class SingularChangeError(ValueError):
    """The linear change of variables is singular (det B = 0)."""


def binomial(n: int, k: int) -> int:
    """Exact binomial coefficient C(n, k); 0 when k > n."""
    return math.comb(n, k)


# Deterministic Miller-Rabin witness set, valid for every n < 3.3e24
# (covers the full modulus range p < 2^62).
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic primality check for n < 2^62."""
    if n < 2:
        return False
    for q in _MR_WITNESSES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
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


class FpElement:
    """An element of F_p. Immutable; arithmetic stays inside one field."""

    __slots__ = ("value", "field")

    def __init__(self, value: int, field: "PrimeField"):
        object.__setattr__(self, "value", value % field.p)
        object.__setattr__(self, "field", field)

    def __setattr__(self, name, val):
        raise AttributeError("FpElement is immutable")

    def _coerce(self, other) -> "FpElement | None":
        if isinstance(other, FpElement):
            if other.field.p != self.field.p:
                raise DomainMismatchError(
                    f"mixed moduli: F_{self.field.p} and F_{other.field.p}"
                )
            return other
        if isinstance(other, int):
            return FpElement(other, self.field)
        if isinstance(other, Fraction):
            raise DomainMismatchError("cannot mix rational and F_p scalars")
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return FpElement(self.value + other.value, self.field)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return FpElement(self.value - other.value, self.field)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return FpElement(other.value - self.value, self.field)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return FpElement(self.value * other.value, self.field)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inverse() ** (-exponent)
        return FpElement(pow(self.value, exponent, self.field.p), self.field)

    def __neg__(self):
        return FpElement(-self.value, self.field)

    def inverse(self) -> "FpElement":
        if self.value == 0:
            raise ZeroDivisionError(f"inverse of 0 in F_{self.field.p}")
        # Fermat: p is prime, so x^(p-2) inverts x.
        return FpElement(pow(self.value, self.field.p - 2, self.field.p), self.field)

    def __eq__(self, other):
        if isinstance(other, int):
            return self.value == other % self.field.p
        if isinstance(other, FpElement):
            return self.field.p == other.field.p and self.value == other.value
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.field.p))

    def __bool__(self):
        return self.value != 0

    def __str__(self):
        return str(self.value)

    def __repr__(self):
        return f"FpElement({self.value} mod {self.field.p})"


class PrimeField:
    """Shared context for F_p scalars; prime modulus p < 2^62."""

    __slots__ = ("p",)

    def __init__(self, p: int):
        if not isinstance(p, int) or not 2 <= p < MAX_MODULUS:
            raise ValueError(f"modulus must be an integer in [2, 2^62): {p!r}")
        if not is_prime(p):
            raise ValueError(f"modulus {p} is not prime")
        object.__setattr__(self, "p", p)

    def __setattr__(self, name, val):
        raise AttributeError("PrimeField is immutable")

    @property
    def zero(self) -> FpElement:
        return FpElement(0, self)

    @property
    def one(self) -> FpElement:
        return FpElement(1, self)

    def from_int(self, n: int) -> FpElement:
        return FpElement(n, self)

    def parse(self, s: str) -> FpElement:
        return FpElement(int(s), self)

    def format(self, x: FpElement) -> str:
        return str(x.value)

    @property
    def name(self) -> str:
        return f"fp:{self.p}"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("fp", self.p))

    def __repr__(self):
        return f"PrimeField({self.p})"


class RationalDomain:
    """The field of arbitrary-precision rationals (scalars are Fraction)."""

    zero = Fraction(0)
    one = Fraction(1)
    name = "rational"

    def from_int(self, n: int) -> Fraction:
        return Fraction(n)

    def parse(self, s: str) -> Fraction:
        return Fraction(s)

    def format(self, x: Fraction) -> str:
        return str(x)

    def __eq__(self, other):
        return isinstance(other, RationalDomain)

    def __hash__(self):
        return hash("rational")

    def __repr__(self):
        return "RationalDomain()"


RATIONAL = RationalDomain()

ScalarDomain = Union[RationalDomain, PrimeField]


def parse_domain(text: str) -> ScalarDomain:
    """Parse a domain string: "rational" or "fp:<p>"."""
    if text == "rational":
        return RATIONAL
    if text.startswith("fp:"):
        return PrimeField(int(text[3:]))
    raise ValueError(f"unknown scalar domain {text!r} (want 'rational' or 'fp:<p>')")


def domain_of(x: Scalar) -> ScalarDomain:
    if isinstance(x, FpElement):
        return x.field
    if isinstance(x, (Fraction, int)):
        return RATIONAL
    raise TypeError(f"not a scalar: {x!r}")


def normalize_scalars(values: Iterable, domain: ScalarDomain | None = None):
    """Coerce a sequence into one domain.

    ints become Fraction (or field elements when a PrimeField is given or
    inferred); mixing Fraction with FpElement, or two different moduli,
    raises DomainMismatchError. Returns (domain, tuple). Empty input yields
    the given domain or RATIONAL.
    """
    vals = list(values)
    if domain is None:
        for v in vals:
            if isinstance(v, FpElement):
                domain = v.field
                break
            if isinstance(v, Fraction):
                domain = RATIONAL
                break
        else:
            domain = RATIONAL
    out = []
    for v in vals:
        if isinstance(v, int):
            out.append(domain.from_int(v))
        elif isinstance(v, Fraction):
            if not isinstance(domain, RationalDomain):
                raise DomainMismatchError("cannot mix rational and F_p scalars")
            out.append(v)
        elif isinstance(v, FpElement):
            if not isinstance(domain, PrimeField) or v.field.p != domain.p:
                raise DomainMismatchError(
                    f"scalar from {v.field.name} does not belong to {domain.name}"
                )
            out.append(v)
        else:
            raise TypeError(f"not a scalar: {v!r}")
    return domain, tuple(out)


def format_scalar(x: Scalar) -> str:
    return str(x)


def parse_scalar(s: str, domain: ScalarDomain) -> Scalar:
    return domain.parse(s)
