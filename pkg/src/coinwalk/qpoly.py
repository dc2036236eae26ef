"""Exact arithmetic substrate: integer combinatorics and polynomials in q.

Scalars are ``fractions.Fraction`` throughout; nothing in this package ever
rounds.  ``QPoly`` is an immutable dense polynomial in the marking variable q
with Fraction coefficients, stored in canonical form (no trailing zeros, so
the zero polynomial has degree -1).  Division is exact-or-loud: a nonzero
remainder raises :class:`~coinwalk.errors.InexactDivision` instead of being
discarded, because every division performed here encodes an identity that is
supposed to hold exactly.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Union

from .errors import InexactDivision

Scalar = Union[int, Fraction]


def binomial(n: int, k: int) -> int:
    """Binomial coefficient C(n, k) as an exact integer.

    Total on purpose: returns 0 for k > n so convolution loops need no bounds
    checks.  Negative arguments are a usage error.
    """
    if n < 0 or k < 0:
        raise ValueError(f"binomial needs non-negative arguments, got ({n}, {k})")
    if k > n:
        return 0
    return math.comb(n, k)


def return_prob(k: int) -> Fraction:
    """Probability that a fair +-1 walk sits at the origin after 2k steps.

    Equals C(2k, k) / 4^k; the building block of every closed-form law in
    this package.
    """
    return Fraction(binomial(2 * k, k), 4**k)


class QPoly:
    """Immutable dense polynomial in q over exact rationals."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [c if isinstance(c, Fraction) else Fraction(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self._coeffs = tuple(cs)

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> "QPoly":
        return cls()

    @classmethod
    def one(cls) -> "QPoly":
        return cls((1,))

    @classmethod
    def q(cls) -> "QPoly":
        return cls((0, 1))

    @classmethod
    def monomial(cls, k: int, coeff: Scalar = 1) -> "QPoly":
        """coeff * q^k"""
        return cls((0,) * k + (coeff,))

    # -- structure ----------------------------------------------------

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        """Degree in q; -1 for the zero polynomial (canonical sentinel)."""
        return len(self._coeffs) - 1

    def coeff(self, i: int) -> Fraction:
        """Coefficient of q^i (0 beyond the degree)."""
        if 0 <= i < len(self._coeffs):
            return self._coeffs[i]
        return Fraction(0)

    def is_zero(self) -> bool:
        return not self._coeffs

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, QPoly):
            return self._coeffs == other._coeffs
        if isinstance(other, (int, Fraction)):
            return self == QPoly((other,))
        return NotImplemented

    def __hash__(self):
        return hash(self._coeffs)

    # -- ring operations ----------------------------------------------

    def __add__(self, other) -> "QPoly":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return QPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "QPoly":
        return QPoly(tuple(-c for c in self._coeffs))

    def __sub__(self, other) -> "QPoly":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "QPoly":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "QPoly":
        other = _coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if not a or not b:
            return QPoly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if not ca:
                continue
            for j, cb in enumerate(b):
                if cb:
                    out[i + j] += ca * cb
        return QPoly(out)

    __rmul__ = __mul__

    def scale(self, s: Scalar) -> "QPoly":
        s = Fraction(s)
        return QPoly(tuple(c * s for c in self._coeffs))

    def shift(self, k: int) -> "QPoly":
        """Multiply by q^k."""
        if not self._coeffs:
            return self
        return QPoly((Fraction(0),) * k + self._coeffs)

    # -- calculus and evaluation ----------------------------------------

    def __call__(self, value: Scalar) -> Fraction:
        """Evaluate at a rational point (Horner)."""
        value = Fraction(value)
        acc = Fraction(0)
        for c in reversed(self._coeffs):
            acc = acc * value + c
        return acc

    def derivative(self) -> "QPoly":
        return QPoly(tuple(i * c for i, c in enumerate(self._coeffs) if i >= 1))

    def even_part(self) -> "QPoly":
        """Terms of even q-degree, exponents kept."""
        return QPoly(tuple(c if i % 2 == 0 else Fraction(0) for i, c in enumerate(self._coeffs)))

    def odd_part(self) -> "QPoly":
        return QPoly(tuple(c if i % 2 == 1 else Fraction(0) for i, c in enumerate(self._coeffs)))

    # -- division -------------------------------------------------------

    def divmod(self, div: "QPoly") -> tuple["QPoly", "QPoly"]:
        """Quotient and remainder of polynomial long division."""
        if not isinstance(div, QPoly):
            div = QPoly((div,))
        if div.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self._coeffs)
        dd = div.degree
        lead = div._coeffs[-1]
        if len(rem) <= dd:
            return QPoly(), self
        quot = [Fraction(0)] * (len(rem) - dd)
        for i in range(len(rem) - 1, dd - 1, -1):
            c = rem[i]
            if not c:
                continue
            f = c / lead
            quot[i - dd] = f
            for j in range(dd + 1):
                rem[i - dd + j] -= f * div._coeffs[j]
        return QPoly(quot), QPoly(rem)

    def divide_exact(self, div: "QPoly") -> "QPoly":
        """Exact quotient; raises InexactDivision if any remainder is left."""
        quot, rem = self.divmod(div)
        if not rem.is_zero():
            raise InexactDivision(
                f"({self}) is not divisible by ({div}); remainder {rem}", remainder=rem
            )
        return quot

    # -- formatting -----------------------------------------------------

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"QPoly({list(self._coeffs)!r})"


def _coerce(value) -> QPoly | None:
    if isinstance(value, QPoly):
        return value
    if isinstance(value, (int, Fraction)):
        return QPoly((value,))
    return None


def format_poly(poly: QPoly, var: str = "q") -> str:
    """Render like '3/8 + 1/8 q + 1/8 q^2 + 3/8 q^3' (zero terms skipped)."""
    if poly.is_zero():
        return "0"
    parts: list[str] = []
    for i, c in enumerate(poly.coeffs):
        if not c:
            continue
        mag = abs(c)
        if i == 0:
            body = str(mag)
        else:
            pw = var if i == 1 else f"{var}^{i}"
            body = pw if mag == 1 else f"{mag} {pw}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts)
