"""Minimal dense polynomials in the monomial basis.

Coefficients are stored ascending (index = power) in a tuple with no
trailing zeros, so the zero polynomial is the empty tuple and ``degree``
is -1 for it.  Coefficients can be Fractions (exact mode) or floats; the
two must not be mixed within one computation.
"""

from __future__ import annotations

from .errors import InexactDivision
from .scalars import scalars_equal, zero_like


def _strip(coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class Poly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        object.__setattr__(self, "coeffs", _strip(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # -- inspection ------------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def constant(self):
        return self.coeffs[0] if self.coeffs else 0

    @property
    def leading(self):
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def coefficient(self, power: int):
        return self.coeffs[power] if 0 <= power < len(self.coeffs) else 0

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] = out[i] + v
        return Poly(out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return Poly(tuple(-v for v in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, Poly):
            if not self.coeffs or not other.coeffs:
                return Poly()
            out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, u in enumerate(self.coeffs):
                for j, v in enumerate(other.coeffs):
                    out[i + j] += u * v
            return Poly(out)
        return Poly(tuple(v * other for v in self.coeffs))

    def __rmul__(self, scalar):
        return Poly(tuple(scalar * v for v in self.coeffs))

    def scale(self, scalar):
        return Poly(tuple(v * scalar for v in self.coeffs))

    def __call__(self, x):
        acc = zero_like(x)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def times_x(self):
        if not self.coeffs:
            return self
        return Poly((zero_like(self.coeffs[0]),) + self.coeffs)

    def exact_div_x(self, context=""):
        """Divide by x, insisting on a zero constant term."""
        if not self.coeffs:
            return self
        if self.coeffs[0] != 0:
            raise InexactDivision(self.coeffs[0], context)
        return Poly(self.coeffs[1:])

    # -- comparison ------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def approx_equal(self, other) -> bool:
        """Coefficientwise comparison with the float-mode tolerance."""
        n = max(len(self.coeffs), len(other.coeffs))
        return all(
            scalars_equal(self.coefficient(k), other.coefficient(k)) for k in range(n)
        )

    def __repr__(self):
        return f"Poly({list(self.coeffs)!r})"


def x_poly(one=1) -> Poly:
    """The monomial x with the given multiplicative identity (1 or 1.0)."""
    return Poly((zero_like(one), one))


def constant_poly(value) -> Poly:
    return Poly((value,))
