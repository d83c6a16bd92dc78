"""Pure-Python Gaussian rational scalar.

Reference implementation of the exact scalar core, built on
fractions.Fraction. molien._gauss_cy provides a compiled drop-in
replacement with the same observable behaviour; molien.scalars picks one
of the two at import time.
"""

from __future__ import annotations

from fractions import Fraction


class GaussianRational:
    """Complex number with rational real and imaginary parts, a + bi.

    Values are immutable and always stored reduced. Arithmetic accepts
    GaussianRational, int and Fraction operands; division by zero raises
    ZeroDivisionError.
    """

    __slots__ = ("_re", "_im")

    def __init__(self, re=0, im=0):
        if isinstance(re, GaussianRational):
            if im != 0:
                raise TypeError("imaginary part must be 0 when re is already complex")
            self._re = re._re
            self._im = re._im
            return
        if isinstance(re, float) or isinstance(im, float):
            raise TypeError("GaussianRational does not accept floats; use the float backend")
        self._re = Fraction(re)
        self._im = Fraction(im)

    @property
    def re(self) -> Fraction:
        return self._re

    @property
    def im(self) -> Fraction:
        return self._im

    @property
    def re_num(self) -> int:
        return self._re.numerator

    @property
    def re_den(self) -> int:
        return self._re.denominator

    @property
    def im_num(self) -> int:
        return self._im.numerator

    @property
    def im_den(self) -> int:
        return self._im.denominator

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self._re, -self._im)

    def is_real(self) -> bool:
        return self._im == 0

    def is_integer(self) -> bool:
        return self._im == 0 and self._re.denominator == 1

    def __bool__(self) -> bool:
        return self._re != 0 or self._im != 0

    def _coerce(self, other):
        if isinstance(other, GaussianRational):
            return other
        if isinstance(other, (int, Fraction)):
            return GaussianRational(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return GaussianRational(self._re + other._re, self._im + other._im)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return GaussianRational(self._re - other._re, self._im - other._im)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __neg__(self):
        return GaussianRational(-self._re, -self._im)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b, c, d = self._re, self._im, other._re, other._im
        return GaussianRational(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b, c, d = self._re, self._im, other._re, other._im
        norm = c * c + d * d
        if norm == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return GaussianRational((a * c + b * d) / norm, (b * c - a * d) / norm)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._re == other._re and self._im == other._im

    def __hash__(self):
        return hash((self._re, self._im))

    def __repr__(self):
        return f"GaussianRational({self._re}, {self._im})"
