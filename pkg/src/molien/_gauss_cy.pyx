# cython: language_level=3, binding=True
"""Compiled Gaussian rational scalar.

Drop-in replacement for molien._gauss_py.GaussianRational. Parts are kept
as reduced integer pairs (numerator, positive denominator) and reduced with
math.gcd after every operation; integers are Python ints, so precision is
arbitrary. The speedup over the Fraction-based fallback comes from C-level
attribute access and dispatch in the arithmetic inner loops.
"""

from fractions import Fraction

from math import gcd


cdef object _Fraction = Fraction


cdef GaussianRational _make(object rn, object rd, object im_n, object im_d):
    """Build from raw parts, normalising signs and reducing."""
    cdef object g
    if rd < 0:
        rn = -rn
        rd = -rd
    if im_d < 0:
        im_n = -im_n
        im_d = -im_d
    g = gcd(rn, rd)
    if g > 1:
        rn //= g
        rd //= g
    g = gcd(im_n, im_d)
    if g > 1:
        im_n //= g
        im_d //= g
    cdef GaussianRational out = GaussianRational.__new__(GaussianRational)
    out._rn = rn
    out._rd = rd
    out._in = im_n
    out._id = im_d
    return out


cdef inline GaussianRational _coerce(object value):
    if type(value) is GaussianRational:
        return <GaussianRational> value
    if isinstance(value, GaussianRational):
        return <GaussianRational> value
    if isinstance(value, int):
        return _make(value, 1, 0, 1)
    if isinstance(value, _Fraction):
        return _make(value.numerator, value.denominator, 0, 1)
    return None


cdef class GaussianRational:
    """Complex number with rational real and imaginary parts, a + bi.

    Values are immutable and always stored reduced. Arithmetic accepts
    GaussianRational, int and Fraction operands; division by zero raises
    ZeroDivisionError.
    """

    cdef readonly object _rn, _rd, _in, _id

    def __init__(self, re=0, im=0):
        cdef GaussianRational g
        if isinstance(re, GaussianRational):
            if im != 0:
                raise TypeError("imaginary part must be 0 when re is already complex")
            g = <GaussianRational> re
            self._rn, self._rd = g._rn, g._rd
            self._in, self._id = g._in, g._id
            return
        if isinstance(re, float) or isinstance(im, float):
            raise TypeError("GaussianRational does not accept floats; use the float backend")
        re = _Fraction(re)
        im = _Fraction(im)
        self._rn = re.numerator
        self._rd = re.denominator
        self._in = im.numerator
        self._id = im.denominator

    @property
    def re(self):
        return _Fraction(self._rn, self._rd)

    @property
    def im(self):
        return _Fraction(self._in, self._id)

    @property
    def re_num(self):
        return self._rn

    @property
    def re_den(self):
        return self._rd

    @property
    def im_num(self):
        return self._in

    @property
    def im_den(self):
        return self._id

    def conjugate(self):
        cdef GaussianRational out = GaussianRational.__new__(GaussianRational)
        out._rn, out._rd = self._rn, self._rd
        out._in, out._id = -self._in, self._id
        return out

    def is_real(self):
        return self._in == 0

    def is_integer(self):
        return self._in == 0 and self._rd == 1

    def __bool__(self):
        return self._rn != 0 or self._in != 0

    def __add__(self, other):
        cdef GaussianRational o = _coerce(other)
        if o is None:
            return NotImplemented
        cdef GaussianRational s = <GaussianRational> self
        return _make(
            s._rn * o._rd + o._rn * s._rd, s._rd * o._rd,
            s._in * o._id + o._in * s._id, s._id * o._id,
        )

    def __radd__(self, other):
        return self.__add__(other)

    def __sub__(self, other):
        cdef GaussianRational o = _coerce(other)
        if o is None:
            return NotImplemented
        cdef GaussianRational s = <GaussianRational> self
        return _make(
            s._rn * o._rd - o._rn * s._rd, s._rd * o._rd,
            s._in * o._id - o._in * s._id, s._id * o._id,
        )

    def __rsub__(self, other):
        cdef GaussianRational o = _coerce(other)
        if o is None:
            return NotImplemented
        return o.__sub__(self)

    def __neg__(self):
        cdef GaussianRational out = GaussianRational.__new__(GaussianRational)
        out._rn, out._rd = -self._rn, self._rd
        out._in, out._id = -self._in, self._id
        return out

    def __mul__(self, other):
        cdef GaussianRational o = _coerce(other)
        if o is None:
            return NotImplemented
        cdef GaussianRational s = <GaussianRational> self
        # (a + bi)(c + di): re = ac - bd, im = ad + bc, over the common
        # denominator ad*cd*bd*dd.
        cdef object den = s._rd * o._rd * s._id * o._id
        return _make(
            s._rn * o._rn * s._id * o._id - s._in * o._in * s._rd * o._rd, den,
            s._rn * o._in * s._id * o._rd + s._in * o._rn * s._rd * o._id, den,
        )

    def __rmul__(self, other):
        return self.__mul__(other)

    def __truediv__(self, other):
        cdef GaussianRational o = _coerce(other)
        if o is None:
            return NotImplemented
        cdef GaussianRational s = <GaussianRational> self
        # w / z = w * conj(z) / |z|^2 with |z|^2 = nn/nd.
        cdef object nn = o._rn * o._rn * o._id * o._id + o._in * o._in * o._rd * o._rd
        if nn == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        cdef object nd = o._rd * o._rd * o._id * o._id
        cdef object den = s._rd * o._rd * s._id * o._id
        cdef object re_num = s._rn * o._rn * s._id * o._id + s._in * o._in * s._rd * o._rd
        cdef object im_num = s._in * o._rn * s._rd * o._id - s._rn * o._in * s._id * o._rd
        return _make(re_num * nd, den * nn, im_num * nd, den * nn)

    def __rtruediv__(self, other):
        cdef GaussianRational o = _coerce(other)
        if o is None:
            return NotImplemented
        return o.__truediv__(self)

    def __eq__(self, other):
        cdef GaussianRational o = _coerce(other)
        if o is None:
            return NotImplemented
        cdef GaussianRational s = <GaussianRational> self
        return s._rn == o._rn and s._rd == o._rd and s._in == o._in and s._id == o._id

    def __hash__(self):
        # parts are always reduced, so the raw tuple is a stable identity
        return hash((self._rn, self._rd, self._in, self._id))

    def __repr__(self):
        return f"GaussianRational({_Fraction(self._rn, self._rd)}, {_Fraction(self._in, self._id)})"
