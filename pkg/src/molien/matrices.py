"""Dense square matrices over a scalar backend, and univariate polynomials.

Everything here is a pure function over immutable values. Matrices are
small (dimension at most a few hundred), so the algorithms favour
exactness over asymptotics: characteristic coefficients come from traces
of powers via Newton's identities, rank from Gauss-Jordan elimination.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from molien.errors import ShapeError
from molien.scalars import ScalarBackend, check_same_backend


class SquareMatrix:
    """Immutable n-by-n matrix; entry (k, i) is row k, column i."""

    __slots__ = ("n", "rows", "backend")

    def __init__(self, rows: Sequence[Sequence], backend: ScalarBackend):
        coerced = tuple(tuple(backend.coerce(x) for x in row) for row in rows)
        n = len(coerced)
        if n == 0:
            raise ShapeError("matrix must have at least one row")
        if any(len(row) != n for row in coerced):
            raise ShapeError("matrix must be square")
        self.n = n
        self.rows = coerced
        self.backend = backend

    @classmethod
    def identity(cls, n: int, backend: ScalarBackend) -> "SquareMatrix":
        one, zero = backend.one, backend.zero
        return cls([[one if i == j else zero for j in range(n)] for i in range(n)], backend)

    @classmethod
    def zero(cls, n: int, backend: ScalarBackend) -> "SquareMatrix":
        zero = backend.zero
        return cls([[zero] * n for _ in range(n)], backend)

    def _check_compatible(self, other: "SquareMatrix") -> None:
        if self.n != other.n:
            raise ShapeError(f"dimension mismatch: {self.n} vs {other.n}")
        check_same_backend(self.backend, other.backend)

    def __matmul__(self, other: "SquareMatrix") -> "SquareMatrix":
        self._check_compatible(other)
        n = self.n
        cols = tuple(zip(*other.rows))
        rows = [
            [_dot(row, col) for col in cols]
            for row in self.rows
        ]
        return SquareMatrix(rows, self.backend)

    def __add__(self, other: "SquareMatrix") -> "SquareMatrix":
        self._check_compatible(other)
        rows = [
            [a + b for a, b in zip(ra, rb)]
            for ra, rb in zip(self.rows, other.rows)
        ]
        return SquareMatrix(rows, self.backend)

    def scale(self, factor) -> "SquareMatrix":
        c = self.backend.coerce(factor)
        return SquareMatrix([[c * x for x in row] for row in self.rows], self.backend)

    def conj_transpose(self) -> "SquareMatrix":
        conj = self.backend.conj
        return SquareMatrix(
            [[conj(self.rows[j][i]) for j in range(self.n)] for i in range(self.n)],
            self.backend,
        )

    def entrywise_conj(self) -> "SquareMatrix":
        conj = self.backend.conj
        return SquareMatrix([[conj(x) for x in row] for row in self.rows], self.backend)

    def trace(self):
        t = self.backend.zero
        for i in range(self.n):
            t = t + self.rows[i][i]
        return t

    def is_unitary(self) -> bool:
        product = self.conj_transpose() @ self
        return product.equals(SquareMatrix.identity(self.n, self.backend))

    def equals(self, other: "SquareMatrix") -> bool:
        """Entrywise equality: exact, or within the backend tolerance."""
        if self.n != other.n or self.backend != other.backend:
            return False
        eq = self.backend.eq
        return all(
            eq(a, b)
            for ra, rb in zip(self.rows, other.rows)
            for a, b in zip(ra, rb)
        )

    def __eq__(self, other):
        if not isinstance(other, SquareMatrix):
            return NotImplemented
        return self.n == other.n and self.backend == other.backend and self.rows == other.rows

    def __hash__(self):
        return hash((self.backend, self.rows))

    def __repr__(self):
        return f"SquareMatrix({[list(row) for row in self.rows]!r})"


def _dot(row, col):
    it = iter(zip(row, col))
    a, b = next(it)
    acc = a * b
    for a, b in it:
        acc = acc + a * b
    return acc


def mat_mul(a: SquareMatrix, b: SquareMatrix) -> SquareMatrix:
    return a @ b


def conj_transpose(a: SquareMatrix) -> SquareMatrix:
    return a.conj_transpose()


def is_unitary(a: SquareMatrix) -> bool:
    return a.is_unitary()


class UnivariatePoly:
    """Polynomial in one variable; coeffs[k] is the coefficient of lambda^k."""

    __slots__ = ("coeffs", "backend")

    def __init__(self, coeffs: Sequence, backend: ScalarBackend):
        cs = [backend.coerce(c) for c in coeffs]
        while cs and backend.is_zero(cs[-1]):
            cs.pop()
        self.coeffs = tuple(cs)
        self.backend = backend

    @classmethod
    def one(cls, backend: ScalarBackend) -> "UnivariatePoly":
        return cls([backend.one], backend)

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial at -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, k: int):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return self.backend.zero

    def __add__(self, other: "UnivariatePoly") -> "UnivariatePoly":
        check_same_backend(self.backend, other.backend)
        m = max(len(self.coeffs), len(other.coeffs))
        return UnivariatePoly(
            [self.coefficient(k) + other.coefficient(k) for k in range(m)], self.backend
        )

    def __sub__(self, other: "UnivariatePoly") -> "UnivariatePoly":
        check_same_backend(self.backend, other.backend)
        m = max(len(self.coeffs), len(other.coeffs))
        return UnivariatePoly(
            [self.coefficient(k) - other.coefficient(k) for k in range(m)], self.backend
        )

    def __mul__(self, other: "UnivariatePoly") -> "UnivariatePoly":
        check_same_backend(self.backend, other.backend)
        if self.is_zero() or other.is_zero():
            return UnivariatePoly([], self.backend)
        out = [self.backend.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return UnivariatePoly(out, self.backend)

    def scale(self, factor) -> "UnivariatePoly":
        c = self.backend.coerce(factor)
        return UnivariatePoly([c * x for x in self.coeffs], self.backend)

    def __eq__(self, other):
        if not isinstance(other, UnivariatePoly):
            return NotImplemented
        return self.backend == other.backend and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.backend, self.coeffs))

    def __repr__(self):
        return f"UnivariatePoly({list(self.coeffs)!r})"


def poly_divmod(a: UnivariatePoly, b: UnivariatePoly) -> tuple[UnivariatePoly, UnivariatePoly]:
    """Euclidean division over the scalar field; b must be nonzero."""
    check_same_backend(a.backend, b.backend)
    if b.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    backend = a.backend
    rem = list(a.coeffs)
    quot = [backend.zero] * max(len(rem) - len(b.coeffs) + 1, 0)
    lead = b.coeffs[-1]
    db = b.degree
    for k in range(len(rem) - 1, db - 1, -1):
        if backend.is_zero(rem[k]):
            continue
        factor = rem[k] / lead
        quot[k - db] = factor
        for j in range(db + 1):
            rem[k - db + j] = rem[k - db + j] - factor * b.coeffs[j]
    return UnivariatePoly(quot, backend), UnivariatePoly(rem, backend)


def poly_gcd(a: UnivariatePoly, b: UnivariatePoly) -> UnivariatePoly:
    """Monic greatest common divisor via the Euclidean algorithm."""
    check_same_backend(a.backend, b.backend)
    while not b.is_zero():
        _, r = poly_divmod(a, b)
        a, b = b, r
    if a.is_zero():
        return a
    return a.scale(a.backend.one / a.coeffs[-1])


def det_one_minus_lambda(a: SquareMatrix) -> UnivariatePoly:
    """Characteristic-style polynomial det(id - lambda*A) of degree <= n.

    Built from power traces p_k = Tr(A^k) through Newton's identities
    e_k = (1/k) * sum_{j=1..k} (-1)^(j-1) e_{k-j} p_j; the coefficient of
    lambda^k is (-1)^k e_k, and the constant term is always 1.
    """
    backend = a.backend
    n = a.n
    traces = []
    power = a
    for _ in range(n):
        traces.append(power.trace())
        power = power @ a
    e = [backend.one]
    for k in range(1, n + 1):
        acc = backend.zero
        sign = 1
        for j in range(1, k + 1):
            term = e[k - j] * traces[j - 1]
            acc = acc + (term if sign > 0 else -term)
            sign = -sign
        e.append(acc * backend.coerce(Fraction(1, k)))
    coeffs = [e[k] if k % 2 == 0 else -e[k] for k in range(n + 1)]
    return UnivariatePoly(coeffs, backend)


def row_reduce(rows: Sequence[Sequence], backend: ScalarBackend) -> tuple[int, list[list]]:
    """Gauss-Jordan elimination; returns (rank, echelon rows).

    Pivots are normalised to 1 and cleared above and below. The exact
    backend takes the first nonzero entry of a column as pivot; the float
    backend takes the largest-magnitude entry and treats anything at or
    below the tolerance as zero.
    """
    work = [[backend.coerce(x) for x in row] for row in rows]
    if not work:
        return 0, []
    width = len(work[0])
    if any(len(row) != width for row in work):
        raise ShapeError("rows must all have the same length")
    n_rows = len(work)
    pivot_row = 0
    for col in range(width):
        if pivot_row >= n_rows:
            break
        pick = None
        if backend.is_exact:
            for r in range(pivot_row, n_rows):
                if not backend.is_zero(work[r][col]):
                    pick = r
                    break
        else:
            best = backend.tolerance
            for r in range(pivot_row, n_rows):
                mag = abs(work[r][col])
                if mag > best:
                    best = mag
                    pick = r
        if pick is None:
            continue
        work[pivot_row], work[pick] = work[pick], work[pivot_row]
        pivot = work[pivot_row][col]
        work[pivot_row] = [x / pivot for x in work[pivot_row]]
        for r in range(n_rows):
            if r == pivot_row:
                continue
            factor = work[r][col]
            if backend.is_zero(factor):
                continue
            work[r] = [x - factor * y for x, y in zip(work[r], work[pivot_row])]
        pivot_row += 1
    rank = pivot_row
    return rank, work


def row_reduce_rank(rows: Sequence[Sequence], backend: ScalarBackend) -> int:
    return row_reduce(rows, backend)[0]
