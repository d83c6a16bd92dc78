"""The lifted group action on polynomials: induced matrices per degree.

A group element acting on variables by the unitary matrix A sends the
linear form x_i to sum_k conj(A[k][i]) x_k, so the first induced matrix
is the entrywise conjugate of A. The degree-d induced matrix is built by
expanding the images of the degree-d basis monomials with the polynomial
ring operations and writing their coordinates into columns.
"""

from __future__ import annotations

from molien.errors import ShapeError
from molien.matrices import SquareMatrix
from molien.polynomials import MonomialBasis, SparsePolynomial, substitute_linear


def induced_first(a: SquareMatrix) -> SquareMatrix:
    """First induced matrix: the entrywise conjugate of the representing matrix."""
    return a.entrywise_conj()


def induced_matrix(a: SquareMatrix, basis: MonomialBasis) -> SquareMatrix:
    """Matrix of the lifted action of a on the monomial basis of one degree.

    Column j holds the coordinates of the image of the j-th basis
    monomial. Assumes a is unitary (group elements always are).
    """
    if a.n != basis.n:
        raise ShapeError(f"matrix dimension {a.n} does not match basis over {basis.n} variables")
    first = induced_first(a)
    columns = []
    for mono in basis.monomials:
        image = substitute_linear(
            SparsePolynomial.from_monomial(basis.n, mono, a.backend), first
        )
        columns.append(image.coefficient_vector(basis))
    rows = [list(row) for row in zip(*columns)]
    return SquareMatrix(rows, a.backend)
