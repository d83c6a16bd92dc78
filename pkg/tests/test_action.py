"""Induced matrices of the lifted action and their structural identities."""

from __future__ import annotations

import random

import pytest
import sympy as sp

import corpus
from molien import (
    EXACT,
    ShapeError,
    SquareMatrix,
    det_one_minus_lambda,
    induced_first,
    induced_matrix,
    monomial_basis,
    series_reciprocal,
)
from oracles import sympy_induced, to_sympy

ROTATION = SquareMatrix(corpus.ROTATION, EXACT)
DIAG_I = SquareMatrix([["i", "0"], ["0", "-i"]], EXACT)


class TestInducedFirst:
    def test_real_matrix_is_fixed(self):
        assert induced_first(ROTATION) == ROTATION

    def test_diagonal_conjugates(self):
        assert induced_first(DIAG_I) == SquareMatrix([["-i", "0"], ["0", "i"]], EXACT)

    def test_induced_first_is_unitary(self):
        for matrix in (ROTATION, DIAG_I):
            first = induced_first(matrix)
            assert (first.conj_transpose() @ first).equals(
                SquareMatrix.identity(2, EXACT)
            )


class TestInducedMatrix:
    def test_minus_identity_squares_away(self):
        minus = SquareMatrix([[-1, 0], [0, -1]], EXACT)
        assert induced_matrix(minus, monomial_basis(2, 2)) == SquareMatrix.identity(3, EXACT)

    def test_swap_permutes_basis(self):
        swap = SquareMatrix([[0, 1], [1, 0]], EXACT)
        expected = SquareMatrix([[0, 0, 1], [0, 1, 0], [1, 0, 0]], EXACT)
        assert induced_matrix(swap, monomial_basis(2, 2)) == expected

    def test_rotation_degree_two(self):
        # hand expansion: x1^2 -> x2^2, x1*x2 -> -x1*x2, x2^2 -> x1^2
        induced = induced_matrix(ROTATION, monomial_basis(2, 2))
        assert induced == SquareMatrix([[0, 0, 1], [0, -1, 0], [1, 0, 0]], EXACT)
        trace = induced.trace()
        # cross-check against [lambda^2] of 1/(1 + lambda^2) = -1
        series = series_reciprocal(det_one_minus_lambda(ROTATION), 2)
        assert trace == series.coeffs[2] == EXACT.coerce(-1)

    def test_degree_zero_is_one_by_one_identity(self):
        induced = induced_matrix(DIAG_I, monomial_basis(2, 0))
        assert induced == SquareMatrix.identity(1, EXACT)

    def test_dimension_mismatch(self):
        with pytest.raises(ShapeError):
            induced_matrix(ROTATION, monomial_basis(3, 2))

    @pytest.mark.parametrize("d", [1, 2, 3])
    def test_against_sympy_expansion(self, d):
        group = corpus.q8()
        basis = monomial_basis(2, d)
        for element in group.elements:
            ours = to_sympy(induced_matrix(element, basis))
            theirs = sympy_induced(to_sympy(element), list(basis.monomials), 2)
            assert sp.simplify(ours - theirs) == sp.zeros(len(basis), len(basis))


class TestActionLaws:
    @pytest.mark.parametrize("build", [corpus.s3, corpus.q8, corpus.d4])
    def test_homomorphism(self, build):
        group = build()
        rng = random.Random(13)
        pairs = [
            (rng.randrange(group.order), rng.randrange(group.order)) for _ in range(6)
        ]
        for d in (1, 2, 3):
            basis = monomial_basis(group.n, d)
            for i, j in pairs:
                h, g = group.elements[i], group.elements[j]
                product_induced = induced_matrix(h @ g, basis)
                assert product_induced == induced_matrix(h, basis) @ induced_matrix(g, basis)

    @pytest.mark.parametrize("build", [corpus.s3, corpus.q8, corpus.c4])
    def test_inverse_law(self, build):
        group = build()
        for d in (1, 2, 3):
            basis = monomial_basis(group.n, d)
            identity = SquareMatrix.identity(len(basis), EXACT)
            for i in range(group.order):
                forward = induced_matrix(group.elements[i], basis)
                backward = induced_matrix(group.inverse(i), basis)
                assert backward @ forward == identity

    def test_inverse_equals_conj_transpose_at_degree_one(self, corpus):
        for group in corpus.values():
            for i in range(group.order):
                first = induced_first(group.elements[i])
                assert induced_first(group.inverse(i)) == first.conj_transpose()

    def test_unitarity_at_degree_one(self, corpus):
        for group in corpus.values():
            identity = SquareMatrix.identity(group.n, EXACT)
            for element in group.elements:
                first = induced_first(element)
                assert first.conj_transpose() @ first == identity

    def test_spectral_reciprocity_of_traces(self, corpus):
        for group in corpus.values():
            for i in range(group.order):
                trace = induced_first(group.elements[i]).trace()
                inverse_trace = induced_first(group.inverse(i)).trace()
                assert inverse_trace == trace.conjugate()

    @pytest.mark.parametrize("build", [corpus.c4, corpus.q8, corpus.s3])
    def test_trace_identity_small(self, build):
        # Tr(A_g^[d]) = [lambda^d] 1/det(id - lambda A_g^[1]), d <= 6
        group = build()
        for element in group.elements:
            expansion = series_reciprocal(
                det_one_minus_lambda(induced_first(element)), 6
            )
            for d in range(7):
                induced = induced_matrix(element, monomial_basis(group.n, d))
                assert induced.trace() == expansion.coeffs[d]
