"""Finite matrix groups built from generators by breadth-first closure."""

from __future__ import annotations

import re
from collections import deque
from typing import Sequence

from molien.errors import ClosureOverflowError, ValidationError
from molien.matrices import SquareMatrix
from molien.scalars import EXACT, ScalarBackend, check_same_backend

DEFAULT_MAX_ORDER = 10000


class FiniteMatrixGroup:
    """Closed list of unitary matrices; element 0 is the identity.

    Element order is the breadth-first discovery order of close_group and
    is part of the contract: float-backend averaging sums in this order.
    """

    __slots__ = ("n", "elements", "inverse_of", "generator_indices", "backend")

    def __init__(self, n, elements, inverse_of, generator_indices, backend):
        self.n = n
        self.elements = tuple(elements)
        self.inverse_of = tuple(inverse_of)
        self.generator_indices = tuple(generator_indices)
        self.backend = backend

    @property
    def order(self) -> int:
        return len(self.elements)

    def identity(self) -> SquareMatrix:
        return self.elements[0]

    def generators(self) -> list[SquareMatrix]:
        return [self.elements[i] for i in self.generator_indices]

    def inverse(self, index: int) -> SquareMatrix:
        return self.elements[self.inverse_of[index]]

    def __len__(self) -> int:
        return len(self.elements)

    def __repr__(self):
        return f"FiniteMatrixGroup(n={self.n}, order={self.order}, backend={self.backend!r})"


class _ElementIndex:
    """Identity lookup for discovered elements.

    Exact backend: plain dict on the entry tuples. Float backend: dict on
    entries quantised to a lattice of pitch tolerance, verified entrywise
    on hit; a rare quantisation-boundary miss falls back to a linear scan
    and the drifted key is then registered as an alias.
    """

    def __init__(self, backend: ScalarBackend):
        self.backend = backend
        self.table: dict = {}
        self.elements: list[SquareMatrix] = []

    def _key(self, matrix: SquareMatrix):
        if self.backend.is_exact:
            return matrix.rows
        pitch = self.backend.tolerance
        if pitch == 0:
            return matrix.rows
        return tuple(
            (round(x.real / pitch), round(x.imag / pitch))
            for row in matrix.rows
            for x in row
        )

    def find(self, matrix: SquareMatrix) -> int | None:
        key = self._key(matrix)
        hit = self.table.get(key)
        if hit is not None:
            if self.backend.is_exact or matrix.equals(self.elements[hit]):
                return hit
        if self.backend.is_exact:
            return None
        for i, known in enumerate(self.elements):
            if matrix.equals(known):
                if key not in self.table:
                    self.table[key] = i
                return i
        return None

    def add(self, matrix: SquareMatrix) -> int:
        index = len(self.elements)
        self.elements.append(matrix)
        self.table.setdefault(self._key(matrix), index)
        return index


def close_group(
    generators: Sequence[SquareMatrix], max_order: int = DEFAULT_MAX_ORDER
) -> FiniteMatrixGroup:
    """Close a generator list under multiplication, breadth-first from the identity.

    Generators are applied on the right in input order, which fixes the
    discovery order. Raises ValidationError for an empty list, mismatched
    or non-unitary generators, and ClosureOverflowError when the closure
    would exceed max_order elements.
    """
    if not generators:
        raise ValidationError("at least one generator is required")
    if max_order < 1:
        raise ValidationError("max_order must be positive")
    n = generators[0].n
    backend = generators[0].backend
    for pos, g in enumerate(generators):
        if g.n != n:
            raise ValidationError(f"generator {pos} has dimension {g.n}, expected {n}")
        check_same_backend(g.backend, backend)
        if not g.is_unitary():
            raise ValidationError(f"generator {pos} is not unitary")

    index = _ElementIndex(backend)
    identity = SquareMatrix.identity(n, backend)
    index.add(identity)
    queue = deque([0])
    while queue:
        current = index.elements[queue.popleft()]
        for g in generators:
            product = current @ g
            if index.find(product) is None:
                if len(index.elements) + 1 > max_order:
                    raise ClosureOverflowError(max_order)
                queue.append(index.add(product))

    elements = list(index.elements)
    order = len(elements)
    generator_indices = []
    for g in generators:
        found = index.find(g)
        assert found is not None
        generator_indices.append(found)

    inverse_of = [-1] * order
    for i in range(order):
        for j in range(order):
            if (elements[i] @ elements[j]).equals(identity):
                inverse_of[i] = j
                break
        else:
            raise ValidationError(f"element {i} has no inverse in the closure")

    return FiniteMatrixGroup(n, elements, inverse_of, generator_indices, backend)


def from_permutations(
    perms: Sequence[Sequence[int]], backend: ScalarBackend = EXACT
) -> list[SquareMatrix]:
    """Permutation matrices from one-line notation (p[i-1] = image of i, 1-based).

    Column i carries the unit vector e_{p(i)}, so these compose like the
    permutations themselves.
    """
    matrices = []
    for pos, perm in enumerate(perms):
        n = len(perm)
        if sorted(perm) != list(range(1, n + 1)):
            raise ValidationError(f"permutation {pos} is not a bijection on 1..{n}")
        rows = [[0] * n for _ in range(n)]
        for i, image in enumerate(perm):
            rows[image - 1][i] = 1
        matrices.append(SquareMatrix(rows, backend))
    return matrices


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def permutation_from_cycles(text: str, n: int | None = None) -> tuple[int, ...]:
    """Parse disjoint cycle notation like '(1 2)(3)' into one-line notation.

    Points are 1-based; n defaults to the largest point mentioned.
    Fixed points may be written as singleton cycles.
    """
    stripped = text.strip()
    if not stripped:
        raise ValidationError("empty cycle notation")
    matched = "".join(m.group(0) for m in _CYCLE_RE.finditer(stripped))
    if re.sub(r"\s", "", matched) != re.sub(r"\s", "", stripped):
        raise ValidationError(f"malformed cycle notation {text!r}")
    cycles = []
    for body in _CYCLE_RE.findall(stripped):
        points = []
        for token in re.split(r"[,\s]+", body.strip()):
            if not token:
                continue
            if not token.isdigit() or int(token) < 1:
                raise ValidationError(f"bad point {token!r} in cycle notation")
            points.append(int(token))
        if points:
            cycles.append(points)
    seen: set[int] = set()
    for cycle in cycles:
        for p in cycle:
            if p in seen:
                raise ValidationError(f"point {p} repeated in cycle notation")
            seen.add(p)
    size = max(seen) if seen else 0
    if n is not None:
        if size > n:
            raise ValidationError(f"cycle notation mentions point {size} beyond n={n}")
        size = n
    if size == 0:
        raise ValidationError("cycle notation names no points")
    image = list(range(1, size + 1))
    for cycle in cycles:
        for a, b in zip(cycle, cycle[1:] + cycle[:1]):
            image[a - 1] = b
    return tuple(image)
