"""Nilpotent matrices from line diagrams and their exact invariants.

Ranks are computed over the rationals by sparse integer elimination, so
Jordan partitions and centralizer dimensions are exact.  The sign rules
for realizing a diagram inside sp/so match the matrix forms fixed in
:mod:`richline.algebra`: a line i--j contributes -E_ij when i > n in the
symplectic case, and when i + j > N in the orthogonal case (positions with
i + j = N keep the + sign; i + j = N + 1 is impossible for a line of a
valid orthogonal diagram).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence

from .algebra import (
    AlgebraKind,
    ExactMatrix,
    ParabolicSpec,
    SpecError,
    algebra_basis,
    algebra_dimension,
    in_nilradical,
    is_member,
)
from .diagram import LineDiagram


class NotNilpotent(SpecError):
    pass


class NotInAlgebra(SpecError):
    pass


class ColumnMismatch(SpecError):
    pass


class NonIntegerResult(SpecError):
    pass


@dataclass(frozen=True)
class Partition:
    """A weakly decreasing sequence of positive integers."""

    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        parts = tuple(sorted((int(p) for p in self.parts), reverse=True))
        if any(p < 1 for p in parts):
            raise SpecError(f"partition parts must be positive, got {self.parts}")
        object.__setattr__(self, "parts", parts)

    def __iter__(self):
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    @property
    def total(self) -> int:
        return sum(self.parts)

    def count_odd(self) -> int:
        return sum(1 for p in self.parts if p % 2)

    def to_json_obj(self) -> list[int]:
        return list(self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"


def dual_partition(partition: Partition) -> Partition:
    """Conjugate partition: column lengths of the Young diagram."""
    parts = partition.parts
    if not parts:
        return Partition(())
    return Partition(tuple(sum(1 for p in parts if p >= j)
                           for j in range(1, parts[0] + 1)))


def realize(diagram: LineDiagram, spec: ParabolicSpec) -> ExactMatrix:
    """The signed sum of elementary matrices over the lines of the diagram."""
    if tuple(diagram.columns) != tuple(spec.blocks):
        raise ColumnMismatch(
            f"diagram columns {diagram.columns} != spec blocks {spec.blocks}")
    n = spec.kind.size
    half = n // 2
    entries: dict[tuple[int, int], int] = {}
    for i, j in sorted(diagram.edges):
        if spec.kind.is_linear:
            sign = 1
        elif spec.kind.is_symplectic:
            sign = 1 if i <= half else -1
        else:
            if i + j == n + 1:
                raise NotInAlgebra(
                    f"line {i}-{j} is self-paired and vanishes in {spec.kind.name}")
            sign = 1 if i + j <= n else -1
        entries[(i, j)] = sign
    matrix = ExactMatrix(n, n, entries)
    if not is_member(spec.kind, matrix):
        raise NotInAlgebra(f"edge set is not closed under counterparts for {spec.kind.name}")
    if not in_nilradical(spec, matrix):
        raise NotInAlgebra(f"realized matrix is not in the nilradical of {spec}")
    return matrix


def _reduce_row(row: dict[int, int]) -> dict[int, int]:
    g = 0
    for v in row.values():
        g = gcd(g, v)
    if g > 1:
        row = {c: v // g for c, v in row.items()}
    return row


def rank_of_rows(rows: Iterable[dict[int, int]]) -> int:
    """Rank over the rationals of sparse integer rows, by exact elimination."""
    pivots: dict[int, dict[int, int]] = {}
    rank = 0
    for row in rows:
        row = {c: v for c, v in row.items() if v}
        while row:
            c = min(row)
            pivot = pivots.get(c)
            if pivot is None:
                pivots[c] = _reduce_row(row)
                rank += 1
                break
            a, b = row[c], pivot[c]
            new: dict[int, int] = {}
            for col in set(row) | set(pivot):
                v = row.get(col, 0) * b - pivot.get(col, 0) * a
                if v:
                    new[col] = v
            row = _reduce_row(new)
    return rank


def rank_exact(matrix: ExactMatrix) -> int:
    """Exact rank of an integer matrix."""
    return rank_of_rows(matrix.rows().values())


def jordan_partition(matrix: ExactMatrix) -> Partition:
    """Jordan block sizes of a nilpotent matrix, from kernels of its powers.

    With b_j the kernel dimension of the j-th power, the number of blocks
    of size j is 2*b_j - b_{j-1} - b_{j+1} (b_0 = 0, and b stabilizes at
    the matrix size once the power vanishes).
    """
    if not matrix.is_square:
        raise NotNilpotent("only square matrices can be nilpotent")
    n = matrix.n_rows
    kernels = [0]
    power = matrix
    step = 0
    while not power.is_zero:
        step += 1
        if step > n:
            raise NotNilpotent("matrix is not nilpotent")
        kernels.append(n - rank_exact(power))
        power = power * matrix
    kernels.append(n)
    m = len(kernels) - 1  # nilpotency degree
    parts: list[int] = []
    for j in range(1, m + 1):
        upper = kernels[j + 1] if j + 1 <= m else kernels[m]
        count = 2 * kernels[j] - kernels[j - 1] - upper
        parts.extend([j] * count)
    result = Partition(tuple(parts))
    if result.total != n:
        raise AssertionError("jordan partition does not sum to the matrix size")
    return result


def centralizer_dimension_formula(partition: Partition, kind: AlgebraKind,
                                  *, gl: bool = False) -> int:
    """Centralizer dimension of a nilpotent element from its partition.

    Uses the dual partition (m_1, ..., m_s): sum of m_i^2 for gl (minus one
    for sl), half of it corrected by half the number of odd parts for sp
    (plus) and so (minus).
    """
    dual = dual_partition(partition)
    square_sum = sum(m * m for m in dual)
    if kind.is_linear:
        return square_sum if gl else square_sum - 1
    twice = square_sum + partition.count_odd() * (1 if kind.is_symplectic else -1)
    if twice % 2:
        raise NonIntegerResult(
            f"partition {partition} is not the partition of a {kind.name} element")
    return twice // 2


def _vectorize(matrix: ExactMatrix) -> dict[int, int]:
    n = matrix.n_cols
    return {(i - 1) * n + (j - 1): v for (i, j), v in matrix.entries.items()}


def adjoint_rows(matrix: ExactMatrix, basis: Sequence[ExactMatrix]) -> list[dict[int, int]]:
    """Vectorized brackets [matrix, B] for B running through the basis."""
    return [_vectorize(matrix.commutator(b)) for b in basis]


def centralizer_dimension_direct(matrix: ExactMatrix, kind: AlgebraKind) -> int:
    """Dimension of the kernel of ad(matrix) on the algebra, computed exactly."""
    if not is_member(kind, matrix):
        raise NotInAlgebra(f"matrix is not a member of {kind.name}")
    basis = algebra_basis(kind)
    rank = rank_of_rows(adjoint_rows(matrix, basis))
    return algebra_dimension(kind) - rank
