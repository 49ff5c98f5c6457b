"""Matrix models of the classical Lie algebras and their standard parabolics.

All indices are 1-based.  The orthogonal algebra so_N is taken in the form
with ones on the antidiagonal, so membership means skew-symmetry around the
antidiagonal.  The symplectic algebra sp_2n uses the block form
[[0, J_n], [-J_n, 0]].  With these conventions a standard parabolic is the
set of block upper triangular members for a vector of diagonal block sizes,
and that vector is palindromic in the symplectic and orthogonal cases.
"""

from __future__ import annotations

import itertools
from bisect import bisect_left
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Mapping, Sequence

SPECIAL_LINEAR = "sl"
SYMPLECTIC = "sp"
ORTHOGONAL_EVEN = "so-even"
ORTHOGONAL_ODD = "so-odd"

_FAMILIES = (SPECIAL_LINEAR, SYMPLECTIC, ORTHOGONAL_EVEN, ORTHOGONAL_ODD)


class SpecError(ValueError):
    """An algebra or parabolic description violates its invariants."""


class SumMismatch(SpecError):
    pass


class NotPalindromic(SpecError):
    pass


class NonPositiveBlock(SpecError):
    pass


class ShapeMismatch(SpecError):
    pass


@dataclass(frozen=True)
class AlgebraKind:
    """A classical Lie algebra: family plus matrix size N."""

    family: str
    size: int

    def __post_init__(self) -> None:
        if self.family not in _FAMILIES:
            raise SpecError(f"unknown family {self.family!r}")
        if self.size < 1:
            raise SpecError("matrix size must be positive")
        if self.family in (SYMPLECTIC, ORTHOGONAL_EVEN) and self.size % 2:
            raise SpecError(f"{self.family} needs even size, got {self.size}")
        if self.family == ORTHOGONAL_ODD and self.size % 2 == 0:
            raise SpecError(f"{self.family} needs odd size, got {self.size}")

    @property
    def is_linear(self) -> bool:
        return self.family == SPECIAL_LINEAR

    @property
    def is_symplectic(self) -> bool:
        return self.family == SYMPLECTIC

    @property
    def is_orthogonal(self) -> bool:
        return self.family in (ORTHOGONAL_EVEN, ORTHOGONAL_ODD)

    @property
    def name(self) -> str:
        token = "so" if self.is_orthogonal else self.family
        return f"{token}{self.size}"

    def __str__(self) -> str:
        return self.name


def sl(n: int) -> AlgebraKind:
    return AlgebraKind(SPECIAL_LINEAR, n)


def sp(n: int) -> AlgebraKind:
    return AlgebraKind(SYMPLECTIC, n)


def so(n: int) -> AlgebraKind:
    family = ORTHOGONAL_ODD if n % 2 else ORTHOGONAL_EVEN
    return AlgebraKind(family, n)


class ExactMatrix:
    """Immutable sparse matrix with exact integer entries.

    Entries are stored keyed by 1-based (row, col) and zero entries are
    never stored, so two matrices are equal iff their entry dicts agree.
    """

    __slots__ = ("n_rows", "n_cols", "entries")

    def __init__(self, n_rows: int, n_cols: int,
                 entries: Mapping[tuple[int, int], int] | None = None):
        if n_rows < 1 or n_cols < 1:
            raise ShapeMismatch("matrix dimensions must be positive")
        store: dict[tuple[int, int], int] = {}
        for (i, j), v in (entries or {}).items():
            if not (1 <= i <= n_rows and 1 <= j <= n_cols):
                raise ShapeMismatch(f"entry ({i},{j}) outside {n_rows}x{n_cols}")
            v = int(v)
            if v:
                store[(i, j)] = v
        object.__setattr__(self, "n_rows", n_rows)
        object.__setattr__(self, "n_cols", n_cols)
        object.__setattr__(self, "entries", store)

    def __setattr__(self, name, value):
        raise AttributeError("ExactMatrix is immutable")

    @classmethod
    def zero(cls, n: int) -> "ExactMatrix":
        return cls(n, n)

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls(n, n, {(i, i): 1 for i in range(1, n + 1)})

    @classmethod
    def from_items(cls, n: int, items: Iterable[tuple[int, int, int]]) -> "ExactMatrix":
        acc: dict[tuple[int, int], int] = {}
        for i, j, v in items:
            acc[(i, j)] = acc.get((i, j), 0) + v
        return cls(n, n, acc)

    def get(self, i: int, j: int) -> int:
        return self.entries.get((i, j), 0)

    @property
    def is_zero(self) -> bool:
        return not self.entries

    @property
    def is_square(self) -> bool:
        return self.n_rows == self.n_cols

    def trace(self) -> int:
        return sum(v for (i, j), v in self.entries.items() if i == j)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return (self.n_rows == other.n_rows and self.n_cols == other.n_cols
                and self.entries == other.entries)

    def __hash__(self):
        return hash((self.n_rows, self.n_cols, frozenset(self.entries.items())))

    def __repr__(self) -> str:
        items = sorted(self.entries.items())
        return f"ExactMatrix({self.n_rows}x{self.n_cols}, {items})"

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        if (self.n_rows, self.n_cols) != (other.n_rows, other.n_cols):
            raise ShapeMismatch("addition needs equal shapes")
        acc = dict(self.entries)
        for pos, v in other.entries.items():
            acc[pos] = acc.get(pos, 0) + v
        return ExactMatrix(self.n_rows, self.n_cols, acc)

    def __neg__(self) -> "ExactMatrix":
        return ExactMatrix(self.n_rows, self.n_cols,
                           {pos: -v for pos, v in self.entries.items()})

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        return self + (-other)

    def scaled(self, c: int) -> "ExactMatrix":
        return ExactMatrix(self.n_rows, self.n_cols,
                           {pos: c * v for pos, v in self.entries.items()})

    def __mul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.n_cols != other.n_rows:
            raise ShapeMismatch("inner dimensions do not match")
        by_row: dict[int, list[tuple[int, int]]] = {}
        for (k, j), v in other.entries.items():
            by_row.setdefault(k, []).append((j, v))
        acc: dict[tuple[int, int], int] = {}
        for (i, k), a in self.entries.items():
            for j, b in by_row.get(k, ()):
                acc[(i, j)] = acc.get((i, j), 0) + a * b
        return ExactMatrix(self.n_rows, other.n_cols, acc)

    def power(self, k: int) -> "ExactMatrix":
        if not self.is_square:
            raise ShapeMismatch("powers need a square matrix")
        if k < 0:
            raise ValueError("negative power")
        result = ExactMatrix.identity(self.n_rows)
        for _ in range(k):
            result = result * self
        return result

    def commutator(self, other: "ExactMatrix") -> "ExactMatrix":
        return self * other - other * self

    def rows(self) -> dict[int, dict[int, int]]:
        out: dict[int, dict[int, int]] = {}
        for (i, j), v in self.entries.items():
            out.setdefault(i, {})[j] = v
        return out

    def to_json_obj(self) -> dict:
        entries = [[i, j, v] for (i, j), v in sorted(self.entries.items())]
        return {"rows": self.n_rows, "cols": self.n_cols, "entries": entries}

    @classmethod
    def from_json_obj(cls, obj: Mapping) -> "ExactMatrix":
        try:
            n_rows, n_cols = int(obj["rows"]), int(obj["cols"])
            entries = {(int(i), int(j)): int(v) for i, j, v in obj["entries"]}
        except (KeyError, TypeError, ValueError) as exc:
            raise ShapeMismatch(f"malformed matrix object: {exc}") from None
        return cls(n_rows, n_cols, entries)


def elementary(n: int, i: int, j: int, value: int = 1) -> ExactMatrix:
    """The n x n matrix with a single entry at (i, j)."""
    return ExactMatrix(n, n, {(i, j): value})


@dataclass(frozen=True)
class ParabolicSpec:
    """A standard parabolic subalgebra: algebra kind plus block sizes."""

    kind: AlgebraKind
    blocks: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "blocks", tuple(int(b) for b in self.blocks))
        if not self.blocks or any(b < 1 for b in self.blocks):
            raise NonPositiveBlock(f"blocks must be positive, got {self.blocks}")
        if sum(self.blocks) != self.kind.size:
            raise SumMismatch(
                f"blocks {self.blocks} sum to {sum(self.blocks)}, expected {self.kind.size}")
        if not self.kind.is_linear and self.blocks != self.blocks[::-1]:
            raise NotPalindromic(
                f"{self.kind.name} blocks must be palindromic, got {self.blocks}")

    @cached_property
    def boundaries(self) -> tuple[int, ...]:
        acc, out = 0, []
        for b in self.blocks:
            acc += b
            out.append(acc)
        return tuple(out)

    def block_of(self, index: int) -> int:
        """1-based block number containing the 1-based matrix index."""
        if not 1 <= index <= self.kind.size:
            raise ShapeMismatch(f"index {index} outside 1..{self.kind.size}")
        return bisect_left(self.boundaries, index) + 1

    @property
    def n_blocks(self) -> int:
        return len(self.blocks)

    @property
    def is_type_a(self) -> bool:
        return not self.kind.is_linear and self.n_blocks % 2 == 0

    @property
    def is_type_b(self) -> bool:
        return not self.kind.is_linear and self.n_blocks % 2 == 1

    @property
    def half(self) -> tuple[int, ...]:
        """The first r blocks of a palindromic vector."""
        return self.blocks[: self.n_blocks // 2]

    @property
    def middle(self) -> int | None:
        """The central block of a type (b) vector, else None."""
        if self.kind.is_linear or self.n_blocks % 2 == 0:
            return None
        return self.blocks[self.n_blocks // 2]

    def __str__(self) -> str:
        return f"{self.kind.name}({','.join(map(str, self.blocks))})"


def validate_spec(kind: AlgebraKind, blocks: Sequence[int]) -> ParabolicSpec:
    """Validate a block vector against the algebra and return the spec."""
    return ParabolicSpec(kind, tuple(blocks))


def algebra_dimension(kind: AlgebraKind) -> int:
    n = kind.size
    if kind.is_linear:
        return n * n - 1
    if kind.is_symplectic:
        return n * (n + 1) // 2
    return n * (n - 1) // 2


def levi_dimension(spec: ParabolicSpec) -> int:
    """Dimension of the standard Levi factor of the parabolic."""
    if spec.kind.is_linear:
        return sum(b * b for b in spec.blocks) - 1
    base = sum(b * b for b in spec.half)
    mid = spec.middle
    if mid is None:
        return base
    if spec.kind.is_symplectic:
        return base + mid * (mid + 1) // 2
    return base + mid * (mid - 1) // 2


def nilradical_dimension(spec: ParabolicSpec) -> int:
    diff = algebra_dimension(spec.kind) - levi_dimension(spec)
    if diff % 2:
        raise AssertionError(f"parity failure for {spec}: dim g - dim m = {diff}")
    return diff // 2


def is_member(kind: AlgebraKind, matrix: ExactMatrix) -> bool:
    """Does the matrix satisfy the defining linear conditions of the algebra?"""
    n = kind.size
    if matrix.n_rows != n or matrix.n_cols != n:
        raise ShapeMismatch(f"expected {n}x{n}, got {matrix.n_rows}x{matrix.n_cols}")
    if kind.is_linear:
        return matrix.trace() == 0
    half = n // 2
    positions = set(matrix.entries)
    positions |= {(n + 1 - j, n + 1 - i) for (i, j) in positions}
    for i, j in positions:
        mirror = matrix.get(n + 1 - j, n + 1 - i)
        if kind.is_orthogonal:
            if matrix.get(i, j) != -mirror:
                return False
        else:
            sigma = 1 if (i <= half) == (j <= half) else -1
            if matrix.get(i, j) != -sigma * mirror:
                return False
    return True


def in_nilradical(spec: ParabolicSpec, matrix: ExactMatrix) -> bool:
    """Member of the algebra supported strictly above the block diagonal."""
    if not is_member(spec.kind, matrix):
        return False
    return all(spec.block_of(i) < spec.block_of(j) for (i, j) in matrix.entries)


def in_parabolic(spec: ParabolicSpec, matrix: ExactMatrix) -> bool:
    if not is_member(spec.kind, matrix):
        return False
    return all(spec.block_of(i) <= spec.block_of(j) for (i, j) in matrix.entries)


def grade_of_entry(spec: ParabolicSpec, i: int, j: int) -> int:
    """Graded part of position (i, j) in the block grading of the parabolic."""
    return spec.block_of(j) - spec.block_of(i)


@lru_cache(maxsize=None)
def algebra_basis(kind: AlgebraKind) -> tuple[ExactMatrix, ...]:
    """A deterministic integer basis of the algebra.

    Each basis element is supported on a single mirror orbit of positions,
    so filtering by block positions yields bases of any standard parabolic
    and of its nilradical.
    """
    n = kind.size
    out: list[ExactMatrix] = []
    if kind.is_linear:
        for i, j in itertools.product(range(1, n + 1), repeat=2):
            if i != j:
                out.append(elementary(n, i, j))
        for i in range(1, n):
            out.append(ExactMatrix(n, n, {(i, i): 1, (i + 1, i + 1): -1}))
        return tuple(out)
    half = n // 2
    for i, j in itertools.product(range(1, n + 1), repeat=2):
        mi, mj = n + 1 - j, n + 1 - i
        if (i, j) == (mi, mj):
            if kind.is_symplectic:
                out.append(elementary(n, i, j))
            continue
        if (i, j) > (mi, mj):
            continue
        if kind.is_orthogonal:
            out.append(ExactMatrix(n, n, {(i, j): 1, (mi, mj): -1}))
        else:
            sigma = 1 if (i <= half) == (j <= half) else -1
            out.append(ExactMatrix(n, n, {(i, j): 1, (mi, mj): -sigma}))
    return tuple(out)


def parabolic_basis(spec: ParabolicSpec) -> tuple[ExactMatrix, ...]:
    return tuple(b for b in algebra_basis(spec.kind) if in_parabolic(spec, b))


def nilradical_basis(spec: ParabolicSpec) -> tuple[ExactMatrix, ...]:
    return tuple(b for b in algebra_basis(spec.kind) if in_nilradical(spec, b))
