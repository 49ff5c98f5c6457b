"""Deciding Richardson-ness and producing verified witnesses.

An element X of the nilradical is a Richardson element for the parabolic
exactly when the centralizer of X in the full algebra has the dimension of
the Levi factor.  ``is_richardson`` checks this with the direct centralizer
computation and cross-checks it against the rank of ad(X) restricted to the
parabolic; ``richardson_element`` builds a witness for any valid spec,
falling back to a deterministic search over branched diagrams when no
simple construction applies.
"""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass
from typing import Iterator, Sequence

from .algebra import (
    AlgebraKind,
    ExactMatrix,
    ParabolicSpec,
    SpecError,
    grade_of_entry,
    in_nilradical,
    levi_dimension,
    nilradical_basis,
    nilradical_dimension,
    parabolic_basis,
    sl,
    so,
    sp,
    validate_spec,
)
from .diagram import (
    LineDiagram,
    canonicalize,
    chains,
    counterpart,
    even_diagram,
    horizontal_diagram,
    is_simple_diagram,
    odd_diagram,
)
from .nilpotent import (
    Partition,
    adjoint_rows,
    centralizer_dimension_direct,
    centralizer_dimension_formula,
    dual_partition,
    jordan_partition,
    rank_of_rows,
    realize,
)


class NotInNilradical(SpecError):
    pass


class InternalDisagreement(AssertionError):
    pass


class NotSimpleSystem(SpecError):
    pass


class Exhausted(RuntimeError):
    """Branch search ran out of budget without finding a witness."""


BranchSearchExhausted = Exhausted

SL_TAG = "sl"
CASE1 = "simple-case-1"
CASE2 = "simple-case-2"
CASE3 = "simple-case-3"
CASE4 = "simple-case-4"
NOT_SIMPLE = "not-simple"


@dataclass(frozen=True)
class SimpleClass:
    """Outcome of the simple-parabolic classification."""

    tag: str
    reason: str = ""

    @property
    def is_simple(self) -> bool:
        return self.tag != NOT_SIMPLE


def _repeated(values: Sequence[int]) -> list[int]:
    return sorted({v for v in values if values.count(v) > 1})


def classify_simple(spec: ParabolicSpec) -> SimpleClass:
    """Classify whether a simple line diagram is expected to work.

    Symplectic parabolics with an even number of blocks always qualify.
    Otherwise the conditions constrain how odd and even block lengths of
    one half repeat relative to the central block; repetition counts are
    taken within one half of the palindromic vector.
    """
    if spec.kind.is_linear:
        return SimpleClass(SL_TAG)
    half = sorted(spec.half)
    if spec.n_blocks % 2 == 0:
        if spec.kind.is_symplectic:
            return SimpleClass(CASE1)
        bad = _repeated([v for v in half if v % 2])
        if bad:
            return SimpleClass(NOT_SIMPLE, f"odd block lengths {bad} repeat in a half")
        return SimpleClass(CASE2)
    mid = spec.middle
    if spec.kind.is_symplectic:
        bad = _repeated([v for v in half if v % 2 and v < mid])
        if bad:
            return SimpleClass(
                NOT_SIMPLE, f"odd block lengths {bad} below the middle {mid} repeat")
        return SimpleClass(CASE3)
    odds = [v for v in half if v % 2]
    evens = [v for v in half if v % 2 == 0]
    if spec.kind.size % 2 == 0:
        # even orthogonal, odd block count: every odd length must exceed the middle
        low = sorted({v for v in odds if v < mid})
        if low:
            return SimpleClass(
                NOT_SIMPLE, f"odd block lengths {low} do not exceed the middle {mid}")
        return SimpleClass(CASE4)
    if evens:
        if odds and max(evens) > min(odds):
            return SimpleClass(
                NOT_SIMPLE,
                f"even block length {max(evens)} is not below the odd lengths")
        bad = _repeated([v for v in evens if v > mid])
        if bad:
            return SimpleClass(
                NOT_SIMPLE, f"even block lengths {bad} above the middle {mid} repeat")
    return SimpleClass(CASE4)


def predicted_dual_partition(spec: ParabolicSpec) -> Partition:
    """Closed-form dual partition of the constructed element.

    For sl the dual is the block vector itself.  In the palindromic cases
    each half entry d contributes the pair (d, d), except that entries of
    one distinguished parity threshold split into (d-1, d+1); a central
    block contributes itself once.
    """
    cls = classify_simple(spec)
    if not cls.is_simple:
        from .diagram import NotSimpleSpec

        raise NotSimpleSpec(f"{spec} is not simple: {cls.reason}")
    if spec.kind.is_linear:
        return Partition(spec.blocks)
    half = spec.half
    mid = spec.middle
    parts: list[int] = [] if mid is None else [mid]

    def splits(d: int) -> bool:
        if spec.kind.is_symplectic:
            return mid is not None and d % 2 == 1 and d < mid
        if mid is None:
            return d % 2 == 1
        if spec.kind.size % 2:
            return d % 2 == 0 and d > mid
        return d % 2 == 1 and d > mid

    for d in half:
        if splits(d):
            parts.extend([d - 1, d + 1])
        else:
            parts.extend([d, d])
    return Partition(tuple(p for p in parts if p > 0))


def is_richardson(matrix: ExactMatrix, spec: ParabolicSpec) -> bool:
    """Exact Richardson test, with an internal consistency cross-check.

    The centralizer dimension of the element must equal the Levi dimension;
    independently, ad(matrix) restricted to the parabolic must have image
    of the full nilradical dimension.  The two criteria must agree.
    """
    if not in_nilradical(spec, matrix):
        raise NotInNilradical(f"matrix is not in the nilradical of {spec}")
    by_centralizer = (
        centralizer_dimension_direct(matrix, spec.kind) == levi_dimension(spec))
    image_rank = rank_of_rows(adjoint_rows(matrix, parabolic_basis(spec)))
    by_image = image_rank == nilradical_dimension(spec)
    if by_centralizer != by_image:
        raise InternalDisagreement(
            f"centralizer and ad-image criteria disagree for {spec}")
    return by_centralizer


def s_bound(blocks: Sequence[int]) -> int:
    """One plus the longest run of entries strictly surrounded by larger ones."""
    blocks = tuple(blocks)
    best = 0
    n = len(blocks)
    for lo in range(1, n - 1):
        for hi in range(lo, n - 1):
            run = blocks[lo:hi + 1]
            if max(run) < blocks[lo - 1] and max(run) < blocks[hi + 1]:
                best = max(best, hi - lo + 1)
    return 1 + best


def _weight(label: int, kind: AlgebraKind) -> tuple[int, ...]:
    n = kind.size
    if kind.is_linear:
        w = [0] * n
        w[label - 1] = 1
        return tuple(w)
    half = n // 2
    w = [0] * half
    if label <= half:
        w[label - 1] = 1
    elif label > n - half:
        w[n - label] = -1
    return tuple(w)


def _root_of_position(pos: tuple[int, int], kind: AlgebraKind) -> tuple[int, ...]:
    i, j = pos
    wi, wj = _weight(i, kind), _weight(j, kind)
    return tuple(a - b for a, b in zip(wi, wj))


def _is_root(vec: tuple[int, ...], kind: AlgebraKind) -> bool:
    nonzero = sorted((v for v in vec if v), reverse=True)
    if kind.is_linear:
        return nonzero == [1, -1]
    if nonzero in ([1, -1], [1, 1], [-1, -1]):
        return True
    if kind.is_symplectic:
        return nonzero in ([2], [-2])
    if kind.size % 2:
        return nonzero in ([1], [-1])
    return False


@dataclass(frozen=True)
class SupportData:
    """Entry positions of an element grouped into root vectors."""

    positions: tuple[tuple[int, int, int], ...]
    root_vectors: tuple[tuple[tuple[int, int], ...], ...]
    max_grade: int
    is_simple_system: bool

    def to_json_obj(self) -> dict:
        return {
            "positions": [list(p) for p in self.positions],
            "root_vectors": [[list(p) for p in group] for group in self.root_vectors],
            "max_grade": self.max_grade,
            "is_simple_system": self.is_simple_system,
        }


def _support_groups(matrix: ExactMatrix, spec: ParabolicSpec):
    n = spec.kind.size
    positions = sorted(matrix.entries)
    if spec.kind.is_linear:
        groups = [(p,) for p in positions]
    else:
        groups = []
        seen = set()
        for p in positions:
            if p in seen:
                continue
            twin = counterpart(p, n)
            if twin != p and twin in matrix.entries:
                groups.append((p, twin) if p < twin else (twin, p))
                seen.update({p, twin})
            else:
                groups.append((p,))
                seen.add(p)
    roots = [_root_of_position(g[0], spec.kind) for g in groups]
    return groups, roots


def support(matrix: ExactMatrix, spec: ParabolicSpec) -> SupportData:
    """Support of a nilradical element, with the simple-system check.

    The support is a simple system when no difference of two of its roots
    is again a root of the algebra.
    """
    if not in_nilradical(spec, matrix):
        raise NotInNilradical(f"matrix is not in the nilradical of {spec}")
    groups, roots = _support_groups(matrix, spec)
    positions = tuple((i, j, matrix.get(i, j)) for i, j in sorted(matrix.entries))
    max_grade = max((grade_of_entry(spec, i, j) for i, j in matrix.entries), default=0)
    # root systems are symmetric under negation, so unordered pairs suffice
    simple = len(set(roots)) == len(roots) and all(
        not _is_root(tuple(a - b for a, b in zip(ra, rb)), spec.kind)
        for ra, rb in itertools.combinations(roots, 2))
    return SupportData(positions, tuple(groups), max_grade, simple)


def _component_label(roots: list[tuple[int, ...]], kind: AlgebraKind) -> tuple[str, int]:
    def dot(a, b):
        return sum(x * y for x, y in zip(a, b))

    k = len(roots)
    norms = {dot(a, a) for a in roots}
    if len(norms) == 1:
        degrees = [sum(1 for b in roots if b is not a and dot(a, b) != 0) for a in roots]
        if max(degrees, default=0) <= 2:
            return ("A", k)
        if degrees.count(3) == 1 and max(degrees) == 3:
            return ("D", k)
        raise NotSimpleSystem(f"unrecognized simply-laced component of rank {k}")
    if min(norms) == 1:
        return ("B", k)
    if max(norms) == 4:
        return ("C", k)
    raise NotSimpleSystem(f"unrecognized component norms {sorted(norms)}")


def _format_label(factors: list[tuple[str, int]]) -> str:
    if not factors:
        return "0"
    ordered = sorted(factors, key=lambda f: (-f[1], f[0]))
    return "+".join(f"{letter}{rank}" for letter, rank in ordered)


def bala_carter_label(matrix: ExactMatrix, spec: ParabolicSpec) -> str:
    """Type of the root subsystem spanned by the support.

    Components of the support graph are classified from their Cartan data;
    rank-one components are named by root length (A for long-in-A, B for a
    short orthogonal root, C for a long symplectic root).
    """
    data = support(matrix, spec)
    if not data.is_simple_system:
        raise NotSimpleSystem("support is not a simple system of roots")
    _, roots = _support_groups(matrix, spec)
    if not roots:
        return "0"

    def dot(a, b):
        return sum(x * y for x, y in zip(a, b))

    unvisited = set(range(len(roots)))
    factors = []
    while unvisited:
        stack = [unvisited.pop()]
        component = [stack[0]]
        while stack:
            cur = stack.pop()
            linked = [t for t in unvisited if dot(roots[cur], roots[t]) != 0]
            for t in linked:
                unvisited.remove(t)
                stack.append(t)
                component.append(t)
        comp_roots = [roots[t] for t in component]
        if len(comp_roots) == 1:
            norm = dot(comp_roots[0], comp_roots[0])
            letter = {1: "B", 2: "A", 4: "C"}.get(norm)
            if letter is None:
                raise NotSimpleSystem(f"unexpected root norm {norm}")
            factors.append((letter, 1))
        else:
            factors.append(_component_label(comp_roots, spec.kind))
    return _format_label(factors)


def chain_label(diagram: LineDiagram, spec: ParabolicSpec) -> str:
    """Label predicted from the chains of a simple diagram.

    A chain spanning v vertices gives A_{v-1} (once per mirror pair outside
    type A); a self-mirror chain gives B_j when it spans 2j+1 vertices in an
    odd orthogonal algebra and C_j when it spans 2j vertices in a symplectic
    one.
    """
    n = sum(diagram.columns)
    all_chains = chains(diagram)
    by_labels = {frozenset(c): c for c in all_chains}
    factors: list[tuple[str, int]] = []
    seen: set[frozenset[int]] = set()
    for chain in all_chains:
        key = frozenset(chain)
        if len(chain) < 2 or key in seen:
            continue
        if spec.kind.is_linear:
            factors.append(("A", len(chain) - 1))
            continue
        mirrored = frozenset(n + 1 - v for v in chain)
        if mirrored == key:
            if spec.kind.is_symplectic:
                factors.append(("C", len(chain) // 2))
            else:
                factors.append(("B", (len(chain) - 1) // 2))
        else:
            if mirrored not in by_labels:
                raise AssertionError("mirror chain missing; diagram is not mirror symmetric")
            seen.add(mirrored)
            factors.append(("A", len(chain) - 1))
    return _format_label(factors)


@dataclass(frozen=True)
class Report:
    """Everything computed for one parabolic spec."""

    spec: ParabolicSpec
    diagram: LineDiagram
    matrix: ExactMatrix
    partition: Partition
    dual: Partition
    dim_centralizer_formula: int
    dim_centralizer_direct: int
    dim_levi: int
    is_richardson: bool
    simple_case: str
    s_bound: int
    support: SupportData
    bala_carter: str | None
    canonical_permutation: tuple[int, ...]

    def to_json_obj(self) -> dict:
        from .diagram import diagram_to_json_obj

        return {
            "spec": {"algebra": self.spec.kind.name, "blocks": list(self.spec.blocks)},
            "diagram": diagram_to_json_obj(self.diagram),
            "matrix": self.matrix.to_json_obj(),
            "partition": self.partition.to_json_obj(),
            "dual": self.dual.to_json_obj(),
            "dim_centralizer": {"formula": self.dim_centralizer_formula,
                                "direct": self.dim_centralizer_direct},
            "dim_levi": self.dim_levi,
            "is_richardson": self.is_richardson,
            "simple_case": self.simple_case,
            "s_bound": self.s_bound,
            "support": self.support.to_json_obj(),
            "bala_carter": self.bala_carter,
            "canonical_permutation": list(self.canonical_permutation),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), sort_keys=True)


def _base_diagram(spec: ParabolicSpec) -> LineDiagram:
    if spec.kind.is_linear:
        return horizontal_diagram(spec.blocks)
    if spec.n_blocks % 2 == 0:
        return even_diagram(spec, require_simple=False)
    return odd_diagram(spec, require_simple=False)


def _candidate_classes(spec: ParabolicSpec, base: LineDiagram) -> list[frozenset]:
    n = spec.kind.size
    taken = set(base.edges)
    classes = []
    seen = set()
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if spec.block_of(i) >= spec.block_of(j):
                continue
            if (i, j) in taken or (i, j) in seen:
                continue
            if spec.kind.is_orthogonal and i + j == n + 1:
                continue
            if spec.kind.is_linear:
                group = frozenset({(i, j)})
            else:
                twin = counterpart((i, j), n)
                if twin in taken:
                    continue
                group = frozenset({(i, j), twin})
            seen.update(group)
            classes.append(group)
    return sorted(classes, key=lambda g: sorted(g))


def branch_search(spec: ParabolicSpec, budget: int = 3) -> LineDiagram:
    """Search for a Richardson witness by adding mirror-closed line classes.

    Starting from the simple-style construction, subsets of extra line
    classes (a line together with its counterpart) are tried in increasing
    size and lexicographic order.  Candidates are screened by the partition
    formula before the full verification runs.  Deterministic; raises
    ``Exhausted`` when no witness appears within the budget.
    """
    canon, _ = canonicalize(spec)
    base = _base_diagram(canon)
    target = levi_dimension(canon)
    classes = _candidate_classes(canon, base)
    for size in range(0, budget + 1):
        for combo in itertools.combinations(classes, size):
            extra = frozenset().union(*combo) if combo else frozenset()
            candidate = base.with_edges(extra)
            matrix = realize(candidate, canon)
            if centralizer_dimension_formula(jordan_partition(matrix), canon.kind) != target:
                continue
            if is_richardson(matrix, canon):
                return candidate
    raise Exhausted(
        f"no Richardson witness for {spec} within {budget} extra line classes")


def richardson_element(spec: ParabolicSpec, budget: int = 3) -> Report:
    """Construct and fully verify a Richardson element for the parabolic."""
    cls = classify_simple(spec)
    canon, sigma = canonicalize(spec)
    if cls.tag == SL_TAG:
        diagram = horizontal_diagram(canon.blocks)
    elif cls.is_simple:
        diagram = (even_diagram(canon) if canon.n_blocks % 2 == 0
                   else odd_diagram(canon))
    else:
        diagram = branch_search(spec, budget)
    matrix = realize(diagram, canon)
    partition = jordan_partition(matrix)
    dual = dual_partition(partition)
    formula = centralizer_dimension_formula(partition, canon.kind)
    direct = centralizer_dimension_direct(matrix, canon.kind)
    if formula != direct:
        raise InternalDisagreement(
            f"formula {formula} != direct {direct} for {spec}")
    richardson = is_richardson(matrix, canon)
    if cls.is_simple:
        predicted = predicted_dual_partition(spec)
        if dual != predicted:
            raise InternalDisagreement(
                f"dual {dual} != predicted {predicted} for simple spec {spec}")
        if not richardson:
            raise InternalDisagreement(
                f"simple construction failed to be Richardson for {spec}")
    data = support(matrix, canon)
    label = bala_carter_label(matrix, canon) if data.is_simple_system else None
    return Report(
        spec=spec,
        diagram=diagram,
        matrix=matrix,
        partition=partition,
        dual=dual,
        dim_centralizer_formula=formula,
        dim_centralizer_direct=direct,
        dim_levi=levi_dimension(canon),
        is_richardson=richardson,
        simple_case=cls.tag,
        s_bound=s_bound(canon.blocks),
        support=data,
        bala_carter=label,
        canonical_permutation=sigma,
    )


def random_nilradical_element(spec: ParabolicSpec, rng: random.Random) -> ExactMatrix:
    """Deterministic random member of the nilradical, coefficients in -3..3."""
    total = ExactMatrix.zero(spec.kind.size)
    for basis_elem in nilradical_basis(spec):
        c = rng.randint(-3, 3)
        if c:
            total = total + basis_elem.scaled(c)
    return total


def minimality_probe(matrix: ExactMatrix, spec: ParabolicSpec, *, count: int = 100,
                     seed: int = 0, method: str = "direct") -> bool:
    """Check dim g^X <= dim g^Y against seeded random nilradical elements Y.

    ``method`` selects the centralizer computation for the probes: the
    direct kernel computation, or the partition formula (exact as well, and
    much faster at large rank).
    """
    rng = random.Random(seed)
    if method == "direct":
        dim_x = centralizer_dimension_direct(matrix, spec.kind)
    else:
        dim_x = centralizer_dimension_formula(jordan_partition(matrix), spec.kind)
    for _ in range(count):
        probe = random_nilradical_element(spec, rng)
        if method == "direct":
            dim_y = centralizer_dimension_direct(probe, spec.kind)
        else:
            dim_y = centralizer_dimension_formula(jordan_partition(probe), spec.kind)
        if dim_y < dim_x:
            return False
    return True


@dataclass(frozen=True)
class SweepRow:
    """One sweep entry: spec, route status, and the report when available."""

    spec: ParabolicSpec
    status: str  # "richardson", "branched", or "exhausted"
    report: Report | None
    error: str = ""


def _compositions(total: int) -> Iterator[tuple[int, ...]]:
    if total == 0:
        yield ()
        return
    for first in range(1, total + 1):
        for rest in _compositions(total - first):
            yield (first,) + rest


def enumerate_specs(kind: AlgebraKind) -> list[ParabolicSpec]:
    """All valid parabolic specs of the algebra, in lexicographic order."""
    n = kind.size
    vectors: set[tuple[int, ...]] = set()
    if kind.is_linear:
        vectors.update(_compositions(n))
    else:
        if n % 2 == 0:
            for half in _compositions(n // 2):
                vectors.add(half + half[::-1])
        for mid in range(1 if n % 2 else 2, n + 1, 2):
            for half in _compositions((n - mid) // 2):
                vectors.add(half + (mid,) + half[::-1])
    return [validate_spec(kind, v) for v in sorted(vectors)]


def _family_kinds(family: str, n_max: int) -> list[AlgebraKind]:
    if family == "sl":
        return [sl(n) for n in range(1, n_max + 1)]
    if family == "sp":
        return [sp(n) for n in range(2, n_max + 1, 2)]
    if family == "so":
        return [so(n) for n in range(2, n_max + 1)]
    raise SpecError(f"unknown family {family!r}")


def sweep(family: str, n_max: int, budget: int = 3) -> list[SweepRow]:
    """Run every spec of the family up to the size bound and collect reports."""
    rows: list[SweepRow] = []
    for kind in _family_kinds(family, n_max):
        for spec in enumerate_specs(kind):
            cls = classify_simple(spec)
            try:
                report = richardson_element(spec, budget)
            except Exhausted as exc:
                rows.append(SweepRow(spec, "exhausted", None, str(exc)))
                continue
            status = "richardson" if cls.is_simple else "branched"
            rows.append(SweepRow(spec, status, report))
    return rows


def summarize_sweep(rows: Sequence[SweepRow]) -> dict[str, int]:
    out = {"richardson": 0, "branched": 0, "exhausted": 0}
    for row in rows:
        out[row.status] += 1
    return out
