"""Line diagrams: columns of vertices joined by lines between columns.

A diagram is *simple* when every vertex meets at most one line on each
side.  Vertex labels double as matrix indices, which drives the labeling
conventions:

* ``horizontal_diagram`` labels column-wise top-down and joins equal rows,
  giving the unique filled horizontal diagram of a composition.
* ``even_diagram`` (palindromic vector, even number of blocks) labels the
  left half top-down and the right half bottom-up; then the counterpart of
  a line i--j is always (N+1-j)--(N+1-i) and the two halves are joined by
  mirror-symmetric cross lines at the middle.
* ``odd_diagram`` (odd number of blocks) labels everything top-down and
  repeatedly peels the top row of remaining vertices together with its
  counterpart row; the odd orthogonal case additionally threads one chain
  through the central vertices.

The block vector of a palindromic construction is first sorted so that
each half is non-decreasing; the applied permutation is reported by
``canonical_permutation``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .algebra import ParabolicSpec, SpecError, validate_spec

Edge = tuple[int, int]


class DiagramError(SpecError):
    pass


class NotTypeA(DiagramError):
    pass


class NotTypeB(DiagramError):
    pass


class NotSimpleSpec(DiagramError):
    pass


class BranchedUnsupported(DiagramError):
    pass


def mirror_label(k: int, n_vertices: int) -> int:
    return n_vertices + 1 - k


def counterpart(edge: Edge, n_vertices: int) -> Edge:
    i, j = edge
    return (n_vertices + 1 - j, n_vertices + 1 - i)


def _columnwise_labels(columns: Sequence[int]) -> tuple[tuple[int, int], ...]:
    out = []
    for c, height in enumerate(columns, start=1):
        out.extend((c, row) for row in range(1, height + 1))
    return tuple(out)


def _mirrored_labels(columns: Sequence[int]) -> tuple[tuple[int, int], ...]:
    # left half top-down, right half bottom-up
    m = len(columns)
    r = m // 2
    out = []
    for c in range(1, r + 1):
        out.extend((c, row) for row in range(1, columns[c - 1] + 1))
    for c in range(r + 1, m + 1):
        out.extend((c, row) for row in range(columns[c - 1], 0, -1))
    return tuple(out)


@dataclass(frozen=True)
class LineDiagram:
    """Columns of vertices plus a set of lines between distinct columns."""

    columns: tuple[int, ...]
    labels: tuple[tuple[int, int], ...]
    edges: frozenset[Edge]
    branched: bool = False

    def __post_init__(self) -> None:
        object.__setattr__(self, "columns", tuple(self.columns))
        object.__setattr__(self, "labels", tuple(self.labels))
        object.__setattr__(self, "edges", frozenset(tuple(e) for e in self.edges))
        n = sum(self.columns)
        if len(self.labels) != n:
            raise DiagramError("labels must cover every vertex exactly once")
        for i, j in self.edges:
            if not (1 <= i < j <= n):
                raise DiagramError(f"bad edge ({i},{j})")
            if self.labels[i - 1][0] == self.labels[j - 1][0]:
                raise DiagramError(f"edge ({i},{j}) joins vertices of one column")

    @property
    def n_vertices(self) -> int:
        return sum(self.columns)

    def position(self, label: int) -> tuple[int, int]:
        return self.labels[label - 1]

    @cached_property
    def grid(self) -> dict[tuple[int, int], int]:
        return {pos: k + 1 for k, pos in enumerate(self.labels)}

    @cached_property
    def right_neighbor(self) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {}
        for i, j in sorted(self.edges):
            out.setdefault(i, []).append(j)
        return out

    @cached_property
    def left_neighbor(self) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {}
        for i, j in sorted(self.edges):
            out.setdefault(j, []).append(i)
        return out

    def with_edges(self, extra: Iterable[Edge]) -> "LineDiagram":
        edges = frozenset(self.edges) | frozenset(extra)
        branched = not _edges_simple(edges)
        return LineDiagram(self.columns, self.labels, edges, branched)


def _edges_simple(edges: Iterable[Edge]) -> bool:
    left_deg: dict[int, int] = {}
    right_deg: dict[int, int] = {}
    for i, j in edges:
        right_deg[i] = right_deg.get(i, 0) + 1
        left_deg[j] = left_deg.get(j, 0) + 1
        if right_deg[i] > 1 or left_deg[j] > 1:
            return False
    return True


def is_simple_diagram(diagram: LineDiagram) -> bool:
    """True iff every vertex has at most one line per side."""
    return _edges_simple(diagram.edges)


def horizontal_diagram(blocks: Sequence[int]) -> LineDiagram:
    """The unique filled horizontal diagram of a composition.

    Vertices are labeled column-wise top-down; along each row level the
    consecutive columns tall enough to reach it are joined, skipping the
    shorter ones.
    """
    columns = tuple(int(b) for b in blocks)
    if not columns or any(b < 1 for b in columns):
        raise DiagramError("blocks must be a nonempty list of positive integers")
    labels = _columnwise_labels(columns)
    grid = {pos: k + 1 for k, pos in enumerate(labels)}
    edges = set()
    for row in range(1, max(columns) + 1):
        tall = [c for c, h in enumerate(columns, start=1) if h >= row]
        for c1, c2 in zip(tall, tall[1:]):
            edges.add((grid[(c1, row)], grid[(c2, row)]))
    return LineDiagram(columns, labels, frozenset(edges), branched=False)


def permute_blocks(blocks: Sequence[int], sigma: Sequence[int]) -> tuple[int, ...]:
    """Apply a permutation (one-line notation, 1-based) to a block vector.

    When the vector is longer than sigma it is treated as palindromic:
    sigma acts on the first half and, mirrored, on the second half, fixing
    a central entry.
    """
    blocks = tuple(blocks)
    r = len(sigma)
    if sorted(sigma) != list(range(1, r + 1)):
        raise DiagramError(f"{sigma} is not a permutation of 1..{r}")
    if r == len(blocks):
        return tuple(blocks[s - 1] for s in sigma)
    if len(blocks) in (2 * r, 2 * r + 1):
        head = tuple(blocks[s - 1] for s in sigma)
        mid = blocks[r:len(blocks) - r]
        return head + mid + head[::-1]
    raise DiagramError("permutation length does not match the block vector")


def canonical_permutation(spec: ParabolicSpec) -> tuple[int, ...]:
    """Stable permutation sorting each half non-decreasingly (identity for sl)."""
    if spec.kind.is_linear:
        return tuple(range(1, spec.n_blocks + 1))
    half = spec.half
    order = sorted(range(len(half)), key=lambda t: (half[t], t))
    return tuple(t + 1 for t in order)


def canonicalize(spec: ParabolicSpec) -> tuple[ParabolicSpec, tuple[int, ...]]:
    """Sort the halves of a palindromic vector; sl specs pass through."""
    sigma = canonical_permutation(spec)
    blocks = permute_blocks(spec.blocks, sigma)
    return validate_spec(spec.kind, blocks), sigma


def _require_simple(spec: ParabolicSpec) -> None:
    from .richardson import classify_simple  # local import, avoids a cycle

    cls = classify_simple(spec)
    if not cls.is_simple:
        raise NotSimpleSpec(f"{spec}: {cls.reason}")


def even_diagram(spec: ParabolicSpec, *, require_simple: bool = True) -> LineDiagram:
    """Diagram for a palindromic vector with an even number of blocks.

    The two halves carry mirror images of the horizontal diagram of the
    (sorted) half vector.  Cross lines pair the rows of the two middle
    columns: every symplectic row is joined to its own mirror, while the
    orthogonal rows are paired off two at a time from the top, each pair
    contributing a crossed line and its counterpart.
    """
    if spec.kind.is_linear or spec.n_blocks % 2:
        raise NotTypeA(f"{spec} does not have an even number of blocks")
    if require_simple:
        _require_simple(spec)
    canon, _ = canonicalize(spec)
    columns = canon.blocks
    n_all = sum(columns)
    r = len(columns) // 2
    labels = _mirrored_labels(columns)
    grid = {pos: k + 1 for k, pos in enumerate(labels)}

    edges: set[Edge] = set()
    half_cols = columns[:r]
    for row in range(1, max(half_cols) + 1):
        tall = [c for c, h in enumerate(half_cols, start=1) if h >= row]
        for c1, c2 in zip(tall, tall[1:]):
            e = (grid[(c1, row)], grid[(c2, row)])
            edges.add(e)
            edges.add(counterpart(e, n_all))

    middle_rows = [grid[(r, row)] for row in range(1, columns[r - 1] + 1)]
    if spec.kind.is_symplectic:
        for v in middle_rows:
            edges.add((v, mirror_label(v, n_all)))
    else:
        for t in range(0, len(middle_rows) - 1, 2):
            a, b = middle_rows[t], middle_rows[t + 1]
            edges.add((a, mirror_label(b, n_all)))
            edges.add((b, mirror_label(a, n_all)))
    return LineDiagram(columns, labels, frozenset(edges), branched=False)


def odd_diagram(spec: ParabolicSpec, *, require_simple: bool = True) -> LineDiagram:
    """Diagram for a palindromic vector with an odd number of blocks.

    Repeatedly peels the chain through the top-most remaining vertices
    together with its counterpart chain, stopping a chain as soon as the
    next line (or its counterpart) would give some vertex two lines on one
    side, or would be a forbidden self-paired orthogonal line.  In the odd
    orthogonal case, whenever every remaining column has odd height and the
    central vertex is still free, the central vertices are joined into one
    chain first.
    """
    if spec.kind.is_linear or spec.n_blocks % 2 == 0:
        raise NotTypeB(f"{spec} does not have an odd number of blocks")
    if require_simple:
        _require_simple(spec)
    canon, _ = canonicalize(spec)
    columns = canon.blocks
    labels = _columnwise_labels(columns)
    edges = _peel_edges(columns, labels, is_orthogonal=spec.kind.is_orthogonal)
    return LineDiagram(columns, labels, frozenset(edges), branched=False)


def _peel_edges(columns: tuple[int, ...],
                labels: tuple[tuple[int, int], ...],
                *, is_orthogonal: bool) -> set[Edge]:
    n_all = sum(columns)
    m = len(columns)
    grid = {pos: k + 1 for k, pos in enumerate(labels)}
    column_labels = [[grid[(c, row)] for row in range(1, columns[c - 1] + 1)]
                     for c in range(1, m + 1)]
    col_of = {v: c for c, vs in enumerate(column_labels, start=1) for v in vs}

    left: dict[int, int] = {}
    right: dict[int, int] = {}
    isolated: set[int] = set()
    edges: set[Edge] = set()

    def fresh(v: int) -> bool:
        return v not in left and v not in right and v not in isolated

    def add_edge(i: int, j: int) -> None:
        right[i] = j
        left[j] = i
        edges.add((i, j))

    def top_left_free(c: int) -> int | None:
        for v in column_labels[c - 1]:
            if v not in left and v not in isolated:
                return v
        return None

    while True:
        if is_orthogonal and n_all % 2 == 1:
            remaining = {c: [v for v in column_labels[c - 1] if fresh(v)]
                         for c in range(1, m + 1)}
            rem_cols = [c for c in range(1, m + 1) if remaining[c]]
            mid_col = m // 2 + 1
            if (rem_cols and mid_col in rem_cols
                    and all(len(remaining[c]) % 2 == 1 for c in rem_cols)):
                centers = [remaining[c][len(remaining[c]) // 2] for c in rem_cols]
                if len(centers) == 1:
                    isolated.add(centers[0])
                else:
                    for a, b in zip(centers, centers[1:]):
                        if (a, b) not in edges:
                            add_edge(a, b)
                continue

        start = None
        for c in range(1, m + 1):
            start = next((v for v in column_labels[c - 1] if fresh(v)), None)
            if start is not None:
                break
        if start is None:
            break

        tip = start
        grew = False
        while True:
            if tip in right:
                break
            target = None
            for c in range(col_of[tip] + 1, m + 1):
                target = top_left_free(c)
                if target is not None:
                    break
            if target is None:
                break
            i, j = tip, target
            ci, cj = n_all + 1 - j, n_all + 1 - i
            if is_orthogonal and i + j == n_all + 1:
                break  # self-paired line, zero entry in so
            if (ci, cj) != (i, j) and (ci in right or cj in left):
                break
            add_edge(i, j)
            if (ci, cj) != (i, j):
                add_edge(ci, cj)
            grew = True
            tip = j
        if not grew and fresh(start):
            isolated.add(start)
    return edges


def count_k_subchains(diagram: LineDiagram, k: int) -> int:
    """Number of sequences of k connected lines with increasing labels."""
    if k < 1:
        raise ValueError("k must be positive")
    order = sorted(range(1, diagram.n_vertices + 1))
    paths = {v: 1 for v in order}  # paths of current length ending at v
    for _ in range(k):
        nxt: dict[int, int] = {}
        for i, js in diagram.right_neighbor.items():
            if i in paths:
                for j in js:
                    nxt[j] = nxt.get(j, 0) + paths[i]
        paths = nxt
        if not paths:
            return 0
    return sum(paths.values())


def chains(diagram: LineDiagram) -> list[tuple[int, ...]]:
    """Maximal chains of a simple diagram as label paths (singletons included)."""
    if not is_simple_diagram(diagram):
        raise BranchedUnsupported("chains are only defined for simple diagrams")
    seen: set[int] = set()
    out = []
    for v in range(1, diagram.n_vertices + 1):
        if v in seen or v in diagram.left_neighbor:
            continue
        path = [v]
        while path[-1] in diagram.right_neighbor:
            path.append(diagram.right_neighbor[path[-1]][0])
        seen.update(path)
        out.append(tuple(path))
    return out


def chain_lengths(diagram: LineDiagram) -> tuple[int, ...]:
    """Multiset (sorted decreasingly) of maximal chain lengths in edges."""
    return tuple(sorted((len(c) - 1 for c in chains(diagram)), reverse=True))


def _label_style(diagram: LineDiagram) -> str:
    return "paper" if diagram.labels == _columnwise_labels(diagram.columns) else "paper-even"


def diagram_to_json_obj(diagram: LineDiagram) -> dict:
    return {
        "columns": list(diagram.columns),
        "labels": _label_style(diagram),
        "edges": [list(e) for e in sorted(diagram.edges)],
        "branched": diagram.branched,
    }


def diagram_to_json(diagram: LineDiagram) -> str:
    return json.dumps(diagram_to_json_obj(diagram), sort_keys=True)


def diagram_from_json_obj(obj: dict) -> LineDiagram:
    try:
        columns = tuple(int(c) for c in obj["columns"])
        style = obj.get("labels", "paper")
        edges = frozenset((int(i), int(j)) for i, j in obj["edges"])
        branched = bool(obj.get("branched", False))
    except (KeyError, TypeError, ValueError) as exc:
        raise DiagramError(f"malformed diagram object: {exc}") from None
    if style == "paper":
        labels = _columnwise_labels(columns)
    elif style == "paper-even":
        labels = _mirrored_labels(columns)
    else:
        raise DiagramError(f"unknown label style {style!r}")
    return LineDiagram(columns, labels, edges, branched)


def diagram_from_json(text: str) -> LineDiagram:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DiagramError(f"invalid JSON: {exc}") from None
    return diagram_from_json_obj(obj)


def render_ascii(diagram: LineDiagram) -> str:
    """Grid of vertex labels; horizontal lines drawn inline, others listed."""
    n_rows = max(diagram.columns)
    cell = max(len(str(diagram.n_vertices)), 1)
    gap = 3
    horizontal, diagonal = [], []
    for e in sorted(diagram.edges):
        (c1, r1), (c2, r2) = diagram.position(e[0]), diagram.position(e[1])
        (horizontal if r1 == r2 else diagonal).append(e)

    canvas = [[" "] * (len(diagram.columns) * (cell + gap) - gap)
              for _ in range(n_rows)]

    def span(col: int) -> tuple[int, int]:
        x0 = (col - 1) * (cell + gap)
        return x0, x0 + cell

    for label, (c, row) in enumerate(diagram.labels, start=1):
        x0, x1 = span(c)
        text = str(label).rjust(cell)
        canvas[row - 1][x0:x1] = list(text)
    for i, j in horizontal:
        (c1, row), (c2, _) = diagram.position(i), diagram.position(j)
        start = span(c1)[1]
        end = span(c2)[0]
        for x in range(start, end):
            canvas[row - 1][x] = "-"
    lines = ["".join(row).rstrip() for row in canvas]
    if diagonal:
        lines.append("lines: " + " ".join(f"{i}-{j}" for i, j in diagonal))
    return "\n".join(lines) + "\n"


def render_dot(diagram: LineDiagram) -> str:
    """Graphviz source; counterpart copies of lines are dashed."""
    n = diagram.n_vertices
    out = ["graph linediagram {", "  rankdir=LR;", "  node [shape=circle];"]
    for c in range(1, len(diagram.columns) + 1):
        members = sorted(v for v in range(1, n + 1) if diagram.position(v)[0] == c)
        row = " ".join(f"v{v};" for v in members)
        out.append(f"  {{ rank=same; {row} }}")
    for e in sorted(diagram.edges):
        twin = counterpart(e, n)
        dashed = twin != e and twin in diagram.edges and e > twin
        style = " [style=dashed]" if dashed else ""
        out.append(f"  v{e[0]} -- v{e[1]}{style};")
    out.append("}")
    return "\n".join(out) + "\n"
