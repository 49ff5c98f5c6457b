import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from richline.algebra import sl, so, sp, validate_spec
from richline.diagram import (
    BranchedUnsupported,
    LineDiagram,
    NotSimpleSpec,
    NotTypeA,
    NotTypeB,
    canonicalize,
    chain_lengths,
    chains,
    count_k_subchains,
    diagram_from_json,
    diagram_to_json,
    even_diagram,
    horizontal_diagram,
    is_simple_diagram,
    odd_diagram,
    permute_blocks,
    render_ascii,
    render_dot,
)
from richline.nilpotent import centralizer_dimension_direct, realize
from richline.richardson import is_richardson

compositions = st.lists(st.integers(min_value=1, max_value=4), min_size=1, max_size=5)


def test_horizontal_example():
    d = horizontal_diagram((3, 1, 2, 3))
    assert sorted(d.edges) == [(1, 4), (2, 6), (3, 9), (4, 5), (5, 7), (6, 8)]
    assert not d.branched


def test_horizontal_degenerate():
    assert horizontal_diagram((5,)).edges == frozenset()
    assert sorted(horizontal_diagram((1, 1, 1)).edges) == [(1, 2), (2, 3)]


@given(compositions)
@settings(max_examples=60)
def test_horizontal_is_filled(blocks):
    # no admissible line can be added to the horizontal diagram
    d = horizontal_diagram(tuple(blocks))
    has_right = {i for i, _ in d.edges}
    has_left = {j for _, j in d.edges}
    n = d.n_vertices
    for u in range(1, n + 1):
        for v in range(u + 1, n + 1):
            if d.position(u)[0] == d.position(v)[0]:
                continue
            assert u in has_right or v in has_left


def test_even_diagram_symplectic_examples():
    spec = validate_spec(sp(6), (1, 2, 2, 1))
    assert sorted(even_diagram(spec).edges) == [(1, 2), (2, 5), (3, 4), (5, 6)]
    spec = validate_spec(sp(4), (1, 1, 1, 1))
    assert sorted(even_diagram(spec).edges) == [(1, 2), (2, 3), (3, 4)]


def test_even_diagram_orthogonal_is_richardson():
    # cross lines pair the middle rows from the top; the witness is verified
    # against the centralizer oracle rather than against a fixed edge set
    spec = validate_spec(so(6), (3, 3))
    d = even_diagram(spec)
    assert sorted(d.edges) == [(1, 5), (2, 6)]
    x = realize(d, spec)
    assert is_richardson(x, spec)
    spec8 = validate_spec(so(8), (1, 3, 3, 1))
    x8 = realize(even_diagram(spec8), spec8)
    assert is_richardson(x8, spec8)


def test_even_diagram_rejects():
    with pytest.raises(NotTypeA):
        even_diagram(validate_spec(sp(4), (1, 2, 1)))
    with pytest.raises(NotSimpleSpec):
        even_diagram(validate_spec(so(12), (3, 3, 3, 3)))
    assert even_diagram(validate_spec(so(12), (3, 3, 3, 3)),
                        require_simple=False).branched is False


def test_odd_diagram_examples():
    assert sorted(odd_diagram(validate_spec(sp(4), (1, 2, 1))).edges) == [(1, 2), (3, 4)]
    assert sorted(odd_diagram(validate_spec(so(5), (1, 1, 1, 1, 1))).edges) == [
        (1, 2), (2, 3), (3, 4), (4, 5)]
    assert sorted(odd_diagram(validate_spec(sp(6), (2, 2, 2))).edges) == [
        (1, 3), (2, 4), (3, 5), (4, 6)]


def test_odd_diagram_rejects():
    with pytest.raises(NotTypeB):
        odd_diagram(validate_spec(sp(6), (1, 2, 2, 1)))
    with pytest.raises(NotSimpleSpec):
        odd_diagram(validate_spec(sp(6), (1, 1, 2, 1, 1)))


def test_odd_diagram_merges_through_short_middle():
    # a height-one middle column forces the top chain to merge with its
    # counterpart instead of branching
    spec = validate_spec(so(9), (4, 1, 4))
    d = odd_diagram(spec)
    assert (1, 5) in d.edges and (5, 9) in d.edges
    assert is_simple_diagram(d)
    assert is_richardson(realize(d, spec), spec)


def test_count_k_subchains():
    d = horizontal_diagram((3, 1, 2, 3))
    assert count_k_subchains(d, 1) == 6
    assert count_k_subchains(d, 2) == 3
    assert count_k_subchains(d, 3) == 1
    assert count_k_subchains(d, 4) == 0
    with pytest.raises(ValueError):
        count_k_subchains(d, 0)


def test_chain_lengths():
    assert chain_lengths(horizontal_diagram((3, 1, 2, 3))) == (3, 2, 1)
    assert chain_lengths(horizontal_diagram((4,))) == (0, 0, 0, 0)
    spec = validate_spec(sp(6), (1, 2, 2, 1))
    assert chain_lengths(even_diagram(spec)) == (3, 1)


def test_chain_lengths_rejects_branched():
    d = horizontal_diagram((1, 1, 1))
    branched = d.with_edges({(1, 3)})
    assert branched.branched
    with pytest.raises(BranchedUnsupported):
        chain_lengths(branched)


def test_permute_blocks():
    assert permute_blocks((3, 1, 2, 3), (1, 2, 4, 3)) == (3, 1, 3, 2)
    assert permute_blocks((3, 1, 2, 3), (1, 2, 3, 4)) == (3, 1, 2, 3)
    assert permute_blocks((1, 2, 2, 1), (2, 1)) == (2, 1, 1, 2)
    assert permute_blocks((1, 2, 3, 2, 1), (2, 1)) == (2, 1, 3, 1, 2)


@given(compositions, st.randoms(use_true_random=False))
@settings(max_examples=40)
def test_chain_lengths_invariant_under_permutation(blocks, rng):
    blocks = tuple(blocks)
    sigma = list(range(1, len(blocks) + 1))
    rng.shuffle(sigma)
    base = chain_lengths(horizontal_diagram(blocks))
    assert chain_lengths(horizontal_diagram(permute_blocks(blocks, sigma))) == base


def test_is_simple_diagram():
    assert is_simple_diagram(horizontal_diagram((3, 1, 2, 3)))
    appendix = LineDiagram(
        (1, 1, 2, 1, 1),
        tuple((c, r) for c, h in enumerate((1, 1, 2, 1, 1), 1) for r in range(1, h + 1)),
        {(1, 2), (2, 3), (2, 5), (4, 5), (5, 6)},
        branched=True)
    assert not is_simple_diagram(appendix)
    assert is_simple_diagram(LineDiagram((2, 2), ((1, 1), (1, 2), (2, 1), (2, 2)), set()))


@pytest.mark.parametrize("kind,blocks", [
    (sp(6), (1, 2, 2, 1)),
    (sp(6), (2, 2, 2)),
    (so(8), (1, 3, 3, 1)),
    (so(9), (2, 2, 1, 2, 2)),
])
def test_mirror_symmetry_of_constructions(kind, blocks):
    spec = validate_spec(kind, blocks)
    builder = even_diagram if spec.n_blocks % 2 == 0 else odd_diagram
    d = builder(spec, require_simple=False)
    n = d.n_vertices
    for i, j in d.edges:
        assert (n + 1 - j, n + 1 - i) in d.edges


def test_canonicalize_sorts_halves():
    spec = validate_spec(sp(8), (3, 1, 1, 3))
    canon, sigma = canonicalize(spec)
    assert canon.blocks == (1, 3, 3, 1)
    assert sigma == (2, 1)
    ident, sigma_sl = canonicalize(validate_spec(sl(9), (3, 1, 2, 3)))
    assert ident.blocks == (3, 1, 2, 3)
    assert sigma_sl == (1, 2, 3, 4)


def test_diagram_json_roundtrip():
    for d in (horizontal_diagram((3, 1, 2, 3)),
              even_diagram(validate_spec(sp(6), (1, 2, 2, 1)))):
        again = diagram_from_json(diagram_to_json(d))
        assert again == d
    assert '"labels": "paper-even"' in diagram_to_json(
        even_diagram(validate_spec(sp(6), (1, 2, 2, 1)))).replace('":"', '": "')


def test_render_ascii_horizontal():
    text = render_ascii(horizontal_diagram((3, 1, 2, 3)))
    rows = text.rstrip("\n").split("\n")
    assert len(rows) == 3
    assert rows[0].startswith("1---4---5---7")
    assert "9" in rows[2] and "-" in rows[2]


def test_render_ascii_edgeless():
    text = render_ascii(horizontal_diagram((2, 2)))
    # single-row chains only: (2,2) has lines; use one column for edgeless
    text = render_ascii(horizontal_diagram((3,)))
    assert "-" not in text
    assert text.rstrip("\n").split("\n") == ["1", "2", "3"]


def test_render_dot_marks_counterparts():
    spec = validate_spec(sp(6), (1, 2, 2, 1))
    dot = render_dot(even_diagram(spec))
    assert "v1 -- v2;" in dot
    assert "v5 -- v6 [style=dashed];" in dot
    assert dot.count("rank=same") == 4
