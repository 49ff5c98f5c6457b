import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from richline.algebra import (
    ExactMatrix,
    NonPositiveBlock,
    NotPalindromic,
    ShapeMismatch,
    SumMismatch,
    algebra_basis,
    algebra_dimension,
    elementary,
    grade_of_entry,
    in_nilradical,
    is_member,
    levi_dimension,
    nilradical_basis,
    nilradical_dimension,
    sl,
    so,
    sp,
    validate_spec,
)
from richline.nilpotent import rank_of_rows


def test_kind_parity_validation():
    assert sp(6).size == 6
    assert so(8).family == "so-even"
    assert so(7).family == "so-odd"
    with pytest.raises(Exception):
        sp(5)


def test_validate_spec_examples():
    assert validate_spec(sl(9), (3, 1, 2, 3)).blocks == (3, 1, 2, 3)
    assert validate_spec(sp(6), (1, 2, 2, 1)).blocks == (1, 2, 2, 1)
    with pytest.raises(NotPalindromic):
        validate_spec(sp(6), (1, 2, 3))
    with pytest.raises(SumMismatch):
        validate_spec(sl(5), (6,))
    with pytest.raises(NonPositiveBlock):
        validate_spec(sl(4), (2, 0, 2))


@pytest.mark.parametrize("kind,expected", [
    (sl(9), 80),
    (sp(6), 21),
    (so(8), 28),
])
def test_algebra_dimension(kind, expected):
    assert algebra_dimension(kind) == expected


@pytest.mark.parametrize("kind,blocks,expected", [
    (sl(9), (3, 1, 2, 3), 22),
    (sp(6), (1, 1, 2, 1, 1), 5),
    (so(6), (3, 3), 9),
])
def test_levi_dimension(kind, blocks, expected):
    assert levi_dimension(validate_spec(kind, blocks)) == expected


@pytest.mark.parametrize("kind,blocks,expected", [
    (sl(9), (3, 1, 2, 3), 29),
    (sp(6), (1, 2, 2, 1), 8),
    (sl(9), (9,), 0),
])
def test_nilradical_dimension(kind, blocks, expected):
    assert nilradical_dimension(validate_spec(kind, blocks)) == expected


def test_is_member_examples():
    assert is_member(so(6), ExactMatrix.zero(6))
    skew_pair = ExactMatrix.from_items(6, [(1, 2, 1), (5, 6, -1)])
    assert is_member(so(6), skew_pair)
    assert not is_member(so(6), elementary(6, 1, 2))
    with pytest.raises(ShapeMismatch):
        is_member(so(6), ExactMatrix.zero(5))


def test_is_member_symplectic_signs():
    # positions meeting the antidiagonal of the form are free
    assert is_member(sp(6), elementary(6, 2, 5))
    # same-side pairs need opposite signs
    assert is_member(sp(6), ExactMatrix.from_items(6, [(1, 2, 1), (5, 6, -1)]))
    assert not is_member(sp(6), ExactMatrix.from_items(6, [(1, 2, 1), (5, 6, 1)]))
    # opposite-side pairs need equal signs
    assert is_member(sp(6), ExactMatrix.from_items(6, [(1, 4, 1), (3, 6, 1)]))
    assert not is_member(sp(6), ExactMatrix.from_items(6, [(1, 4, 1), (3, 6, -1)]))


def test_in_nilradical():
    spec = validate_spec(sp(6), (1, 2, 2, 1))
    inside = ExactMatrix.from_items(6, [(1, 2, 1), (2, 5, 1), (3, 4, 1), (5, 6, -1)])
    assert in_nilradical(spec, inside)
    assert not in_nilradical(spec, elementary(6, 1, 1))
    # member of the algebra but touching the Levi blocks
    levi_member = ExactMatrix.from_items(6, [(2, 3, 1), (4, 5, -1)])
    assert is_member(sp(6), levi_member)
    assert not in_nilradical(spec, levi_member)


def test_grade_of_entry():
    spec = validate_spec(sl(9), (3, 1, 2, 3))
    assert grade_of_entry(spec, 3, 9) == 3
    assert grade_of_entry(spec, 1, 4) == 1
    assert grade_of_entry(spec, 2, 6) == 2
    assert grade_of_entry(spec, 9, 3) == -3


@pytest.mark.parametrize("kind", [sl(2), sp(2), sp(4), sp(6), so(3), so(5), so(6), so(8)])
def test_algebra_basis(kind):
    basis = algebra_basis(kind)
    assert len(basis) == algebra_dimension(kind)
    assert all(is_member(kind, b) for b in basis)
    n = kind.size
    rows = [{(i - 1) * n + (j - 1): v for (i, j), v in b.entries.items()} for b in basis]
    assert rank_of_rows(rows) == len(basis)


@pytest.mark.parametrize("kind,blocks", [
    (sl(7), (2, 3, 2)),
    (sp(8), (1, 3, 3, 1)),
    (sp(8), (2, 1, 2, 1, 2)),
    (so(9), (2, 2, 1, 2, 2)),
    (so(8), (1, 1, 2, 2, 1, 1)),
])
def test_dimension_identity(kind, blocks):
    spec = validate_spec(kind, blocks)
    assert 2 * nilradical_dimension(spec) + levi_dimension(spec) == algebra_dimension(kind)
    assert len(nilradical_basis(spec)) == nilradical_dimension(spec)


@given(st.lists(st.integers(min_value=1, max_value=4), min_size=1, max_size=4))
@settings(max_examples=40)
def test_levi_invariant_under_half_permutations(half):
    # palindromic specs keep their Levi dimension under permutations of a half
    import itertools

    kind = sp(2 * sum(half))
    dims = set()
    for perm in itertools.permutations(half):
        spec = validate_spec(kind, tuple(perm) + tuple(reversed(perm)))
        dims.add(levi_dimension(spec))
    assert len(dims) == 1


def test_matrix_json_roundtrip():
    m = ExactMatrix.from_items(4, [(1, 2, 3), (2, 4, -1)])
    assert ExactMatrix.from_json_obj(m.to_json_obj()) == m
    assert m.to_json_obj()["entries"] == [[1, 2, 3], [2, 4, -1]]


def test_matrix_arithmetic():
    a = elementary(3, 1, 2)
    b = elementary(3, 2, 3)
    assert (a * b).entries == {(1, 3): 1}
    assert (a + a).entries == {(1, 2): 2}
    assert (a - a).is_zero
    assert a.power(2).is_zero
    assert a.commutator(b) == ExactMatrix.from_items(3, [(1, 3, 1)])
