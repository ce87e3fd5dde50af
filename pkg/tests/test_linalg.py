from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hopfcat.linalg import (LinMap, NotInvertible, TensorIndex, invert, kron,
                            rank, rank_kernel, solve, swap_map)
from hopfcat.scalars import GF, QQ, FieldMismatchError


def qmat(rows):
    return LinMap(QQ, len(rows), len(rows[0]) if rows else 0,
                  [[Fraction(v) for v in r] for r in rows])


# -- frozen hand-worked cases ------------------------------------------------------

def test_rank_kernel_identity():
    r, basis = rank_kernel(LinMap.identity(QQ, 3))
    assert r == 3 and basis == []


def test_rank_kernel_zero_map():
    r, basis = rank_kernel(LinMap.zero(QQ, 2, 3))
    assert r == 0
    assert basis == [(1, 0, 0), (0, 1, 0), (0, 0, 1)]


def test_rank_kernel_rank_one():
    # rows (1,2) and (2,4): kernel spanned by (-2,1), echelon-normalized
    r, basis = rank_kernel(qmat([[1, 2], [2, 4]]))
    assert r == 1
    assert basis == [(Fraction(1), Fraction(-1, 2))]


def test_invert_identity_and_involution():
    assert invert(LinMap.identity(QQ, 4)) == LinMap.identity(QQ, 4)
    s = qmat([[0, 1], [1, 0]])
    assert invert(s) == s


def test_invert_unipotent():
    assert invert(qmat([[1, 1], [0, 1]])) == qmat([[1, -1], [0, 1]])


def test_invert_failures_carry_rank():
    out = invert(qmat([[1, 2], [2, 4]]))
    assert isinstance(out, NotInvertible) and out.rank == 1
    out = invert(LinMap.zero(QQ, 2, 3))
    assert isinstance(out, NotInvertible)


def test_kron_frozen():
    assert kron(LinMap.identity(QQ, 2), LinMap.identity(QQ, 3)) \
        == LinMap.identity(QQ, 6)
    f = qmat([[1, 2], [3, 4]])
    assert kron(f, LinMap.identity(QQ, 1)) == f
    assert kron(qmat([[2]]), qmat([[3]])) == qmat([[6]])


def test_kron_indexing_convention():
    # leftmost factor slowest: (f⊗g)[(i,k),(j,l)] = f[i,j] g[k,l]
    f = qmat([[1, 2], [3, 4]])
    g = qmat([[5, 6], [7, 8]])
    fg = kron(f, g)
    ti = TensorIndex((2, 2))
    for i in range(2):
        for j in range(2):
            for k in range(2):
                for l in range(2):
                    assert fg.entries[ti.flatten((i, k))][ti.flatten((j, l))] \
                        == f.entries[i][j] * g.entries[k][l]


def test_field_mismatch_rejected():
    with pytest.raises(FieldMismatchError):
        LinMap.identity(QQ, 2) @ LinMap.identity(GF(5), 2)
    with pytest.raises(FieldMismatchError):
        kron(LinMap.identity(QQ, 2), LinMap.identity(GF(5), 2))


def test_compose_needs_matching_inner_dims():
    with pytest.raises(ValueError):
        LinMap.identity(QQ, 2) @ LinMap.identity(QQ, 3)
    with pytest.raises(ValueError):
        LinMap.zero(QQ, 2, 2) + LinMap.zero(QQ, 2, 3)


def test_swap_map_is_flip():
    s = swap_map(QQ, 2, 3)
    ti = TensorIndex((2, 3))
    to = TensorIndex((3, 2))
    for i in range(2):
        for k in range(3):
            col = s.col(ti.flatten((i, k)))
            assert col[to.flatten((k, i))] == 1
            assert sum(1 for v in col if v) == 1
    assert swap_map(QQ, 3, 2) @ s == LinMap.identity(QQ, 6)


def test_solve_exact_and_inconsistent():
    a = qmat([[1, 0], [0, 1], [1, 1]])
    b = qmat([[1], [2], [3]])
    x = solve(a, b)
    assert x is not None and a @ x == b
    assert solve(a, qmat([[1], [2], [4]])) is None


# -- tensor index ----------------------------------------------------------------

def test_tensor_index_roundtrip_exhaustive():
    ti = TensorIndex((2, 3, 4))
    seen = set()
    for multi in ti:
        flat = ti.flatten(multi)
        assert ti.unflatten(flat) == multi
        seen.add(flat)
    assert seen == set(range(24))


def test_tensor_index_bounds():
    ti = TensorIndex((2, 2))
    with pytest.raises(ValueError):
        ti.flatten((2, 0))
    with pytest.raises(ValueError):
        ti.unflatten(4)


# -- hypothesis properties ---------------------------------------------------------

small_fraction = st.fractions(min_value=-4, max_value=4, max_denominator=4)


def matrices(field, rows, cols):
    if field is QQ:
        elem = small_fraction
    else:
        elem = st.integers(min_value=0, max_value=4).map(field.of)
    return st.lists(st.lists(elem, min_size=cols, max_size=cols),
                    min_size=rows, max_size=rows) \
        .map(lambda e: LinMap(field, rows, cols, e))


@settings(max_examples=60)
@given(st.integers(min_value=0, max_value=3).flatmap(
    lambda n: matrices(QQ, n, n)))
def test_invert_iff_full_rank(f):
    out = invert(f)
    if isinstance(out, NotInvertible):
        assert rank(f) < f.rows
    else:
        assert rank(f) == f.rows
        assert f @ out == LinMap.identity(QQ, f.rows)
        assert out @ f == LinMap.identity(QQ, f.rows)


@settings(max_examples=40)
@given(matrices(QQ, 2, 2), matrices(QQ, 2, 2), matrices(GF(5), 2, 3),
       matrices(GF(5), 3, 2))
def test_mixed_product_identity(f, fp, g, gp):
    # over each field separately: (f∘f')⊗(g∘g') = (f⊗g)∘(f'⊗g')
    assert kron(f @ fp, f @ fp) == kron(f, f) @ kron(fp, fp)
    assert kron(g @ gp, g @ gp) == kron(g, g) @ kron(gp, gp)


@settings(max_examples=40)
@given(matrices(QQ, 2, 1), matrices(QQ, 1, 2), matrices(QQ, 2, 2))
def test_kron_associative_on_entries(a, b, c):
    assert kron(kron(a, b), c) == kron(a, kron(b, c))


@settings(max_examples=40)
@given(st.integers(min_value=0, max_value=3).flatmap(
    lambda n: matrices(QQ, n, n)))
def test_rank_kernel_exactness(f):
    r, basis = rank_kernel(f)
    assert r + len(basis) == f.cols
    for v in basis:
        assert not any(f.apply(list(v)))
    # canonical: echelon, leading ones at increasing positions
    leads = []
    for v in basis:
        nz = [i for i, c in enumerate(v) if c]
        assert v[nz[0]] == 1
        leads.append(nz[0])
    assert leads == sorted(leads)
