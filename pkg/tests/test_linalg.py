import itertools

import pytest
from fractions import Fraction
from hypothesis import given, settings, strategies as st

from cosseq.linalg import (
    F2,
    F3,
    RATIONALS,
    ContainmentError,
    DimensionMismatchError,
    FieldMismatchError,
    FieldSpec,
    Matrix,
    SpanSolver,
    Subspace,
    image,
    intersect_subspaces,
    kernel_basis,
    membership,
    parse_field,
    preimage,
    quotient,
    rref,
    split_sum,
    sum_subspaces,
)

FIELDS = [F2, F3, RATIONALS]


def field_strategy():
    return st.sampled_from(FIELDS)


def small_matrix(field, max_dim=4):
    dims = st.integers(min_value=1, max_value=max_dim)
    if field.char == 0:
        elems = st.integers(min_value=-3, max_value=3).map(Fraction)
    else:
        elems = st.integers(min_value=0, max_value=field.char - 1)
    return dims.flatmap(
        lambda r: dims.flatmap(
            lambda c: st.lists(
                st.lists(elems, min_size=c, max_size=c), min_size=r, max_size=r
            ).map(lambda rows: Matrix.from_rows(field, rows))
        )
    )


def test_field_parse_and_primality():
    assert parse_field("F2") == F2
    assert parse_field("Q") == RATIONALS
    with pytest.raises(ValueError):
        parse_field("F4")
    with pytest.raises(ValueError):
        FieldSpec.prime(6)


def test_field_coercion_and_mismatch():
    assert F3.coerce(Fraction(1, 2)) == 2  # 1/2 = 2 mod 3
    assert RATIONALS.coerce("2/4") == Fraction(1, 2)
    with pytest.raises(FieldMismatchError):
        F2.coerce(Fraction(1, 2))
    with pytest.raises(FieldMismatchError):
        Matrix.identity(F2, 2) @ Matrix.identity(F3, 2)


def test_rref_identity_f2():
    res = rref(Matrix.identity(F2, 2))
    assert res.rank == 2
    assert res.pivots == (0, 1)
    assert res.reduced == Matrix.identity(F2, 2)


def test_rref_zero_matrix():
    res = rref(Matrix.zero(F3, 3, 3))
    assert res.rank == 0
    assert res.pivots == ()


def test_rref_rank_one_rational():
    # hand row-reduction: [[1,2],[2,4]] -> [[1,2],[0,0]]
    m = Matrix.from_rows(RATIONALS, [[1, 2], [2, 4]])
    res = rref(m)
    assert res.rank == 1
    assert res.reduced.dense_rows() == [[Fraction(1), Fraction(2)], [Fraction(0), Fraction(0)]]


def test_kernel_identity_is_zero():
    assert kernel_basis(Matrix.identity(F2, 3)).dim == 0


def test_kernel_zero_map_is_full():
    assert kernel_basis(Matrix.zero(F2, 1, 3)).dim == 3


def test_kernel_f2_line():
    # oracle: enumerate all 4 vectors of F_2^2
    m = Matrix.from_rows(F2, [[1, 1]])
    expected = [v for v in itertools.product(range(2), repeat=2) if sum(v) % 2 == 0 and any(v)]
    ker = kernel_basis(m)
    assert ker.dim == 1
    assert all(ker.contains_vector(v) for v in expected)


def test_quotient_trivial_and_symmetric():
    full = Subspace.full(F2, 2)
    assert quotient(full, full).dim == 0
    line = Subspace.from_vectors(F2, 2, [(1, 0)])
    q = quotient(full, line)
    assert q.dim == 1


def test_quotient_rational_rank_nullity():
    amb = Subspace.full(RATIONALS, 3)
    den = Subspace.from_vectors(RATIONALS, 3, [(1, 1, 0), (0, 0, 1)])
    q = quotient(amb, den)
    assert q.dim == amb.dim - den.dim == 1
    for d in den.basis:
        assert not any(q.project(d))


def test_quotient_containment_error():
    amb = Subspace.from_vectors(RATIONALS, 3, [(1, 0, 0)])
    den = Subspace.from_vectors(RATIONALS, 3, [(0, 1, 0)])
    with pytest.raises(ContainmentError):
        quotient(amb, den)


def test_membership_examples():
    s = Subspace.from_vectors(RATIONALS, 3, [(1, 0, 0), (0, 1, 0)])
    assert membership((Fraction(0),) * 3, s) == (Fraction(0), Fraction(0))
    assert membership(s.basis[0], s) == (Fraction(1), Fraction(0))
    # (1,1,1) not in the xy-plane: the z-coordinate cannot be matched
    assert membership((Fraction(1), Fraction(1), Fraction(1)), s) is None
    with pytest.raises(DimensionMismatchError):
        membership((Fraction(1),), s)


def test_matrix_json_roundtrip():
    m = Matrix.from_rows(RATIONALS, [[Fraction(1, 2), 0], [0, -2]])
    data = m.to_json()
    assert data["field"] == "Q"
    assert [0, 0, "1/2"] in data["entries"]
    assert Matrix.from_json(data) == m


def test_span_solver_expresses_dependent_generators():
    rows = [(1, 0, 1), (0, 1, 1), (1, 1, 2)]
    solver = SpanSolver(RATIONALS, 3, [tuple(map(Fraction, r)) for r in rows])
    coeffs = solver.express((Fraction(2), Fraction(1), Fraction(3)))
    assert coeffs is not None
    total = [sum(c * r for c, r in zip(coeffs, col)) for col in zip(*rows)]
    assert total == [2, 1, 3]
    assert solver.express((Fraction(0), Fraction(0), Fraction(1))) is None


def test_split_sum():
    a = Subspace.from_vectors(RATIONALS, 3, [(1, 0, 0)])
    b = Subspace.from_vectors(RATIONALS, 3, [(1, 1, 0)])
    x, y = split_sum((Fraction(3), Fraction(2), Fraction(0)), a, b)
    assert a.contains_vector(x) and b.contains_vector(y)
    assert tuple(map(Fraction, (3, 2, 0))) == tuple(xi + yi for xi, yi in zip(x, y))


@settings(max_examples=80, deadline=None)
@given(field_strategy().flatmap(small_matrix))
def test_rank_nullity(m):
    assert kernel_basis(m).dim + rref(m).rank == m.cols


@settings(max_examples=80, deadline=None)
@given(field_strategy().flatmap(small_matrix))
def test_rref_idempotent(m):
    res = rref(m)
    again = rref(res.reduced)
    assert again.reduced == res.reduced
    assert again.rank == res.rank


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([F2, F3]).flatmap(lambda f: small_matrix(f, max_dim=4)))
def test_kernel_matches_enumeration(m):
    # exhaustive oracle over all vectors of F_p^cols
    field = m.field
    ker = kernel_basis(m)
    members = 0
    for v in itertools.product(field.elements(), repeat=m.cols):
        if all(x == field.zero for x in m.apply(v)):
            members += 1
            assert ker.contains_vector(v)
    assert field.char ** ker.dim == members


@settings(max_examples=60, deadline=None)
@given(field_strategy().flatmap(lambda f: st.tuples(small_matrix(f), small_matrix(f))))
def test_sum_intersection_dimension_formula(pair):
    m1, m2 = pair
    if m1.rows != m2.rows:
        m2 = Matrix.from_rows(m2.field, [row[: m1.cols] for row in m1.dense_rows()])
    a, b = image(m1), image(m2)
    s = sum_subspaces(a, b)
    i = intersect_subspaces(a, b)
    assert s.dim + i.dim == a.dim + b.dim
    assert s.contains_subspace(a) and s.contains_subspace(b)
    assert a.contains_subspace(i) and b.contains_subspace(i)


@settings(max_examples=60, deadline=None)
@given(field_strategy().flatmap(small_matrix))
def test_preimage_property(m):
    target = image(m)
    # preimage of the full image is everything
    assert preimage(m, target).dim == m.cols
    zero = Subspace.zero(m.field, m.rows)
    assert preimage(m, zero).dim == kernel_basis(m).dim


@settings(max_examples=50, deadline=None)
@given(field_strategy().flatmap(small_matrix))
def test_quotient_dims_and_projection(m):
    amb = Subspace.full(m.field, m.cols)
    den = kernel_basis(m)
    q = quotient(amb, den)
    assert q.dim + den.dim == amb.dim
    for d in den.basis:
        assert not any(q.project(d))
    for rep in q.coset_reps:
        assert q.project(rep) == rep


def _force_sparse(m: Matrix) -> Matrix:
    wide = Matrix(m.field, m.rows, 70)
    for (r, c), v in m.entries():
        wide[r, c] = v
    return wide


@settings(max_examples=40, deadline=None)
@given(field_strategy().flatmap(small_matrix))
def test_dense_and_sparse_rref_agree(m):
    # pad with zero columns to push the same data through the sparse path
    wide = _force_sparse(m)
    res_d = rref(m)
    res_s = rref(wide)
    assert res_d.rank == res_s.rank
    assert res_d.pivots == res_s.pivots
    for (r, c), v in res_d.reduced.entries():
        assert res_s.reduced[r, c] == v
