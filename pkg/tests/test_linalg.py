"""Exact linear algebra: frozen examples plus structural properties."""

from __future__ import annotations

from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from lienil.catalog import builtin
from lienil.linalg import (
    Matrix,
    Subspace,
    char_poly,
    generalized_eigenspace,
    invert,
    is_nilpotent,
    kernel_image,
    kron,
    matrix_power,
    nilpotency_exponent,
    power_sums_from_char_poly,
    rational_eigenvalues,
    rational_roots,
    rref,
    solve,
    trace_product,
)

F = Fraction


def _sl2():
    return builtin("sl2").algebra


# --- rref / solve ------------------------------------------------------------

def test_rref_identity_is_fixed():
    m = Matrix.identity(2)
    reduced, rank = rref(m)
    assert reduced == m
    assert rank == 2


def test_rref_zero():
    m = Matrix.zero(3, 3)
    reduced, rank = rref(m)
    assert reduced == m
    assert rank == 0


def test_rref_dependent_rows():
    reduced, rank = rref(Matrix.from_rows([[2, 4], [1, 2]]))
    assert reduced == Matrix.from_rows([[1, 2], [0, 0]])
    assert rank == 1


def test_solve_identity():
    assert solve(Matrix.identity(2), (1, 2)) == (F(1), F(2))


def test_solve_inconsistent_is_none():
    assert solve(Matrix.zero(1, 1), (1,)) is None


def test_solve_free_variables_zeroed():
    x = solve(Matrix.from_rows([[1, 1], [0, 0]]), (3, 0))
    assert x == (F(3), F(0))


def test_solve_empty_system():
    assert solve(Matrix.zero(0, 0), ()) == ()


# --- kernel / image ----------------------------------------------------------

def test_kernel_image_identity():
    kernel, image = kernel_image(Matrix.identity(3))
    assert kernel.is_zero()
    assert image.is_full()


def test_kernel_image_zero_map():
    kernel, image = kernel_image(Matrix.zero(2, 2))
    assert kernel.is_full()
    assert image.is_zero()


def test_kernel_image_of_raising_adjoint():
    # ad of the raising element on sl2 in basis (e, h, f).
    sl2 = _sl2()
    ad_e = sl2.ad((1, 0, 0))
    assert ad_e == Matrix.from_rows([[0, -2, 0], [0, 0, 1], [0, 0, 0]])
    kernel, image = kernel_image(ad_e)
    assert kernel == Subspace.from_vectors(3, [[1, 0, 0]])
    assert image == Subspace.from_vectors(3, [[1, 0, 0], [0, 1, 0]])


# --- subspace lattice --------------------------------------------------------

def test_contains_zero_vector():
    assert Subspace.zero(2).contains((0, 0))


def test_contains_rejects_off_line():
    line = Subspace.from_vectors(2, [[1, 0]])
    assert not line.contains((0, 1))


def test_contains_scalar_multiple():
    assert Subspace.from_vectors(2, [[1, 2]]).contains((2, 4))


def test_sum_with_zero_is_identity():
    s = Subspace.from_vectors(3, [[1, 1, 0]])
    assert s.sum(Subspace.zero(3)) == s


def test_sum_of_transverse_lines():
    s = Subspace.from_vectors(3, [[1, 1, 0]])
    t = Subspace.from_vectors(3, [[1, -1, 0]])
    assert s.sum(t) == Subspace.from_vectors(3, [[1, 0, 0], [0, 1, 0]])


def test_intersect_with_full():
    s = Subspace.from_vectors(2, [[1, 0]])
    assert s.intersect(Subspace.full(2)) == s


def test_intersect_transverse_lines_is_zero():
    s = Subspace.from_vectors(2, [[1, 0]])
    t = Subspace.from_vectors(2, [[0, 1]])
    assert s.intersect(t).is_zero()


def test_intersect_planes():
    xy = Subspace.from_vectors(3, [[1, 0, 0], [0, 1, 0]])
    xz = Subspace.from_vectors(3, [[1, 0, 0], [0, 0, 1]])
    assert xy.intersect(xz) == Subspace.from_vectors(3, [[1, 0, 0]])


def test_coordinates_roundtrip():
    s = Subspace.from_vectors(3, [[1, 0, 2], [0, 1, -1]])
    v = (F(3), F(-2), F(8))
    coords = s.coordinates(v)
    assert coords is not None
    rebuilt = [F(0)] * 3
    for c, b in zip(coords, s.basis):
        rebuilt = [r + c * x for r, x in zip(rebuilt, b)]
    assert tuple(rebuilt) == v


# --- generalized eigenspaces -------------------------------------------------

def test_generalized_eigenspace_identity():
    assert generalized_eigenspace(Matrix.identity(2), 1).is_full()
    assert generalized_eigenspace(Matrix.identity(2), 0).is_zero()


def test_generalized_eigenspace_of_diagonal_adjoint():
    sl2 = _sl2()
    ad_h = sl2.ad((0, 1, 0))
    assert ad_h == Matrix.from_rows([[2, 0, 0], [0, 0, 0], [0, 0, -2]])
    assert generalized_eigenspace(ad_h, 2) == Subspace.from_vectors(3, [[1, 0, 0]])


def test_generalized_eigenspace_catches_jordan_block():
    jordan = Matrix.from_rows([[1, 1], [0, 1]])
    assert generalized_eigenspace(jordan, 1).is_full()
    kernel, _ = kernel_image(jordan - Matrix.identity(2))
    assert kernel.dim == 1


# --- nilpotency --------------------------------------------------------------

def test_nilpotency_of_strictly_triangular():
    m = Matrix.from_rows([[0, 1, 5], [0, 0, F(1, 2)], [0, 0, 0]])
    nilpotent, exponent = nilpotency_exponent(m)
    assert nilpotent
    assert matrix_power(m, 3).is_zero()
    assert exponent <= 4


def test_nonnilpotent_detected_by_trace():
    m = Matrix.from_rows([[0, 1], [1, 0]])  # trace 0 but trace of square is 2
    assert not is_nilpotent(m)


def test_zero_by_zero_matrix_is_nilpotent():
    assert is_nilpotent(Matrix.zero(0, 0))


def test_scaling_does_not_change_nilpotency():
    m = Matrix.from_rows([[0, F(1, 7)], [0, 0]])
    assert is_nilpotent(m)
    assert is_nilpotent(m.scaled(F(3, 5)))


# --- characteristic polynomial and power sums --------------------------------

def test_char_poly_of_companion_like():
    m = Matrix.from_rows([[2, 0], [0, 3]])
    assert char_poly(m) == (F(1), F(-5), F(6))


def test_char_poly_of_zero():
    assert char_poly(Matrix.zero(3, 3)) == (F(1), F(0), F(0), F(0))


def test_rational_roots_simple():
    # (t - 1)(t + 2)(2t - 1) = 2t^3 + t^2 - 5t + 2
    assert rational_roots([2, 1, -5, 2]) == [F(-2), F(1, 2), F(1)]


def test_rational_roots_with_zero_root():
    assert rational_roots([1, -1, 0]) == [F(0), F(1)]


def test_rational_eigenvalues_of_diagonal():
    m = Matrix.from_rows([[F(1, 2), 0], [0, -3]])
    assert rational_eigenvalues(m) == [F(-3), F(1, 2)]


def test_power_sums_match_direct_traces():
    m = Matrix.from_rows([[1, 2], [3, -1]])
    sums = power_sums_from_char_poly(char_poly(m), 6)
    for k in range(7):
        assert sums[k] == matrix_power(m, k).trace()


def test_trace_product_agrees_with_full_product():
    a = Matrix.from_rows([[1, 2], [0, F(1, 3)]])
    b = Matrix.from_rows([[-1, 4], [2, 2]])
    assert trace_product(a, b) == (a @ b).trace()


def test_kron_shapes_and_values():
    a = Matrix.from_rows([[1, 2]])
    b = Matrix.from_rows([[3], [4]])
    k = kron(a, b)
    assert (k.rows, k.cols) == (2, 2)
    assert k == Matrix.from_rows([[3, 6], [4, 8]])


def test_invert_round_trip():
    m = Matrix.from_rows([[1, 2], [3, 5]])
    inv = invert(m)
    assert inv is not None
    assert m @ inv == Matrix.identity(2)
    assert invert(Matrix.from_rows([[1, 2], [2, 4]])) is None


# --- properties --------------------------------------------------------------

small_fractions = st.fractions(
    min_value=-5, max_value=5, max_denominator=4)


def matrices(rows, cols):
    return st.lists(
        st.lists(small_fractions, min_size=cols, max_size=cols),
        min_size=rows, max_size=rows,
    ).map(Matrix.from_rows)


@given(matrices(3, 4))
def test_rref_idempotent(m):
    reduced, _ = rref(m)
    again, _ = rref(reduced)
    assert again == reduced


@given(matrices(3, 5))
def test_rank_nullity(m):
    kernel, image = kernel_image(m)
    assert kernel.dim + image.dim == m.cols


@given(matrices(2, 4), matrices(3, 4))
def test_grassmann_identity(rows_s, rows_t):
    s = Subspace.from_vectors(4, rows_s.entries)
    t = Subspace.from_vectors(4, rows_t.entries)
    union = s.sum(t)
    meet = s.intersect(t)
    assert union.dim + meet.dim == s.dim + t.dim
    assert union.contains_subspace(s) and union.contains_subspace(t)
    assert s.contains_subspace(meet) and t.contains_subspace(meet)


@given(matrices(3, 3), st.lists(small_fractions, min_size=3, max_size=3))
def test_solve_soundness(m, b):
    x = solve(m, b)
    if x is not None:
        assert m.apply(x) == tuple(F(v) for v in b)


@settings(max_examples=50)
@given(matrices(3, 3), st.sampled_from([F(0), F(1), F(-1), F(2), F(1, 2)]))
def test_generalized_eigenspace_is_invariant(m, lam):
    space = generalized_eigenspace(m, lam)
    for v in space.basis:
        assert space.contains(m.apply(v))


@given(matrices(3, 3))
def test_nilpotency_agrees_with_direct_power(m):
    assert is_nilpotent(m) == matrix_power(m, 3).is_zero()


@given(matrices(3, 3))
def test_char_poly_constant_term_vanishes_iff_singular(m):
    coeffs = char_poly(m)
    singular = kernel_image(m)[0].dim > 0
    assert (coeffs[-1] == 0) == singular
