"""Normal form, minor-gcd oracle, kernels, cokernel presentations."""

import random

import pytest

from smithfact import (
    PreconditionError,
    LinearSolver,
    RingMatrix,
    ValidationError,
    determinantal_invariants,
    equivalent,
    image_cokernel_invariants,
    invariant_factors_via_delta,
    kernel_basis,
    random_matrix,
    smith,
    subquotient,
)
from conftest import GF3, GF5, Z, z


def M(rows, ring=Z):
    return RingMatrix.from_rows(ring, rows)


def factors_of(a):
    return tuple(str(d) for d in smith(a).invariant_factors)


# ---------------------------------------------------------------------------
# worked examples


def test_smith_2x2_integer():
    a = M([[2, 4], [6, 8]])
    dec = smith(a)
    assert dec.verify(a)
    assert factors_of(a) == ("2", "4")


def test_smith_gf5():
    x = GF5.parse("x")
    a = RingMatrix.from_rows(GF5, [[x, x * x], [GF5.zero, x]])
    dec = smith(a)
    assert dec.verify(a)
    assert tuple(str(d) for d in dec.invariant_factors) == ("x", "x")


def test_smith_identity_and_zero():
    eye = RingMatrix.identity(Z, 3)
    dec = smith(eye)
    assert dec.verify(eye)
    assert factors_of(eye) == ("1", "1", "1")
    zero = RingMatrix.zeros(Z, 2, 3)
    dec = smith(zero)
    assert dec.rank == 0 and dec.invariant_factors == ()
    assert dec.verify(zero)


def test_smith_diagonal_with_zero():
    a = M([[3, 0, 0], [0, 6, 0], [0, 0, 0]])
    assert factors_of(a) == ("3", "6")


def test_smith_merges_coprime_diagonal():
    a = M([[2, 0], [0, 3]])
    assert factors_of(a) == ("1", "6")


def test_smith_negative_entries_canonicalized():
    a = M([[-2, 0], [0, -4]])
    assert factors_of(a) == ("2", "4")


def test_smith_regression_unit_pivot_cycle():
    # This matrix once sent the elimination into a two-state cycle: with a
    # unit pivot, non-trivial Bezout blocks for divisible pairs kept mixing
    # the pivot row back into cleared columns.  Kept as a termination guard.
    a = M([[-10, -12, -5], [-2, 1, -17], [-18, 10, 6]])
    dec = smith(a)
    assert dec.verify(a)
    assert factors_of(a) == ("1", "1", "5566")
    assert invariant_factors_via_delta(a) == dec.invariant_factors


def test_minor_oracle_examples():
    a = M([[2, 4], [6, 8]])
    inv = determinantal_invariants(a)
    assert inv.from_minors
    # delta_1 = gcd of entries = 2, delta_2 = |det| = 8
    assert tuple(str(d) for d in inv.delta) == ("1", "2", "8")
    assert tuple(str(d) for d in invariant_factors_via_delta(a)) == ("2", "4")
    assert invariant_factors_via_delta(a) == smith(a).invariant_factors


def test_minor_oracle_falls_back_above_cap():
    rng = random.Random(3)
    a = random_matrix(Z, rng, 6, 6, int_bound=4)
    inv = determinantal_invariants(a)
    assert not inv.from_minors
    assert invariant_factors_via_delta(a) == smith(a).invariant_factors


# ---------------------------------------------------------------------------
# equivalence


def test_equivalent_examples():
    assert not equivalent(M([[2, 0], [0, 4]]), M([[1, 0], [0, 8]]))
    assert equivalent(M([[2, 0], [0, 3]]), M([[1, 0], [0, 6]]))
    with pytest.raises(ValidationError):
        equivalent(M([[1]]), M([[1, 0]]))


# ---------------------------------------------------------------------------
# kernels


def test_kernel_examples():
    # injective map: trivial kernel
    a = M([[2]])
    assert kernel_basis(a).shape == (1, 0)
    # row (1 1): kernel spanned by (1, -1) up to sign
    a = M([[1, 1]])
    k = kernel_basis(a)
    assert k.shape == (2, 1)
    assert (a @ k).is_zero
    assert not k.column(0) == (Z.zero, Z.zero)
    # zero map: full kernel
    a = RingMatrix.zeros(Z, 2, 2)
    k = kernel_basis(a)
    assert k.shape == (2, 2) and k.is_unit_determinant()


def test_kernel_columns_annihilate(ring_and_bounds):
    ring, bounds = ring_and_bounds
    rng = random.Random(11)
    for _ in range(25):
        a = random_matrix(ring, rng, rng.randint(1, 4), rng.randint(1, 4), **bounds)
        k = kernel_basis(a)
        assert (a @ k).is_zero
        assert k.shape == (a.cols, a.cols - smith(a).rank)


# ---------------------------------------------------------------------------
# linear systems


def test_linear_solver_matrix():
    a = M([[2, 0], [0, 3]])
    b = M([[4], [9]])
    x = LinearSolver(a).solve_matrix(b)
    assert x is not None and a @ x == b


def test_linear_solver_no_solution():
    a = M([[2]])
    b = M([[3]])
    assert LinearSolver(a).solve_matrix(b) is None


def test_linear_solver_vector():
    a = M([[1, 2], [3, 4]])
    sol = LinearSolver(a).solve_vector([z(5), z(11)])
    assert sol is not None
    assert a @ RingMatrix(Z, 2, 1, sol) == M([[5], [11]])


# ---------------------------------------------------------------------------
# cokernel presentations


def test_image_cokernel():
    m = image_cokernel_invariants(M([[2, 0], [0, 3]]))
    assert str(m) in ("R/(6)", "Z/6") or m.torsion_factors == (z(6),)
    m = image_cokernel_invariants(M([[1, 0], [0, 1]]))
    assert m.is_zero
    m = image_cokernel_invariants(RingMatrix.zeros(Z, 2, 2))
    assert m.free_rank == 2 and m.torsion_factors == ()


def test_subquotient_smoke():
    # ker(0)/im(diag(2,3)) = Z^2 / (2Z + 3Z) = Z/6 after merging
    outer = RingMatrix.zeros(Z, 2, 2)
    inner = M([[2, 0], [0, 3]])
    sq = subquotient(outer, inner)
    assert sq.invariants.torsion_factors == (z(6),)
    assert sq.invariants.free_rank == 0


def test_subquotient_precondition():
    with pytest.raises(PreconditionError):
        subquotient(RingMatrix.identity(Z, 2), M([[2, 0], [0, 3]]))


# ---------------------------------------------------------------------------
# randomized agreement with the minor oracle


def test_random_smith_vs_minor_oracle(ring_and_bounds):
    ring, bounds = ring_and_bounds
    rng = random.Random(23)
    for _ in range(60):
        rows, cols = rng.randint(1, 5), rng.randint(1, 5)
        a = random_matrix(ring, rng, rows, cols, **bounds)
        dec = smith(a)
        assert dec.verify(a)
        oracle = invariant_factors_via_delta(a)
        assert dec.invariant_factors == oracle
