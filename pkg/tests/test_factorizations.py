"""Matrix factorizations, morphisms, homotopies, cones."""

import pytest

from smithfact import (
    MatrixFactorization,
    MfMorphism,
    PreconditionError,
    RingMatrix,
    ValidationError,
    compose,
    cone,
    cone_triangle,
    direct_sum,
    elementary,
    elementary_morphism,
    identity_morphism,
    is_cocycle,
    is_null_homotopic,
    null_homotopy_witness,
    scale_potential,
    strong_iso,
    suspend_morphism,
    suspension,
    zero_morphism,
)
from conftest import GF3, Z, z


def zmat(rows):
    return RingMatrix.from_rows(Z, rows)


def e(v, W):
    return elementary(z(v), z(W))


# ---------------------------------------------------------------------------
# construction


def test_constructor_accepts_factorization():
    a = MatrixFactorization(z(12), zmat([[6]]), zmat([[2]]))
    assert a.rho == 1
    assert a.W == z(12)


def test_constructor_rejects_wrong_product():
    with pytest.raises(ValidationError):
        MatrixFactorization(z(5), zmat([[2]]), zmat([[2]]))


def test_constructor_rho_two():
    u = zmat([[0, 3], [4, 0]])
    v = zmat([[0, 3], [4, 0]])
    a = MatrixFactorization(z(12), u, v)
    assert a.rho == 2
    d = a.differential()
    assert d.shape == (4, 4)
    assert d @ d == RingMatrix.identity(Z, 4).scale(z(12))


def test_constructor_rejects_zero_W():
    with pytest.raises(ValidationError):
        MatrixFactorization(Z.zero, zmat([[0]]), zmat([[0]]))


def test_rank_zero_object():
    a = MatrixFactorization(z(12), RingMatrix.zeros(Z, 0, 0),
                            RingMatrix.zeros(Z, 0, 0))
    assert a.rho == 0
    assert suspension(a).rho == 0


def test_elementary():
    a = e(2, 12)
    assert a.is_elementary
    assert a.v_scalar() == z(2) and a.u_scalar() == z(6)
    assert e(1, 12).u_scalar() == z(12)
    assert e(12, 12).u_scalar() == z(1)


def test_elementary_requires_divisor():
    with pytest.raises(PreconditionError):
        e(5, 12)


# ---------------------------------------------------------------------------
# suspension


def test_suspension_flips_and_negates():
    s = suspension(e(2, 12))
    assert s.v_scalar() == z(-6) and s.u_scalar() == z(-2)


def test_suspension_involution():
    a = e(2, 12)
    assert suspension(suspension(a)) == a


# ---------------------------------------------------------------------------
# sums and rescaling


def test_direct_sum_blocks():
    s = direct_sum(e(2, 12), e(3, 12))
    assert s.rho == 2
    assert s.v == zmat([[2, 0], [0, 3]])
    assert s.u == zmat([[6, 0], [0, 4]])


def test_direct_sum_requires_same_W():
    with pytest.raises(ValidationError):
        direct_sum(e(2, 12), e(2, 4))


def test_scale_potential_unit():
    a = scale_potential(e(2, 12), z(-1))
    assert a.W == z(-12)
    assert a.v_scalar() == z(-2) and a.u_scalar() == z(6)
    with pytest.raises(PreconditionError):
        scale_potential(e(2, 12), z(2))


def test_scale_potential_gf():
    x = GF3.parse("x")
    a = elementary(x, x * x)
    b = scale_potential(a, GF3.from_int(2))
    assert b.W == GF3.parse("2*x^2")
    assert b.v_scalar() == GF3.parse("2*x")


# ---------------------------------------------------------------------------
# morphisms


def test_elementary_morphism_generator():
    f = elementary_morphism(e(2, 12), e(6, 12), z(1))
    assert is_cocycle(f)
    assert f.f00 == zmat([[3]]) and f.f11 == zmat([[1]])


def test_elementary_morphism_zero_scalar():
    f = elementary_morphism(e(2, 12), e(6, 12), Z.zero)
    assert f.f00.is_zero and f.f11.is_zero


def test_elementary_morphism_identity():
    a = e(4, 12)
    f = elementary_morphism(a, a, z(1))
    assert f == identity_morphism(a)


def test_morphism_cocycle_validation():
    a, b = e(2, 12), e(3, 12)
    with pytest.raises(ValidationError):
        MfMorphism(a, b, zmat([[1]]), zmat([[1]]))


def test_compose():
    a, b, c = e(2, 12), e(6, 12), e(2, 12)
    f = elementary_morphism(a, b, z(1))
    g = elementary_morphism(b, c, z(1))
    gf = compose(g, f)
    assert is_cocycle(gf)
    # generator composites: (1*3, 3*1) scaled by gcd bookkeeping
    assert gf.f00 == g.f00 @ f.f00


def test_suspend_morphism():
    f = elementary_morphism(e(2, 12), e(6, 12), z(1))
    sf = suspend_morphism(f)
    assert is_cocycle(sf)
    assert sf.source == suspension(f.source)
    assert sf.f00 == f.f11 and sf.f11 == f.f00


# ---------------------------------------------------------------------------
# null homotopies


def test_null_homotopy_multiple_of_u():
    # f = 2 * id on e_2 over W = 4: f00 = v*s10 + s01*u with s01 + s10 = 1
    a = elementary(z(2), z(4))
    f = elementary_morphism(a, a, z(2))
    w = null_homotopy_witness(f)
    assert w is not None
    s01, s10 = w
    assert a.v @ s10 + s01 @ a.u == f.f00
    assert a.u @ s01 + s10 @ a.v == f.f11


def test_zero_morphism_null_homotopic():
    f = zero_morphism(e(2, 12), e(3, 12))
    w = null_homotopy_witness(f)
    assert w is not None
    s01, s10 = w
    assert s01.is_zero and s10.is_zero


def test_identity_is_essential_on_nonzero_object():
    a = elementary(z(2), z(4))
    assert not is_null_homotopic(identity_morphism(a))


def test_identity_null_homotopic_on_zero_object():
    # gcd(2, 3) = 1 makes e_2 over 6 a zero object of the homotopy category
    a = elementary(z(2), z(6))
    assert is_null_homotopic(identity_morphism(a))


# ---------------------------------------------------------------------------
# cones


def test_cone_blocks():
    f = elementary_morphism(e(2, 12), e(6, 12), z(1))
    c = cone(f)
    assert c.rho == 2
    assert c.u == zmat([[-2, 0], [1, 2]])
    assert c.v == zmat([[-6, 0], [3, 6]])


def test_cone_of_zero_is_suspension_plus_target():
    p = 3
    a = elementary(z(p), z(p * p))
    c = cone(zero_morphism(a, a))
    assert strong_iso(c, direct_sum(suspension(a), a))


def test_cone_triangle_structure():
    f = elementary_morphism(e(2, 12), e(6, 12), z(1))
    t = cone_triangle(f)
    assert t.cone == cone(f)
    assert is_cocycle(t.phi) and is_cocycle(t.psi)
    # psi . phi = 0 on the nose
    assert compose(t.psi, t.phi).f00.is_zero
    # phi . f is killed by the cone inclusion homotopy
    assert is_null_homotopic(compose(t.phi, f))
    # Sigma f . psi is null-homotopic as well
    sf = suspend_morphism(f)
    assert is_null_homotopic(compose(sf, t.psi))
