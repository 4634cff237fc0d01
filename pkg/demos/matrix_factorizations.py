"""Matrix factorizations of a potential W: pairs (u, v) with uv = vu = W.

Builds elementary one-by-one factorizations, sums and suspensions, then a
morphism, its cone, and the exact triangle around it.
"""

from smithfact import (
    ZZ,
    cone,
    cone_triangle,
    compose,
    direct_sum,
    elementary,
    elementary_morphism,
    identity_morphism,
    is_null_homotopic,
    null_homotopy_witness,
    suspension,
)

W = ZZ.from_int(12)


def build_objects():
    print("== objects over W = 12 ==")
    a = elementary(ZZ.from_int(2), W)
    print(f"e_2: v = {a.v}, u = {a.u}, rank {a.rho}")
    d = a.differential()
    print(f"differential squares to W: d@d = {d @ d}")

    s = suspension(a)
    print(f"suspension swaps and negates: v = {s.v}, u = {s.u}")
    assert suspension(s).v == a.v  # involution on the nose

    both = direct_sum(a, elementary(ZZ.from_int(3), W))
    print(f"e_2 + e_3: v = {both.v}")
    return a


def build_morphisms(a):
    print()
    print("== morphisms ==")
    b = elementary(ZZ.from_int(6), W)
    f = elementary_morphism(a, b, ZZ.one)
    print(f"generator e_2 -> e_6: f00 = {f.f00}, f11 = {f.f11}")
    assert compose(f, identity_morphism(a)).f00 == f.f00

    # 2*id on e_2 over W = 4 bounds: the witness (s01, s10) satisfies
    # v s10 + s01 u = f00 and u s01 + s10 v = f11
    small = elementary(ZZ.from_int(2), ZZ.from_int(4))
    doubled = elementary_morphism(small, small, ZZ.from_int(2))
    wit = null_homotopy_witness(doubled)
    print(f"2*id on e_2 over 4 is null-homotopic, "
          f"witness s01 = {wit[0]}, s10 = {wit[1]}")
    assert not is_null_homotopic(identity_morphism(small))
    return f


def build_cone(f):
    print()
    print("== cone and triangle ==")
    c = cone(f)
    print(f"cone blocks: u = {c.u}")
    print(f"             v = {c.v}")

    tri = cone_triangle(f)
    zero = compose(tri.psi, tri.phi)
    print(f"psi o phi = ({zero.f00}, {zero.f11})  (exactly zero)")
    assert is_null_homotopic(compose(tri.phi, f))
    print("phi o f is null-homotopic: the triangle commutes up to homotopy")


def main():
    a = build_objects()
    f = build_morphisms(a)
    build_cone(f)


if __name__ == "__main__":
    main()
