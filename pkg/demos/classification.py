"""Classify factorizations up to strong and up to homotopy isomorphism.

A randomly disguised direct sum is reduced back to its diagonal normal
form, a morphism that is a homotopy isomorphism without being a strong one
is exhibited, and the primary label calculus (localization, suspension,
hom modules, critical ideal) runs on W = 360.
"""

import random

from smithfact import (
    ZZ,
    cone_split,
    conjugate_factorization,
    critical_decompose,
    critical_ideal_generator,
    elementary,
    elementary_morphism,
    elementary_sum,
    hmf_hom,
    is_iso,
    is_zero_object,
    localize_class,
    primary_decompose,
    strong_decompose,
    strong_iso,
    suspend_class,
)


def strong_normal_form():
    print("== strong classification ==")
    W = ZZ.from_int(36)
    a = elementary_sum(W, [ZZ.from_int(2), ZZ.from_int(3)])
    twin = conjugate_factorization(a, random.Random(7))
    print(f"disguised e_2 + e_3 over 36: v = {twin.v}")
    sd = strong_decompose(twin)
    chain = ", ".join(str(d) for d in sd.factors)
    print(f"recovered chain ({chain}), witness holds: {sd.witness_holds(twin)}")
    assert strong_iso(a, twin)


def homotopy_vs_strong():
    print()
    print("== homotopy isomorphism is coarser ==")
    W = ZZ.from_int(12)
    f = elementary_morphism(elementary(ZZ.from_int(2), W),
                            elementary(ZZ.from_int(6), W), ZZ.one)
    xi, zeta = cone_split(f)
    print(f"cone of the generator e_2 -> e_6 splits as e_{xi} + e_{zeta}")
    print(f"both zero objects, so is_iso(f) = {is_iso(f)}")
    assert is_iso(f)
    assert not strong_iso(f.source, f.target)  # 2 and 6 differ as chains
    assert is_zero_object(elementary(ZZ.one, W))


def label_calculus():
    print()
    print("== primary labels over W = 360 ==")
    W = ZZ.from_int(360)
    cd = critical_decompose(W)
    print(f"critical primes: {[(str(p), n) for p, n in cd.critical]}")

    cls = primary_decompose(elementary(ZZ.from_int(12), W), cd)
    print(f"e_12 decomposes as {cls}")
    print(f"localized at 2: {localize_class(cls, ZZ.from_int(2))}")
    print(f"suspended: {suspend_class(cls)}")

    h = hmf_hom(elementary(ZZ.from_int(2), W), elementary(ZZ.from_int(2), W))
    print(f"Hom(e_2, e_2) even part: {h.even}")
    g = critical_ideal_generator(cd)
    print(f"every hom module is killed by {g}")


def main():
    strong_normal_form()
    homotopy_vs_strong()
    label_calculus()


if __name__ == "__main__":
    main()
