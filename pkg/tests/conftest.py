import pytest

from smithfact import ZZ as Z, gf_polynomial_ring

GF2 = gf_polynomial_ring(2)
GF3 = gf_polynomial_ring(3)
GF5 = gf_polynomial_ring(5)

# Sampling bounds: |entry| <= 50 over Z, degree <= 4 over GF(p)[x].
RING_PARAMS = [
    (Z, {"int_bound": 50}),
    (GF3, {"max_degree": 4}),
    (GF5, {"max_degree": 4}),
]


@pytest.fixture(params=RING_PARAMS, ids=lambda rp: rp[0].name)
def ring_and_bounds(request):
    return request.param


def z(n: int):
    return Z.from_int(n)


def gf(ring, text: str):
    return ring.parse(text)
