import random

import pytest

from khcob.rings import QQ, ZHT, ZZ, H, Poly, RingError, T, specialize


def test_poly_normal_form():
    p = H * H + 4 * T
    assert p.terms == (((0, 1), 4), ((2, 0), 1))
    assert p - p == Poly.const(0)
    assert not (p - p)
    assert str(p) == "h^2 + 4*t"
    assert str(Poly.const(0)) == "0"
    assert str(2 * (H**2 + 4 * T)) == "2*h^2 + 8*t"
    assert str(H - T) == "h - t"


def test_specialize_examples():
    p = H * H + 4 * T
    assert specialize(p, 1, 0, ZZ) == 1
    assert specialize(2 * p, 0, 0, ZZ) == 0
    assert specialize(p, 0, 1, ZZ) == 4


def test_specialize_mismatch():
    with pytest.raises(RingError):
        specialize(H, 1, QQ.one(), ZZ)


def test_is_unit():
    assert ZZ.is_unit(1) and ZZ.inverse(1) == 1
    assert ZZ.is_unit(-1) and ZZ.inverse(-1) == -1
    assert not ZZ.is_unit(2)
    assert QQ.is_unit(QQ.from_int(2)) and QQ.inverse(QQ.from_int(2)) * 2 == 1
    assert not QQ.is_unit(QQ.zero())
    assert ZHT.is_unit(Poly.const(-1))
    assert not ZHT.is_unit(H)


@pytest.mark.parametrize("ring", [ZZ, QQ, ZHT])
def test_ring_axioms_randomized(ring):
    rng = random.Random(20240517)
    for _ in range(1000):
        x = ring.random_element(rng)
        y = ring.random_element(rng)
        z = ring.random_element(rng)
        assert ring.eq((x + y) + z, x + (y + z))
        assert ring.eq((x * y) * z, x * (y * z))
        assert ring.eq(x * y, y * x)
        assert ring.eq(x + y, y + x)
        assert ring.eq(x * (y + z), x * y + x * z)
        assert ring.eq(x + ring.zero(), x)
        assert ring.eq(x * ring.one(), x)


def test_specialize_is_homomorphism():
    rng = random.Random(99)
    for _ in range(300):
        p = ZHT.random_element(rng)
        q = ZHT.random_element(rng)
        for (hv, tv, tgt) in [(1, 0, ZZ), (0, 1, ZZ), (2, -3, ZZ)]:
            sp = lambda r: specialize(r, hv, tv, tgt)
            assert sp(p + q) == sp(p) + sp(q)
            assert sp(p * q) == sp(p) * sp(q)


def test_poly_serialization_round_trip():
    p = 2 * H**2 + 8 * T - H * T
    assert Poly.from_obj(p.to_obj()) == p
    assert p.to_obj() == [[0, 1, 8], [1, 1, -1], [2, 0, 2]]
