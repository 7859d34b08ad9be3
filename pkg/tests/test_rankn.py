"""Higher-rank towers: defining-data verification, monomial products, and
the conjugation-twist constructor."""

from fractions import Fraction

import pytest

from diskew.endos import RingEndo
from diskew.errors import ThetaNotCommuting, UnsupportedFamily
from diskew.fields import QQ
from diskew.gwa import verify_gwa_data
from diskew.rankn import (
    MultiMonomial,
    RankNData,
    build_from_theta,
    element_to_monomial,
    monomial_to_element,
    multi_mul,
    verify_rankn,
)
from diskew.rings import PolyRing, SkewPolyRing


def random_monomial(data, rng):
    coeff = data.ring.random_element(rng, 2)
    while coeff.is_zero():
        coeff = data.ring.random_element(rng, 2)
    alpha = tuple(rng.randint(-2, 2) for _ in range(data.n))
    return MultiMonomial(coeff, alpha)


def test_verify_rank2_weyl(rank2_weyl, rng):
    assert verify_rankn(rank2_weyl.rankn, rng).ok


def test_tower_levels(rank2_weyl, rng):
    data = rank2_weyl.rankn
    levels = data.tower()
    assert len(levels) == 2
    for level in levels:
        assert verify_gwa_data(level.data, rng).ok
    # the two index pairs commute in the rank-2 Weyl algebra
    top = data.top()
    gens = top.gens()
    assert gens["x2"] * gens["x1"] == gens["x1"] * gens["x2"]
    assert gens["y2"] * gens["x1"] == gens["x1"] * gens["y2"]
    # within one index the Weyl relation survives
    assert gens["x1"] * gens["y1"] - gens["y1"] * gens["x1"] == top.from_scalar(
        Fraction(-1)
    )


def test_monomial_roundtrip(rank2_weyl, rng):
    data = rank2_weyl.rankn
    for _ in range(20):
        m = random_monomial(data, rng)
        assert element_to_monomial(data, monomial_to_element(data, m)) == m


def test_multi_mul_matches_tower(rank2_weyl, rng):
    data = rank2_weyl.rankn
    for _ in range(25):
        u = random_monomial(data, rng)
        v = random_monomial(data, rng)
        w = multi_mul(data, u, v)
        assert monomial_to_element(data, w) == monomial_to_element(
            data, u
        ) * monomial_to_element(data, v)


def test_multi_mul_associativity(rank2_weyl, rng):
    data = rank2_weyl.rankn
    for _ in range(30):
        u = random_monomial(data, rng)
        v = random_monomial(data, rng)
        w = random_monomial(data, rng)
        assert multi_mul(data, multi_mul(data, u, v), w) == multi_mul(
            data, u, multi_mul(data, v, w)
        )


def test_missing_coefficient_rejected(rank2_weyl):
    d = rank2_weyl.rankn
    coeffs = {k: dict(v) for k, v in d.coeffs.items()}
    del coeffs["mu"][(2, 1)]
    with pytest.raises(UnsupportedFamily):
        RankNData(d.ring, d.sigmas, d.taus, d.a_list, coeffs)


def test_perturbation_is_caught(rank2_weyl, rng):
    d = rank2_weyl.rankn
    coeffs = {k: dict(v) for k, v in d.coeffs.items()}
    coeffs["lam"][(2, 1)] = d.ring.from_int(2)
    bad = RankNData(d.ring, d.sigmas, d.taus, d.a_list, coeffs)
    report = verify_rankn(bad, rng)
    assert not report.ok
    assert "C4[2,1]" in [c.name for c in report.failures()]


def test_build_from_theta_commutative(rng):
    ring = PolyRing(QQ, ("H1", "H2"))
    H1, H2 = ring.gen("H1"), ring.gen("H2")
    th1 = RingEndo(ring, {"H1": H1 - 1, "H2": H2})
    th2 = RingEndo(ring, {"H1": H1, "H2": H2 - 1})
    data = build_from_theta(ring, [th1, th2], [ring.one(), ring.one()], [H1, H2])
    assert verify_rankn(data, rng).ok
    assert data.a_list == [H1, H2]
    for key in ("lam", "lamp", "mu", "mup"):
        assert data.coeff(key, 2, 1) == ring.one()


def test_build_from_theta_rejects_noncommuting():
    ring = PolyRing(QQ, ("H",))
    H = ring.gen("H")
    th1 = RingEndo(ring, {"H": H - 1})
    th2 = RingEndo(ring, {"H": 2 * H})
    with pytest.raises(ThetaNotCommuting):
        build_from_theta(ring, [th1, th2], [ring.one(), ring.one()], [H, H])


def test_build_from_theta_quantum_plane(rng):
    base = PolyRing(QQ, ("q",))
    twist = RingEndo(base, {"q": base.from_scalar(Fraction(2)) * base.gen("q")})
    ring = SkewPolyRing(base, "p", twist)
    gens = ring.gens()
    q, p = gens["q"], gens["p"]

    def mono(cq, cp):
        return RingEndo(ring, {"q": cq * q, "p": cp * p})

    data = build_from_theta(ring, [mono(3, 5), mono(7, 11)], [q, p], [p, q])
    assert verify_rankn(data, rng).ok
    assert data.a_list[0] == q * p
    assert data.a_list[1] == 2 * (q * p)
    assert data.coeff("lam", 2, 1) == ring.from_scalar(Fraction(11, 6))
    assert data.coeff("lamp", 2, 1) == ring.from_scalar(Fraction(21))
    assert data.coeff("mu", 2, 1) == ring.from_scalar(Fraction(1, 55))
    assert data.coeff("mup", 2, 1) == ring.from_scalar(Fraction(10, 7))
