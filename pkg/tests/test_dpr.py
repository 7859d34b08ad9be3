"""Defect-presentation algebras: normal forms, the graded presentation,
coefficient recursions, and normal-element solvers."""

from fractions import Fraction

import pytest

from diskew.dpr import (
    DprData,
    alpha_solver,
    beta_invariants,
    charp_normal_search,
    normal_element_from_alpha,
    residual_hpdn7,
    rho_nu,
    roundtrip_check,
    sigma_power_coeffs,
    tau_power_coeffs,
    to_gwa,
    verify_dpr_data,
)
from diskew.endos import RingEndo, identity_endo
from diskew.errors import RhoNotUnit
from diskew.fields import QQ
from diskew.rings import PolyRing
from diskew.specfile import load_preset


@pytest.fixture
def weyl_dpr():
    return load_preset("weyl-q-dpr").dpr


@pytest.fixture
def q_deformed():
    """Scalars only: x*y = 2*y*x + 1."""
    ring = PolyRing(QQ, ())
    one = identity_endo(ring)
    return DprData(ring, one, one, ring.one(), ring.from_int(2))


def test_defining_relations(usl2_dpr, weyl_dpr):
    d = usl2_dpr.dpr
    H = d.from_base(d.ring.gen("H"))
    x, y = d.x(), d.y()
    assert x * y == y * x + 2 * H
    assert x * H == (H - 1) * x
    assert y * H == (H + 1) * y
    d = weyl_dpr
    assert d.x() * d.y() == d.y() * d.x() + d.one()


def test_normal_form_basis(usl2_dpr, rng):
    d = usl2_dpr.dpr
    for _ in range(25):
        u = d.random_element(rng)
        v = d.random_element(rng)
        w = d.random_element(rng)
        assert (u * v) * w == u * (v * w)
        assert u * (v + w) == u * v + u * w
        # the product stays on the y^i x^j basis with exponents >= 0
        for (i, j) in (u * v).coeffs:
            assert i >= 0 and j >= 0


def test_verify_data(usl2_dpr, weyl_dpr, rng):
    assert verify_dpr_data(usl2_dpr.dpr, rng).ok
    assert verify_dpr_data(weyl_dpr, rng).ok


def test_verify_data_rejects_bad_defect():
    ring = PolyRing(QQ, ("H",))
    sigma = RingEndo(ring, {"H": ring.gen("H") - 1})
    tau = identity_endo(ring)
    bad = DprData(ring, sigma, tau, ring.gen("H"), ring.one())
    report = verify_dpr_data(bad)
    assert not report.ok
    assert any(c.name == "b_seminormal" for c in report.failures())


def test_to_gwa_bookkeeping(usl2_dpr):
    d = usl2_dpr.dpr
    image = to_gwa(d)
    h = image.h()
    H = image.hring.embed(d.ring.gen("H"))
    assert image.gwa.a == h
    assert image.gwa.sigma(h) == h + 2 * H
    assert image.gwa.tau(h) == h - 2 * H - 2
    # the adjoined variable twists by nu = tau o sigma
    assert image.gwa.tau(image.gwa.sigma(h)) == h


def test_to_gwa_needs_unit_rho():
    ring = PolyRing(QQ, ("H",))
    one = identity_endo(ring)
    data = DprData(ring, one, one, ring.one(), ring.gen("H"))
    with pytest.raises(RhoNotUnit):
        to_gwa(data)


def test_roundtrip(usl2_dpr, weyl_dpr, rng):
    ok, witness = roundtrip_check(usl2_dpr.dpr, rng, 30)
    assert ok and witness is None
    ok, _ = roundtrip_check(weyl_dpr, rng, 30)
    assert ok


def test_sigma_power_coeffs_against_direct(usl2_dpr, weyl_dpr):
    oq2 = load_preset("oq2so3-dpr").dpr
    for d in (usl2_dpr.dpr, weyl_dpr, oq2):
        image = to_gwa(d)
        h = image.h()
        for i, (a_i, b_i) in enumerate(sigma_power_coeffs(d, 6), start=1):
            direct = image.gwa.sigma.pow_apply(i, h)
            assert direct == image.hring.embed(a_i) * h + image.hring.embed(b_i)
        for i, (a_i, b_i) in enumerate(tau_power_coeffs(d, 6), start=1):
            direct = image.gwa.tau.pow_apply(i, h)
            assert direct == image.hring.embed(a_i) * h + image.hring.embed(b_i)


def test_frozen_defect_coefficients(usl2_dpr, weyl_dpr):
    H = usl2_dpr.ring.gen("H")
    table = sigma_power_coeffs(usl2_dpr.dpr, 3)
    assert [b for _, b in table] == [2 * H, 4 * H - 2, 6 * H - 6]
    table = sigma_power_coeffs(weyl_dpr, 5)
    ring = weyl_dpr.ring
    assert [b for _, b in table] == [ring.from_int(i) for i in range(1, 6)]


def test_rho_nu(q_deformed):
    ring = q_deformed.ring
    assert rho_nu(q_deformed, 3) == ring.from_int(8)
    assert rho_nu(q_deformed, 0) == ring.one()
    # b_i = 2^i - 1 for x*y = 2*y*x + 1
    table = sigma_power_coeffs(q_deformed, 4)
    assert [b for _, b in table] == [ring.from_int(2 ** i - 1) for i in range(1, 5)]


def test_beta_invariants(usl2_dpr, rng):
    assert beta_invariants(usl2_dpr.dpr, rng).ok


def test_alpha_solver(usl2_dpr, weyl_dpr, q_deformed):
    H = usl2_dpr.ring.gen("H")
    alpha = alpha_solver(usl2_dpr.dpr)
    assert alpha == H ** 2 + H
    assert alpha_solver(weyl_dpr) is None
    assert alpha_solver(q_deformed) == q_deformed.ring.one()


def test_normal_element(usl2_dpr, q_deformed):
    d = usl2_dpr.dpr
    alpha = alpha_solver(d)
    C, checks = normal_element_from_alpha(d, alpha)
    assert checks.ok
    names = [c.name for c in checks.checks]
    assert "central" in names
    # C = y*x + H^2 + H commutes with both generators on the basis
    C_dpr = d.y() * d.x() + d.from_base(alpha)
    assert d.x() * C_dpr == C_dpr * d.x()
    assert d.y() * C_dpr == C_dpr * d.y()
    # the q-deformed case is normal but not central
    alpha = alpha_solver(q_deformed)
    _, checks = normal_element_from_alpha(q_deformed, alpha)
    assert checks.ok
    assert "central" not in [c.name for c in checks.checks]


def test_residuals(usl2_dpr):
    d = usl2_dpr.dpr
    alpha = alpha_solver(d)
    residuals = residual_hpdn7(d, [alpha])
    assert all(r.is_zero() for r in residuals)
    # a wrong tail leaves a nonzero residual
    residuals = residual_hpdn7(d, [d.ring.gen("H")])
    assert any(not r.is_zero() for r in residuals)


def test_charp_normal_search():
    d = load_preset("weyl-fp-dpr", p=3).dpr
    found = charp_normal_search(d)
    assert found is not None
    n, alphas, alpha = found
    assert n == 1
    assert alphas[0] == d.ring.from_int(-1)
    assert alpha.is_zero()
    # the reported element h^3 - h, h = y*x, really is central in char 3
    h = d.y() * d.x()
    P = h ** 3 - h
    assert d.x() * P == P * d.x()
    assert d.y() * P == P * d.y()
