"""Exact arithmetic for graded algebras over twisted base rings.

The package builds Z-graded algebras D[x, y; sigma, tau, a], their
defect-presentation cousins with x*y - rho*y*x = b, higher-rank towers,
and machine-checkable simplicity verdicts, all over exact coefficient
fields (Q and F_p).
"""

from .dpr import (
    DprData,
    DprElem,
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
from .endos import (
    RingEndo,
    endo_compose,
    endo_power,
    endo_try_inverse,
    identity_endo,
    is_identity_power,
    kernel_union_is_zero,
    omega_of_normal,
)
from .fields import QQ, PrimeField, Rationals
from .gwa import (
    GwaData,
    GwaElem,
    GwaRing,
    apply_star,
    apply_symmetry,
    check_involution_conditions,
    domain_check,
    ideal_component,
    iprime_step,
    powers_generate_unit_ideal,
    regularity_report,
    symmetric_data,
    verify_gwa_data,
    word_to_element,
)
from .padic import lucas_binomial, p_adic_digits, p_neighbour, v_p
from .parser import parse_expression, render
from .rankn import (
    MultiMonomial,
    RankNData,
    build_from_theta,
    multi_mul,
    verify_rankn,
)
from .rings import (
    PolyRing,
    SkewPolyRing,
    poly_divexact,
    poly_divmod,
    poly_gcd,
    resultant_in_shift,
)
from .simplicity import DprBounds, SimplicityReport, dpr_simple, gwa_simple, sigma_simple
from .specfile import load_preset, load_spec, parse_spec

__all__ = [name for name in dir() if not name.startswith("_")]
