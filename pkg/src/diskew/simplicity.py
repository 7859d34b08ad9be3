"""Simplicity-criterion checkers with witness-bearing verdicts.

The graded checker evaluates, over the bundled base-ring families:
  (a) a and sigma(a) are regular,
  (b) D has no proper sigma-stable ideals,
  (c) no positive power of sigma is inner,
  (d) D*a + D*sigma^i(a) = D for every i >= 1.

The x*y - rho*y*x = b checker evaluates:
  (a) sigma and tau are automorphisms of D,
  (b) as above,
  (c) no normal element h^n + lower terms exists (characteristic 0: the
      degree-1 solver; characteristic p: also the p-power systems),
  (d) every defect coefficient b_i is a unit.

Every verdict is Simple, NotSimple, or Inconclusive; NotSimple always
carries a witness, and unknowns never silently pass.
"""

from dataclasses import dataclass, field as dc_field

from .dpr import alpha_solver, charp_normal_search, sigma_power_coeffs
from .endos import (
    _scalar_of,
    classify_monomial,
    classify_univariate,
    endo_try_inverse,
    scalar_order,
)
from .errors import DiskewError, NuNotSurjective, RhoNotUnit
from .rings import PolyRing, SkewPolyRing, poly_gcd, resultant_in_shift


@dataclass
class ConditionResult:
    cid: str
    status: str  # 'pass' | 'fail' | 'unknown' | 'skipped'
    witness: str | None = None
    detail: str | None = None


@dataclass
class SimplicityReport:
    verdict: str  # 'Simple' | 'NotSimple' | 'Inconclusive'
    condition_results: list
    witness: tuple | None = None
    bounds_used: dict = dc_field(default_factory=dict)

    def condition(self, cid):
        for c in self.condition_results:
            if c.cid == cid:
                return c
        return None


def _assemble(conditions, bounds):
    witness = None
    verdict = "Simple"
    for c in conditions:
        if c.status == "fail":
            verdict = "NotSimple"
            if witness is None:
                witness = (c.cid, c.witness)
            break
    else:
        if any(c.status in ("unknown", "skipped") for c in conditions):
            verdict = "Inconclusive"
    return SimplicityReport(verdict, conditions, witness, bounds)


# ---------------------------------------------------------------------------
# sigma-simplicity of the base ring


def sigma_simple(ring, f):
    """(True/False/None, witness) for: D has no proper f-stable ideal."""
    if isinstance(ring, PolyRing):
        if len(ring.variables) == 0:
            return True, None
        if len(ring.variables) != 1:
            return None, None
        name = ring.variables[0]
        h = ring.gen(name)
        fam = classify_univariate(f)
        field = ring.field
        p = field.characteristic
        if not ring.laurent:
            if fam is None:
                return None, None
            if fam[0] == "identity":
                return False, h
            if fam[0] == "shift":
                if p == 0:
                    return True, None
                return False, h ** p - h
            if fam[0] == "dilation":
                return False, h
            if fam[0] == "affine":
                # fixed point t = c/(1-u); (h - t) generates a stable ideal
                u, c = fam[1], fam[2]
                t = field.div(c, field.sub(field.one, u))
                return False, h - ring.from_scalar(t)
            return None, None
        # Laurent handle
        if fam is None:
            return None, None
        if fam[0] == "identity":
            return False, h - ring.one()
        if fam[0] == "dilation":
            q = fam[1]
            order = scalar_order(field, q)
            if order is None:
                return True, None
            return False, h ** order - ring.one()
        return None, None
    if isinstance(ring, SkewPolyRing):
        mono = classify_monomial(f)
        if mono is not None:
            # the augmentation-style ideal (t) is stable under monomial maps
            return False, ring.t()
        return None, None
    return None, None


def _status(flag):
    if flag is True:
        return "pass"
    if flag is False:
        return "fail"
    return "unknown"


# ---------------------------------------------------------------------------
# graded checker


def _inner_power_analysis(data, bound):
    """Condition: sigma^i is not inner for any i >= 1.

    For the bundled families inner reduces to identity (commutative D, or
    a quantum plane whose units are scalars).  Returns ('pass'|'fail'|
    'unknown', witness index).
    """
    ring = data.ring
    field = ring.field
    if isinstance(ring, PolyRing) and len(ring.variables) <= 1:
        fam = classify_univariate(data.sigma) if ring.variables else ("identity",)
        if ring.variables == ():
            return ("fail", 1)
        if fam is None:
            return _bounded_identity_scan(data, bound)
        if fam[0] == "identity":
            return ("fail", 1)
        if fam[0] == "shift":
            p = field.characteristic
            if p == 0:
                return ("pass", None)
            return ("fail", p)
        if fam[0] in ("dilation", "affine"):
            u = fam[1]
            order = scalar_order(field, u)
            if order is None:
                return ("pass", None)
            if fam[0] == "dilation":
                return ("fail", order)
            # affine with torsion slope: check directly at the order
            if data.sigma.pow(order).is_identity():
                return ("fail", order)
            p = field.characteristic
            if p > 0 and data.sigma.pow(order * p).is_identity():
                return ("fail", order * p)
            return _bounded_identity_scan(data, bound)
        return _bounded_identity_scan(data, bound)
    if isinstance(ring, SkewPolyRing):
        mono = classify_monomial(data.sigma)
        if mono is None:
            return ("unknown", None)
        orders = [scalar_order(ring.field, u) for u in mono.values()]
        if any(o is None for o in orders):
            return ("pass", None)
        lcm = 1
        for o in orders:
            g = _gcd(lcm, o)
            lcm = lcm // g * o
        return ("fail", lcm)
    return ("unknown", None)


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def _bounded_identity_scan(data, bound):
    for i in range(1, bound + 1):
        if data.sigma.pow(i).is_identity():
            return ("fail", i)
    return ("unknown", None)


def _comaximality_analysis(data, bound):
    """Condition: D*a + D*sigma^i(a) = D for all i >= 1."""
    ring = data.ring
    a = data.a
    if isinstance(ring, PolyRing) and len(ring.variables) == 1 and not ring.laurent:
        fam = classify_univariate(data.sigma)
        if fam is not None and fam[0] == "shift":
            scan = resultant_in_shift(a, "shift")
            first = scan.first_failure()
            if first is not None:
                return ("fail", first)
            return ("pass", None)
        if fam is not None and fam[0] == "dilation":
            scan = resultant_in_shift(a, "dilation", q=fam[1])
            first = scan.first_failure()
            if first is not None:
                return ("fail", first)
            return ("pass", None)
        if fam is not None and fam[0] == "identity":
            return ("pass", None) if ring.is_unit(a) else ("fail", 1)
        # bounded gcd enumeration
        for i in range(1, bound + 1):
            g = poly_gcd(a, data.sigma.pow_apply(i, a))
            if not ring.is_unit(g):
                return ("fail", i)
        return ("unknown", None)
    if isinstance(ring, PolyRing) and len(ring.variables) == 0:
        return ("pass", None) if not a.is_zero() else ("fail", 1)
    if isinstance(ring, SkewPolyRing):
        # monomial a on a quantum plane: the ideal it generates is the
        # monomial ideal, proper exactly when the total degree is positive
        if a.is_zero():
            return ("fail", 1)
        if len(a.coeffs) == 1:
            ((i, c),) = a.coeffs.items()
            if len(c.coeffs) == 1:
                ((jexp, _),) = c.coeffs.items()
                degree = i + sum(jexp)
                return ("pass", None) if degree == 0 else ("fail", 1)
        return ("unknown", None)
    return ("unknown", None)


def gwa_simple(data, bound=25):
    """Simplicity report for graded data (D, sigma, tau, a)."""
    ring = data.ring
    conditions = []

    a_reg = ring.is_regular(data.a) if ring.is_domain() else None
    sa_reg = ring.is_regular(data.sigma(data.a)) if ring.is_domain() else None
    flag = None
    if a_reg is False or sa_reg is False:
        flag = False
    elif a_reg and sa_reg:
        flag = True
    conditions.append(
        ConditionResult(
            "a_regular",
            _status(flag),
            None if flag else repr(data.a),
        )
    )

    simple, witness = sigma_simple(ring, data.sigma)
    conditions.append(
        ConditionResult(
            "sigma_simple",
            _status(simple),
            repr(witness) if witness is not None else None,
        )
    )

    status, idx = _inner_power_analysis(data, bound)
    conditions.append(
        ConditionResult(
            "no_inner_power", status, str(idx) if idx is not None else None
        )
    )

    status, idx = _comaximality_analysis(data, bound)
    conditions.append(
        ConditionResult(
            "comaximal_translates", status, str(idx) if idx is not None else None
        )
    )

    return _assemble(conditions, {"bound": bound})


# ---------------------------------------------------------------------------
# defect checker


@dataclass
class DprBounds:
    bi: int = 25
    pn: int = 3


def _defect_units_analysis(data, bound):
    """Condition: every b_i is a unit, with closed form when available.

    When sigma fixes b and rho is a scalar, b_i = (1 + rho + ... +
    rho^(i-1)) * b, so the condition is decided for all i at once.
    """
    ring = data.ring
    field = ring.field
    b = data.b
    if not ring.is_unit(b):
        return ("fail", 1)
    rho_scalar = _scalar_of(data.rho)
    if data.sigma(b) == b and rho_scalar is not None:
        p = field.characteristic
        if field.is_one(rho_scalar):
            if p == 0:
                return ("pass", None)
            return ("fail", p)
        order = scalar_order(field, rho_scalar)
        if order is None:
            return ("pass", None)
        # sum of the first i powers vanishes exactly when order | i
        return ("fail", order)
    coeffs = sigma_power_coeffs(data, bound)
    for i, (_, b_i) in enumerate(coeffs, start=1):
        if not ring.is_unit(b_i):
            return ("fail", i)
    return ("unknown", None)


def dpr_simple(data, bounds=None):
    """Simplicity report for defect data (D, sigma, tau, b, rho)."""
    if bounds is None:
        bounds = DprBounds()
    ring = data.ring
    if data.rho_inverse is None:
        raise RhoNotUnit(f"rho = {data.rho!r} is not a unit")
    nu = data.nu
    if endo_try_inverse(nu) is None and not nu.is_identity():
        raise NuNotSurjective("tau o sigma is not a recognized automorphism")

    conditions = []

    sigma_inv = endo_try_inverse(data.sigma)
    tau_inv = endo_try_inverse(data.tau)
    if sigma_inv is not None and tau_inv is not None:
        conditions.append(ConditionResult("automorphisms", "pass"))
    else:
        which = "sigma" if sigma_inv is None else "tau"
        conditions.append(ConditionResult("automorphisms", "unknown", which))

    simple, witness = sigma_simple(ring, data.sigma)
    conditions.append(
        ConditionResult(
            "sigma_simple",
            _status(simple),
            repr(witness) if witness is not None else None,
        )
    )

    defect_status, defect_idx = _defect_units_analysis(data, bounds.bi)
    failed_already = defect_status == "fail" or any(
        c.status == "fail" for c in conditions
    )

    # The degree-1 solver is cheap and its witness is the informative one,
    # so it runs even when a syntactic disqualifier already failed; only
    # the expensive p-power search is short-circuited.
    normal = None
    try:
        alpha = alpha_solver(data)
    except DiskewError:
        normal = ConditionResult("no_normal_element", "unknown")
        alpha = None
    if normal is None:
        p = ring.field.characteristic
        if alpha is not None:
            normal = ConditionResult("no_normal_element", "fail", repr(alpha))
        elif p == 0:
            normal = ConditionResult("no_normal_element", "pass")
        elif failed_already:
            normal = ConditionResult("no_normal_element", "skipped")
        else:
            found = charp_normal_search(data, bounds.pn)
            if found is not None:
                n, _, _ = found
                normal = ConditionResult(
                    "no_normal_element", "fail", f"p-power degree {p ** n}"
                )
            else:
                normal = ConditionResult("no_normal_element", "unknown")
    conditions.append(normal)

    conditions.append(
        ConditionResult(
            "defect_units",
            defect_status,
            f"b_{defect_idx}" if defect_idx is not None else None,
        )
    )

    return _assemble(conditions, {"bi": bounds.bi, "pn": bounds.pn})
