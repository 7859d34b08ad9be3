"""Algebras on two generators with the relation x*y - rho*y*x = b.

``DprData`` packages a base ring D, endomorphisms sigma and tau, the
defect b, and the unit rho, with the rewrite rules

    x*d = sigma(d)*x,   y*d = tau(d)*y,   x*y = rho*y*x + b.

Elements are normal forms on the basis y^i * x^j with left coefficients.

When rho is a unit the algebra is graded in disguise: adjoin h = y*x to
get the twisted polynomial ring Dh = D[h; nu] with nu = tau o sigma, and
extend sigma, tau by

    sigma(h) = rho*h + b,       tau(h) = tau(rho^-1) * (h - tau(b)).

Then the algebra equals the graded algebra (Dh, sigma, tau, a = h); the
translation in both directions is exposed by ``to_gwa``.
"""

from dataclasses import dataclass

from .endos import RingEndo, endo_compose, identity_endo
from .errors import (
    AlgebraMismatch,
    AlphaConditionsFail,
    NotUnivariate,
    RhoNotUnit,
    UnsupportedFamily,
)
from .gwa import CheckResult, GwaData, ValidationReport
from .linalg import solve_linear
from .rings import PolyRing, SkewPolyRing


class DprData:
    """Defining data (D, sigma, tau, b, rho)."""

    def __init__(self, ring, sigma, tau, b, rho, xname="x", yname="y"):
        self.ring = ring
        self.sigma = sigma
        self.tau = tau
        self.b = ring.coerce(b)
        self.rho = ring.coerce(rho)
        self.rho_inverse = ring.invert(self.rho)
        self.xname = xname
        self.yname = yname
        self._xy_cache = {}
        self._gwa_image = None
        self._nu = None

    def __eq__(self, other):
        if not isinstance(other, DprData):
            return NotImplemented
        return (
            other.ring == self.ring
            and other.sigma == self.sigma
            and other.tau == self.tau
            and other.b == self.b
            and other.rho == self.rho
        )

    def __hash__(self):
        return hash(id(self))

    def __repr__(self):
        return f"DPR({self.ring}, b={self.b!r}, rho={self.rho!r})"

    @property
    def nu(self):
        """tau o sigma, the twist of the adjoined variable (cached)."""
        if self._nu is None:
            self._nu = endo_compose(self.tau, self.sigma)
        return self._nu

    # element constructors -------------------------------------------------

    def zero(self):
        return DprElem(self, {})

    def one(self):
        return self.from_base(self.ring.one())

    def from_base(self, d):
        d = self.ring.coerce(d)
        if d.is_zero():
            return self.zero()
        return DprElem(self, {(0, 0): d})

    def from_int(self, n):
        return self.from_base(self.ring.from_int(n))

    def from_scalar(self, c):
        return self.from_base(self.ring.from_scalar(c))

    def monomial(self, d, i, j):
        d = self.ring.coerce(d)
        if d.is_zero():
            return self.zero()
        return DprElem(self, {(i, j): d})

    def x(self):
        return self.monomial(self.ring.one(), 0, 1)

    def y(self):
        return self.monomial(self.ring.one(), 1, 0)

    def gens(self):
        out = {name: self.from_base(g) for name, g in self.ring.gens().items()}
        out[self.xname] = self.x()
        out[self.yname] = self.y()
        return out

    def random_element(self, rng, size=2, width=2):
        coeffs = {}
        for _ in range(rng.randint(1, width + 1)):
            key = (rng.randint(0, width), rng.randint(0, width))
            d = self.ring.random_element(rng, size)
            coeffs[key] = coeffs.get(key, self.ring.zero()) + d
        return DprElem(self, {k: d for k, d in coeffs.items() if not d.is_zero()})

    def _xy_normal_form(self, j, k):
        """Normal form of x^j * y^k, memoized."""
        key = (j, k)
        cached = self._xy_cache.get(key)
        if cached is not None:
            return cached
        if j == 0:
            result = self.monomial(self.ring.one(), k, 0)
        elif k == 0:
            result = self.monomial(self.ring.one(), 0, j)
        else:
            # x^j y^k = x^(j-1) (rho*y*x + b) y^(k-1)
            middle = self.monomial(self.rho, 1, 1) + self.from_base(self.b)
            left = self._xy_normal_form(j - 1, 0)
            right = self._xy_normal_form(0, k - 1)
            result = left * middle * right
        self._xy_cache[key] = result
        return result


class DprElem:
    __slots__ = ("algebra", "coeffs")

    def __init__(self, algebra, coeffs):
        self.algebra = algebra
        self.coeffs = coeffs

    def is_zero(self):
        return not self.coeffs

    def support(self):
        return sorted(self.coeffs)

    def coefficient(self, i, j):
        return self.coeffs.get((i, j), self.algebra.ring.zero())

    def _coerced(self, other):
        if isinstance(other, DprElem):
            if other.algebra != self.algebra:
                raise AlgebraMismatch("operands live in different algebras")
            return other
        if isinstance(other, int):
            return self.algebra.from_int(other)
        return None

    def __add__(self, other):
        other = self._coerced(other)
        if other is None:
            return NotImplemented
        ring = self.algebra.ring
        coeffs = dict(self.coeffs)
        for k, d in other.coeffs.items():
            coeffs[k] = coeffs.get(k, ring.zero()) + d
        return DprElem(self.algebra, {k: d for k, d in coeffs.items() if not d.is_zero()})

    __radd__ = __add__

    def __neg__(self):
        return DprElem(self.algebra, {k: -d for k, d in self.coeffs.items()})

    def __sub__(self, other):
        other = self._coerced(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerced(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerced(other)
        if other is None:
            return NotImplemented
        alg = self.algebra
        sigma, tau = alg.sigma, alg.tau
        result = alg.zero()
        for (i, j), d in self.coeffs.items():
            for (k, l), e in other.coeffs.items():
                # d y^i x^j * e y^k x^l = d tau^i(sigma^j(e)) y^i (x^j y^k) x^l
                c = d * tau.pow_apply(i, sigma.pow_apply(j, e))
                cross = alg._xy_normal_form(j, k)
                coeffs = {}
                for (p, q), w in cross.coeffs.items():
                    coeffs[(i + p, q + l)] = c * tau.pow_apply(i, w)
                result = result + DprElem(alg, coeffs)
        return result

    def __rmul__(self, other):
        other = self._coerced(other)
        if other is None:
            return NotImplemented
        return other * self

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result = self.algebra.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        other = self._coerced(other)
        if other is None:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        raise TypeError("algebra elements are not hashable")

    def __repr__(self):
        from .parser import render

        return render(self)


def verify_dpr_data(data, rng=None, samples=20):
    """Compatibility conditions on generators plus sampled elements d:

        sigma(tau(d)) * rho = rho * tau(sigma(d)),
        sigma(tau(d)) * b   = b * d.
    """
    st = endo_compose(data.sigma, data.tau)
    ts = endo_compose(data.tau, data.sigma)
    checks = []
    elems = list(data.ring.gens().values())
    if rng is not None:
        elems.extend(data.ring.random_element(rng, 2) for _ in range(samples))
    for d in elems:
        if st(d) * data.rho != data.rho * ts(d):
            checks.append(CheckResult("rho_intertwines", False, repr(d)))
            break
        if st(d) * data.b != data.b * d:
            checks.append(CheckResult("b_seminormal", False, repr(d)))
            break
    else:
        checks.append(CheckResult("rho_intertwines", True))
        checks.append(CheckResult("b_seminormal", True))
    return ValidationReport(checks)


# ---------------------------------------------------------------------------
# the graded presentation


@dataclass
class GwaImage:
    """The graded presentation of an algebra with invertible rho."""

    dpr: DprData
    gwa: GwaData
    hring: SkewPolyRing

    def h(self):
        return self.hring.t()

    def dpr_to_gwa(self, u):
        """Rewrite a normal form on y^i x^j through the graded generators."""
        g = self.gwa
        result = g.zero()
        x = g.x()
        y = g.y()
        for (i, j), d in u.coeffs.items():
            term = g.from_base(self.hring.embed(d)) * y ** i * x ** j
            result = result + term
        return result

    def gwa_to_dpr(self, u):
        """Substitute h = y*x and expand back to the y^i x^j basis."""
        d = self.dpr
        result = d.zero()
        h_elem = d.y() * d.x()
        x = d.x()
        y = d.y()
        for k, c in u.coeffs.items():
            for m, base_coeff in c.coeffs.items():
                term = d.from_base(base_coeff) * h_elem ** m
                if k > 0:
                    term = term * x ** k
                elif k < 0:
                    term = term * y ** (-k)
                result = result + term
        return result


def to_gwa(data, rng=None):
    """Build the graded presentation; requires rho to be a unit.

    Asserts the twist bookkeeping of the transformation:
    tau(sigma(h)) = h and sigma(tau(h)) = rho * tau(sigma(rho^-1)) * h.
    """
    if data._gwa_image is not None:
        return data._gwa_image
    if data.rho_inverse is None:
        raise RhoNotUnit(f"rho = {data.rho!r} is not a unit")
    D = data.ring
    nu = data.nu
    hring = SkewPolyRing(D, "h", nu)
    h = hring.t()
    rho_e = hring.embed(data.rho)
    b_e = hring.embed(data.b)
    sigma_images = {
        name: hring.embed(data.sigma(g)) for name, g in D.gens().items()
    }
    sigma_images["h"] = rho_e * h + b_e
    tau_images = {name: hring.embed(data.tau(g)) for name, g in D.gens().items()}
    tri = data.tau(data.rho_inverse)
    tau_images["h"] = hring.embed(tri) * h - hring.embed(tri * data.tau(data.b))
    sigma_hat = RingEndo(hring, sigma_images)
    tau_hat = RingEndo(hring, tau_images)
    gwa = GwaData(hring, sigma_hat, tau_hat, h, xname=data.xname, yname=data.yname)
    # twist bookkeeping of the transformation
    ts_h = tau_hat(sigma_hat(h))
    if ts_h != h:
        raise AlphaConditionsFail("tau(sigma(h)) != h; data is inconsistent")
    st_h = sigma_hat(tau_hat(h))
    expected = hring.embed(data.rho * nu(data.rho_inverse)) * h
    if st_h != expected:
        raise AlphaConditionsFail("sigma(tau(h)) has the wrong twist")
    image = GwaImage(dpr=data, gwa=gwa, hring=hring)
    data._gwa_image = image
    return image


def roundtrip_check(data, rng, count=100):
    """Random products translated through the graded presentation and back."""
    image = to_gwa(data)
    for _ in range(count):
        u = data.random_element(rng)
        v = data.random_element(rng)
        direct = u * v
        through = image.gwa_to_dpr(image.dpr_to_gwa(u) * image.dpr_to_gwa(v))
        if direct != through:
            return False, (u, v)
        if image.gwa_to_dpr(image.dpr_to_gwa(u)) != u:
            return False, (u, None)
    return True, None


# ---------------------------------------------------------------------------
# coefficient recursions


def sigma_power_coeffs(data, imax):
    """Pairs (a_i, b_i) with sigma^i(h) = a_i*h + b_i, for i = 1..imax.

    Recursion: a_1 = rho, b_1 = b,
    a_(i+1) = sigma(a_i)*rho, b_(i+1) = sigma(a_i)*b + sigma(b_i).
    """
    sigma = data.sigma
    out = []
    a_i, b_i = data.rho, data.b
    out.append((a_i, b_i))
    for _ in range(imax - 1):
        sa = sigma(a_i)
        a_i, b_i = sa * data.rho, sa * data.b + sigma(b_i)
        out.append((a_i, b_i))
    return out


def tau_power_coeffs(data, imax):
    """Pairs (a'_i, b'_i) with tau^i(h) = a'_i*h + b'_i, for i = 1..imax.

    Recursion: a'_1 = tau(rho^-1), b'_1 = -tau(rho^-1 * b),
    a'_(i+1) = tau(a'_i)*tau(rho^-1),
    b'_(i+1) = -tau(a'_i)*tau(rho^-1 * b) + tau(b'_i).
    """
    if data.rho_inverse is None:
        raise RhoNotUnit("tau coefficients need an invertible rho")
    tau = data.tau
    tri = tau(data.rho_inverse)
    trib = tau(data.rho_inverse * data.b)
    a_i, b_i = tri, -trib
    out = [(a_i, b_i)]
    for _ in range(imax - 1):
        ta = tau(a_i)
        a_i, b_i = ta * tri, -(ta * trib) + tau(b_i)
        out.append((a_i, b_i))
    return out


def rho_nu(data, n):
    """rho * nu(rho) * ... * nu^(n-1)(rho)."""
    nu = data.nu
    result = data.ring.one()
    for i in range(n):
        result = result * nu.pow_apply(i, data.rho)
    return result


def beta_invariants(data, rng=None, samples=10):
    """Checks for beta = rho^-1 * b: nu(beta) = beta, beta*d = nu(d)*beta,
    and h*beta = beta*h in the adjoined ring."""
    if data.rho_inverse is None:
        raise RhoNotUnit("beta needs an invertible rho")
    beta = data.rho_inverse * data.b
    nu = data.nu
    checks = []
    ok = nu(beta) == beta
    checks.append(CheckResult("nu_fixes_beta", ok))
    elems = list(data.ring.gens().values())
    if rng is not None:
        elems.extend(data.ring.random_element(rng, 2) for _ in range(samples))
    for d in elems:
        if beta * d != nu(d) * beta:
            checks.append(CheckResult("beta_seminormal", False, repr(d)))
            break
    else:
        checks.append(CheckResult("beta_seminormal", True))
    image = to_gwa(data)
    h = image.h()
    beta_e = image.hring.embed(beta)
    ok = h * beta_e == beta_e * h
    checks.append(CheckResult("beta_commutes_with_h", ok))
    return ValidationReport(checks)


# ---------------------------------------------------------------------------
# normal elements


def _univariate_context(data):
    ring = data.ring
    if not isinstance(ring, PolyRing) or ring.laurent or len(ring.variables) > 1:
        raise NotUnivariate("solvers need D = K or D = K[H]")
    return ring


def _linear_conditions(ring, endo, factor, max_deg):
    """Column images of the map alpha -> factor*alpha - endo(alpha).

    alpha = sum z_k H^k with k <= max_deg; callers stack several such
    blocks into one linear system over the coefficient field.
    """
    nvars = len(ring.variables)
    columns = []
    for k in range(max_deg + 1):
        if nvars == 0:
            basis = ring.one()
        else:
            basis = ring.gen(ring.variables[0]) ** k
        columns.append(factor * basis - endo(basis))
    return columns


def _stack_solve(ring, condition_blocks, rhs_blocks, max_deg):
    """Solve stacked coefficient conditions for one unknown polynomial."""
    field = ring.field
    nvars = len(ring.variables)
    exps = set()
    for block in condition_blocks:
        for col in block:
            exps.update(col.coeffs)
    for rhs in rhs_blocks:
        exps.update(rhs.coeffs)
    exps = sorted(exps)
    rows = []
    target = []
    for block, rhs in zip(condition_blocks, rhs_blocks):
        for e in exps:
            rows.append([col.coeffs.get(e, field.zero) for col in block])
            target.append(rhs.coeffs.get(e, field.zero))
    sol = solve_linear(field, rows, target)
    if sol is None:
        return None
    if nvars == 0:
        out = ring.zero()
        for k, z in enumerate(sol):
            out = out + ring.from_scalar(z)
        return out
    H = ring.gen(ring.variables[0])
    out = ring.zero()
    for k, z in enumerate(sol):
        out = out + ring.from_scalar(z) * H ** k
    return out


def alpha_solver(data, extra_degree=2):
    """Solve rho*alpha - sigma(alpha) = b with nu(alpha) = alpha.

    D must be K or K[H].  In a commutative domain the normality condition
    alpha*d = nu(d)*alpha forces nu to be the identity unless alpha = 0,
    so a nonzero solution is only accepted when nu fixes the generators.
    Returns alpha or None.
    """
    ring = _univariate_context(data)
    nu = data.nu
    max_deg = max(data.b.total_degree(), 0) + extra_degree
    if len(ring.variables) == 0:
        max_deg = 0
    nu_is_id = nu.is_identity()
    blocks = [_linear_conditions(ring, data.sigma, data.rho, max_deg)]
    rhs = [data.b]
    if not nu_is_id:
        blocks.append(_linear_conditions(ring, nu, ring.one(), max_deg))
        rhs.append(ring.zero())
    alpha = _stack_solve(ring, blocks, rhs, max_deg)
    if alpha is None:
        return None
    if not alpha.is_zero() and not nu_is_id:
        # the linear system already forces nu(alpha) = alpha, but the
        # two-sided normality needs nu = id for nonzero alpha
        return None
    if data.rho * alpha - data.sigma(alpha) != data.b:
        raise AlphaConditionsFail("solver produced a non-solution")
    return alpha


def normal_element_from_alpha(data, alpha, check_central=True):
    """The adjoined normal element C = h + alpha, with verification.

    Checks, in the graded presentation: h*C = C*h, x*C = rho*C*x,
    y*C = tau(rho^-1)*C*y, and rho*C = x*y + sigma(alpha) back on the
    y^i x^j basis.  Returns (C_in_hring, checks).
    """
    image = to_gwa(data)
    hring = image.hring
    g = image.gwa
    C = image.h() + hring.embed(alpha)
    Cg = g.from_base(C)
    checks = []
    h_e = g.from_base(image.h())
    checks.append(CheckResult("h_commutes", h_e * Cg == Cg * h_e))
    x, y = g.x(), g.y()
    rho_e = g.from_base(hring.embed(data.rho))
    checks.append(CheckResult("x_twist", x * Cg == rho_e * Cg * x))
    tri = g.from_base(hring.embed(data.tau(data.rho_inverse)))
    checks.append(CheckResult("y_twist", y * Cg == tri * Cg * y))
    d = data
    C_dpr = d.y() * d.x() + d.from_base(alpha)
    lhs = d.from_base(d.rho) * C_dpr
    rhs = d.x() * d.y() + d.from_base(d.sigma(alpha))
    checks.append(CheckResult("xy_presentation", lhs == rhs))
    if check_central:
        central = (
            d.ring.is_unit(d.rho)
            and d.rho == d.ring.one()
            and d.nu.is_identity()
        )
        if central:
            checks.append(
                CheckResult(
                    "central",
                    d.x() * C_dpr == C_dpr * d.x() and d.y() * C_dpr == C_dpr * d.y(),
                )
            )
    return C, ValidationReport(checks)


def residual_hpdn7(data, tail_coeffs):
    """Left-normality residuals of p = h^n + sum_j d_j h^j.

    ``tail_coeffs`` lists d_0 .. d_(n-1).  Residual j is

        rho_nu(n-j)*d_j - sigma(d_j) - C(n,j)*b^(n-j)
        - sum_(j<i<n) C(i,j)*sigma(d_i)*b^(i-j)

    and p is left normal with x*p = rho_nu(n)... exactly when all vanish.
    """
    from math import comb

    n = len(tail_coeffs)
    ring = data.ring
    sigma = data.sigma
    out = []
    for j in range(n):
        d_j = ring.coerce(tail_coeffs[j])
        res = rho_nu(data, n - j) * d_j - sigma(d_j)
        res = res - ring.from_int(comb(n, j)) * data.b ** (n - j)
        for i in range(j + 1, n):
            d_i = ring.coerce(tail_coeffs[i])
            res = res - ring.from_int(comb(i, j)) * sigma(d_i) * data.b ** (i - j)
        out.append(res)
    return out


def charp_normal_search(data, n_max=3, extra_degree=2):
    """Search for p-power normal forms h^(p^n) + sum alpha_i h^(p^i) + alpha.

    Only meaningful in characteristic p > 0.  For each n = 1..n_max the
    coefficient system is linear:

        sigma(alpha_i) = rho_nu(p^n - p^i) * alpha_i        (0 <= i < n)
        rho_nu(p^n)*alpha - sigma(alpha)
            = b^(p^n) + sum_i sigma(alpha_i) * b^(p^i)

    together with nu-invariance of every coefficient.  Returns
    (n, [alpha_0..alpha_(n-1)], alpha) for the first solvable n, or None.
    """
    ring = _univariate_context(data)
    p = ring.characteristic()
    if p == 0:
        raise UnsupportedFamily("p-power search needs positive characteristic")
    field = ring.field
    nu = data.nu
    for n in range(1, n_max + 1):
        pn = p ** n
        max_deg = pn * max(data.b.total_degree(), 0) + extra_degree
        if len(ring.variables) == 0:
            max_deg = 0
        sol = _solve_charp_system(data, n, max_deg)
        if sol is not None:
            return sol
    return None


def _solve_charp_system(data, n, max_deg):
    ring = data.ring
    field = ring.field
    p = ring.characteristic()
    pn = p ** n
    nu = data.nu
    nu_is_id = nu.is_identity()
    sigma = data.sigma

    if len(ring.variables) == 0:
        basis = [ring.one()]
    else:
        H = ring.gen(ring.variables[0])
        basis = [H ** k for k in range(max_deg + 1)]
    ncols = len(basis)

    # unknown layout: alpha_0 .. alpha_(n-1), alpha, each with ncols coeffs
    def col(unknown, k):
        return unknown * ncols + k

    total = (n + 1) * ncols
    rows = []
    target = []

    def add_rows(column_map, rhs):
        exps = set(rhs.coeffs)
        for cols in column_map.values():
            for c in cols:
                exps.update(c.coeffs)
        for e in sorted(exps):
            row = [field.zero] * total
            for unknown, cols in column_map.items():
                for k, c in enumerate(cols):
                    row[col(unknown, k)] = c.coeffs.get(e, field.zero)
            rows.append(row)
            target.append(rhs.coeffs.get(e, field.zero))

    # sigma(alpha_i) - rho_nu(p^n - p^i)*alpha_i = 0
    for i in range(n):
        factor = rho_nu(data, pn - p ** i)
        cols = [sigma(bk) - factor * bk for bk in basis]
        add_rows({i: cols}, ring.zero())
        if not nu_is_id:
            add_rows({i: [nu(bk) - bk for bk in basis]}, ring.zero())

    # rho_nu(p^n)*alpha - sigma(alpha) - sum_i b^(p^i)-weighted alpha_i = b^(p^n)
    factor = rho_nu(data, pn)
    alpha_cols = [factor * bk - sigma(bk) for bk in basis]
    column_map = {n: alpha_cols}
    for i in range(n):
        bpow = data.b ** (p ** i)
        column_map[i] = [-(sigma(bk) * bpow) for bk in basis]
    add_rows(column_map, data.b ** pn)
    if not nu_is_id:
        add_rows({n: [nu(bk) - bk for bk in basis]}, ring.zero())

    sol = solve_linear(field, rows, target)
    if sol is None:
        return None

    def assemble(unknown):
        out = ring.zero()
        for k, bk in enumerate(basis):
            out = out + ring.from_scalar(sol[col(unknown, k)]) * bk
        return out

    alphas = [assemble(i) for i in range(n)]
    alpha = assemble(n)
    if not nu_is_id:
        if not alpha.is_zero() or any(not a.is_zero() for a in alphas):
            # two-sided normality in a commutative domain needs nu = id
            return None
    return n, alphas, alpha
