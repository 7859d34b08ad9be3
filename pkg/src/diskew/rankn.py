"""Higher-rank graded algebras built as an iterated tower.

``RankNData`` holds a base ring D, per-index twists sigma_i / tau_i and
defining elements a_i, plus the commutation coefficients lam, lam', mu,
mu' (for index pairs i > j) that govern

    x_i x_j = lam[i,j]  x_j x_i,      x_i y_j = lam'[i,j] y_j x_i,
    y_i x_j = mu[i,j]   x_j y_i,      y_i y_j = mu'[i,j]  y_j y_i.

The product engine realizes the algebra as a tower: level k is a rank-1
graded algebra over level k-1, with sigma_k / tau_k extended to the lower
generators by the commutation coefficients.  ``MultiMonomial`` values
(coefficient in D, signed degree vector) multiply through the tower.
"""

from .endos import RingEndo, endo_compose, endo_try_inverse
from .errors import (
    CoefficientNotInRing,
    NotRecognizedNormalForm,
    ThetaNotCommuting,
    UnsupportedFamily,
)
from .gwa import CheckResult, GwaData, GwaElem, GwaRing, ValidationReport
from .rings import PolyRing, SkewPolyRing, poly_divexact


class RankNData:
    """Defining data for a rank-n graded algebra.

    ``coeffs`` is a dict with keys 'lam', 'lamp', 'mu', 'mup', each a
    dict {(i, j): element of D} for 1 <= j < i <= n.
    """

    def __init__(self, ring, sigmas, taus, a_list, coeffs):
        n = len(a_list)
        if not (len(sigmas) == len(taus) == n):
            raise UnsupportedFamily("twist and defining lists must align")
        self.ring = ring
        self.n = n
        self.sigmas = list(sigmas)
        self.taus = list(taus)
        self.a_list = [ring.coerce(a) for a in a_list]
        self.coeffs = {
            key: {pair: ring.coerce(v) for pair, v in coeffs.get(key, {}).items()}
            for key in ("lam", "lamp", "mu", "mup")
        }
        for key in ("lam", "lamp", "mu", "mup"):
            for i in range(2, n + 1):
                for j in range(1, i):
                    if (i, j) not in self.coeffs[key]:
                        raise UnsupportedFamily(f"missing {key}[{i},{j}]")
        self._tower = None

    def sigma(self, i):
        return self.sigmas[i - 1]

    def tau(self, i):
        return self.taus[i - 1]

    def a(self, i):
        return self.a_list[i - 1]

    def coeff(self, key, i, j):
        return self.coeffs[key][(i, j)]

    def tower(self):
        """Levels [A_1, ..., A_n] of the iterated construction (cached)."""
        if self._tower is not None:
            return self._tower
        levels = []
        current = self.ring
        for k in range(1, self.n + 1):
            def lift(elem, _current=current):
                out = elem
                for level in levels:
                    out = level.embed(out)
                return out

            images = {}
            tau_images = {}
            for name, g in self.ring.gens().items():
                images[name] = lift(self.sigma(k)(g))
                tau_images[name] = lift(self.tau(k)(g))
            gens_so_far = current.gens() if levels else {}
            for j in range(1, k):
                xj, yj = f"x{j}", f"y{j}"
                images[xj] = lift(self.coeff("lam", k, j)) * gens_so_far[xj]
                images[yj] = lift(self.coeff("lamp", k, j)) * gens_so_far[yj]
                tau_images[xj] = lift(self.coeff("mu", k, j)) * gens_so_far[xj]
                tau_images[yj] = lift(self.coeff("mup", k, j)) * gens_so_far[yj]
            sigma_hat = RingEndo(current, images) if levels else self.sigma(k)
            tau_hat = RingEndo(current, tau_images) if levels else self.tau(k)
            data = GwaData(
                current,
                sigma_hat,
                tau_hat,
                lift(self.a(k)),
                xname=f"x{k}",
                yname=f"y{k}",
            )
            level_ring = GwaRing(data)
            levels.append(level_ring)
            current = level_ring
        self._tower = levels
        return levels

    def top(self):
        return self.tower()[-1]


class MultiMonomial:
    """coeff * v(1)^alpha_1 * ... * v(n)^alpha_n with signed exponents."""

    __slots__ = ("coeff", "alpha")

    def __init__(self, coeff, alpha):
        self.coeff = coeff
        self.alpha = tuple(alpha)

    def __eq__(self, other):
        if not isinstance(other, MultiMonomial):
            return NotImplemented
        if self.coeff.is_zero() and other.coeff.is_zero():
            return True
        return self.coeff == other.coeff and self.alpha == other.alpha

    def __hash__(self):
        raise TypeError("monomials are not hashable")

    def __repr__(self):
        return f"MultiMonomial({self.coeff!r}, {self.alpha})"

    def is_zero(self):
        return self.coeff.is_zero()


def monomial_to_element(data, mono):
    """The tower element of a multi-monomial."""
    top = data.top()
    elem = _embed_base(data, mono.coeff)
    gens = top.gens()
    for k, e in enumerate(mono.alpha, start=1):
        if e > 0:
            elem = elem * gens[f"x{k}"] ** e
        elif e < 0:
            elem = elem * gens[f"y{k}"] ** (-e)
    return elem


def _embed_base(data, d):
    out = data.ring.coerce(d)
    for level in data.tower():
        out = level.embed(out)
    return out


def element_to_monomial(data, elem):
    """Flatten a single-term tower element back to a multi-monomial."""
    alpha = []
    current = elem
    for _ in range(data.n):
        if not isinstance(current, GwaElem):
            raise NotRecognizedNormalForm("not a tower element")
        if len(current.coeffs) == 0:
            return MultiMonomial(data.ring.zero(), (0,) * data.n)
        if len(current.coeffs) != 1:
            raise NotRecognizedNormalForm("element is not a monomial")
        ((i, c),) = current.coeffs.items()
        alpha.append(i)
        current = c
    return MultiMonomial(current, tuple(reversed(alpha)))


def multi_mul(data, u, v):
    """Product of two multi-monomials, as a multi-monomial."""
    eu = monomial_to_element(data, u)
    ev = monomial_to_element(data, v)
    return element_to_monomial(data, eu * ev)


def verify_rankn(data, rng=None):
    """Check the defining-data equations on generators.

    Families: per-index rank-1 conditions (C1-3), the mixed defining
    conditions (C4-7), the coefficient intertwining rules (R1-4), and the
    coefficient images (R5-8).
    """
    checks = []
    ring = data.ring
    gens = list(ring.gens().values())
    if rng is not None:
        gens = gens + [ring.random_element(rng, 2) for _ in range(5)]

    def add(name, ok, witness=None):
        checks.append(CheckResult(name, ok, witness))

    for i in range(1, data.n + 1):
        s, t, a = data.sigma(i), data.tau(i), data.a(i)
        add(f"C1[{i}]", t(s(a)) == a)
        ok = True
        wit = None
        for d in gens:
            if a * d != t(s(d)) * a:
                ok, wit = False, repr(d)
                break
            if s(a) * d != s(t(d)) * s(a):
                ok, wit = False, repr(d)
                break
        add(f"C2-3[{i}]", ok, wit)

    for i in range(2, data.n + 1):
        for j in range(1, i):
            si, ti, ai = data.sigma(i), data.tau(i), data.a(i)
            sj, tj, aj = data.sigma(j), data.tau(j), data.a(j)
            lam = data.coeff("lam", i, j)
            lamp = data.coeff("lamp", i, j)
            mu = data.coeff("mu", i, j)
            mup = data.coeff("mup", i, j)

            add(f"C4[{i},{j}]", ai == ti(lam) * mu * sj(ai))
            add(f"C5[{i},{j}]", ai == ti(lamp) * mup * tj(ai))
            add(f"C6[{i},{j}]", si(ai) == si(mu) * lam * sj(si(ai)))
            add(f"C7[{i},{j}]", si(ai) == si(mup) * lamp * tj(si(ai)))

            ok, wit = True, None
            for d in gens:
                if lam * sj(si(d)) != si(sj(d)) * lam:
                    ok, wit = False, f"R1 at {d!r}"
                    break
                if mu * sj(ti(d)) != ti(sj(d)) * mu:
                    ok, wit = False, f"R2 at {d!r}"
                    break
                if lamp * tj(si(d)) != si(tj(d)) * lamp:
                    ok, wit = False, f"R3 at {d!r}"
                    break
                if mup * tj(ti(d)) != ti(tj(d)) * mup:
                    ok, wit = False, f"R4 at {d!r}"
                    break
            add(f"R1-4[{i},{j}]", ok, wit)

            add(f"R5[{i},{j}]", si(aj) == lamp * tj(lam) * aj)
            add(f"R6[{i},{j}]", ti(aj) == mup * tj(mu) * aj)
            add(f"R7[{i},{j}]", si(sj(aj)) == lam * sj(lamp) * sj(aj))
            add(f"R8[{i},{j}]", ti(sj(aj)) == mu * sj(mup) * sj(aj))

    return ValidationReport(checks)


# ---------------------------------------------------------------------------
# the conjugation-twist constructor


def build_from_theta(ring, thetas, alphas, betas):
    """Rank-n data from commuting twists theta_i and elements alpha_i,
    beta_i, with sigma_i = theta_i, tau_i = theta_i^-1 (commutative D) and
    a_i = alpha_i * beta_i.

    The commutation coefficients are exact ratios

        lam[i,j]  = th_i(b_i) th_i th_j(b_j) / (th_i th_j(b_i) th_j(b_j))
        lam'[i,j] = th_i(b_i a_j) / (th_j^-1 th_i(b_i) a_j)
        mu[i,j]   = a_i th_i^-1 th_j(b_j) / (th_j(a_i) th_j(b_j))
        mu'[i,j]  = a_i th_i^-1(a_j) / (th_j^-1(a_i) a_j)

    (a = alpha, b = beta); each ratio must land back in D, otherwise
    CoefficientNotInRing is raised.  A noncommutative quantum-plane base
    with monomial alpha, beta is also supported: there every ratio
    telescopes to a scalar times a monomial.
    """
    n = len(thetas)
    if not (len(alphas) == len(betas) == n):
        raise UnsupportedFamily("theta, alpha, beta lists must align")
    if isinstance(ring, PolyRing):
        return _build_commutative(ring, thetas, alphas, betas)
    if isinstance(ring, SkewPolyRing):
        return _build_monomial(ring, thetas, alphas, betas)
    raise UnsupportedFamily(f"no constructor for {ring}")


def _build_commutative(ring, thetas, alphas, betas):
    n = len(thetas)
    alphas = [ring.coerce(a) for a in alphas]
    betas = [ring.coerce(b) for b in betas]
    inverses = []
    for th in thetas:
        inv = endo_try_inverse(th)
        if inv is None:
            raise UnsupportedFamily("theta twists must be invertible")
        inverses.append(inv)
    for i in range(n):
        for j in range(i + 1, n):
            a = endo_compose(thetas[i], thetas[j])
            b = endo_compose(thetas[j], thetas[i])
            if a.images != b.images:
                raise ThetaNotCommuting(f"theta_{i + 1} and theta_{j + 1}")

    def ratio(num, den):
        q = poly_divexact(num, den)
        if q is None:
            raise CoefficientNotInRing(f"{num!r} / {den!r}")
        return q

    coeffs = {"lam": {}, "lamp": {}, "mu": {}, "mup": {}}
    for i in range(2, n + 1):
        for j in range(1, i):
            thi, thj = thetas[i - 1], thetas[j - 1]
            thii, thji = inverses[i - 1], inverses[j - 1]
            ai, bi = alphas[i - 1], betas[i - 1]
            aj, bj = alphas[j - 1], betas[j - 1]
            coeffs["lam"][(i, j)] = ratio(
                thi(bi) * thi(thj(bj)), thi(thj(bi)) * thj(bj)
            )
            coeffs["lamp"][(i, j)] = ratio(thi(bi * aj), thji(thi(bi)) * aj)
            coeffs["mu"][(i, j)] = ratio(ai * thii(thj(bj)), thj(ai) * thj(bj))
            coeffs["mup"][(i, j)] = ratio(ai * thii(aj), thji(ai) * aj)

    sigmas = list(thetas)
    taus = list(inverses)
    a_list = [a * b for a, b in zip(alphas, betas)]
    return RankNData(ring, sigmas, taus, a_list, coeffs)


def _monomial_parts(ring, elem):
    """(scalar, exponent vector) of a monomial in a quantum-plane handle."""
    if len(elem.coeffs) != 1:
        raise UnsupportedFamily("alpha and beta must be monomials")
    ((i, base),) = elem.coeffs.items()
    if len(base.coeffs) != 1:
        raise UnsupportedFamily("alpha and beta must be monomials")
    ((jexp, c),) = base.coeffs.items()
    return c, (jexp[0], i)


def _build_monomial(ring, thetas, alphas, betas):
    """Quantum-plane branch: formal monomial calculus with telescoping.

    All intermediates are tracked as (scalar, exponent vector in Z^2);
    the final coefficients must have nonnegative exponents.
    """
    from .endos import classify_monomial, classify_monomial_twist, omega_of_normal

    n = len(thetas)
    field = ring.field
    lam_twist = classify_monomial_twist(ring)
    if lam_twist is None:
        raise UnsupportedFamily("base must be a monomial-twist skew handle")
    alphas = [_monomial_parts(ring, ring.coerce(a)) for a in alphas]
    betas = [_monomial_parts(ring, ring.coerce(b)) for b in betas]

    theta_scalars = []
    for th in thetas:
        mono = classify_monomial(th)
        if mono is None:
            raise UnsupportedFamily("theta twists must be monomial")
        qname = ring.base.variables[0]
        theta_scalars.append((mono[qname], mono[ring.var]))

    def apply_theta(k, value, invert=False):
        c, (eq, ep) = value
        sq, sp = theta_scalars[k]
        if invert:
            sq, sp = field.inv(sq), field.inv(sp)
        factor = field.mul(_power(field, sq, eq), _power(field, sp, ep))
        return field.mul(c, factor), (eq, ep)

    def apply_omega(normal, value):
        # conjugation by c*q^j*p^i scales q by lam^i and p by lam^-j
        _, (j, i) = normal
        c, (eq, ep) = value
        factor = field.mul(
            _power(field, lam_twist, i * eq),
            _power(field, field.inv(lam_twist), j * ep),
        )
        return field.mul(c, factor), (eq, ep)

    def mul(u, v):
        cu, (equ, epu) = u
        cv, (eqv, epv) = v
        # reorder p^epu past q^eqv: p q = lam q p
        factor = _power(field, lam_twist, epu * eqv)
        return field.mul(field.mul(cu, cv), factor), (equ + eqv, epu + epv)

    def inv(u):
        c, (eq, ep) = u
        # (q^a p^b)^-1 = lam^(a*b) q^-a p^-b with the same reorder rule
        factor = _power(field, lam_twist, eq * ep)
        return field.mul(field.inv(c), factor), (-eq, -ep)

    def sigma_apply(k, value):
        # sigma_k = theta_k o omega_(beta_k)
        return apply_theta(k, apply_omega(betas[k], value))

    def tau_apply(k, value):
        # tau_k = omega_(alpha_k) o theta_k^-1
        return apply_omega(alphas[k], apply_theta(k, value, invert=True))

    def to_ring(value):
        c, (eq, ep) = value
        if eq < 0 or ep < 0:
            raise CoefficientNotInRing(f"monomial exponents {(eq, ep)}")
        base = ring.base._make({(eq,): c})
        return ring._make({ep: base})

    coeffs = {"lam": {}, "lamp": {}, "mu": {}, "mup": {}}
    for i in range(2, n + 1):
        for j in range(1, i):
            ai, bi = alphas[i - 1], betas[i - 1]
            aj, bj = alphas[j - 1], betas[j - 1]
            ii, jj = i - 1, j - 1
            lam = mul(
                mul(apply_theta(ii, bi), apply_theta(ii, apply_theta(jj, mul(bj, inv(bi))))),
                apply_theta(jj, inv(bj)),
            )
            lamp = mul(
                mul(apply_theta(ii, mul(bi, aj)), apply_theta(jj, apply_theta(ii, inv(bi)), invert=True)),
                inv(aj),
            )
            mu = mul(
                mul(ai, apply_theta(ii, apply_theta(jj, bj), invert=True)),
                apply_theta(jj, mul(inv(ai), inv(bj))),
            )
            mup = mul(
                mul(ai, apply_theta(ii, aj, invert=True)),
                mul(apply_theta(jj, inv(ai), invert=True), inv(aj)),
            )
            coeffs["lam"][(i, j)] = to_ring(lam)
            coeffs["lamp"][(i, j)] = to_ring(lamp)
            coeffs["mu"][(i, j)] = to_ring(mu)
            coeffs["mup"][(i, j)] = to_ring(mup)

    sigmas = []
    taus = []
    a_list = []
    for k in range(n):
        omega_b = omega_of_normal(ring, to_ring(betas[k]))
        omega_a = omega_of_normal(ring, to_ring(alphas[k]))
        th = thetas[k]
        th_inv = endo_try_inverse(th)
        if th_inv is None:
            raise UnsupportedFamily("theta twists must be invertible")
        sigmas.append(endo_compose(th, omega_b))
        taus.append(endo_compose(omega_a, th_inv))
        a_list.append(to_ring(mul(alphas[k], betas[k])))
    return RankNData(ring, sigmas, taus, a_list, coeffs)


def _power(field, base, exp):
    if exp < 0:
        base = field.inv(base)
        exp = -exp
    out = field.one
    for _ in range(exp):
        out = field.mul(out, base)
    return out
