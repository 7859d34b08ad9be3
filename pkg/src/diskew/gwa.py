"""Graded algebras with one raising and one lowering generator.

``GwaData`` packages a base ring D, two endomorphisms sigma and tau, and a
defining element a.  The algebra is Z-graded with degree-i component
D*v_i, where v_i = x^i for i > 0, v_i = y^(-i) for i < 0, and v_0 = 1.
The defining relations are

    x*d = sigma(d)*x,   y*d = tau(d)*y,   y*x = a,   x*y = sigma(a).

``GwaElem`` stores a graded normal form: a map from degrees to left
coefficients in D.  Products reduce through memoized structure constants
(n, m) with v_n * v_m = (n, m) * v_(n+m).
"""

from dataclasses import dataclass

from .endos import RingEndo, endo_compose, identity_endo, kernel_union_is_zero
from .errors import (
    AlgebraMismatch,
    NotUnivariate,
    StarNotInvolution,
    UnsupportedRing,
    ZeroDegreeRequest,
)
from .rings import PolyRing, Ring, poly_gcd


@dataclass
class CheckResult:
    name: str
    ok: bool
    witness: str | None = None


class ValidationReport:
    def __init__(self, checks):
        self.checks = list(checks)

    @property
    def ok(self):
        return all(c.ok for c in self.checks)

    def failures(self):
        return [c for c in self.checks if not c.ok]


class GwaData:
    """Defining data (D, sigma, tau, a) of a graded algebra."""

    def __init__(self, ring, sigma, tau, a, xname="x", yname="y"):
        if xname in ring.gen_names() or yname in ring.gen_names():
            raise UnsupportedRing("generator names shadow base generators")
        self.ring = ring
        self.sigma = sigma
        self.tau = tau
        self.a = ring.coerce(a)
        self.xname = xname
        self.yname = yname
        self._sc_cache = {}

    def __eq__(self, other):
        if not isinstance(other, GwaData):
            return NotImplemented
        return (
            other.ring == self.ring
            and other.sigma == self.sigma
            and other.tau == self.tau
            and other.a == self.a
            and other.xname == self.xname
            and other.yname == self.yname
        )

    def __hash__(self):
        return hash(id(self))

    def __repr__(self):
        return f"GWA({self.ring}, a={self.a!r})"

    def twist(self, i):
        """The degree-i twist: sigma^i for i >= 0, tau^|i| for i < 0."""
        if i >= 0:
            return self.sigma.pow(i)
        return self.tau.pow(-i)

    def structure_constant(self, n, m):
        """(n, m) with v_n * v_m = (n, m) * v_(n+m), memoized."""
        key = (n, m)
        cached = self._sc_cache.get(key)
        if cached is not None:
            return cached
        if n > 0 and m < 0:
            k = -m
            lo = max(n - k + 1, 1)
            result = self.ring.one()
            for t in range(n, lo - 1, -1):
                result = result * self.sigma.pow_apply(t, self.a)
        elif n < 0 and m > 0:
            k = -n
            lo = k - m if k >= m else 0
            result = self.ring.one()
            for t in range(k - 1, lo - 1, -1):
                result = result * self.tau.pow_apply(t, self.a)
        else:
            result = self.ring.one()
        self._sc_cache[key] = result
        return result

    # element constructors -------------------------------------------------

    def zero(self):
        return GwaElem(self, {})

    def one(self):
        return self.from_base(self.ring.one())

    def from_base(self, d):
        d = self.ring.coerce(d)
        if d.is_zero():
            return self.zero()
        return GwaElem(self, {0: d})

    def from_scalar(self, c):
        return self.from_base(self.ring.from_scalar(c))

    def from_int(self, n):
        return self.from_base(self.ring.from_int(n))

    def monomial(self, d, i):
        d = self.ring.coerce(d)
        if d.is_zero():
            return self.zero()
        return GwaElem(self, {i: d})

    def x(self):
        return self.monomial(self.ring.one(), 1)

    def y(self):
        return self.monomial(self.ring.one(), -1)

    def gens(self):
        out = {name: self.from_base(g) for name, g in self.ring.gens().items()}
        out[self.xname] = self.x()
        out[self.yname] = self.y()
        return out

    def random_element(self, rng, size=2, width=2):
        coeffs = {}
        for _ in range(rng.randint(1, width + 1)):
            i = rng.randint(-width, width)
            d = self.ring.random_element(rng, size)
            coeffs[i] = coeffs.get(i, self.ring.zero()) + d
        return GwaElem(self, {i: d for i, d in coeffs.items() if not d.is_zero()})


class GwaElem:
    __slots__ = ("algebra", "coeffs")

    def __init__(self, algebra, coeffs):
        self.algebra = algebra
        self.coeffs = coeffs

    def is_zero(self):
        return not self.coeffs

    def support(self):
        return sorted(self.coeffs)

    def coefficient(self, i):
        return self.coeffs.get(i, self.algebra.ring.zero())

    def _coerced(self, other):
        if isinstance(other, GwaElem):
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
        coeffs = dict(self.coeffs)
        ring = self.algebra.ring
        for i, d in other.coeffs.items():
            coeffs[i] = coeffs.get(i, ring.zero()) + d
        return GwaElem(self.algebra, {i: d for i, d in coeffs.items() if not d.is_zero()})

    __radd__ = __add__

    def __neg__(self):
        return GwaElem(self.algebra, {i: -d for i, d in self.coeffs.items()})

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
        ring = alg.ring
        coeffs = {}
        for i, d in self.coeffs.items():
            twist = alg.twist(i)
            for j, e in other.coeffs.items():
                term = d * twist(e) * alg.structure_constant(i, j)
                k = i + j
                acc = coeffs.get(k)
                coeffs[k] = term if acc is None else acc + term
        return GwaElem(alg, {i: d for i, d in coeffs.items() if not d.is_zero()})

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


class GwaRing(Ring):
    """Ring-handle view of a graded algebra, for iterated constructions."""

    def __init__(self, data):
        self.data = data
        self.field = data.ring.field

    def __eq__(self, other):
        return isinstance(other, GwaRing) and other.data == self.data

    def __hash__(self):
        return hash(id(self.data))

    def __repr__(self):
        return f"ring({self.data!r})"

    def zero(self):
        return self.data.zero()

    def one(self):
        return self.data.one()

    def from_scalar(self, c):
        return self.data.from_scalar(c)

    def coerce(self, value):
        if isinstance(value, GwaElem) and value.algebra == self.data:
            return value
        return super().coerce(value)

    def gens(self):
        return self.data.gens()

    def embed(self, elem):
        """Lift an element of the base ring into degree zero."""
        return self.data.from_base(elem)

    def is_commutative(self):
        return False

    def is_unit(self, elem):
        raise UnsupportedRing("no unit test for graded algebra handles")

    def invert(self, elem):
        return None

    def random_element(self, rng, size=2):
        return self.data.random_element(rng, size)


# ---------------------------------------------------------------------------
# data verification and structural operations


def _sample_elements(ring, rng, count):
    out = list(ring.gens().values())
    if rng is not None:
        out.extend(ring.random_element(rng, 2) for _ in range(count))
    return out


def verify_gwa_data(data, rng=None, samples=20):
    """Check the defining-data compatibility conditions.

    On generators plus sampled elements d:
      tau(sigma(a)) = a,
      a * d = tau(sigma(d)) * a,
      sigma(a) * d = sigma(tau(d)) * sigma(a).
    """
    a = data.a
    sigma, tau = data.sigma, data.tau
    checks = []
    ts = endo_compose(tau, sigma)
    st = endo_compose(sigma, tau)
    ok = ts(a) == a
    checks.append(CheckResult("tau_sigma_fixes_a", ok, None if ok else repr(a)))
    for d in _sample_elements(data.ring, rng, samples):
        if a * d != ts(d) * a:
            checks.append(CheckResult("a_normality", False, repr(d)))
            break
        if sigma(a) * d != st(d) * sigma(a):
            checks.append(CheckResult("sigma_a_normality", False, repr(d)))
            break
    else:
        checks.append(CheckResult("a_normality", True))
        checks.append(CheckResult("sigma_a_normality", True))
    return ValidationReport(checks)


def word_to_element(data, word):
    """Multiply a list of generator names / base elements left to right."""
    gens = data.gens()
    result = data.one()
    for token in word:
        if isinstance(token, str):
            if token not in gens:
                raise ZeroDegreeRequest(f"unknown generator {token!r}")
            result = result * gens[token]
        elif isinstance(token, GwaElem):
            result = result * token
        else:
            result = result * data.from_base(token)
    return result


def symmetric_data(data):
    """The same algebra presented with the generators exchanged."""
    return GwaData(
        data.ring,
        data.tau,
        data.sigma,
        data.sigma(data.a),
        xname=data.xname,
        yname=data.yname,
    )


def apply_symmetry(elem, target=None):
    """Image of an element under the generator-exchange isomorphism.

    The map sends x to the partner's raising generator built from y, so
    the grading reverses: degree i goes to degree -i.
    """
    data = elem.algebra
    if target is None:
        target = symmetric_data(data)
    return GwaElem(target, {-i: d for i, d in elem.coeffs.items()})


def check_involution_conditions(data, star):
    """Conditions for a base-ring involution to extend with x* = y.

    Requires star to be an involution of D; the extension conditions are
    sigma(star(tau(d))) = star(d), tau(star(sigma(d))) = star(d) on
    generators, star(a) = a, and star(sigma(a)) = sigma(a).
    """
    ring = data.ring
    if not endo_compose(star, star).is_identity():
        raise StarNotInvolution("star does not square to the identity")
    checks = []
    sst = endo_compose(data.sigma, endo_compose(star, data.tau))
    tss = endo_compose(data.tau, endo_compose(star, data.sigma))
    for name, g in ring.gens().items():
        ok1 = sst(g) == star(g)
        ok2 = tss(g) == star(g)
        checks.append(CheckResult(f"sigma_star_tau[{name}]", ok1, None if ok1 else name))
        checks.append(CheckResult(f"tau_star_sigma[{name}]", ok2, None if ok2 else name))
    ok = star(data.a) == data.a
    checks.append(CheckResult("star_fixes_a", ok))
    sa = data.sigma(data.a)
    ok = star(sa) == sa
    checks.append(CheckResult("star_fixes_sigma_a", ok))
    return ValidationReport(checks)


def apply_star(elem, star):
    """The involution: (d * v_i)* = v_(-i) * star(d)."""
    data = elem.algebra
    result = data.zero()
    for i, d in elem.coeffs.items():
        result = result + data.monomial(data.ring.one(), -i) * data.from_base(star(d))
    return result


def ideal_component(data, n, m):
    """Generators of the degree-m component of the two-sided ideal (v_n).

    Returned as a list of base-ring elements c with the component equal to
    the sum of D*c*v_m.
    """
    if n == 0:
        raise ZeroDegreeRequest("the ideal (v_0) is the whole algebra")
    ring = data.ring
    sc = data.structure_constant
    if n >= 1:
        if m >= n:
            return [ring.one()]
        return [
            sc(-i, n) * sc(n - i, m - n + i)
            for i in range(0, n - m + 1)
        ]
    k = -n
    if m <= n:
        return [ring.one()]
    return [
        sc(i, -k) * sc(-k + i, m + k - i)
        for i in range(0, k + m + 1)
    ]


def powers_generate_unit_ideal(data, i):
    """Whether D*a + D*sigma^i(a) = D, for univariate commutative D."""
    ring = data.ring
    if not isinstance(ring, PolyRing) or len(ring.variables) != 1 or ring.laurent:
        raise NotUnivariate("ideal membership is decided by gcd in K[h] only")
    g = poly_gcd(data.a, data.sigma.pow_apply(i, data.a))
    return ring.is_unit(g)


def _and3(*values):
    if any(v is False for v in values):
        return False
    if all(v is True for v in values):
        return True
    return None


def regularity_report(data):
    """Three-valued regularity flags for the two graded generators.

    Criteria (D a domain): x is right regular iff sigma is injective and
    a is nonzero; x is left regular iff tau^i(a) is nonzero for all i >= 0;
    the y flags are the tau/sigma(a) mirror images.
    """
    ring = data.ring
    a = data.a
    sa = data.sigma(data.a)
    sigma_inj = kernel_union_is_zero(data.sigma)
    tau_inj = kernel_union_is_zero(data.tau)
    a_nonzero = not a.is_zero()
    sa_nonzero = not sa.is_zero()

    def orbit_nonzero(endo, elem, inj, start):
        if elem.is_zero():
            return False
        if inj is True:
            return True
        current = elem
        for _ in range(10):
            current = endo(current)
            if current.is_zero():
                return False
        return None

    flags = {
        "x_right_regular": _and3(sigma_inj, a_nonzero),
        "x_left_regular": orbit_nonzero(data.tau, a, tau_inj, 0),
        "y_right_regular": _and3(tau_inj, sa_nonzero),
        "y_left_regular": orbit_nonzero(data.sigma, sa, sigma_inj, 1),
    }
    flags["x_regular"] = _and3(flags["x_right_regular"], flags["x_left_regular"])
    flags["y_regular"] = _and3(flags["y_right_regular"], flags["y_left_regular"])
    return flags


def domain_check(data):
    """True/False/None: the algebra is a domain iff D is, both twists are
    injective, and a is nonzero."""
    base = data.ring.is_domain()
    return _and3(
        True if base else None,
        kernel_union_is_zero(data.sigma),
        kernel_union_is_zero(data.tau),
        not data.a.is_zero(),
    )


def iprime_step(data, ideal_gens, depth):
    """One closure step sending an ideal I of D to

        I + sum_i D*sigma^i(I)*(i,-i) + D*tau^i(I)*(-i,i),   1 <= i <= depth,

    computed through gcds in K[h]; returns a single-generator list.
    """
    ring = data.ring
    if not isinstance(ring, PolyRing) or len(ring.variables) != 1 or ring.laurent:
        raise NotUnivariate("ideal closure is implemented over K[h]")
    gens = [ring.coerce(g) for g in ideal_gens]
    out = list(gens)
    for i in range(1, depth + 1):
        ci = data.structure_constant(i, -i)
        cmi = data.structure_constant(-i, i)
        for g in gens:
            out.append(data.sigma.pow_apply(i, g) * ci)
            out.append(data.tau.pow_apply(i, g) * cmi)
    acc = out[0]
    for g in out[1:]:
        acc = poly_gcd(acc, g)
    return [acc]
