"""Base ring handles and their elements.

Three concrete handles live here:

* ``PolyRing``    -- commutative polynomials in zero or more variables over
                     an exact field, optionally Laurent (single variable,
                     exponents in Z).
* ``SkewPolyRing`` -- twisted polynomials ``B[t; nu]`` over a commutative
                     base ring B, with the left-normal rule ``t*d = nu(d)*t``.
                     The quantum plane is ``K[q][p; q -> lam*q]``.

Elements store their coefficients sparsely (exponent -> coefficient) and
overload the arithmetic operators.  Mixing elements of different handles
raises ``HandleMismatch``.
"""

from fractions import Fraction

from .errors import (
    HandleMismatch,
    NegativeExponentOutsideLaurent,
    NotUnivariate,
    UnsupportedOperation,
    UnsupportedRing,
)


def _check_same_ring(a, b):
    if a.ring != b.ring:
        raise HandleMismatch(f"operands live in {a.ring} and {b.ring}")


class Ring:
    """Abstract ring handle."""

    def zero(self):
        raise NotImplementedError

    def one(self):
        raise NotImplementedError

    def from_scalar(self, c):
        raise NotImplementedError

    def from_int(self, n):
        return self.from_scalar(self.field.of(n))

    def gens(self):
        """Mapping generator name -> element."""
        raise NotImplementedError

    def gen_names(self):
        return tuple(self.gens().keys())

    def coerce(self, value):
        if isinstance(value, (int, Fraction)):
            return self.from_scalar(self.field.coerce(value))
        if getattr(value, "ring", None) == self:
            return value
        raise HandleMismatch(f"cannot coerce {value!r} into {self}")

    def is_commutative(self):
        raise NotImplementedError

    def is_domain(self):
        return True

    def characteristic(self):
        return self.field.characteristic

    def is_unit(self, elem):
        raise NotImplementedError

    def is_regular(self, elem):
        # every handle here is a domain
        return not elem.is_zero()

    def invert(self, elem):
        """Return the inverse of a unit, or None."""
        raise NotImplementedError

    def random_element(self, rng, size=3):
        raise NotImplementedError


class _ElementOps:
    """Shared operator plumbing for sparse dict-backed elements."""

    __slots__ = ()

    def _coerced(self, other):
        if isinstance(other, (int, Fraction)):
            return self.ring.coerce(other)
        if isinstance(other, _ElementOps):
            _check_same_ring(self, other)
            return other
        return None

    def __add__(self, other):
        other = self._coerced(other)
        if other is None:
            return NotImplemented
        return self._add(other)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerced(other)
        if other is None:
            return NotImplemented
        return self._add(other._neg())

    def __rsub__(self, other):
        other = self._coerced(other)
        if other is None:
            return NotImplemented
        return other._add(self._neg())

    def __neg__(self):
        return self._neg()

    def __mul__(self, other):
        other = self._coerced(other)
        if other is None:
            return NotImplemented
        return self._mul(other)

    def __rmul__(self, other):
        other = self._coerced(other)
        if other is None:
            return NotImplemented
        return other._mul(self)

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            inv = self.ring.invert(self)
            if inv is None:
                raise NegativeExponentOutsideLaurent(
                    f"{self} is not invertible in {self.ring}"
                )
            return inv ** (-n)
        result = self.ring.one()
        base = self
        k = n
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        other = self._coerced(other)
        if other is None:
            return NotImplemented
        return self._eq(other)

    def __hash__(self):
        raise TypeError("ring elements are not hashable")


class PolyRing(Ring):
    """Commutative (Laurent) polynomial ring over an exact field."""

    def __init__(self, field, variables=(), laurent=False):
        variables = tuple(variables)
        if laurent and len(variables) != 1:
            raise UnsupportedRing("Laurent handles are univariate")
        if len(set(variables)) != len(variables):
            raise UnsupportedRing("duplicate variable names")
        self.field = field
        self.variables = variables
        self.laurent = laurent

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and other.field == self.field
            and other.variables == self.variables
            and other.laurent == self.laurent
        )

    def __hash__(self):
        return hash(("poly", self.field, self.variables, self.laurent))

    def __repr__(self):
        if not self.variables:
            return repr(self.field)
        vs = ",".join(self.variables)
        if self.laurent:
            return f"{self.field}[{vs}^+-1]"
        return f"{self.field}[{vs}]"

    def _make(self, coeffs):
        clean = {e: c for e, c in coeffs.items() if not self.field.is_zero(c)}
        if not self.laurent:
            for e in clean:
                if any(k < 0 for k in e):
                    raise NegativeExponentOutsideLaurent(str(e))
        return PolyElement(self, clean)

    def zero(self):
        return PolyElement(self, {})

    def one(self):
        return self.from_scalar(self.field.one)

    def from_scalar(self, c):
        c = self.field.coerce(c)
        if self.field.is_zero(c):
            return self.zero()
        return PolyElement(self, {(0,) * len(self.variables): c})

    def gen(self, name):
        idx = self.variables.index(name)
        exp = tuple(1 if i == idx else 0 for i in range(len(self.variables)))
        return PolyElement(self, {exp: self.field.one})

    def gens(self):
        return {v: self.gen(v) for v in self.variables}

    def is_commutative(self):
        return True

    def is_unit(self, elem):
        if elem.ring != self:
            raise HandleMismatch("wrong ring")
        if len(elem.coeffs) != 1:
            return False
        (exp,) = elem.coeffs
        if self.laurent:
            return True
        return all(k == 0 for k in exp)

    def invert(self, elem):
        if not self.is_unit(elem):
            return None
        ((exp, c),) = elem.coeffs.items()
        inv_exp = tuple(-k for k in exp)
        return self._make({inv_exp: self.field.inv(c)})

    def random_element(self, rng, size=3):
        nv = len(self.variables)
        coeffs = {}
        for _ in range(rng.randint(1, max(1, size))):
            if self.laurent:
                exp = (rng.randint(-size, size),)
            else:
                exp = tuple(rng.randint(0, size) for _ in range(nv))
            c = self._random_scalar(rng)
            coeffs[exp] = self.field.add(coeffs.get(exp, self.field.zero), c)
        return self._make(coeffs)

    def _random_scalar(self, rng):
        if self.field.characteristic == 0:
            return Fraction(rng.randint(-5, 5), rng.randint(1, 3))
        return rng.randint(0, self.field.characteristic - 1)


class PolyElement(_ElementOps):
    __slots__ = ("ring", "coeffs")

    def __init__(self, ring, coeffs):
        self.ring = ring
        self.coeffs = coeffs

    def is_zero(self):
        return not self.coeffs

    def is_scalar(self):
        return all(all(k == 0 for k in e) for e in self.coeffs)

    def scalar_value(self):
        if self.is_zero():
            return self.ring.field.zero
        ((exp, c),) = self.coeffs.items()
        if any(k != 0 for k in exp):
            raise UnsupportedOperation("not a scalar")
        return c

    def total_degree(self):
        if self.is_zero():
            return -1
        return max(sum(e) for e in self.coeffs)

    def degree_in(self, idx=0):
        if self.is_zero():
            return -1
        return max(e[idx] for e in self.coeffs)

    def _add(self, other):
        field = self.ring.field
        coeffs = dict(self.coeffs)
        for e, c in other.coeffs.items():
            coeffs[e] = field.add(coeffs.get(e, field.zero), c)
        return self.ring._make(coeffs)

    def _neg(self):
        field = self.ring.field
        return PolyElement(self.ring, {e: field.neg(c) for e, c in self.coeffs.items()})

    def _mul(self, other):
        field = self.ring.field
        coeffs = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                prod = field.mul(c1, c2)
                coeffs[e] = field.add(coeffs.get(e, field.zero), prod)
        return self.ring._make(coeffs)

    def _eq(self, other):
        return self.coeffs == other.coeffs

    def __repr__(self):
        from .parser import render

        return render(self)


class SkewPolyRing(Ring):
    """Twisted polynomial ring B[t; nu] with rule t*d = nu(d)*t.

    The twist ``nu`` is an endomorphism object of the base ring exposing
    ``__call__`` and ``pow_apply(i, elem)``.
    """

    def __init__(self, base, var, twist):
        if not base.is_commutative():
            raise UnsupportedRing("skew handles need a commutative base")
        if var in base.gen_names():
            raise UnsupportedRing(f"variable {var} shadows a base generator")
        self.base = base
        self.var = var
        self.twist = twist
        self.field = base.field

    def __eq__(self, other):
        return (
            isinstance(other, SkewPolyRing)
            and other.base == self.base
            and other.var == self.var
            and other.twist == self.twist
        )

    def __hash__(self):
        return hash(("skew", self.base, self.var))

    def __repr__(self):
        return f"{self.base}[{self.var};nu]"

    def _make(self, coeffs):
        return SkewPolyElement(
            self, {i: c for i, c in coeffs.items() if not c.is_zero()}
        )

    def zero(self):
        return SkewPolyElement(self, {})

    def one(self):
        return self.embed(self.base.one())

    def from_scalar(self, c):
        return self.embed(self.base.from_scalar(c))

    def embed(self, base_elem):
        if base_elem.ring != self.base:
            raise HandleMismatch("wrong base ring")
        if base_elem.is_zero():
            return self.zero()
        return SkewPolyElement(self, {0: base_elem})

    def t(self):
        return SkewPolyElement(self, {1: self.base.one()})

    def gens(self):
        out = {name: self.embed(g) for name, g in self.base.gens().items()}
        out[self.var] = self.t()
        return out

    def is_commutative(self):
        return False

    def is_unit(self, elem):
        if elem.ring != self:
            raise HandleMismatch("wrong ring")
        if set(elem.coeffs) != {0}:
            return False
        return self.base.is_unit(elem.coeffs[0])

    def invert(self, elem):
        if not self.is_unit(elem):
            return None
        return self.embed(self.base.invert(elem.coeffs[0]))

    def random_element(self, rng, size=3):
        coeffs = {}
        for _ in range(rng.randint(1, max(1, size))):
            i = rng.randint(0, size)
            c = self.base.random_element(rng, size)
            coeffs[i] = coeffs.get(i, self.base.zero()) + c
        return self._make(coeffs)

    def base_part(self, elem):
        """Degree-0 coefficient, as a base element."""
        return elem.coeffs.get(0, self.base.zero())


class SkewPolyElement(_ElementOps):
    __slots__ = ("ring", "coeffs")

    def __init__(self, ring, coeffs):
        self.ring = ring
        self.coeffs = coeffs

    def is_zero(self):
        return not self.coeffs

    def degree(self):
        return max(self.coeffs) if self.coeffs else -1

    def _add(self, other):
        coeffs = dict(self.coeffs)
        for i, c in other.coeffs.items():
            coeffs[i] = coeffs.get(i, self.ring.base.zero()) + c
        return self.ring._make(coeffs)

    def _neg(self):
        return SkewPolyElement(self.ring, {i: -c for i, c in self.coeffs.items()})

    def _mul(self, other):
        twist = self.ring.twist
        coeffs = {}
        for i, c in self.coeffs.items():
            for j, d in other.coeffs.items():
                term = c * twist.pow_apply(i, d)
                k = i + j
                coeffs[k] = coeffs.get(k, self.ring.base.zero()) + term
        return self.ring._make(coeffs)

    def _eq(self, other):
        return self.coeffs == other.coeffs

    def __repr__(self):
        from .parser import render

        return render(self)


# ---------------------------------------------------------------------------
# univariate commutative helpers


def _require_univariate(elem):
    ring = elem.ring
    if not isinstance(ring, PolyRing) or len(ring.variables) != 1 or ring.laurent:
        raise NotUnivariate(f"{ring} is not a plain univariate polynomial ring")
    return ring


def _univ_coeffs(elem):
    """Dense coefficient list, lowest degree first."""
    ring = _require_univariate(elem)
    if elem.is_zero():
        return []
    n = elem.degree_in(0)
    out = [ring.field.zero] * (n + 1)
    for (e,), c in elem.coeffs.items():
        out[e] = c
    return out


def univ_from_coeffs(ring, coeffs):
    return ring._make({(i,): ring.field.coerce(c) for i, c in enumerate(coeffs)})


def poly_divmod(a, b):
    """Euclidean division in K[h]; returns (q, r) with deg r < deg b."""
    ring = _require_univariate(a)
    if b.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    field = ring.field
    ac = _univ_coeffs(a)
    bc = _univ_coeffs(b)
    q = [field.zero] * max(0, len(ac) - len(bc) + 1)
    rem = list(ac)
    lead_inv = field.inv(bc[-1])
    while len(rem) >= len(bc):
        k = len(rem) - len(bc)
        factor = field.mul(rem[-1], lead_inv)
        q[k] = factor
        for i, c in enumerate(bc):
            rem[k + i] = field.sub(rem[k + i], field.mul(factor, c))
        while rem and field.is_zero(rem[-1]):
            rem.pop()
    return univ_from_coeffs(ring, q), univ_from_coeffs(ring, rem)


def poly_gcd(a, b):
    """Monic gcd in K[h] (zero if both inputs are zero)."""
    ring = _require_univariate(a if not a.is_zero() else b)
    field = ring.field
    x, y = a, b
    while not y.is_zero():
        _, r = poly_divmod(x, y)
        x, y = y, r
    if x.is_zero():
        return x
    lead = _univ_coeffs(x)[-1]
    return x * ring.from_scalar(field.inv(lead))


def poly_divexact(num, den):
    """Exact multivariate division num/den over a field, or None.

    Lex leading-term elimination; succeeds exactly when den divides num.
    """
    ring = num.ring
    if den.ring != ring:
        raise HandleMismatch("mixed rings in division")
    if den.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    field = ring.field
    den_lead = max(den.coeffs)
    den_lc = den.coeffs[den_lead]
    quo = {}
    rem = dict(num.coeffs)
    while rem:
        lead = max(rem)
        diff = tuple(a - b for a, b in zip(lead, den_lead))
        if any(d < 0 for d in diff):
            return None
        factor = field.div(rem[lead], den_lc)
        quo[diff] = factor
        for e, c in den.coeffs.items():
            tgt = tuple(a + b for a, b in zip(diff, e))
            val = field.sub(rem.get(tgt, field.zero), field.mul(factor, c))
            if field.is_zero(val):
                rem.pop(tgt, None)
            else:
                rem[tgt] = val
    return ring._make(quo)


def univ_compose_shift(a, i):
    """a(h - i) for integer i, in K[h]."""
    ring = _require_univariate(a)
    h = ring.gen(ring.variables[0])
    shifted = h - ring.from_int(i)
    return univ_evaluate(a, shifted)


def univ_evaluate(a, value):
    """Evaluate a in K[h] at an element of any commutative ring."""
    _require_univariate(a)
    ring = value.ring
    result = ring.zero()
    power = ring.one()
    last = 0
    for e, c in sorted((e[0], c) for e, c in a.coeffs.items()):
        power = power * value ** (e - last) if e != last else power
        last = e
        result = result + ring.from_scalar(c) * power
    return result


class CoprimalityScan:
    """Positive integers i where gcd(a, sigma^i(a)) is not a unit.

    ``failures`` holds all such i when ``complete`` is true; otherwise it
    holds those found up to ``bound``.  ``all_fail`` marks the degenerate
    case where every i fails (common factor fixed by the family).
    """

    def __init__(self, failures, complete, bound=None, all_fail=False):
        self.failures = sorted(failures)
        self.complete = complete
        self.bound = bound
        self.all_fail = all_fail

    def first_failure(self):
        if self.all_fail:
            return 1
        return self.failures[0] if self.failures else None


def _cauchy_root_bound(coeffs, field):
    """1 + max |c_k / c_n| over Q; coeffs dense, lowest first."""
    lead = coeffs[-1]
    best = Fraction(0)
    for c in coeffs[:-1]:
        r = abs(Fraction(c) / Fraction(lead))
        if r > best:
            best = r
    return 1 + best


def resultant_in_shift(a, family, q=None, bound=None):
    """Positive integer solutions of the shifted common-root problem.

    For the shift family this is the set of positive integers i with
    Res_h(a(h), a(h - i)) = 0, equivalently gcd(a(h), a(h - i)) non-unit.
    Decided by gcd enumeration up to a proven bound: over Q the candidates
    are differences of roots, bounded by twice the Cauchy root bound; in
    characteristic p the shift orbit has period p.  For the q-dilation
    family the candidates i satisfy q^i = (root ratio), bounded through
    root magnitudes, or scanned over one period when q has finite order.
    """
    ring = _require_univariate(a)
    field = ring.field
    p = field.characteristic
    if a.is_zero():
        return CoprimalityScan([], True, all_fail=True)
    if ring.is_unit(a):
        return CoprimalityScan([], True)

    def scan(limit):
        fails = []
        for i in range(1, limit + 1):
            if family == "shift":
                other = univ_compose_shift(a, i)
            else:
                h = ring.gen(ring.variables[0])
                other = univ_evaluate(a, ring.from_scalar(q ** i) * h)
            g = poly_gcd(a, other)
            if not ring.is_unit(g):
                fails.append(i)
        return fails

    if family == "shift":
        if p > 0:
            return CoprimalityScan(scan(p), True, bound=p)
        limit = int(2 * _cauchy_root_bound(_univ_coeffs(a), field)) + 1
        return CoprimalityScan(scan(limit), True, bound=limit)

    if family == "dilation":
        if q is None:
            raise UnsupportedOperation("dilation scan needs q")
        q = field.coerce(q)
        low = min(e[0] for e in a.coeffs)
        if low > 0:
            # h divides a, and divides every dilate of a
            return CoprimalityScan([], True, all_fail=True)
        if p > 0:
            # q has finite multiplicative order dividing p - 1
            order = 1
            acc = q
            while not field.is_one(acc):
                acc = field.mul(acc, q)
                order += 1
            fails = scan(order)
            return CoprimalityScan(fails, True, bound=order)
        if q in (1, -1):
            fails = scan(2)
            if fails:
                return CoprimalityScan(fails, True, bound=2, all_fail=False)
            return CoprimalityScan([], True, bound=2)
        coeffs = _univ_coeffs(a)
        upper = _cauchy_root_bound(coeffs, field)
        # reversed polynomial bounds nonzero roots away from zero
        nz = [c for c in reversed(coeffs) if True]
        lower_bound = _cauchy_root_bound(list(reversed(coeffs)), field)
        ratio_cap = upper * lower_bound
        aq = abs(q) if abs(q) > 1 else 1 / abs(q)
        limit = 1
        acc = aq
        while acc <= ratio_cap:
            acc *= aq
            limit += 1
        return CoprimalityScan(scan(limit), True, bound=limit)

    raise UnsupportedOperation(f"unknown family {family!r}")
