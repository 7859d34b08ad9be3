"""Ring endomorphisms given by generator images.

An endo is stored as a map from generator names to elements of the ring.
Application extends homomorphically; whether the map really is a ring
homomorphism is the data owner's concern and is checked by the verify_*
routines that consume these objects.
"""

from fractions import Fraction

from .errors import (
    HandleMismatch,
    NoncommutativeUnsupported,
    UnsupportedFamily,
    UnsupportedOperation,
)
from .rings import PolyElement, PolyRing, SkewPolyElement, SkewPolyRing


class RingEndo:
    """Endomorphism of a ring handle, keyed by generator images."""

    def __init__(self, ring, images):
        names = set(ring.gen_names())
        if set(images) != names:
            missing = names - set(images)
            extra = set(images) - names
            raise UnsupportedOperation(
                f"generator images mismatch (missing {missing}, extra {extra})"
            )
        self.ring = ring
        self.images = {name: ring.coerce(img) for name, img in images.items()}
        self._pow_cache = {}

    def __eq__(self, other):
        if not isinstance(other, RingEndo):
            return NotImplemented
        return other.ring == self.ring and other.images == self.images

    def __hash__(self):
        return hash(id(self))

    def __repr__(self):
        parts = ", ".join(f"{n} -> {img!r}" for n, img in sorted(self.images.items()))
        return f"endo({parts})"

    def __call__(self, elem):
        return evaluate_on_generators(elem, self.images, self.ring)

    def pow(self, n):
        """The n-fold composite, memoized."""
        if n < 0:
            raise UnsupportedOperation("negative endo power")
        if n in self._pow_cache:
            return self._pow_cache[n]
        if n == 0:
            result = identity_endo(self.ring)
        elif n == 1:
            result = self
        else:
            result = endo_compose(self, self.pow(n - 1))
        self._pow_cache[n] = result
        return result

    def pow_apply(self, n, elem):
        return self.pow(n)(elem)

    def is_identity(self):
        gens = self.ring.gens()
        return all(self.images[n] == g for n, g in gens.items())


def evaluate_on_generators(elem, images, ring):
    """Evaluate an element (possibly of a lower ring in a tower) at images.

    Works structurally: polynomial monomials become products of generator
    images, skew and graded layers become powers of the relevant generator
    image multiplied on the right.
    """
    from .gwa import GwaElem  # local import to avoid a cycle

    if isinstance(elem, PolyElement):
        variables = elem.ring.variables
        result = ring.zero()
        for exp, c in sorted(elem.coeffs.items()):
            term = ring.from_scalar(c)
            for name, e in zip(variables, exp):
                if e:
                    term = term * images[name] ** e
            result = result + term
        return result
    if isinstance(elem, SkewPolyElement):
        tvar = elem.ring.var
        result = ring.zero()
        for i, c in sorted(elem.coeffs.items()):
            term = evaluate_on_generators(c, images, ring)
            if i:
                term = term * images[tvar] ** i
            result = result + term
        return result
    if isinstance(elem, GwaElem):
        alg = elem.algebra
        result = ring.zero()
        for i, c in sorted(elem.coeffs.items()):
            term = evaluate_on_generators(c, images, ring)
            if i > 0:
                term = term * images[alg.xname] ** i
            elif i < 0:
                term = term * images[alg.yname] ** (-i)
            result = result + term
        return result
    raise UnsupportedOperation(f"cannot evaluate {type(elem).__name__}")


def identity_endo(ring):
    return RingEndo(ring, dict(ring.gens()))


def endo_compose(f, g):
    """f after g (both endos of the same ring)."""
    if f.ring != g.ring:
        raise HandleMismatch("composing endos of different rings")
    return RingEndo(f.ring, {name: f(img) for name, img in g.images.items()})


def endo_power(f, n):
    return f.pow(n)


def is_identity_power(f, n):
    """Whether f^n fixes every generator."""
    return f.pow(n).is_identity()


def _scalar_of(elem):
    """Scalar value if elem is a scalar multiple of 1, else None."""
    if isinstance(elem, PolyElement):
        if elem.is_zero():
            return elem.ring.field.zero
        if elem.is_scalar():
            return elem.scalar_value()
        return None
    if isinstance(elem, SkewPolyElement):
        if elem.is_zero():
            return elem.ring.field.zero
        if set(elem.coeffs) == {0}:
            return _scalar_of(elem.coeffs[0])
        return None
    return None


def decompose_affine(image, gen_elem):
    """Write image = u*g + c with u scalar and c free of g, or None.

    Works for commutative polynomial handles and for the top variable of a
    skew handle (where c may be any base element).
    """
    ring = image.ring
    if isinstance(image, PolyElement):
        variables = ring.variables
        ((gexp, _),) = gen_elem.coeffs.items()
        idx = gexp.index(1)
        u = ring.field.zero
        c = {}
        for exp, coeff in image.coeffs.items():
            if exp == gexp:
                u = coeff
            elif exp[idx] == 0:
                c[exp] = coeff
            else:
                return None
        return u, ring._make(c)
    if isinstance(image, SkewPolyElement):
        if gen_elem.coeffs == {1: ring.base.one()}:
            # affine in the skew variable: c1*t + c0 with c1 scalar
            c1 = image.coeffs.get(1)
            if c1 is None:
                return None
            u = _scalar_of(c1)
            if u is None:
                return None
            extra = {i for i in image.coeffs if i not in (0, 1)}
            if extra:
                return None
            return u, ring.embed(image.coeffs.get(0, ring.base.zero()))
        # base generator image must itself live in the base
        if set(image.coeffs) - {0} == set():
            base_img = image.coeffs.get(0, ring.base.zero())
            base_gen = gen_elem.coeffs.get(0)
            if base_gen is None:
                return None
            res = decompose_affine(base_img, base_gen)
            if res is None:
                return None
            u, c = res
            return u, ring.embed(c)
        return None
    return None


def endo_try_inverse(f):
    """Inverse endo for per-generator affine families, else None.

    Each generator image must decompose as u*g + c with u a nonzero scalar.
    The inverse sends g to u^-1 * (g - E(c)) where E is the inverse itself;
    for triangular constants a short fixed-point iteration resolves the
    recursion.  The candidate is verified by composing both ways and only
    a verified inverse is returned.
    """
    ring = f.ring
    gens = ring.gens()
    field = ring.field
    data = {}
    for name, g in gens.items():
        res = decompose_affine(f.images[name], g)
        if res is None:
            return None
        u, c = res
        if field.is_zero(u):
            return None
        data[name] = (field.inv(u), c)
    images = {
        name: ring.from_scalar(uinv) * (gens[name] - c)
        for name, (uinv, c) in data.items()
    }
    for _ in range(len(gens) + 1):
        current = RingEndo(ring, images)
        images = {
            name: ring.from_scalar(uinv) * (gens[name] - current(c))
            for name, (uinv, c) in data.items()
        }
    inv = RingEndo(ring, images)
    if endo_compose(f, inv).is_identity() and endo_compose(inv, f).is_identity():
        return inv
    return None


def kernel_union_is_zero(f):
    """Injectivity verdict for f: True, False, or None when undecided."""
    ring = f.ring
    if isinstance(ring, PolyRing):
        if len(ring.variables) == 0:
            return True
        for name in ring.gen_names():
            img = f.images[name]
            if img.is_scalar():
                return False
        if len(ring.variables) == 1 and not ring.laurent:
            # nonconstant image of the single variable: degrees multiply
            return True
        if endo_try_inverse(f) is not None:
            return True
        return None
    if isinstance(ring, SkewPolyRing):
        base_names = ring.base.gen_names()
        base_images = {}
        for name in base_names:
            img = f.images[name]
            if set(img.coeffs) - {0}:
                return None
            base_images[name] = ring.base_part(img)
        base_verdict = kernel_union_is_zero(RingEndo(ring.base, base_images))
        if base_verdict is False:
            return False
        timg = f.images[ring.var]
        lead = timg.coeffs.get(timg.degree()) if not timg.is_zero() else None
        if timg.is_zero():
            return False
        if base_verdict is True and ring.base.is_regular(lead) and timg.degree() >= 1:
            return True
        return None
    return None


def classify_univariate(f):
    """Family tag for an endo of K[h] (plain or Laurent).

    Returns ('identity',), ('shift', c), ('dilation', q),
    ('affine', u, c), or None.
    """
    ring = f.ring
    if not isinstance(ring, PolyRing) or len(ring.variables) != 1:
        return None
    name = ring.variables[0]
    g = ring.gen(name)
    res = decompose_affine(f.images[name], g)
    if res is None:
        return None
    u, c = res
    field = ring.field
    if not c.is_zero() and not c.is_scalar():
        return None
    cval = c.scalar_value() if not c.is_zero() else field.zero
    if field.is_one(u) and field.is_zero(cval):
        return ("identity",)
    if field.is_one(u):
        return ("shift", cval)
    if field.is_zero(cval):
        return ("dilation", u)
    return ("affine", u, cval)


def classify_monomial(f):
    """Scalars (per generator) of a monomial endo g -> c*g, else None."""
    ring = f.ring
    out = {}
    for name, g in ring.gens().items():
        img = f.images[name]
        res = decompose_affine(img, g)
        if res is None:
            return None
        u, c = res
        if not c.is_zero():
            return None
        out[name] = u
    return out


def scalar_order(field, u):
    """Multiplicative order of a field scalar, or None if infinite."""
    if field.is_zero(u):
        return None
    p = field.characteristic
    if p > 0:
        order = 1
        acc = u
        while not field.is_one(acc):
            acc = field.mul(acc, u)
            order += 1
        return order
    if u == 1:
        return 1
    if u == -1:
        return 2
    return None


def omega_of_normal(ring, a):
    """Conjugation endo of a normal element: a*d = omega(d)*a.

    Identity for commutative handles.  For a quantum-plane handle the
    element must be a nonzero monomial c * q^j * t^i; then the base
    generator maps by lam^i and the skew variable by lam^-j.
    """
    if ring.is_commutative():
        return identity_endo(ring)
    if isinstance(ring, SkewPolyRing) and isinstance(ring.base, PolyRing):
        if a.is_zero():
            raise UnsupportedFamily("zero element is not normal")
        if len(a.coeffs) != 1:
            raise UnsupportedFamily("only monomial normal elements are recognized")
        ((i, base_coeff),) = a.coeffs.items()
        if len(base_coeff.coeffs) != 1:
            raise UnsupportedFamily("only monomial normal elements are recognized")
        ((jexp, _),) = base_coeff.coeffs.items()
        if len(jexp) != 1:
            raise UnsupportedFamily("quantum-plane base must be univariate")
        j = jexp[0]
        lam_map = classify_monomial_twist(ring)
        if lam_map is None:
            raise UnsupportedFamily("twist is not monomial")
        lam = lam_map
        field = ring.field
        qname = ring.base.variables[0]
        lam_i = field.one
        for _ in range(i):
            lam_i = field.mul(lam_i, lam)
        lam_j_inv = field.one
        lam_inv = field.inv(lam)
        for _ in range(j):
            lam_j_inv = field.mul(lam_j_inv, lam_inv)
        gens = ring.gens()
        return RingEndo(
            ring,
            {
                qname: ring.from_scalar(lam_i) * gens[qname],
                ring.var: ring.from_scalar(lam_j_inv) * gens[ring.var],
            },
        )
    raise NoncommutativeUnsupported(f"no normal-element analysis for {ring}")


def classify_monomial_twist(ring):
    """The scalar lam with nu(q) = lam*q for a univariate monomial twist."""
    if not isinstance(ring, SkewPolyRing):
        return None
    base = ring.base
    if not isinstance(base, PolyRing) or len(base.variables) != 1:
        return None
    qname = base.variables[0]
    img = ring.twist.images[qname]
    res = decompose_affine(img, base.gen(qname))
    if res is None:
        return None
    u, c = res
    if not c.is_zero():
        return None
    return u
