"""Expression parsing and canonical rendering.

Grammar: integers, rationals n/d, declared generator names, + - * ^ with
integer exponents, parentheses.  Implicit multiplication is not allowed.
Negative exponents are accepted only where the named element is
invertible (Laurent variables).

The renderer emits a canonical string that parses back to the same
element, with coefficients on the left of the graded generators.
"""

from fractions import Fraction

from .errors import ExprSyntaxError, UnknownVariable
from .rings import PolyElement, SkewPolyElement


class _Token:
    __slots__ = ("kind", "value", "line", "col")

    def __init__(self, kind, value, line, col):
        self.kind = kind
        self.value = value
        self.line = line
        self.col = col


def _tokenize(text):
    tokens = []
    line, col = 1, 1
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch.isspace():
            i += 1
            col += 1
            continue
        if ch.isdigit():
            start = i
            startcol = col
            while i < n and text[i].isdigit():
                i += 1
                col += 1
            tokens.append(_Token("int", int(text[start:i]), line, startcol))
            continue
        if ch.isalpha() or ch == "_":
            start = i
            startcol = col
            while i < n and (text[i].isalnum() or text[i] == "_"):
                i += 1
                col += 1
            tokens.append(_Token("name", text[start:i], line, startcol))
            continue
        if ch in "+-*^()/":
            tokens.append(_Token(ch, ch, line, col))
            i += 1
            col += 1
            continue
        raise ExprSyntaxError(f"unexpected character {ch!r}", line, col)
    tokens.append(_Token("end", None, line, col))
    return tokens


class _Parser:
    def __init__(self, text, context):
        self.tokens = _tokenize(text)
        self.pos = 0
        self.context = context
        self.gens = context.gens()

    def peek(self):
        return self.tokens[self.pos]

    def advance(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind):
        tok = self.advance()
        if tok.kind != kind:
            raise ExprSyntaxError(f"expected {kind!r}, found {tok.kind!r}", tok.line, tok.col)
        return tok

    def parse(self):
        value = self.expr()
        tok = self.peek()
        if tok.kind != "end":
            raise ExprSyntaxError(f"trailing input {tok.kind!r}", tok.line, tok.col)
        return value

    def expr(self):
        value = self.term()
        while self.peek().kind in ("+", "-"):
            op = self.advance().kind
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        value = self.factor()
        while self.peek().kind == "*":
            self.advance()
            value = value * self.factor()
        return value

    def factor(self):
        negate = False
        while self.peek().kind == "-":
            self.advance()
            negate = not negate
        value = self.power()
        return -value if negate else value

    def power(self):
        base = self.atom()
        if self.peek().kind == "^":
            self.advance()
            sign = 1
            if self.peek().kind == "-":
                self.advance()
                sign = -1
            tok = self.expect("int")
            base = base ** (sign * tok.value)
        return base

    def atom(self):
        tok = self.advance()
        if tok.kind == "int":
            if self.peek().kind == "/":
                self.advance()
                den = self.expect("int")
                if den.value == 0:
                    raise ExprSyntaxError("zero denominator", den.line, den.col)
                return self.context.from_scalar(Fraction(tok.value, den.value))
            return self.context.from_int(tok.value)
        if tok.kind == "name":
            if tok.value not in self.gens:
                raise UnknownVariable(
                    f"unknown generator {tok.value!r} (line {tok.line}, col {tok.col})"
                )
            return self.gens[tok.value]
        if tok.kind == "(":
            value = self.expr()
            self.expect(")")
            return value
        raise ExprSyntaxError(f"unexpected token {tok.kind!r}", tok.line, tok.col)


def parse_expression(text, context):
    """Parse text into an element of the given ring or algebra context.

    The context must expose gens(), from_int, and from_scalar.
    """
    return _Parser(text, context).parse()


# ---------------------------------------------------------------------------
# rendering


def _render_scalar(field, c):
    return field.render(c)


def _scalar_is_negative(field, c):
    if field.characteristic != 0:
        return False
    return c < 0


def _render_monomial(field, c, parts):
    """One product term from a scalar and a list of (name, exponent)."""
    pieces = []
    factors = [f"{name}^{e}" if e != 1 else name for name, e in parts if e != 0]
    if not factors:
        return _render_scalar(field, c)
    if not field.is_one(c):
        pieces.append(_render_scalar(field, c))
    pieces.extend(factors)
    return "*".join(pieces)


def _poly_terms(elem):
    """List of (scalar, [(var, exp)...]) in canonical descending order."""
    ring = elem.ring
    out = []
    for exp in sorted(elem.coeffs, reverse=True):
        c = elem.coeffs[exp]
        out.append((c, list(zip(ring.variables, exp))))
    return out


def _join_terms(field, rendered):
    """Join pre-rendered (is_negative, text) pairs with signs."""
    out = []
    for i, (neg, text) in enumerate(rendered):
        if i == 0:
            out.append(f"-{text}" if neg else text)
        else:
            out.append(f" - {text}" if neg else f" + {text}")
    return "".join(out)


def _render_poly(elem):
    ring = elem.ring
    field = ring.field
    if elem.is_zero():
        return "0"
    rendered = []
    for c, parts in _poly_terms(elem):
        neg = _scalar_is_negative(field, c)
        cc = field.neg(c) if neg else c
        rendered.append((neg, _render_monomial(field, cc, parts)))
    return _join_terms(field, rendered)


def _poly_is_single_term(elem):
    return len(elem.coeffs) == 1


def _render_coeff_prefix(coeff, suffix):
    """coeff * suffix with parentheses when coeff is a sum."""
    if coeff == coeff.ring.one():
        return False, suffix
    text = _render_poly(coeff) if isinstance(coeff, PolyElement) else render(coeff)
    if _is_single_product(coeff):
        neg = text.startswith("-")
        if neg:
            text = text[1:]
        return neg, f"{text}*{suffix}"
    return False, f"({text})*{suffix}"


def _is_single_product(elem):
    if isinstance(elem, PolyElement):
        return len(elem.coeffs) == 1
    if isinstance(elem, SkewPolyElement):
        if len(elem.coeffs) != 1:
            return False
        ((_, c),) = elem.coeffs.items()
        return _is_single_product(c)
    return False


def _render_skew(elem):
    ring = elem.ring
    field = ring.field
    if elem.is_zero():
        return "0"
    rendered = []
    for i in sorted(elem.coeffs, reverse=True):
        c = elem.coeffs[i]
        if i == 0:
            text = _render_poly(c)
            neg = text.startswith("-")
            rendered.append((neg, text[1:] if neg else text))
            continue
        suffix = f"{ring.var}^{i}" if i != 1 else ring.var
        rendered.append(_render_coeff_prefix(c, suffix))
    return _join_terms(field, rendered)


def _render_graded(elem):
    from .gwa import GwaElem

    alg = elem.algebra
    field = alg.ring.field
    if elem.is_zero():
        return "0"
    rendered = []
    for i in sorted(elem.coeffs, reverse=True):
        c = elem.coeffs[i]
        if i == 0:
            text = render(c)
            neg = text.startswith("-")
            rendered.append((neg, text[1:] if neg else text))
            continue
        name = alg.xname if i > 0 else alg.yname
        e = abs(i)
        suffix = f"{name}^{e}" if e != 1 else name
        rendered.append(_render_coeff_prefix(c, suffix))
    return _join_terms(field, rendered)


def _render_dpr(elem):
    alg = elem.algebra
    field = alg.ring.field
    if elem.is_zero():
        return "0"
    rendered = []
    for (i, j) in sorted(elem.coeffs, key=lambda k: (-(k[0] + k[1]), -k[0])):
        c = elem.coeffs[(i, j)]
        parts = []
        if i:
            parts.append(f"{alg.yname}^{i}" if i != 1 else alg.yname)
        if j:
            parts.append(f"{alg.xname}^{j}" if j != 1 else alg.xname)
        if not parts:
            text = render(c)
            neg = text.startswith("-")
            rendered.append((neg, text[1:] if neg else text))
            continue
        suffix = "*".join(parts)
        rendered.append(_render_coeff_prefix(c, suffix))
    return _join_terms(field, rendered)


def render(elem):
    """Canonical text for an element of any handle in this package."""
    from .dpr import DprElem
    from .gwa import GwaElem

    if isinstance(elem, PolyElement):
        return _render_poly(elem)
    if isinstance(elem, SkewPolyElement):
        return _render_skew(elem)
    if isinstance(elem, GwaElem):
        return _render_graded(elem)
    if isinstance(elem, DprElem):
        return _render_dpr(elem)
    raise TypeError(f"cannot render {type(elem).__name__}")
