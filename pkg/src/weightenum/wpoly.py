"""Polynomials in z, x, y over Z[q]: the shape of the weight enumerators.

Terms are a map (z-exp, x-exp, y-exp) -> QPoly coefficient; zero
coefficients are never stored.  Canonical term order everywhere:
descending z-exponent, then descending x-exponent, then descending
y-exponent, so text and JSON renderings are byte-stable.

The text grammar (integers, q, z, x, y, + - * ^ and parentheses) accepts
both expanded and factored spellings; parse(format(w)) == w.
"""

from __future__ import annotations

import re

from .errors import NotDivisible, ParseError
from .qpoly import QPoly


def _term_sort_key(exps):
    ez, ex, ey = exps
    return (-ez, -ex, -ey)


class WPoly:
    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for exps, coeff in terms.items():
                ez, ex, ey = (int(e) for e in exps)
                if ez < 0 or ex < 0 or ey < 0:
                    raise ValueError("negative exponent")
                if not isinstance(coeff, QPoly):
                    coeff = QPoly.const(coeff) if isinstance(coeff, int) else coeff
                if coeff:
                    clean[(ez, ex, ey)] = coeff
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, *_):
        raise AttributeError("WPoly is immutable")

    # -- constructors --

    @classmethod
    def zero(cls) -> "WPoly":
        return cls()

    @classmethod
    def monomial(cls, coeff, ez=0, ex=0, ey=0) -> "WPoly":
        return cls({(ez, ex, ey): coeff})

    @classmethod
    def var(cls, name: str) -> "WPoly":
        if name == "q":
            return cls.monomial(QPoly.q_power(1))
        if name == "z":
            return cls.monomial(1, ez=1)
        if name == "x":
            return cls.monomial(1, ex=1)
        if name == "y":
            return cls.monomial(1, ey=1)
        raise ValueError(f"unknown variable {name!r}")

    # -- ring structure --

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, (int, QPoly)):
            other = WPoly.monomial(other)
        return isinstance(other, WPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        other = _as_wpoly(other)
        out = dict(self.terms)
        for exps, coeff in other.terms.items():
            acc = out.get(exps)
            acc = coeff if acc is None else acc + coeff
            if acc:
                out[exps] = acc
            else:
                out.pop(exps, None)
        return _raw(out)

    __radd__ = __add__

    def __neg__(self):
        return _raw({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-_as_wpoly(other))

    def __rsub__(self, other):
        return _as_wpoly(other) + (-self)

    def __mul__(self, other):
        other = _as_wpoly(other)
        out = {}
        for (az, ax, ay), ac in self.terms.items():
            for (bz, bx, by), bc in other.terms.items():
                key = (az + bz, ax + bx, ay + by)
                prod = ac * bc
                acc = out.get(key)
                acc = prod if acc is None else acc + prod
                if acc:
                    out[key] = acc
                else:
                    out.pop(key, None)
        return _raw(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power")
        acc = WPoly.monomial(1)
        base = self
        while e:
            if e & 1:
                acc = acc * base
            base = base * base
            e >>= 1
        return acc

    # -- structure queries --

    def has_z(self) -> bool:
        return any(ez for ez, _, _ in self.terms)

    def xy_degree(self) -> int:
        """Max x-exp + y-exp across terms (-1 for zero)."""
        return max((ex + ey for _, ex, ey in self.terms), default=-1)

    def is_homogeneous_xy(self) -> bool:
        degs = {ex + ey for _, ex, ey in self.terms}
        return len(degs) <= 1

    def coefficient(self, ez, ex, ey) -> QPoly:
        return self.terms.get((ez, ex, ey), QPoly())

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: _term_sort_key(kv[0]))

    # -- substitutions --

    def substitute_xy(self, a: QPoly, b: QPoly, c: QPoly, d: QPoly) -> "WPoly":
        """Exact substitution x <- a*x + b*y, y <- c*x + d*y (z untouched)."""
        u = WPoly({(0, 1, 0): a, (0, 0, 1): b})
        v = WPoly({(0, 1, 0): c, (0, 0, 1): d})
        out = WPoly.zero()
        powers_u = {}
        powers_v = {}
        for (ez, ex, ey), coeff in self.terms.items():
            if ex not in powers_u:
                powers_u[ex] = u**ex
            if ey not in powers_v:
                powers_v[ey] = v**ey
            term = powers_u[ex] * powers_v[ey] * coeff
            if ez:
                term = term * WPoly.monomial(1, ez=ez)
            out = out + term
        return out

    def subs_z_one(self) -> "WPoly":
        """Collapse z = 1."""
        out = {}
        for (ez, ex, ey), coeff in self.terms.items():
            key = (0, ex, ey)
            acc = out.get(key)
            acc = coeff if acc is None else acc + coeff
            if acc:
                out[key] = acc
            else:
                out.pop(key, None)
        return _raw(out)

    def subs_all_one(self) -> QPoly:
        """Set z = x = y = 1; the total mass as a polynomial in q."""
        acc = QPoly()
        for coeff in self.terms.values():
            acc = acc + coeff
        return acc

    def exact_div_q_power(self, k: int) -> "WPoly":
        """Divide every coefficient by q^k; NotDivisible if any remainder."""
        out = {}
        for exps, coeff in self.terms.items():
            if not coeff.divisible_by_q_power(k):
                raise NotDivisible(
                    f"coefficient of z^{exps[0]} x^{exps[1]} y^{exps[2]} "
                    f"({coeff}) is not divisible by q^{k}")
            out[exps] = coeff.div_q_power(k)
        return _raw(out)

    # -- rendering --

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"WPoly({self.format()})"

    def format(self, factor_display: bool = False) -> str:
        if not self.terms:
            return "0"
        chunks = []
        for (ez, ex, ey), coeff in self.sorted_terms():
            vars_part = "*".join(
                _var_power(sym, e)
                for sym, e in (("z", ez), ("x", ex), ("y", ey)) if e)
            chunks.append(_render_term(coeff, vars_part, not chunks,
                                       factor_display))
        return " ".join(chunks)

    def to_json_obj(self):
        return [{"z": ez, "x": ex, "y": ey, "coeff_q": list(coeff.coeffs)}
                for (ez, ex, ey), coeff in self.sorted_terms()]

    @classmethod
    def from_json_obj(cls, obj) -> "WPoly":
        if not isinstance(obj, list):
            raise ParseError("polynomial JSON must be a list of terms")
        terms = {}
        for item in obj:
            try:
                key = (int(item["z"]), int(item["x"]), int(item["y"]))
                coeff = QPoly([int(c) for c in item["coeff_q"]])
            except (KeyError, TypeError, ValueError) as exc:
                raise ParseError(f"malformed polynomial term {item!r}") from exc
            if key in terms:
                raise ParseError(f"duplicate exponent triple {key}")
            if coeff:
                terms[key] = coeff
        return cls(terms)


def _raw(terms: dict) -> WPoly:
    out = WPoly.__new__(WPoly)
    object.__setattr__(out, "terms", terms)
    return out


def _as_wpoly(x) -> WPoly:
    if isinstance(x, WPoly):
        return x
    if isinstance(x, (int, QPoly)):
        return WPoly.monomial(x)
    raise TypeError(f"cannot treat {x!r} as a polynomial in q, z, x, y")


def _var_power(sym: str, e: int) -> str:
    return sym if e == 1 else f"{sym}^{e}"


def _render_term(coeff: QPoly, vars_part: str, first: bool, factored: bool) -> str:
    cs = coeff.coeffs
    if len(cs) == 1 or not vars_part:
        # constant coefficient, or a pure q-polynomial term
        if len(cs) == 1:
            mag = abs(cs[0])
            neg = cs[0] < 0
            body = str(mag) if not vars_part or mag != 1 else ""
            text = "*".join(s for s in (body, vars_part) if s)
        else:
            neg = False
            text = f"({coeff.factor_linear_display() if factored else coeff})"
        if first:
            return f"-{text}" if neg else text
        return f"- {text}" if neg else f"+ {text}"
    if factored:
        body = coeff.factor_linear_display()
        if body != str(coeff):
            # pure product at the top level: splice without extra parens
            neg = body.startswith("-")
            if neg:
                body = body[1:]
            text = f"{body}*{vars_part}"
            if first:
                return f"-{text}" if neg else text
            return f"- {text}" if neg else f"+ {text}"
    body = str(coeff)
    text = f"({body})*{vars_part}"
    return text if first else f"+ {text}"


# ---------------------------------------------------------------------------
# text grammar
# ---------------------------------------------------------------------------

_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([qzxy])|([-+*^()]))")


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m or m.end() == pos:
            rest = text[pos:].lstrip()
            if not rest:
                break
            at = len(text) - len(rest)
            raise ParseError(f"unexpected character {rest[0]!r}", column=at + 1)
        num, var, op = m.groups()
        if num is not None:
            tokens.append(("int", int(num), pos))
        elif var is not None:
            tokens.append(("var", var, pos))
        else:
            tokens.append(("op", op, pos))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, tokens):
        self.tokens = tokens
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, message):
        _, _, pos = self.peek()
        raise ParseError(message, column=pos + 1)

    def parse_expr(self) -> WPoly:
        kind, val, _ = self.peek()
        negate = False
        if kind == "op" and val in "+-":
            self.take()
            negate = val == "-"
        acc = self.parse_term()
        if negate:
            acc = -acc
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                rhs = self.parse_term()
                acc = acc - rhs if val == "-" else acc + rhs
            else:
                return acc

    def parse_term(self) -> WPoly:
        acc = self.parse_factor()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val == "*":
                self.take()
                acc = acc * self.parse_factor()
            else:
                return acc

    def parse_factor(self) -> WPoly:
        base = self.parse_atom()
        kind, val, _ = self.peek()
        if kind == "op" and val == "^":
            self.take()
            ekind, eval_, _ = self.peek()
            if ekind != "int":
                self.fail("exponent must be a nonnegative integer")
            self.take()
            return base**eval_
        return base

    def parse_atom(self) -> WPoly:
        kind, val, _ = self.peek()
        if kind == "int":
            self.take()
            return WPoly.monomial(val)
        if kind == "var":
            self.take()
            return WPoly.var(val)
        if kind == "op" and val == "(":
            self.take()
            inner = self.parse_expr()
            kind, val, _ = self.peek()
            if kind != "op" or val != ")":
                self.fail("expected ')'")
            self.take()
            return inner
        self.fail("expected a number, variable, or '('")


def wpoly_parse(text: str) -> WPoly:
    """Parse an expression in q, z, x, y into a WPoly."""
    parser = _Parser(_tokenize(text))
    result = parser.parse_expr()
    kind, _, pos = parser.peek()
    if kind != "end":
        raise ParseError("trailing input", column=pos + 1)
    return result


def qpoly_parse(text: str) -> QPoly:
    """Parse an expression in q alone."""
    w = wpoly_parse(text)
    for (ez, ex, ey) in w.terms:
        if ez or ex or ey:
            raise ParseError("expected a polynomial in q only")
    return w.coefficient(0, 0, 0)
