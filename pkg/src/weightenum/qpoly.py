"""Univariate polynomials in q with arbitrary-precision integer coefficients.

Canonical form: tuple of coefficients in ascending powers, no trailing
zeros; the zero polynomial is the empty tuple.
"""

from __future__ import annotations

from collections import Counter
from math import gcd

from .errors import NotDivisible


class QPoly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, *_):
        raise AttributeError("QPoly is immutable")

    # -- constructors --

    @classmethod
    def const(cls, c: int) -> "QPoly":
        return cls((c,))

    @classmethod
    def q_power(cls, k: int) -> "QPoly":
        return cls((0,) * k + (1,))

    @classmethod
    def q_minus(cls, c: int) -> "QPoly":
        """The linear polynomial q - c."""
        return cls((-c, 1))

    @classmethod
    def prod_q_minus(cls, constants) -> "QPoly":
        """Product of (q - c) over the given constants."""
        acc = cls.const(1)
        for c in constants:
            acc = acc * cls.q_minus(c)
        return acc

    # -- ring structure --

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def constant_term(self) -> int:
        return self.coeffs[0] if self.coeffs else 0

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = QPoly.const(other)
        return isinstance(other, QPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        other = _as_qpoly(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return QPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return QPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-_as_qpoly(other))

    def __rsub__(self, other):
        return _as_qpoly(other) + (-self)

    def __mul__(self, other):
        other = _as_qpoly(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return QPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return QPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power")
        acc = QPoly.const(1)
        base = self
        while e:
            if e & 1:
                acc = acc * base
            base = base * base
            e >>= 1
        return acc

    def __call__(self, q0: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * q0 + c
        return acc

    # -- exact division by powers of q --

    def divisible_by_q_power(self, k: int) -> bool:
        return all(c == 0 for c in self.coeffs[:k])

    def div_q_power(self, k: int) -> "QPoly":
        if not self.divisible_by_q_power(k):
            raise NotDivisible(f"{self} is not divisible by q^{k}")
        return QPoly(self.coeffs[k:])

    # -- display --

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for e in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[e]
            if c == 0:
                continue
            mag = abs(c)
            if e == 0:
                body = str(mag)
            elif e == 1:
                body = "q" if mag == 1 else f"{mag}*q"
            else:
                body = f"q^{e}" if mag == 1 else f"{mag}*q^{e}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self):
        return f"QPoly({self})"

    def factor_linear_display(self) -> str:
        """Best-effort display as c*(q-a)^i*(q-b)*...; cosmetic only.

        Pulls out the integer content and any small linear factors; whatever
        remains stays as a parenthesized polynomial.  The result is always
        a pure product at the top level (or the plain rendering when
        nothing factors), so callers can splice it into term lists.
        """
        if not self.coeffs or self.degree == 0:
            return str(self)
        content = 0
        for c in self.coeffs:
            content = gcd(content, abs(c))
        rest = QPoly([c // content for c in self.coeffs]) if content > 1 else self
        roots = []
        changed = True
        while changed and rest.degree > 0:
            changed = False
            for c in _root_candidates(rest):
                quot = _synthetic_div(rest, c)
                if quot is not None:
                    roots.append(c)
                    rest = quot
                    changed = True
                    break
        if not roots and content <= 1:
            return str(self)
        const = content if content > 1 else 1
        if rest.degree == 0:
            const *= rest.constant_term()
            rest = None
        parts = []
        if const != 1 or (not roots and rest is None):
            parts.append(str(const))
        for c, mult in sorted(Counter(roots).items()):
            base = f"(q{-c:+d})" if c else "q"
            parts.append(base if mult == 1 else f"{base}^{mult}")
        if rest is not None:
            parts.append(f"({rest})")
        return "*".join(parts)


def _as_qpoly(x) -> QPoly:
    if isinstance(x, QPoly):
        return x
    if isinstance(x, int):
        return QPoly.const(x)
    raise TypeError(f"cannot treat {x!r} as a q-polynomial")


def _root_candidates(poly: QPoly):
    c0 = poly.constant_term()
    if c0 == 0:
        return (0,)
    n = abs(c0)
    cands = set()
    d = 1
    while d * d <= n and d <= 100_000:
        if n % d == 0:
            cands.update((d, -d, n // d, -(n // d)))
        d += 1
    return sorted(cands, key=abs)


def _synthetic_div(poly: QPoly, c: int):
    """poly / (q - c) if exact, else None."""
    out = []
    acc = 0
    for coeff in reversed(poly.coeffs):
        acc = acc * c + coeff
        out.append(acc)
    if out[-1] != 0:
        return None
    return QPoly(list(reversed(out[:-1])))
