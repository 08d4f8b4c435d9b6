"""Exact field arithmetic: prime fields GF(p), single-step extensions GF(p^m), and Q.

Element representations are canonical values, not wrapper objects:

  * prime field      -- int in [0, p)
  * extension field  -- int in [0, p^m) whose base-p digits are the
                        coefficients of 1, alpha, ..., alpha^(m-1)
  * rationals        -- fractions.Fraction (always reduced, denominator > 0)

A Field object supplies the arithmetic.  Row-level helpers (vec_add,
vec_submul, vec_scale) are overridden per field so that echelon reduction
and codeword enumeration run one method call per row instead of per entry.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import (
    DegreeMismatch,
    DivisionByZero,
    IncompatibleCharacteristic,
    MixedFields,
    NonPrimeCharacteristic,
    ParseError,
    ReducibleModulus,
)

_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin (exact for n < 3.3e24)."""
    if n < 2:
        return False
    for p in _MR_WITNESSES:
        if n % p == 0:
            return n == p
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


# ---------------------------------------------------------------------------
# dense polynomials over GF(p): lists of ints, ascending powers, trimmed
# ---------------------------------------------------------------------------

def _ptrim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _ptrim(out)


def _pdivmod(a, b, p):
    """Quotient and remainder of a by b over GF(p); b nonzero."""
    a = _ptrim([x % p for x in a])
    db = len(b) - 1
    inv_lead = pow(b[-1], p - 2, p)
    q = [0] * max(0, len(a) - db)
    while a and len(a) - 1 >= db:
        shift = len(a) - 1 - db
        c = a[-1] * inv_lead % p
        q[shift] = c
        for i, bi in enumerate(b):
            a[shift + i] = (a[shift + i] - c * bi) % p
        _ptrim(a)
    return _ptrim(q), a


def _pmod(a, f, p):
    return _pdivmod(a, f, p)[1]


def _psub(a, b, p):
    out = [0] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] = x
    for i, x in enumerate(b):
        out[i] = (out[i] - x) % p
    return _ptrim(out)


def _pgcd(a, b, p):
    a, b = list(a), list(b)
    while b:
        a, b = b, _pmod(a, b, p)
    if a:
        inv = pow(a[-1], p - 2, p)
        a = [x * inv % p for x in a]
    return a


def _ppowmod(base, e, f, p):
    """base^e modulo f over GF(p), by square and multiply."""
    result = [1]
    base = _pmod(base, f, p)
    while e:
        if e & 1:
            result = _pmod(_pmul(result, base, p), f, p)
        base = _pmod(_pmul(base, base, p), f, p)
        e >>= 1
    return result


def _prime_divisors(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def poly_is_irreducible(coeffs, p: int) -> bool:
    """Irreducibility of a polynomial over GF(p) (degree 1..16 supported).

    Degree <= 3 over a small prime uses the root test (a cubic or quadratic
    is reducible iff it has a root); otherwise Rabin's criterion with
    gcd(x^(p^(m/r)) - x, f) checks.
    """
    f = _ptrim([c % p for c in coeffs])
    m = len(f) - 1
    if m < 1:
        return False
    if m == 1:
        return True
    if f[0] == 0:
        return False  # divisible by x
    if m <= 3 and p <= 100_000:
        for a in range(p):
            acc = 0
            for c in reversed(f):
                acc = (acc * a + c) % p
            if acc == 0:
                return False
        return True
    x = [0, 1]
    if _pmod(_psub(_ppowmod(x, p**m, f, p), x, p), f, p) != []:
        return False
    for r in _prime_divisors(m):
        h = _psub(_ppowmod(x, p ** (m // r), f, p), x, p)
        if len(_pgcd(h, f, p)) - 1 != 0:
            return False
    return True


# ---------------------------------------------------------------------------
# field classes
# ---------------------------------------------------------------------------

_TABLE_MAX = 256  # largest extension order that gets full lookup tables


class Field:
    """Common interface; see PrimeField, ExtensionField, RationalField."""

    kind = None
    char = None    # characteristic (0 for rationals)
    degree = None  # extension degree over the prime field (None for rationals)
    order = None   # number of elements (None for rationals)

    zero = 0
    one = 1

    def is_finite(self):
        return self.order is not None

    # -- scalar arithmetic (subclasses override) --

    def add(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def div(self, a, b):
        if b == self.zero:
            raise DivisionByZero("division by zero")
        return self.mul(a, self.inv(b))

    def pow(self, a, e):
        acc = self.one
        while e:
            if e & 1:
                acc = self.mul(acc, a)
            a = self.mul(a, a)
            e >>= 1
        return acc

    # -- element validation / conversion --

    def check(self, a):
        """Return a if it is a canonical element; raise MixedFields otherwise."""
        raise NotImplementedError

    def coerce(self, x):
        """Build an element from an int (or field-appropriate raw data)."""
        raise NotImplementedError

    def fmt(self, a) -> str:
        return str(a)

    def elements(self):
        """Iterate all elements (finite fields only)."""
        raise NotImplementedError(f"{self.kind} field is not enumerable")

    # -- row helpers; generic versions, overridden for speed --

    def vec_add(self, u, v):
        add = self.add
        return [add(a, b) for a, b in zip(u, v)]

    def vec_submul(self, u, v, f):
        """u - f*v, elementwise."""
        sub, mul = self.sub, self.mul
        return [sub(a, mul(f, b)) for a, b in zip(u, v)]

    def vec_scale(self, v, f):
        mul = self.mul
        return [mul(f, a) for a in v]

    def spec_string(self) -> str:
        raise NotImplementedError

    def __repr__(self):
        return f"Field({self.spec_string()!r})"

    def __eq__(self, other):
        return isinstance(other, Field) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def _key(self):
        raise NotImplementedError


class PrimeField(Field):
    """GF(p) with elements 0..p-1."""

    kind = "prime"

    def __init__(self, p: int):
        if not is_prime(p):
            raise NonPrimeCharacteristic(f"{p} is not prime")
        self.p = p
        self.char = p
        self.degree = 1
        self.order = p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        if a == 0:
            raise DivisionByZero("inverse of zero")
        return pow(a, self.p - 2, self.p)

    def check(self, a):
        if type(a) is int and 0 <= a < self.p:
            return a
        raise MixedFields(f"{a!r} is not an element of {self.spec_string()}")

    def coerce(self, x):
        if isinstance(x, Fraction):
            if x.denominator != 1:
                raise MixedFields(f"cannot coerce {x} into {self.spec_string()}")
            x = x.numerator
        if isinstance(x, int):
            return x % self.p
        raise MixedFields(f"cannot coerce {x!r} into {self.spec_string()}")

    def elements(self):
        return range(self.p)

    def vec_add(self, u, v):
        p = self.p
        return [(a + b) % p for a, b in zip(u, v)]

    def vec_submul(self, u, v, f):
        p = self.p
        return [(a - f * b) % p for a, b in zip(u, v)]

    def vec_scale(self, v, f):
        p = self.p
        return [f * a % p for a in v]

    def spec_string(self):
        return f"gf {self.p}"

    def _key(self):
        return ("prime", self.p)


class ExtensionField(Field):
    """GF(p^m) = GF(p)[alpha] / (modulus), modulus monic irreducible of degree m.

    Elements are ints in [0, p^m); base-p digit i is the coefficient of
    alpha^i.  Orders up to 256 get full add/sub/mul/inv lookup tables,
    built lazily on first arithmetic use.
    """

    kind = "extension"

    def __init__(self, p: int, modulus):
        if not is_prime(p):
            raise NonPrimeCharacteristic(f"{p} is not prime")
        mod = [int(c) % p for c in modulus]
        if len(mod) < 2:
            raise DegreeMismatch("modulus must have degree >= 1")
        if mod[-1] != 1:
            raise DegreeMismatch("modulus must be monic")
        m = len(mod) - 1
        if m > 16:
            raise DegreeMismatch("extension degrees above 16 are unsupported")
        if not poly_is_irreducible(mod, p):
            raise ReducibleModulus(
                f"modulus {mod} is reducible over gf {p}")
        self.p = p
        self.m = m
        self.modulus = tuple(mod)
        self.char = p
        self.degree = m
        self.order = p**m
        self._tables = None

    # -- coefficient-vector view --

    def decode(self, a):
        """Element -> coefficient list [c0, ..., c_{m-1}]."""
        p = self.p
        return [(a // p**i) % p for i in range(self.m)]

    def encode(self, coeffs):
        """Coefficient list (length <= m) -> element."""
        if len(coeffs) > self.m:
            raise DegreeMismatch(
                f"coefficient vector longer than extension degree {self.m}")
        p = self.p
        a = 0
        for i, c in enumerate(coeffs):
            a += (int(c) % p) * p**i
        return a

    # -- arithmetic --

    def _get_tables(self):
        tables = self._tables
        if tables is None:
            tables = self._tables = self._build_tables()
        return tables

    def _build_tables(self):
        q, p, f = self.order, self.p, list(self.modulus)
        if q > _TABLE_MAX:
            return False
        mul = [0] * (q * q)
        polys = [self.decode(a) for a in range(q)]
        for a in range(q):
            pa = _ptrim(list(polys[a]))
            row = a * q
            for b in range(a, q):
                c = self.encode(_pmod(_pmul(pa, polys[b], p), f, p))
                mul[row + b] = c
                mul[b * q + a] = c
        if p == 2:
            add = sub = None
        else:
            add = [0] * (q * q)
            sub = [0] * (q * q)
            for a in range(q):
                da = polys[a]
                row = a * q
                for b in range(q):
                    db = polys[b]
                    add[row + b] = self.encode(
                        [(x + y) % p for x, y in zip(da, db)])
                    sub[row + b] = self.encode(
                        [(x - y) % p for x, y in zip(da, db)])
        inv = [0] * q
        for a in range(1, q):
            inv[a] = self._inv_euclid(a)
        return (add, sub, mul, inv)

    def add(self, a, b):
        if self.p == 2:
            return a ^ b
        t = self._get_tables()
        if t:
            return t[0][a * self.order + b]
        p = self.p
        r, mult = 0, 1
        while a or b:
            r += (a % p + b % p) % p * mult
            a //= p
            b //= p
            mult *= p
        return r

    def sub(self, a, b):
        if self.p == 2:
            return a ^ b
        t = self._get_tables()
        if t:
            return t[1][a * self.order + b]
        return self.add(a, self.neg(b))

    def neg(self, a):
        if self.p == 2:
            return a
        p = self.p
        r, mult = 0, 1
        while a:
            r += (-a % p) % p * mult
            a //= p
            mult *= p
        return r

    def mul(self, a, b):
        t = self._get_tables()
        if t:
            return t[2][a * self.order + b]
        prod = _pmul(_ptrim(self.decode(a)), _ptrim(self.decode(b)), self.p)
        return self.encode(_pmod(prod, list(self.modulus), self.p))

    def inv(self, a):
        if a == 0:
            raise DivisionByZero("inverse of zero")
        t = self._get_tables()
        if t:
            return t[3][a]
        return self._inv_euclid(a)

    def _inv_euclid(self, a):
        # extended Euclid in GF(p)[x]; invariant r_i = s_i * a (mod modulus)
        p = self.p
        r0, r1 = list(self.modulus), _ptrim(self.decode(a))
        s0, s1 = [], [1]
        while r1:
            q, r = _pdivmod(r0, r1, p)
            r0, r1 = r1, r
            s0, s1 = s1, _psub(s0, _pmul(q, s1, p), p)
        # r0 is a nonzero constant gcd since the modulus is irreducible
        c_inv = pow(r0[0], p - 2, p)
        return self.encode(_pmod([x * c_inv % p for x in s0],
                                 list(self.modulus), p))

    def check(self, a):
        if type(a) is int and 0 <= a < self.order:
            return a
        raise MixedFields(f"{a!r} is not an element of {self.spec_string()}")

    def coerce(self, x):
        if isinstance(x, Fraction):
            if x.denominator != 1:
                raise MixedFields(f"cannot coerce {x} into {self.spec_string()}")
            x = x.numerator
        if isinstance(x, int):
            return x % self.p  # image of the integer (a constant)
        if isinstance(x, (list, tuple)):
            return self.encode(x)
        raise MixedFields(f"cannot coerce {x!r} into {self.spec_string()}")

    def fmt(self, a):
        return "[" + ",".join(str(c) for c in self.decode(a)) + "]"

    def elements(self):
        return range(self.order)

    def vec_add(self, u, v):
        if self.p == 2:
            return [a ^ b for a, b in zip(u, v)]
        t = self._get_tables()
        if t:
            add, q = t[0], self.order
            return [add[a * q + b] for a, b in zip(u, v)]
        return super().vec_add(u, v)

    def vec_submul(self, u, v, f):
        t = self._get_tables()
        if t:
            mul, q = t[2], self.order
            frow = f * q
            if self.p == 2:
                return [a ^ mul[frow + b] for a, b in zip(u, v)]
            sub = t[1]
            return [sub[a * q + mul[frow + b]] for a, b in zip(u, v)]
        return super().vec_submul(u, v, f)

    def vec_scale(self, v, f):
        t = self._get_tables()
        if t:
            mul, q = t[2], self.order
            frow = f * q
            return [mul[frow + a] for a in v]
        return super().vec_scale(v, f)

    def spec_string(self):
        mod = ",".join(str(c) for c in self.modulus)
        return f"gf {self.order} modulus=[{mod}]"

    def _key(self):
        return ("extension", self.p, self.modulus)


class RationalField(Field):
    """The rationals, with fractions.Fraction elements."""

    kind = "rationals"
    char = 0
    zero = Fraction(0)
    one = Fraction(1)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise DivisionByZero("inverse of zero")
        return 1 / a

    def div(self, a, b):
        if b == 0:
            raise DivisionByZero("division by zero")
        return a / b

    def check(self, a):
        if isinstance(a, Fraction):
            return a
        raise MixedFields(f"{a!r} is not a rational field element")

    def coerce(self, x):
        if isinstance(x, (int, Fraction)):
            return Fraction(x)
        raise MixedFields(f"cannot coerce {x!r} into the rationals")

    def vec_add(self, u, v):
        return [a + b for a, b in zip(u, v)]

    def vec_submul(self, u, v, f):
        return [a - f * b for a, b in zip(u, v)]

    def vec_scale(self, v, f):
        return [f * a for a in v]

    def spec_string(self):
        return "rationals"

    def _key(self):
        return ("rationals",)


QQ = RationalField()


# ---------------------------------------------------------------------------
# construction helpers
# ---------------------------------------------------------------------------

_FIELD_RE = re.compile(
    r"^\s*gf\s+(\d+)(?:\s*\^\s*(\d+))?\s*(?:modulus=\[([0-9,\s-]*)\])?\s*$")


def make_field(spec) -> Field:
    """Build a field from a descriptor.

    Accepts a Field (returned unchanged) or a string:
      "rationals"
      "gf 7"
      "gf 4 modulus=[1,1,1]"       (order given; degree from the modulus)
      "gf 2^2 modulus=[1,1,1]"     (characteristic and degree explicit)
    """
    if isinstance(spec, Field):
        return spec
    if not isinstance(spec, str):
        raise ParseError(f"unsupported field descriptor {spec!r}")
    text = spec.strip()
    if text == "rationals":
        return QQ
    match = _FIELD_RE.match(text)
    if not match:
        raise ParseError(f"cannot parse field descriptor {spec!r}")
    base, exp, modulus = match.groups()
    base = int(base)
    if modulus is None:
        if exp is not None and int(exp) != 1:
            raise DegreeMismatch(
                "an extension field needs modulus=[...] in its descriptor")
        return PrimeField(base)
    coeffs = [int(c) for c in modulus.split(",") if c.strip() != ""]
    m = len(coeffs) - 1
    if exp is not None:
        # "gf p^m": base is the characteristic
        if int(exp) != m:
            raise DegreeMismatch(
                f"modulus degree {m} does not match exponent {exp}")
        return ExtensionField(base, coeffs)
    if is_prime(base):
        if m == 1:
            return ExtensionField(base, coeffs)
        raise DegreeMismatch(
            f"gf {base} is a prime field; got a degree-{m} modulus")
    # base is the field order p^m; recover p
    p, exponent = _prime_power(base)
    if p is None:
        raise NonPrimeCharacteristic(f"{base} is not a prime power")
    if exponent != m:
        raise DegreeMismatch(
            f"gf {base} needs a degree-{exponent} modulus, got degree {m}")
    return ExtensionField(p, coeffs)


def _prime_power(n):
    """(p, e) with n = p^e and p prime, or (None, None)."""
    if n < 2:
        return None, None
    p = n
    for d in range(2, min(n, 1 << 16)):
        if d * d > n:
            break
        if n % d == 0:
            p = d
            break
    if not is_prime(p):
        return None, None
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return (p, e) if n == 1 else (None, None)


def default_modulus(p: int, m: int):
    """Deterministic choice of a monic irreducible degree-m polynomial over GF(p):
    the first irreducible in the base-p ordering of the low coefficients."""
    if m == 1:
        return [0, 1]
    for c in range(p**m):
        coeffs = [(c // p**i) % p for i in range(m)] + [1]
        if poly_is_irreducible(coeffs, p):
            return coeffs
    raise ReducibleModulus(f"no irreducible polynomial found for gf {p}^{m}")


def find_embedding(base: Field, target: Field):
    """Return a map of raw elements realizing the field embedding base -> target.

    The base degree must divide the target degree (same characteristic).
    For an extension base, the image of alpha is the root of the base
    modulus in the target with the smallest element encoding; the scan is
    linear in the target order, so this is for small fields only.
    """
    if base.char != target.char:
        raise IncompatibleCharacteristic(
            f"cannot embed {base.spec_string()} into {target.spec_string()}")
    if base.degree and target.degree and target.degree % base.degree != 0:
        raise IncompatibleCharacteristic(
            f"{base.spec_string()} does not embed into {target.spec_string()}")
    if base.kind == "prime":
        if target.kind == "prime":
            return lambda a: a
        return lambda a: a  # constants encode as themselves
    # extension into extension: find a root of the base modulus
    mod = base.modulus
    root = None
    for g in target.elements():
        acc = target.zero
        for c in reversed(mod):
            acc = target.add(target.mul(acc, g), c % target.char)
        if acc == target.zero:
            root = g
            break
    if root is None:
        raise IncompatibleCharacteristic(
            f"no root of {list(mod)} in {target.spec_string()}")

    def embed(a, _base=base, _target=target, _root=root):
        acc = _target.zero
        for c in reversed(_base.decode(a)):
            acc = _target.add(_target.mul(acc, _root), c)
        return acc

    return embed
