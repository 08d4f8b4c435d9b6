"""Closed-form enumerators and classic code constructions used as oracles.

Gaussian binomials, the refined enumerator of dual Hamming codes, the MDS
closed form, and the extended binary Golay code: a constructed [24,12]
generator plus the checked-in orbit table whose rows assemble its refined
enumerator without enumerating the two million flats.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from itertools import combinations
from math import comb

from .codes import Code, mask_from_indices
from .errors import OutOfRange
from .fields import PrimeField
from .matrices import Matrix
from .qpoly import QPoly
from .wpoly import WPoly


def gaussian_binomial(m: int, i: int, p: int) -> int:
    """Number of i-dimensional subspaces of an m-space over a p-element field."""
    if not 0 <= i <= m or p < 2:
        raise OutOfRange(f"gaussian binomial ({m}, {i}) base {p} out of range")
    num = 1
    den = 1
    for j in range(i):
        num *= p ** (m - j) - 1
        den *= p ** (j + 1) - 1
    assert num % den == 0
    return num // den


def hamming_dual_refined(p: int, m: int) -> WPoly:
    """Refined enumerator of the dual Hamming code of length (p^m - 1)/(p - 1).

    Its arrangement is all hyperplanes through the origin of an m-space, so
    each term is a Gaussian binomial times a falling product (q - p^j).
    """
    if m < 1 or p < 2:
        raise OutOfRange(f"hamming parameters p={p}, m={m} out of range")
    n = (p**m - 1) // (p - 1)
    terms = {}
    for i in range(m + 1):
        ni = (p**i - 1) // (p - 1)
        coeff = gaussian_binomial(m, i, p) * QPoly.prod_q_minus(
            [p**j for j in range(m - i)])
        terms[(m - i, ni, n - ni)] = coeff
    return WPoly(terms)


def mds_refined(n: int, k: int) -> WPoly:
    """Refined enumerator of any [n, k] MDS code.

    The saturated sets are all subsets of cardinality below k plus the full
    set, which forces the closed form with ordinary binomials.
    """
    if not 1 <= k <= n:
        raise OutOfRange(f"MDS parameters n={n}, k={k} out of range")
    terms = {(0, n, 0): QPoly.const(1)}
    for i in range(k):
        acc = QPoly()
        for j in range(1, k - i + 1):
            sign = -1 if (k - i - j) % 2 else 1
            acc = acc + sign * comb(n - i, k - i - j) * (QPoly.q_power(j) - 1)
        weight_count = comb(n, i) * acc
        if weight_count:
            terms[(k - i, i, n - i)] = weight_count
    return WPoly(terms)


def is_mds(code: Code) -> bool:
    """Every k columns of the generator independent?"""
    cols = range(code.n)
    return all(code.column_rank(mask_from_indices([c + 1 for c in sub], code.n))
               == code.k
               for sub in combinations(cols, code.k))


# ---------------------------------------------------------------------------
# extended binary Golay code
# ---------------------------------------------------------------------------

# One of the two irreducible degree-11 factors of x^23 - 1 over GF(2)
# (ascending coefficients); the other is its reciprocal.  Validity is
# asserted at construction time rather than recomputed by factoring.
GOLAY23_FACTOR = (1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 1, 1)


def golay24_generator() -> Code:
    """The extended binary Golay code [24,12,8].

    Row i of the generator is x^i * g(x) written in the cyclic length-23
    coordinates (the first 12 rows of g evaluated at the companion matrix
    of x^23 - 1), extended by a parity column of ones.
    """
    g = GOLAY23_FACTOR
    assert _x_power_mod(23, g) == (1,), "generator polynomial must divide x^23 - 1"
    rows = []
    for i in range(12):
        row = [0] * i + list(g) + [0] * (23 - len(g) - i)
        row.append(1)
        rows.append(row)
    return Code(Matrix(PrimeField(2), rows, validate=False))


def _x_power_mod(e: int, g):
    """x^e mod g over GF(2), with g as an ascending coefficient tuple."""
    deg = len(g) - 1
    r = [1]
    for _ in range(e):
        r = [0] + r  # multiply by x
        if len(r) - 1 == deg:
            if r[-1]:
                r = [(a ^ b) for a, b in zip(r, g)]
            while r and r[-1] == 0:
                r.pop()
    return tuple(r)


@dataclass(frozen=True)
class GolayTableRow:
    """One orbit of saturated sets of the [24,12] Golay code."""

    representative: int  # mask within {1..24}
    size: int
    dim: int
    orbit_length: int
    zeta: QPoly
    formula: str  # e.g. "alpha_2 * p8_2", for display


def alpha_poly(i: int) -> QPoly:
    """alpha_i(q) = product of (q - 2^j) for j = 0 .. i-1."""
    return QPoly.prod_q_minus([2**j for j in range(i)])


def _load_table():
    path = resources.files(__package__) / "data" / "golay24_table.json"
    return json.loads(path.read_text(encoding="utf-8"))


_TABLE_CACHE = None


def golay24_table_rows() -> tuple[GolayTableRow, ...]:
    """The 19 orbit rows of the Golay flat table, with zetas assembled."""
    global _TABLE_CACHE
    if _TABLE_CACHE is None:
        raw = _load_table()
        p_polys = {name: QPoly(coeffs)
                   for name, coeffs in raw["p_polynomials"].items()}
        rows = []
        for entry in raw["rows"]:
            zeta = alpha_poly(entry["alpha"])
            formula = f"alpha_{entry['alpha']}" if entry["alpha"] else "1"
            if entry["p"] is not None:
                zeta = zeta * p_polys[entry["p"]]
                formula += f" * {entry['p']}"
            rows.append(GolayTableRow(
                representative=mask_from_indices(entry["representative"], 24),
                size=entry["size"],
                dim=entry["dim"],
                orbit_length=entry["orbit_length"],
                zeta=zeta,
                formula=formula,
            ))
        _TABLE_CACHE = tuple(rows)
    return _TABLE_CACHE


def golay24_table_rho() -> WPoly:
    """Refined enumerator of the [24,12] Golay code from the orbit table:
    sum over rows of orbit_length * zeta * z^dim x^size y^(24-size)."""
    acc = WPoly.zero()
    for row in golay24_table_rows():
        acc = acc + WPoly.monomial(row.orbit_length * row.zeta,
                                   ez=row.dim, ex=row.size, ey=24 - row.size)
    return acc
