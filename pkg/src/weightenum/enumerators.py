"""Weight enumerators of a code, assembled from its flat lattice.

omega(q, x, y) sums zeta_S(q) x^|S| y^(n-|S|) over saturated sets S; rho
additionally carries z^dim(S).  Substituting a finite field order for q in
omega gives the classical weight distribution of the scalar extension of
that order.  x tracks zero positions: the weight-w count is the
coefficient of x^(n-w) y^w.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .codes import Code
from .lattice import FlatLattice, enumerate_flats
from .qpoly import QPoly
from .wpoly import WPoly


def _lattice_for(code: Code, lattice: FlatLattice | None, budget: int | None):
    if lattice is not None:
        return lattice
    return enumerate_flats(code, budget=budget)


def _assemble(lat: FlatLattice, with_z: bool) -> WPoly:
    n = lat.code.n
    zetas = lat.zetas()
    terms = {}
    for i, mask in enumerate(lat.flats):
        size = mask.bit_count()
        key = (lat.dims[i] if with_z else 0, size, n - size)
        acc = terms.get(key)
        terms[key] = zetas[i] if acc is None else acc + zetas[i]
    return WPoly(terms)


def comprehensive(code: Code, lattice: FlatLattice | None = None,
                  budget: int | None = None) -> WPoly:
    """omega(q, x, y); homogeneous of degree n in x, y; x^n coefficient 1."""
    return _assemble(_lattice_for(code, lattice, budget), with_z=False)


def refined(code: Code, lattice: FlatLattice | None = None,
            budget: int | None = None) -> WPoly:
    """rho(q, z, x, y); setting z = 1 recovers omega."""
    return _assemble(_lattice_for(code, lattice, budget), with_z=True)


def characteristic_polynomial(code: Code, lattice: FlatLattice | None = None,
                              budget: int | None = None) -> QPoly:
    """zeta of the bottom flat: the characteristic polynomial of the
    central hyperplane arrangement associated with the code."""
    lat = _lattice_for(code, lattice, budget)
    return lat.zeta(lat.bottom)


def min_distance(code: Code, lattice: FlatLattice | None = None,
                 budget: int | None = None) -> int:
    """n minus the largest proper saturated set; field independent."""
    lat = _lattice_for(code, lattice, budget)
    top = lat.top
    best = max(mask.bit_count() for mask in lat.flats if mask != top)
    return code.n - best


def macwilliams_transform(w: WPoly, k: int) -> WPoly:
    """q^(-k) * w(q, x + (q-1)y, x - y) for a z-free homogeneous w.

    Raises NotDivisible when some coefficient of the substituted
    polynomial is not divisible by q^k (wrong k, or w is not the
    comprehensive enumerator of a dimension-k code over a finite field).
    """
    if w.has_z():
        raise ValueError("transform applies to z-free enumerators; set z first")
    if not w.is_homogeneous_xy():
        raise ValueError("transform needs a homogeneous polynomial in x, y")
    one = QPoly.const(1)
    substituted = w.substitute_xy(one, QPoly.q_minus(1), one, QPoly.const(-1))
    return substituted.exact_div_q_power(k)


def specialize_to_field_size(w: WPoly, q0: int):
    """Weight distribution [A_0, ..., A_n] of w at q = q0 (A_w = words of
    weight w, the x^(n-w) y^w coefficient).  Entries can be negative when
    q0 is not a legitimate extension order; they are reported as-is."""
    if q0 < 2:
        raise ValueError("field size must be at least 2")
    if w.has_z():
        raise ValueError("set z before specializing")
    if not w.is_homogeneous_xy() or w.is_zero():
        raise ValueError("need a nonzero homogeneous polynomial in x, y")
    n = w.xy_degree()
    out = [0] * (n + 1)
    for (_, _, ey), coeff in w.terms.items():
        out[ey] += coeff(q0)
    return out


@dataclass(frozen=True)
class EnumeratorResult:
    """Both enumerators of one code plus bookkeeping."""

    field_spec: str
    n: int
    k: int
    omega: WPoly
    rho: WPoly
    flat_count: int
    min_distance: int
    timing_seconds: float

    def to_json_obj(self):
        return {
            "field": self.field_spec,
            "n": self.n,
            "k": self.k,
            "flat_count": self.flat_count,
            "min_distance": self.min_distance,
            "timing_seconds": round(self.timing_seconds, 6),
            "omega": self.omega.to_json_obj(),
            "rho": self.rho.to_json_obj(),
        }


def analyze(code: Code, budget: int | None = None) -> EnumeratorResult:
    """Enumerate flats once and package omega, rho, and the minimum distance."""
    start = time.perf_counter()
    lat = enumerate_flats(code, budget=budget)
    rho = _assemble(lat, with_z=True)
    omega = rho.subs_z_one()
    dist = min_distance(code, lattice=lat)
    elapsed = time.perf_counter() - start
    return EnumeratorResult(
        field_spec=code.field.spec_string(),
        n=code.n,
        k=code.k,
        omega=omega,
        rho=rho,
        flat_count=len(lat),
        min_distance=dist,
        timing_seconds=elapsed,
    )
