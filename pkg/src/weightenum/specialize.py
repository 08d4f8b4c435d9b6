"""Reduction of rational codes mod p and detection of exceptional primes.

A code over Q is intersected with Z^n (integral basis with elementary
divisors all 1), reduced componentwise mod p, and its refined enumerator
compared with the rational one.  For all but finitely many primes the two
agree; the mismatching primes in the supplied list are reported as
exceptional.  No bound is claimed beyond the supplied list.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .codes import Code
from .enumerators import refined
from .errors import RankDropped
from .fields import PrimeField, is_prime
from .intlattice import IntMatrix, row_saturation
from .matrices import Matrix
from .wpoly import WPoly


def primes_up_to(bound: int):
    return [p for p in range(2, bound + 1) if is_prime(p)]


DEFAULT_PRIMES = tuple(primes_up_to(50))


def integral_basis(code: Code) -> IntMatrix:
    """Z-basis of (row space of G) intersected with Z^n.

    Denominators are cleared row by row (lcm) to keep intermediate entries
    small, then the row lattice is saturated; the result has elementary
    divisors all 1 and the same Q-row-space as the generator.
    """
    if code.field.kind != "rationals":
        raise ValueError("integral basis applies to codes over the rationals")
    cleared = []
    for row in code.generator.entries:
        scale = lcm(*(f.denominator for f in row))
        cleared.append([int(f * scale) for f in row])
    return row_saturation(IntMatrix(cleared))


def reduce_mod_p(basis: IntMatrix, p: int) -> Code:
    """The mod-p code generated by an integral basis with unit divisors.

    Columns can vanish mod p even when the basis is saturated, so the
    reduced code keeps them (allow_zero_columns); with unit elementary
    divisors the rank never drops, and a drop is an internal error.
    """
    field = PrimeField(p)
    rows = [[e % p for e in row] for row in basis.entries]
    generator = Matrix(field, rows, validate=False)
    if generator.rank() != basis.rows:
        raise RankDropped(
            f"integral basis lost rank mod {p}; divisors were not all 1")
    return Code(generator, allow_zero_columns=True)


@dataclass(frozen=True)
class PrimeSpecialization:
    prime: int
    rho: WPoly
    matches_generic: bool


@dataclass(frozen=True)
class SpecializationReport:
    field_spec: str
    n: int
    k: int
    generic_rho: WPoly
    results: tuple[PrimeSpecialization, ...]
    exceptional_primes: tuple[int, ...]

    def to_json_obj(self):
        return {
            "field": self.field_spec,
            "n": self.n,
            "k": self.k,
            "generic_rho": self.generic_rho.to_json_obj(),
            "primes": [
                {
                    "prime": r.prime,
                    "matches_generic": r.matches_generic,
                    "rho": r.rho.to_json_obj(),
                }
                for r in self.results
            ],
            "exceptional_primes": list(self.exceptional_primes),
        }


def compare_specializations(code: Code, primes=DEFAULT_PRIMES,
                            budget: int | None = None) -> SpecializationReport:
    """Refined enumerator over Q versus every requested prime reduction."""
    if not primes:
        raise ValueError("need at least one prime")
    generic = refined(code, budget=budget)
    basis = integral_basis(code)
    results = []
    exceptional = []
    for p in sorted(set(primes)):
        rho_p = refined(reduce_mod_p(basis, p), budget=budget)
        match = rho_p == generic
        results.append(PrimeSpecialization(p, rho_p, match))
        if not match:
            exceptional.append(p)
    return SpecializationReport(
        field_spec=code.field.spec_string(),
        n=code.n,
        k=code.k,
        generic_rho=generic,
        results=tuple(results),
        exceptional_primes=tuple(exceptional),
    )
