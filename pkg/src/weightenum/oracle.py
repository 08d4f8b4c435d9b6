"""Brute-force ground truth: full codeword enumeration over finite fields.

Messages run through an odometer over F^k and the codeword is updated
incrementally by one generator-row addition per step, so the total work is
about |F|^k row additions of length n -- never the ambient |F|^n.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .codes import Code, indices_from_mask
from .enumerators import comprehensive, min_distance, specialize_to_field_size
from .errors import BudgetExceeded
from .lattice import enumerate_flats

DEFAULT_ORACLE_BUDGET = 10_000_000


def _require_finite(code: Code):
    if not code.field.is_finite():
        raise ValueError("brute-force enumeration needs a finite ground field")


def _stepping_tables(code: Code, budget: int):
    """Odometer setup: per generator row, the delta vectors between
    consecutive scalar multiples in element-encoding order.

    Stepping digit i from value a to a+1 adds deltas[i][a] to the running
    codeword; the wrap-around delta at a = q-1 returns the digit's
    contribution to zero before the next digit advances.
    """
    _require_finite(code)
    f = code.field
    q = f.order
    total = q**code.k
    if total > budget:
        raise BudgetExceeded(budget, f"|F|^k = {total} exceeds budget {budget}")
    elements = list(f.elements())
    deltas = []
    for row in code.generator.entries:
        mults = [f.vec_scale(list(row), e) for e in elements]
        deltas.append([f.vec_submul(mults[(a + 1) % q], mults[a], f.one)
                       for a in range(q)])
    return q, total, deltas


def zero_set_census(code: Code, budget: int = DEFAULT_ORACLE_BUDGET):
    """Count codewords by exact zero set: mask -> number of words.

    Every key is a saturated set; the count of a flat S at field order q0
    equals zeta_S(q0).
    """
    q, _, deltas = _stepping_tables(code, budget)
    f = code.field
    vec_add = f.vec_add
    zero = f.zero
    n, k = code.n, code.k
    counts: dict[int, int] = {}
    word = [zero] * n
    digits = [0] * k
    while True:
        mask = 0
        for j in range(n):
            if word[j] == zero:
                mask |= 1 << j
        counts[mask] = counts.get(mask, 0) + 1
        i = 0
        while i < k:
            word = vec_add(word, deltas[i][digits[i]])
            digits[i] += 1
            if digits[i] < q:
                break
            digits[i] = 0
            i += 1
        if i == k:
            break
    return counts


def brute_weights(code: Code, budget: int = DEFAULT_ORACLE_BUDGET):
    """Exhaustive weight distribution [A_0, ..., A_n]."""
    q, _, deltas = _stepping_tables(code, budget)
    f = code.field
    vec_add = f.vec_add
    zero = f.zero
    n, k = code.n, code.k
    counts = [0] * (n + 1)
    word = [zero] * n
    digits = [0] * k
    while True:
        counts[n - word.count(zero)] += 1
        i = 0
        while i < k:
            word = vec_add(word, deltas[i][digits[i]])
            digits[i] += 1
            if digits[i] < q:
                break
            digits[i] = 0
            i += 1
        if i == k:
            break
    return counts


def brute_min_distance(code: Code, budget: int = DEFAULT_ORACLE_BUDGET) -> int:
    weights = brute_weights(code, budget)
    return next(w for w in range(1, len(weights)) if weights[w])


@dataclass(frozen=True)
class ExtensionCheck:
    """Oracle-versus-prediction comparison at one extension degree."""

    degree: int
    field_order: int
    observed_weights: tuple
    predicted_weights: tuple
    weights_match: bool
    census_match: bool
    census_mismatches: tuple = ()

    def to_json_obj(self):
        return {
            "degree": self.degree,
            "field_order": self.field_order,
            "observed_weights": list(self.observed_weights),
            "predicted_weights": list(self.predicted_weights),
            "weights_match": self.weights_match,
            "census_match": self.census_match,
            "census_mismatches": [dict(m) for m in self.census_mismatches],
        }


@dataclass(frozen=True)
class VerifyReport:
    """Outcome of brute-force verification of the enumerators of a code."""

    field_spec: str
    n: int
    k: int
    flat_count: int
    predicted_min_distance: int
    observed_min_distance: int
    checks: tuple[ExtensionCheck, ...] = dc_field(default_factory=tuple)

    @property
    def min_distance_match(self) -> bool:
        return self.predicted_min_distance == self.observed_min_distance

    @property
    def passed(self) -> bool:
        return self.min_distance_match and all(
            c.weights_match and c.census_match for c in self.checks)

    def to_json_obj(self):
        return {
            "field": self.field_spec,
            "n": self.n,
            "k": self.k,
            "flat_count": self.flat_count,
            "predicted_min_distance": self.predicted_min_distance,
            "observed_min_distance": self.observed_min_distance,
            "min_distance_match": self.min_distance_match,
            "passed": self.passed,
            "extensions": [c.to_json_obj() for c in self.checks],
        }


def verify_enumerators(code: Code, ext_degrees=(1,),
                       budget: int = DEFAULT_ORACLE_BUDGET,
                       flat_budget: int | None = None) -> VerifyReport:
    """Check omega, every zeta_S, and the minimum distance against brute force.

    For each extension degree d: enumerate all codewords of the degree-d
    scalar extension, compare the weight distribution with omega evaluated
    at |F|^d, and compare the zero-set census with zeta_S(|F|^d) flat by
    flat (flats missing from the census must have zeta evaluating to 0).
    """
    _require_finite(code)
    lat = enumerate_flats(code, budget=flat_budget)
    omega = comprehensive(code, lattice=lat)
    zetas = lat.zetas()
    predicted_dist = min_distance(code, lattice=lat)
    checks = []
    observed_dist = None
    for d in sorted(set(int(d) for d in ext_degrees)):
        ext = code.extend_scalars(d)
        q0 = ext.field.order
        census = zero_set_census(ext, budget=budget)
        observed = [0] * (code.n + 1)
        for mask, count in census.items():
            observed[code.n - mask.bit_count()] += count
        predicted = specialize_to_field_size(omega, q0)
        mismatches = []
        for i, mask in enumerate(lat.flats):
            want = zetas[i](q0)
            got = census.pop(mask, 0)
            if want != got:
                mismatches.append({
                    "indices": list(indices_from_mask(mask)),
                    "observed": got,
                    "predicted": want,
                })
        for mask, count in census.items():  # keys that are not flats at all
            mismatches.append({
                "indices": list(indices_from_mask(mask)),
                "observed": count,
                "predicted": 0,
            })
        checks.append(ExtensionCheck(
            degree=d,
            field_order=q0,
            observed_weights=tuple(observed),
            predicted_weights=tuple(predicted),
            weights_match=observed == predicted,
            census_match=not mismatches,
            census_mismatches=tuple(tuple(sorted(m.items())) for m in mismatches),
        ))
        dist = next((w for w in range(1, len(observed)) if observed[w]), None)
        if observed_dist is None or (dist is not None and dist < observed_dist):
            observed_dist = dist
    return VerifyReport(
        field_spec=code.field.spec_string(),
        n=code.n,
        k=code.k,
        flat_count=len(lat),
        predicted_min_distance=predicted_dist,
        observed_min_distance=observed_dist if observed_dist is not None else -1,
        checks=tuple(checks),
    )
