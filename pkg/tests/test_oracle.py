import pytest

from weightenum import (
    Code,
    Matrix,
    brute_min_distance,
    brute_weights,
    enumerate_flats,
    indices_from_mask,
    mask_from_indices,
    verify_enumerators,
    zero_set_census,
)
from weightenum.errors import BudgetExceeded

from conftest import F2, F3, SMALL_FIELDS, load_code, random_code, random_nk


def even_weight_code():
    return Code(Matrix.from_rows(F2, [[1, 0, 1], [0, 1, 1]]))


def test_brute_weights_even_weight():
    assert brute_weights(even_weight_code()) == [1, 0, 3, 0]


def test_brute_weights_hexacode():
    assert brute_weights(load_code("hexacode")) == [1, 0, 0, 0, 45, 0, 18]


def test_brute_weights_total(rng):
    for _ in range(10):
        field = rng.choice(SMALL_FIELDS)
        n, k = random_nk(rng, n_max=6, k_max=3)
        code = random_code(field, n, k, rng)
        assert sum(brute_weights(code)) == field.order**code.k


def test_census_even_weight():
    census = zero_set_census(even_weight_code())
    expected = {
        mask_from_indices([1, 2, 3], 3): 1,
        mask_from_indices([1], 3): 1,
        mask_from_indices([2], 3): 1,
        mask_from_indices([3], 3): 1,
    }
    assert census == expected


def test_census_keys_are_saturated(rng):
    for _ in range(10):
        field = rng.choice(SMALL_FIELDS)
        n, k = random_nk(rng, n_max=6, k_max=3)
        code = random_code(field, n, k, rng)
        census = zero_set_census(code)
        assert sum(census.values()) == field.order**code.k
        assert census[code.full_mask] == 1
        for mask in census:
            assert code.is_saturated(mask)


def test_census_counts_equal_zeta_values(rng):
    for _ in range(10):
        field = rng.choice(SMALL_FIELDS)
        n, k = random_nk(rng, n_max=6, k_max=3)
        code = random_code(field, n, k, rng)
        lat = enumerate_flats(code)
        census = zero_set_census(code)
        q0 = field.order
        for i, mask in enumerate(lat.flats):
            assert census.get(mask, 0) == lat.zetas()[i](q0)


def test_budget_exceeded():
    with pytest.raises(BudgetExceeded):
        brute_weights(load_code("golay3"), budget=100)
    with pytest.raises(BudgetExceeded):
        zero_set_census(load_code("golay3"), budget=100)


def test_rationals_rejected():
    with pytest.raises(ValueError):
        brute_weights(load_code("p5"))


def test_verify_hexacode():
    report = verify_enumerators(load_code("hexacode"), ext_degrees=[1])
    assert report.passed
    assert report.predicted_min_distance == 4
    assert report.observed_min_distance == 4


def test_verify_hamming_two_extensions():
    report = verify_enumerators(load_code("hamming74"), ext_degrees=[1, 2])
    assert report.passed
    assert [c.field_order for c in report.checks] == [2, 4]
    obj = report.to_json_obj()
    assert obj["passed"] is True
    assert obj["min_distance_match"] is True


def test_verify_random_codes_f3(rng):
    for _ in range(20):
        code = random_code(F3, 6, 3, rng)
        assert verify_enumerators(code, ext_degrees=[1]).passed


def test_brute_min_distance():
    assert brute_min_distance(load_code("c6")) == 3
    assert brute_min_distance(load_code("golay3")) == 6
