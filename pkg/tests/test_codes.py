import random

import pytest

from weightenum import (
    Code,
    Matrix,
    brute_weights,
    comprehensive,
    indices_from_mask,
    mask_from_indices,
    specialize_to_field_size,
)
from weightenum.errors import (
    DimensionZeroDual,
    IncompatibleCharacteristic,
    NotSaturated,
    RankDeficientGenerator,
    ZeroColumn,
)

from conftest import F2, F3, F4, SMALL_FIELDS, load_code, random_code, random_nk


def even_weight_code():
    return Code(Matrix.from_rows(F2, [[1, 0, 1], [0, 1, 1]]))


def test_mask_helpers():
    assert mask_from_indices([1, 3], 3) == 0b101
    assert indices_from_mask(0b101) == (1, 3)
    with pytest.raises(ValueError):
        mask_from_indices([4], 3)


def test_code_new_hexacode():
    code = load_code("hexacode")
    assert (code.n, code.k) == (6, 3)


def test_code_new_rank_deficient():
    with pytest.raises(RankDeficientGenerator):
        Code(Matrix.from_rows(F2, [[1, 1], [1, 1]]))


def test_code_new_zero_column():
    with pytest.raises(ZeroColumn):
        Code(Matrix.from_rows(F2, [[1, 0, 0], [0, 0, 1]]))
    code = Code(Matrix.from_rows(F2, [[1, 0, 0], [0, 0, 1]]),
                allow_zero_columns=True)
    assert code.closure(0) == 0b010  # zero columns sit in every closure


def test_closure_examples():
    code = even_weight_code()
    assert code.closure(0) == 0
    assert code.closure(mask_from_indices([1, 2], 3)) == 0b111
    assert code.closure(code.full_mask) == code.full_mask


def test_is_saturated_examples():
    code = even_weight_code()
    assert not code.is_saturated(mask_from_indices([1, 2], 3))
    assert code.is_saturated(mask_from_indices([1], 3))
    assert code.is_saturated(code.full_mask)


def test_closure_operator_properties_random(rng):
    for _ in range(20):
        field = rng.choice(SMALL_FIELDS)
        n, k = random_nk(rng, n_max=6, k_max=3)
        code = random_code(field, n, k, rng)
        for _ in range(10):
            s = rng.randrange(1 << code.n)
            t = rng.randrange(1 << code.n)
            cs, ct = code.closure(s), code.closure(t)
            assert cs & s == s                      # extensive
            assert code.closure(cs) == cs           # idempotent
            if s & t == s:
                assert cs & ct == cs                # monotone
            # intersection of saturated sets is saturated
            assert code.is_saturated(cs & ct)


def test_repeated_columns_keep_multiplicity():
    # parallel columns always saturate together, and n counts them twice
    code = Code(Matrix.from_rows(F2, [[1, 0, 1, 1], [0, 1, 1, 1]]))
    assert code.n == 4
    assert code.closure(mask_from_indices([3], 4)) == mask_from_indices([3, 4], 4)
    assert code.closure(mask_from_indices([4], 4)) == mask_from_indices([3, 4], 4)
    assert not code.is_saturated(mask_from_indices([3], 4))
    omega = comprehensive(code)
    assert omega.xy_degree() == 4
    assert brute_weights(code) == specialize_to_field_size(omega, 2)


def test_dim_of_examples():
    code = even_weight_code()
    assert code.dim_of(0) == 2
    assert code.dim_of(code.full_mask) == 0
    with pytest.raises(NotSaturated):
        code.dim_of(mask_from_indices([1, 2], 3))
    hexa = load_code("hexacode")
    assert hexa.dim_of(mask_from_indices([1, 2], 6)) == 1


def test_dim_antitone(rng):
    for _ in range(10):
        code = random_code(F3, 6, 3, rng)
        flats = [m for m in range(1 << code.n) if code.is_saturated(m)]
        for s in flats:
            for t in flats:
                if s & t == s:
                    assert code.dim_of(s) >= code.dim_of(t)


def test_dual_even_weight_is_repetition():
    dual = even_weight_code().dual()
    assert dual.generator.entries == ((1, 1, 1),)


def test_dual_full_space_raises():
    with pytest.raises(DimensionZeroDual):
        Code(Matrix.identity(F2, 2)).dual()


def test_dual_dual_row_space(rng):
    for _ in range(10):
        field = rng.choice(SMALL_FIELDS)
        k = rng.randint(1, 3)
        n = rng.randint(k + 1, 6)
        code = random_code(field, n, k, rng)
        again = code.dual().dual()
        assert again.generator.row_space_equals(code.generator)


def test_hexacode_dual_is_conjugate_code():
    hexa = load_code("hexacode")
    dual = hexa.dual()
    f4 = hexa.field
    conjugated = Matrix(f4, [[f4.mul(e, e) for e in row]
                             for row in hexa.generator.entries])
    assert dual.generator.row_space_equals(conjugated)
    assert comprehensive(dual) == comprehensive(hexa)


def test_extend_scalars_hamming():
    ham = load_code("hamming74")
    ext = ham.extend_scalars(2)
    assert ext.field.order == 4
    assert (ext.n, ext.k) == (7, 4)
    assert ext.generator.entries == ham.generator.entries  # constants embed as themselves


def test_extend_scalars_weights_match_omega():
    code = even_weight_code()
    ext = code.extend_scalars(2)
    assert brute_weights(ext) == [1, 0, 9, 6]
    assert brute_weights(ext) == specialize_to_field_size(comprehensive(code), 4)


def test_extend_scalars_wrong_characteristic():
    with pytest.raises(IncompatibleCharacteristic):
        even_weight_code().extend_scalars(field="gf 3")
    with pytest.raises(IncompatibleCharacteristic):
        even_weight_code().extend_scalars(field="gf 9 modulus=[1,0,1]")


def test_extend_scalars_from_extension_base():
    hexa = load_code("hexacode")
    ext = hexa.extend_scalars(2)
    assert ext.field.order == 16
    assert brute_weights(ext) == specialize_to_field_size(comprehensive(hexa), 16)


def test_extend_scalars_rationals_rejected():
    with pytest.raises(IncompatibleCharacteristic):
        load_code("p5").extend_scalars(2)
