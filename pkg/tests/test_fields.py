import random
from fractions import Fraction

import pytest

from weightenum import ExtensionField, PrimeField, QQ, make_field
from weightenum.errors import (
    DegreeMismatch,
    DivisionByZero,
    MixedFields,
    NonPrimeCharacteristic,
    ReducibleModulus,
)
from weightenum.fields import default_modulus, find_embedding, is_prime, poly_is_irreducible

from conftest import SMALL_FIELDS


def test_make_field_prime():
    f = make_field("gf 2")
    assert f.kind == "prime" and f.order == 2


def test_make_field_gf4():
    f = make_field("gf 4 modulus=[1,1,1]")
    assert f.kind == "extension"
    assert f.char == 2 and f.degree == 2 and f.order == 4
    assert make_field("gf 2^2 modulus=[1,1,1]") == f


def test_make_field_reducible_modulus():
    with pytest.raises(ReducibleModulus):
        make_field("gf 4 modulus=[0,0,1]")  # alpha^2 = alpha * alpha


def test_make_field_nonprime():
    with pytest.raises(NonPrimeCharacteristic):
        make_field("gf 6")
    with pytest.raises(NonPrimeCharacteristic):
        PrimeField(1)


def test_make_field_degree_mismatch():
    with pytest.raises(DegreeMismatch):
        make_field("gf 8 modulus=[1,1,1]")
    with pytest.raises(DegreeMismatch):
        make_field("gf 2^3 modulus=[1,1,1]")


def test_rationals():
    f = make_field("rationals")
    assert f is QQ
    assert f.add(Fraction(1, 2), Fraction(1, 3)) == Fraction(5, 6)
    assert f.coerce(3) == Fraction(3)


def test_prime_arithmetic_examples():
    f7 = PrimeField(7)
    assert f7.add(3, 5) == 1
    assert f7.mul(f7.inv(3), 3) == 1
    with pytest.raises(DivisionByZero):
        f7.inv(0)


def test_gf4_relation():
    f4 = make_field("gf 4 modulus=[1,1,1]")
    alpha = f4.encode([0, 1])
    assert f4.mul(alpha, alpha) == f4.encode([1, 1])  # alpha^2 = alpha + 1


def test_extension_decode_encode_roundtrip():
    f9 = ExtensionField(3, [1, 0, 1])  # alpha^2 + 1, irreducible over GF(3)
    for a in f9.elements():
        assert f9.encode(f9.decode(a)) == a


def test_check_rejects_foreign_elements():
    f2 = PrimeField(2)
    with pytest.raises(MixedFields):
        f2.check(2)
    with pytest.raises(MixedFields):
        f2.check(Fraction(1))
    with pytest.raises(MixedFields):
        QQ.check(1)  # must be a Fraction


@pytest.mark.parametrize("field", SMALL_FIELDS, ids=lambda f: f.spec_string())
def test_field_axioms_random_triples(field):
    # 2500 triples per field; with the rationals below this crosses 10^4 total
    rng = random.Random(hash(field.spec_string()) & 0xFFFF)
    elements = list(field.elements())
    one = field.one
    for _ in range(2500):
        a, b, c = (rng.choice(elements) for _ in range(3))
        assert field.add(a, b) == field.add(b, a)
        assert field.mul(a, b) == field.mul(b, a)
        assert field.add(field.add(a, b), c) == field.add(a, field.add(b, c))
        assert field.mul(field.mul(a, b), c) == field.mul(a, field.mul(b, c))
        assert field.mul(a, field.add(b, c)) == field.add(
            field.mul(a, b), field.mul(a, c))
        if a != field.zero:
            assert field.mul(a, field.inv(a)) == one
        assert field.add(a, field.neg(a)) == field.zero
        assert field.sub(a, b) == field.add(a, field.neg(b))


def test_rational_axioms_random_triples():
    rng = random.Random(7)
    for _ in range(2500):
        a, b, c = (Fraction(rng.randint(-20, 20), rng.randint(1, 20))
                   for _ in range(3))
        assert QQ.mul(a, QQ.add(b, c)) == QQ.add(QQ.mul(a, b), QQ.mul(a, c))
        if a:
            assert QQ.mul(a, QQ.inv(a)) == 1


def test_vector_helpers_match_scalar_ops():
    rng = random.Random(13)
    for field in SMALL_FIELDS:
        elements = list(field.elements())
        for _ in range(50):
            u = [rng.choice(elements) for _ in range(6)]
            v = [rng.choice(elements) for _ in range(6)]
            f = rng.choice(elements)
            assert field.vec_add(u, v) == [field.add(a, b) for a, b in zip(u, v)]
            assert field.vec_submul(u, v, f) == [
                field.sub(a, field.mul(f, b)) for a, b in zip(u, v)]
            assert field.vec_scale(u, f) == [field.mul(f, a) for a in u]


def test_large_extension_no_tables():
    # order above the table threshold exercises the direct arithmetic path
    f = ExtensionField(5, default_modulus(5, 4))  # 625 elements
    a = f.encode([1, 2, 3, 4])
    b = f.encode([4, 0, 1, 2])
    assert f.mul(a, f.inv(a)) == f.one
    assert f.sub(f.add(a, b), b) == a


def test_is_prime():
    assert is_prime(2) and is_prime(97) and is_prime(2**31 - 1)
    assert not is_prime(1) and not is_prime(91) and not is_prime(2**32 + 1)


def test_irreducibility_larger_degrees():
    # x^11 + x^10 + x^6 + x^5 + x^4 + x^2 + 1 divides x^23 - 1 and is irreducible
    assert poly_is_irreducible([1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 1, 1], 2)
    # (x^2 + 1)^2 = x^4 + 2x^2 + 1 over GF(3)
    assert not poly_is_irreducible([1, 0, 2, 0, 1], 3)


def test_default_modulus_is_deterministic_and_irreducible():
    assert default_modulus(2, 2) == [1, 1, 1]
    for p, m in ((2, 4), (3, 2), (5, 2)):
        mod = default_modulus(p, m)
        assert len(mod) == m + 1 and mod[-1] == 1
        assert poly_is_irreducible(mod, p)
        assert default_modulus(p, m) == mod


def test_embedding_is_a_homomorphism():
    base = make_field("gf 4 modulus=[1,1,1]")
    target = ExtensionField(2, default_modulus(2, 4))
    embed = find_embedding(base, target)
    rng = random.Random(99)
    images = {embed(a) for a in base.elements()}
    assert len(images) == 4  # injective
    for _ in range(100):
        a, b = rng.randrange(4), rng.randrange(4)
        assert embed(base.add(a, b)) == target.add(embed(a), embed(b))
        assert embed(base.mul(a, b)) == target.mul(embed(a), embed(b))
    assert embed(base.one) == target.one
