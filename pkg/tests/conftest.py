import random

import pytest

from weightenum import Code, Matrix, make_field, parse_code_text
from weightenum.data import code_text

F2 = make_field("gf 2")
F3 = make_field("gf 3")
F4 = make_field("gf 4 modulus=[1,1,1]")
F5 = make_field("gf 5")
SMALL_FIELDS = (F2, F3, F4, F5)


def load_code(name, **kwargs):
    return parse_code_text(code_text(name), **kwargs)


def random_nk(rng, n_max=7, k_max=4, n_min=2):
    """A random dimension pair with k <= n."""
    k = rng.randint(1, k_max)
    return rng.randint(max(k, n_min), n_max), k


def random_code(field, n, k, rng, allow_zero_columns=False):
    """Rejection-sample a valid [n, k] code over the field."""
    if k > n:
        raise ValueError(f"k={k} exceeds n={n}")
    elements = list(field.elements())
    while True:
        rows = [[rng.choice(elements) for _ in range(n)] for _ in range(k)]
        mat = Matrix(field, rows, validate=False)
        if mat.rank() != k:
            continue
        zero = field.zero
        if not allow_zero_columns and any(
                all(e == zero for e in mat.column(j)) for j in range(n)):
            continue
        return Code(mat, allow_zero_columns=allow_zero_columns)


def random_codes(count, rng, n_max=8, k_max=4, fields=SMALL_FIELDS):
    """A deterministic spread of random codes across the small fields."""
    out = []
    while len(out) < count:
        field = fields[len(out) % len(fields)]
        k = rng.randint(1, k_max)
        n = rng.randint(k, n_max)
        out.append(random_code(field, n, k, rng))
    return out


@pytest.fixture
def rng():
    return random.Random(0xC0DE)
