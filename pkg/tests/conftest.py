import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from matchpow import MonomialIdeal, PolynomialContext, read_ideal  # noqa: E402

D3_TEXT = (
    "vars: x_1..x_12, a..c\n"
    "ideal(x_1,x_2,x_3,x_4,x_5)*ideal(a^3) + ideal(x_5,x_6,x_7,x_8,x_9)*ideal(b^3) "
    "+ ideal(b,x_10,x_11,x_12)*ideal(c^3)\n"
)


def ctx(*names, p=0):
    if len(names) == 1 and isinstance(names[0], int):
        names = tuple(f"x{i + 1}" for i in range(names[0]))
    return PolynomialContext(tuple(names), p)


def ideal(context, *vectors):
    return MonomialIdeal.from_exponents(context, vectors)


@pytest.fixture(scope="session")
def d3():
    return read_ideal(D3_TEXT)


@pytest.fixture(scope="session")
def d3_text():
    return D3_TEXT
