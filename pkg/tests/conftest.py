import random
from pathlib import Path

import pytest

from qpencil.fields import QQ, PrimeField

REPO = Path(__file__).resolve().parents[1]
INPUTS = REPO / "inputs"
GOLDEN = Path(__file__).resolve().parent / "golden"

F3 = PrimeField(3)
F5 = PrimeField(5)
F11 = PrimeField(11)


@pytest.fixture
def rng():
    return random.Random(20240917)


def all_fields():
    return [QQ, F3, F5, F11]
