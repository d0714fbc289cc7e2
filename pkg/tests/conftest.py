import json
from pathlib import Path

import pytest

from antidote_codes.formats import parse_matrix

FIXTURES = Path(__file__).parent / "fixtures"

# example number -> (case, K, D, lambda) as printed with L1..L10
EXAMPLES = {
    1: ("I", 20, 4, None),
    2: ("II", 20, 16, None),
    3: ("III", 20, 12, None),
    4: ("IV", 20, 8, None),
    5: ("V", 21, 4, 1),
    6: ("VI", 21, 17, 1),
    7: ("VII", 18, 5, 1),
    8: ("VIII", 24, 19, 1),
    9: ("IX", 19, 5, 1),
    10: ("X", 28, 18, 2),
}


def golden_matrix(n):
    return parse_matrix((FIXTURES / f"L{n}.txt").read_text())


def golden_codebook(n):
    data = json.loads((FIXTURES / "codebooks.json").read_text())
    return [tuple(s) for s in data[str(n)]]


@pytest.fixture
def fixtures_dir():
    return FIXTURES
