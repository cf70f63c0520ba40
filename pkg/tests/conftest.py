# Test configuration and shared fixtures
import random
from typing import Callable, List

import pytest
from src.schemas.table.models import BinaryTable

TABLE1_NAMES = ("t", "a1", "a2", "b1", "b2", "s")

TABLE1_MATRIX = [
    [0, 1, 0, 1, 0, 0],
    [1, 0, 0, 1, 1, 0],
    [0, 0, 1, 0, 1, 1],
    [0, 0, 0, 1, 1, 0],
    [1, 1, 1, 1, 1, 0],
    [0, 0, 0, 1, 1, 0],
    [1, 0, 0, 1, 1, 0],
    [1, 1, 1, 1, 1, 1],
    [1, 1, 1, 1, 1, 0],
]

LIVER_TEXT = """\
1 0 0 0 0 1 0 0 0 1 1 0 1 1 0 1 1 1 0 1 1 1
1 1 1 0 0 1 0 0 1 1 1 0 0 0 1 1 0 1 0 1 0 1
1 1 1 1 0 1 1 1 1 1 1 1 1 0 0 0 0 0 0 0 0 1
1 1 0 1 0 1 1 1 0 0 0 0 1 1 1 0 0 0 1 1 1 1
0 0 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 0 0 0
0 0 0 1 1 1 1 1 0 0 1 1 0 0 1 1 0 0 0 1 1 0
1 1 1 1 1 1 1 1 0 1 0 1 0 1 0 1 0 1 0 1 0 1
1 1 0 1 0 1 1 1 1 1 1 0 1 1 1 1 1 1 0 1 1 1
1 1 0 0 0 1 1 1 0 0 0 0 0 0 0 1 1 1 1 0 0 0
0 0 0 0 1 1 1 1 0 0 0 0 1 1 1 1 0 0 0 0 1 1
"""


def table1_text() -> str:
    lines = ["# " + " ".join(TABLE1_NAMES)]
    lines.extend(" ".join(str(v) for v in row) for row in TABLE1_MATRIX)
    return "\n".join(lines) + "\n"


def liver_matrix() -> List[List[int]]:
    return [[int(v) for v in line.split()] for line in LIVER_TEXT.splitlines()]


def pair_family_table(k: int) -> BinaryTable:
    """Table whose first column has exactly 2**k - 1 minimal antecedents, all with support >= 1.

    Columns: t, x_1..x_k, y_1..y_k. Rows: k rows with t and every column except x_j,
    k rows without t, x_i and y_i, one row holding only the y columns, one row of ones.
    """
    width = 1 + 2 * k
    xs = list(range(1, k + 1))
    ys = list(range(k + 1, 2 * k + 1))
    matrix = []
    for j in xs:
        matrix.append([1 if c == 0 or c in ys or (c in xs and c != j) else 0 for c in range(width)])
    for i in range(1, k + 1):
        matrix.append([0 if c in (0, i, k + i) else 1 for c in range(width)])
    matrix.append([1 if c in ys else 0 for c in range(width)])
    matrix.append([1] * width)
    return BinaryTable.from_matrix(matrix)


def random_table(rng: random.Random, max_attrs: int = 14, max_rows: int = 20) -> BinaryTable:
    n_cols = rng.randint(3, max_attrs)
    n_rows = rng.randint(3, max_rows)
    density = rng.uniform(0.3, 0.7)
    matrix = [[1 if rng.random() < density else 0 for _ in range(n_cols)] for _ in range(n_rows)]
    return BinaryTable.from_matrix(matrix)


@pytest.fixture
def table1() -> BinaryTable:
    """The six-attribute worked example: t, a1, a2, b1, b2, s over nine rows."""
    return BinaryTable.from_matrix(TABLE1_MATRIX, TABLE1_NAMES)


@pytest.fixture
def liver() -> BinaryTable:
    """Ten patients by 22 binary attributes; column 22 is the usual target."""
    return BinaryTable.from_matrix(liver_matrix())


@pytest.fixture
def table1_file(tmp_path):
    path = tmp_path / "table1.txt"
    path.write_text(table1_text())
    return path


@pytest.fixture
def liver_file(tmp_path):
    path = tmp_path / "liver.txt"
    path.write_text(LIVER_TEXT)
    return path


@pytest.fixture
def pair_family() -> Callable[[int], BinaryTable]:
    return pair_family_table


@pytest.fixture
def table_generator() -> Callable[..., BinaryTable]:
    return random_table
