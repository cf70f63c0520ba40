import random

import pytest
from src.exceptions import TableArgumentError, TableReductionError
from src.schemas.table.models import BinaryTable, TargetStatusKind
from src.services.table.operations import (
    check_target_status,
    closure,
    negate_column,
    reduce_table,
    support_of_attrs,
    support_of_rows,
)

from tests.conftest import random_table

T, A1, A2, B1, B2, S = range(6)


class TestGaloisOperators:
    def test_support_of_attrs(self, table1):
        assert support_of_attrs(table1, [A1, B2]) == frozenset({4, 7, 8})
        assert support_of_attrs(table1, []) == frozenset(range(9))

    def test_support_of_rows(self, table1):
        assert support_of_rows(table1, [0]) == frozenset({A1, B1})
        assert support_of_rows(table1, []) == frozenset(range(6))

    def test_closure_of_antecedent_contains_target(self, table1):
        assert T in closure(table1, [A1, A2])
        assert T not in closure(table1, [A1])

    def test_out_of_range_index(self, table1):
        with pytest.raises(TableArgumentError):
            support_of_attrs(table1, [6])
        with pytest.raises(TableArgumentError):
            support_of_rows(table1, [9])

    def test_closure_laws_on_random_tables(self):
        rng = random.Random(7)
        for _ in range(1000):
            table = random_table(rng, max_attrs=10, max_rows=12)
            attrs = {c for c in range(table.n_cols) if rng.random() < 0.3}
            closed = closure(table, attrs)

            assert attrs <= closed
            assert closure(table, closed) == closed
            rows = support_of_attrs(table, attrs)
            assert support_of_attrs(table, support_of_rows(table, rows)) == rows


class TestReduceTable:
    def test_liver_reduction(self, liver):
        reduced, log = reduce_table(liver)

        assert log.removed_full_columns == (5,)
        assert log.merged_duplicates == ((7, 6),)
        assert reduced.n_cols == 20
        assert log.to_reduced(21) == 19

    def test_no_reduction_returns_same_table(self, table1):
        reduced, log = reduce_table(table1)

        assert reduced is table1
        assert log.is_empty

    def test_all_ones_table_fails(self):
        with pytest.raises(TableReductionError):
            reduce_table(BinaryTable.from_matrix([[1, 1], [1, 1]]))

    def test_single_surviving_column_is_legal(self):
        reduced, log = reduce_table(BinaryTable.from_matrix([[1, 1, 1], [0, 1, 0]]))

        assert reduced.n_cols == 1
        assert log.kept == (0,)

    def test_reduced_table_has_no_full_or_repeated_columns(self):
        rng = random.Random(11)
        for _ in range(100):
            table = random_table(rng)
            try:
                reduced, _ = reduce_table(table)
            except TableReductionError:
                continue
            assert reduced.all_rows not in reduced.cols
            assert len(set(reduced.cols)) == reduced.n_cols
            assert reduce_table(reduced)[1].is_empty


class TestTargetStatus:
    def test_table1_target_is_usable(self, table1):
        assert check_target_status(table1, T).kind == TargetStatusKind.USABLE

    def test_all_ones_column(self, liver):
        status = check_target_status(liver, 5)

        assert status.kind == TargetStatusKind.REDUCIBLE
        assert status.explanation == "column 6 is reduced, a column with all 1s"

    def test_duplicate_column(self, liver):
        status = check_target_status(liver, 7)

        assert status.kind == TargetStatusKind.REDUCIBLE
        assert status.explanation == "column 8 is reduced, equal to column 7"

    def test_only_columns_6_and_8_reducible_in_liver(self, liver):
        blocked = {c + 1 for c in range(liver.n_cols) if not check_target_status(liver, c).usable}

        assert blocked == {6, 8}

    def test_empty_extent(self):
        table = BinaryTable.from_matrix([[0, 1], [0, 0]])

        assert check_target_status(table, 0).kind == TargetStatusKind.EMPTY_EXTENT

    def test_intersection_of_larger_columns(self):
        table = BinaryTable.from_matrix([[1, 1, 1], [0, 1, 0], [0, 0, 1], [0, 0, 0]])

        status = check_target_status(table, 0)
        assert status.kind == TargetStatusKind.REDUCIBLE
        assert "intersection of columns 2, 3" in status.explanation

    def test_out_of_range(self, table1):
        with pytest.raises(TableArgumentError):
            check_target_status(table1, 6)


def test_negate_column(table1):
    negated = negate_column(table1, T)

    assert support_of_attrs(negated, [T]) == frozenset({0, 2, 3, 5})
    assert negated.attr_names == table1.attr_names
    assert negate_column(negated, T) == table1
