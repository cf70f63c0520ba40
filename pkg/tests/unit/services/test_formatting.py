from fractions import Fraction

import pytest
from src.exceptions import PipelineException
from src.schemas.pipeline.models import Implication, PipelineKind, RelevanceRow, RunConfig
from src.services.pipeline.formatting import (
    format_implication,
    format_number,
    format_reduction_notes,
    render_implications,
    render_relevance_csv,
    render_tsup_csv,
)
from src.services.pipeline.runner import run_full, run_small_space


@pytest.mark.parametrize(
    "value,expected",
    [(3, "3"), (Fraction(3, 2), "1.5"), (Fraction(32, 3), "10.67"), (0, "0"), (10, "10"), (Fraction(11, 3), "3.67")],
)
def test_format_number(value, expected):
    assert format_number(value) == expected


def test_format_number_without_decimals_keeps_integer_digits():
    assert format_number(10, decimals=0) == "10"


def test_format_implication_is_one_based():
    imp = Implication(antecedent=(0, 3), consequent=21, support_rows=(2, 3, 6, 7))

    assert format_implication(1, imp) == "1; 1 4 -> 22 ; Support = 4; rows = 3, 4, 7, 8,"


def test_liver_reduction_notes_and_listing(liver):
    report = run_full(liver, RunConfig(target=22, minsup=3, pipeline=PipelineKind.FULL))

    notes = format_reduction_notes(report.reduction_log)
    assert notes == [
        "6 <=>",
        "  Note: column 6 is reduced, a column with all 1s",
        "8 <=> 7",
        "  Note: column 8 is reduced, equal to column 7",
    ]

    lines = render_implications(report).splitlines()
    assert lines[:4] == notes
    assert lines[4] == "1; 1 4 -> 22 ; Support = 4; rows = 3, 4, 7, 8,"
    assert len(lines) == 4 + 14


def test_small_space_report_has_no_listing(table1):
    report = run_small_space(table1, RunConfig(target=1, pipeline=PipelineKind.SMALL_SPACE))

    with pytest.raises(PipelineException):
        render_implications(report)


def test_tsup_csv(table1):
    report = run_full(table1, RunConfig(target=1, pipeline=PipelineKind.FULL))

    assert render_tsup_csv(report.tsup) == "column,tsup\n1,0\n2,3\n3,3\n4,1.5\n5,1.5\n6,0\n"


def test_relevance_csv():
    rows = [RelevanceRow(column=1, tsup_t=Fraction(3), tsup_not_t=Fraction(1, 2), relevance=Fraction(2))]

    assert render_relevance_csv(rows) == "column,tsup_t,tsup_not_t,relevance\n2,3,0.5,2\n"
