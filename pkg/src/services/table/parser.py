import logging
import re
from pathlib import Path
from typing import List, Optional, TextIO, Union

from src.exceptions import TableParsingError
from src.schemas.table.models import BinaryTable

logger = logging.getLogger(__name__)

TOKEN_SEPARATOR = re.compile(r"[,\s]+")


def _tokenize(line: str) -> List[str]:
    return [token for token in TOKEN_SEPARATOR.split(line) if token]


def parse_table(source: Union[str, TextIO]) -> BinaryTable:
    """Parse a 0/1 table.

    Blank lines are ignored. Lines starting with ``#`` are comments, except that
    the first one, if it precedes every data row, names the attributes. Tokens
    are separated by whitespace and/or commas.

    :param source: Table text or an open text stream
    :returns: Parsed table with rows in file order
    :raises TableParsingError: On a non-binary token, ragged rows or empty input
    """
    text = source if isinstance(source, str) else source.read()

    names: Optional[List[str]] = None
    header_line: Optional[int] = None
    rows: List[int] = []
    n_cols: Optional[int] = None

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            if names is None and not rows and header_line is None:
                header_line = line_no
                names = _tokenize(line[1:]) or None
            continue

        tokens = _tokenize(line)
        row = 0
        for position, token in enumerate(tokens, start=1):
            if token == "1":
                row |= 1 << (position - 1)
            elif token != "0":
                raise TableParsingError(f"non-binary token {token!r}", line=line_no, token=position)

        if n_cols is None:
            n_cols = len(tokens)
        elif len(tokens) != n_cols:
            raise TableParsingError(f"ragged row: expected {n_cols} tokens, got {len(tokens)}", line=line_no)
        rows.append(row)

    if not rows or n_cols is None:
        raise TableParsingError("empty input: no data rows")
    if n_cols < 2:
        raise TableParsingError("a table needs a target and at least one other attribute", line=None)
    if names is not None and len(names) != n_cols:
        raise TableParsingError(f"header names {len(names)} attributes but rows have {n_cols}", line=header_line)

    table = BinaryTable.from_rows(rows, n_cols, names)
    logger.debug(f"Parsed table with {table.n_rows} rows and {table.n_cols} columns")
    return table


def load_table(path: Union[str, Path]) -> BinaryTable:
    """Read and parse a table file.

    :raises OSError: When the file cannot be read
    :raises TableParsingError: When the file is not UTF-8 text or not a valid table
    """
    path = Path(path)
    try:
        with path.open("r", encoding="utf-8") as handle:
            table = parse_table(handle)
    except UnicodeDecodeError as e:
        raise TableParsingError(f"{path.name} is not UTF-8 text: {e.reason} at byte {e.start}")
    logger.info(f"Loaded {path.name}: {table.n_rows} rows x {table.n_cols} columns")
    return table
