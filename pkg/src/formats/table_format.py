"""
表格文本格式
第 1 行为阶数 n，随后 n 行 1 基乘积；可选 `labels:` 行；`#` 开头为注释
"""
from pathlib import Path
from typing import List, Optional, Sequence, Tuple

from src.core.morphisms import Automorphism, make_automorphism
from src.core.semigroup import FiniteSemigroup
from src.utils.exceptions import TableParseError
from src.utils.logger import setup_logger

logger = setup_logger("formats.table")

LABELS_PREFIX = "labels:"


def _significant_lines(text: str, first_line: int = 1) -> List[Tuple[int, str]]:
    lines = []
    for offset, raw in enumerate(text.splitlines()):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        lines.append((first_line + offset, stripped))
    return lines


def _parse_int(token: str, line: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise TableParseError(f"expected an integer, got '{token}'", line) from None


def parse_table(text: str, first_line: int = 1) -> FiniteSemigroup:
    """解析一张表；first_line 为 text 第一行在原文件中的行号"""
    lines = _significant_lines(text, first_line)
    if not lines:
        raise TableParseError("empty table", first_line)

    size_line, size_text = lines[0]
    n = _parse_int(size_text, size_line)
    if n < 1:
        raise TableParseError(f"order must be positive, got {n}", size_line)

    rows: List[List[int]] = []
    labels: Optional[Sequence[str]] = None
    for line_no, content in lines[1:]:
        if content.lower().startswith(LABELS_PREFIX):
            labels = content[len(LABELS_PREFIX):].split()
            if len(labels) != n:
                raise TableParseError(f"expected {n} labels, got {len(labels)}", line_no)
            continue
        if len(rows) == n:
            raise TableParseError(f"unexpected content after {n} rows", line_no)
        tokens = content.split()
        if len(tokens) != n:
            raise TableParseError(f"row has {len(tokens)} entries, expected {n}", line_no)
        row = []
        for token in tokens:
            value = _parse_int(token, line_no)
            if not 1 <= value <= n:
                raise TableParseError(f"entry {value} is outside 1..{n}", line_no)
            row.append(value - 1)
        rows.append(row)

    if len(rows) != n:
        last_line = lines[-1][0]
        raise TableParseError(f"expected {n} rows, got {len(rows)}", last_line)

    return FiniteSemigroup(n, tuple(tuple(r) for r in rows),
                           tuple(labels) if labels is not None else None)


def format_table(S: FiniteSemigroup, include_labels: bool = True) -> str:
    lines = [str(S.order)]
    for row in S.table:
        lines.append(" ".join(str(v + 1) for v in row))
    if include_labels and S.labels is not None:
        lines.append(f"{LABELS_PREFIX} " + " ".join(S.labels))
    return "\n".join(lines) + "\n"


def read_table_file(path: str) -> FiniteSemigroup:
    text = Path(path).read_text(encoding="utf-8")
    logger.debug(f"Parsing table file {path}")
    return parse_table(text)


def write_table_file(path: str, S: FiniteSemigroup, include_labels: bool = True) -> None:
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    target.write_text(format_table(S, include_labels), encoding="utf-8")


def parse_automorphism(S: FiniteSemigroup, line: str) -> Automorphism:
    """一行 1 基像"""
    images = []
    for token in line.split():
        value = _parse_int(token, 1)
        if not 1 <= value <= S.order:
            raise TableParseError(f"image {value} is outside 1..{S.order}", 1)
        images.append(value - 1)
    if len(images) != S.order:
        raise TableParseError(f"expected {S.order} images, got {len(images)}", 1)
    return make_automorphism(S, images)


def format_automorphism(alpha: Automorphism) -> str:
    return alpha.to_text()


def rows_one_based(S: FiniteSemigroup) -> List[List[int]]:
    return [[v + 1 for v in row] for row in S.table]


def from_rows_one_based(rows: Sequence[Sequence[int]]) -> FiniteSemigroup:
    n = len(rows)
    return FiniteSemigroup(n, tuple(tuple(v - 1 for v in row) for row in rows))
