"""
语料文件格式
首行 `isemlab-corpus v1 <filter> <max_order>`，随后每张表一个块，块间以空行分隔
"""
from pathlib import Path
from typing import List

from src.enumeration.canonical import CanonicalTable, canonical_form
from src.enumeration.corpus import Corpus
from src.formats.table_format import format_table, parse_table
from src.utils.config import CorpusFilter
from src.utils.exceptions import TableParseError
from src.utils.logger import setup_logger

logger = setup_logger("formats.corpus")

CORPUS_MAGIC = "isemlab-corpus"
CORPUS_VERSION = "v1"


def format_corpus(corpus: Corpus) -> str:
    header = f"{CORPUS_MAGIC} {CORPUS_VERSION} {corpus.corpus_filter.value} {corpus.max_order}\n"
    blocks = [format_table(entry.to_semigroup(), include_labels=False) for entry in corpus.entries]
    if not blocks:
        return header
    return header + "\n" + "\n".join(blocks)


def parse_corpus(text: str) -> Corpus:
    lines = text.splitlines()
    if not lines:
        raise TableParseError("empty corpus file", 1)
    parts = lines[0].split()
    if len(parts) != 4 or parts[0] != CORPUS_MAGIC or parts[1] != CORPUS_VERSION:
        raise TableParseError(f"expected '{CORPUS_MAGIC} {CORPUS_VERSION} <filter> <max_order>'", 1)
    try:
        corpus_filter = CorpusFilter(parts[2])
    except ValueError:
        raise TableParseError(f"unknown corpus filter '{parts[2]}'", 1) from None
    try:
        max_order = int(parts[3])
    except ValueError:
        raise TableParseError(f"max order must be an integer, got '{parts[3]}'", 1) from None

    entries: List[CanonicalTable] = []
    block: List[str] = []
    block_start = 2

    def flush() -> None:
        if not any(line.strip() and not line.strip().startswith("#") for line in block):
            return
        S = parse_table("\n".join(block), block_start)
        entry = CanonicalTable.from_cells(S.order, [v for row in S.table for v in row])
        if canonical_form(S).cells != entry.cells:
            raise TableParseError("table is not in canonical form", block_start)
        entries.append(entry)

    for line_no, raw in enumerate(lines[1:], start=2):
        if raw.strip():
            if not block:
                block_start = line_no
            block.append(raw)
        elif block:
            flush()
            block = []
    if block:
        flush()

    digests = set()
    for entry in entries:
        if entry.digest in digests:
            raise TableParseError("corpus contains isomorphic duplicates")
        digests.add(entry.digest)
    return Corpus(max_order, corpus_filter, entries, {"generator": "file"})


def write_corpus(path: str, corpus: Corpus) -> None:
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    target.write_text(format_corpus(corpus), encoding="utf-8")
    logger.info(f"Wrote corpus with {len(corpus)} entries to {path}")


def read_corpus(path: str) -> Corpus:
    return parse_corpus(Path(path).read_text(encoding="utf-8"))
