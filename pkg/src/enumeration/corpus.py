"""
语料库
按过滤器构建去重的规范表集合，并产生 (S, α) 配对流
"""
import time
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Iterator, List, Optional, Set, Tuple

from src.core.group_library import small_groups
from src.core.morphisms import Automorphism, automorphism_group
from src.core.nilpotence import is_group
from src.core.semigroup import FiniteSemigroup, is_band, is_cancellative, is_inverse_semigroup
from src.core.structure import is_clifford, is_completely_regular
from src.enumeration.canonical import CanonicalTable, canonical_form
from src.enumeration.generator import GeneratorOptions, generate_order, naive_classes
from src.utils.config import CorpusFilter, check_order_cap
from src.utils.logger import setup_logger

logger = setup_logger("enumeration.corpus")

GENERATOR_VERSION = "orderly-1"

# 群过滤器在该阶以上改用群库
ORDERLY_GROUP_LIMIT = 5

FILTER_PREDICATES: Dict[CorpusFilter, Callable[[FiniteSemigroup], bool]] = {
    CorpusFilter.ALL: lambda S: True,
    CorpusFilter.INVERSE: is_inverse_semigroup,
    CorpusFilter.COMPLETELY_REGULAR: is_completely_regular,
    CorpusFilter.CLIFFORD: is_clifford,
    CorpusFilter.BAND: is_band,
    CorpusFilter.GROUP: is_group,
    CorpusFilter.CANCELLATIVE: is_cancellative,
}

_FILTER_OPTIONS: Dict[CorpusFilter, GeneratorOptions] = {
    CorpusFilter.GROUP: GeneratorOptions(latin=True),
    CorpusFilter.CANCELLATIVE: GeneratorOptions(latin=True),
    CorpusFilter.BAND: GeneratorOptions(idempotent=True),
}


@dataclass
class Corpus:
    """去重、规范编号的半群表集合"""
    max_order: int
    corpus_filter: CorpusFilter
    entries: List[CanonicalTable]
    provenance: Dict[str, Any] = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.entries)

    def semigroups(self) -> List[FiniteSemigroup]:
        return [entry.to_semigroup() for entry in self.entries]

    def counts_by_order(self) -> Dict[int, int]:
        counts = {n: 0 for n in range(1, self.max_order + 1)}
        for entry in self.entries:
            counts[entry.order] = counts.get(entry.order, 0) + 1
        return counts

    def duplicate_digests(self) -> List[str]:
        seen: Set[str] = set()
        duplicates = []
        for entry in self.entries:
            if entry.digest in seen:
                duplicates.append(entry.digest)
            seen.add(entry.digest)
        return duplicates


def _order_entries(n: int, corpus_filter: CorpusFilter, workers: int) -> List[CanonicalTable]:
    if corpus_filter == CorpusFilter.GROUP and n > ORDERLY_GROUP_LIMIT:
        entries = [canonical_form(g.semigroup) for g in small_groups(n)]
        # 规范表去掉编号信息，与生成器输出一致
        return sorted((CanonicalTable.from_cells(e.order, e.cells) for e in entries),
                      key=lambda e: e.cells)
    options = _FILTER_OPTIONS.get(corpus_filter, GeneratorOptions())
    predicate = FILTER_PREDICATES[corpus_filter]
    return [t for t in generate_order(n, options, workers) if predicate(t.to_semigroup())]


def enumerate_semigroups(max_order: int, corpus_filter: CorpusFilter = CorpusFilter.ALL,
                         workers: int = 1, force_large: bool = False) -> Corpus:
    """阶数 1..max_order 的完整语料（同构意义下无重复）"""
    if check_order_cap(max_order, corpus_filter, force_large):
        logger.warning(f"Order cap overridden: max_order={max_order}, filter={corpus_filter.value}")
    started = time.time()
    entries: List[CanonicalTable] = []
    for n in range(1, max_order + 1):
        found = _order_entries(n, corpus_filter, workers)
        logger.info(f"Filter {corpus_filter.value}, order {n}: {len(found)} semigroups")
        entries.extend(found)
    provenance = {
        "generator": GENERATOR_VERSION,
        "started_at": started,
        "elapsed_seconds": round(time.time() - started, 3),
        "workers": workers,
    }
    return Corpus(max_order, corpus_filter, entries, provenance)


def naive_corpus(max_order: int, corpus_filter: CorpusFilter = CorpusFilter.ALL) -> Set[CanonicalTable]:
    """独立参照语料（不经过有序生成器）"""
    predicate = FILTER_PREDICATES[corpus_filter]
    result: Set[CanonicalTable] = set()
    for n in range(1, max_order + 1):
        for entry in naive_classes(n):
            if predicate(entry.to_semigroup()):
                result.add(CanonicalTable.from_cells(entry.order, entry.cells))
    return result


def corpus_from_semigroups(semigroups: List[FiniteSemigroup],
                           corpus_filter: CorpusFilter = CorpusFilter.ALL) -> Corpus:
    """由任意半群列表组装语料：规范化、过滤并去重"""
    predicate = FILTER_PREDICATES[corpus_filter]
    seen: Set[str] = set()
    entries: List[CanonicalTable] = []
    for S in semigroups:
        if not predicate(S):
            continue
        canon = canonical_form(S)
        if canon.digest in seen:
            continue
        seen.add(canon.digest)
        entries.append(CanonicalTable.from_cells(canon.order, canon.cells))
    entries.sort(key=lambda e: (e.order, e.cells))
    max_order = max((e.order for e in entries), default=0)
    return Corpus(max_order, corpus_filter, entries, {"generator": "explicit"})


def corpus_pairs(corpus: Corpus, workers: int = 1) -> Iterator[Tuple[FiniteSemigroup, Automorphism]]:
    """按语料顺序产生每个 (S, α)，恒等自同构在前"""
    for S in corpus.semigroups():
        for alpha in automorphism_group(S, workers=workers):
            yield S, alpha


def count_pairs(corpus: Corpus) -> int:
    return sum(len(automorphism_group(S)) for S in corpus.semigroups())


def load_or_build(max_order: int, corpus_filter: CorpusFilter, workers: int = 1,
                  force_large: bool = False, path: Optional[str] = None) -> Corpus:
    """给定路径时读取语料文件，否则现场生成"""
    if path is not None:
        from src.formats.corpus_format import read_corpus
        corpus = read_corpus(path)
        logger.info(f"Loaded corpus {path}: {len(corpus)} entries")
        return corpus
    return enumerate_semigroups(max_order, corpus_filter, workers, force_large)
