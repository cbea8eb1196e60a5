"""
验证运行器
在语料上批量运行命题检查、汇总报告、回放反例记录
"""
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from src.core.morphisms import automorphism_group, make_automorphism
from src.core.semigroup import FiniteSemigroup
from src.enumeration.corpus import Corpus, load_or_build
from src.utils.config import CorpusFilter, StatementKind
from src.utils.logger import setup_logger
from src.verify.base_check import BaseCheck, ClauseResult, SemigroupContext
from src.verify.check_factory import CheckFactory
from src.verify.gallery import GALLERY_STATEMENT, recheck_gallery
from src.verify.report import CounterexampleRecord, ReportBuilder, TheoremReport

logger = setup_logger("verify.runner")

PairResults = List[Tuple[Tuple[int, ...], List[ClauseResult]]]
EntryOutcome = Tuple[bool, List[Optional[PairResults]]]
ProgressCallback = Callable[[int, int], None]


def _evaluate_entry(statement_ids: Sequence[str], order: int, cells: Sequence[int]) -> EntryOutcome:
    """工作进程入口：对一个半群的全部自同构运行所选检查"""
    rows = tuple(tuple(cells[i * order:(i + 1) * order]) for i in range(order))
    S = FiniteSemigroup(order, rows)
    ctx = SemigroupContext(S)
    automorphisms = automorphism_group(S)
    per_statement: List[Optional[PairResults]] = []
    for sid in statement_ids:
        check = CheckFactory.get_check(sid)
        if not check.applies_to(ctx):
            per_statement.append(None)
            continue
        per_statement.append([(alpha.images, check.check_pair(ctx, alpha)) for alpha in automorphisms])
    return ctx.is_commutative, per_statement


def run_on_corpus(checks: Sequence[BaseCheck], corpus: Corpus, workers: int = 1,
                  progress: Optional[ProgressCallback] = None) -> List[TheoremReport]:
    """结果按语料顺序合并，与工作进程数无关"""
    ids = [check.statement_id for check in checks]
    builders = [ReportBuilder(check.config) for check in checks]
    entries = corpus.entries
    total = len(entries)
    logger.info(f"Running {', '.join(ids)} over {total} semigroups ({corpus.corpus_filter.value})")

    orders = [entry.order for entry in entries]
    cells = [entry.cells for entry in entries]
    if workers > 1 and total > 1:
        pool = ProcessPoolExecutor(max_workers=workers)
        outcomes = pool.map(_evaluate_entry, [ids] * total, orders, cells,
                            chunksize=max(1, total // (workers * 4)))
    else:
        pool = None
        outcomes = map(_evaluate_entry, [ids] * total, orders, cells)

    try:
        for done, (entry, (commutative, per_statement)) in enumerate(zip(entries, outcomes), start=1):
            S = entry.to_semigroup()
            for builder, pairs in zip(builders, per_statement):
                if pairs is None:
                    continue
                instance = builder.add_semigroup()
                for images, results in pairs:
                    builder.add_images(S, list(images), results, commutative, instance)
                    for result in results:
                        if result.is_violation:
                            logger.warning(
                                f"{builder.config.statement_id}: clause {result.clause} fails on "
                                f"order-{S.order} semigroup {entry.digest[:12]} with α = "
                                + " ".join(str(v + 1) for v in images)
                            )
            if progress is not None:
                progress(done, total)
    finally:
        if pool is not None:
            pool.shutdown()

    reports = [builder.build() for builder in builders]
    for report in reports:
        logger.info(
            f"{report.statement}: {report.checked} pairs, {report.satisfied_hypotheses} satisfying, "
            f"{report.skipped} skipped, {len(report.violations)} violations"
        )
    return reports


def run_statement_on_corpus(statement_id: str, corpus: Corpus, workers: int = 1) -> TheoremReport:
    return run_on_corpus([CheckFactory.get_check(statement_id)], corpus, workers)[0]


def run_conjecture32(corpus: Corpus, workers: int = 1) -> TheoremReport:
    return run_statement_on_corpus("conj32", corpus, workers)


def run_conjecture33(corpus: Corpus, workers: int = 1) -> TheoremReport:
    return run_statement_on_corpus("conj33", corpus, workers)


def run_problem_cancellative(corpus: Corpus, workers: int = 1) -> TheoremReport:
    return run_statement_on_corpus("problem-cancellative", corpus, workers)


def run_statements(names: Sequence[str], max_order: int, corpus_filter: Optional[CorpusFilter] = None,
                   workers: int = 1, force_large: bool = False, corpus_path: Optional[str] = None,
                   progress: Optional[ProgressCallback] = None) -> List[TheoremReport]:
    """展开别名，按语料过滤器分组运行，报告顺序与展开后的命题顺序一致"""
    checks = CheckFactory.resolve(list(names))
    grouped: Dict[Optional[CorpusFilter], List[BaseCheck]] = {}
    for check in checks:
        key = None if corpus_path else (corpus_filter or check.corpus_filter)
        grouped.setdefault(key, []).append(check)

    reports: Dict[str, TheoremReport] = {}
    for key, members in grouped.items():
        corpus = load_or_build(max_order, key or CorpusFilter.ALL, workers, force_large, corpus_path)
        for report in run_on_corpus(members, corpus, workers, progress):
            reports[report.statement] = report
    return [reports[check.statement_id] for check in checks]


def has_theorem_violation(reports: Sequence[TheoremReport]) -> bool:
    """定理与问题类违例视为实现错误"""
    failing_kinds = {StatementKind.THEOREM.value, StatementKind.PROBLEM.value, StatementKind.GALLERY.value}
    return any(r.violations for r in reports if r.kind in failing_kinds)


def conjecture_counterexamples(reports: Sequence[TheoremReport]) -> List[CounterexampleRecord]:
    return [
        record
        for report in reports if report.kind == StatementKind.CONJECTURE.value
        for record in report.violations
    ]


@dataclass
class ReplayOutcome:
    """回放结果"""
    reproduced: bool
    results: List[ClauseResult]


def replay_record(record: CounterexampleRecord) -> ReplayOutcome:
    """在记录的 (S, α) 上重新运行同名检查"""
    n = len(record.table)
    S = FiniteSemigroup(n, tuple(tuple(v - 1 for v in row) for row in record.table))
    alpha = make_automorphism(S, [v - 1 for v in record.alpha])
    if record.statement == GALLERY_STATEMENT:
        results = recheck_gallery(S)
    else:
        results = CheckFactory.get_check(record.statement).check(S, alpha)
    reproduced = any(
        r.is_violation and r.clause == record.clause and [w + 1 for w in r.witnesses] == record.witnesses
        for r in results
    )
    logger.info(f"Replay {record.statement}/{record.clause}: reproduced={reproduced}")
    return ReplayOutcome(reproduced, results)
