"""
命令实现
与终端渲染无关的命令函数：读取输入、调用各模块、写出结果文件
"""
import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

from src.core.divisibility import analyze_squaring
from src.core.morphisms import automorphism_group, is_idempotent_fixing, psi_map
from src.core.nilpotence import is_group, is_nilpotent_clifford, nilpotency_class
from src.core.semigroup import (
    FiniteSemigroup,
    idempotents,
    index_and_period,
    inversion_map,
    is_band,
    is_cancellative,
    is_commutative,
    is_inverse_semigroup,
    is_left_cancellative,
    is_regular,
    is_right_cancellative,
    natural_partial_order,
)
from src.core.structure import (
    clifford_decomposition,
    green_relations,
    is_clifford,
    is_completely_regular,
)
from src.enumeration.corpus import Corpus, enumerate_semigroups
from src.formats.corpus_format import write_corpus
from src.formats.table_format import read_table_file, write_table_file
from src.utils.config import RunConfig, check_order_cap, config_manager
from src.utils.env_config import env_config
from src.utils.exceptions import NotInverseOrCompletelyRegularError, UnknownStatementError
from src.utils.logger import setup_logger
from src.verify.check_factory import CheckFactory
from src.verify.gallery import gallery_band_B4, gallery_checks
from src.verify.report import CounterexampleRecord, TheoremReport
from src.verify.runner import (
    ProgressCallback,
    ReplayOutcome,
    conjecture_counterexamples,
    has_theorem_violation,
    replay_record,
    run_statements,
)

logger = setup_logger("cli.commands")

EXIT_OK = 0
EXIT_THEOREM_VIOLATION = 1
EXIT_ERROR = 2


def output_dir(out: Optional[str]) -> Path:
    path = Path(out or env_config.output_dir)
    path.mkdir(parents=True, exist_ok=True)
    return path


def _write_json(path: Path, payload: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(payload + "\n", encoding="utf-8")


def _element_row(S: FiniteSemigroup, x: int) -> Dict[str, Any]:
    index, period = index_and_period(S, x)
    return {"label": S.label(x), "idempotent": S.table[x][x] == x, "index": index, "period": period}


def property_report(S: FiniteSemigroup) -> Dict[str, Any]:
    """半群性质报告（元素以 1 基标签表示）"""
    label = S.label
    green = green_relations(S)
    inverse = is_inverse_semigroup(S)
    clifford = is_clifford(S)
    group = is_group(S)
    squaring = analyze_squaring(S)

    report: Dict[str, Any] = {
        "order": S.order,
        "associative": True,
        "commutative": is_commutative(S),
        "band": is_band(S),
        "regular": is_regular(S),
        "inverse": inverse,
        "completely_regular": is_completely_regular(S, green),
        "clifford": clifford,
        "group": group,
        "cancellative": is_cancellative(S),
        "left_cancellative": is_left_cancellative(S),
        "right_cancellative": is_right_cancellative(S),
        "idempotents": [label(e) for e in sorted(idempotents(S))],
        "green_class_sizes": green.sizes(),
        "elements": [_element_row(S, x) for x in S.elements],
        "uniquely_2_divisible": squaring.bijective,
        "squares": [label(v) for v in squaring.squares.images],
        "square_roots": [label(v) for v in squaring.roots.images] if squaring.roots else None,
    }

    try:
        report["inverses"] = [label(v) for v in inversion_map(S).images]
    except NotInverseOrCompletelyRegularError:
        report["inverses"] = None

    if inverse:
        order = natural_partial_order(S)
        report["natural_order"] = sorted(
            [label(b), label(a)] for b, a in order.pairs if b != a
        )
    if clifford:
        report["clifford_decomposition"] = clifford_decomposition(S).to_dict()
        report["nilpotent"] = is_nilpotent_clifford(S)
    if group:
        report["nilpotency_class"] = nilpotency_class(S)
    return report


def cmd_check(table_file: str) -> Dict[str, Any]:
    S = read_table_file(table_file)
    logger.info(f"Checking {table_file} (order {S.order})")
    return property_report(S)


def automorphism_rows(S: FiniteSemigroup, workers: int = 1) -> List[Dict[str, Any]]:
    try:
        inverse = inversion_map(S)
    except NotInverseOrCompletelyRegularError:
        inverse = None
    rows = []
    for alpha in automorphism_group(S, workers=workers):
        rows.append({
            "images": [S.label(v) for v in alpha.images],
            "order": alpha.order,
            "fixed": len(alpha.fixed),
            "idempotent_fixing": is_idempotent_fixing(S, alpha),
            "psi_injective": psi_map(S, alpha, inverse).is_injective() if inverse else None,
        })
    return rows


def cmd_aut(table_file: str, workers: int = 1) -> List[Dict[str, Any]]:
    return automorphism_rows(read_table_file(table_file), workers)


@dataclass
class VerifyOutcome:
    """verify 命令的结果"""
    reports: List[TheoremReport]
    exit_code: int
    report_paths: List[Path] = field(default_factory=list)
    replay_paths: List[Path] = field(default_factory=list)
    counterexamples: List[CounterexampleRecord] = field(default_factory=list)


def cmd_verify(statements: Sequence[str], run_config: RunConfig,
               corpus_path: Optional[str] = None,
               progress: Optional[ProgressCallback] = None) -> VerifyOutcome:
    expanded = config_manager.expand_aliases(list(statements))
    unknown = [s for s in expanded if config_manager.get_statement_config(s) is None]
    if unknown:
        raise UnknownStatementError(
            f"Unknown statement(s): {', '.join(unknown)}; "
            f"known: {', '.join(CheckFactory.get_supported_statements())}"
        )

    if corpus_path is None:
        filters = {run_config.corpus_filter or config_manager.get_statement_config(s).corpus_filter
                   for s in expanded}
        for corpus_filter in sorted(filters, key=lambda f: f.value):
            if check_order_cap(run_config.max_order, corpus_filter, run_config.force_large):
                run_config.overridden_caps = True
                logger.warning(
                    f"Order cap for filter '{corpus_filter.value}' overridden: max order {run_config.max_order}"
                )

    reports = run_statements(expanded, run_config.max_order, run_config.corpus_filter,
                             run_config.workers, run_config.force_large, corpus_path, progress)

    out = output_dir(run_config.output_path)
    report_paths = []
    for report in reports:
        path = out / f"report-{report.statement}.json"
        _write_json(path, report.to_json())
        report_paths.append(path)

    counterexamples = conjecture_counterexamples(reports)
    replay_paths = []
    for index, record in enumerate(counterexamples, start=1):
        path = out / f"counterexample-{record.statement}-{index}.json"
        _write_json(path, record.model_dump_json(indent=2))
        replay_paths.append(path)
        logger.warning(f"COUNTEREXAMPLE candidate for {record.statement} written to {path}")

    exit_code = EXIT_THEOREM_VIOLATION if has_theorem_violation(reports) else EXIT_OK
    return VerifyOutcome(reports, exit_code, report_paths, replay_paths, counterexamples)


@dataclass
class GalleryOutcome:
    report: TheoremReport
    table_path: Path
    report_path: Path


def cmd_gallery(out: Optional[str] = None) -> GalleryOutcome:
    directory = output_dir(out)
    S, _ = gallery_band_B4()
    table_path = directory / "band_b4.txt"
    write_table_file(str(table_path), S, include_labels=False)
    report = gallery_checks()
    report_path = directory / "report-gallery.json"
    _write_json(report_path, report.to_json())
    return GalleryOutcome(report, table_path, report_path)


def cmd_enumerate(run_config: RunConfig) -> Corpus:
    corpus = enumerate_semigroups(run_config.max_order, run_config.corpus_filter,
                                  run_config.workers, run_config.force_large)
    if run_config.output_path:
        target = Path(run_config.output_path)
    else:
        target = output_dir(None) / f"corpus-{run_config.corpus_filter.value}-{run_config.max_order}.txt"
    write_corpus(str(target), corpus)
    corpus.provenance["path"] = str(target)
    return corpus


def cmd_replay(record_file: str) -> ReplayOutcome:
    record = CounterexampleRecord.model_validate(json.loads(Path(record_file).read_text(encoding="utf-8")))
    return replay_record(record)
