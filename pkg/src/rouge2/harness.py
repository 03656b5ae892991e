"""Batch evaluation: pair system summaries with references, score, report.

Directory layout::

    systems/<task>_<system>.txt   (and/or .tag)
    references/<task>.<k>.txt     (and/or .tag), k = 1, 2, ...

``.txt`` files are plain text, ``.tag`` files hold ``word_TAG`` tokens with
one sentence per line. When both exist, n-gram measures read the ``.txt``
and topic measures read the ``.tag``.
"""

from __future__ import annotations

import csv
import io
import logging
import math
import re
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Iterable, Sequence

from rouge2.errors import ConfigError, LoadError, ParseError
from rouge2.ngrams import RougeScore, f_score, score_rouge_n
from rouge2.options import ScoreOptions
from rouge2.text import TokenizedText, tokenize
from rouge2.topics import TaggedText, filter_topics, load_tagged, score_rouge_topic, score_rouge_topic_uniq

__all__ = [
    "Summary",
    "EvaluationTask",
    "Corpus",
    "Report",
    "ReportRow",
    "DetailRow",
    "MissingTagsError",
    "scan_corpus",
    "discover_pairs",
    "aggregate",
    "score_pair",
    "evaluate",
    "render_report",
    "write_report",
    "CSV_COLUMNS",
]

log = logging.getLogger(__name__)

Tagger = Callable[[TokenizedText], TaggedText]

CSV_COLUMNS = (
    "task",
    "system",
    "measure",
    "settings",
    "references",
    "aggregation",
    "recall",
    "precision",
    "f_score",
    "recall_full",
    "precision_full",
    "f_score_full",
)
AGGREGATION_MODES = ("mean", "max")

_REFERENCE_NAME = re.compile(r"^(?P<task>.+)\.(?P<k>[1-9]\d*)\.(?P<ext>txt|tag)$")
_SYSTEM_NAME = re.compile(r"^(?P<stem>[^_].*_.+)\.(?P<ext>txt|tag)$")


class MissingTagsError(Exception):
    """A topic measure met a summary with no tags and no tagger to make them."""


@dataclass(frozen=True)
class Summary:
    """One summary in its plain and/or tagged form."""

    text: TokenizedText | None = None
    tagged: TaggedText | None = None
    name: str = ""

    def __post_init__(self):
        if self.text is None and self.tagged is None:
            raise ValueError("a summary needs plain text, tagged text, or both")

    @classmethod
    def of(cls, value: Summary | TokenizedText | str, name: str = "") -> Summary:
        if isinstance(value, Summary):
            return value
        if isinstance(value, str):
            return cls(text=tokenize(value), name=name)
        if isinstance(value, TaggedText):
            return cls(tagged=value, name=name)
        return cls(text=value, name=name)

    def plain(self) -> TokenizedText:
        return self.text if self.text is not None else self.tagged

    def for_topics(self, tagger: Tagger | None = None) -> TaggedText:
        if self.tagged is not None:
            return self.tagged
        if tagger is None:
            raise MissingTagsError(f"{self.name or 'summary'} has no POS tags and no tagger is configured")
        return tagger(self.text)


@dataclass(frozen=True)
class EvaluationTask:
    task_id: str
    system_id: str
    system: Summary
    references: tuple[Summary, ...]

    def __post_init__(self):
        object.__setattr__(self, "system", Summary.of(self.system, f"{self.task_id}_{self.system_id}"))
        refs = tuple(
            Summary.of(r, f"{self.task_id}.{k}") for k, r in enumerate(self.references, start=1)
        )
        if not refs:
            raise ValueError(f"task {self.task_id!r} has no reference summaries")
        object.__setattr__(self, "references", refs)


@dataclass
class Corpus:
    tasks: list[EvaluationTask] = field(default_factory=list)
    skipped: list[str] = field(default_factory=list)


@dataclass(frozen=True)
class ReportRow:
    task_id: str
    system_id: str
    measure: str
    settings: str
    references: int
    aggregation: str
    score: RougeScore


@dataclass(frozen=True)
class DetailRow:
    task_id: str
    system_id: str
    measure: str
    settings: str
    reference: int
    score: RougeScore


@dataclass
class Report:
    rows: list[ReportRow] = field(default_factory=list)
    details: list[DetailRow] = field(default_factory=list)
    errors: list[str] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)

    @property
    def has_problems(self) -> bool:
        return bool(self.errors or self.warnings)


def _load_summary(txt: Path | None, tag: Path | None, name: str) -> Summary:
    text = tokenize(txt.read_text(encoding="utf-8")) if txt is not None else None
    tagged = load_tagged(tag) if tag is not None else None
    return Summary(text, tagged, name)


def _listing(directory: Path) -> list[Path]:
    if not directory.is_dir():
        raise ConfigError(f"not a directory: {directory}")
    return sorted(p for p in directory.iterdir() if p.is_file() and not p.name.startswith("."))


def scan_corpus(systems_dir: str | Path, references_dir: str | Path) -> Corpus:
    """Pair every system summary with its references.

    System files without any reference are reported in ``Corpus.skipped``.
    Raises :class:`ConfigError` for missing directories or file names that
    follow neither naming pattern.
    """
    systems_dir, references_dir = Path(systems_dir), Path(references_dir)
    system_files = _listing(systems_dir)
    reference_files = _listing(references_dir)

    offenders = []
    refs: dict[str, dict[int, dict[str, Path]]] = {}
    for path in reference_files:
        m = _REFERENCE_NAME.match(path.name)
        if not m:
            offenders.append(str(path))
            continue
        refs.setdefault(m["task"], {}).setdefault(int(m["k"]), {})[m["ext"]] = path

    systems: dict[tuple[str, str], dict[str, Path]] = {}
    for path in system_files:
        m = _SYSTEM_NAME.match(path.name)
        if not m:
            offenders.append(str(path))
            continue
        stem = m["stem"]
        # task ids may contain underscores: prefer the longest known task
        cuts = [i for i, ch in enumerate(stem) if ch == "_" and 0 < i < len(stem) - 1]
        known = [i for i in cuts if stem[:i] in refs]
        cut = max(known) if known else cuts[0]
        systems.setdefault((stem[:cut], stem[cut + 1 :]), {})[m["ext"]] = path
    if offenders:
        raise ConfigError("unparseable summary file name(s): " + ", ".join(offenders))

    corpus = Corpus()
    for (task_id, system_id), files in sorted(systems.items()):
        if task_id not in refs:
            corpus.skipped.append(f"{task_id}_{system_id}: no reference summaries for task {task_id!r}")
            continue
        try:
            system = _load_summary(files.get("txt"), files.get("tag"), f"{task_id}_{system_id}")
            references = tuple(
                _load_summary(r.get("txt"), r.get("tag"), f"{task_id}.{k}")
                for k, r in sorted(refs[task_id].items())
            )
        except (ParseError, LoadError, OSError, UnicodeDecodeError) as exc:
            corpus.skipped.append(f"{task_id}_{system_id}: {exc}")
            continue
        corpus.tasks.append(EvaluationTask(task_id, system_id, system, references))
    for message in corpus.skipped:
        log.warning("skipped %s", message)
    return corpus


def discover_pairs(systems_dir: str | Path, references_dir: str | Path) -> list[EvaluationTask]:
    """Tasks sorted by task id then system id; see :func:`scan_corpus`."""
    return scan_corpus(systems_dir, references_dir).tasks


def aggregate(scores: Sequence[RougeScore], mode: str = "mean") -> RougeScore:
    """Combine one system's scores against several references.

    ``mean`` averages recall and precision separately and recomputes F from
    the averages; the count fields become per-reference means. ``max``
    returns the input score with the highest F (then recall, then the
    earliest reference).
    """
    if not scores:
        raise ValueError("cannot aggregate an empty list of scores")
    if mode == "max":
        return max(enumerate(scores), key=lambda p: (p[1].f_score, p[1].recall, -p[0]))[1]
    if mode != "mean":
        raise ValueError(f"unknown aggregation mode {mode!r}")
    if len(scores) == 1:
        return scores[0]
    recall = _mean([s.recall for s in scores])
    precision = _mean([s.precision for s in scores])
    return RougeScore(
        recall,
        precision,
        f_score(precision, recall),
        _mean([s.overlap for s in scores]),
        _mean([s.ref_size for s in scores]),
        _mean([s.sys_size for s in scores]),
    )


def _mean(values: list[float]) -> float:
    # offset form keeps the mean of equal values exactly equal to them
    first = values[0]
    return first + math.fsum(v - first for v in values) / len(values)


def score_pair(ref, sys, opts: ScoreOptions, tagger: Tagger | None = None) -> RougeScore:
    """Score one system summary against one reference under ``opts``."""
    ref, sys = Summary.of(ref), Summary.of(sys)
    if not opts.is_topic:
        return score_rouge_n(ref.plain(), sys.plain(), opts.n, opts)
    ref_topics = filter_topics(ref.for_topics(tagger), opts.topic_filter)
    sys_topics = filter_topics(sys.for_topics(tagger), opts.topic_filter)
    scorer = score_rouge_topic if opts.measure == "rouge_topic" else score_rouge_topic_uniq
    return scorer(ref_topics, sys_topics, opts)


def _evaluate_task(task: EvaluationTask, configs: Sequence[ScoreOptions], mode: str, tagger: Tagger | None):
    rows, details, errors = [], [], []
    for opts in configs:
        try:
            per_ref = [score_pair(ref, task.system, opts, tagger) for ref in task.references]
        except MissingTagsError as exc:
            errors.append(f"{task.task_id}_{task.system_id} [{opts.label}]: {exc}")
            continue
        measure, settings = opts.measure_label, opts.settings_label
        rows.append(
            ReportRow(task.task_id, task.system_id, measure, settings, len(per_ref), mode, aggregate(per_ref, mode))
        )
        details.extend(
            DetailRow(task.task_id, task.system_id, measure, settings, k, s) for k, s in enumerate(per_ref, start=1)
        )
    return rows, details, errors


def evaluate(
    tasks: Iterable[EvaluationTask],
    configs: Sequence[ScoreOptions],
    mode: str = "mean",
    tagger: Tagger | None = None,
    workers: int = 1,
    skipped: Iterable[str] = (),
) -> Report:
    """Score every task under every configuration.

    Rows come out in task order, then configuration order, regardless of
    ``workers``. A task that cannot be scored for a topic measure (no tags,
    no tagger) is listed in ``Report.errors`` instead of producing a row.
    """
    if not configs:
        raise ValueError("at least one measure configuration is required")
    if mode not in AGGREGATION_MODES:
        raise ValueError(f"unknown aggregation mode {mode!r}")
    tasks = list(tasks)
    report = Report(warnings=list(skipped))

    def job(task):
        return _evaluate_task(task, configs, mode, tagger)

    if workers > 1 and len(tasks) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(job, tasks))
    else:
        results = [job(t) for t in tasks]
    for rows, details, errors in results:
        report.rows.extend(rows)
        report.details.extend(details)
        report.errors.extend(errors)
    return report


def _full(x: float) -> str:
    return repr(float(x))


def render_report(report: Report) -> str:
    """The report as CSV text (LF line endings, header always present)."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for row in report.rows:
        s = row.score
        writer.writerow(
            [
                row.task_id,
                row.system_id,
                row.measure,
                row.settings,
                row.references,
                row.aggregation,
                f"{s.recall:.3f}",
                f"{s.precision:.3f}",
                f"{s.f_score:.3f}",
                _full(s.recall),
                _full(s.precision),
                _full(s.f_score),
            ]
        )
    return buf.getvalue()


def write_report(report: Report, path: str | Path) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(render_report(report))
