"""Command-line entry point.

Example::

    rouge2 --systems sys/ --references ref/ --metric rouge1 \\
        --remove-stopwords --synonyms synonyms.txt --output scores.csv

Exit status: 0 on success, 1 on usage or configuration errors, 2 when the run
finished but some tasks were skipped or could not be scored.
"""

from __future__ import annotations

import argparse
import logging
import re
import sys
from dataclasses import dataclass
from pathlib import Path

from rouge2.errors import ConfigError, LoadError, ParseError
from rouge2.harness import AGGREGATION_MODES, evaluate, render_report, scan_corpus
from rouge2.options import ScoreOptions
from rouge2.synonyms import load_dictionary
from rouge2.text import load_stopwords, reference_stopwords
from rouge2.topics import DEFAULT_TAG, TopicFilter, load_lexicon, tag_with_lexicon

__all__ = ["CliConfig", "UsageError", "parse_args", "run", "main"]

EXIT_OK, EXIT_CONFIG, EXIT_PARTIAL = 0, 1, 2

_METRIC = re.compile(r"^(?:rouge(?P<n>[1-9]\d*)|rougeN:(?P<nn>[1-9]\d*)|(?P<topic>topic|topicUniq))$")


class UsageError(Exception):
    pass


@dataclass
class MetricSpec:
    measure: str
    n: int = 1


@dataclass
class CliConfig:
    systems_dir: Path
    references_dir: Path
    measures: list[MetricSpec]
    topic_filter: TopicFilter | None = None
    remove_stopwords: bool = False
    stopword_path: Path | None = None
    synonym_path: Path | None = None
    lexicon_path: Path | None = None
    default_tag: str = DEFAULT_TAG
    aggregation: str = "mean"
    output_path: Path | None = None


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)

    def exit(self, status=0, message=None):
        # only reached through --help
        if message:
            sys.stderr.write(message)
        raise SystemExit(status)


def _build_parser() -> _Parser:
    p = _Parser(prog="rouge2", description="ROUGE-N, ROUGE-Topic and ROUGE-TopicUniq scoring of summaries.")
    p.add_argument("--systems", required=True, type=Path, metavar="DIR", help="system summaries <task>_<system>.txt|.tag")
    p.add_argument("--references", required=True, type=Path, metavar="DIR", help="reference summaries <task>.<k>.txt|.tag")
    p.add_argument(
        "--metric",
        action="append",
        required=True,
        metavar="METRIC",
        help="rouge1, rouge2, rougeN:<n>, topic or topicUniq (repeatable)",
    )
    p.add_argument("--pos", metavar="LIST", help="POS options for topic metrics, e.g. NN,JJ or 'NN|JJ'")
    p.add_argument("--synonyms", type=Path, metavar="FILE", help="synonym dictionary; enables synonym matching")
    p.add_argument("--stopwords", type=Path, metavar="FILE", help="stopword list (implies --remove-stopwords)")
    p.add_argument("--remove-stopwords", action="store_true", help="drop stopwords (bundled list unless --stopwords)")
    p.add_argument("--lexicon", type=Path, metavar="FILE", help="word<TAB>TAG lexicon for summaries without .tag files")
    p.add_argument("--default-tag", default=None, metavar="TAG", help=f"tag for words missing from the lexicon (default {DEFAULT_TAG})")
    p.add_argument("--aggregate", choices=AGGREGATION_MODES, default="mean", help="multi-reference policy")
    p.add_argument("--output", type=Path, metavar="FILE", help="CSV destination (default: standard output)")
    return p


def _parse_metric(text: str) -> MetricSpec:
    m = _METRIC.match(text)
    if not m:
        raise UsageError(f"unknown metric {text!r}; use rouge1, rouge2, rougeN:<n>, topic or topicUniq")
    if m["topic"]:
        return MetricSpec("rouge_topic" if m["topic"] == "topic" else "rouge_topic_uniq")
    return MetricSpec("rouge_n", int(m["n"] or m["nn"]))


def parse_args(argv: list[str]) -> CliConfig:
    """Turn ``argv`` into a :class:`CliConfig`; raises :class:`UsageError`."""
    args = _build_parser().parse_args(argv)
    measures = [_parse_metric(m) for m in args.metric]
    topic_filter = None
    if args.pos is not None:
        try:
            topic_filter = TopicFilter.parse(args.pos)
        except ValueError as exc:
            raise UsageError(f"--pos: {exc}") from None
    if any(m.measure != "rouge_n" for m in measures) and topic_filter is None:
        raise UsageError("topic metrics require --pos")
    if args.default_tag is not None and args.lexicon is None:
        raise UsageError("--default-tag only applies together with --lexicon")
    if args.default_tag is not None and not args.default_tag.strip():
        raise UsageError("--default-tag must be non-empty")
    return CliConfig(
        systems_dir=args.systems,
        references_dir=args.references,
        measures=measures,
        topic_filter=topic_filter,
        remove_stopwords=args.remove_stopwords or args.stopwords is not None,
        stopword_path=args.stopwords,
        synonym_path=args.synonyms,
        lexicon_path=args.lexicon,
        default_tag=args.default_tag or DEFAULT_TAG,
        aggregation=args.aggregate,
        output_path=args.output,
    )


def build_configs(config: CliConfig) -> tuple[list[ScoreOptions], object]:
    """Load the resources named in ``config``; returns score options and tagger."""
    stopwords = None
    if config.remove_stopwords:
        stopwords = load_stopwords(config.stopword_path) if config.stopword_path else reference_stopwords()
    synonyms = load_dictionary(config.synonym_path) if config.synonym_path else None
    tagger = None
    if config.lexicon_path is not None:
        lexicon = load_lexicon(config.lexicon_path, config.default_tag)

        def tagger(text):
            return tag_with_lexicon(text, lexicon)

    options = [
        ScoreOptions(
            measure=m.measure,
            n=m.n,
            topic_filter=config.topic_filter if m.measure != "rouge_n" else None,
            stopwords=stopwords,
            synonyms=synonyms,
        )
        for m in config.measures
    ]
    return options, tagger


def run(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        config = parse_args(argv)
    except UsageError as exc:
        _build_parser().print_usage(sys.stderr)
        print(f"rouge2: error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except SystemExit as exc:
        return int(exc.code or 0)

    try:
        options, tagger = build_configs(config)
        corpus = scan_corpus(config.systems_dir, config.references_dir)
        report = evaluate(corpus.tasks, options, config.aggregation, tagger=tagger, skipped=corpus.skipped)
        text = render_report(report)
        if config.output_path is not None:
            config.output_path.write_text(text, encoding="utf-8", newline="")
        else:
            sys.stdout.write(text)
    except (ConfigError, LoadError, ParseError) as exc:
        print(f"rouge2: error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except OSError as exc:
        print(f"rouge2: error: {exc}", file=sys.stderr)
        return EXIT_CONFIG

    for message in report.warnings:
        print(f"rouge2: warning: skipped {message}", file=sys.stderr)
    for message in report.errors:
        print(f"rouge2: error: {message}", file=sys.stderr)
    return EXIT_PARTIAL if report.has_problems else EXIT_OK


def main() -> None:
    logging.basicConfig(level=logging.ERROR, format="%(levelname)s: %(message)s")
    sys.exit(run())


if __name__ == "__main__":
    main()
