"""POS-filtered topic scoring: ROUGE-Topic and ROUGE-TopicUniq.

Topics are the unigram tokens whose part-of-speech tag starts with one of the
configured options. ``NN`` therefore admits NN, NNS, NNP and NNPS, ``VB``
admits every verb form, while ``VBD`` or ``NNP`` select only that subclass.
Tags follow the Penn Treebank conventions.

Tagged input comes either from ``word_TAG`` files produced by an external
tagger or from :func:`tag_with_lexicon`, a plain dictionary lookup that is
only as good as its lexicon.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path
from types import MappingProxyType
from typing import Iterable, Mapping

from rouge2.errors import LoadError, ParseError
from rouge2.ngrams import RougeScore, clipped_overlap
from rouge2.options import ScoreOptions
from rouge2.text import Token, TokenizedText, normalize_word

__all__ = [
    "TaggedText",
    "TopicFilter",
    "TopicTokens",
    "Lexicon",
    "parse_tagged",
    "load_tagged",
    "load_lexicon",
    "tag_with_lexicon",
    "filter_topics",
    "score_rouge_topic",
    "score_rouge_topic_uniq",
]

DEFAULT_TAG = "NN"


@dataclass(frozen=True)
class TaggedText(TokenizedText):
    """A :class:`TokenizedText` whose tokens all carry a POS tag."""

    def __post_init__(self):
        for tok in self:
            if not tok.pos:
                raise ValueError(f"token {tok.surface!r} has no POS tag")


@dataclass(frozen=True)
class TopicFilter:
    options: tuple[str, ...]

    def __post_init__(self):
        opts = tuple(dict.fromkeys(self.options))
        if not opts:
            raise ValueError("a topic filter needs at least one POS option")
        for opt in opts:
            if not opt or any(c.isspace() for c in opt) or opt != opt.upper():
                raise ValueError(f"POS option must be a non-empty uppercase tag prefix, got {opt!r}")
        object.__setattr__(self, "options", opts)

    @classmethod
    def parse(cls, spec: str) -> TopicFilter:
        """Parse ``"NN,JJ"`` or ``"NN|JJ"``."""
        return cls(tuple(p.strip() for p in re.split(r"[,|]", spec) if p.strip()))

    def matches(self, tag: str) -> bool:
        return any(tag.startswith(opt) for opt in self.options)

    def __str__(self) -> str:
        return "|".join(self.options)


@dataclass(frozen=True)
class TopicTokens:
    tokens: tuple[str, ...] = ()

    @property
    def unique(self) -> tuple[str, ...]:
        """Distinct topic words in order of first appearance."""
        return tuple(dict.fromkeys(self.tokens))

    def __len__(self) -> int:
        return len(self.tokens)


@dataclass(frozen=True)
class Lexicon:
    tags: Mapping[str, str] = field(default_factory=dict)
    default: str = DEFAULT_TAG

    def __post_init__(self):
        if not self.default:
            raise ValueError("default tag must be non-empty")
        object.__setattr__(self, "tags", MappingProxyType(dict(self.tags)))

    def tag(self, word: str) -> str:
        return self.tags.get(word, self.default)


def parse_tagged(text: str) -> TaggedText:
    """Parse ``word_TAG`` tokens, one sentence per line.

    The tag is whatever follows the last underscore. Tokens that normalize
    to nothing (punctuation such as ``,_,``) are dropped with their tags.
    """
    sentences = []
    index = 0
    for lineno, line in enumerate(text.splitlines(), start=1):
        row = []
        for item in line.split():
            word, sep, tag = item.rpartition("_")
            if not sep or not word or not tag:
                raise ParseError(f"token {item!r} on line {lineno} lacks a _TAG suffix", index)
            index += 1
            norm = normalize_word(word)
            if norm:
                row.append(Token(word, norm, len(sentences), len(row), tag))
        if row:
            sentences.append(tuple(row))
    return TaggedText(tuple(sentences))


def load_tagged(path: str | Path) -> TaggedText:
    path = Path(path)
    try:
        content = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise LoadError(f"cannot read {path}: {exc.strerror or exc}") from exc
    try:
        return parse_tagged(content)
    except ParseError as exc:
        raise ParseError(str(exc), exc.location, str(path)) from exc


def load_lexicon(path: str | Path, default: str = DEFAULT_TAG) -> Lexicon:
    path = Path(path)
    try:
        content = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise LoadError(f"cannot read lexicon {path}: {exc.strerror or exc}") from exc
    tags = {}
    for lineno, raw in enumerate(content.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split("\t")
        word = normalize_word(parts[0]) if len(parts) == 2 else ""
        if not word or not parts[1].strip():
            raise ParseError("expected 'word<TAB>TAG'", lineno, str(path))
        tags[word] = parts[1].strip()
    return Lexicon(tags, default)


def tag_with_lexicon(text: TokenizedText, lexicon: Lexicon) -> TaggedText:
    return TaggedText(
        tuple(
            tuple(Token(t.surface, t.normalized, t.sentence_index, t.position, lexicon.tag(t.normalized)) for t in s)
            for s in text.sentences
        )
    )


def filter_topics(text: TokenizedText, topic_filter: TopicFilter) -> TopicTokens:
    kept = []
    for tok in text:
        if tok.pos is None:
            raise ValueError("topic filtering needs POS-tagged text")
        if topic_filter.matches(tok.pos):
            kept.append(tok.normalized)
    return TopicTokens(tuple(kept))


def _drop_stopwords(words: Iterable[str], opts: ScoreOptions | None) -> list[str]:
    if opts is None or opts.stopwords is None:
        return list(words)
    return [w for w in words if w not in opts.stopwords]


def _overlap(ref: Counter, sys: Counter, opts: ScoreOptions | None) -> int:
    if opts is not None and opts.synonyms is not None:
        from rouge2.synonyms import matching_overlap

        return matching_overlap(ref, sys, opts.synonyms)
    return clipped_overlap(ref, sys)


def score_rouge_topic(ref: TopicTokens, sys: TopicTokens, opts: ScoreOptions | None = None) -> RougeScore:
    """Topic overlap counted with multiplicity (clipped, or matched under synonyms)."""
    ref_words = _drop_stopwords(ref.tokens, opts)
    sys_words = _drop_stopwords(sys.tokens, opts)
    ref_grams = Counter((w,) for w in ref_words)
    sys_grams = Counter((w,) for w in sys_words)
    return RougeScore.from_counts(_overlap(ref_grams, sys_grams, opts), len(ref_words), len(sys_words))


def score_rouge_topic_uniq(ref: TopicTokens, sys: TopicTokens, opts: ScoreOptions | None = None) -> RougeScore:
    """Like :func:`score_rouge_topic` but on the sets of distinct topic words,
    so a repeated topic counts once on either side."""
    ref_set = dict.fromkeys(_drop_stopwords(ref.unique, opts))
    sys_set = dict.fromkeys(_drop_stopwords(sys.unique, opts))
    if opts is not None and opts.synonyms is not None:
        overlap = _overlap(Counter((w,) for w in ref_set), Counter((w,) for w in sys_set), opts)
    else:
        overlap = len(ref_set.keys() & sys_set.keys())
    return RougeScore.from_counts(overlap, len(ref_set), len(sys_set))
