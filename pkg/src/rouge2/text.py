"""Tokenization, normalization and stopword filtering for summary text.

Sentences end at ``.``, ``!`` or ``?`` followed by whitespace or the end of
the input. Inside a sentence a token is a maximal run of letters and digits,
optionally joined by internal apostrophes (``don't``, ``o'clock``). Tokens are
compared in lowercase with surrounding punctuation removed.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Iterable, Iterator

from rouge2.errors import LoadError

__all__ = [
    "Token",
    "TokenizedText",
    "StopwordSet",
    "normalize_word",
    "is_token_word",
    "tokenize",
    "load_stopwords",
    "remove_stopwords",
    "reference_stopwords",
]

_SENTENCE_END = re.compile(r"(?<=[.!?])(?=\s|$)")
_WORD = re.compile(r"[^\W_]+(?:'[^\W_]+)*")
_APOSTROPHES = str.maketrans({"’": "'", "‘": "'", "ʼ": "'"})


def normalize_word(word: str) -> str:
    """Lowercase ``word`` and strip leading/trailing non-alphanumerics.

    Returns an empty string for pure punctuation.
    """
    word = word.translate(_APOSTROPHES).lower()
    start, end = 0, len(word)
    while start < end and not word[start].isalnum():
        start += 1
    while end > start and not word[end - 1].isalnum():
        end -= 1
    return word[start:end]


def is_token_word(word: str) -> bool:
    """True if ``word`` could be the normalized form of a single token."""
    return bool(_WORD.fullmatch(word)) and word == word.lower()


@dataclass(frozen=True)
class Token:
    surface: str
    normalized: str
    sentence_index: int
    position: int
    pos: str | None = None


@dataclass(frozen=True)
class TokenizedText:
    """Sentence-segmented token sequences.

    ``sentences`` is a tuple of tuples of :class:`Token`. Sentences may be
    empty after stopword removal.
    """

    sentences: tuple[tuple[Token, ...], ...] = ()

    @classmethod
    def from_words(cls, sentences: Iterable[Iterable[str]], pos: Iterable[Iterable[str]] | None = None):
        """Build a text from already-split words (mostly for tests)."""
        tag_rows = list(pos) if pos is not None else None
        built = []
        for i, words in enumerate(sentences):
            tags = list(tag_rows[i]) if tag_rows is not None else None
            row = []
            for word_index, word in enumerate(words):
                norm = normalize_word(word)
                if not norm:
                    continue
                tag = tags[word_index] if tags is not None else None
                row.append(Token(word, norm, i, len(row), tag))
            built.append(tuple(row))
        return cls(tuple(built))

    def __iter__(self) -> Iterator[Token]:
        for sentence in self.sentences:
            yield from sentence

    def __len__(self) -> int:
        return sum(len(s) for s in self.sentences)

    @property
    def words(self) -> list[str]:
        """Flattened normalized words."""
        return [t.normalized for t in self]

    def sentence_words(self) -> list[list[str]]:
        return [[t.normalized for t in s] for s in self.sentences]


@dataclass(frozen=True)
class StopwordSet:
    words: frozenset[str] = field(default_factory=frozenset)

    def __post_init__(self):
        bad = [w for w in self.words if normalize_word(w) != w or not w]
        if bad:
            raise ValueError(f"stopwords must be normalized, got {sorted(bad)!r}")

    def __contains__(self, word: str) -> bool:
        return word in self.words

    def __len__(self) -> int:
        return len(self.words)


def _reindex(sentences: Iterable[Iterable[Token]]) -> tuple[tuple[Token, ...], ...]:
    return tuple(
        tuple(replace(tok, sentence_index=i, position=j) for j, tok in enumerate(sentence))
        for i, sentence in enumerate(sentences)
    )


def tokenize(text: str) -> TokenizedText:
    """Split raw text into sentences of normalized tokens.

    Line breaks count as plain whitespace. Sentences that contain no tokens
    (e.g. a stray ``"..."``) are dropped.
    """
    text = text.translate(_APOSTROPHES)
    sentences = []
    for chunk in _SENTENCE_END.split(text):
        row = []
        for match in _WORD.finditer(chunk):
            norm = normalize_word(match.group(0))
            if norm:
                row.append(Token(match.group(0), norm, 0, 0))
        if row:
            sentences.append(row)
    return TokenizedText(_reindex(sentences))


def _read_word_lines(path: Path) -> Iterator[tuple[int, str]]:
    try:
        content = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise LoadError(f"cannot read {path}: {exc.strerror or exc}") from exc
    for lineno, line in enumerate(content.splitlines(), start=1):
        line = line.strip()
        if line and not line.startswith("#"):
            yield lineno, line


def load_stopwords(path: str | Path) -> StopwordSet:
    """Read a stopword file: one word per line, ``#`` comments allowed."""
    words = {normalize_word(w) for _, w in _read_word_lines(Path(path))}
    words.discard("")
    return StopwordSet(frozenset(words))


def reference_stopwords() -> StopwordSet:
    """The bundled ``stopwords-rouge2-reference.txt`` list."""
    from rouge2.data import data_path

    return load_stopwords(data_path("stopwords-rouge2-reference.txt"))


def remove_stopwords(text: TokenizedText, stopwords: StopwordSet) -> TokenizedText:
    if not stopwords.words:
        return text
    kept = ([t for t in s if t.normalized not in stopwords] for s in text.sentences)
    return type(text)(_reindex(kept))
