"""Synonym dictionaries and synonym-aware overlap counting.

Two words are synonymous when they are equal or when either one lists the
other in the dictionary. The relation is one hop only: ``a~b`` and ``b~c``
does not make ``a~c``.

Overlap under synonymy is the size of a maximum matching between gram
instances of the reference and gram instances of the system summary, where
an edge joins two grams whose words are pairwise synonymous. Instances of the
same gram are interchangeable, so the matching is solved as a max-flow over
distinct grams with their multiplicities as capacities. The result is
identical to matching the instances one by one.
"""

from __future__ import annotations

import re
from collections import Counter, defaultdict, deque
from dataclasses import dataclass, field
from pathlib import Path
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping

from rouge2.errors import LoadError, ParseError, ValidationError
from rouge2.ngrams import NGram, gram_order
from rouge2.text import is_token_word, normalize_word

__all__ = [
    "SynonymDictionary",
    "SynsetRecord",
    "synonymous",
    "grams_match",
    "matching_overlap",
    "load_dictionary",
    "save_dictionary",
    "build_dictionary",
    "parse_synset_record",
    "format_synset_record",
    "read_synset_records",
    "TAG_COUNT_THRESHOLD",
]

# Relation-derived noun/verb synonyms need a tag count strictly above this.
TAG_COUNT_THRESHOLD = 3

POS_RELATIONS = {
    "noun": frozenset({"hyponym", "hypernym"}),
    "verb": frozenset({"troponym", "hypernym"}),
    "adjective": frozenset({"satellite"}),
}
RELATION_KINDS = frozenset().union(*POS_RELATIONS.values())


class SynonymDictionary:
    """Immutable word -> synonym-set map.

    Missing words map to the empty set. Self-references are dropped, since
    every word already matches itself.
    """

    def __init__(self, entries: Mapping[str, Iterable[str]] | None = None):
        merged: dict[str, set[str]] = {}
        for head, syns in (entries or {}).items():
            syns = set(syns)
            bad = [w for w in (head, *syns) if not w or normalize_word(w) != w]
            if bad:
                raise ValueError(f"dictionary words must be normalized, got {sorted(bad)!r}")
            merged.setdefault(head, set()).update(syns - {head})
        self._entries = MappingProxyType({h: frozenset(s) for h, s in merged.items()})
        reverse: dict[str, set[str]] = defaultdict(set)
        for head, syns in self._entries.items():
            for syn in syns:
                reverse[syn].add(head)
        self._reverse = {w: frozenset(s) for w, s in reverse.items()}

    @property
    def entries(self) -> Mapping[str, frozenset[str]]:
        return self._entries

    def __getitem__(self, word: str) -> frozenset[str]:
        return self._entries.get(word, frozenset())

    def __contains__(self, word: object) -> bool:
        return word in self._entries

    def __iter__(self) -> Iterator[str]:
        return iter(self._entries)

    def __len__(self) -> int:
        return len(self._entries)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SynonymDictionary):
            return NotImplemented
        return dict(self._entries) == dict(other._entries)

    def __repr__(self) -> str:
        return f"SynonymDictionary({dict(self._entries)!r})"

    def items(self):
        return self._entries.items()

    def equivalents(self, word: str) -> frozenset[str]:
        """Every word synonymous with ``word``, including itself."""
        return self[word] | self._reverse.get(word, frozenset()) | {word}

    def issubset(self, other: SynonymDictionary) -> bool:
        return all(syns <= other[head] for head, syns in self.items())

    def merged(self, other: SynonymDictionary) -> SynonymDictionary:
        combined: dict[str, set[str]] = defaultdict(set)
        for source in (self, other):
            for head, syns in source.items():
                combined[head] |= syns
        return SynonymDictionary(combined)


def synonymous(a: str, b: str, dictionary: SynonymDictionary) -> bool:
    return a == b or b in dictionary[a] or a in dictionary[b]


def grams_match(a: NGram, b: NGram, dictionary: SynonymDictionary) -> bool:
    """Position-wise synonymy; every position has to match."""
    return len(a) == len(b) and all(synonymous(x, y, dictionary) for x, y in zip(a, b))


def _max_flow(ref_caps: list[int], sys_caps: list[int], adj: list[list[int]]) -> int:
    # Capacitated bipartite matching by shortest augmenting paths.
    ref_left = list(ref_caps)
    sys_left = list(sys_caps)
    flow: list[dict[int, int]] = [{} for _ in ref_caps]
    into: list[dict[int, int]] = [{} for _ in sys_caps]
    total = 0

    def push(i: int, j: int, amount: int) -> None:
        new = flow[i].get(j, 0) + amount
        if new:
            flow[i][j] = into[j][i] = new
        else:
            del flow[i][j], into[j][i]

    # Greedy start; augmenting paths below repair any poor choice.
    for i, targets in enumerate(adj):
        for j in targets:
            if not ref_left[i]:
                break
            amount = min(ref_left[i], sys_left[j])
            if amount:
                push(i, j, amount)
                ref_left[i] -= amount
                sys_left[j] -= amount
                total += amount

    while True:
        came_to_sys: dict[int, int] = {}
        came_to_ref: dict[int, int] = {}
        queue = deque(i for i, left in enumerate(ref_left) if left)
        seen_ref = set(queue)
        sink = None
        while queue and sink is None:
            i = queue.popleft()
            for j in adj[i]:
                if j in came_to_sys:
                    continue
                came_to_sys[j] = i
                if sys_left[j]:
                    sink = j
                    break
                for back in into[j]:
                    if back not in seen_ref:
                        seen_ref.add(back)
                        came_to_ref[back] = j
                        queue.append(back)
        if sink is None:
            return total

        path = []
        j = sink
        while True:
            i = came_to_sys[j]
            path.append((i, j))
            if i not in came_to_ref:
                break
            j = came_to_ref[i]
        start = path[-1][0]
        # backward edges are (i, came_to_ref[i]); their residual is the flow on them
        amount = min(
            [sys_left[sink], ref_left[start]]
            + [flow[i][came_to_ref[i]] for i, _ in path if i in came_to_ref]
        )
        for i, j in path:
            push(i, j, amount)
            if i in came_to_ref:
                push(i, came_to_ref[i], -amount)
        sys_left[sink] -= amount
        ref_left[start] -= amount
        total += amount


def matching_overlap(
    ref_grams: Counter[NGram],
    sys_grams: Counter[NGram],
    dictionary: SynonymDictionary,
) -> int:
    """Maximum number of reference/system gram instances that can be paired
    off, each instance used at most once, where a pair needs every word
    position to be synonymous."""
    if gram_order(ref_grams, sys_grams) is None:
        return 0
    ref_keys = sorted(g for g, c in ref_grams.items() if c > 0)
    sys_keys = sorted(g for g, c in sys_grams.items() if c > 0)
    by_first: dict[str, list[int]] = defaultdict(list)
    for j, gram in enumerate(sys_keys):
        by_first[gram[0]].append(j)
    adj = []
    for gram in ref_keys:
        candidates = set()
        for word in dictionary.equivalents(gram[0]):
            candidates.update(by_first.get(word, ()))
        matches = [j for j in candidates if grams_match(gram, sys_keys[j], dictionary)]
        # identical gram first so the greedy start is the clipped count
        matches.sort(key=lambda j: (sys_keys[j] != gram, j))
        adj.append(matches)
    return _max_flow(
        [ref_grams[g] for g in ref_keys],
        [sys_grams[g] for g in sys_keys],
        adj,
    )


def load_dictionary(path: str | Path) -> SynonymDictionary:
    """Read ``headword<TAB>syn1,syn2,...`` lines.

    Blank lines and ``#`` comments are skipped; repeated headwords merge.
    """
    path = Path(path)
    try:
        content = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise LoadError(f"cannot read synonym dictionary {path}: {exc.strerror or exc}") from exc
    entries: dict[str, set[str]] = defaultdict(set)
    for lineno, raw in enumerate(content.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = raw.rstrip("\r\n").split("\t")
        if len(parts) != 2:
            raise ParseError("expected 'headword<TAB>synonym,synonym,...'", lineno, str(path))
        head = normalize_word(parts[0])
        if not head:
            raise ParseError(f"empty headword {parts[0]!r}", lineno, str(path))
        syns = {normalize_word(w) for w in parts[1].split(",")}
        syns.discard("")
        entries[head] |= syns
    return SynonymDictionary(entries)


def save_dictionary(dictionary: SynonymDictionary, path: str | Path) -> None:
    lines = [f"{head}\t{','.join(sorted(syns))}\n" for head, syns in sorted(dictionary.items())]
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.writelines(lines)


Lemma = tuple[str, int]


@dataclass(frozen=True)
class SynsetRecord:
    """One synset with its lemmas and related synsets.

    ``relations`` maps a relation kind to a list of related synsets, each a
    list of ``(word, tag_count)`` lemmas.
    """

    pos: str
    lemmas: tuple[Lemma, ...]
    relations: Mapping[str, tuple[tuple[Lemma, ...], ...]] = field(default_factory=dict)

    def __post_init__(self):
        if self.pos not in POS_RELATIONS:
            raise ValidationError(f"unknown pos {self.pos!r}; expected one of {sorted(POS_RELATIONS)}")
        unknown = set(self.relations) - RELATION_KINDS
        if unknown:
            raise ValidationError(f"unknown relation kinds {sorted(unknown)}")
        object.__setattr__(self, "lemmas", tuple((w, int(c)) for w, c in self.lemmas))
        object.__setattr__(
            self,
            "relations",
            MappingProxyType(
                {
                    kind: tuple(tuple((w, int(c)) for w, c in synset) for synset in synsets)
                    for kind, synsets in self.relations.items()
                }
            ),
        )
        counts = [c for _, c in self.lemmas] + [
            c for synsets in self.relations.values() for synset in synsets for _, c in synset
        ]
        if any(c < 0 for c in counts):
            raise ValidationError("tag counts must be non-negative")

    def check_relations(self) -> None:
        invalid = set(self.relations) - POS_RELATIONS[self.pos]
        if invalid:
            raise ValidationError(f"relation(s) {sorted(invalid)} not valid for a {self.pos} synset")


def _parse_lemmas(text: str, lineno: int | None) -> tuple[Lemma, ...]:
    lemmas = []
    for item in text.split(","):
        word, sep, count = item.strip().rpartition(":")
        if not sep or not word or not re.fullmatch(r"\d+", count):
            raise ParseError(f"bad lemma {item!r}, expected word:tagcount", lineno)
        lemmas.append((word, int(count)))
    return tuple(lemmas)


def parse_synset_record(line: str, lineno: int | None = None) -> SynsetRecord:
    """Parse ``pos|word:count,...|kind=word:count,...;kind=...``.

    The third field may be empty or absent. A relation kind may repeat, once
    per related synset.
    """
    fields = line.strip().split("|")
    if len(fields) not in (2, 3) or not fields[1]:
        raise ParseError("expected 'pos|lemmas|relations'", lineno)
    relations: dict[str, list[tuple[Lemma, ...]]] = defaultdict(list)
    if len(fields) == 3 and fields[2]:
        for chunk in fields[2].split(";"):
            kind, sep, lemmas = chunk.partition("=")
            if not sep or not lemmas:
                raise ParseError(f"bad relation {chunk!r}, expected kind=word:count,...", lineno)
            relations[kind.strip()].append(_parse_lemmas(lemmas, lineno))
    try:
        return SynsetRecord(fields[0].strip(), _parse_lemmas(fields[1], lineno), dict(relations))
    except ValidationError as exc:
        raise ParseError(str(exc), lineno) from exc


def format_synset_record(record: SynsetRecord) -> str:
    def lemmas(items: Iterable[Lemma]) -> str:
        return ",".join(f"{w}:{c}" for w, c in items)

    rels = ";".join(
        f"{kind}={lemmas(synset)}"
        for kind in sorted(record.relations)
        for synset in record.relations[kind]
    )
    return f"{record.pos}|{lemmas(record.lemmas)}|{rels}"


def read_synset_records(path: str | Path) -> Iterator[SynsetRecord]:
    path = Path(path)
    try:
        handle = open(path, encoding="utf-8")
    except OSError as exc:
        raise LoadError(f"cannot read synset records {path}: {exc.strerror or exc}") from exc
    with handle:
        for lineno, line in enumerate(handle, start=1):
            if line.strip() and not line.lstrip().startswith("#"):
                try:
                    yield parse_synset_record(line, lineno)
                except ParseError as exc:
                    raise ParseError(str(exc), None, str(path)) from exc


def _words(lemmas: Iterable[Lemma], min_count: int | None) -> set[str]:
    out = set()
    for word, count in lemmas:
        if min_count is not None and count <= min_count:
            continue
        norm = normalize_word(word)
        # multi-word lemmas (cell_phone) can never equal a single token
        if is_token_word(norm):
            out.add(norm)
    return out


def build_dictionary(records: Iterable[SynsetRecord]) -> SynonymDictionary:
    """Collect synonyms from synset records.

    Nouns: co-lemmas, plus hyponym and hypernym words whose tag count is
    above :data:`TAG_COUNT_THRESHOLD`. Verbs: the same with troponyms and
    hypernyms. Adjectives: co-lemmas and satellite words, unfiltered.
    Senses are not kept apart; all records for a headword are merged.
    """
    entries: dict[str, set[str]] = defaultdict(set)
    for record in records:
        record.check_relations()
        threshold = None if record.pos == "adjective" else TAG_COUNT_THRESHOLD
        related = set()
        for synsets in record.relations.values():
            for synset in synsets:
                related |= _words(synset, threshold)
        lemma_words = _words(record.lemmas, None)
        for word in lemma_words:
            entries[word] |= (lemma_words | related) - {word}
    return SynonymDictionary(entries)
