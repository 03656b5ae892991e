"""ROUGE-N: n-gram extraction, clipped overlap and recall/precision/F."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from rouge2.options import ScoreOptions
from rouge2.text import TokenizedText, remove_stopwords

__all__ = [
    "NGram",
    "RougeScore",
    "f_score",
    "extract_ngrams",
    "clipped_overlap",
    "gram_order",
    "score_rouge_n",
]

NGram = tuple[str, ...]


def f_score(precision: float, recall: float) -> float:
    """Harmonic mean of precision and recall, 0 when both are 0."""
    for name, value in (("precision", precision), ("recall", recall)):
        if not 0.0 <= value <= 1.0:
            raise ValueError(f"{name} must lie in [0, 1], got {value!r}")
    if precision + recall == 0:
        return 0.0
    return 2 * precision * recall / (precision + recall)


@dataclass(frozen=True)
class RougeScore:
    recall: float
    precision: float
    f_score: float
    overlap: int = 0
    ref_size: int = 0
    sys_size: int = 0

    @classmethod
    def from_counts(cls, overlap: int, ref_size: int, sys_size: int) -> RougeScore:
        if overlap < 0 or overlap > min(ref_size, sys_size):
            raise ValueError(f"overlap {overlap} outside [0, min({ref_size}, {sys_size})]")
        recall = overlap / ref_size if ref_size else 0.0
        precision = overlap / sys_size if sys_size else 0.0
        return cls(recall, precision, f_score(precision, recall), overlap, ref_size, sys_size)

    def rounded(self, digits: int = 3) -> tuple[float, float, float]:
        return round(self.recall, digits), round(self.precision, digits), round(self.f_score, digits)


def extract_ngrams(text: TokenizedText, n: int) -> Counter[NGram]:
    """Multiset of contiguous n-grams; windows never span two sentences."""
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")
    grams: Counter[NGram] = Counter()
    for words in text.sentence_words():
        for i in range(len(words) - n + 1):
            grams[tuple(words[i : i + n])] += 1
    return grams


def gram_order(*multisets: Counter[NGram]) -> int | None:
    """Common order of the given multisets; raises on a mix."""
    orders = {len(g) for grams in multisets for g in grams}
    if len(orders) > 1:
        raise ValueError(f"mixed gram orders {sorted(orders)}")
    return orders.pop() if orders else None


def clipped_overlap(ref_grams: Counter[NGram], sys_grams: Counter[NGram]) -> int:
    """Sum over distinct grams of min(reference count, system count)."""
    gram_order(ref_grams, sys_grams)
    return sum((ref_grams & sys_grams).values())


def score_rouge_n(
    ref: TokenizedText,
    sys: TokenizedText,
    n: int | None = None,
    opts: ScoreOptions | None = None,
) -> RougeScore:
    """Score ``sys`` against a single reference with ROUGE-N.

    Stopwords (if configured) are removed from both sides before the grams
    are extracted. With a synonym dictionary the overlap is a maximum
    matching of gram instances; otherwise it is the clipped count.
    """
    if n is None:
        n = opts.n if opts is not None else 1
    opts = opts or ScoreOptions(n=n)
    if opts.stopwords is not None:
        ref = remove_stopwords(ref, opts.stopwords)
        sys = remove_stopwords(sys, opts.stopwords)
    ref_grams = extract_ngrams(ref, n)
    sys_grams = extract_ngrams(sys, n)
    if opts.synonyms is not None:
        from rouge2.synonyms import matching_overlap

        overlap = matching_overlap(ref_grams, sys_grams, opts.synonyms)
    else:
        overlap = clipped_overlap(ref_grams, sys_grams)
    return RougeScore.from_counts(overlap, sum(ref_grams.values()), sum(sys_grams.values()))
