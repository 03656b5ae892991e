"""Measure configuration shared by the scorers and the harness."""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from rouge2.synonyms import SynonymDictionary
    from rouge2.text import StopwordSet
    from rouge2.topics import TopicFilter

MEASURES = ("rouge_n", "rouge_topic", "rouge_topic_uniq")


@dataclass(frozen=True)
class ScoreOptions:
    """One measure variant, e.g. ROUGE-1 + StopWordRemoval + Synonyms.

    A feature is enabled by supplying its resource: ``stopwords`` turns on
    stopword removal, ``synonyms`` turns on synonym-aware matching.
    """

    measure: str = "rouge_n"
    n: int = 1
    topic_filter: TopicFilter | None = None
    stopwords: StopwordSet | None = None
    synonyms: SynonymDictionary | None = None

    def __post_init__(self):
        if self.measure not in MEASURES:
            raise ValueError(f"unknown measure {self.measure!r}; expected one of {MEASURES}")
        if self.measure == "rouge_n":
            if not isinstance(self.n, int) or self.n < 1:
                raise ValueError(f"n must be a positive integer, got {self.n!r}")
        elif self.topic_filter is None or not self.topic_filter.options:
            raise ValueError(f"{self.measure} needs a non-empty topic filter")

    @property
    def is_topic(self) -> bool:
        return self.measure != "rouge_n"

    @property
    def measure_label(self) -> str:
        if self.measure == "rouge_n":
            return f"ROUGE-{self.n}"
        name = "ROUGE-Topic" if self.measure == "rouge_topic" else "ROUGE-TopicUniq"
        return name + str(self.topic_filter)

    @property
    def settings_label(self) -> str:
        parts = []
        if self.stopwords is not None:
            parts.append("StopWordRemoval")
        if self.synonyms is not None:
            parts.append("Synonyms")
        return "+".join(parts) if parts else "none"

    @property
    def label(self) -> str:
        """Row label in the style of the published tables."""
        parts = [self.measure_label]
        if self.stopwords is not None:
            parts.append("StopWordRemoval")
        if self.synonyms is not None:
            parts.append("Synonyms")
        return " + ".join(parts)
