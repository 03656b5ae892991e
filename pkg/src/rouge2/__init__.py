"""ROUGE-N, ROUGE-N+Synonyms, ROUGE-Topic and ROUGE-TopicUniq for summary evaluation."""

from rouge2.errors import ConfigError, LoadError, ParseError, Rouge2Error, ValidationError
from rouge2.harness import (
    EvaluationTask,
    Report,
    Summary,
    aggregate,
    discover_pairs,
    evaluate,
    scan_corpus,
    score_pair,
    write_report,
)
from rouge2.ngrams import RougeScore, clipped_overlap, extract_ngrams, f_score, score_rouge_n
from rouge2.options import ScoreOptions
from rouge2.synonyms import (
    SynonymDictionary,
    SynsetRecord,
    build_dictionary,
    load_dictionary,
    matching_overlap,
    synonymous,
)
from rouge2.text import (
    StopwordSet,
    Token,
    TokenizedText,
    load_stopwords,
    reference_stopwords,
    remove_stopwords,
    tokenize,
)
from rouge2.topics import (
    Lexicon,
    TaggedText,
    TopicFilter,
    TopicTokens,
    filter_topics,
    load_lexicon,
    parse_tagged,
    score_rouge_topic,
    score_rouge_topic_uniq,
    tag_with_lexicon,
)

__version__ = "0.1.0"
