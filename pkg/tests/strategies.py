"""Hypothesis strategies shared by the property tests."""

from hypothesis import strategies as st

from rouge2.synonyms import SynonymDictionary
from rouge2.text import TokenizedText

VOCAB = ["screen", "display", "phone", "bright", "clear", "the", "is", "very", "light", "crisp"]
TAGS = ["NN", "NNS", "JJ", "VBZ", "DT", "RB"]

words = st.sampled_from(VOCAB)
sentences = st.lists(st.lists(words, min_size=0, max_size=7), min_size=0, max_size=4)
texts = sentences.map(TokenizedText.from_words)
nonempty_texts = st.lists(st.lists(words, min_size=1, max_size=7), min_size=1, max_size=4).map(TokenizedText.from_words)


@st.composite
def tagged_texts(draw):
    rows = draw(sentences)
    tags = [[draw(st.sampled_from(TAGS)) for _ in row] for row in rows]
    return TokenizedText.from_words(rows, tags)


dictionaries = st.dictionaries(words, st.sets(words, max_size=3), max_size=6).map(SynonymDictionary)


@st.composite
def nested_dictionaries(draw):
    """A dictionary and a superset of it."""
    small = draw(st.dictionaries(words, st.sets(words, max_size=2), max_size=5))
    extra = draw(st.dictionaries(words, st.sets(words, max_size=2), max_size=5))
    big = {k: set(v) for k, v in small.items()}
    for k, v in extra.items():
        big.setdefault(k, set()).update(v)
    return SynonymDictionary(small), SynonymDictionary(big)
