"""
Topic coverage with ROUGE-Topic and ROUGE-TopicUniq
===================================================

For opinion summaries the interesting words are nouns (what is discussed)
and adjectives (what is said about it). Restricting the comparison to
NN*/JJ* tokens shows whether a summary covers the opinions, ignoring filler.
"""

from rouge2 import (
    ScoreOptions,
    TopicFilter,
    filter_topics,
    load_dictionary,
    load_lexicon,
    score_rouge_topic,
    score_rouge_topic_uniq,
    tag_with_lexicon,
    tokenize,
)
from rouge2.data import data_path
from rouge2.topics import load_tagged

phone = data_path("phone")
nouns_adjectives = TopicFilter.parse("NN|JJ")

###############################################################################
# Tagged summaries: ``word_TAG`` tokens, one sentence per line, as written by
# any Penn-Treebank tagger.

ref = load_tagged(phone / "references" / "phone.1.tag")
verbose = load_tagged(phone / "systems" / "phone_sys2.tag")

ref_topics = filter_topics(ref, nouns_adjectives)
sys_topics = filter_topics(verbose, nouns_adjectives)
print("reference topics:", ref_topics.tokens)
print("system topics:   ", sys_topics.tokens)
print("distinct system topics:", len(sys_topics.unique), "of", len(sys_topics.tokens))

###############################################################################
# "screen" appears three times in the verbose summary. ROUGE-Topic counts
# every copy in the precision denominator, ROUGE-TopicUniq only one.

synonyms = load_dictionary(phone / "synonyms.txt")
for scorer in (score_rouge_topic, score_rouge_topic_uniq):
    for syn in (None, synonyms):
        measure = "rouge_topic" if scorer is score_rouge_topic else "rouge_topic_uniq"
        opts = ScoreOptions(measure, topic_filter=nouns_adjectives, synonyms=syn)
        s = scorer(ref_topics, sys_topics, opts)
        print(f"{opts.label:<38} R={s.recall:.3f} P={s.precision:.3f} F={s.f_score:.3f}")

###############################################################################
# Without an external tagger, a word->tag lexicon can stand in. Unknown
# words get the default tag (NN unless configured otherwise), so the result
# is only as good as the lexicon.

lexicon = load_lexicon(phone / "lexicon.tsv")
plain = tokenize((phone / "systems" / "phone_sys2.txt").read_text())
guessed = tag_with_lexicon(plain, lexicon)
print("\nlexicon tags agree with gold tags:", guessed == verbose)

unknown = tag_with_lexicon(tokenize("The battery is superb."), lexicon)
print([(t.normalized, t.pos) for t in unknown])
