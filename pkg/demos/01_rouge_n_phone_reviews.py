"""
ROUGE-1 on two phone-review summaries
=====================================

A concise and a verbose system summary are scored against one reference.
Plain ROUGE-1 punishes the verbose one hard, and neither gets credit for
writing "screen" where the reference says "display". Stopword removal and a
one-line synonym dictionary change the picture.
"""

from rouge2 import ScoreOptions, load_dictionary, reference_stopwords, score_rouge_n, tokenize
from rouge2.data import data_path

phone = data_path("phone")
ref = tokenize((phone / "references" / "phone.1.txt").read_text())
systems = {
    "concise": tokenize((phone / "systems" / "phone_sys1.txt").read_text()),
    "verbose": tokenize((phone / "systems" / "phone_sys2.txt").read_text()),
}
print("reference tokens:", ref.words)

###############################################################################
# Four variants: with/without stopwords, with/without synonyms.
# ``ScoreOptions`` switches a feature on by carrying its resource.

stopwords = reference_stopwords()
synonyms = load_dictionary(phone / "synonyms.txt")
variants = [
    ScoreOptions(),
    ScoreOptions(synonyms=synonyms),
    ScoreOptions(stopwords=stopwords),
    ScoreOptions(stopwords=stopwords, synonyms=synonyms),
]

for name, sys in systems.items():
    print(f"\n{name}")
    for opts in variants:
        s = score_rouge_n(ref, sys, 1, opts)
        print(f"  {opts.label:<40} R={s.recall:.3f} P={s.precision:.3f} F={s.f_score:.3f}"
              f"   ({s.overlap}/{s.ref_size}, {s.overlap}/{s.sys_size})")

###############################################################################
# With stopwords removed and display~screen allowed, both summaries cover the
# reference completely (recall 1.000). The verbose one still has low
# precision: most of its words are not in the reference at all.

###############################################################################
# Bigrams never span a sentence boundary. The concise summary shares only
# "is very" with the reference.

s = score_rouge_n(ref, systems["concise"], 2)
print(f"\nROUGE-2 concise: overlap={s.overlap} R={s.recall:.3f} P={s.precision:.3f}")
