"""
Building a synonym dictionary from synset records
=================================================

Synonyms are collected per part of speech:

* nouns: the other lemmas of the synset, plus hyponyms and hypernyms whose
  tag count is above 3;
* verbs: the other lemmas, plus troponyms and hypernyms above the same cut;
* adjectives: the other lemmas and every satellite adjective, unfiltered.

Records use a flat line format ``pos|lemma:count,...|relation=lemma:count,...``
so any lexical database can be exported into it.
"""

import tempfile
from pathlib import Path

from rouge2.synonyms import build_dictionary, format_synset_record, parse_synset_record, save_dictionary

lines = [
    "noun|display:12,screen:8|hypernym=surface:2;hyponym=monitor:5",
    "verb|walk:20|troponym=stroll:5,amble:1;hypernym=move:9",
    "adjective|bright:9|satellite=luminous:0,brilliant:2",
]
records = [parse_synset_record(line) for line in lines]
for record in records:
    print(format_synset_record(record))

dictionary = build_dictionary(records)
for head, syns in sorted(dictionary.items()):
    print(f"{head:>10} -> {sorted(syns)}")

###############################################################################
# "surface" (tag count 2) and "amble" (1) are left out; "luminous" is kept
# although its count is 0, since adjectives are not filtered.
#
# The result can be written in the tab-separated dictionary format read by
# ``load_dictionary`` and the ``--synonyms`` flag.

with tempfile.TemporaryDirectory() as tmp:
    path = Path(tmp) / "synonyms.txt"
    save_dictionary(dictionary, path)
    print(path.read_text())
