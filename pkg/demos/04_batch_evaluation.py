"""
Batch evaluation over a directory of summaries
==============================================

The harness pairs ``systems/<task>_<system>.txt`` with every
``references/<task>.<k>.txt``, scores each reference separately and combines
the per-reference scores by mean (default) or max.
"""

import tempfile
from pathlib import Path

from rouge2 import ScoreOptions, evaluate, reference_stopwords, scan_corpus
from rouge2.cli import run
from rouge2.harness import render_report

root = Path(tempfile.mkdtemp())
(root / "systems").mkdir()
(root / "references").mkdir()
(root / "systems" / "laptop_a.txt").write_text("Fast laptop. The keyboard is great.")
(root / "systems" / "laptop_b.txt").write_text("The laptop is heavy but fast.")
(root / "references" / "laptop.1.txt").write_text("A fast laptop with a great keyboard.")
(root / "references" / "laptop.2.txt").write_text("Quick machine, heavy but with a great keyboard.")

corpus = scan_corpus(root / "systems", root / "references")
configs = [ScoreOptions(), ScoreOptions(stopwords=reference_stopwords())]

for mode in ("mean", "max"):
    report = evaluate(corpus.tasks, configs, mode)
    print(render_report(report))

###############################################################################
# Per-reference scores stay available in ``report.details``.

for d in evaluate(corpus.tasks, configs[:1]).details:
    print(d.system_id, "vs reference", d.reference, f"F={d.score.f_score:.3f}")

###############################################################################
# The same run from the command line. Exit status 0 means every task was
# scored; 2 would mean some were skipped.

status = run(["--systems", str(root / "systems"), "--references", str(root / "references"),
              "--metric", "rouge1", "--metric", "rouge2", "--aggregate", "max"])
print("exit status:", status)
