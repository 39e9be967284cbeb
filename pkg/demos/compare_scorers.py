"""How much do the two scorers agree on a synthetic corpus?

Generates a small corpus with a ramp of planted target evidence, reranks
it with both scorers, and prints the paired rank table with agreement
metrics and any flagged outliers. Run from the repo root:

    python demos/compare_scorers.py
"""
import random

from interank import DomainProfile, ProfileEntry, ScorerId, SearchResult, compare_orders, rerank


def profile():
    return DomainProfile(
        name="space",
        target=frozenset({ProfileEntry(("mars",)), ProfileEntry(("stellar",))}),
        competitors=frozenset({ProfileEntry(("rover",))}),
        stopwords=frozenset({"the", "a"}),
    )


FILLER = ["dust", "crater", "orbit", "sample", "mission", "camera", "hill", "rock"]

rng = random.Random(7)
results = []
for i in range(12):
    planted = ["mars"] * (i // 2) + ["stellar"] * (i // 4)
    tokens = planted + [rng.choice(FILLER) for _ in range(20)]
    rng.shuffle(tokens)
    results.append(
        SearchResult(f"doc{i}", i + 1, f"https://example.org/{i}", f"Doc {i}", " ".join(tokens))
    )

order_mm = rerank(results, profile(), ScorerId.MATCH_MISMATCH)
order_tfidf = rerank(results, profile(), ScorerId.TFIDF)
comparison = compare_orders(order_mm, order_tfidf)

print(f"{'mm rank':>8} {'tfidf rank':>11} {'displacement':>13}")
for a, b in comparison.pairing.pairs:
    print(f"{a:>8} {b:>11} {abs(a - b):>13}")
print()
print(f"kendall tau       : {comparison.kendall_tau:.4f}")
print(f"mean displacement : {comparison.mean_displacement:.2f}")
print(f"footrule          : {comparison.footrule}")
print(f"outlier indices   : {comparison.outliers or 'none'}")
