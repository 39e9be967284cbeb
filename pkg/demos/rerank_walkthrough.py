"""Walkthrough: from raw result text to a reranked list.

Builds a tiny in-memory result set about planetary news, defines a
domain-of-interest profile, and shows how each scorer reorders the
engine's native ranking. Run from the repo root:

    python demos/rerank_walkthrough.py
"""
from interank import (
    ProfileEntry,
    DomainProfile,
    ScorerId,
    SearchResult,
    build_term_stats,
    mismatch_cardinality,
    mm_score,
    rerank,
    scoring_text,
    tokenize,
)

results = [
    SearchResult("a", 1, "https://news.example/launch", "Rocket launch gallery",
                 "photos of the rocket launch and the crowd watching"),
    SearchResult("b", 2, "https://news.example/mars-dust", "Mars dust storm",
                 "a planet wide dust storm on Mars seen by the orbiter"),
    SearchResult("c", 3, "https://news.example/rover-trek", "Rover trek",
                 "the rover continues its trek across the crater floor"),
    SearchResult("d", 4, "https://news.example/red-planet", "Red planet water",
                 "new evidence of ancient water on the red planet Mars"),
]

profile = DomainProfile(
    name="space",
    target=frozenset({ProfileEntry(("mars",)), ProfileEntry(("red", "planet"))}),
    competitors=frozenset({ProfileEntry(("rover",))}),
    stopwords=frozenset({"the", "a", "of", "on", "and", "its", "by"}),
)

# Step 1: what the scorer actually sees for one result.
doc_text = scoring_text(results[1])
tokens = tokenize(doc_text)
stats = build_term_stats(tokens, profile.stopwords)
print("scoring text:", doc_text)
print("surviving tokens:", list(stats.tokens))
print("mismatch vs target:", mismatch_cardinality(stats, profile.target))
print("match-mismatch score:", mm_score(stats, profile).value)
print()

# Step 2: rerank the whole set with each scorer and show both rank columns.
for scorer in (ScorerId.MATCH_MISMATCH, ScorerId.TFIDF):
    scored = rerank(results, profile, scorer)
    print(f"--- {scorer.value} ---")
    print(f"{'new':>4} {'engine':>7} {'score':>10}  title")
    by_id = {r.id: r for r in results}
    for s in scored:
        print(f"{s.new_rank:>4} {s.engine_rank:>7} {s.score.value:>10.4f}  {by_id[s.result_id].title}")
    print()
