"""Rank-order agreement metrics and outlier flagging.

Quantifies how far two orderings of the same results diverge: mean
displacement and footrule measure positional drift, Kendall tau measures
pairwise order agreement, and the outlier rule flags single results whose
displacement dwarfs the rest.
"""
from __future__ import annotations

import io
import csv
from dataclasses import dataclass
from statistics import median
from typing import Sequence

from .errors import DegeneratePairing, IdMismatch
from .rerank import ScoredResult


@dataclass(frozen=True)
class RankPairing:
    """Paired positions ordered by the first ranking: pairs[i] = (i+1, b_i)."""

    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        for i, (a, _) in enumerate(self.pairs, start=1):
            if a != i:
                raise ValueError("position_a values must be exactly 1..n in order")
        b_values = [b for _, b in self.pairs]
        if len(set(b_values)) != len(b_values):
            raise ValueError("position_b values must be distinct")
        if any(b < 1 for b in b_values):
            raise ValueError("positions are 1-based")

    def __len__(self) -> int:
        return len(self.pairs)


def pairing_from_positions(positions_b: Sequence[int]) -> RankPairing:
    """Build a pairing from the b column alone; a is implicitly 1..n."""
    return RankPairing(tuple((i, b) for i, b in enumerate(positions_b, start=1)))


@dataclass(frozen=True)
class RankComparison:
    pairing: RankPairing
    mean_displacement: float
    kendall_tau: float
    footrule: int
    outliers: list[int]


def footrule(pairing: RankPairing) -> int:
    """Sum of absolute displacements; 0 iff the pairing is the identity."""
    return sum(abs(a - b) for a, b in pairing.pairs)


def mean_displacement(pairing: RankPairing) -> float:
    """Average absolute displacement over all pairs."""
    return footrule(pairing) / len(pairing)


def kendall_tau(pairing: RankPairing) -> float:
    """1 - 2*inversions/C(n,2) over the b column, in [-1, 1]."""
    n = len(pairing)
    if n < 2:
        raise DegeneratePairing("tau needs at least two pairs")
    b = [pb for _, pb in pairing.pairs]
    inversions = 0
    for i in range(n):
        for j in range(i + 1, n):
            if b[i] > b[j]:
                inversions += 1
    return 1.0 - 2.0 * inversions / (n * (n - 1) // 2)


def flag_outliers(pairing: RankPairing, factor: float = 10.0) -> list[int]:
    """1-based indices of pairs displaced more than factor times the median.

    A median displacement of 0 would make any threshold vacuous, so it is
    replaced by 1 (threshold == factor) by convention.
    """
    if factor <= 0:
        raise ValueError("factor must be positive")
    if len(pairing) < 3:
        raise DegeneratePairing("outlier flagging needs at least three pairs")
    displacements = [abs(a - b) for a, b in pairing.pairs]
    med = median(displacements)
    threshold = factor * med if med > 0 else factor
    return [i for i, d in enumerate(displacements, start=1) if d > threshold]


def compare_orders(
    results_a: Sequence[ScoredResult],
    results_b: Sequence[ScoredResult],
    top_k: int | None = None,
    outlier_factor: float = 10.0,
) -> RankComparison:
    """Compare two rankings of the same result set.

    Walks ranking a in new_rank order and reads each id's position in
    ranking b. With top_k, only the first k results of a enter the pairing
    while positions in b stay the true (possibly > k) ones. Outliers are
    left empty when there are fewer than three pairs.
    """
    ids_a = {r.result_id for r in results_a}
    ids_b = {r.result_id for r in results_b}
    if ids_a != ids_b:
        raise IdMismatch("orderings rank different id sets")

    position_b = {r.result_id: r.new_rank for r in results_b}
    walk = sorted(results_a, key=lambda r: r.new_rank)
    if top_k is not None:
        walk = walk[:top_k]
    pairing = pairing_from_positions([position_b[r.result_id] for r in walk])

    outliers = flag_outliers(pairing, outlier_factor) if len(pairing) >= 3 else []
    return RankComparison(
        pairing=pairing,
        mean_displacement=mean_displacement(pairing),
        kendall_tau=kendall_tau(pairing),
        footrule=footrule(pairing),
        outliers=outliers,
    )


def comparison_summary(rc: RankComparison) -> dict:
    """JSON-ready summary block for reports."""
    return {
        "n": len(rc.pairing),
        "mean_displacement": rc.mean_displacement,
        "kendall_tau": rc.kendall_tau,
        "footrule": rc.footrule,
        "outlier_indices": list(rc.outliers),
    }


def comparison_csv(rc: RankComparison) -> str:
    """Pairing table: one row per pair with displacement and outlier flag."""
    flagged = set(rc.outliers)
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["rank_a", "rank_b", "displacement", "outlier_flag"])
    for i, (a, b) in enumerate(rc.pairing.pairs, start=1):
        writer.writerow([a, b, abs(a - b), int(i in flagged)])
    return out.getvalue()
