"""Uniform position checking and containment transfer.

A configuration has the uniform position property when equal-size subsets
all share one Hilbert function.  Rather than comparing subsets pairwise,
each subset is compared against the truncation min(H(X, i), n) that uniform
position forces; any mismatch disproves uniform position, and a same-size
mate with a different value is then located to serve as a self-contained
witness.  Exhaustive coverage of every size is required before the verdict
``holds`` is issued; sampled or size-restricted runs can only report
``holds_on_sample``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from math import comb

from .errors import BudgetExceeded, NotASubset
from .fields import FieldElement
from .geometry import PointConfiguration, collinear
from .hilbert import (
    evaluation_rows,
    profile,
    subset_hilbert_value,
    truncation_predict,
)
from .linalg import ExactMatrix, kernel_basis, rank_of_raw_rows

VERDICT_HOLDS = "holds"
VERDICT_FAILS = "fails"
VERDICT_HOLDS_ON_SAMPLE = "holds_on_sample"


@dataclass(frozen=True)
class UppWitness:
    """Two equal-size subsets whose Hilbert values differ at one degree."""

    subset_a: tuple
    subset_b: tuple
    degree: int
    value_a: int
    value_b: int


@dataclass(frozen=True)
class UppReport:
    mode: str
    verdict: str
    witness: UppWitness | None
    stats: dict
    sizes: tuple
    predicted_mismatch: tuple | None = None  # (subset, degree, value, predicted)


def _subset_mismatch(config, prof, indices):
    """First degree where the subset's Hilbert value departs from truncation."""
    k = len(indices)
    horizon = max(len(prof.values) - 1, k - 1)
    for degree in range(horizon + 1):
        predicted = truncation_predict(prof, k, degree)
        actual = subset_hilbert_value(config, indices, degree)
        if actual != predicted:
            return degree, actual, predicted
        if actual == k:
            break
    return None


def _find_mate(config, indices, degree, value, enumerated):
    """Same-size subset whose value at ``degree`` differs from ``value``."""
    for other in enumerated:
        if other == indices:
            continue
        if subset_hilbert_value(config, other, degree) != value:
            return other
    return None


def upp_check(
    config: PointConfiguration,
    mode: str = "exhaustive",
    sample_count: int = 0,
    seed: int = 0,
    sizes=None,
    budget: int = 10**6,
) -> UppReport:
    """Check the uniform position property.

    Exhaustive mode walks every subset of the requested sizes in
    lexicographic index order (all sizes by default) and stops at the first
    violation, so the reported witness is the lexicographically smallest.
    Sampled mode draws ``sample_count`` distinct subsets per size with the
    given seed.  Deterministic either way.
    """
    n = len(config)
    if n < 1:
        raise ValueError("need at least one point")
    if sizes is None:
        requested_sizes = tuple(range(1, n + 1))
        full_coverage = mode == "exhaustive"
    else:
        requested_sizes = tuple(sorted(set(sizes)))
        if any(s < 1 or s > n for s in requested_sizes):
            raise ValueError("subset sizes out of range")
        full_coverage = mode == "exhaustive" and requested_sizes == tuple(
            range(1, n + 1)
        )

    prof = profile(config)
    stats: dict = {}

    if mode == "exhaustive":
        total = sum(comb(n, k) for k in requested_sizes)
        if total > budget:
            raise BudgetExceeded(
                f"{total} subsets exceed the configured budget {budget}"
            )

        def subsets_of(k):
            return combinations(range(n), k)

    elif mode == "sampled":
        rng = random.Random(seed)

        def subsets_of(k, _rng=rng):
            cap = min(sample_count, comb(n, k))
            seen = set()
            while len(seen) < cap:
                pick = tuple(sorted(_rng.sample(range(n), k)))
                if pick not in seen:
                    seen.add(pick)
                    yield pick

        full_coverage = False
    else:
        raise ValueError(f"unknown mode {mode!r}")

    for k in requested_sizes:
        examined = 0
        enumerated = []
        for indices in subsets_of(k):
            indices = tuple(indices)
            enumerated.append(indices)
            examined += 1
            hit = _subset_mismatch(config, prof, indices)
            if hit is None:
                continue
            degree, actual, predicted = hit
            stats[k] = examined
            # a mismatch against truncation disproves uniform position; a
            # same-size mate makes the witness re-checkable on its own
            mate_pool = enumerated if mode == "sampled" else combinations(range(n), k)
            mate = _find_mate(config, indices, degree, actual, mate_pool)
            witness = None
            if mate is not None:
                witness = UppWitness(
                    subset_a=indices,
                    subset_b=tuple(mate),
                    degree=degree,
                    value_a=actual,
                    value_b=subset_hilbert_value(config, mate, degree),
                )
            return UppReport(
                mode=mode,
                verdict=VERDICT_FAILS,
                witness=witness,
                stats=stats,
                sizes=requested_sizes,
                predicted_mismatch=(indices, degree, actual, predicted),
            )
        stats[k] = examined

    verdict = VERDICT_HOLDS if full_coverage else VERDICT_HOLDS_ON_SAMPLE
    return UppReport(
        mode=mode,
        verdict=verdict,
        witness=None,
        stats=stats,
        sizes=requested_sizes,
    )


def collinear_triples(config: PointConfiguration):
    """All index triples lying on a line, in lexicographic order."""
    out = []
    pts = config.points
    for i, j, k in combinations(range(len(pts)), 3):
        if collinear(pts[i], pts[j], pts[k]):
            out.append((i, j, k))
    return out


@dataclass(frozen=True)
class ContainmentReport:
    """Outcome of the containment-transfer check at one degree."""

    degree: int
    subset: tuple
    h1_subset: int
    h0_subset: int
    h0_full: int
    triggered: bool
    kernels_equal: bool | None
    upp_assumed: bool

    @property
    def passed(self) -> bool:
        """True when the transfer conclusion holds or was not triggered."""
        return (not self.triggered) or bool(self.kernels_equal)


def _resolve_subset(config, subset):
    if isinstance(subset, PointConfiguration):
        index_of = {pt: i for i, pt in enumerate(config.points)}
        try:
            return tuple(index_of[pt] for pt in subset)
        except KeyError as exc:
            raise NotASubset("subset contains a point outside the configuration") from exc
    indices = tuple(int(i) for i in subset)
    if len(set(indices)) != len(indices):
        raise NotASubset("subset indices repeat")
    if any(i < 0 or i >= len(config) for i in indices):
        raise NotASubset("subset index out of range")
    return indices


def containment_check(
    config: PointConfiguration, subset, degree: int, upp_assumed: bool = True
) -> ContainmentReport:
    """Test containment transfer from a subset to the whole configuration.

    When the subset fails to impose independent conditions in the given
    degree (h1 nonzero), uniform position forces every degree-``degree``
    curve through the subset to contain all of X; this compares the exact
    kernels of both evaluation matrices.  Without uniform position the
    conclusion can fail, which the report records honestly.
    """
    indices = _resolve_subset(config, subset)
    spec = config.spec
    rows = evaluation_rows(config, degree)

    sub_rows = [rows[i] for i in indices]
    h_sub = rank_of_raw_rows(spec, sub_rows)
    ncols = len(rows[0]) if rows else 0
    h1_sub = len(indices) - h_sub
    h0_sub = ncols - h_sub
    h0_full = ncols - rank_of_raw_rows(spec, list(rows))

    kernels_equal = None
    if h1_sub != 0:

        def to_matrix(rws):
            return ExactMatrix(
                spec, [[FieldElement._make(spec, v) for v in r] for r in rws]
            )

        k_sub = kernel_basis(to_matrix(sub_rows))
        k_full = kernel_basis(to_matrix(list(rows)))
        kernels_equal = k_sub == k_full

    return ContainmentReport(
        degree=degree,
        subset=indices,
        h1_subset=h1_sub,
        h0_subset=h0_sub,
        h0_full=h0_full,
        triggered=h1_sub != 0,
        kernels_equal=kernels_equal,
        upp_assumed=upp_assumed,
    )
