"""Classical bounds by exhaustive enumeration of deterministic strategies.

A Bell expression here is a plain multiset-free list of probability terms
P(a_s = a, b_t = b).  Under any joint distribution its value is bounded by
the largest number of terms a single deterministic configuration
(a_1..a_8, b_1..b_8) can satisfy, so the bound is found by scanning all
3**16 configurations.

The scan is separable: settings on Bob's side decouple once Alice's tuple
is fixed.  For every Alice tuple the table M[t][b] counts the terms with
Bob setting t and outcome b that Alice already satisfies; the coefficient
of a full configuration is then a sum of eight lookups, and the per-tuple
maximum is the sum of per-setting maxima.  The full histogram costs one
(3**8 x 24) by (24 x 3**8) product, evaluated in chunks of Alice tuples
that may run in parallel and are merged by summation.
"""

import itertools
import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

import numpy as np

from .orbit import Orbit, OrbitPair

__all__ = [
    "Term",
    "BellExpression",
    "StrategyHistogram",
    "bell_terms",
    "classical_max",
    "classical_histogram",
    "optimal_classical_strategy",
    "coefficient",
    "configuration_index",
    "configuration_from_index",
    "histogram_csv",
]


class Term(NamedTuple):
    """One probability term P(a_s = a, b_t = b)."""

    s: int
    a: int
    t: int
    b: int


@dataclass(frozen=True)
class BellExpression:
    """An ordered list of distinct probability terms plus its provenance."""

    terms: tuple
    pairs: tuple = ()
    n_settings: int = 8
    n_outcomes: int = 3

    def __post_init__(self):
        terms = tuple(Term(*t) for t in self.terms)
        object.__setattr__(self, "terms", terms)
        for term in terms:
            if not (1 <= term.s <= self.n_settings and 1 <= term.t <= self.n_settings):
                raise ValueError(f"setting out of range in {term}")
            if not (0 <= term.a < self.n_outcomes and 0 <= term.b < self.n_outcomes):
                raise ValueError(f"outcome out of range in {term}")
        if len(set(terms)) != len(terms):
            seen = set()
            dup = next(t for t in terms if t in seen or seen.add(t))
            raise ValueError(f"duplicate term {dup}")

    def __len__(self):
        return len(self.terms)


def bell_terms(pairs, orbit: Orbit) -> BellExpression:
    """Expand labeled orbit pairs into their probability terms.

    For each pair and each group element g, the images of the two seeds are
    located in the labeled orbit, giving one term per (pair, element) in
    canonical order.  Locating images uses the group product on recorded
    element indices, which is exact.  Duplicate terms across pairs raise
    ValueError.
    """
    pairs = tuple(p if isinstance(p, OrbitPair) else OrbitPair(*p) for p in pairs)
    product = orbit.group.product_table
    terms = []
    for pair in pairs:
        h_alice = orbit.element_of(*pair.alice)
        h_bob = orbit.element_of(*pair.bob)
        for g in range(orbit.group.order):
            try:
                s, a = orbit.label_of_element(int(product[g, h_alice]))
                t, b = orbit.label_of_element(int(product[g, h_bob]))
            except KeyError as exc:  # cannot happen for a full labeled orbit
                raise RuntimeError(f"orbit lookup miss for element {exc}") from exc
            terms.append(Term(s, a, t, b))
    return BellExpression(tuple(terms), pairs, n_settings=len(orbit.triples))


@dataclass(frozen=True)
class StrategyHistogram:
    """Configuration counts per coefficient value, including the zero bin."""

    counts: dict  # c -> number of configurations, complete over 0..n_terms
    c_max: int
    n_terms: int
    n_settings: int

    def total(self):
        return sum(self.counts.values())

    def weighted_total(self):
        return sum(c * n for c, n in self.counts.items())

    def as_dict(self):
        return {
            "counts": {str(c): n for c, n in self.counts.items()},
            "c_max": self.c_max,
            "n_terms": self.n_terms,
            "total": self.total(),
        }

    def to_json(self):
        return json.dumps(self.as_dict(), sort_keys=True, indent=2)


def histogram_csv(hist: StrategyHistogram) -> str:
    """CSV rows "c,count" for c = 1..20 (or further when c_max exceeds 20)."""
    top = max(20, hist.c_max)
    lines = ["c,count"]
    lines += [f"{c},{hist.counts.get(c, 0)}" for c in range(1, top + 1)]
    return "\n".join(lines) + "\n"


@lru_cache(maxsize=8)
def _profiles(n_settings, n_outcomes=3):
    """All outcome tuples of one party, in lexicographic order."""
    arr = np.array(
        list(itertools.product(range(n_outcomes), repeat=n_settings)), dtype=np.int8
    )
    arr.setflags(write=False)
    return arr


@lru_cache(maxsize=8)
def _onehot_profiles(n_settings, n_outcomes=3):
    prof = _profiles(n_settings, n_outcomes)
    n = len(prof)
    onehot = np.zeros((n, n_settings * n_outcomes), dtype=np.float32)
    for t in range(n_settings):
        onehot[np.arange(n), t * n_outcomes + prof[:, t]] = 1.0
    onehot.setflags(write=False)
    return onehot


def _satisfaction_table(terms, n_settings, n_outcomes=3):
    """F[s-1, a, t-1, b] = multiplicity of the term (s, a, t, b)."""
    table = np.zeros((n_settings, n_outcomes, n_settings, n_outcomes), dtype=np.int16)
    for s, a, t, b in terms:
        table[s - 1, a, t - 1, b] += 1
    return table


def _per_alice_tables(terms, n_settings, n_outcomes=3):
    """M[i, t, b]: terms with Bob pair (t, b) satisfied by Alice tuple i."""
    table = _satisfaction_table(terms, n_settings, n_outcomes)
    prof = _profiles(n_settings, n_outcomes)
    m = np.zeros((len(prof), n_settings, n_outcomes), dtype=np.int16)
    for s in range(n_settings):
        m += table[s][prof[:, s]]
    return m


def _max_coefficient(terms, n_settings, n_outcomes=3):
    m = _per_alice_tables(terms, n_settings, n_outcomes)
    return int(m.max(axis=2).sum(axis=1).max())


def _histogram_counts(terms, n_settings, n_outcomes=3, chunk_size=729, n_jobs=1):
    m = _per_alice_tables(terms, n_settings, n_outcomes)
    flat = m.reshape(len(m), n_settings * n_outcomes)
    onehot = _onehot_profiles(n_settings, n_outcomes)
    n_terms = len(terms)

    def one_chunk(lo):
        block = flat[lo:lo + chunk_size].astype(np.float32) @ onehot.T
        return np.bincount(
            block.astype(np.int64).ravel(), minlength=n_terms + 1
        )

    starts = range(0, len(flat), chunk_size)
    if n_jobs > 1:
        with ThreadPoolExecutor(max_workers=n_jobs) as pool:
            parts = list(pool.map(one_chunk, starts))
    else:
        parts = [one_chunk(lo) for lo in starts]
    counts = np.zeros(n_terms + 1, dtype=np.int64)
    for part in parts:
        counts += part

    fast_max = int(m.max(axis=2).sum(axis=1).max()) if n_terms else 0
    hist_max = int(np.flatnonzero(counts)[-1]) if counts.any() else 0
    if fast_max != hist_max:
        raise RuntimeError(
            f"separable maximum {fast_max} disagrees with histogram {hist_max}"
        )
    return counts


def classical_max(expr: BellExpression) -> int:
    """Largest number of terms any deterministic configuration satisfies.

    Uses the separable fast path: per Alice tuple, Bob's settings decouple
    and contribute their per-setting maxima.
    """
    if not expr.terms:
        return 0
    return _max_coefficient(expr.terms, expr.n_settings, expr.n_outcomes)


def classical_histogram(expr: BellExpression, chunk_size=729, n_jobs=1) -> StrategyHistogram:
    """Coefficient histogram over all deterministic configurations.

    `chunk_size` groups Alice tuples into independent work items; with
    `n_jobs` > 1 the chunks run on a thread pool (the heavy lifting is a
    matrix product that releases the GIL).  The merged result does not
    depend on chunking or scheduling.
    """
    counts = _histogram_counts(
        expr.terms, expr.n_settings, expr.n_outcomes, chunk_size, n_jobs
    )
    c_max = int(np.flatnonzero(counts)[-1]) if counts.any() else 0
    return StrategyHistogram(
        counts={c: int(counts[c]) for c in range(len(counts))},
        c_max=c_max,
        n_terms=len(expr.terms),
        n_settings=expr.n_settings,
    )


def optimal_classical_strategy(expr: BellExpression):
    """A configuration attaining the classical maximum.

    Ties are broken toward the lexicographically smallest
    (a_1..a_S, b_1..b_S): Alice tuples are scanned in lexicographic order
    and the first maximizer wins, then each of Bob's settings takes its
    smallest maximizing outcome.
    """
    n = expr.n_settings
    if not expr.terms:
        return (0,) * n, (0,) * n
    m = _per_alice_tables(expr.terms, n, expr.n_outcomes)
    scores = m.max(axis=2).sum(axis=1)
    best = int(np.argmax(scores))
    f_alice = tuple(int(x) for x in _profiles(n, expr.n_outcomes)[best])
    f_bob = tuple(int(x) for x in np.argmax(m[best], axis=1))
    return f_alice, f_bob


def coefficient(expr: BellExpression, f_alice, f_bob) -> int:
    """Number of terms satisfied by the deterministic strategy pair."""
    return sum(
        1
        for s, a, t, b in expr.terms
        if f_alice[s - 1] == a and f_bob[t - 1] == b
    )


def configuration_index(f_alice, f_bob, n_outcomes=3) -> int:
    """Base-3 encoding of a configuration: Alice digits first, little-endian
    in the setting index, Bob digits above them."""
    idx = 0
    for k, a in enumerate(f_alice):
        idx += int(a) * n_outcomes ** k
    shift = len(f_alice)
    for k, b in enumerate(f_bob):
        idx += int(b) * n_outcomes ** (shift + k)
    return idx


def configuration_from_index(index, n_settings, n_outcomes=3):
    digits = []
    for _ in range(2 * n_settings):
        digits.append(index % n_outcomes)
        index //= n_outcomes
    return tuple(digits[:n_settings]), tuple(digits[n_settings:])
