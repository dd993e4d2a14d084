"""Minimum-distance upper bounds from column-subset permanents.

Given a J x L weight matrix A and a puncture set P, the basic bound
(``theorem1_bound``) minimizes

    sum over i in S\\P of perm(A with columns S, column i deleted)

over all column subsets S of size J+1.  The tightened bound
(``theorem2_bound``) additionally allows removing a set T of rows that
are identically zero on S, with |S| + |T| = J + 1; the T = {} candidates
reproduce the basic bound, so the tightened value is never larger.

Candidates whose sum is zero are excluded (the construction behind them
is the all-zero codeword); candidates that are zero only because every
nonzero term sits on a punctured column are excluded as well and counted
separately.  If every candidate is excluded the bound is reported as
None rather than a vacuous 0.

The search evaluates whole batches of candidate subsets at once: the
inclusion-exclusion column sums over row subsets are shared by every
candidate for a given T, so one (2^J x L) table serves the entire
enumeration.  Batches run on int64 when a conservative magnitude bound
proves that nothing can overflow, and fall back to exact big integers
otherwise.  Ties between minimizing candidates are broken by the
lexicographically smallest (T, S) pair, which makes the result
independent of batch shape and worker count.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator, Sequence

import numpy as np

from ._kernel import augmented_sums
from .matrix import PunctureSet, WeightMatrix
from .permanent import _family_int_rows

EXHAUSTIVE = "exhaustive"
SAMPLED = "sample"

_INT64_GUARD = 1 << 62
_BATCH = 1 << 13


@dataclass(frozen=True)
class BoundQuery:
    """Inputs of one bound computation."""

    weights: WeightMatrix
    puncture: PunctureSet = field(default_factory=PunctureSet)
    max_removed_rows: int = 2
    mode: str = EXHAUSTIVE
    samples: int | None = None
    seed: int | None = None

    def __post_init__(self) -> None:
        j = self.weights.j
        self.puncture.validate_for(j, self.weights.l)
        if not 0 <= self.max_removed_rows < j:
            raise ValueError(f"max_removed_rows must be in [0, {j}), got {self.max_removed_rows}")
        if self.mode not in (EXHAUSTIVE, SAMPLED):
            raise ValueError(f"unknown search mode {self.mode!r}")
        if self.mode == SAMPLED:
            if not self.samples or self.samples < 1:
                raise ValueError("sampled mode needs a positive sample count")
            if self.seed is None:
                raise ValueError("sampled mode needs an explicit seed for reproducibility")


@dataclass(frozen=True)
class BoundReport:
    """Result of a bound search, including the minimizing witness."""

    bound_value: int | None
    witness_s: tuple[int, ...] | None
    witness_t: tuple[int, ...] | None
    terms: tuple[int, ...] | None
    candidates_examined: int
    exhaustive: bool
    zero_candidates: int
    transmitted_zero_candidates: int

    def to_json_dict(self) -> dict:
        return {
            "bound_value": self.bound_value,
            "witness_s": list(self.witness_s) if self.witness_s is not None else None,
            "witness_t": list(self.witness_t) if self.witness_t is not None else None,
            "terms": list(self.terms) if self.terms is not None else None,
            "candidates_examined": self.candidates_examined,
            "exhaustive": self.exhaustive,
            "zero_candidates": self.zero_candidates,
            "transmitted_zero_candidates": self.transmitted_zero_candidates,
        }


def _removal_sets(q: BoundQuery) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Feasible (T, allowed columns) pairs in lexicographic T order.

    A removal set T is feasible when the columns on which every removed
    row vanishes leave room for a subset S of size J - |T| + 1.
    """
    a = q.weights
    out = []
    removals: list[tuple[int, ...]] = []
    for size in range(q.max_removed_rows + 1):
        removals.extend(itertools.combinations(range(a.j), size))
    removals.sort()
    for t in removals:
        allowed = tuple(
            c for c in range(a.l) if all(a.entry(j, c) == 0 for j in t)
        )
        if len(allowed) >= a.j - len(t) + 1:
            out.append((t, allowed))
    return out


def enumerate_candidates(q: BoundQuery) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Yield legal (S, T) candidates.

    Exhaustive mode yields every candidate exactly once, ordered by the
    lexicographic (T, S) key used for tie-breaking.  Sampled mode yields
    ``q.samples`` candidates drawn reproducibly from ``q.seed``.
    """
    groups = _removal_sets(q)
    if not groups:
        return
    if q.mode == EXHAUSTIVE:
        for t, allowed in groups:
            r1 = q.weights.j - len(t) + 1
            for s in itertools.combinations(allowed, r1):
                yield s, t
        return
    seq = np.random.SeedSequence(q.seed)
    rng = np.random.default_rng(seq)
    group_idx = rng.integers(0, len(groups), size=q.samples)
    children = seq.spawn(len(groups))
    # Draw each group's subsets from its own child stream so the result
    # does not depend on how draws are batched.
    per_group: list[Iterator[tuple[int, ...]]] = []
    for g, (t, allowed) in enumerate(groups):
        count = int(np.count_nonzero(group_idx == g))
        per_group.append(iter(_sample_subsets(children[g], allowed, q.weights.j - len(t) + 1, count)))
    for g in group_idx:
        t, _ = groups[g]
        yield next(per_group[g]), t


def _sample_subsets(
    child: np.random.SeedSequence, allowed: tuple[int, ...], r1: int, count: int
) -> list[tuple[int, ...]]:
    """``count`` uniform size-r1 subsets of ``allowed``, sorted ascending."""
    if count == 0:
        return []
    rng = np.random.default_rng(child)
    m = len(allowed)
    cols = np.asarray(allowed)
    picks = np.argsort(rng.random((count, m)), axis=1)[:, :r1]
    picks.sort(axis=1)
    return [tuple(int(v) for v in cols[row]) for row in picks]


class _GroupEngine:
    """Shared per-T state for batched candidate evaluation."""

    def __init__(self, a: WeightMatrix, t: tuple[int, ...], puncture: PunctureSet):
        self.t = t
        reduced = a.remove_rows(t) if t else a
        self.rows = [list(row) for row in reduced.rows]
        self.jr = reduced.j
        self.a_np = np.asarray(self.rows, dtype=np.int64)
        self.nonzero = self.a_np != 0
        self.punctured = np.zeros(a.l, dtype=bool)
        for c in puncture.columns:
            self.punctured[c] = True
        self.uvec = (~self.punctured).astype(np.int64)
        self.ones = np.ones(a.l, dtype=np.int64)
        m = 1 << self.jr
        picks = ((np.arange(m)[:, None] >> np.arange(self.jr)[None, :]) & 1).astype(np.int64)
        self.colsums = picks @ self.a_np
        parity = picks.sum(axis=1)
        self.signs = np.where((self.jr - parity) & 1, -1, 1).astype(np.int64)
        # Largest possible |accumulated value|; if it fits far inside
        # int64 the vectorized kernel is exact, otherwise candidates are
        # evaluated with big integers.
        colmax = max(1, int(self.a_np.sum(axis=0).max()))
        self.int64_safe = m * (colmax + 1) ** (self.jr + 1) < _INT64_GUARD

    def _sums_exact(self, cands: np.ndarray, transmitted_only: bool) -> list[int]:
        vals = []
        for srow in cands:
            fam = _family_int_rows([[row[c] for c in srow] for row in self.rows])
            if transmitted_only:
                vals.append(sum(v for c, v in zip(srow, fam) if not self.punctured[c]))
            else:
                vals.append(sum(fam))
        return vals

    def eval_batch(self, s_batch: np.ndarray) -> dict:
        """Evaluate a (K, jr+1) batch of column subsets.

        Returns counters plus the best candidate of the batch as a
        (value, s_tuple) pair; ties inside the batch already resolve to
        the lexicographically smallest S.
        """
        k = len(s_batch)
        if self.int64_safe:
            trans = augmented_sums(self.colsums, self.signs, self.nonzero, s_batch, self.uvec)
        else:
            trans = self._sums_exact(s_batch, transmitted_only=True)
        excluded = [i for i, v in enumerate(trans) if v == 0]
        zero = trans_zero = 0
        if excluded:
            # Zero transmitted sum: tell apart all-zero constructions from
            # those whose weight sits entirely on punctured columns.
            sub = s_batch[excluded]
            if self.int64_safe:
                full = augmented_sums(self.colsums, self.signs, self.nonzero, sub, self.ones)
            else:
                full = self._sums_exact(sub, transmitted_only=False)
            trans_zero = int(np.count_nonzero(np.asarray(full, dtype=object) != 0))
            zero = len(excluded) - trans_zero
        best = None
        if len(excluded) < k:
            live = [i for i, v in enumerate(trans) if v != 0]
            minval = min(trans[i] for i in live)
            ties = [i for i in live if trans[i] == minval]
            idx = min(ties, key=lambda i: tuple(s_batch[i]))
            best = (int(minval), tuple(int(c) for c in s_batch[idx]))
        return {
            "examined": k,
            "zero": zero,
            "trans_zero": trans_zero,
            "best": best,
        }


def _batched(iterable: Iterator, size: int) -> Iterator[list]:
    while True:
        chunk = list(itertools.islice(iterable, size))
        if not chunk:
            return
        yield chunk


def _search(q: BoundQuery, workers: int) -> BoundReport:
    a = q.weights
    if a.l < a.j + 1:
        raise ValueError(f"need L >= J+1 columns, got J={a.j}, L={a.l}")
    groups = _removal_sets(q)
    engines = {t: _GroupEngine(a, t, q.puncture) for t, _ in groups}

    jobs: list[tuple[tuple[int, ...], np.ndarray]] = []
    if q.mode == EXHAUSTIVE:
        for t, allowed in groups:
            r1 = a.j - len(t) + 1
            combos = itertools.combinations(allowed, r1)
            for chunk in _batched(iter(combos), _BATCH):
                jobs.append((t, np.asarray(chunk, dtype=np.int64)))
    else:
        seq = np.random.SeedSequence(q.seed)
        rng = np.random.default_rng(seq)
        group_idx = rng.integers(0, len(groups), size=q.samples)
        children = seq.spawn(len(groups))
        for g, (t, allowed) in enumerate(groups):
            count = int(np.count_nonzero(group_idx == g))
            if count == 0:
                continue
            r1 = a.j - len(t) + 1
            subsets = _sample_subsets(children[g], allowed, r1, count)
            for start in range(0, count, _BATCH):
                chunk = subsets[start : start + _BATCH]
                jobs.append((t, np.asarray(chunk, dtype=np.int64)))

    def run(job: tuple[tuple[int, ...], np.ndarray]) -> tuple[tuple[int, ...], dict]:
        t, batch = job
        return t, engines[t].eval_batch(batch)

    if workers > 1 and len(jobs) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(run, jobs))
    else:
        results = [run(job) for job in jobs]

    examined = zero = trans_zero = 0
    best: tuple[int, tuple[int, ...], tuple[int, ...]] | None = None
    for t, res in results:
        examined += res["examined"]
        zero += res["zero"]
        trans_zero += res["trans_zero"]
        if res["best"] is not None:
            value, s = res["best"]
            key = (value, t, s)
            if best is None or key < best:
                best = key
    if best is None:
        return BoundReport(
            bound_value=None,
            witness_s=None,
            witness_t=None,
            terms=None,
            candidates_examined=examined,
            exhaustive=q.mode == EXHAUSTIVE,
            zero_candidates=zero,
            transmitted_zero_candidates=trans_zero,
        )
    value, t, s = best
    reduced = a.remove_rows(t) if t else a
    terms = _family_int_rows([[row[c] for c in s] for row in reduced.rows])
    check = sum(v for c, v in zip(s, terms) if c not in q.puncture)
    if check != value:
        raise AssertionError(f"witness recomputation mismatch: {check} != {value}")
    return BoundReport(
        bound_value=value,
        witness_s=s,
        witness_t=t,
        terms=tuple(terms),
        candidates_examined=examined,
        exhaustive=q.mode == EXHAUSTIVE,
        zero_candidates=zero,
        transmitted_zero_candidates=trans_zero,
    )


def theorem1_bound(q: BoundQuery, workers: int = 1) -> BoundReport:
    """Bound over size-(J+1) column subsets with no row removal."""
    if q.max_removed_rows != 0:
        raise ValueError("theorem1_bound requires max_removed_rows = 0")
    return _search(q, workers)


def theorem2_bound(q: BoundQuery, workers: int = 1) -> BoundReport:
    """Tightened bound allowing removal of rows that vanish on S.

    Includes every no-removal candidate via T = {}, so the result is
    never larger than :func:`theorem1_bound` when both are defined.
    """
    return _search(q, workers)
