"""Hot loop of the bound search: batched augmented-permanent sums.

The sum of cofactor permanents over a column subset S equals one
permanent of the square matrix obtained by stacking an indicator row u
on top of A' restricted to S (expansion along the top row).  With
inclusion-exclusion over row subsets of A' this becomes

    sum_R sign(R) * [ prod_c (sigma_c(R) + u_c)  -  prod_c sigma_c(R) ]

where sigma are column sums over the subset R.  The (2^jr x L) table of
column sums is shared by every candidate, so evaluating a candidate is
one tight loop over row subsets.

The loop is JIT-compiled with numba when available (serial and nogil, so
thread-pool workers scale and stay deterministic) and falls back to a
vectorized numpy version otherwise.  Both paths are exact on int64; the
caller guards against overflow and reroutes to big integers if needed.
"""

from __future__ import annotations

import numpy as np

try:
    from numba import njit
except ImportError:  # pragma: no cover - numba is an optional accelerator
    njit = None


def _augmented_sums_py(
    colsums: np.ndarray,
    signs: np.ndarray,
    nonzero: np.ndarray,
    cands: np.ndarray,
    uvec: np.ndarray,
) -> np.ndarray:
    out = np.zeros(len(cands), dtype=np.int64)
    m, _ = colsums.shape
    w = cands.shape[1]
    # Keep the (m, chunk, w) temporaries near 16 MB.
    chunk = max(1, (1 << 21) // (m * w))
    for start in range(0, len(cands), chunk):
        part = cands[start : start + chunk]
        live = nonzero[:, part].any(axis=2).all(axis=0)
        if not live.any():
            continue
        alive = part[live]
        local = colsums[:, alive]  # (m, k, w)
        u = uvec[alive]
        pu = (local + u[None, :, :]).prod(axis=2)
        p0 = local.prod(axis=2)
        out[start : start + len(part)][live] = signs @ (pu - p0)
    return out


if njit is not None:

    @njit(cache=True, nogil=True)
    def _augmented_sums_nb(colsums, signs, nonzero, cands, uvec):  # pragma: no cover
        k, w = cands.shape
        m = colsums.shape[0]
        jr = nonzero.shape[0]
        out = np.zeros(k, dtype=np.int64)
        for i in range(k):
            live = True
            for r in range(jr):
                hit = False
                for ci in range(w):
                    if nonzero[r, cands[i, ci]]:
                        hit = True
                        break
                if not hit:
                    live = False
                    break
            if not live:
                continue
            acc = np.int64(0)
            for mm in range(m):
                p0 = np.int64(1)
                pu = np.int64(1)
                for ci in range(w):
                    c = cands[i, ci]
                    s = colsums[mm, c]
                    p0 *= s
                    pu *= s + uvec[c]
                acc += signs[mm] * (pu - p0)
            out[i] = acc
        return out


def augmented_sums(
    colsums: np.ndarray,
    signs: np.ndarray,
    nonzero: np.ndarray,
    cands: np.ndarray,
    uvec: np.ndarray,
) -> np.ndarray:
    """Per-candidate sums of cofactor permanents weighted by ``uvec``.

    ``colsums`` has shape (2^jr, L), ``signs`` (2^jr,), ``nonzero`` is the
    (jr, L) support of the reduced matrix, ``cands`` (K, jr+1) holds
    column subsets, and ``uvec`` is a 0/1 weight per column (1 for a
    transmitted column).  Candidates with a dead row evaluate to 0.
    """
    if njit is not None:
        return _augmented_sums_nb(colsums, signs, nonzero, cands, uvec)
    return _augmented_sums_py(colsums, signs, nonzero, cands, uvec)
