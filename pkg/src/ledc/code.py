"""Codes with a locality structure: encoding, decoding, verification.

A LedcCode couples a locality structure with a generator matrix. The
constructor checks shapes only; whether the matrix actually satisfies
the support pattern and the local MDS property is the job of the
verification functions, which report rather than raise, so defective
matrices can be inspected.

Two independent minimum-distance algorithms are provided on purpose:
exhaustive message enumeration and column-rank certification. Golden
values in the test suite never rest on a single implementation.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from math import comb
from typing import Optional, Sequence

import numpy as np

from .errors import (
    DimensionMismatch,
    NotEnoughSymbols,
    PositionsOutsideGroup,
    SingularSubmatrix,
    TooLarge,
    Underdetermined,
    UnrecoverableErasurePattern,
)
from .field import Felt, PrimeField
from .linalg import MatrixGF, rank, row_vec_mul, solve, submatrix
from .locality import LocalityStructure, constraints, dmax, validate

# Erasure marker inside a received word.
ERASED = None

EXHAUSTIVE_BUDGET = 10**9
RANK_BUDGET = 4 * 10**6
DEFAULT_SUFFIX_CAP = 1 << 19

# ---------- type ----------


@dataclass(frozen=True)
class LedcCode:
    """A locality structure plus a k x n generator matrix over GF(q)."""

    structure: LocalityStructure
    field: PrimeField
    G: MatrixGF
    meta: dict = dc_field(default_factory=dict, compare=False)


def make_code(s: LocalityStructure, f: PrimeField, G: MatrixGF, meta: Optional[dict] = None) -> LedcCode:
    s = validate(s)
    if G.rows != s.k or G.cols != s.n:
        raise DimensionMismatch(
            f"generator must be {s.k}x{s.n}, got {G.rows}x{G.cols}"
        )
    if G.field.q != f.q:
        raise DimensionMismatch(f"matrix over GF({G.field.q}), expected GF({f.q})")
    return LedcCode(s, f, G, meta or {})


def local_generator(c: LedcCode, group: int) -> MatrixGF:
    """The k_i x n_i generator of group `group` (1-based)."""
    s = c.structure
    rows = [i - 1 for i in s.K[group - 1]]
    cols = [j - 1 for j in s.N[group - 1]]
    return submatrix(c.G, rows, cols)


# ---------- encoding and decoding ----------


def encode(c: LedcCode, x: Sequence[Felt]) -> list[Felt]:
    """Codeword x G; positions in N_i depend only on entries in K_i."""
    if len(x) != c.structure.k:
        raise DimensionMismatch(f"data length {len(x)} != k={c.structure.k}")
    return row_vec_mul([v % c.field.q for v in x], c.G)


def local_decode(
    c: LedcCode, group: int, observed: Sequence[tuple[int, Felt]]
) -> dict[int, Felt]:
    """Recover the data symbols K_i from >= k_i symbols inside N_i.

    `observed` pairs are (1-based position, value). Returns a map from
    data index to value. A singular local submatrix means the code
    violates its own local MDS invariant and raises SingularSubmatrix.
    """
    s = c.structure
    if not 1 <= group <= s.m:
        raise PositionsOutsideGroup(f"no group {group} (have 1..{s.m})")
    group_set = set(s.N[group - 1])
    positions = [p for p, _ in observed]
    outside = [p for p in positions if p not in group_set]
    if outside:
        raise PositionsOutsideGroup(
            f"positions {outside} not in group {group}"
        )
    if len(set(positions)) != len(positions):
        raise PositionsOutsideGroup("observed positions must be distinct")
    ki = len(s.K[group - 1])
    if len(observed) < ki:
        raise NotEnoughSymbols(f"{len(observed)} symbols < k_{group}={ki}")
    rows = [i - 1 for i in s.K[group - 1]]
    cols = [p - 1 for p, _ in observed]
    values = [v % c.field.q for _, v in observed]
    try:
        x = solve(submatrix(c.G, rows, cols), values)
    except Underdetermined as exc:
        raise SingularSubmatrix(
            f"group {group}: {len(cols)} observed columns do not determine "
            f"the {ki} local data symbols; local MDS invariant is broken"
        ) from exc
    return {i: v for i, v in zip(s.K[group - 1], x)}


def erasure_decode(c: LedcCode, received: Sequence[Optional[Felt]]) -> list[Felt]:
    """Recover the full data vector from a word with erased positions.

    Succeeds exactly when the surviving columns of G have rank k; in
    particular always for at most d-1 erasures.
    """
    s = c.structure
    if len(received) != s.n:
        raise DimensionMismatch(f"received length {len(received)} != n={s.n}")
    cols = [j for j, v in enumerate(received) if v is not ERASED]
    values = [received[j] % c.field.q for j in cols]
    try:
        return solve(submatrix(c.G, list(range(s.k)), cols), values)
    except Underdetermined as exc:
        raise UnrecoverableErasurePattern(
            f"{s.n - len(cols)} erasures leave rank below k={s.k}"
        ) from exc


# ---------- minimum distance, two ways ----------


def min_distance_exhaustive(c: LedcCode, suffix_cap: int = DEFAULT_SUFFIX_CAP) -> int:
    """Minimum weight over all q^k - 1 nonzero messages.

    The message space is split into prefix x suffix; all suffix codewords
    are tabulated once and each prefix is then a vectorized scan. The
    split point (`suffix_cap`) only partitions the work, never changes
    the result.
    """
    q, k, n = c.field.q, c.structure.k, c.structure.n
    if q**k > EXHAUSTIVE_BUDGET:
        raise TooLarge(f"q^k = {q}^{k} exceeds the enumeration budget")
    dtype = np.int16 if q <= 16383 else np.int32
    G = np.array(c.G.to_rows(), dtype=np.int64)

    k_suf = 0
    while k_suf < k and q ** (k_suf + 1) <= max(suffix_cap, q):
        k_suf += 1
    k_pre = k - k_suf

    # Codewords of every suffix message, suffix symbols = last k_suf rows.
    S = np.zeros((1, n), dtype=dtype)
    for r in range(k_pre, k):
        mult = (np.arange(q, dtype=np.int64)[:, None] * G[r][None, :]) % q
        mult = mult.astype(dtype)
        S = (S[:, None, :] + mult[None, :, :]).reshape(-1, n) % q

    best = n + 1
    for xp in itertools.product(range(q), repeat=k_pre):
        prefix_zero = not any(xp)
        cp = (np.array(xp, dtype=np.int64) @ G[:k_pre]) % q if k_pre else np.zeros(n, dtype=np.int64)
        target = ((q - cp) % q).astype(dtype)
        zero_counts = np.count_nonzero(S == target, axis=1)
        if prefix_zero:
            if zero_counts.shape[0] == 1:
                continue
            zero_counts = zero_counts[1:]
        weight = n - int(zero_counts.max())
        if weight < best:
            best = weight
            if best <= 1:
                break
    return best


def distance_at_least(c: LedcCode, d0: int) -> bool:
    """Certify d >= d0: every set of d0 - 1 erasures leaves rank k."""
    k, n = c.structure.k, c.structure.n
    if d0 <= 0:
        return True
    erasures = d0 - 1
    if erasures > n - k:
        return False
    if comb(n, erasures) > RANK_BUDGET:
        raise TooLarge(f"C({n},{erasures}) erasure patterns exceed the budget")
    all_cols = list(range(n))
    all_rows = list(range(k))
    for erased in itertools.combinations(all_cols, erasures):
        surviving = [j for j in all_cols if j not in erased]
        if rank(submatrix(c.G, all_rows, surviving)) < k:
            return False
    return True


def min_distance_rank(c: LedcCode) -> int:
    """Largest d such that every (n - d + 1)-column submatrix has rank k.

    Returns 0 when G itself is rank deficient (some nonzero message maps
    to the zero codeword, so no distance is defined in the usual sense).
    """
    k, n = c.structure.k, c.structure.n
    if rank(c.G) < k:
        return 0
    total = sum(comb(n, e) for e in range(1, n - k + 2))
    if total > RANK_BUDGET:
        raise TooLarge(f"{total} column subsets exceed the budget")
    d = 1
    while distance_at_least(c, d + 1):
        d += 1
    return d


# ---------- verification ----------


def support_violations(c: LedcCode) -> list[tuple[int, int]]:
    """(data index, position) pairs where G is nonzero outside the reach."""
    view = constraints(c.structure)
    bad = []
    for i in range(1, c.structure.k + 1):
        allowed = view.R_of(i)
        for j in range(1, c.structure.n + 1):
            if c.G.at(i - 1, j - 1) != 0 and j not in allowed:
                bad.append((i, j))
    return bad


def verify_local_mds(c: LedcCode) -> dict[int, bool]:
    """Group -> does G[K_i, N_i] generate an [n_i, k_i] MDS code.

    A local code is MDS exactly when every k_i-column submatrix of its
    generator is invertible.
    """
    out = {}
    for g in range(1, c.structure.m + 1):
        local = local_generator(c, g)
        ki = local.rows
        ok = True
        for cols in itertools.combinations(range(local.cols), ki):
            if rank(submatrix(local, list(range(ki)), list(cols))) < ki:
                ok = False
                break
        out[g] = ok
    return out


@dataclass(frozen=True)
class VerifyReport:
    support_ok: bool
    local_mds: tuple[bool, ...]
    distance: int
    dmax: int
    optimal: bool
    method: str

    @property
    def local_mds_ok(self) -> bool:
        return all(self.local_mds)

    @property
    def all_ok(self) -> bool:
        return self.support_ok and self.local_mds_ok and self.optimal


def verify_ledc(c: LedcCode, distance_method: str = "auto") -> VerifyReport:
    """Aggregate check: support pattern, local MDS, distance, optimality.

    distance_method is one of auto, exhaustive, rank, both; auto uses
    exhaustive enumeration within its budget and rank certification
    beyond it. Under `both` the two algorithms must agree.
    """
    q, k = c.field.q, c.structure.k
    method = distance_method
    if method == "auto":
        method = "exhaustive" if q**k <= 10**7 else "rank"
    if method == "exhaustive":
        distance = min_distance_exhaustive(c)
    elif method == "rank":
        distance = min_distance_rank(c)
    elif method == "both":
        distance = min_distance_exhaustive(c)
        by_rank = min_distance_rank(c)
        assert distance == by_rank, (
            f"distance algorithms disagree: enumeration {distance}, rank {by_rank}"
        )
    else:
        raise ValueError(f"unknown distance method {distance_method!r}")
    mds = verify_local_mds(c)
    bound = dmax(c.structure)
    return VerifyReport(
        support_ok=not support_violations(c),
        local_mds=tuple(mds[g] for g in sorted(mds)),
        distance=distance,
        dmax=bound,
        optimal=distance == bound,
        method=method,
    )
