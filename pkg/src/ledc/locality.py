"""Locality structures and the optimal-distance bound.

A locality structure lists, for each of m groups, which data symbols
K_i feed it and which coded positions N_i it owns. The K_i may overlap;
the N_i partition the coded positions. All indices are 1-based at this
interface.

The largest minimum distance any code with a given structure can reach
is

    dmax = 1 + min over nonempty I of (|union of R_i, i in I| - |I|)

where R_i is the set of coded positions whose value may depend on data
symbol i. Because each R_i is a union of whole position blocks, the
minimum is attained at I_T = {i : every group containing i lies in T}
for some group subset T, so enumerating the 2^m - 1 group subsets gives
the exact value in polynomial time for fixed m.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import (
    CoverageGap,
    GroupTooSmall,
    OverlapN,
    PreconditionViolated,
    TooManyGroups,
)

MAX_GROUPS = 20

# ---------- types ----------


@dataclass(frozen=True)
class LocalityStructure:
    """Data groups K and coded-position groups N, stored as sorted tuples."""

    k: int
    n: int
    K: tuple[tuple[int, ...], ...]
    N: tuple[tuple[int, ...], ...]

    @property
    def m(self) -> int:
        return len(self.K)

    def k_sizes(self) -> tuple[int, ...]:
        return tuple(len(g) for g in self.K)

    def n_sizes(self) -> tuple[int, ...]:
        return tuple(len(g) for g in self.N)


@dataclass(frozen=True)
class ConstraintView:
    """Per position j the allowed data set C_j; per data i the reach R_i."""

    C: tuple[frozenset[int], ...]
    R: tuple[frozenset[int], ...]

    def C_of(self, j: int) -> frozenset[int]:
        return self.C[j - 1]

    def R_of(self, i: int) -> frozenset[int]:
        return self.R[i - 1]


@dataclass(frozen=True)
class DmaxWitness:
    """The bound value with a minimizing group subset and its data set."""

    dmax: int
    blocks: tuple[int, ...]
    data: tuple[int, ...]


# ---------- construction and validation ----------


def blocks_for_sizes(sizes: Sequence[int]) -> list[list[int]]:
    """Consecutive 1-based position blocks of the given sizes."""
    out = []
    start = 1
    for s in sizes:
        out.append(list(range(start, start + s)))
        start += s
    return out


def make_structure(
    K: Sequence[Sequence[int]],
    N: Sequence[Sequence[int]],
    k: Optional[int] = None,
    n: Optional[int] = None,
) -> LocalityStructure:
    """Normalize, validate and return a structure.

    k and n default to the largest mentioned index so that a gap-free
    cover determines them; passing them explicitly lets validation catch
    declared-but-uncovered indices.
    """
    K_norm = tuple(tuple(sorted(set(g))) for g in K)
    N_norm = tuple(tuple(sorted(set(g))) for g in N)
    k_eff = k if k is not None else max((g[-1] for g in K_norm if g), default=0)
    n_eff = n if n is not None else max((g[-1] for g in N_norm if g), default=0)
    return validate(LocalityStructure(k_eff, n_eff, K_norm, N_norm))


def validate(s: LocalityStructure) -> LocalityStructure:
    """Check every structure invariant; returns the normalized structure."""
    if len(s.K) != len(s.N) or s.m == 0:
        raise CoverageGap("need matching nonempty lists of K and N groups")
    K_norm = tuple(tuple(sorted(set(g))) for g in s.K)
    N_norm = tuple(tuple(sorted(set(g))) for g in s.N)

    covered = set()
    for gi, g in enumerate(K_norm, start=1):
        if not g:
            raise CoverageGap(f"group {gi} has an empty data set")
        if g[0] < 1 or g[-1] > s.k:
            raise CoverageGap(f"group {gi} mentions data index outside 1..{s.k}")
        covered.update(g)
    missing = set(range(1, s.k + 1)) - covered
    if missing:
        raise CoverageGap(f"data indices covered by no group: {sorted(missing)}")

    seen: set[int] = set()
    for gi, g in enumerate(N_norm, start=1):
        if not g:
            raise CoverageGap(f"group {gi} has an empty position set")
        if g[0] < 1 or g[-1] > s.n:
            raise CoverageGap(f"group {gi} mentions position outside 1..{s.n}")
        overlap = seen.intersection(g)
        if overlap:
            raise OverlapN(f"positions claimed by two groups: {sorted(overlap)}")
        seen.update(g)
    missing_pos = set(range(1, s.n + 1)) - seen
    if missing_pos:
        raise CoverageGap(f"positions owned by no group: {sorted(missing_pos)}")

    for gi, (kg, ng) in enumerate(zip(K_norm, N_norm), start=1):
        if len(ng) < len(kg):
            raise GroupTooSmall(
                f"group {gi}: {len(ng)} coded positions for {len(kg)} data symbols"
            )
    return LocalityStructure(s.k, s.n, K_norm, N_norm)


def constraints(s: LocalityStructure) -> ConstraintView:
    """Materialize C_j (allowed data per position) and R_i (reach per datum)."""
    C: list[frozenset[int]] = [frozenset()] * s.n
    for Kg, Ng in zip(s.K, s.N):
        allowed = frozenset(Kg)
        for j in Ng:
            C[j - 1] = allowed
    R = []
    for i in range(1, s.k + 1):
        reach: set[int] = set()
        for Kg, Ng in zip(s.K, s.N):
            if i in Kg:
                reach.update(Ng)
        R.append(frozenset(reach))
    return ConstraintView(tuple(C), tuple(R))


# ---------- the distance bound ----------


def _signature_masks(s: LocalityStructure) -> list[int]:
    """Bitmask of groups containing each data symbol (index 0 = symbol 1)."""
    masks = [0] * s.k
    for g, Kg in enumerate(s.K):
        for i in Kg:
            masks[i - 1] |= 1 << g
    return masks


def dmax_witness(s: LocalityStructure) -> DmaxWitness:
    """The bound plus a minimizing group subset and its data symbols."""
    s = validate(s)
    if s.m > MAX_GROUPS:
        raise TooManyGroups(f"{s.m} groups exceed the cap of {MAX_GROUPS}")
    masks = _signature_masks(s)
    sizes = s.n_sizes()
    best: Optional[tuple[int, int, list[int]]] = None
    for T in range(1, 1 << s.m):
        members = [i + 1 for i in range(s.k) if masks[i] & ~T == 0]
        if not members:
            continue
        union = sum(sizes[g] for g in range(s.m) if T >> g & 1)
        value = union - len(members)
        if best is None or value < best[0]:
            best = (value, T, members)
    assert best is not None, "every structure covers some data symbol"
    value, T, members = best
    blocks = tuple(g + 1 for g in range(s.m) if T >> g & 1)
    return DmaxWitness(1 + value, blocks, tuple(members))


def dmax(s: LocalityStructure) -> int:
    """Largest global minimum distance achievable for this structure."""
    return dmax_witness(s).dmax


def two_group_params(s: LocalityStructure) -> tuple[int, int, int, int, int]:
    """(n1, k1, n2, k2, t) for a two-group structure."""
    if s.m != 2:
        raise PreconditionViolated(f"need exactly 2 groups, got {s.m}")
    k1, k2 = s.k_sizes()
    n1, n2 = s.n_sizes()
    t = len(set(s.K[0]) & set(s.K[1]))
    return n1, k1, n2, k2, t


def dmax_two_subcodes(s: LocalityStructure) -> int:
    """Closed-form bound 1 + t + min(n1-k1, n2-k2) for two groups.

    Valid only when t < k and additionally t < min(k1, k2) or the two
    redundancies are equal; outside that range this formula can differ
    from the true bound, so the input is refused.
    """
    n1, k1, n2, k2, t = two_group_params(s)
    if t >= s.k:
        raise PreconditionViolated(
            f"shared data count t={t} must be below k={s.k}"
        )
    if not (t < min(k1, k2) or n1 - k1 == n2 - k2):
        raise PreconditionViolated(
            f"need t < min(k1, k2) or equal redundancies; "
            f"got t={t}, k1={k1}, k2={k2}, r1={n1 - k1}, r2={n2 - k2}"
        )
    return 1 + t + min(n1 - k1, n2 - k2)
