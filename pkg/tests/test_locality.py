import random

import pytest

from conftest import random_structure
from oracles import dmax_bruteforce

from ledc.errors import (
    CoverageGap,
    GroupTooSmall,
    OverlapN,
    PreconditionViolated,
    TooManyGroups,
)
from ledc.locality import (
    blocks_for_sizes,
    constraints,
    dmax,
    dmax_two_subcodes,
    dmax_witness,
    make_structure,
    two_group_params,
    validate,
)


# ---------- validation ----------


def test_make_structure_normalizes(unequal_r):
    s, _ = unequal_r
    assert s.k == 5 and s.n == 10 and s.m == 2
    assert s.K == ((1, 2, 3), (2, 3, 4, 5))
    assert s.N == ((1, 2, 3, 4), (5, 6, 7, 8, 9, 10))
    assert s.k_sizes() == (3, 4)
    assert s.n_sizes() == (4, 6)


def test_make_structure_sorts_and_dedups():
    s = make_structure([[3, 1, 1, 2]], [[2, 1, 3]])
    assert s.K == ((1, 2, 3),)
    assert s.N == ((1, 2, 3),)


def test_validate_coverage_gap():
    with pytest.raises(CoverageGap):
        make_structure([[1]], [[1, 2]], k=2)
    with pytest.raises(CoverageGap):
        make_structure([[1], []], [[1], [2]])
    with pytest.raises(CoverageGap):
        make_structure([[1, 3]], [[1, 2]], k=2)  # index outside 1..k


def test_validate_position_errors():
    with pytest.raises(OverlapN):
        make_structure([[1], [2]], [[1, 2], [2, 3]])
    with pytest.raises(CoverageGap):
        make_structure([[1], [2]], [[1], [3]])  # position 2 unowned
    with pytest.raises(CoverageGap):
        make_structure([[1], [2]], [[1]])  # group count mismatch


def test_validate_group_too_small():
    with pytest.raises(GroupTooSmall):
        make_structure([[1, 2]], [[1]])


def test_validate_returns_normalized():
    s = validate(make_structure([[1, 2]], [[1, 2, 3]]))
    assert s.K == ((1, 2),)


# ---------- constraints ----------


def test_constraints_reference_structure(unequal_r):
    s, _ = unequal_r
    view = constraints(s)
    assert view.R_of(1) == frozenset(range(1, 5))
    assert view.R_of(2) == frozenset(range(1, 11))
    assert view.R_of(4) == frozenset(range(5, 11))
    assert view.C_of(1) == frozenset({1, 2, 3})
    assert view.C_of(10) == frozenset({2, 3, 4, 5})


def test_constraints_single_group():
    s = make_structure([[1, 2, 3]], [[1, 2, 3, 4, 5]])
    view = constraints(s)
    for i in (1, 2, 3):
        assert view.R_of(i) == frozenset(range(1, 6))


# ---------- dmax ----------


def test_dmax_reference_structures(unequal_r, equal_r):
    assert dmax(unequal_r[0]) == 4
    assert dmax(equal_r[0]) == 5


def test_dmax_single_group_is_singleton_bound():
    for n, k in [(5, 3), (7, 7), (12, 1)]:
        s = make_structure([list(range(1, k + 1))], [list(range(1, n + 1))])
        assert dmax(s) == n - k + 1


def test_dmax_witness_is_consistent(equal_r):
    s = equal_r[0]
    w = dmax_witness(s)
    sizes = s.n_sizes()
    union = sum(sizes[g - 1] for g in w.blocks)
    assert w.dmax == 1 + union - len(w.data)
    # the data set must be exactly the symbols confined to those blocks
    T = set(w.blocks)
    for i in range(1, s.k + 1):
        groups = {g for g in range(1, s.m + 1) if i in s.K[g - 1]}
        assert (i in w.data) == (groups <= T)


def test_dmax_matches_bruteforce_oracle():
    rng = random.Random(4501)
    for _ in range(120):
        s = random_structure(rng)
        assert dmax(s) == dmax_bruteforce(s.K, s.N), (s.K, s.N)


def test_dmax_never_exceeds_singleton():
    rng = random.Random(4502)
    for _ in range(80):
        s = random_structure(rng)
        assert dmax(s) <= s.n - s.k + 1


def test_dmax_monotone_in_parity_positions():
    rng = random.Random(4503)
    for _ in range(60):
        s = random_structure(rng)
        g = rng.randrange(s.m)
        N2 = [list(Ng) for Ng in s.N]
        N2[g].append(s.n + 1)
        bigger = make_structure([list(Kg) for Kg in s.K], N2)
        assert dmax(bigger) >= dmax(s)


def test_dmax_group_cap():
    K = [[i] for i in range(1, 22)]
    N = [[i] for i in range(1, 22)]
    with pytest.raises(TooManyGroups):
        dmax(make_structure(K, N))


# ---------- two-group closed form ----------


def test_two_group_params(equal_r):
    assert two_group_params(equal_r[0]) == (5, 4, 7, 6, 3)
    with pytest.raises(PreconditionViolated):
        two_group_params(make_structure([[1]], [[1]]))


def test_dmax_two_subcodes_golden(unequal_r, equal_r):
    assert dmax_two_subcodes(equal_r[0]) == 5
    assert dmax_two_subcodes(unequal_r[0]) == 4


def test_dmax_two_subcodes_disjoint_groups():
    s = make_structure([[1, 2], [3, 4]], blocks_for_sizes([4, 5]))
    assert dmax_two_subcodes(s) == 1 + min(4 - 2, 5 - 2)


def test_dmax_two_subcodes_refusals():
    # t = k: both groups use all data symbols
    s = make_structure([[1, 2], [1, 2]], blocks_for_sizes([3, 3]))
    with pytest.raises(PreconditionViolated):
        dmax_two_subcodes(s)
    # t = min(k1, k2) with unequal redundancies
    s = make_structure([[1, 2], [1, 2, 3]], blocks_for_sizes([3, 6]))
    with pytest.raises(PreconditionViolated):
        dmax_two_subcodes(s)


def test_dmax_two_subcodes_agrees_with_general_bound():
    """Closed form equals the block-subset minimization wherever it applies."""
    checked = 0
    for n1 in range(1, 14):
        for n2 in range(1, 15 - n1):
            for k1 in range(1, n1 + 1):
                for k2 in range(1, n2 + 1):
                    for t in range(0, min(k1, k2) + 1):
                        k = k1 + k2 - t
                        if t >= k:
                            continue
                        if not (t < min(k1, k2) or n1 - k1 == n2 - k2):
                            continue
                        K1 = list(range(1, k1 + 1))
                        K2 = list(range(k1 - t + 1, k1 - t + k2 + 1))
                        s = make_structure([K1, K2], blocks_for_sizes([n1, n2]))
                        assert dmax_two_subcodes(s) == dmax(s), (n1, k1, n2, k2, t)
                        checked += 1
    assert checked > 2000
