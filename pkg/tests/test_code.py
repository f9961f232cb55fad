import random
from itertools import combinations

import pytest

from oracles import min_weight_bruteforce

from ledc.code import (
    ERASED,
    distance_at_least,
    encode,
    erasure_decode,
    local_decode,
    local_generator,
    make_code,
    min_distance_exhaustive,
    min_distance_rank,
    support_violations,
    verify_ledc,
    verify_local_mds,
)
from ledc.errors import (
    DimensionMismatch,
    NotEnoughSymbols,
    PositionsOutsideGroup,
    SingularSubmatrix,
    TooLarge,
    UnrecoverableErasurePattern,
)
from ledc.field import make_field
from ledc.linalg import identity, make_matrix
from ledc.locality import make_structure

F7 = make_field(7)


def single_group_code(f, G_rows):
    k = len(G_rows)
    n = len(G_rows[0])
    s = make_structure([list(range(1, k + 1))], [list(range(1, n + 1))])
    return make_code(s, f, make_matrix(f, G_rows))


def random_single_group_code(f, k, n, rng):
    return single_group_code(f, [[rng.randrange(f.q) for _ in range(n)] for _ in range(k)])


# ---------- construction guards ----------


def test_make_code_shape_checks(suboptimal_codefile):
    s = suboptimal_codefile.code.structure
    with pytest.raises(DimensionMismatch):
        make_code(s, F7, identity(F7, 5))
    with pytest.raises(DimensionMismatch):
        make_code(s, make_field(11), suboptimal_codefile.code.G)


def test_local_generator(suboptimal_codefile):
    lg = local_generator(suboptimal_codefile.code, 1)
    assert (lg.rows, lg.cols) == (4, 5)
    assert lg.to_rows()[0] == [1, 1, 1, 1, 1]


# ---------- encode ----------


def test_encode_zero_and_units(suboptimal_codefile):
    c = suboptimal_codefile.code
    assert encode(c, [0] * 5) == [0] * 10
    for i in range(5):
        x = [0] * 5
        x[i] = 1
        assert encode(c, x) == c.G.to_rows()[i]


def test_encode_all_ones_is_column_sums(suboptimal_codefile):
    c = suboptimal_codefile.code
    rows = c.G.to_rows()
    expected = [sum(row[j] for row in rows) % 7 for j in range(10)]
    assert encode(c, [1] * 5) == expected


def test_encode_length_checked(suboptimal_codefile):
    with pytest.raises(DimensionMismatch):
        encode(suboptimal_codefile.code, [1, 2, 3])


def test_encode_changes_stay_local(suboptimal_codefile, cyclic_codefile):
    """A data symbol owned by one group only touches that group's block."""
    rng = random.Random(5601)
    for cf in (suboptimal_codefile, cyclic_codefile):
        c = cf.code
        s = c.structure
        q = c.field.q
        x = [rng.randrange(q) for _ in range(s.k)]
        base = encode(c, x)
        for g in range(s.m):
            private = set(s.K[g]) - set().union(
                *(set(s.K[h]) for h in range(s.m) if h != g)
            )
            for i in private:
                bumped = list(x)
                bumped[i - 1] = (bumped[i - 1] + 1) % q
                moved = encode(c, bumped)
                changed = {j + 1 for j in range(s.n) if moved[j] != base[j]}
                assert changed <= set(s.N[g]), (g + 1, i, changed)


# ---------- local decode ----------


def test_local_decode_all_subsets_round_trip(suboptimal_codefile):
    c = suboptimal_codefile.code
    s = c.structure
    rng = random.Random(5602)
    x = [rng.randrange(7) for _ in range(s.k)]
    word = encode(c, x)
    for g in range(1, s.m + 1):
        Kg, Ng = s.K[g - 1], s.N[g - 1]
        for subset in combinations(Ng, len(Kg)):
            got = local_decode(c, g, [(p, word[p - 1]) for p in subset])
            assert got == {i: x[i - 1] for i in Kg}


def test_local_decode_uses_extra_symbols(cyclic_codefile):
    c = cyclic_codefile.code
    x = list(range(1, 8))
    word = encode(c, x)
    got = local_decode(c, 2, [(p, word[p - 1]) for p in c.structure.N[1]])
    assert got == {i: x[i - 1] for i in c.structure.K[1]}


def test_local_decode_input_errors(suboptimal_codefile):
    c = suboptimal_codefile.code
    word = encode(c, [1, 2, 3, 4, 5])
    with pytest.raises(NotEnoughSymbols):
        local_decode(c, 1, [(1, word[0]), (2, word[1]), (3, word[2])])
    with pytest.raises(PositionsOutsideGroup):
        local_decode(c, 1, [(p, word[p - 1]) for p in (1, 2, 3, 6)])
    with pytest.raises(PositionsOutsideGroup):
        local_decode(c, 3, [(1, 0)])
    with pytest.raises(PositionsOutsideGroup):
        local_decode(c, 1, [(1, word[0]), (1, word[0]), (2, word[1]), (3, word[2])])


def test_local_decode_singular_submatrix_is_invariant_breach():
    c = single_group_code(F7, [[1, 0], [1, 0]])
    with pytest.raises(SingularSubmatrix):
        local_decode(c, 1, [(1, 2), (2, 0)])


# ---------- erasure decode ----------


def test_erasure_decode_no_erasures(suboptimal_codefile):
    c = suboptimal_codefile.code
    x = [3, 1, 4, 1, 5]
    assert erasure_decode(c, encode(c, x)) == x


def test_erasure_decode_every_small_pattern(suboptimal_codefile):
    c = suboptimal_codefile.code
    x = [2, 0, 6, 1, 3]
    word = encode(c, x)
    for size in range(1, 4):  # distance is 4, all 3-erasure patterns recover
        for erased in combinations(range(10), size):
            received = [ERASED if j in erased else word[j] for j in range(10)]
            assert erasure_decode(c, received) == x


def test_erasure_decode_unrecoverable_pattern_exists(suboptimal_codefile):
    c = suboptimal_codefile.code
    word = encode(c, [2, 0, 6, 1, 3])
    failures = 0
    for erased in combinations(range(10), 4):
        received = [ERASED if j in erased else word[j] for j in range(10)]
        try:
            erasure_decode(c, received)
        except UnrecoverableErasurePattern:
            failures += 1
    assert failures > 0


def test_erasure_decode_length_checked(suboptimal_codefile):
    with pytest.raises(DimensionMismatch):
        erasure_decode(suboptimal_codefile.code, [0] * 9)


def test_erasure_decode_all_erased():
    c = single_group_code(F7, [[1, 0], [0, 1]])
    with pytest.raises(UnrecoverableErasurePattern):
        erasure_decode(c, [ERASED, ERASED])


# ---------- minimum distance ----------


def test_distance_golden_suboptimal_code(suboptimal_codefile):
    c = suboptimal_codefile.code
    assert min_distance_exhaustive(c) == 4
    assert min_distance_rank(c) == 4


def test_distance_golden_cyclic_fixture(cyclic_codefile, cyclic_descending):
    assert min_distance_rank(cyclic_codefile.code) == 5
    assert min_distance_rank(cyclic_descending.code) == 5


def test_distance_identity_code():
    c = single_group_code(F7, identity(F7, 3).to_rows())
    assert min_distance_exhaustive(c) == 1
    assert min_distance_rank(c) == 1


def test_distance_rank_deficient_is_zero():
    c = single_group_code(F7, [[1, 2, 3], [2, 4, 6]])
    assert min_distance_rank(c) == 0
    assert min_distance_exhaustive(c) == 0


def test_distance_agrees_with_bruteforce_oracle():
    rng = random.Random(5603)
    for q in (3, 5, 7):
        f = make_field(q)
        for _ in range(25):
            k = rng.randint(1, 4)
            n = rng.randint(k, 9)
            if q**k > 3000:
                continue
            c = random_single_group_code(f, k, n, rng)
            expected = min_weight_bruteforce(q, c.G.to_rows())
            assert min_distance_exhaustive(c) == expected
            assert min_distance_rank(c) == expected


def test_exhaustive_distance_independent_of_partitioning(suboptimal_codefile):
    c = suboptimal_codefile.code
    results = {min_distance_exhaustive(c, suffix_cap=cap) for cap in (1, 7, 49, 1 << 19)}
    assert results == {4}


def test_distance_budgets():
    f101 = make_field(101)
    c = single_group_code(f101, identity(f101, 5).to_rows())
    with pytest.raises(TooLarge):
        min_distance_exhaustive(c)  # 101^5 > 10^9
    wide = single_group_code(F7, [[1 if i == j else 0 for j in range(30)] for i in range(5)])
    with pytest.raises(TooLarge):
        min_distance_rank(wide)
    with pytest.raises(TooLarge):
        distance_at_least(wide, 11)  # C(30,10) patterns


def test_distance_at_least_bounds(suboptimal_codefile):
    c = suboptimal_codefile.code
    assert distance_at_least(c, 0)
    assert distance_at_least(c, 4)
    assert not distance_at_least(c, 5)
    assert not distance_at_least(c, 7)  # erasures beyond n - k


# ---------- verification ----------


def test_support_violations(cyclic_codefile):
    c = cyclic_codefile.code
    assert support_violations(c) == []
    rows = c.G.to_rows()
    rows[0][11] = 1  # data 1 may only touch group 1 positions
    bad = make_code(c.structure, c.field, make_matrix(c.field, rows))
    assert support_violations(bad) == [(1, 12)]


def test_verify_local_mds(suboptimal_codefile, cyclic_codefile):
    assert verify_local_mds(suboptimal_codefile.code) == {1: True, 2: True}
    assert verify_local_mds(cyclic_codefile.code) == {1: True, 2: True}


def test_verify_local_mds_zero_column_fails():
    c = single_group_code(F7, [[1, 0, 1], [2, 0, 3]])
    assert verify_local_mds(c) == {1: False}


def test_verify_ledc_suboptimal_not_optimal(suboptimal_codefile):
    report = verify_ledc(suboptimal_codefile.code, distance_method="both")
    assert report.support_ok
    assert report.local_mds == (True, True)
    assert report.distance == 4
    assert report.dmax == 5
    assert not report.optimal
    assert not report.all_ok


def test_verify_ledc_cyclic_fixture_optimal(cyclic_codefile):
    report = verify_ledc(cyclic_codefile.code, distance_method="rank")
    assert report.all_ok
    assert report.distance == report.dmax == 5


def test_verify_ledc_auto_method_selection(suboptimal_codefile, cyclic_codefile):
    assert verify_ledc(suboptimal_codefile.code).method == "exhaustive"  # 7^5 within budget
    assert verify_ledc(cyclic_codefile.code).method == "rank"  # 13^7 beyond it


def test_verify_ledc_rejects_unknown_method(suboptimal_codefile):
    with pytest.raises(ValueError):
        verify_ledc(suboptimal_codefile.code, distance_method="guess")
