import random

import numpy as np
import pytest

from qdesign.errors import CapacityError, ParameterError, ParseError, RankError
from qdesign.fields import field_make
from qdesign.linear import (
    code_from_generator,
    code_profile,
    codewords_of_weight,
    covering_radius,
    dual,
    enumerate_codewords,
    iter_codeword_blocks,
    load_generator,
    macwilliams_transform,
    puncture,
    same_code,
    save_generator,
    shorten,
    sphere_bound_radius,
    support_repeat_bound,
    weight_distribution,
)
from qdesign.zoo import (
    golay_dual_code,
    hamming_code,
    hyperoval_code,
    simplex_code,
    ternary_golay_code,
)

F3 = field_make(3)


def _random_code(rng, q, n, k):
    while True:
        rows = [[rng.randrange(q) for _ in range(n)] for _ in range(k)]
        try:
            return code_from_generator(field_make(q), rows, strict=False)
        except RankError:
            continue


def test_identity_generator_full_space():
    C = code_from_generator(F3, np.eye(4, dtype=int))
    assert C.params() == (4, 4)
    prof = code_profile(C)
    assert prof.d == 1 and sum(prof.counts) == 81


def test_simplex_small_code_count():
    C = simplex_code(3, 2)
    assert C.params() == (4, 2)
    assert sum(1 for _ in enumerate_codewords(C)) == 9


def test_duplicate_rows_strict_rank_error():
    with pytest.raises(RankError):
        code_from_generator(F3, [[1, 0, 1], [2, 0, 2]])
    C = code_from_generator(F3, [[1, 0, 1], [2, 0, 2]], strict=False)
    assert C.k == 1


def test_entry_validation():
    with pytest.raises(ParameterError):
        code_from_generator(F3, [[0, 3, 1]])


def test_dual_golay_parameters():
    G = ternary_golay_code()
    D = dual(G)
    assert D.params() == (11, 5)
    prof = code_profile(D)
    assert prof.d == 6


def test_dual_orthogonality_sampled():
    G = ternary_golay_code()
    D = dual(G)
    rng = random.Random(7)
    cws = np.concatenate([b for _, b in iter_codeword_blocks(G)])
    dws = np.concatenate([b for _, b in iter_codeword_blocks(D)])
    f = G.field
    for _ in range(1000):
        x = cws[rng.randrange(len(cws))]
        y = dws[rng.randrange(len(dws))]
        acc = 0
        for xi, yi in zip(x, y):
            acc = f.add(acc, f.mul(int(xi), int(yi)))
        assert acc == 0


def test_dual_of_full_space_is_zero_code():
    C = code_from_generator(F3, np.eye(3, dtype=int))
    Z = dual(C)
    assert Z.k == 0
    assert sum(1 for _ in enumerate_codewords(Z)) == 1  # just the zero word


def test_dual_involutive():
    rng = random.Random(11)
    for _ in range(10):
        C = _random_code(rng, 3, 8, 4)
        assert same_code(dual(dual(C)), C)


def test_enumeration_order_and_partition():
    C = simplex_code(3, 2)
    full = [tuple(map(int, v)) for v in enumerate_codewords(C)]
    assert len(full) == 9 and len(set(full)) == 9
    # partition into 8 uneven ranges covers exactly the same stream
    bounds = [0, 1, 2, 3, 5, 6, 7, 8, 9]
    parts = []
    for a, b in zip(bounds, bounds[1:]):
        parts.extend(tuple(map(int, v)) for v in enumerate_codewords(C, start=a, stop=b))
    assert parts == full


def test_enumeration_weight_filter_golay():
    G = ternary_golay_code()
    assert sum(1 for _ in enumerate_codewords(G, weight_filter={5})) == 132


def test_enumeration_budget_errors(monkeypatch):
    G = ternary_golay_code()
    monkeypatch.setenv("QDESIGN_BUDGET", "100")
    with pytest.raises(CapacityError):
        list(enumerate_codewords(G))
    monkeypatch.delenv("QDESIGN_BUDGET")


def test_weight_distribution_methods_agree_random():
    rng = random.Random(23)
    for _ in range(50):
        k = rng.randint(1, 5)
        C = _random_code(rng, 3, 10, k)
        a = weight_distribution(C, "direct")
        b = weight_distribution(C, "macwilliams")
        assert (a == b).all()


def test_macwilliams_transform_involutive():
    G = ternary_golay_code()
    counts = weight_distribution(G, "direct")
    dual_counts = macwilliams_transform(counts, 11, 3)
    back = macwilliams_transform(dual_counts, 11, 3)
    assert list(back) == [int(c) for c in counts]


def test_golay_weight_enumerator():
    prof = code_profile(ternary_golay_code())
    assert {i: c for i, c in enumerate(prof.counts) if c} == {
        0: 1, 5: 132, 6: 132, 8: 330, 9: 110, 11: 24}


def test_codewords_of_weight_methods_agree():
    R = golay_dual_code()
    a = codewords_of_weight(R, 6, method="enumerate")
    b = codewords_of_weight(R, 6, method="scan")
    assert np.array_equal(a, b)
    assert a.shape[0] == 132


def test_puncture_shorten_hyperoval_dual():
    T = dual(hyperoval_code(4))  # [6, 3, 4]
    P = puncture(T, 0)
    S = shorten(T, 0)
    assert P.params() == (5, 3) and code_profile(P).d == 3
    assert S.params() == (5, 2) and code_profile(S).d == 4


def test_puncture_shorten_duality_identities():
    rng = random.Random(31)
    for _ in range(20):
        q = rng.choice([2, 3, 4])
        C = _random_code(rng, q, rng.randint(4, 7), rng.randint(2, 3))
        m = rng.randrange(C.n)
        try:
            lhs = shorten(dual(C), m)
            rhs = dual(puncture(C, m))
        except RankError:
            continue
        assert same_code(lhs, rhs)
        lhs2 = puncture(dual(C), m)
        rhs2 = dual(shorten(C, m))
        assert same_code(lhs2, rhs2)


def test_duality_identity_by_enumeration_oracle():
    C = code_from_generator(F3, [[1, 0, 1, 1], [0, 1, 1, 2]])
    m = 2
    lhs = shorten(dual(C), m)
    rhs = dual(puncture(C, m))
    a = {tuple(map(int, v)) for v in enumerate_codewords(lhs)}
    b = {tuple(map(int, v)) for v in enumerate_codewords(rhs)}
    assert a == b


def test_support_repeat_bound():
    assert support_repeat_bound(11, 3, 5) == 9
    assert support_repeat_bound(13, 3, 3) == 5
    for n in (5, 9, 17):
        assert support_repeat_bound(n, 2, 3) == n  # binary: bound is length


def test_profile_golay_reference_values():
    prof = code_profile(ternary_golay_code(), compute_rho=True)
    assert (prof.d, prof.d_dual, prof.s, prof.s_dual) == (5, 6, 5, 2)
    assert (prof.e, prof.rho, prof.h) == (2, 2, 9)
    assert prof.weights == [5, 6, 8, 9, 11]
    assert prof.dual_weights == [6, 9]
    assert prof.is_perfect and not prof.is_mds
    assert prof.rho_sphere == prof.rho


def test_profile_hamming_perfect():
    prof = code_profile(hamming_code(3, 3), compute_rho=True)
    assert prof.d == 3 and prof.e == 1 and prof.rho == 1
    assert prof.is_perfect


def test_covering_radius_brute_oracle():
    # tetracode: rho by definition, max over vectors of distance to code
    C = code_from_generator(F3, [[1, 0, 1, 1], [0, 1, 1, 2]])
    cws = np.concatenate([b for _, b in iter_codeword_blocks(C)])
    worst = 0
    for idx in range(3 ** 4):
        v = np.array([(idx // 3 ** i) % 3 for i in range(4)], dtype=np.int32)
        worst = max(worst, int(((cws != v[None, :]).sum(axis=1)).min()))
    assert covering_radius(C) == worst


def test_sphere_bound_below_rho():
    S = simplex_code(3, 3)
    rho = covering_radius(S)
    lo = sphere_bound_radius(S)
    assert lo <= rho
    assert (S.k, rho != lo) == (3, True)  # non-perfect: the two definitions split


def test_profile_invariants_random():
    rng = random.Random(47)
    for _ in range(15):
        C = _random_code(rng, rng.choice([2, 3, 4]), rng.randint(4, 8), rng.randint(1, 4))
        prof = code_profile(C, compute_rho=True)
        assert sum(prof.counts) == C.size
        assert prof.counts[0] == 1
        if prof.weights:
            assert prof.d == prof.weights[0]
            assert prof.e <= prof.rho <= max(prof.s_dual, prof.e)
        for w in prof.weights:
            assert w % prof.divisor == 0


def test_divisor_pless():
    from qdesign.zoo import pless_symmetry_code
    assert code_profile(pless_symmetry_code(12)).divisor == 3


def test_generator_file_roundtrip(tmp_path):
    G = ternary_golay_code()
    path = tmp_path / "g.txt"
    save_generator(G, path)
    H = load_generator(path)
    assert same_code(G, H)
    assert np.array_equal(G.gen, H.gen)


def test_generator_file_parse_errors(tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("3 4\n")
    with pytest.raises(ParseError):
        load_generator(path)
    path.write_text("3 4 2\n1 0 1 1\n0 1 9 2\n")
    with pytest.raises(ParseError) as err:
        load_generator(path)
    assert err.value.line == 3
