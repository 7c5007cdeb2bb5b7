"""Acceptance suite: one test per verification target, exact counts only.

Run `pytest tests/test_acceptance.py -v` for one pass/fail line per
criterion.  Everything asserts exact integer equality; the single heavy
cross-check (full 32^6 enumeration of the trace code) is included when
QDESIGN_HEAVY=1 is set and is otherwise covered by the parametrized
counting path.
"""

import math
import os
import random
from itertools import combinations

import numpy as np
import pytest

from qdesign.counting import (
    block_sets,
    blocks_as_family,
    shifted_esp_zero_blocks,
    subset_product_constancy,
    subset_sum_count,
    subset_sum_count_bruteforce,
)
from qdesign.designs import (
    classical_design_index,
    constrained_cover_index,
    count_constrained,
    expected_index,
    family_from_code,
    fixed_support_index,
    is_complete_support_design,
    is_t_regular,
    max_strengths,
    qary_design_index,
    scaled_index,
    support_multiplicity,
)
from qdesign.errors import RankError
from qdesign.fields import field_make, quadratic_extension
from qdesign.linear import (
    code_from_generator,
    code_profile,
    dual,
    puncture,
    shorten,
    weight_distribution,
)
from qdesign.zoo import (
    doubly_extended_rs_code,
    hamming_code,
    hyperoval_code,
    ovoid_code,
    pless_symmetry_code,
    reed_solomon_code,
    simplex_code,
    ternary_golay_code,
    golay_dual_code,
    trace_exponent_code,
    trace_min_weight_family,
    trace_next_weight_family,
)


def test_criterion_01_hamming_perfect_designs():
    H = hamming_code(3, 3)
    prof = code_profile(H, compute_rho=True)
    assert prof.is_perfect and prof.e == prof.rho == 1
    for w in prof.weights:  # 3^10 enumeration per weight class
        chk = qary_design_index(family_from_code(H, w, method="enumerate"), 2,
                                want_witness=False)
        assert chk.ok, f"weight {w} failed"
    a3 = qary_design_index(family_from_code(H, 3), 2)
    assert a3.ok and a3.lam == 1
    print("criterion 1: Hamming [13,10,3]_3 holds ternary 2-designs at every "
          "weight; A_3 is 2-(13,3,1)_3")


def test_criterion_02_ternary_golay():
    G = ternary_golay_code()
    fam5 = family_from_code(G, 5)
    q3 = qary_design_index(fam5, 3)
    assert q3.ok and q3.lam == 1
    c4 = classical_design_index(fam5, 4)
    assert c4.ok and c4.lam == 1
    for w in code_profile(G).weights:
        assert qary_design_index(family_from_code(G, w), 3, want_witness=False).ok
    print("criterion 2: Golay A_5 is 3-(11,5,1)_3, B_5 is 4-(11,5,1); all "
          "weight classes are ternary 3-designs")


def test_criterion_03_golay_dual_two_weight():
    R = golay_dual_code()
    fam6 = family_from_code(R, 6)
    fam9 = family_from_code(R, 9)
    assert qary_design_index(fam6, 3).lam == 2
    assert classical_design_index(fam6, 4).lam == 3
    assert qary_design_index(fam9, 3).lam == 7
    assert is_complete_support_design(fam9)
    print("criterion 3: [11,5,6]_3: A_6 is 3-(11,6,2)_3, B_6 is 4-(11,6,3), "
          "A_9 is 3-(11,9,7)_3, B_9 complete")


def test_criterion_04_simplex_strength_exactly_two():
    fam = family_from_code(simplex_code(3, 3), 9)
    chk = qary_design_index(fam, 2)
    assert chk.ok and chk.lam == 3
    rep = max_strengths(fam, want_witness=True)
    assert rep.t_qary == 2
    assert rep.qary_table[3].witness is not None
    print("criterion 4: simplex(3,3) A_9 is 2-(13,9,3)_3 with q-ary strength "
          "exactly 2")


def test_criterion_05_hyperoval_codes():
    for q in (4, 8):
        lam = q // 2
        T = hyperoval_code(q)
        assert qary_design_index(family_from_code(T, q), 2).lam == lam
        assert qary_design_index(family_from_code(T, q + 2), 2).lam == lam
        Td = dual(T)
        assert qary_design_index(family_from_code(Td, 4), 2).lam == lam
        P, S = puncture(Td, 0), shorten(Td, 0)
        assert P.params() == (q + 1, q - 1) and S.params() == (q + 1, q - 2)
        assert qary_design_index(family_from_code(P, 3), 2).lam == 1
        assert qary_design_index(family_from_code(S, 4), 2).lam == (q - 2) // 2
    print("criterion 5: hyperoval codes at q=4,8: A_q, A_{q+2}, dual A_4 are "
          "2-designs with index q/2; punctured/shortened duals give "
          "2-(q+1,3,1) and 2-(q+1,4,(q-2)/2)")


def test_criterion_06_ovoid_code_q4():
    q = 4
    lam_12 = q * q - q - 1          # 11
    lam_b12 = q ** 3 - 3 * q * q + q + 2  # 22
    lam_16 = q + 1                  # 5
    lam_d4 = (q + 1) * (q - 2) // 2  # 5
    lam_bd4 = q - 2                 # 2
    T = ovoid_code(q)
    fam12 = family_from_code(T, 12)
    fam16 = family_from_code(T, 16)
    assert qary_design_index(fam12, 2).lam == lam_12
    assert classical_design_index(fam12, 3).lam == lam_b12
    assert qary_design_index(fam16, 2).lam == lam_16
    assert is_complete_support_design(fam16)
    mult = support_multiplicity(fam16)
    assert mult.distinct == math.comb(17, 16) and mult.multiplicity == q - 1
    fam4 = family_from_code(dual(T), 4)  # weight-4 scan over the [17,13] dual
    assert qary_design_index(fam4, 2).lam == lam_d4
    assert classical_design_index(fam4, 3).lam == lam_bd4
    print(f"criterion 6: ovoid code at q=4: A_12 2-(17,12,{lam_12})_4, "
          f"B_12 3-(17,12,{lam_b12}), A_16 2-(17,16,{lam_16})_4, B_16 complete, "
          f"dual A_4 2-(17,4,{lam_d4})_4, dual B_4 3-(17,4,{lam_bd4})")


_P12 = {"counts": {6: 264, 9: 440, 12: 24},
        "qary": {6: 3, 9: 21, 12: 3},
        "classical": {6: (5, 1), 9: (5, 35), 12: (5, 1)}}
_P24 = {"counts": {9: 4048, 12: 61824, 15: 242880, 18: 198352, 21: 24288, 24: 48},
        "qary": {9: 21, 12: 840, 15: 6825, 18: 9996, 21: 1995, 24: 6},
        "classical": {9: (5, 6), 12: (5, 576), 15: (5, 8580),
                      18: (3, 29784), 21: (5, 969), 24: (5, 1)}}


@pytest.mark.parametrize("n,data", [(12, _P12), (24, _P24)])
def test_criterion_07_pless_symmetry(n, data):
    P = pless_symmetry_code(n)
    wd = weight_distribution(P)
    assert {i: int(c) for i, c in enumerate(wd) if c and i} == data["counts"]
    for w, lam in data["qary"].items():
        fam = family_from_code(P, w)
        assert qary_design_index(fam, 3).lam == lam, f"qary w={w}"
        t, lam_c = data["classical"][w]
        assert classical_design_index(fam, t).lam == lam_c, f"classical w={w}"
    print(f"criterion 7: symmetry code length {n}: published enumerator, "
          "ternary 3-designs and classical designs all confirmed")


def test_criterion_08_extended_rs_designs():
    for q, k in ((8, 3), (9, 4), (16, 5)):
        assert math.gcd(k - 1, q - 1) == 1
        w = q - k + 2
        lam = math.comb(q - 1, k - 1) // (q - 1)
        fam = family_from_code(doubly_extended_rs_code(q, k), w)
        chk = qary_design_index(fam, 2)
        assert chk.ok and chk.lam == lam, (q, k)
    # the gcd hypothesis is sharp: (16,4) forces a fractional index
    assert expected_index(15 * math.comb(17, 14), 2, 17, 14, 16).denominator == 3
    fam = family_from_code(reed_solomon_code(16, 4), 12)
    rep = max_strengths(fam, t_cap=2)
    assert rep.t_qary == 1 and rep.qary_table[1].lam == 364
    print("criterion 8: doubly-extended RS designs confirmed by counting at "
          "(8,3), (9,4), (16,5); RS [15,4,12]_16 tops out at 1-(15,12,364)_16")


def test_criterion_09_subset_counts():
    for n in range(1, 13):
        for k in range(n + 1):
            for b in range(n):
                assert subset_sum_count(n, k, b) == \
                    subset_sum_count_bruteforce(n, k, b), (n, k, b)
    for q in (3, 4, 5, 7, 8, 9, 11, 13, 16):
        F = field_make(q)
        for k in range(1, q - 1):
            if math.gcd(k, q - 1) == 1:
                const, table = subset_product_constancy(F, k)
                assert const
                assert set(table.values()) == {math.comb(q - 1, k) // (q - 1)}
    print("criterion 9: subset-sum formula matches brute force for all n <= 12; "
          "subset-product counts constant whenever gcd(k, q-1) = 1, q <= 16")


def test_criterion_10_block_sets_q32():
    ext = quadratic_extension(32)
    b63 = block_sets(ext, 6, 3)
    assert len(b63) == 32736
    chk = classical_design_index(blocks_as_family(b63), 4)
    assert chk.ok and chk.lam == 12
    b53 = shifted_esp_zero_blocks(ext, 5, 3)
    chk = classical_design_index(blocks_as_family(b53), 4)
    assert chk.ok and chk.lam == 5
    print("criterion 10: at q=32 the vanishing-polynomial 6-subsets form a "
          "4-(33,6,12) design with 32736 blocks; the based 5-subsets form a "
          "4-(33,5,5) design")


def test_criterion_11_trace_code_designs():
    q = 32
    lam1 = (q - 2) * (q - 5) * (q - 6) * (q - 8) // math.factorial(6)
    lam2 = (q - 2) * (q - 4) * (q - 5) // math.factorial(4)
    assert lam1 == 702 and lam2 == 945

    t27 = trace_min_weight_family(5)
    # arithmetic cross-check: the parametrized count equals the block count
    # that a 2-design with index 702 forces
    assert len(t27.family) == 31 * 32736 == 1014816
    assert 1014816 == lam1 * math.comb(33, 2) * 31 ** 2 // math.comb(27, 2)
    fx = fixed_support_index(t27.family, 2, (0, 1))
    assert fx.ok and fx.lam == lam1
    assert support_multiplicity(t27.family).multiplicity == 31
    full = qary_design_index(t27.family, 2)
    assert full.ok and full.lam == lam1

    t28 = trace_next_weight_family(5)
    assert len(t28.family) == 31 * 40920
    fx28 = fixed_support_index(t28.family, 2, (0, 1))
    assert fx28.ok and fx28.lam == lam2
    full28 = qary_design_index(t28.family, 2)
    assert full28.ok and full28.lam == lam2

    if os.environ.get("QDESIGN_HEAVY"):
        wd = weight_distribution(trace_exponent_code(5), "direct",
                                 threads=os.cpu_count() or 1)
        assert int(wd[27]) == 1014816 and int(wd[28]) == 1268520
        assert all(int(wd[i]) == 0 for i in range(1, 27))
        print("criterion 11 (heavy): full 32^6 enumeration confirms the "
              "parametrized counts and d = 27")
    print("criterion 11: trace code [33,6,27]_32 holds 2-(33,27,702)_32 and "
          "2-(33,28,945)_32 designs, verified by fixed-coordinate and full "
          "pattern counting")


def test_criterion_12_index_formula_oracle():
    # Golay weight-5 class: a verified q-ary 3-(11,5,1) design
    golay5 = family_from_code(ternary_golay_code(), 5)
    for i in range(0, 4):
        want = scaled_index(1, 3, i, 11, 5, 3)
        assert want.denominator == 1
        got = len(golay5) if i == 0 else qary_design_index(golay5, i).lam
        assert got == want, f"golay i={i}"
    # simplex weight-9 class: a verified q-ary 2-(13,9,3) design
    simplex9 = family_from_code(simplex_code(3, 3), 9)
    for i in range(0, 3):
        want = scaled_index(3, 2, i, 13, 9, 3)
        got = len(simplex9) if i == 0 else qary_design_index(simplex9, i).lam
        assert got == want, f"simplex i={i}"

    # agree/differ/zero pattern counts against exhaustive placement sweeps
    def sweep(fam, lam, t, n, q):
        for x in range(t + 1):
            for y in range(t + 1 - x):
                for z in range(t + 1 - x - y):
                    want = constrained_cover_index(lam, t, n, fam.w, q, x, y, z)
                    assert want.denominator == 1
                    j = x + y + z
                    seen = set()
                    for pos in combinations(range(n), j):
                        for vals in np.ndindex(*([q - 1] * j)):
                            agree = {pos[i]: vals[i] + 1 for i in range(x)}
                            differ = {pos[x + i]: vals[x + i] + 1 for i in range(y)}
                            zero = [pos[x + y + i] for i in range(z)]
                            seen.add(count_constrained(fam, agree, differ, zero))
                    assert seen == {int(want)}, (x, y, z)

    sweep(golay5, 1, 3, 11, 3)
    sweep(simplex9, 3, 2, 13, 3)
    print("criterion 12: reduced-strength and agree/differ/zero index formulas "
          "match exhaustive counts on the Golay and simplex design classes")


def test_criterion_13_regularity_equivalence():
    rng = random.Random(1203)
    tested = 0
    while tested < 20:
        q = rng.choice([3, 4])
        n = rng.randint(4, 8)
        k = rng.randint(1, 4)
        rows = [[rng.randrange(q) for _ in range(n)] for _ in range(k)]
        try:
            C = code_from_generator(field_make(q), rows, strict=False)
        except RankError:
            continue
        prof = code_profile(C)
        if prof.d < 2:
            continue
        tested += 1
        for t in range(1, prof.d // 2 + 1):
            reg = is_t_regular(C, t)
            assert reg.exhaustive
            designs = all(
                qary_design_index(family_from_code(C, w), t, want_witness=False).ok
                for w in prof.weights)
            assert reg.regular == designs, (q, n, k, t)
    print("criterion 13: on 20 random small codes with d >= 2t, t-regularity "
          "holds exactly when every weight class is a q-ary t-design")


def test_declared_out_of_scope_rows_are_skipped():
    from qdesign.suites import run_suite
    rep = run_suite("tables", threads=1)
    skipped = {c["claim_id"] for c in rep["claims"] if c["status"] == "SKIP"}
    assert {"fe2", "fe3", "qr30-enumeration"} <= skipped
    assert rep["ok"]
    print("declared: FE2/FE3 rows and the 4^15 quadratic-residue enumeration "
          "are reported SKIP, never silently dropped")
