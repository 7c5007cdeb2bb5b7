"""Exact verification of q-ary and classical t-design properties.

A block family is a set of constant-weight vectors over GF(q).  The
q-ary check counts, for every weight-t vector x, the blocks that cover
x (agree with x on each of its nonzero coordinates); the classical
check counts, for every t-subset of coordinates, the block supports
containing it.  Both produce either the common index or a deterministic
failure witness.

Classical counting runs on the distinct support set by default, which
is the convention used for support designs of codes (a support shared
by all q-1 scalar multiples of a codeword appears once).  The multiset
variant is available for identities that need multiplicities.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from itertools import combinations

import numpy as np

from .errors import CapacityError, ParameterError
from .fields import GF, field_make
from .linear import LinearCode, codewords_of_weight, iter_codeword_blocks

SUBSET_ITER_BUDGET = 1 << 24     # number of t-subsets scanned per check
PATTERN_BUDGET = 1 << 26         # (q-1)^t patterns per subset
REGULARITY_EXHAUSTIVE = 1 << 24  # q^n cap for exhaustive outer-distribution scans


class BlockFamily:
    """Constant-weight vectors over GF(q) with (n, q, w) metadata."""

    def __init__(self, field: GF, n: int, w: int, blocks, source: str = ""):
        self.field = field
        self.n = n
        self.w = w
        arr = np.asarray(blocks).reshape(-1, n)
        if arr.size and (arr.min() < 0 or arr.max() >= field.q):
            raise ParameterError("block entries outside the field")
        self.blocks = np.ascontiguousarray(arr, dtype=field.np_dtype)
        self.source = source
        if self.blocks.size:
            wt = np.count_nonzero(self.blocks, axis=1)
            if not (wt == w).all():
                raise ParameterError("blocks do not all have the declared weight")

    def __len__(self):
        return self.blocks.shape[0]

    def __repr__(self):
        return f"BlockFamily(n={self.n}, q={self.field.q}, w={self.w}, blocks={len(self)})"


def family_from_code(C: LinearCode, w: int, method: str = "auto") -> BlockFamily:
    blocks = codewords_of_weight(C, w, method=method)
    src = f"{C.label or 'code'}[{C.n},{C.k}]_{C.field.q}:w={w}"
    return BlockFamily(C.field, C.n, w, blocks, source=src)


def covers(a, b) -> bool:
    """True iff a agrees with b on every nonzero coordinate of b."""
    a = np.asarray(a)
    b = np.asarray(b)
    if a.shape != b.shape:
        raise ParameterError("length mismatch")
    nz = b != 0
    return bool((a[nz] == b[nz]).all())


@dataclass
class DesignCheck:
    """Outcome of a single design verification at strength t."""
    kind: str                   # "qary" | "classical"
    t: int
    ok: bool
    lam: int | None = None
    witness: tuple | None = None
    witness_count: int | None = None
    expected: Fraction | None = None
    vacuous: bool = False
    detail: str = ""

    def to_dict(self) -> dict:
        return {
            "kind": self.kind, "t": self.t, "ok": self.ok,
            "lambda": self.lam,
            "witness": list(self.witness) if self.witness is not None else None,
            "witness_count": self.witness_count,
            "expected_index": _frac_str(self.expected),
            "vacuous": self.vacuous, "detail": self.detail,
        }


def _frac_str(f):
    if f is None:
        return None
    if isinstance(f, Fraction) and f.denominator == 1:
        return int(f)
    return str(f)


def expected_index(count: int, t: int, n: int, w: int, q: int, qary: bool = True) -> Fraction:
    """Index forced by the block count; non-integral means no design at t."""
    denom = math.comb(n, t) * ((q - 1) ** t if qary else 1)
    return Fraction(count * math.comb(w, t), denom)


def qary_design_index(fam: BlockFamily, t: int, want_witness: bool = True) -> DesignCheck:
    """Check whether the family covers every weight-t vector equally often.

    With want_witness=False a non-integral forced index short-circuits the
    count; otherwise counting proceeds until the lexicographically first
    deviant (support, values) pattern is located.
    """
    q, n, w = fam.field.q, fam.n, fam.w
    B = len(fam)
    if B == 0:
        return DesignCheck("qary", t, ok=False, vacuous=True, detail="empty family")
    if not 1 <= t <= w:
        raise ParameterError(f"need 1 <= t <= w, got t={t}, w={w}")
    if math.comb(n, t) > SUBSET_ITER_BUDGET or (q - 1) ** t > PATTERN_BUDGET:
        raise CapacityError(f"counting at t={t} over budget (n={n}, q={q})")

    exp = expected_index(B, t, n, w, q, qary=True)
    if exp.denominator != 1 and not want_witness:
        return DesignCheck("qary", t, ok=False, expected=exp,
                           detail="forced index non-integral")
    target = int(exp) if exp.denominator == 1 else None

    blocks = fam.blocks
    npat = (q - 1) ** t
    radix = ((q - 1) ** np.arange(t - 1, -1, -1)).astype(np.int64)
    reference = None
    for S in combinations(range(n), t):
        sub = blocks[:, S]
        ok_rows = (sub != 0).all(axis=1)
        vals = sub[ok_rows].astype(np.int64) - 1
        counts = np.bincount(vals @ radix, minlength=npat) if vals.size else np.zeros(npat, np.int64)
        cmp = target if target is not None else (reference if reference is not None else int(counts[0]))
        if reference is None and target is None:
            reference = int(counts[0])
        bad = np.flatnonzero(counts != cmp)
        if bad.size:
            vec = _decode_pattern(S, int(bad[0]), q, n)
            return DesignCheck("qary", t, ok=False, witness=tuple(vec),
                               witness_count=int(counts[bad[0]]), expected=exp,
                               detail="deviant cover count")
    lam = target if target is not None else reference
    return DesignCheck("qary", t, ok=True, lam=int(lam), expected=exp)


def _decode_pattern(S, pat: int, q: int, n: int) -> list[int]:
    vec = [0] * n
    for pos in reversed(S):
        pat, digit = divmod(pat, q - 1)
        vec[pos] = digit + 1
    return vec


def _support_matrix(fam: BlockFamily, distinct: bool):
    B = len(fam)
    rows, cols = np.nonzero(fam.blocks != 0)
    sup = cols.reshape(B, fam.w)
    if distinct:
        sup = np.unique(sup, axis=0)
    return sup


def classical_design_index(fam: BlockFamily, t: int, distinct: bool = True,
                           want_witness: bool = True) -> DesignCheck:
    """Check whether block supports form a classical t-design.

    distinct=True counts the deduplicated support set (the support design
    of a code); distinct=False counts the support multiset.
    """
    n, w, q = fam.n, fam.w, fam.field.q
    if len(fam) == 0:
        return DesignCheck("classical", t, ok=False, vacuous=True, detail="empty family")
    if not 1 <= t <= w:
        raise ParameterError(f"need 1 <= t <= w, got t={t}, w={w}")
    nsub = math.comb(n, t)
    if nsub > SUBSET_ITER_BUDGET:
        raise CapacityError(f"{nsub} t-subsets over budget")

    sup = _support_matrix(fam, distinct)
    D = sup.shape[0]
    exp = expected_index(D, t, n, w, q, qary=False)
    if exp.denominator != 1 and not want_witness:
        return DesignCheck("classical", t, ok=False, expected=exp,
                           detail="forced index non-integral")

    ctab = np.zeros((n + 1, t + 1), dtype=np.int64)
    for i in range(n + 1):
        for j in range(t + 1):
            ctab[i, j] = math.comb(i, j)
    acc = np.zeros(nsub, dtype=np.int64)
    for combo in combinations(range(w), t):
        cols = sup[:, combo]
        ranks = np.zeros(D, dtype=np.int64)
        for j in range(t):
            ranks += ctab[cols[:, j], j + 1]
        acc += np.bincount(ranks, minlength=nsub)

    target = int(exp) if exp.denominator == 1 else int(acc[0])
    bad = np.flatnonzero(acc != target)
    if bad.size:
        subset = _decode_colex(int(bad[0]), t, n)
        return DesignCheck("classical", t, ok=False, witness=tuple(subset),
                           witness_count=int(acc[bad[0]]), expected=exp,
                           detail="deviant containment count"
                                  + ("" if distinct else " (multiset)"))
    return DesignCheck("classical", t, ok=True, lam=target, expected=exp,
                       detail="" if distinct else "multiset")


def _decode_colex(rank: int, t: int, n: int) -> list[int]:
    """Inverse of the colex rank sum(C(s_j, j))."""
    out = []
    for j in range(t, 0, -1):
        c = j - 1
        while math.comb(c + 1, j) <= rank:
            c += 1
        out.append(c)
        rank -= math.comb(c, j)
    return sorted(out)


def is_complete_support_design(fam: BlockFamily) -> bool:
    """True iff the distinct supports are all w-subsets of the points."""
    sup = _support_matrix(fam, distinct=True)
    return sup.shape[0] == math.comb(fam.n, fam.w)


@dataclass
class StrengthReport:
    t_qary: int
    t_classical: int
    qary_table: dict = dc_field(default_factory=dict)
    classical_table: dict = dc_field(default_factory=dict)

    def to_dict(self):
        return {
            "t_qary": self.t_qary, "t_classical": self.t_classical,
            "qary": {str(t): c.to_dict() for t, c in sorted(self.qary_table.items())},
            "classical": {str(t): c.to_dict() for t, c in sorted(self.classical_table.items())},
        }


def max_strengths(fam: BlockFamily, want_witness: bool = False,
                  distinct: bool = True, t_cap: int | None = None) -> StrengthReport:
    """Largest verified strengths, scanning t upward until the first failure."""
    cap = fam.w if t_cap is None else min(t_cap, fam.w)
    rep = StrengthReport(0, 0)
    for t in range(1, cap + 1):
        chk = qary_design_index(fam, t, want_witness=want_witness)
        rep.qary_table[t] = chk
        if not chk.ok:
            break
        rep.t_qary = t
    for t in range(1, cap + 1):
        chk = classical_design_index(fam, t, distinct=distinct, want_witness=want_witness)
        rep.classical_table[t] = chk
        if not chk.ok:
            break
        rep.t_classical = t
    return rep


# ---------------------------------------------------------------------------
# index arithmetic

def scaled_index(lam, t: int, i: int, n: int, w: int, q: int, qary: bool = True) -> Fraction:
    """Index at reduced strength i of a (q-ary) t-(n, w, lam) design.

    q-ary: lam * (q-1)^(t-i) * C(n-i, t-i) / C(w-i, t-i); the classical
    variant drops the (q-1) power.
    """
    if not 0 <= i <= t <= w <= n:
        raise ParameterError("need 0 <= i <= t <= w <= n")
    scale = Fraction(math.comb(n - i, t - i), math.comb(w - i, t - i))
    if qary:
        scale *= (q - 1) ** (t - i)
    return Fraction(lam) * scale


def constrained_cover_index(lam, t: int, n: int, w: int, q: int,
                            agree: int, differ: int, zero: int) -> Fraction:
    """Blocks matching a nonzero pattern on `agree` coordinates, nonzero but
    different on `differ`, and zero on `zero` coordinates, for a q-ary
    t-(n, w, lam) design:

        lam * (q-2)^differ * (q-1)^(t-agree-differ)
            * C(n-agree-differ-zero, w-agree-differ) / C(n-t, w-t)
    """
    x, y, z = agree, differ, zero
    if x + y + z > t:
        raise ParameterError("need agree + differ + zero <= t")
    num = math.comb(n - x - y - z, w - x - y)
    den = math.comb(n - t, w - t)
    return Fraction(lam) * (q - 2) ** y * (q - 1) ** (t - x - y) * Fraction(num, den)


def count_constrained(fam: BlockFamily, agree_at: dict[int, int],
                      differ_at: dict[int, int], zero_at) -> int:
    """Direct count of blocks matching an agree/differ/zero constraint."""
    blocks = fam.blocks
    keep = np.ones(len(fam), dtype=bool)
    for pos, val in agree_at.items():
        keep &= blocks[:, pos] == val
    for pos, val in differ_at.items():
        col = blocks[:, pos]
        keep &= (col != 0) & (col != val)
    for pos in zero_at:
        keep &= blocks[:, pos] == 0
    return int(keep.sum())


# ---------------------------------------------------------------------------
# support multiplicity / fixed-coordinate counting

def _packed_supports(fam: BlockFamily):
    bits = np.packbits((fam.blocks != 0).astype(np.uint8), axis=1)
    return bits.view([("", bits.dtype)] * bits.shape[1]).ravel()


@dataclass
class SupportMultiplicity:
    ok: bool
    distinct: int
    multiplicity: int | None
    witness: tuple | None = None
    witness_count: int | None = None


def support_multiplicity(fam: BlockFamily, expect: int | None = None) -> SupportMultiplicity:
    """Check that every distinct support is shared by equally many blocks.

    expect defaults to q-1, the multiplicity that holds for weights up to
    the repeat bound of the originating code.
    """
    if expect is None:
        expect = fam.field.q - 1
    packed = _packed_supports(fam)
    uniq, counts = np.unique(packed, return_counts=True)
    if (counts == expect).all():
        return SupportMultiplicity(True, len(uniq), expect)
    bad = int(np.flatnonzero(counts != expect)[0])
    row = int(np.flatnonzero(packed == uniq[bad])[0])
    wit = tuple(int(i) for i in np.flatnonzero(fam.blocks[row] != 0))
    return SupportMultiplicity(False, len(uniq), None, witness=wit,
                               witness_count=int(counts[bad]))


def fixed_support_index(fam: BlockFamily, t: int, positions) -> DesignCheck:
    """Cover counts restricted to the (q-1)^t weight-t vectors on one support.

    A constant count certifies a design only when the code's automorphism
    group is known to be t-transitive; callers record that proviso.
    """
    q, n = fam.field.q, fam.n
    S = tuple(positions)
    if len(S) != t or len(set(S)) != t or not all(0 <= p < n for p in S):
        raise ParameterError("positions must be t distinct coordinates")
    sub = fam.blocks[:, S]
    ok_rows = (sub != 0).all(axis=1)
    vals = sub[ok_rows].astype(np.int64) - 1
    radix = ((q - 1) ** np.arange(t - 1, -1, -1)).astype(np.int64)
    counts = np.bincount(vals @ radix, minlength=(q - 1) ** t) if vals.size \
        else np.zeros((q - 1) ** t, np.int64)
    first = int(counts[0])
    bad = np.flatnonzero(counts != first)
    if bad.size:
        vec = _decode_pattern(S, int(bad[0]), q, n)
        return DesignCheck("qary", t, ok=False, witness=tuple(vec),
                           witness_count=int(counts[bad[0]]),
                           detail="non-constant count on fixed support")
    return DesignCheck("qary", t, ok=True, lam=first,
                       detail="fixed-support count; design conclusion requires "
                              "t-transitive automorphisms")


# ---------------------------------------------------------------------------
# group divisible designs

@dataclass
class GddInstance:
    """Points [n] x nonzero-symbols; one group per coordinate."""
    n_groups: int
    group_size: int
    t: int
    lam: int
    blocks: list[frozenset]

    @property
    def n_points(self):
        return self.n_groups * self.group_size

    def groups(self):
        g = self.group_size
        return [frozenset(range(i * g, (i + 1) * g)) for i in range(self.n_groups)]


def to_gdd(fam: BlockFamily, t: int, lam: int, verify: bool = True) -> GddInstance:
    """Convert a verified q-ary t-(n, w, lam) family to a group divisible
    design of type (q-1)^n: point (i, v) <-> coordinate i holding value v."""
    q, n = fam.field.q, fam.n
    g = q - 1
    blocks = []
    for row in fam.blocks:
        blocks.append(frozenset(int(i) * g + int(v) - 1 for i, v in enumerate(row) if v))
    inst = GddInstance(n, g, t, lam, blocks)
    if verify:
        _verify_gdd(inst)
    return inst


def _verify_gdd(inst: GddInstance) -> None:
    g, n = inst.group_size, inst.n_groups
    for b in inst.blocks:
        if len({p // g for p in b}) != len(b):
            raise AssertionError("a block meets some group twice")
    for groups in combinations(range(n), inst.t):
        for vals in np.ndindex(*([g] * inst.t)):
            pts = {gi * g + v for gi, v in zip(groups, vals)}
            cnt = sum(1 for b in inst.blocks if pts <= b)
            if cnt != inst.lam:
                raise AssertionError(f"t-subset {sorted(pts)} lies in {cnt} != {inst.lam} blocks")


def gdd_to_family(inst: GddInstance, field: GF) -> BlockFamily:
    """Inverse conversion; round-trips with to_gdd."""
    g = inst.group_size
    if field.q - 1 != g:
        raise ParameterError("field does not match group size")
    rows = []
    for b in inst.blocks:
        vec = [0] * inst.n_groups
        for p in sorted(b):
            vec[p // g] = p % g + 1
        rows.append(vec)
    w = len(next(iter(inst.blocks))) if inst.blocks else 0
    return BlockFamily(field, inst.n_groups, w, np.array(rows, dtype=np.int32),
                       source="gdd")


# ---------------------------------------------------------------------------
# outer distribution and t-regularity

def outer_distribution(C: LinearCode, x) -> np.ndarray:
    """B_{x,i}: number of codewords at Hamming distance i from x."""
    x = np.asarray(x, dtype=np.int32)
    if x.shape != (C.n,):
        raise ParameterError("vector length mismatch")
    counts = np.zeros(C.n + 1, dtype=np.int64)
    for _, block in iter_codeword_blocks(C):
        d = (block != x[None, :]).sum(axis=1)
        counts += np.bincount(d, minlength=C.n + 1)
    return counts


def _all_codewords(C: LinearCode) -> np.ndarray:
    if C.size > (1 << 22):
        raise CapacityError("too many codewords to materialize")
    return np.concatenate([b for _, b in iter_codeword_blocks(C)])


def full_outer_table(C: LinearCode, chunk: int = 4096):
    """(distance-to-code, outer distribution row) for every vector in F_q^n.

    Brute force over the whole space; small codes only.  Serves as the
    independent oracle for the coset-based regularity scan.
    """
    q, n = C.field.q, C.n
    total = q ** n
    if total > (1 << 20) or total * C.size > (1 << 28):
        raise CapacityError("full outer table over budget")
    cws = _all_codewords(C)
    M = cws.shape[0]
    space = LinearCode(C.field, np.eye(n, dtype=np.int32))
    hist = np.zeros((total, n + 1), dtype=np.int32)
    row0 = 0
    for _, block in iter_codeword_blocks(space, max_block=chunk):
        m = block.shape[0]
        dmat = np.empty((m, M), dtype=np.int16)
        for j in range(M):
            dmat[:, j] = (block != cws[j][None, :]).sum(axis=1)
        offsets = dmat.astype(np.int64) + (np.arange(m)[:, None] * (n + 1))
        part = np.bincount(offsets.ravel(), minlength=m * (n + 1))
        hist[row0:row0 + m] = part.reshape(m, n + 1).astype(np.int32)
        row0 += m
    dist = np.argmax(hist > 0, axis=1)
    return dist, hist


@dataclass
class RegularityResult:
    regular: bool
    t: int
    exhaustive: bool
    witness: tuple | None = None
    detail: str = ""


def coset_representatives(C: LinearCode, max_weight: int):
    """One minimum-weight representative per coset of leader weight
    <= max_weight, found by sweeping patterns in (weight, support, value)
    order.  The outer distribution is constant on cosets, so these
    representatives carry all the regularity information.
    """
    field, q, n, k = C.field, C.field.q, C.n, C.k
    nk = n - k
    if nk == 0:
        return [(0, np.zeros(n, dtype=np.int32))]
    total = q ** nk
    if total > REGULARITY_EXHAUSTIVE:
        raise CapacityError(f"syndrome space {total} over budget")
    from .linear import dual as _dual
    H = _dual(C).gen
    radix = (q ** np.arange(nk)).astype(np.int64)
    seen = np.zeros(total, dtype=bool)
    seen[0] = True
    reps = [(0, np.zeros(n, dtype=np.int32))]
    vals = np.arange(1, q, dtype=np.int32)
    for w in range(1, max_weight + 1):
        patterns = np.stack([g.ravel() for g in
                             np.meshgrid(*([vals] * w), indexing="ij")], axis=1)
        for S in combinations(range(n), w):
            syn = np.zeros((patterns.shape[0], nk), dtype=np.int32)
            for j, col in enumerate(S):
                syn = field.add_np(syn, field.mul_np(patterns[:, j:j + 1],
                                                     H[:, col][None, :]))
            ids = syn.astype(np.int64) @ radix
            for row, sid in enumerate(ids):
                if not seen[sid]:
                    seen[sid] = True
                    vec = np.zeros(n, dtype=np.int32)
                    vec[list(S)] = patterns[row]
                    reps.append((w, vec))
    return reps


def is_t_regular(C: LinearCode, t: int) -> RegularityResult:
    """Whether the outer-distribution row depends only on d(x, C) over all
    x with d(x, C) <= t.

    B_x is constant on cosets of the code, so the scan runs over coset
    representatives: exhaustive whenever the syndrome space and the
    codeword list fit the budget, with a documented partial fallback
    (leading-coordinate error patterns around the first codewords)
    beyond that.
    """
    q, n, k = C.field.q, C.n, C.k
    if q ** (n - k) <= REGULARITY_EXHAUSTIVE and C.size <= (1 << 22):
        cws = _all_codewords(C)
        rows_by_d: dict[int, np.ndarray] = {}
        for w, vec in coset_representatives(C, t):
            row = np.bincount((cws != vec[None, :]).sum(axis=1), minlength=n + 1)
            prev = rows_by_d.get(w)
            if prev is None:
                rows_by_d[w] = row
            elif not np.array_equal(prev, row):
                return RegularityResult(False, t, True,
                                        witness=tuple(int(v) for v in vec),
                                        detail=f"rows differ at distance {w}")
        return RegularityResult(True, t, True)

    # partial fallback: deterministic sample around the first codewords
    rows_by_d = {}
    for x in _regular_sample(C, t):
        hist = outer_distribution(C, x)
        dval = int(np.argmax(hist > 0))
        if dval > t:
            continue
        if dval in rows_by_d and not np.array_equal(rows_by_d[dval], hist):
            return RegularityResult(False, t, False, witness=tuple(int(v) for v in x),
                                    detail=f"rows differ at distance {dval}")
        rows_by_d.setdefault(dval, hist)
    return RegularityResult(True, t, False, detail="sampled scan only; marked partial")


def _regular_sample(C: LinearCode, t: int, max_codewords: int = 32, span: int = 10):
    q, n = C.field.q, C.n
    errs = [np.zeros(n, dtype=np.int32)]
    cols = range(min(n, span))
    for wt in range(1, t + 1):
        for S in combinations(cols, wt):
            for vals in np.ndindex(*([q - 1] * wt)):
                e = np.zeros(n, dtype=np.int32)
                for pos, v in zip(S, vals):
                    e[pos] = v + 1
                errs.append(e)
    count = 0
    for _, block in iter_codeword_blocks(C):
        for cw in block:
            for e in errs:
                yield C.field.add_np(cw, e)
            count += 1
            if count >= max_codewords:
                return


# ---------------------------------------------------------------------------
# block family text format and reports

def save_family(fam: BlockFamily, path) -> None:
    """Text format: first line 'q n w B', then B rows of n element indices."""
    with open(path, "w") as fh:
        fh.write(f"{fam.field.q} {fam.n} {fam.w} {len(fam)}\n")
        for row in fam.blocks:
            fh.write(" ".join(str(int(v)) for v in row) + "\n")


def load_family(path) -> BlockFamily:
    from .errors import ParseError
    with open(path) as fh:
        lines = fh.read().splitlines()
    if not lines:
        raise ParseError("empty file", line=1)
    head = lines[0].split()
    if len(head) != 4:
        raise ParseError("expected 'q n w B' header", line=1)
    try:
        q, n, w, B = map(int, head)
    except ValueError:
        raise ParseError("non-integer header field", line=1) from None
    if len(lines) < 1 + B:
        raise ParseError(f"expected {B} block rows", line=len(lines))
    rows = []
    for i in range(B):
        parts = lines[1 + i].split()
        if len(parts) != n:
            raise ParseError(f"expected {n} entries", line=2 + i)
        try:
            rows.append([int(x) for x in parts])
        except ValueError:
            raise ParseError("non-integer entry", line=2 + i) from None
    return BlockFamily(field_make(q), n, w, np.array(rows, dtype=np.int32).reshape(B, n))


def design_report(fam: BlockFamily, checks: list[DesignCheck],
                  strengths: StrengthReport | None = None,
                  provisos: list[str] | None = None) -> dict:
    out = {
        "family": {"n": fam.n, "q": fam.field.q, "w": fam.w,
                   "blocks": len(fam), "source": fam.source},
        "checks": [c.to_dict() for c in checks],
        "provisos": provisos or [],
    }
    if strengths is not None:
        out["strengths"] = strengths.to_dict()
    return out
