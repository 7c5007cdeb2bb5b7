"""Linear codes over small finite fields.

Construction from a generator matrix, duals, puncturing/shortening,
codeword enumeration (blocked, partitionable, optionally threaded),
weight distributions by direct count or MacWilliams transform, covering
radius by syndrome sweep, and the six-parameter profile (d, dual
distance, weight counts, packing/covering radius, divisor, and the
largest weight whose supports repeat exactly q-1 times).

Codewords are numpy rows of element indices.  Enumeration visits
messages in lexicographic order (first message symbol most significant),
so streams are deterministic and any [start, stop) sub-range can be
handed to a different worker.
"""

from __future__ import annotations

import math
import os
import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field as dc_field
from itertools import combinations

import numpy as np

from .errors import CapacityError, ParameterError, ParseError, RankError
from .fields import GF, field_make

DEFAULT_BUDGET = 1 << 32          # hard cap on enumerated codewords
FILTER_REQUIRED_ABOVE = 1 << 28   # raw streaming above this needs a weight filter
SYNDROME_BUDGET = 1 << 24         # covering-radius syndrome space cap
SCAN_BUDGET = 1 << 26             # support-scan candidate cap


def enumeration_budget() -> int:
    env = os.environ.get("QDESIGN_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


class LinearCode:
    """An [n, k] code held as a reduced row echelon generator matrix."""

    def __init__(self, field: GF, gen: np.ndarray, label: str | None = None):
        self.field = field
        self.gen = np.ascontiguousarray(gen, dtype=np.int32)
        self.k, self.n = self.gen.shape
        self.label = label

    @property
    def size(self) -> int:
        return self.field.q ** self.k

    def params(self) -> tuple[int, int]:
        return self.n, self.k

    def __repr__(self):
        tag = f" {self.label!r}" if self.label else ""
        return f"LinearCode[{self.n},{self.k}]_{self.field.q}{tag}"


def _rref(field: GF, rows):
    """Reduced row echelon form; returns (rows, pivot columns)."""
    rows = [list(map(int, r)) for r in rows]
    if not rows:
        return [], []
    n = len(rows[0])
    pivots = []
    r = 0
    for c in range(n):
        pr = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = field.inv(rows[r][c])
        if inv != 1:
            rows[r] = [field.mul(inv, v) for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [field.sub(vi, field.mul(f, vr)) for vi, vr in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def code_from_generator(field: GF, rows, strict: bool = True, label: str | None = None) -> LinearCode:
    """Build a code from generator rows, row-reducing to canonical form.

    strict: reject rank-deficient input; otherwise quietly reduce k to
    the actual rank.
    """
    rows = [list(r) for r in rows]
    if not rows or not rows[0]:
        raise ParameterError("empty generator matrix")
    n = len(rows[0])
    if any(len(r) != n for r in rows):
        raise ParameterError("ragged generator matrix")
    for r in rows:
        for v in r:
            if not 0 <= int(v) < field.q:
                raise ParameterError(f"entry {v} outside [0, {field.q})")
    red, pivots = _rref(field, rows)
    if strict and len(red) < len(rows):
        raise RankError(f"generator rank {len(red)} < row count {len(rows)}")
    if not red:
        raise RankError("generator matrix is zero")
    return LinearCode(field, np.array(red, dtype=np.int32), label=label)


def dual(C: LinearCode) -> LinearCode:
    """The [n, n-k] code orthogonal to C under the standard inner product."""
    field, n, k = C.field, C.n, C.k
    _, pivots = _rref(field, C.gen.tolist())
    pivot_set = set(pivots)
    free = [c for c in range(n) if c not in pivot_set]
    rows = []
    for f in free:
        v = [0] * n
        v[f] = 1
        for i, pcol in enumerate(pivots):
            v[pcol] = field.neg(int(C.gen[i, f]))
        rows.append(v)
    if not rows:  # dual of the full space: the zero code
        return LinearCode(field, np.zeros((0, n), dtype=np.int32),
                          label=_derived_label(C, "dual"))
    red, _ = _rref(field, rows)
    return LinearCode(field, np.array(red, dtype=np.int32), label=_derived_label(C, "dual"))


def _derived_label(C, op):
    return f"{op}({C.label})" if C.label else None


def same_code(A: LinearCode, B: LinearCode) -> bool:
    """Set equality of two codes (RREF generator form is canonical)."""
    if A.field.q != B.field.q or A.n != B.n or A.k != B.k:
        return False
    ra, _ = _rref(A.field, A.gen.tolist())
    rb, _ = _rref(B.field, B.gen.tolist())
    return ra == rb


# ---------------------------------------------------------------------------
# enumeration

def iter_codeword_blocks(C: LinearCode, start: int = 0, stop: int | None = None,
                         max_block: int = 1 << 16):
    """Yield (first_message_index, block) over messages in [start, stop).

    Blocks contain consecutive codewords in lexicographic message order;
    a suffix table over the trailing message symbols makes each block a
    single broadcast field addition.
    """
    field, q, k, n = C.field, C.field.q, C.k, C.n
    total = q ** k
    stop = total if stop is None else stop
    if not 0 <= start <= stop <= total:
        raise ParameterError("bad enumeration range")
    if k == 0:
        if start == 0 and stop > 0:
            yield 0, np.zeros((1, n), dtype=np.int32)
        return

    k2 = 1
    while k2 < k and q ** (k2 + 1) <= max_block:
        k2 += 1
    bs = q ** k2

    suffix = np.zeros((1, n), dtype=np.int32)
    for r in range(k - k2, k):
        mults = np.stack([field.mul_scalar_np(v, C.gen[r]) for v in range(q)])
        suffix = field.add_np(suffix[:, None, :], mults[None, :, :]).reshape(-1, n)
    suffix = np.ascontiguousarray(suffix, dtype=np.int32)

    first_block = start // bs
    last_block = (stop - 1) // bs
    for blk in range(first_block, last_block + 1):
        prefix = np.zeros(n, dtype=np.int32)
        idx = blk
        for r in range(k - k2 - 1, -1, -1):
            idx, digit = divmod(idx, q)
            if digit:
                prefix = field.add_np(prefix, field.mul_scalar_np(int(digit), C.gen[r]))
        block = field.add_np(prefix[None, :], suffix)
        lo = blk * bs
        a = max(start - lo, 0)
        b = min(stop - lo, bs)
        yield lo + a, block[a:b]


def enumerate_codewords(C: LinearCode, weight_filter=None, start: int = 0,
                        stop: int | None = None):
    """Stream codewords one row at a time, optionally filtered by weight.

    Every codeword in the range is visited exactly once (the zero word
    included unless filtered out).  Raw streaming of more than 2**28
    codewords requires a weight filter; use [start, stop) ranges to
    partition work across workers.
    """
    total = C.size
    budget = enumeration_budget()
    if total > budget:
        raise CapacityError(
            f"q^k = {total} exceeds budget {budget}; use a weight_filter "
            "with partitioned [start, stop) ranges or raise QDESIGN_BUDGET")
    if total > FILTER_REQUIRED_ABOVE and weight_filter is None:
        raise CapacityError(
            f"q^k = {total} > {FILTER_REQUIRED_ABOVE}: supply a weight_filter "
            "(and partition the range) for streams this large")
    wf = None if weight_filter is None else set(weight_filter)
    for _, block in iter_codeword_blocks(C, start, stop):
        if wf is None:
            yield from block
        else:
            w = np.count_nonzero(block, axis=1)
            keep = np.isin(w, list(wf))
            for row in block[keep]:
                yield row


# ---------------------------------------------------------------------------
# weight distributions

def _direct_weight_counts(C: LinearCode, start: int, stop: int) -> np.ndarray:
    counts = np.zeros(C.n + 1, dtype=np.int64)
    for _, block in iter_codeword_blocks(C, start, stop):
        w = np.count_nonzero(block, axis=1)
        counts += np.bincount(w, minlength=C.n + 1)
    return counts


def _krawtchouk(j, i, n, q):
    return sum((-1) ** l * math.comb(i, l) * math.comb(n - i, j - l) * (q - 1) ** (j - l)
               for l in range(0, min(i, j) + 1))


def macwilliams_transform(counts, n: int, q: int) -> list[int]:
    """Weight distribution of the dual, from a code's exact distribution."""
    size = sum(int(c) for c in counts)
    out = []
    for j in range(n + 1):
        s = sum(int(counts[i]) * _krawtchouk(j, i, n, q) for i in range(n + 1) if counts[i])
        v, rem = divmod(s, size)
        if rem:
            raise AssertionError("MacWilliams transform produced a non-integer")
        out.append(v)
    return out


def weight_distribution(C: LinearCode, method: str = "auto", threads: int = 1) -> np.ndarray:
    """Exact codeword counts by weight (A_0..A_n).

    direct: enumerate q^k codewords.  macwilliams: enumerate the dual and
    transform.  auto picks the smaller dimension.  Both sides over budget
    raises CapacityError.
    """
    q, k, n = C.field.q, C.k, C.n
    budget = enumeration_budget()
    if method == "auto":
        method = "direct" if k <= n - k else "macwilliams"
        if q ** min(k, n - k) > budget:
            raise CapacityError(f"both q^{k} and q^{n - k} exceed budget {budget}")
    if method == "macwilliams":
        Cd = dual(C)
        if Cd.k == 0:
            dual_counts = [1] + [0] * n
        else:
            dual_counts = _threaded_direct(Cd, threads)
        return np.array(macwilliams_transform(dual_counts, n, q), dtype=np.int64)
    if method != "direct":
        raise ParameterError(f"unknown method {method!r}")
    if C.size > budget:
        raise CapacityError(f"q^k = {C.size} exceeds budget {budget}")
    return np.array(_threaded_direct(C, threads), dtype=np.int64)


def _threaded_direct(C: LinearCode, threads: int) -> np.ndarray:
    import sys
    total = C.size
    threads = max(1, int(threads or 1))
    verbose = total >= (1 << 26)
    if verbose:
        sys.stderr.write(f"enumerating {total} codewords of {C!r} "
                         f"({threads} thread{'s' if threads > 1 else ''})\n")
    if threads == 1 or total < (1 << 20):
        return _direct_weight_counts(C, 0, total)
    chunks = threads * 8  # small chunks keep the progress trace honest
    bounds = [total * i // chunks for i in range(chunks + 1)]
    done = 0
    counts = np.zeros(C.n + 1, dtype=np.int64)
    with ThreadPoolExecutor(max_workers=threads) as pool:
        futures = [pool.submit(_direct_weight_counts, C, a, b)
                   for a, b in zip(bounds, bounds[1:])]
        for fut in futures:
            counts += fut.result()
            done += 1
            if verbose and done % threads == 0:
                sys.stderr.write(f"  ...{done}/{chunks} ranges\n")
    return counts


# ---------------------------------------------------------------------------
# fixed-weight codeword extraction

def _pattern_table(q: int, w: int) -> np.ndarray:
    """All (q-1)^w tuples of nonzero values, in lexicographic order."""
    vals = np.arange(1, q, dtype=np.int32)
    grids = np.meshgrid(*([vals] * w), indexing="ij")
    return np.stack([g.ravel() for g in grids], axis=1) if w else np.zeros((1, 0), np.int32)


def codewords_of_weight(C: LinearCode, w: int, method: str = "auto") -> np.ndarray:
    """All weight-w codewords, as a canonically sorted (A_w x n) array.

    scan: run over all supports and nonzero patterns, keeping vectors whose
    syndrome against the dual generator vanishes.  enumerate: filter the
    full codeword stream.  auto takes the cheaper estimate.
    """
    field, q, n, k = C.field, C.field.q, C.n, C.k
    if not 0 <= w <= n:
        raise ParameterError(f"weight {w} out of range")
    if w == 0:
        return np.zeros((1, n), dtype=np.int32)
    enum_cost = C.size
    scan_cost = math.comb(n, w) * (q - 1) ** w
    if method == "auto":
        method = "scan" if scan_cost < enum_cost else "enumerate"
    if method == "enumerate":
        if enum_cost > enumeration_budget():
            raise CapacityError(f"q^k = {enum_cost} over budget; try method='scan'")
        rows = []
        for _, block in iter_codeword_blocks(C):
            wt = np.count_nonzero(block, axis=1)
            rows.append(block[wt == w])
        out = np.concatenate(rows) if rows else np.zeros((0, n), np.int32)
    elif method == "scan":
        if scan_cost > SCAN_BUDGET:
            raise CapacityError(f"support scan size {scan_cost} over budget")
        H = dual(C).gen  # membership test: H v = 0
        patterns = _pattern_table(q, w)
        found = []
        for S in combinations(range(n), w):
            if H.shape[0]:
                syn = np.zeros((patterns.shape[0], H.shape[0]), dtype=np.int32)
                for j, col in enumerate(S):
                    term = field.mul_np(patterns[:, j:j + 1], H[:, col][None, :])
                    syn = field.add_np(syn, term)
                ok = ~syn.any(axis=1)
            else:
                ok = np.ones(patterns.shape[0], dtype=bool)
            if ok.any():
                vecs = np.zeros((int(ok.sum()), n), dtype=np.int32)
                vecs[:, S] = patterns[ok]
                found.append(vecs)
        out = np.concatenate(found) if found else np.zeros((0, n), np.int32)
    else:
        raise ParameterError(f"unknown method {method!r}")
    if out.shape[0] > 1:
        order = np.lexsort(out.T[::-1])
        out = out[order]
    return out


# ---------------------------------------------------------------------------
# puncture / shorten

def puncture(C: LinearCode, m: int) -> LinearCode:
    """Delete coordinate m (0-based) from every codeword."""
    if not 0 <= m < C.n:
        raise ParameterError(f"coordinate {m} out of range")
    rows = np.delete(C.gen, m, axis=1)
    red, _ = _rref(C.field, rows.tolist())
    return LinearCode(C.field, np.array(red, dtype=np.int32),
                      label=_derived_label(C, f"puncture[{m}]"))


def shorten(C: LinearCode, m: int) -> LinearCode:
    """Keep codewords that vanish at coordinate m, then delete it."""
    if not 0 <= m < C.n:
        raise ParameterError(f"coordinate {m} out of range")
    field = C.field
    rows = [list(map(int, r)) for r in C.gen]
    pivot = next((i for i, r in enumerate(rows) if r[m]), None)
    if pivot is None:
        warnings.warn("shortening a coordinate that is identically zero; dimension kept")
    else:
        prow = rows[pivot]
        inv = field.inv(prow[m])
        prow = [field.mul(inv, v) for v in prow]
        for i in range(len(rows)):
            if i != pivot and rows[i][m]:
                f = rows[i][m]
                rows[i] = [field.sub(vi, field.mul(f, vp)) for vi, vp in zip(rows[i], prow)]
        rows.pop(pivot)
    if not rows:
        raise RankError("shortened code is the zero code")
    rows = [r[:m] + r[m + 1:] for r in rows]
    red, _ = _rref(field, rows)
    return LinearCode(field, np.array(red, dtype=np.int32),
                      label=_derived_label(C, f"shorten[{m}]"))


# ---------------------------------------------------------------------------
# radii and the profile

def covering_radius(C: LinearCode) -> int:
    """Exact covering radius by sweeping coset leaders per syndrome."""
    field, q, n, k = C.field, C.field.q, C.n, C.k
    nk = n - k
    if nk == 0:
        return 0
    total = q ** nk
    if total > SYNDROME_BUDGET:
        raise CapacityError(f"syndrome space {total} over budget {SYNDROME_BUDGET}")
    H = dual(C).gen  # nk x n
    radix = (q ** np.arange(nk)).astype(np.int64)
    seen = np.zeros(total, dtype=bool)
    seen[0] = True
    for w in range(1, n + 1):
        level = math.comb(n, w) * (q - 1) ** w
        if level > SCAN_BUDGET:
            raise CapacityError(f"coset sweep level {level} over budget")
        patterns = _pattern_table(q, w)
        for S in combinations(range(n), w):
            syn = np.zeros((patterns.shape[0], nk), dtype=np.int32)
            for j, col in enumerate(S):
                syn = field.add_np(syn, field.mul_np(patterns[:, j:j + 1], H[:, col][None, :]))
            seen[syn.astype(np.int64) @ radix] = True
        if seen.all():
            return w
    raise AssertionError("syndrome sweep did not terminate")


def sphere_bound_radius(C: LinearCode) -> int:
    """Smallest r with |C| * sum_{i<=r} C(n,i)(q-1)^i >= q^n.

    This is the sphere-covering inequality; it lower-bounds the covering
    radius and equals it exactly for perfect codes.
    """
    q, n, k = C.field.q, C.n, C.k
    need = q ** n
    acc = 0
    for r in range(n + 1):
        acc += math.comb(n, r) * (q - 1) ** r
        if q ** k * acc >= need:
            return r
    raise AssertionError("sphere bound did not close")


def support_repeat_bound(n: int, q: int, d: int) -> int:
    """Largest h <= n with h - floor((h+q-2)/(q-1)) < d.

    Weights in [d, h] have every codeword support shared by exactly q-1
    codewords (the scalar multiples and nothing else).
    """
    h = 0
    for cand in range(1, n + 1):
        if cand - (cand + q - 2) // (q - 1) < d:
            h = cand
    return h


@dataclass
class CodeProfile:
    """The fundamental parameters of a code and its dual."""
    n: int
    k: int
    q: int
    counts: list[int]
    dual_counts: list[int]
    weights: list[int] = dc_field(init=False)
    dual_weights: list[int] = dc_field(init=False)
    d: int = dc_field(init=False)
    d_dual: int = dc_field(init=False)
    s: int = dc_field(init=False)
    s_dual: int = dc_field(init=False)
    e: int = dc_field(init=False)
    divisor: int = dc_field(init=False)
    h: int = dc_field(init=False)
    rho: int | None = None
    rho_sphere: int | None = None

    def __post_init__(self):
        self.weights = [i for i in range(1, self.n + 1) if self.counts[i]]
        self.dual_weights = [i for i in range(1, self.n + 1) if self.dual_counts[i]]
        self.d = self.weights[0] if self.weights else 0
        self.d_dual = self.dual_weights[0] if self.dual_weights else 0
        self.s = len(self.weights)
        self.s_dual = len(self.dual_weights)
        self.e = (self.d - 1) // 2 if self.d else 0
        g = 0
        for w in self.weights:
            g = math.gcd(g, w)
        self.divisor = g if g > 1 else 1
        self.h = support_repeat_bound(self.n, self.q, self.d) if self.d else 0

    @property
    def is_mds(self) -> bool:
        return self.d == self.n - self.k + 1

    @property
    def is_perfect(self) -> bool | None:
        if self.rho is None:
            return None
        return self.e == self.rho

    def to_dict(self) -> dict:
        out = {
            "n": self.n, "k": self.k, "q": self.q,
            "d": self.d, "d_dual": self.d_dual,
            "s": self.s, "s_dual": self.s_dual,
            "e": self.e, "rho": self.rho, "rho_sphere_bound": self.rho_sphere,
            "divisor": self.divisor, "h": self.h,
            "weights": self.weights, "dual_weights": self.dual_weights,
            "counts": {str(i): int(c) for i, c in enumerate(self.counts) if c},
            "dual_counts": {str(i): int(c) for i, c in enumerate(self.dual_counts) if c},
            "mds": self.is_mds, "perfect": self.is_perfect,
        }
        if self.rho is not None and self.rho_sphere is not None:
            out["rho_definitions_agree"] = self.rho == self.rho_sphere
        return out


def code_profile(C: LinearCode, compute_rho: bool = False, threads: int = 1) -> CodeProfile:
    """Fill every profile field; exact rho only on request (syndrome sweep).

    The sphere-bound radius is always reported separately: it is a lower
    bound that can differ from the true covering radius on non-perfect
    codes, and divergences are flagged rather than resolved.
    """
    counts = weight_distribution(C, "auto", threads=threads)
    dual_counts = macwilliams_transform(counts, C.n, C.field.q)
    prof = CodeProfile(C.n, C.k, C.field.q, [int(x) for x in counts], dual_counts)
    prof.rho_sphere = sphere_bound_radius(C)
    if compute_rho:
        prof.rho = covering_radius(C)
        if prof.rho < prof.e or (prof.rho > prof.s_dual and prof.k < C.n):
            raise AssertionError("covering radius violates e <= rho <= s_dual")
    return prof


# ---------------------------------------------------------------------------
# generator matrix text format

def save_generator(C: LinearCode, path) -> None:
    """Text format: first line 'q n k', then k rows of n element indices."""
    with open(path, "w") as fh:
        fh.write(f"{C.field.q} {C.n} {C.k}\n")
        for row in C.gen:
            fh.write(" ".join(str(int(v)) for v in row) + "\n")


def load_generator(path) -> LinearCode:
    with open(path) as fh:
        lines = fh.read().splitlines()
    if not lines:
        raise ParseError("empty file", line=1)
    head = lines[0].split()
    if len(head) != 3:
        raise ParseError("expected 'q n k' header", line=1)
    try:
        q, n, k = map(int, head)
    except ValueError:
        raise ParseError("non-integer header field", line=1) from None
    field = field_make(q)
    if len(lines) < 1 + k:
        raise ParseError(f"expected {k} generator rows", line=len(lines))
    rows = []
    for i in range(k):
        parts = lines[1 + i].split()
        if len(parts) != n:
            raise ParseError(f"expected {n} entries", line=2 + i)
        try:
            row = [int(x) for x in parts]
        except ValueError:
            raise ParseError("non-integer entry", line=2 + i) from None
        if any(not 0 <= v < q for v in row):
            raise ParseError(f"entry outside [0, {q})", line=2 + i)
        rows.append(row)
    return code_from_generator(field, rows, strict=True)
