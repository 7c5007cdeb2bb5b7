"""Exact arithmetic in small finite fields GF(p^m).

An element of GF(p^m) is an integer index in [0, q): the residue
c0 + c1*a + ... + c_{m-1}*a^(m-1), with a the class of x modulo the
modulus polynomial, is encoded as the base-p integer
c0 + c1*p + ... + c_{m-1}*p^(m-1).  Index 0 is the additive identity,
index 1 the multiplicative identity, and the prime subfield occupies
indices 0..p-1 in every field.

Multiplication, inversion and powering run on discrete-log tables, so
the field order is capped at 2**16.  The modulus is pinned per (p, m):
the monic primitive polynomial whose coefficient encoding is smallest.
That makes element indices, log tables and every file format built on
them stable across runs and machines.
"""

from __future__ import annotations

import functools

import numpy as np

from .errors import ParameterError

MAX_ORDER = 1 << 16
_ADD_TABLE_CAP = 2048  # odd-characteristic add tables stay below this order


def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division (n <= ~2**32 expected)."""
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def prime_power(q: int):
    """Return (p, m) with q = p^m, or None if q is not a prime power."""
    if q < 2:
        return None
    f = factorize(q)
    if len(f) != 1:
        return None
    [(p, m)] = f.items()
    return p, m


# ---------------------------------------------------------------------------
# polynomial arithmetic over F_p (dense little-endian coefficient lists)

def _ptrim(a):
    while len(a) > 1 and a[-1] == 0:
        a.pop()
    return a


def _pmul(a, b, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _ptrim(out)


def _pmod(a, mod, p):
    a = list(a)
    dm = len(mod) - 1
    inv_lead = pow(mod[-1], p - 2, p)
    while len(a) - 1 >= dm and any(a):
        shift = len(a) - 1 - dm
        f = (a[-1] * inv_lead) % p
        if f:
            for i, c in enumerate(mod):
                a[shift + i] = (a[shift + i] - f * c) % p
        _ptrim(a)
        if len(a) - 1 < dm:
            break
        if a[-1] == 0:
            _ptrim(a)
    return _ptrim(a)


def _pmulmod(a, b, mod, p):
    return _pmod(_pmul(a, b, p), mod, p)


def _ppowmod(base, e, mod, p):
    out = [1]
    b = _pmod(base, mod, p)
    while e:
        if e & 1:
            out = _pmulmod(out, b, mod, p)
        b = _pmulmod(b, b, mod, p)
        e >>= 1
    return out


def _poly_irreducible(coeffs, p):
    """Trial division against every monic polynomial of degree <= m/2."""
    m = len(coeffs) - 1
    if m == 1:
        return True
    if coeffs[0] == 0:
        return False
    for deg in range(1, m // 2 + 1):
        for enc in range(p ** deg):
            g = _digits(enc, p, deg) + [1]
            if _poly_divides(g, coeffs, p):
                return False
    return True


def _poly_divides(g, f, p):
    return _pmod(f, g, p) == [0]


def _x_is_primitive(coeffs, p, m):
    """Order of x modulo the (irreducible) polynomial equals p^m - 1."""
    q = p ** m
    if _ppowmod([0, 1], q - 1, coeffs, p) != [1]:
        return False
    for r in factorize(q - 1):
        if _ppowmod([0, 1], (q - 1) // r, coeffs, p) == [1]:
            return False
    return True


def _digits(n, p, width):
    out = []
    for _ in range(width):
        out.append(n % p)
        n //= p
    return out


def _smallest_primitive_root(p):
    if p == 2:
        return 1
    order_factors = factorize(p - 1)
    for g in range(2, p):
        if all(pow(g, (p - 1) // r, p) != 1 for r in order_factors):
            return g
    raise AssertionError(f"no primitive root mod {p}")


@functools.lru_cache(maxsize=None)
def pinned_modulus(p: int, m: int) -> tuple[int, ...]:
    """Canonical monic primitive polynomial of degree m over F_p.

    Degree 1: x - g with g the smallest primitive root mod p.  Otherwise
    the candidate with the smallest encoding sum(c_i * p^i) over the
    non-leading coefficients that is both irreducible and has x as a
    generator of the multiplicative group.
    """
    if m == 1:
        g = _smallest_primitive_root(p)
        return ((-g) % p, 1)
    for enc in range(1, p ** m):
        coeffs = _digits(enc, p, m) + [1]
        if coeffs[0] == 0:
            continue
        if not _poly_irreducible(coeffs, p):
            continue
        if _x_is_primitive(coeffs, p, m):
            return tuple(coeffs)
    raise AssertionError(f"no primitive polynomial found for p={p}, m={m}")


# ---------------------------------------------------------------------------


class GF:
    """GF(q), q = p^m <= 2**16, with pinned modulus and log/antilog tables."""

    def __init__(self, q: int, modulus=None):
        pm = prime_power(q)
        if pm is None:
            raise ParameterError(f"{q} is not a prime power")
        if q > MAX_ORDER:
            raise ParameterError(f"field order {q} exceeds cap {MAX_ORDER}")
        self.q = q
        self.p, self.m = pm
        self.modulus = tuple(modulus) if modulus is not None else pinned_modulus(self.p, self.m)
        if len(self.modulus) != self.m + 1 or self.modulus[-1] != 1:
            raise ParameterError("modulus must be monic of degree m")
        if not _poly_irreducible(list(self.modulus), self.p):
            raise ParameterError("modulus is reducible")

        self._ord = q - 1
        self._build_tables()
        self.np_dtype = np.uint8 if q <= 256 else np.uint16

        self._exp_np = np.array(self._exp, dtype=np.int32)
        self._log_np = np.array(self._log, dtype=np.int32)  # log[0] == -1 sentinel
        if self.p == 2:
            self._add_np = None
        elif q <= _ADD_TABLE_CAP:
            t = np.empty((q, q), dtype=np.int32)
            for a in range(q):
                for b in range(q):
                    t[a, b] = self.add(a, b)
            self._add_np = t
        else:
            self._add_np = None
        self._neg_np = np.array([self.neg(a) for a in range(q)], dtype=np.int32)

    # -- construction helpers ------------------------------------------------

    def _mul_by_x(self, e: int) -> int:
        """Multiply an element index by the class of x, reducing mod modulus."""
        p, m = self.p, self.m
        if p == 2:
            e <<= 1
            if e >= self.q:
                e ^= self._mod_int
            return e
        d = _digits(e, p, m)
        top = d[m - 1]
        d = [0] + d[: m - 1]
        if top:
            for i in range(m):
                d[i] = (d[i] - top * self.modulus[i]) % p
        return sum(c * p ** i for i, c in enumerate(d))

    def _build_tables(self):
        p, m, q = self.p, self.m, self.q
        if p == 2:
            self._mod_int = sum(c << i for i, c in enumerate(self.modulus))
        if m == 1:
            g = (-self.modulus[0]) % p
            exp = [1]
            for _ in range(q - 2):
                exp.append((exp[-1] * g) % p)
        else:
            exp = [1]
            for _ in range(q - 2):
                exp.append(self._mul_by_x(exp[-1]))
        if len(set(exp)) != q - 1:
            raise ParameterError("modulus is not primitive: x does not generate")
        self._exp = exp
        self.generator = exp[1] if q > 2 else 1
        log = [-1] * q
        for i, v in enumerate(exp):
            log[v] = i
        self._log = log

    # -- scalar operations ---------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        p = self.p
        out = 0
        mul = 1
        while a or b:
            out += ((a % p + b % p) % p) * mul
            a //= p
            b //= p
            mul *= p
        return out

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        p = self.p
        out = 0
        mul = 1
        while a:
            out += ((p - a % p) % p) * mul
            a //= p
            mul *= p
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % self._ord]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        return self._exp[(-self._log[a]) % self._ord]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e == 0:
                return 1
            if e < 0:
                raise ZeroDivisionError("0 to a negative power")
            return 0
        return self._exp[(self._log[a] * e) % self._ord]

    def dlog(self, a: int) -> int:
        """Discrete log base the pinned generator; a must be nonzero."""
        if a == 0:
            raise ParameterError("discrete log of 0")
        return self._log[a]

    def exp(self, i: int) -> int:
        """Generator raised to the i-th power."""
        return self._exp[i % self._ord] if self.q > 2 else 1

    def elements(self):
        return range(self.q)

    # -- vector operations (element-index arrays) -----------------------------

    def add_np(self, x, y):
        if self.p == 2:
            return np.bitwise_xor(x, y)
        if self._add_np is not None:
            return self._add_np[x, y]
        return self._digitwise_np(x, y)

    def _digitwise_np(self, x, y):
        p = self.p
        out = np.zeros(np.broadcast(x, y).shape, dtype=np.int64)
        xs = np.asarray(x, dtype=np.int64)
        ys = np.asarray(y, dtype=np.int64)
        mul = 1
        for _ in range(self.m):
            out += ((xs % p + ys % p) % p) * mul
            xs, ys = xs // p, ys // p
            mul *= p
        return out

    def neg_np(self, x):
        if self.p == 2:
            return np.asarray(x)
        return self._neg_np[x]

    def mul_np(self, x, y):
        lx = self._log_np[x]
        ly = self._log_np[y]
        out = self._exp_np[(lx + ly) % self._ord]
        zero = (np.asarray(x) == 0) | (np.asarray(y) == 0)
        return np.where(zero, 0, out)

    def mul_scalar_np(self, c: int, x):
        x = np.asarray(x)
        if c == 0:
            return np.zeros_like(x, dtype=np.int32)
        if c == 1:
            return x.astype(np.int32, copy=True)
        lc = self._log[c]
        out = self._exp_np[(self._log_np[x] + lc) % self._ord]
        return np.where(x == 0, 0, out)

    def inv_np(self, x):
        if np.any(np.asarray(x) == 0):
            raise ZeroDivisionError("inverse of 0")
        return self._exp_np[(-self._log_np[x]) % self._ord]

    def __repr__(self):
        return f"GF({self.q})"


@functools.lru_cache(maxsize=None)
def field_make(q: int) -> GF:
    """The canonical GF(q) for a prime power q <= 2**16."""
    return GF(q)


# ---------------------------------------------------------------------------


class QuadExt:
    """GF(q^2) together with an explicit copy of GF(q) inside it.

    The quadratic extension is built directly of degree 2m over the prime
    field; the subfield copy is the fixed field of x -> x^q.  The embedding
    maps the base field's modulus root to its smallest-index root in the
    extension, which determines an index-remapping table once and for all.
    """

    def __init__(self, base: GF):
        if base.q ** 2 > MAX_ORDER:
            raise ParameterError(f"extension order {base.q ** 2} exceeds cap {MAX_ORDER}")
        self.base = base
        self.top = field_make(base.q ** 2)
        q, q2 = base.q, base.q ** 2
        top = self.top

        # x^q Frobenius table (fixes exactly the embedded subfield)
        frob = np.zeros(q2, dtype=np.int32)
        for i in range(q2 - 1):
            frob[top._exp[i]] = top._exp[(i * q) % (q2 - 1)]
        self.frob_np = frob

        root = self._find_embedding_root()
        embed = np.zeros(q, dtype=np.int32)
        for a in range(q):
            acc = 0
            for c in reversed(_digits(a, base.p, base.m)):
                acc = top.add(top.mul(acc, root), c)
            embed[a] = acc
        self.embed_np = embed
        if len(set(embed.tolist())) != q:
            raise AssertionError("embedding is not injective")

        project = np.full(q2, -1, dtype=np.int32)
        project[embed] = np.arange(q)
        self.project_np = project

        # relative trace x + x^q, as a base-field index table
        tr = np.zeros(q2, dtype=np.int32)
        for x in range(q2):
            t = top.add(x, int(frob[x]))
            b = project[t]
            if b < 0:
                raise AssertionError("trace value escaped the embedded subfield")
            tr[x] = b
        self.trace_np = tr

        if base.p == 2:
            sq = np.array([top.mul(x, x) for x in range(q2)], dtype=np.int32)
            sqrt = np.zeros(q2, dtype=np.int32)
            sqrt[sq] = np.arange(q2)
            self.sqrt_np = sqrt
        else:
            self.sqrt_np = None

    def _find_embedding_root(self) -> int:
        base, top = self.base, self.top
        best = None
        for t in range(top.q):
            acc = 0
            for c in reversed(base.modulus):
                acc = top.add(top.mul(acc, t), c)
            if acc == 0:
                best = t
                break  # indices scanned in order: first root is the smallest
        if best is None:
            raise AssertionError("base modulus has no root in the extension")
        return best

    def trace_to_base(self, x: int) -> int:
        """Tr(x) = x + x^q, returned as a base-field element index."""
        return int(self.trace_np[x])

    def embed(self, a: int) -> int:
        return int(self.embed_np[a])

    def project(self, x: int) -> int:
        b = int(self.project_np[x])
        if b < 0:
            raise ParameterError("element is not in the embedded subfield")
        return b

    def norm_one_group(self) -> list[int]:
        """The q+1 solutions of u^(q+1) = 1, listed as powers of g^(q-1)."""
        q = self.base.q
        top = self.top
        gamma_log = q - 1
        return [top._exp[(gamma_log * i) % (top.q - 1)] for i in range(q + 1)]

    def sqrt(self, x: int) -> int:
        if self.sqrt_np is None:
            raise ParameterError("square-root table only built in characteristic 2")
        return int(self.sqrt_np[x])

    def __repr__(self):
        return f"QuadExt(GF({self.base.q}) in GF({self.top.q}))"


@functools.lru_cache(maxsize=None)
def quadratic_extension(q: int) -> QuadExt:
    return QuadExt(field_make(q))
