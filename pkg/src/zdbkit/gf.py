"""Exact arithmetic in F_{p^n} built from a primitive polynomial.

Elements are plain integers ("codes"): the element sum_i c_i w^i with
digits c_i in [0, p) is packed as sum_i c_i p^i, so for p = 2 a code is
the usual bitstring of the coefficient vector.  Code 0 is the additive
identity and code 1 the multiplicative identity.  All multiplicative
structure goes through discrete-log tables built at construction time;
contexts are immutable afterwards and safe to share between workers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import (
    DivisionByZero,
    ExponentOutOfRange,
    NotIrreducible,
    NotPrime,
    NotPrimitive,
    ParseError,
)

MAX_ORDER = 1 << 24  # no arbitrary-precision fields beyond this


# ----------------------------------------------------------------------
# small integer / polynomial helpers over F_p (coefficient lists, low first)
# ----------------------------------------------------------------------

def is_prime(m: int) -> bool:
    if m < 2:
        return False
    if m < 4:
        return True
    if m % 2 == 0:
        return False
    f = 3
    while f * f <= m:
        if m % f == 0:
            return False
        f += 2
    return True


def prime_factors(m: int) -> list[int]:
    """Distinct prime factors of m, ascending."""
    out = []
    f = 2
    while f * f <= m:
        if m % f == 0:
            out.append(f)
            while m % f == 0:
                m //= f
        f += 1 if f == 2 else 2
    if m > 1:
        out.append(m)
    return out


def _poly_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mulmod(a: list[int], b: list[int], mod: list[int], p: int) -> list[int]:
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    # reduce modulo the monic polynomial `mod`
    n = len(mod) - 1
    for i in range(len(out) - 1, n - 1, -1):
        c = out[i]
        if c:
            out[i] = 0
            for j in range(n):
                out[i - n + j] = (out[i - n + j] - c * mod[j]) % p
    return _poly_trim(out[:n] if len(out) > n else out)


def _poly_powmod(base: list[int], e: int, mod: list[int], p: int) -> list[int]:
    result = [1]
    acc = list(base)
    while e:
        if e & 1:
            result = _poly_mulmod(result, acc, mod, p)
        acc = _poly_mulmod(acc, acc, mod, p)
        e >>= 1
    return result


def _poly_sub(a: list[int], b: list[int], p: int) -> list[int]:
    m = max(len(a), len(b))
    out = [((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p
           for i in range(m)]
    return _poly_trim(out)


def _poly_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _poly_trim(list(a)), _poly_trim(list(b))
    while b:
        r = list(a)
        inv = pow(b[-1], p - 2, p)
        while len(r) >= len(b):
            c = (r[-1] * inv) % p
            shift = len(r) - len(b)
            for j, bj in enumerate(b):
                r[shift + j] = (r[shift + j] - c * bj) % p
            _poly_trim(r)
            if not r:
                break
        a, b = b, r
    return a


def _is_irreducible(mod: list[int], p: int) -> bool:
    """Rabin test: x^(p^n) = x mod f and gcd(x^(p^(n/r)) - x, f) = 1."""
    n = len(mod) - 1
    if n == 1:
        return True
    x = [0, 1]
    xq = _poly_powmod(x, p**n, mod, p)
    if _poly_sub(xq, x, p):
        return False
    for r in prime_factors(n):
        xe = _poly_powmod(x, p ** (n // r), mod, p)
        g = _poly_gcd(mod, _poly_sub(xe, x, p), p)
        if len(g) != 1:
            return False
    return True


# ----------------------------------------------------------------------
# field spec and context
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class FieldSpec:
    """Defining data of F_{p^n}: prime p, degree n, monic modulus (constant term first)."""

    p: int
    n: int
    modulus: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "modulus", tuple(int(c) % self.p for c in self.modulus))


class FieldCtx:
    """A fully materialized F_{p^n} with exp/log tables and absolute trace.

    Use :func:`build_field` to construct one; the constructor assumes the
    spec was already validated.
    """

    def __init__(self, spec: FieldSpec):
        self.spec = spec
        self.p = spec.p
        self.n = spec.n
        self.q = spec.p ** spec.n
        self._pw = np.array([self.p**i for i in range(self.n)], dtype=np.int64)

        # w = class of the polynomial variable; for n = 1 it reduces to -c0.
        self.w = self.p if self.n > 1 else (-spec.modulus[0]) % self.p

        exp = np.zeros(max(self.q - 1, 1), dtype=np.int64)
        log = np.zeros(self.q, dtype=np.int64)
        digits = [0] * self.n
        digits[0] = 1
        code = 1
        for k in range(self.q - 1):
            exp[k] = code
            log[code] = k
            digits = self._mul_by_w(digits)
            code = 0
            for i in range(self.n - 1, -1, -1):
                code = code * self.p + digits[i]
        if code != 1:
            raise NotPrimitive("exp table did not close after q-1 steps")
        self.exp = exp
        self.log = log

        # digit matrix of every code, used for additive vector arithmetic
        codes = np.arange(self.q, dtype=np.int64)
        dg = np.empty((self.q, self.n), dtype=np.int8)
        rest = codes.copy()
        for i in range(self.n):
            dg[:, i] = rest % self.p
            rest //= self.p
        self.digits = dg

        self.trace_table = self._build_trace()
        self._tr2 = None
        self._mask_of = None
        self._add_tab = None
        for arr in (self.exp, self.log, self.digits, self.trace_table):
            arr.setflags(write=False)

    # -- construction helpers ------------------------------------------

    def _mul_by_w(self, digits: list[int]) -> list[int]:
        carry = digits[-1]
        out = [0] + digits[:-1]
        if carry:
            for i in range(self.n):
                out[i] = (out[i] - carry * self.spec.modulus[i]) % self.p
        return out

    def _build_trace(self) -> np.ndarray:
        q, p, n = self.q, self.p, self.n
        tr = np.zeros(q, dtype=np.int8)
        ks = np.arange(q - 1, dtype=np.int64)
        acc = np.zeros(q - 1, dtype=np.int64)
        for i in range(n):
            conj = self.exp[(ks * p**i) % (q - 1)]
            acc = self._add_codes(acc, conj)
        if np.any(acc >= p):
            raise NotPrimitive("trace left the prime field; tables corrupt")
        tr[self.exp[ks]] = acc
        return tr

    def _add_codes(self, xs, ys):
        """Componentwise mod-p addition of code arrays (or scalars)."""
        if self.p == 2:
            return np.bitwise_xor(xs, ys)
        dx = self._digitize(xs)
        dy = self._digitize(ys)
        return (((dx + dy) % self.p) @ self._pw)

    def _digitize(self, xs):
        xs = np.asarray(xs, dtype=np.int64)
        out = np.empty(xs.shape + (self.n,), dtype=np.int64)
        rest = xs.copy()
        for i in range(self.n):
            out[..., i] = rest % self.p
            rest //= self.p
        return out

    # -- scalar arithmetic ---------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        return int(self._add_codes(np.int64(a), np.int64(b)))

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        return int((((-self.digits[a]) % self.p) @ self._pw))

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return int(self.exp[(self.log[a] + self.log[b]) % (self.q - 1)])

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("inv(0)")
        return int(self.exp[(-self.log[a]) % (self.q - 1)])

    def pow(self, a: int, e: int) -> int:
        if e == 0:
            return 1  # 0^0 := 1 by convention
        if a == 0:
            if e < 0:
                raise DivisionByZero("0 to a negative power")
            return 0
        return int(self.exp[(self.log[a] * e) % (self.q - 1)])

    def frobenius(self, a: int) -> int:
        return self.pow(a, self.p)

    def trace(self, a: int) -> int:
        return int(self.trace_table[a])

    # -- vectorized arithmetic -----------------------------------------

    def elements(self) -> np.ndarray:
        return np.arange(self.q, dtype=np.int64)

    def add_vec(self, xs, ys):
        return self._add_codes(np.asarray(xs, dtype=np.int64),
                               np.asarray(ys, dtype=np.int64))

    def neg_vec(self, xs):
        if self.p == 2:
            return np.asarray(xs, dtype=np.int64)
        return ((-self._digitize(xs)) % self.p) @ self._pw

    def sub_vec(self, xs, ys):
        return self.add_vec(xs, self.neg_vec(ys))

    def shift_table(self, a: int) -> np.ndarray:
        """Codes of x + a for every code x, in code order."""
        if self.p == 2:
            return np.arange(self.q, dtype=np.int64) ^ a
        return self.add_vec(np.arange(self.q, dtype=np.int64), np.int64(a))

    def mul_vec(self, xs, c: int):
        """Elementwise x*c over an array of codes."""
        xs = np.asarray(xs, dtype=np.int64)
        if c == 0:
            return np.zeros_like(xs)
        out = np.zeros_like(xs)
        nz = xs != 0
        out[nz] = self.exp[(self.log[xs[nz]] + self.log[c]) % (self.q - 1)]
        return out

    def mul_vv(self, xs, ys):
        xs, ys = np.broadcast_arrays(np.asarray(xs, dtype=np.int64),
                                     np.asarray(ys, dtype=np.int64))
        out = np.zeros(xs.shape, dtype=np.int64)
        nz = (xs != 0) & (ys != 0)
        out[nz] = self.exp[(self.log[xs[nz]] + self.log[ys[nz]]) % (self.q - 1)]
        return out

    def pow_table(self, d: int) -> np.ndarray:
        """Table of x^d for all codes x (0^0 = 1, 0^d = 0 for d > 0)."""
        out = np.zeros(self.q, dtype=np.int64)
        if d == 0:
            out[:] = 1
            return out
        ks = np.arange(self.q - 1, dtype=np.int64)
        out[self.exp[ks]] = self.exp[(ks * d) % (self.q - 1)]
        return out

    @property
    def tr_bilinear(self) -> np.ndarray:
        """Table T[a, y] = Tr(a*y), built lazily (q <= 8192)."""
        if self._tr2 is None:
            if self.q > 8192:
                raise MemoryError(f"bilinear trace table too large for q={self.q}")
            t = np.zeros((self.q, self.q), dtype=np.int8)
            logs = self.log[1:]
            for a in range(1, self.q):
                la = self.log[a]
                row = np.zeros(self.q, dtype=np.int8)
                row[1:] = self.trace_table[self.exp[(la + logs) % (self.q - 1)]]
                t[a] = row
            t.setflags(write=False)
            self._tr2 = t
        return self._tr2

    @property
    def add_table(self) -> np.ndarray:
        """Table A[x, a] = x + a, built lazily (q <= 2048)."""
        if self._add_tab is None:
            if self.q > 2048:
                raise MemoryError(f"addition table too large for q={self.q}")
            xs = np.arange(self.q, dtype=np.int32)
            if self.p == 2:
                t = xs[:, None] ^ xs[None, :]
            else:
                dsum = (self.digits[:, None, :].astype(np.int32)
                        + self.digits[None, :, :]) % self.p
                t = dsum @ self._pw.astype(np.int32)
            t = np.ascontiguousarray(t, dtype=np.int32)
            t.setflags(write=False)
            self._add_tab = t
        return self._add_tab

    @property
    def mask_of(self) -> np.ndarray:
        """For p = 2: m with Tr(b*x) = parity(m[b] & x); a linear bijection."""
        if self.p != 2:
            raise ValueError("mask_of is defined for p = 2 only")
        if self._mask_of is None:
            tr2 = self.tr_bilinear
            m = np.zeros(self.q, dtype=np.int64)
            for i in range(self.n):
                m |= tr2[:, 1 << i].astype(np.int64) << i
            m.setflags(write=False)
            self._mask_of = m
        return self._mask_of

    # -- element codec --------------------------------------------------

    def parse_elem(self, s: str) -> int:
        s = s.strip()
        if s == "0":
            return 0
        if s == "1":
            return 1
        if s == "w":
            return int(self.exp[1 % (self.q - 1)])
        if s.startswith("w^"):
            try:
                k = int(s[2:])
            except ValueError as e:
                raise ParseError(f"bad exponent in element {s!r}") from e
            if not 0 <= k < self.q - 1:
                raise ExponentOutOfRange(
                    f"w^{k} out of range: need 0 <= k < {self.q - 1}")
            return int(self.exp[k])
        raise ParseError(f"cannot parse element {s!r}; expected 0, 1 or w^k")

    def format_elem(self, code: int) -> str:
        if not 0 <= code < self.q:
            raise ParseError(f"code {code} outside [0, {self.q})")
        if code == 0:
            return "0"
        if code == 1:
            return "1"
        return f"w^{int(self.log[code])}"

    def __repr__(self):
        return f"FieldCtx(p={self.p}, n={self.n}, q={self.q})"


def build_field(spec: FieldSpec) -> FieldCtx:
    """Validate a field spec and materialize its context.

    Raises NotPrime / NotIrreducible / NotPrimitive naming the first
    failed check.  Primitivity is decided by w^((q-1)/r) != 1 for every
    prime r | q-1, before any table is built.
    """
    if not is_prime(spec.p):
        raise NotPrime(f"p={spec.p} is not prime")
    if spec.n < 1:
        raise ParseError(f"extension degree n={spec.n} must be >= 1")
    if len(spec.modulus) != spec.n + 1:
        raise ParseError(
            f"modulus must have degree {spec.n} (got {len(spec.modulus) - 1})")
    if spec.modulus[-1] != 1:
        raise ParseError("modulus must be monic")
    q = spec.p ** spec.n
    if q > MAX_ORDER:
        raise ParseError(f"field order {q} exceeds supported maximum {MAX_ORDER}")

    mod = list(spec.modulus)
    if spec.n >= 2 and mod[0] == 0:
        raise NotIrreducible("constant term zero: x divides the modulus")
    if not _is_irreducible(mod, spec.p):
        raise NotIrreducible(f"modulus {spec.modulus} factors over F_{spec.p}")

    x = [(-mod[0]) % spec.p] if spec.n == 1 else [0, 1]
    for r in prime_factors(q - 1):
        power = _poly_powmod(x, (q - 1) // r, mod, spec.p)
        if power == [1]:
            raise NotPrimitive(
                f"root of {spec.modulus} has order dividing {(q - 1) // r}")
    return FieldCtx(spec)


# ----------------------------------------------------------------------
# text block format and presets
# ----------------------------------------------------------------------

def parse_field_block(text: str) -> FieldSpec:
    """Parse the `p=.. / n=.. / modulus=c0,c1,...` text block."""
    vals: dict[str, str] = {}
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ParseError(f"bad field block line {line!r}")
        key, _, rhs = line.partition("=")
        vals[key.strip()] = rhs.strip()
    try:
        p = int(vals["p"])
        n = int(vals["n"])
        modulus = tuple(int(c) for c in vals["modulus"].split(","))
    except (KeyError, ValueError) as e:
        raise ParseError(f"incomplete or malformed field block: {e}") from e
    return FieldSpec(p=p, n=n, modulus=modulus)


def format_field_block(spec: FieldSpec) -> str:
    mods = ",".join(str(c) for c in spec.modulus)
    return f"p={spec.p}\nn={spec.n}\nmodulus={mods}\n"


#: Named field presets.  `f256_paper` is x^8+x^4+x^3+x^2+1, the classic
#: primitive polynomial with x^8 -> 0b11101; the rest are standard
#: primitive polynomials, re-verified at construction time.
PRESETS: dict[str, FieldSpec] = {
    "f256_paper": FieldSpec(2, 8, (1, 0, 1, 1, 1, 0, 0, 0, 1)),
    "f2": FieldSpec(2, 1, (1, 1)),
    "f4": FieldSpec(2, 2, (1, 1, 1)),
    "f8": FieldSpec(2, 3, (1, 1, 0, 1)),
    "f16": FieldSpec(2, 4, (1, 1, 0, 0, 1)),
    "f32": FieldSpec(2, 5, (1, 0, 1, 0, 0, 1)),
    "f64": FieldSpec(2, 6, (1, 1, 0, 0, 0, 0, 1)),
    "f128": FieldSpec(2, 7, (1, 1, 0, 0, 0, 0, 0, 1)),
    "f512": FieldSpec(2, 9, (1, 0, 0, 0, 1, 0, 0, 0, 0, 1)),
    "f1024": FieldSpec(2, 10, (1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1)),
    "f9": FieldSpec(3, 2, (2, 1, 1)),
    "f27": FieldSpec(3, 3, (1, 2, 0, 1)),
    "f81": FieldSpec(3, 4, (2, 1, 0, 0, 1)),
    "f729": FieldSpec(3, 6, (2, 1, 0, 0, 0, 0, 1)),
    "f25": FieldSpec(5, 2, (2, 4, 1)),
    "f125": FieldSpec(5, 3, (3, 3, 0, 1)),
    "f49": FieldSpec(7, 2, (3, 1, 1)),
}


@lru_cache(maxsize=None)
def _cached_field(spec: FieldSpec) -> FieldCtx:
    return build_field(spec)


def get_field(name_or_spec) -> FieldCtx:
    """Resolve a preset name or FieldSpec to a (cached) context."""
    if isinstance(name_or_spec, FieldCtx):
        return name_or_spec
    if isinstance(name_or_spec, str):
        if name_or_spec not in PRESETS:
            raise ParseError(f"unknown field preset {name_or_spec!r}")
        return _cached_field(PRESETS[name_or_spec])
    return _cached_field(name_or_spec)
