"""Differential and Walsh analysis of functions over F_{p^n}.

The differential spectrum is the exhaustive O(q^2) count and is treated
as the oracle for everything downstream.  Walsh coefficients are exact:
plain integers for p = 2 (fast transform via a sign-matrix product) and
cyclotomic integers for odd p.  No floating point enters any value that
feeds a certificate.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .cyclo import CycInt
from .errors import NotQuadratic
from .funcspace import FnTable, algebraic_degree
from .gf import FieldCtx


# ----------------------------------------------------------------------
# differential spectrum
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class DiffSpectrum:
    """delta_F(a, b) statistics over all a != 0."""

    ctx: FieldCtx
    delta_max: int
    histogram: dict  # solution count -> multiplicity over all (a, b) pairs
    zero_profile: np.ndarray  # delta_F(a, 0) indexed by a = 1..q-1

    @property
    def is_apn(self) -> bool:
        return self.ctx.p == 2 and self.delta_max == 2

    @property
    def is_pn(self) -> bool:
        return self.ctx.p != 2 and self.delta_max == 1


def differential_spectrum(f: FnTable) -> DiffSpectrum:
    """Exhaustive count of solutions of F(x+a) - F(x) = b for all a != 0."""
    ctx = f.ctx
    q = ctx.q
    F = f.values
    hist: Counter = Counter()
    zero_profile = np.zeros(q - 1, dtype=np.int64)
    delta_max = 0
    for a in range(1, q):
        shifted = F[ctx.shift_table(a)]
        diffs = shifted ^ F if ctx.p == 2 else ctx.sub_vec(shifted, F)
        counts = np.bincount(diffs, minlength=q)
        zero_profile[a - 1] = counts[0]
        delta_max = max(delta_max, int(counts.max()))
        for c, m in zip(*np.unique(counts, return_counts=True)):
            hist[int(c)] += int(m)
    return DiffSpectrum(ctx=ctx, delta_max=delta_max,
                        histogram=dict(hist), zero_profile=zero_profile)


@dataclass(frozen=True)
class ZdbClassification:
    """Shape of the zero-difference profile.

    kind is "zdb" (constant profile), "vanishing" (all values in
    [1, delta] but not constant), or "neither"; delta is the constant
    for ZDB and the profile maximum for vanishing.
    """

    kind: str
    delta: int | None

    @property
    def is_zdb(self) -> bool:
        return self.kind == "zdb"

    @property
    def is_vanishing(self) -> bool:
        # a positive-delta ZDB profile is in particular vanishing
        return self.kind == "vanishing" or (self.kind == "zdb" and self.delta > 0)


def zero_difference_profile(f: FnTable):
    """delta_F(a, 0) for every a != 0, plus its classification."""
    ctx = f.ctx
    q = ctx.q
    F = f.values
    profile = np.zeros(q - 1, dtype=np.int64)
    for a in range(1, q):
        profile[a - 1] = int(np.count_nonzero(F[ctx.shift_table(a)] == F))
    lo, hi = int(profile.min()), int(profile.max())
    if lo == hi:
        cls = ZdbClassification("zdb", lo)
    elif lo >= 1:
        cls = ZdbClassification("vanishing", hi)
    else:
        cls = ZdbClassification("neither", None)
    return profile, cls


# ----------------------------------------------------------------------
# Walsh transform
# ----------------------------------------------------------------------

@lru_cache(maxsize=8)
def _sign_matrix(nbits: int) -> np.ndarray:
    """H[x, u] = (-1)^popcount(x & u) for x, u < 2^nbits."""
    idx = np.arange(1 << nbits, dtype=np.uint32)
    pc = np.bitwise_count(idx[:, None] & idx[None, :])
    h = (1 - 2 * (pc & 1).astype(np.int64))
    h.setflags(write=False)
    return h


class WalshReport:
    """Walsh coefficients W(a, b) for a in F*, b in F.

    For p = 2 coefficients are stored as an integer matrix; for odd p
    the exponent counts of zeta_p are stored and coefficients surface
    as exact cyclotomic integers.  W(0, b) is available too (q at b = 0,
    else 0, by character orthogonality).
    """

    def __init__(self, f: FnTable):
        ctx = f.ctx
        self.ctx = ctx
        q, p = ctx.q, ctx.p
        F = f.values
        tr2 = ctx.tr_bilinear
        if p == 2:
            signs = 1 - 2 * tr2[:, F][1:].astype(np.int64)
            sh = signs @ _sign_matrix(ctx.n)
            self.table = sh[:, ctx.mask_of]
            self.counts = None
            if not np.all((self.table * self.table).sum(axis=1) == q * q):
                raise AssertionError("Parseval failed; transform is broken")
        else:
            counts = np.empty((q - 1, q, p), dtype=np.int64)
            for a in range(1, q):
                m = (tr2[a, F][None, :].astype(np.int16) + tr2.astype(np.int16)) % p
                for j in range(p):
                    counts[a - 1, :, j] = (m == j).sum(axis=1)
            self.table = None
            self.counts = counts
            norms = self._norm_counts(counts.reshape(-1, p))
            # exact Parseval per a
            per_a = norms.reshape(q - 1, q, p).sum(axis=1)
            for a in range(q - 1):
                if CycInt.from_counts(p, per_a[a]).as_int() != q * q:
                    raise AssertionError("Parseval failed; transform is broken")
        self._multiset = None

    @staticmethod
    def _norm_counts(counts: np.ndarray) -> np.ndarray:
        """Exponent counts of W * conj(W) given exponent counts of W."""
        p = counts.shape[-1]
        out = np.empty_like(counts)
        for d in range(p):
            out[..., d] = (counts * np.roll(counts, -d, axis=-1)).sum(axis=-1)
        return out

    def w(self, a: int, b: int):
        """W(a, b): an int for p = 2, a CycInt for odd p."""
        q, p = self.ctx.q, self.ctx.p
        if a == 0:
            val = q if b == 0 else 0
            return val if p == 2 else CycInt.from_int(p, val)
        if p == 2:
            return int(self.table[a - 1, b])
        return CycInt.from_counts(p, self.counts[a - 1, b])

    def modulus_sq(self, a: int, b: int) -> int:
        """|W(a, b)|^2 as an exact integer (raises if not rational)."""
        if self.ctx.p == 2:
            v = self.w(a, b)
            return v * v
        return self.w(a, b).norm().as_int()

    @property
    def value_multiset(self) -> Counter:
        if self._multiset is None:
            ms: Counter = Counter()
            q, p = self.ctx.q, self.ctx.p
            if p == 2:
                for v, m in zip(*np.unique(self.table, return_counts=True)):
                    ms[int(v)] += int(m)
            else:
                for a in range(q - 1):
                    for b in range(q):
                        ms[CycInt.from_counts(p, self.counts[a, b])] += 1
            self._multiset = ms
        return self._multiset

    @property
    def value_set(self) -> set:
        return set(self.value_multiset)

    @property
    def max_abs_sq(self) -> float:
        """max |W(a,b)|^2; exact int for p = 2, float otherwise (display only)."""
        if self.ctx.p == 2:
            return int(np.max(np.abs(self.table))) ** 2
        p = self.ctx.p
        zeta = np.exp(2j * np.pi / p)
        powers = zeta ** np.arange(p)
        vals = self.counts.reshape(-1, p) @ powers
        return float(np.max(np.abs(vals)) ** 2)

    @property
    def nonlinearity(self) -> int:
        """NL(F) = 2^(n-1) - max|W|/2, defined for p = 2 only."""
        if self.ctx.p != 2:
            raise ValueError("nonlinearity is defined for p = 2 only")
        return self.ctx.q // 2 - int(np.max(np.abs(self.table))) // 2


def walsh(f: FnTable) -> WalshReport:
    return WalshReport(f)


@dataclass(frozen=True)
class PowerSumCheck:
    """Result of the zero-difference power-sum identity check."""

    ok: bool
    sums: np.ndarray       # S(a) indexed by a = 0..q-1
    residuals: np.ndarray  # S(a) - expected(a)


def walsh_power_sum_check(f: FnTable, delta: int,
                          report: WalshReport | None = None) -> PowerSumCheck:
    """Check sum_c |W(c, a)|^2 = p^(2n) - delta*p^n for a != 0 and
    (delta+1)*p^(2n) - delta*p^n at a = 0.

    The inner sum runs over the coefficient c applied to F (including
    c = 0), with the linear-side coefficient a held fixed; this is the
    form in which the identity characterizes zero-difference balance.
    """
    ctx = f.ctx
    q, p = ctx.q, ctx.p
    rep = report or walsh(f)
    if p == 2:
        sums = (rep.table.astype(object) ** 2).sum(axis=0)
    else:
        norms = rep._norm_counts(rep.counts).sum(axis=0)  # (q, p)
        sums = np.array([CycInt.from_counts(p, norms[b]).as_int()
                         for b in range(q)], dtype=object)
    sums[0] += q * q  # the c = 0 row contributes only at a = 0
    expected = np.full(q, q * q - delta * q, dtype=object)
    expected[0] = (delta + 1) * q * q - delta * q
    residuals = sums - expected
    return PowerSumCheck(ok=bool(np.all(residuals == 0)),
                         sums=sums, residuals=residuals)


# ----------------------------------------------------------------------
# linear kernel E_a
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class KernelEa:
    """E_a = {s : Tr(a(F(y+s)-F(y))) = 0 for all y}, an F_p-subspace."""

    a: int
    members: tuple[int, ...]
    dim: int


def linear_kernel(f: FnTable, a: int, rng=None) -> KernelEa:
    """Compute E_a for a quadratic (affine-derivative) function.

    Membership is decided at y = 0 and the n basis points, which
    suffices when every derivative is affine; that premise is spot
    checked at 2n random y and NotQuadratic is raised on violation.
    """
    ctx = f.ctx
    if a == 0:
        raise ValueError("linear_kernel needs a != 0")
    if f.origin is not None and algebraic_degree(f.origin) > 2:
        raise NotQuadratic(
            f"origin polynomial has degree {algebraic_degree(f.origin)}")
    q, p, n = ctx.q, ctx.p, ctx.n
    ta_f = ctx.tr_bilinear[a][f.values].astype(np.int16)

    def derivative_row(y: int) -> np.ndarray:
        # value of Tr(a(F(y+s)-F(y))) for every s, as a vector over s
        return (ta_f[ctx.shift_table(y)] - ta_f[y]) % p

    mask = derivative_row(0) == 0
    for i in range(n):
        mask &= derivative_row(int(ctx.exp[i] if n > 1 else 1)) == 0
    # for n == 1 the basis point is w itself
    if n == 1:
        mask &= derivative_row(ctx.w) == 0
    members = np.nonzero(mask)[0]

    rng = rng or np.random.default_rng(0x5EED)
    for y in rng.integers(0, q, size=2 * n):
        if np.any(derivative_row(int(y))[members] != 0):
            raise NotQuadratic(
                "derivative is not affine: basis-only membership check failed "
                f"at y={int(y)}")
    size = len(members)
    dim = 0
    while p ** dim < size:
        dim += 1
    if p ** dim != size:
        raise NotQuadratic(f"|E_a| = {size} is not a power of {p}")
    return KernelEa(a=a, members=tuple(int(s) for s in members), dim=dim)


# ----------------------------------------------------------------------
# combined analysis
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class AnalysisReport:
    """One-stop report: differential, zero-difference, and Walsh data."""

    spectrum: DiffSpectrum
    zdb_profile: np.ndarray
    zdb_class: ZdbClassification
    walsh_report: WalshReport
    degree: int | None

    def to_dict(self) -> dict:
        w = self.walsh_report
        if w.ctx.p == 2:
            values = sorted(int(v) for v in w.value_set)
            multiset = {str(int(v)): int(m)
                        for v, m in sorted(w.value_multiset.items())}
            nl = w.nonlinearity
        else:
            values = sorted(repr(v) for v in w.value_set)
            multiset = {repr(v): int(m) for v, m in w.value_multiset.items()}
            nl = None
        return {
            "q": self.spectrum.ctx.q,
            "delta_max": self.spectrum.delta_max,
            "is_apn": self.spectrum.is_apn,
            "is_pn": self.spectrum.is_pn,
            "spectrum_histogram": {str(k): v for k, v in
                                   sorted(self.spectrum.histogram.items())},
            "zdb": {"kind": self.zdb_class.kind, "delta": self.zdb_class.delta},
            "walsh_values": values,
            "walsh_value_multiset": multiset,
            "nonlinearity": nl,
            "algebraic_degree": self.degree,
        }


def analyze_function(f: FnTable) -> AnalysisReport:
    spectrum = differential_spectrum(f)
    profile, cls = zero_difference_profile(f)
    rep = walsh(f)
    degree = algebraic_degree(f.origin) if f.origin is not None else None
    return AnalysisReport(spectrum=spectrum, zdb_profile=profile,
                          zdb_class=cls, walsh_report=rep, degree=degree)
