"""Partial difference sets from image sets, with dual certification.

Every certificate rests on two independent legs: exhaustive difference
counting over the additive group, and exact character sums satisfying
the quadratic identity chi^2 = (k-mu) + (lambda-mu)*chi (or |chi|^2 =
k-lambda for difference sets).  A certificate is only issued when both
agree with the claimed parameters.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass

import numpy as np

from .cyclo import CycInt
from .errors import CountMismatch, EmptySet, PreconditionViolated
from .funcspace import FnTable, image_set
from .gf import FieldCtx
from .spectra import _sign_matrix


@dataclass(frozen=True)
class PdsParams:
    """(v, k, lambda, mu); mu is None for a plain (v, k, lambda)
    difference set."""

    v: int
    k: int
    lam: int
    mu: int | None = None

    @property
    def is_ds(self) -> bool:
        return self.mu is None

    def counting_identity_holds(self) -> bool:
        if self.is_ds:
            return self.k**2 == (self.k - self.lam) + self.lam * self.v
        return self.k**2 == (self.k - self.mu) + self.k * (self.lam - self.mu) \
            + self.mu * self.v

    def as_tuple(self) -> tuple:
        if self.is_ds:
            return (self.v, self.k, self.lam)
        return (self.v, self.k, self.lam, self.mu)

    def __str__(self):
        return str(self.as_tuple())


@dataclass(frozen=True)
class DesignCertificate:
    """A verified (partial) difference set over the additive group."""

    ctx: FieldCtx
    D: tuple[int, ...]
    params: PdsParams
    kind: str  # "PDS" | "DS"
    regular: bool
    diff_histogram: dict  # nonzero element -> representation count
    char_values: Counter  # multiset of chi_a(D) over a != 0


def image_pds(f: FnTable) -> list[int]:
    """Candidate D = Im(F) minus 0."""
    img = [v for v in image_set(f) if v != 0]
    if not img:
        raise EmptySet("image contains nothing but 0")
    return img


def character_values(ctx: FieldCtx, D, d: int | None = None):
    """chi_a(D) for every a != 0, exact.

    For p = 2 the values are plain ints computed by a Walsh-Hadamard
    transform of D's indicator; for odd p they are cyclotomic integers.
    When d is given, the values X_a = 1 + d*chi_a(D) are returned too.
    """
    q = ctx.q
    D = sorted(int(x) for x in D)
    if ctx.p == 2:
        ind = np.zeros(q, dtype=np.int64)
        ind[D] = 1
        sh = ind @ _sign_matrix(ctx.n)
        chi = sh[ctx.mask_of][1:]
        values = [int(v) for v in chi]
    else:
        tr2 = ctx.tr_bilinear
        arr = np.asarray(D, dtype=np.int64)
        values = []
        for a in range(1, q):
            counts = np.bincount(tr2[a][arr], minlength=ctx.p)
            values.append(CycInt.from_counts(ctx.p, counts))
    if d is None:
        return values
    return values, [v * d + 1 if isinstance(v, CycInt) else 1 + d * v
                    for v in values]


def character_value(ctx: FieldCtx, D, a: int, d: int | None = None):
    """chi_a(D) for a single character; a = 0 gives |D|."""
    if a == 0:
        return len(D)
    vals = character_values(ctx, D)
    v = vals[a - 1]
    if d is None:
        return v
    return v, (v * d + 1 if isinstance(v, CycInt) else 1 + d * v)


def verify_design(ctx: FieldCtx, D, params: PdsParams,
                  kind: str = "PDS") -> DesignCertificate:
    """Exhaustively verify D as a (partial) difference set.

    Counts every difference g - h over ordered pairs of distinct
    elements, demands lambda on D and mu off D (lambda everywhere for a
    DS), checks the counting identity, then confirms the character-sum
    identity for every nontrivial character.  Raises CountMismatch with
    the offending element otherwise.
    """
    q = ctx.q
    D = sorted(int(x) for x in D)
    dset = set(D)
    if 0 in dset:
        raise PreconditionViolated("0 must not lie in D")
    if not D:
        raise EmptySet("empty candidate set")
    if kind not in ("PDS", "DS"):
        raise PreconditionViolated(f"kind must be PDS or DS, not {kind!r}")
    k = len(D)
    if params.v != q or params.k != k:
        raise CountMismatch(
            f"claimed (v, k) = ({params.v}, {params.k}) but group order is "
            f"{q} and |D| = {k}")
    if not params.counting_identity_holds():
        raise CountMismatch(f"params {params} violate the counting identity")

    counts = np.zeros(q, dtype=np.int64)
    arr = np.asarray(D, dtype=np.int64)
    for g in D:
        diffs = ctx.sub_vec(np.full(k, g, dtype=np.int64), arr) if ctx.p != 2 \
            else g ^ arr
        counts += np.bincount(diffs, minlength=q)
    counts[0] -= k  # drop the g = h diagonal
    if counts[0] != 0:
        raise CountMismatch("difference counting is inconsistent",
                            element=0, count=int(counts[0]))
    for x in range(1, q):
        want = params.lam if (kind == "DS" or x in dset) else params.mu
        if counts[x] != want:
            raise CountMismatch(
                f"element {x} represented {int(counts[x])} times, "
                f"expected {want}", element=x, count=int(counts[x]))

    neg = {ctx.neg(x) for x in D}
    regular = neg == dset

    chis = character_values(ctx, D)
    for a, chi in enumerate(chis, start=1):
        if isinstance(chi, CycInt):
            lhs = chi.norm()
            ok = (lhs == (k - params.lam)) if kind == "DS" else \
                (lhs == CycInt.from_int(ctx.p, k - params.mu)
                 + (params.lam - params.mu) * chi)
        else:
            lhs = chi * chi
            ok = (lhs == k - params.lam) if kind == "DS" else \
                (lhs == (k - params.mu) + (params.lam - params.mu) * chi)
        if not ok:
            raise CountMismatch(
                f"character identity fails at a={a}: chi={chi}", element=a)

    hist = {x: int(counts[x]) for x in range(1, q)}
    return DesignCertificate(ctx=ctx, D=tuple(D), params=params, kind=kind,
                             regular=regular, diff_histogram=hist,
                             char_values=Counter(chis))


# ----------------------------------------------------------------------
# predicted parameters
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class PredictedParams:
    params: PdsParams
    kind: str        # "PDS" | "DS"
    latin_type: str  # "latin" | "negative_latin" | "none"
    latin_n: int | None
    latin_r: int | None


def latin_type_of(params: PdsParams):
    """Classify (v,k,lambda,mu) as (negative) Latin square type by solving
    (N^2, r(N+e), -eN+r^2+3er, r^2+er) for integers N, r and e = +-1."""
    if params.is_ds:
        return "none", None, None
    N = math.isqrt(params.v)
    if N * N != params.v:
        return "none", None, None
    for eps, tag in ((1, "negative_latin"), (-1, "latin")):
        if (N + eps) <= 0 or params.k % (N + eps):
            continue
        r = params.k // (N + eps)
        if params.lam == -eps * N + r * r + 3 * eps * r \
                and params.mu == r * r + eps * r:
            return tag, N, r
    return "none", None, None


def predicted_params(p: int, t: int, n: int) -> PredictedParams:
    """Parameters of the image-set design of a zero-difference
    p^t-balanced quadratic function on F_{p^n}.

    t = 0 (p odd) gives the Paley difference set for p^n = 3 mod 4 and
    the Paley PDS for p^n = 1 mod 4; t > 0 requires 2t | n and gives
    the general tuple with eps = (-1)^(n/2t).
    """
    v = p**n
    if t == 0:
        if p == 2:
            raise PreconditionViolated("t = 0 requires odd p")
        if v % 4 == 3:
            params = PdsParams(v, (v - 1) // 2, (v - 3) // 4)
            return PredictedParams(params, "DS", "none", None, None)
        params = PdsParams(v, (v - 1) // 2, (v - 5) // 4, (v - 1) // 4)
        tag, N, r = latin_type_of(params)
        return PredictedParams(params, "PDS", tag, N, r)
    if t < 0 or n % (2 * t):
        raise PreconditionViolated(f"need 2t | n, got t={t}, n={n}")
    half = n // (2 * t)
    eps = (-1) ** half
    pt = p**t
    k = (v - 1) // (pt + 1)
    lam_num = v - 3 * pt - 2 - eps * p**(n // 2 + 2 * t) + eps * p**(n // 2 + t)
    mu_num = v - eps * p**(n // 2) + eps * p**(n // 2 + t) - pt
    den = (pt + 1) ** 2
    if lam_num % den or mu_num % den:
        raise AssertionError("parameter formula did not divide out; bad input")
    params = PdsParams(v, k, lam_num // den, mu_num // den)
    tag, N, r = latin_type_of(params)
    return PredictedParams(params, "PDS", tag, N, r)


# ----------------------------------------------------------------------
# comparison constructions: cyclotomic classes and hyperplane unions
# ----------------------------------------------------------------------

def cyclotomic_pds(ctx: FieldCtx, q_base: int, I) -> tuple[list[int], PdsParams]:
    """Union of (q+1)-th cyclotomic classes C_j, j in I, of F_(q^2m),
    with the predicted parameters, verified before returning.

    The field ctx must have order q_base^(2m) for some m >= 1.
    """
    e = q_base + 1
    order = ctx.q
    m2 = 0
    acc = 1
    while acc < order:
        acc *= q_base
        m2 += 1
    if acc != order or m2 % 2:
        raise PreconditionViolated(
            f"field order {order} is not an even power of q = {q_base}")
    m = m2 // 2
    I = sorted(set(int(j) for j in I))
    if not I or any(j < 0 or j > q_base for j in I):
        raise PreconditionViolated(f"class indices must lie in [0, {q_base}]")
    if (order - 1) % e:
        raise AssertionError("q+1 does not divide q^2m - 1")
    D = []
    for j in I:
        ks = np.arange(j, order - 1, e, dtype=np.int64)
        D.extend(int(v) for v in ctx.exp[ks])
    u = len(I)
    eta = ((-q_base) ** m - 1) // e
    k = u * (order - 1) // e
    if k == order - 1:
        params = PdsParams(order, order - 1, order - 2, 0)  # complete graph
    else:
        params = PdsParams(order, k,
                           u * u * eta * eta + (3 * u - q_base - 1) * eta - 1,
                           u * u * eta * eta + u * eta)
    verify_design(ctx, D, params, kind="PDS")
    return sorted(D), params


def pcp_pds(ctx: FieldCtx, line_indices) -> tuple[list[int], PdsParams]:
    """Union of lines through 0 of the 2-dimensional space F_(q^2) over
    F_q, minus 0: the (q^2, r(q-1), q+r^2-3r, r^2-r) hyperplane design.

    Lines are the cosets w^j * F_q^*, indexed by j in [0, q]; the field
    ctx must be a square extension.
    """
    if ctx.n % 2:
        raise PreconditionViolated("need a square field F_(q^2)")
    q = int(round(math.isqrt(ctx.q)))
    if q * q != ctx.q:
        raise PreconditionViolated("field order is not a square")
    idx = sorted(set(int(j) for j in line_indices))
    if not idx or any(j < 0 or j > q for j in idx):
        raise PreconditionViolated(f"line indices must lie in [0, {q}]")
    r = len(idx)
    D = []
    for j in idx:
        ks = np.arange(j, ctx.q - 1, q + 1, dtype=np.int64)
        D.extend(int(v) for v in ctx.exp[ks])
    if r == q + 1:
        params = PdsParams(ctx.q, ctx.q - 1, ctx.q - 2, 0)
    else:
        params = PdsParams(ctx.q, r * (q - 1), q + r * r - 3 * r, r * r - r)
    verify_design(ctx, D, params, kind="PDS")
    return sorted(D), params
