"""Functions F_{p^n} -> F_{p^n}: sparse polynomials, value tables, power cosets.

A PolyFn keeps its terms with the raw (unreduced) exponents so that the
p^k + p^l exponent structure survives; exponents are reduced mod q-1
only for evaluation and degree computations.  Evaluation uses the
convention 0^0 = 1 and 0^k = 0 for k > 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import ContextMismatch, ParseError
from .gf import FieldCtx, build_field, format_field_block, parse_field_block


def reduce_exponent(e: int, q: int) -> int:
    """Reduce an exponent into [1, q-1] (0 stays 0): x^e = x^red on F_q*."""
    if e == 0:
        return 0
    r = e % (q - 1)
    return r if r != 0 else q - 1


def p_weight(e: int, p: int) -> int:
    """Sum of base-p digits of e."""
    s = 0
    while e:
        s += e % p
        e //= p
    return s


@dataclass(frozen=True)
class PolyFn:
    """Sparse polynomial with nonzero coefficients and distinct exponents."""

    ctx: FieldCtx
    terms: tuple[tuple[int, int], ...]  # (exponent, coefficient code)

    def __post_init__(self):
        seen = set()
        for e, c in self.terms:
            if e < 0:
                raise ParseError(f"negative exponent {e}")
            if e in seen:
                raise ParseError(f"duplicate exponent {e}")
            if not 0 < c < self.ctx.q:
                raise ParseError(f"coefficient code {c} not a nonzero element")
            seen.add(e)

    def reduced_exponents(self) -> list[int]:
        return [reduce_exponent(e, self.ctx.q) for e, _ in self.terms]


@dataclass(frozen=True)
class FnTable:
    """A function as an exhaustive value table: values[code(x)] = code(F(x))."""

    ctx: FieldCtx
    values: np.ndarray
    origin: PolyFn | None = None

    def __post_init__(self):
        v = np.asarray(self.values, dtype=np.int64)
        if v.shape != (self.ctx.q,):
            raise ParseError(f"table length {v.shape} != field order {self.ctx.q}")
        v.setflags(write=False)
        object.__setattr__(self, "values", v)

    def __call__(self, x: int) -> int:
        return int(self.values[x])

    def same_ctx(self, other) -> None:
        if other.ctx is not self.ctx and other.ctx.spec != self.ctx.spec:
            raise ContextMismatch("objects belong to different fields")


@dataclass(frozen=True)
class PowerCoset:
    """C_d = {x^d : x in F*}; equals C_e for e = gcd(d, q-1)."""

    d: int
    e: int
    members: tuple[int, ...]


def evaluate(f: PolyFn) -> FnTable:
    """Exhaustive evaluation of a sparse polynomial."""
    ctx = f.ctx
    q = ctx.q
    acc = np.zeros(q, dtype=np.int64)
    ks = np.arange(q - 1, dtype=np.int64)
    f0 = 0
    for e, c in f.terms:
        if e == 0:
            f0 = ctx.add(f0, c)  # 0^0 = 1
            term_nz = np.full(q - 1, c, dtype=np.int64)
        else:
            er = reduce_exponent(e, q)
            term_nz = ctx.exp[(ctx.log[c] + er * ks) % (q - 1)]
        acc[ctx.exp[ks]] = ctx.add_vec(acc[ctx.exp[ks]], term_nz)
    acc[0] = f0
    return FnTable(ctx=ctx, values=acc, origin=f)


def algebraic_degree(f: PolyFn) -> int:
    """Max p-weight of the (reduced) exponents; 0 for constants."""
    if not f.terms:
        return 0
    return max(p_weight(e, f.ctx.p) for e in f.reduced_exponents())


def is_dembowski_ostrom(f: PolyFn) -> bool:
    """True iff every exponent has p-weight exactly 2 (pure quadratic part)."""
    if not f.terms:
        return False
    return all(p_weight(e, f.ctx.p) == 2 for e in f.reduced_exponents())


def power_coset(ctx: FieldCtx, d: int) -> PowerCoset:
    """Enumerate C_d via exp-table strides of e = gcd(d, q-1)."""
    if d < 1:
        raise ParseError(f"power coset needs d >= 1, got {d}")
    e = math.gcd(d, ctx.q - 1)
    ks = np.arange(0, ctx.q - 1, e, dtype=np.int64)
    members = tuple(sorted(int(v) for v in ctx.exp[ks]))
    return PowerCoset(d=d, e=e, members=members)


def is_injective_on(g: FnTable, coset: PowerCoset):
    """(True, None) if g restricted to the coset is injective, else
    (False, (x, y)) with a colliding pair."""
    seen: dict[int, int] = {}
    for x in coset.members:
        v = int(g.values[x])
        if v in seen:
            return False, (seen[v], x)
        seen[v] = x
    return True, None


def image_set(f: FnTable) -> list[int]:
    """Sorted distinct values of f."""
    return [int(v) for v in np.unique(f.values)]


# ----------------------------------------------------------------------
# function file format
# ----------------------------------------------------------------------

def parse_function_text(text: str, ctx: FieldCtx | None = None) -> PolyFn:
    """Parse a function file: a field block followed by `term <exp> <elem>` lines.

    If ctx is given, the field block may be omitted; when both are
    present they must agree.
    """
    field_lines = []
    terms = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("term"):
            parts = line.split()
            if len(parts) != 3:
                raise ParseError(f"bad term line {line!r}")
            terms.append((parts[1], parts[2]))
        else:
            field_lines.append(line)
    if field_lines:
        spec = parse_field_block("\n".join(field_lines))
        from .gf import get_field
        parsed_ctx = get_field(spec)
        if ctx is not None and parsed_ctx.spec != ctx.spec:
            raise ContextMismatch("function file field differs from supplied ctx")
        ctx = parsed_ctx
    if ctx is None:
        raise ParseError("function text carries no field block and no ctx given")
    out = []
    for es, cs in terms:
        try:
            e = int(es)
        except ValueError as err:
            raise ParseError(f"bad exponent {es!r}") from err
        out.append((e, ctx.parse_elem(cs)))
    return PolyFn(ctx=ctx, terms=tuple(sorted(out, reverse=True)))


def format_function_text(f: PolyFn, include_field: bool = True) -> str:
    lines = []
    if include_field:
        lines.append(format_field_block(f.ctx.spec).rstrip("\n"))
    for e, c in sorted(f.terms, reverse=True):
        lines.append(f"term {e} {f.ctx.format_elem(c)}")
    return "\n".join(lines) + "\n"


def poly_str(f: PolyFn) -> str:
    """Human-readable form like `w^21*x^144 + x^3`."""
    if not f.terms:
        return "0"
    parts = []
    for e, c in sorted(f.terms, reverse=True):
        cs = f.ctx.format_elem(c)
        if e == 0:
            parts.append(cs)
        else:
            xs = "x" if e == 1 else f"x^{e}"
            parts.append(xs if cs == "1" else f"{cs}*{xs}")
    return " + ".join(parts)
