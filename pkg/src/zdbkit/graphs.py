"""Cayley graphs over the additive group, SRG checks, GF(2) rank, and
isomorphism via individualization-refinement.

Adjacency lives in bit-packed rows (one Python int per vertex), which
keeps the refinement loops at popcount speed.  Plain colour refinement
stabilizes immediately on a strongly regular graph, so the search always
individualizes a vertex before expecting any split; the two graphs are
refined in lockstep and pruned on the first diverging split event.
"""

from __future__ import annotations

import math
import time
from collections import Counter, deque
from dataclasses import dataclass

import numpy as np

from .designs import PdsParams
from .errors import NotRegularSet, ParseError, PreconditionViolated, Timeout
from .gf import FieldCtx


class CayleyGraph:
    """An undirected graph with bit-packed adjacency rows.

    Built either from a connection set over a field context (in which
    case it is vertex-transitive by construction) or from raw rows.
    """

    def __init__(self, rows, connection_set=None, vertex_transitive=False):
        rows = tuple(int(r) for r in rows)
        v = len(rows)
        for i, r in enumerate(rows):
            if r >> v:
                raise ParseError(f"row {i} has bits beyond {v} vertices")
            if (r >> i) & 1:
                raise ParseError(f"self-loop at vertex {i}")
        for i in range(v):
            for j in range(i + 1, v):
                if ((rows[i] >> j) & 1) != ((rows[j] >> i) & 1):
                    raise ParseError(f"adjacency not symmetric at ({i}, {j})")
        self.v = v
        self.rows = rows
        self.connection_set = tuple(connection_set) if connection_set else None
        self.vertex_transitive = vertex_transitive
        self._fingerprint = None
        self._rank2 = None

    def degree(self, u: int) -> int:
        return self.rows[u].bit_count()

    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def edges(self):
        for u in range(self.v):
            r = self.rows[u] >> (u + 1) << (u + 1)  # bits with w > u
            while r:
                w = (r & -r).bit_length() - 1
                yield (u, w)
                r &= r - 1

    def has_edge(self, u: int, v: int) -> bool:
        return (self.rows[u] >> v) & 1 == 1


def cayley_graph(ctx: FieldCtx, D) -> CayleyGraph:
    """Cayley graph of the additive group with connection set D.

    Requires 0 not in D and D = -D so the graph is undirected.
    """
    D = sorted(int(x) for x in D)
    dset = set(D)
    if 0 in dset:
        raise PreconditionViolated("connection set must not contain 0")
    if {ctx.neg(x) for x in D} != dset:
        raise NotRegularSet("connection set is not symmetric: D != -D")
    rows = []
    for g in range(ctx.q):
        r = 0
        for d in D:
            r |= 1 << ctx.add(g, d)
        rows.append(r)
    return CayleyGraph(rows, connection_set=D, vertex_transitive=True)


def translations(ctx: FieldCtx) -> list[tuple[int, ...]]:
    """Generators of the translation subgroup x -> x + c (automorphisms
    of every Cayley graph over the additive group)."""
    gens = []
    basis = [1] if ctx.n == 1 else [int(ctx.exp[j]) for j in range(ctx.n)]
    for c in basis:
        gens.append(tuple(int(x) for x in ctx.shift_table(c)))
    return gens


def relabel(g: CayleyGraph, perm) -> CayleyGraph:
    """Apply a vertex permutation: new[perm[u]][perm[w]] = old[u][w]."""
    perm = [int(p) for p in perm]  # numpy ints would overflow the shifts
    rows = [0] * g.v
    for u in range(g.v):
        r = g.rows[u]
        nr = 0
        w = 0
        while r:
            if r & 1:
                nr |= 1 << perm[w]
            r >>= 1
            w += 1
        rows[perm[u]] = nr
    return CayleyGraph(rows)


# ----------------------------------------------------------------------
# graph file format: v=<int> then one lower-triangle bit-row per line, hex
# ----------------------------------------------------------------------

def graph_to_text(g: CayleyGraph) -> str:
    lines = [f"v={g.v}"]
    for i in range(g.v):
        mask = (1 << i) - 1
        lines.append(format(g.rows[i] & mask, "x"))
    return "\n".join(lines) + "\n"


def parse_graph_text(text: str) -> CayleyGraph:
    lines = [ln.strip() for ln in text.splitlines()
             if ln.strip() and not ln.startswith("#")]
    if not lines or not lines[0].startswith("v="):
        raise ParseError("graph file must start with v=<int>")
    try:
        v = int(lines[0][2:])
    except ValueError as e:
        raise ParseError("bad vertex count") from e
    if len(lines) != v + 1:
        raise ParseError(f"expected {v} rows, got {len(lines) - 1}")
    low = []
    for i, ln in enumerate(lines[1:]):
        try:
            r = int(ln, 16)
        except ValueError as e:
            raise ParseError(f"bad hex row {i}") from e
        if r >> i:
            raise ParseError(f"row {i} has bits at or above the diagonal")
        low.append(r)
    rows = list(low)
    for i in range(v):
        for j in range(i):
            if (low[i] >> j) & 1:
                rows[j] |= 1 << i
    return CayleyGraph(rows)


# ----------------------------------------------------------------------
# SRG verification, GF(2) rank, eigenvalue data
# ----------------------------------------------------------------------

def verify_srg(g: CayleyGraph, params: PdsParams):
    """Check k-regularity, lambda on edges, mu on non-edges; returns
    (True, None) or (False, witness) with the first violating pair."""
    if params.v != g.v:
        return False, ("v", g.v, params.v)
    k, lam, mu = params.k, params.lam, params.mu
    for u in range(g.v):
        if g.rows[u].bit_count() != k:
            return False, ("degree", u, g.rows[u].bit_count())
    for u in range(g.v):
        ru = g.rows[u]
        for w in range(u + 1, g.v):
            common = (ru & g.rows[w]).bit_count()
            if (ru >> w) & 1:
                if common != lam:
                    return False, (u, w, common, lam)
            elif mu is not None:
                if common != mu:
                    return False, (u, w, common, mu)
    return True, None


def rank2(g: CayleyGraph) -> int:
    """Rank of the adjacency matrix over GF(2), by bit-packed elimination."""
    rows = [r for r in g.rows if r]
    rank = 0
    while rows:
        pivot = rows.pop()
        if not pivot:
            continue
        rank += 1
        bit = pivot & -pivot
        rows = [(r ^ pivot) if r & bit else r for r in rows]
        rows = [r for r in rows if r]
    return rank


def srg_eigen_data(params: PdsParams):
    """Integer eigenvalues r > s and multiplicities from the parameters:
    roots of x^2 - (lam-mu)x - (k-mu), with k + m1*r + m2*s = 0."""
    if params.mu is None:
        raise PreconditionViolated("eigenvalue data needs PDS parameters")
    v, k, lam, mu = params.v, params.k, params.lam, params.mu
    disc = (lam - mu) ** 2 + 4 * (k - mu)
    s_root = math.isqrt(disc)
    if s_root * s_root != disc:
        raise PreconditionViolated(f"discriminant {disc} is not a square")
    if ((lam - mu) + s_root) % 2:
        raise PreconditionViolated("eigenvalues are not integers")
    r = ((lam - mu) + s_root) // 2
    s = ((lam - mu) - s_root) // 2
    m1_num = -(k + s * (v - 1))
    if m1_num % (r - s):
        raise PreconditionViolated("multiplicities are not integers")
    m1 = m1_num // (r - s)
    m2 = v - 1 - m1
    if m1 < 0 or m2 < 0 or k + m1 * r + m2 * s != 0:
        raise PreconditionViolated("trace identity failed")
    return r, s, m1, m2


# ----------------------------------------------------------------------
# fingerprints
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class GraphFingerprint:
    """Cheap isomorphism invariants: unequal fingerprints prove
    non-isomorphism, equal ones decide nothing."""

    v: int
    degree_hist: tuple
    rank2: int
    clique4_per_edge: tuple
    common_nbr_hist: tuple


def fingerprint(g: CayleyGraph) -> GraphFingerprint:
    if g._fingerprint is not None:
        return g._fingerprint
    deg = Counter(r.bit_count() for r in g.rows)
    common = Counter()
    cliques = Counter()
    for u in range(g.v):
        ru = g.rows[u]
        for w in range(u + 1, g.v):
            s = ru & g.rows[w]
            common[s.bit_count()] += 1
            if (ru >> w) & 1:
                inner = 0
                t = s
                while t:
                    x = (t & -t).bit_length() - 1
                    inner += (g.rows[x] & s).bit_count()
                    t &= t - 1
                cliques[inner // 2] += 1
    fp = GraphFingerprint(
        v=g.v,
        degree_hist=tuple(sorted(deg.items())),
        rank2=rank2(g),
        clique4_per_edge=tuple(sorted(cliques.items())),
        common_nbr_hist=tuple(sorted(common.items())),
    )
    g._fingerprint = fp
    return fp


# ----------------------------------------------------------------------
# individualization-refinement engine
# ----------------------------------------------------------------------

def _mask_of_cell(cell) -> int:
    m = 0
    for x in cell:
        m |= 1 << x
    return m


def _refine(rows, cells, follow=None):
    """Run 1-dimensional colour refinement to a fixed point.

    cells is a list of vertex lists and is modified in place; new cells
    are appended so indices stay stable.  Returns the list of split
    events, or None when `follow` is given and this run diverges from
    it.  Events are (splitter_idx, target_idx, count_keys, sizes).
    """
    events = [] if follow is None else None
    pos = 0
    changed = True
    while changed:
        changed = False
        for s_idx in range(len(cells)):
            smask = _mask_of_cell(cells[s_idx])
            t_idx = 0
            while t_idx < len(cells):
                cell = cells[t_idx]
                if len(cell) > 1:
                    groups = {}
                    for x in cell:
                        groups.setdefault((rows[x] & smask).bit_count(),
                                          []).append(x)
                    if len(groups) > 1:
                        keys = tuple(sorted(groups))
                        sizes = tuple(len(groups[k]) for k in keys)
                        if follow is None:
                            events.append((s_idx, t_idx, keys, sizes))
                        else:
                            if pos >= len(follow) or \
                                    follow[pos] != (s_idx, t_idx, keys, sizes):
                                return None
                            pos += 1
                        cells[t_idx] = groups[keys[0]]
                        for k in keys[1:]:
                            cells.append(groups[k])
                        changed = True
                t_idx += 1
    if follow is not None:
        return None if pos != len(follow) else []
    return events


def _individualize(cells, idx, vertex):
    """Split cells[idx] into [vertex] + rest (rest appended at the end)."""
    out = [list(c) for c in cells]
    rest = [x for x in out[idx] if x != vertex]
    out[idx] = [vertex]
    out.append(rest)
    return out


def _target_cell(cells) -> int | None:
    """First smallest non-singleton cell in creation order."""
    best = None
    best_size = None
    for i, c in enumerate(cells):
        if len(c) > 1 and (best_size is None or len(c) < best_size):
            best, best_size = i, len(c)
    return best


def _check_mapping(rows1, rows2, perm) -> bool:
    for u in range(len(rows1)):
        r = rows1[u]
        img = 0
        while r:
            w = (r & -r).bit_length() - 1
            img |= 1 << perm[w]
            r &= r - 1
        if img != rows2[perm[u]]:
            return False
    return True


class _IsoSearch:
    def __init__(self, rows1, rows2, v, deadline=None):
        self.rows1 = rows1
        self.rows2 = rows2
        self.v = v
        self.deadline = deadline
        self.nodes = 0

    def run(self, pins):
        cells1 = [list(range(self.v))]
        cells2 = [list(range(self.v))]
        for a, b in pins:
            i1 = next((i for i, c in enumerate(cells1) if a in c), None)
            i2 = next((i for i, c in enumerate(cells2) if b in c), None)
            if i1 is None or i2 is None or i1 != i2:
                return None
            cells1 = _individualize(cells1, i1, a)
            cells2 = _individualize(cells2, i2, b)
            if len(cells1[-1]) != len(cells2[-1]):
                return None
        return self._rec(cells1, cells2)

    def _rec(self, cells1, cells2):
        self.nodes += 1
        if self.deadline is not None and time.monotonic() > self.deadline:
            raise Timeout("isomorphism search exceeded its budget")
        trace = _refine(self.rows1, cells1)
        if _refine(self.rows2, cells2, follow=trace) is None:
            return None
        target = _target_cell(cells1)
        if target is None:
            perm = [0] * self.v
            for c1, c2 in zip(cells1, cells2):
                perm[c1[0]] = c2[0]
            return perm if _check_mapping(self.rows1, self.rows2, perm) else None
        v1 = min(cells1[target])
        for v2 in sorted(cells2[target]):
            sub1 = _individualize(cells1, target, v1)
            sub2 = _individualize(cells2, target, v2)
            found = self._rec(sub1, sub2)
            if found is not None:
                return found
        return None


def is_isomorphic(g1: CayleyGraph, g2: CayleyGraph, timeout: float = 600.0):
    """Decide isomorphism; returns (True, mapping) or (False, None).

    The mapping is re-verified edge-exactly before being returned.
    Raises Timeout when the budget is exhausted (the answer is then
    undecided, never "non-isomorphic").
    """
    if g1.v != g2.v:
        return False, None
    if sorted(r.bit_count() for r in g1.rows) != \
            sorted(r.bit_count() for r in g2.rows):
        return False, None
    deadline = time.monotonic() + timeout if timeout else None
    search = _IsoSearch(g1.rows, g2.rows, g1.v, deadline)
    # for two vertex-transitive graphs any isomorphism can be composed
    # with a transitive automorphism, so pinning 0 -> 0 loses nothing
    pins = [(0, 0)] if (g1.vertex_transitive and g2.vertex_transitive) else []
    perm = search.run(pins)
    if perm is None:
        return False, None
    if not _check_mapping(g1.rows, g2.rows, perm):
        raise AssertionError("search returned an invalid mapping")
    return True, perm


# ----------------------------------------------------------------------
# automorphism group order via orbit-stabilizer over the IR tree
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class AutInfo:
    order: int
    generators: tuple
    base: tuple


def _orbit(start: int, gens) -> set[int]:
    seen = {start}
    frontier = [start]
    while frontier:
        x = frontier.pop()
        for gperm in gens:
            y = gperm[x]
            if y not in seen:
                seen.add(y)
                frontier.append(y)
    return seen


def automorphism_order(g: CayleyGraph, timeout: float = 7200.0,
                       known_automorphisms=None) -> AutInfo:
    """Exact |Aut(G)| by an orbit-stabilizer chain over IR searches.

    At each level the orbit of the base vertex under the current
    point-stabilizer is grown from discovered generators; candidates
    outside the known orbit trigger a pinned existence search.  Known
    automorphisms (e.g. Cayley translations) seed the closure.
    """
    deadline = time.monotonic() + timeout if timeout else None
    found = []
    for perm in known_automorphisms or []:
        perm = tuple(perm)
        if not _check_mapping(g.rows, g.rows, perm):
            raise PreconditionViolated("seed permutation is not an automorphism")
        found.append(perm)
    base: list[int] = []
    order = 1
    search = _IsoSearch(g.rows, g.rows, g.v, deadline)
    while True:
        cells = [list(range(g.v))]
        for b in base:
            idx = next(i for i, c in enumerate(cells) if b in c)
            cells = _individualize(cells, idx, b)
        _refine(g.rows, cells)
        target = _target_cell(cells)
        if target is None:
            break
        b = min(cells[target])
        candidates = sorted(cells[target])
        pins = [(x, x) for x in base]
        level_gens = [p for p in found if all(p[x] == x for x in base)]
        success = _orbit(b, level_gens) & set(candidates) | {b}
        for v2 in candidates:
            if v2 in success:
                continue
            if deadline is not None and time.monotonic() > deadline:
                raise Timeout("automorphism search exceeded its budget")
            perm = search.run(pins + [(b, v2)])
            if perm is not None:
                perm = tuple(perm)
                if not _check_mapping(g.rows, g.rows, perm):
                    raise AssertionError("invalid automorphism returned")
                found.append(perm)
                level_gens.append(perm)
                success = _orbit(b, level_gens) & set(candidates) | {b}
        order *= len(success)
        base.append(b)
    return AutInfo(order=order, generators=tuple(found), base=tuple(base))
