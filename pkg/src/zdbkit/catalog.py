"""The 18 shipped APN functions on F_{2^8} and the one-shot pipeline
reproducing their strongly regular graph invariants.

Functions are stored as data files in the shared function format over
the `f256_paper` preset.  Expected values (automorphism orders, 2-rank
256, the {2,6} and {13,14,17} isomorphism merges) ship alongside so the
pipeline can diff its own output against them.
"""

from __future__ import annotations

import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from importlib import resources

from .designs import PdsParams, image_pds, predicted_params, verify_design
from .errors import ParseError, Timeout, ZdbkitError
from .funcspace import (
    FnTable,
    PolyFn,
    algebraic_degree,
    evaluate,
    parse_function_text,
    poly_str,
)
from .gf import get_field
from .graphs import (
    automorphism_order,
    cayley_graph,
    fingerprint,
    is_isomorphic,
    rank2,
    translations,
    verify_srg,
)
from .spectra import differential_spectrum, walsh, zero_difference_profile

FIELD_PRESET = "f256_paper"

#: Expected per-entry data: |Aut| of the Cayley graph and the 2-rank.
EXPECTED_AUT = {
    1: 2**9, 2: 2**11, 3: 2**8, 4: 2**10, 5: 2**9, 6: 2**11, 7: 2**10,
    8: 2**10, 9: 2**9, 10: 2**10, 11: 2**8, 12: 2**10, 13: 2**11 * 5 * 17,
    14: 2**11 * 5 * 17, 15: 2**10, 16: 2**9, 17: 2**11 * 5 * 17, 18: 2**10,
}
EXPECTED_RANK = 256

#: The only non-singleton isomorphism classes among the 18 graphs.
EXPECTED_MERGES = (frozenset({2, 6}), frozenset({13, 14, 17}))


def expected_partition() -> list[tuple[int, ...]]:
    merged = set()
    for cls in EXPECTED_MERGES:
        merged |= cls
    classes = [tuple(sorted(cls)) for cls in EXPECTED_MERGES]
    classes += [(i,) for i in range(1, 19) if i not in merged]
    return sorted(classes)


@dataclass(frozen=True)
class CatalogEntry:
    number: int
    poly: PolyFn
    expected_aut: int
    expected_rank: int
    expected_class: tuple[int, ...]

    @property
    def text(self) -> str:
        return poly_str(self.poly)

    def table(self) -> FnTable:
        return evaluate(self.poly)


def _entry_text(number: int) -> str:
    name = f"catalog_{number:02d}.fn"
    return resources.files("zdbkit").joinpath("data").joinpath(name).read_text()


def load_catalog(verify: bool = False) -> list[CatalogEntry]:
    """Parse all 18 shipped functions over the paper's field preset.

    With verify=True every entry is additionally checked to be APN
    (an exhaustive differential-spectrum computation per entry).
    """
    ctx = get_field(FIELD_PRESET)
    part = {n: cls for cls in expected_partition() for n in cls}
    out = []
    for no in range(1, 19):
        try:
            poly = parse_function_text(_entry_text(no), ctx=ctx)
        except ZdbkitError as e:
            raise ParseError(f"catalog entry {no}: {e}") from e
        entry = CatalogEntry(number=no, poly=poly,
                             expected_aut=EXPECTED_AUT[no],
                             expected_rank=EXPECTED_RANK,
                             expected_class=part[no])
        if verify:
            if differential_spectrum(entry.table()).delta_max != 2:
                raise ParseError(f"catalog entry {no} failed the APN check")
        out.append(entry)
    return out


def catalog_entry(number: int) -> CatalogEntry:
    if not 1 <= number <= 18:
        raise ParseError(f"catalog entries are numbered 1..18, got {number}")
    return load_catalog()[number - 1]


def resolve_function(spec: str) -> PolyFn:
    """Resolve `catalog:<n>` or a file path to a polynomial."""
    if spec.startswith("catalog:"):
        return catalog_entry(int(spec.split(":", 1)[1])).poly
    with open(spec, encoding="utf-8") as fh:
        return parse_function_text(fh.read())


# ----------------------------------------------------------------------
# Table 1 reproduction
# ----------------------------------------------------------------------

class Table1Error(ZdbkitError):
    """A pipeline stage failed; the message names entry and stage."""


@dataclass
class Table1Row:
    number: int
    degree: int
    delta: int
    zdb_delta: int | None
    walsh_values: tuple[int, ...]
    pds_params: tuple
    chi_values: tuple[int, ...]
    srg_ok: bool
    rank: int
    class_id: int | None = None
    aut_order: int | None = None


@dataclass
class Table1Report:
    rows: list[Table1Row]
    classes: list[tuple[int, ...]]
    partition_matches: bool
    cyclotomic_matches_gold_class: bool
    aut_orders: dict  # class id -> order or None (undecided)
    aut_matches: bool | None
    elapsed: float

    def class_count(self) -> int:
        return len(self.classes)

    def to_dict(self) -> dict:
        return {
            "rows": [{
                "no": r.number, "degree": r.degree, "delta": r.delta,
                "zdb_delta": r.zdb_delta, "walsh_values": list(r.walsh_values),
                "pds_params": list(r.pds_params),
                "chi_values": list(r.chi_values), "srg_ok": r.srg_ok,
                "rank2": r.rank, "class_id": r.class_id,
                "aut_order": r.aut_order,
            } for r in self.rows],
            "classes": [list(c) for c in self.classes],
            "class_count": self.class_count(),
            "partition_matches": self.partition_matches,
            "cyclotomic_matches_gold_class": self.cyclotomic_matches_gold_class,
            "aut_orders": {str(k): v for k, v in self.aut_orders.items()},
            "aut_matches": self.aut_matches,
        }

    def to_text(self) -> str:
        lines = ["No.  deg  delta  ZDB  Walsh values          PDS              "
                 "SRG  rank  class  |Aut|"]
        for r in self.rows:
            aut = "-" if r.aut_order is None else str(r.aut_order)
            lines.append(
                f"{r.number:<4} {r.degree:<4} {r.delta:<6} {r.zdb_delta!s:<4} "
                f"{str(sorted(r.walsh_values)):<21} {str(r.pds_params):<16} "
                f"{'ok' if r.srg_ok else 'FAIL':<4} {r.rank:<5} "
                f"{r.class_id!s:<6} {aut}")
        lines.append(f"classes: {self.classes}")
        lines.append(f"class count: {self.class_count()} "
                     f"(partition matches: {self.partition_matches})")
        lines.append("cyclotomic class-0 graph isomorphic to the x^3 class: "
                     f"{self.cyclotomic_matches_gold_class}")
        if self.aut_matches is not None:
            lines.append(f"automorphism orders match: {self.aut_matches}")
        return "\n".join(lines) + "\n"


def _entry_row(number: int):
    """Per-entry pipeline stage; pure, suitable for a worker process."""
    entry = catalog_entry(number)
    ctx = get_field(FIELD_PRESET)
    stage = "evaluate"
    try:
        table = entry.table()
        stage = "spectra"
        spec = differential_spectrum(table)
        profile, cls = zero_difference_profile(table)
        wrep = walsh(table)
        stage = "image_pds"
        D = image_pds(table)
        stage = "verify_design"
        pred = predicted_params(2, 1, 8)
        cert = verify_design(ctx, D, pred.params, kind="PDS")
        chi = tuple(sorted(set(cert.char_values)))
        stage = "cayley_graph"
        graph = cayley_graph(ctx, D)
        stage = "verify_srg"
        srg_ok, wit = verify_srg(graph, pred.params)
        if not srg_ok:
            raise ZdbkitError(f"SRG violation at {wit}")
        stage = "rank2"
        rank = rank2(graph)
        stage = "fingerprint"
        fp = fingerprint(graph)
    except ZdbkitError as e:
        raise Table1Error(f"entry {number}, stage {stage}: {e}") from e
    row = Table1Row(
        number=number, degree=algebraic_degree(entry.poly),
        delta=spec.delta_max, zdb_delta=cls.delta if cls.is_zdb else None,
        walsh_values=tuple(sorted(wrep.value_set)),
        pds_params=pred.params.as_tuple(), chi_values=chi,
        srg_ok=srg_ok, rank=rank)
    return row, D, fp


def _worker_count() -> int:
    value = os.environ.get("ZDBKIT_WORKERS", "1")
    try:
        return max(1, int(value))
    except ValueError:
        return 1


def reproduce_table1(with_aut: bool = False, iso_timeout: float = 600.0,
                     aut_timeout: float = 7200.0, log=None) -> Table1Report:
    """Run the full pipeline over the catalog: spectra, PDS and SRG
    certification, 2-rank, fingerprints, isomorphism partition with
    fingerprint pre-filtering, the cyclotomic cross-check, and
    (optionally) exact automorphism orders.

    Iso or automorphism timeouts leave the affected value undecided
    (None) rather than guessing.  ZDBKIT_WORKERS > 1 parallelizes the
    per-entry stage.
    """
    t0 = time.monotonic()
    ctx = get_field(FIELD_PRESET)
    say = log or (lambda msg: None)
    numbers = list(range(1, 19))
    workers = _worker_count()
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_entry_row, numbers))
    else:
        results = [_entry_row(no) for no in numbers]
    rows = {}
    graphs = {}
    fps = {}
    for (row, D, fp), no in zip(results, numbers):
        rows[no] = row
        graphs[no] = cayley_graph(ctx, D)
        graphs[no]._fingerprint = fp
        fps[no] = fp
    say("per-entry pipeline done")

    # pairwise isomorphism with fingerprint pre-filter
    parent = {no: no for no in numbers}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    undecided_pairs = []
    for i in numbers:
        for j in numbers:
            if j <= i:
                continue
            if find(i) == find(j):
                continue
            if fps[i] != fps[j]:
                continue
            try:
                iso, _ = is_isomorphic(graphs[i], graphs[j], timeout=iso_timeout)
            except Timeout:
                undecided_pairs.append((i, j))
                continue
            if iso:
                parent[find(j)] = find(i)
    classes = {}
    for no in numbers:
        classes.setdefault(find(no), []).append(no)
    partition = sorted(tuple(sorted(v)) for v in classes.values())
    for cls in partition:
        for no in cls:
            rows[no].class_id = min(cls)
    partition_matches = partition == expected_partition() and not undecided_pairs
    say(f"isomorphism partition: {partition}")

    # the cyclotomic class-0 graph must land in the {13,14,17} class
    from .designs import cyclotomic_pds
    Dc, _ = cyclotomic_pds(ctx, 2, [0])
    gc = cayley_graph(ctx, Dc)
    try:
        cyc_iso, _ = is_isomorphic(gc, graphs[14], timeout=iso_timeout)
    except Timeout:
        cyc_iso = False
    say(f"cyclotomic graph isomorphic to entry 14: {cyc_iso}")

    aut_orders = {}
    aut_matches = None
    if with_aut:
        seeds = translations(ctx)
        mismatch = False
        undecided = False
        for cls in partition:
            rep = min(cls)
            try:
                info = automorphism_order(graphs[rep], timeout=aut_timeout,
                                          known_automorphisms=seeds)
            except Timeout:
                aut_orders[rep] = None
                undecided = True
                continue
            aut_orders[rep] = info.order
            if info.order != EXPECTED_AUT[rep]:
                mismatch = True
            for no in cls:
                rows[no].aut_order = info.order
            say(f"class {cls}: |Aut| = {info.order}")
        aut_matches = False if mismatch else (None if undecided else True)

    return Table1Report(
        rows=[rows[no] for no in numbers],
        classes=partition,
        partition_matches=partition_matches,
        cyclotomic_matches_gold_class=cyc_iso,
        aut_orders=aut_orders,
        aut_matches=aut_matches,
        elapsed=time.monotonic() - t0,
    )


def write_reports(report: Table1Report, directory: str = ".") -> list[str]:
    """Write table1.report.json and table1.report.txt; returns paths."""
    paths = []
    jpath = os.path.join(directory, "table1.report.json")
    with open(jpath, "w", encoding="utf-8") as fh:
        json.dump(report.to_dict(), fh, indent=2, sort_keys=True)
        fh.write("\n")
    paths.append(jpath)
    tpath = os.path.join(directory, "table1.report.txt")
    with open(tpath, "w", encoding="utf-8") as fh:
        fh.write(report.to_text())
    paths.append(tpath)
    return paths
