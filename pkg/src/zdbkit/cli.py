"""Command-line interface.

Exit status: 0 on success, 1 when a verification fails, 2 on usage
errors.  `--out json` switches any subcommand to machine-readable
output; `--write-report` additionally writes a .report.json/.txt file
next to the input (or into the working directory).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

import numpy as np

from . import catalog as catalog_mod
from .catalog import resolve_function
from .constructions import (
    ccc_from_zdb,
    FamilyParams,
    injection_space,
    newfun_family,
    sample_newfun6,
    search_newapn,
)
from .designs import (
    PdsParams,
    image_pds,
    predicted_params,
    verify_design,
)
from .errors import Timeout, ZdbkitError
from .funcspace import evaluate, parse_function_text, poly_str
from .gf import PRESETS, format_field_block, get_field, parse_field_block
from .graphs import (
    automorphism_order,
    cayley_graph,
    graph_to_text,
    is_isomorphic,
    parse_graph_text,
    rank2,
    translations,
    verify_srg,
)
from .spectra import analyze_function, walsh_power_sum_check, zero_difference_profile

OK, VERIFY_FAILED, USAGE = 0, 1, 2


def _load_field(arg: str):
    if arg in PRESETS:
        return get_field(arg)
    with open(arg, encoding="utf-8") as fh:
        return get_field(parse_field_block(fh.read()))


def _emit(args, payload: dict, text: str) -> None:
    out = json.dumps(payload, indent=2, sort_keys=True, default=str) + "\n" \
        if args.out == "json" else text
    sys.stdout.write(out)
    if getattr(args, "write_report", False):
        base = getattr(args, "fn", None) or getattr(args, "graph", None) or args.cmd
        ext = ".report.json" if args.out == "json" else ".report.txt"
        path = (base if os.path.exists(str(base)) else args.cmd) + ext
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(out)


def _fn_table(spec: str):
    poly = resolve_function(spec)
    return evaluate(poly)


# ----------------------------------------------------------------------
# subcommand handlers
# ----------------------------------------------------------------------

def cmd_field(args) -> int:
    ctx = _load_field(args.field)
    payload = {
        "p": ctx.p, "n": ctx.n, "q": ctx.q,
        "modulus": list(ctx.spec.modulus),
        "generator": ctx.format_elem(ctx.w),
        "generator_order": ctx.q - 1,
    }
    text = (format_field_block(ctx.spec)
            + f"q={ctx.q} generator={ctx.format_elem(ctx.w)} "
            f"order={ctx.q - 1}\n")
    _emit(args, payload, text)
    return OK


def cmd_analyze(args) -> int:
    table = _fn_table(args.fn)
    report = analyze_function(table)
    payload = report.to_dict()
    payload["function"] = poly_str(table.origin) if table.origin else "<table>"
    lines = [f"function: {payload['function']}",
             f"delta_max: {report.spectrum.delta_max} "
             f"(APN: {report.spectrum.is_apn}, PN: {report.spectrum.is_pn})",
             f"algebraic degree: {report.degree}",
             f"zero-difference: {report.zdb_class.kind}"
             f"({report.zdb_class.delta})",
             f"walsh values: {payload['walsh_values']}",
             f"nonlinearity: {payload['nonlinearity']}",
             "spectrum histogram (count: multiplicity): "
             + str(payload["spectrum_histogram"])]
    _emit(args, payload, "\n".join(lines) + "\n")
    return OK


def cmd_zdb_check(args) -> int:
    table = _fn_table(args.fn)
    profile, cls = zero_difference_profile(table)
    payload = {"kind": cls.kind, "delta": cls.delta,
               "profile_min": int(profile.min()),
               "profile_max": int(profile.max())}
    _emit(args, payload, f"{cls.kind}({cls.delta}) "
          f"profile in [{profile.min()}, {profile.max()}]\n")
    if args.expect_delta is not None:
        return OK if (cls.kind == "zdb" and cls.delta == args.expect_delta) \
            else VERIFY_FAILED
    return OK


def cmd_walsh(args) -> int:
    table = _fn_table(args.fn)
    report = analyze_function(table)
    payload = report.to_dict()
    check = None
    if args.power_sum_delta is not None:
        psc = walsh_power_sum_check(table, args.power_sum_delta,
                                    report.walsh_report)
        check = psc.ok
        payload["power_sum_ok"] = psc.ok
    text = f"walsh values: {payload['walsh_values']}\n" + \
        (f"power-sum identity (delta={args.power_sum_delta}): {check}\n"
         if check is not None else "")
    _emit(args, payload, text)
    return OK if check in (None, True) else VERIFY_FAILED


def cmd_pds(args) -> int:
    if args.pds_cmd == "predict":
        pred = predicted_params(args.p, args.t, args.n)
        payload = {"params": pred.params.as_tuple(), "kind": pred.kind,
                   "latin_type": pred.latin_type, "N": pred.latin_n,
                   "r": pred.latin_r}
        _emit(args, payload, f"{pred.params} {pred.kind} "
              f"type={pred.latin_type}\n")
        return OK
    # verify
    table = _fn_table(args.fn)
    ctx = table.ctx
    D = image_pds(table)
    if args.params:
        v, k, lam, *mu = (int(x) for x in args.params.split(","))
        params = PdsParams(v, k, lam, mu[0] if mu else None)
        kind = "DS" if params.is_ds else "PDS"
    else:
        profile, cls = zero_difference_profile(table)
        if cls.kind != "zdb":
            sys.stderr.write("function is not ZDB; pass --params explicitly\n")
            return VERIFY_FAILED
        delta = cls.delta
        t = 0
        while ctx.p**t < delta:
            t += 1
        if ctx.p**t != delta:
            sys.stderr.write(f"delta={delta} is not a power of p\n")
            return VERIFY_FAILED
        pred = predicted_params(ctx.p, t, ctx.n)
        params, kind = pred.params, pred.kind
    try:
        cert = verify_design(ctx, D, params, kind=kind)
    except ZdbkitError as e:
        sys.stderr.write(f"verification failed: {e}\n")
        return VERIFY_FAILED
    chis = sorted(set(str(c) for c in cert.char_values))
    payload = {"params": params.as_tuple(), "kind": kind, "size": len(D),
               "regular": cert.regular, "char_values": chis}
    _emit(args, payload, f"certified {kind} {params} regular={cert.regular} "
          f"chi values {chis}\n")
    return OK


def cmd_srg(args) -> int:
    if args.srg_cmd == "build":
        table = _fn_table(args.fn)
        D = image_pds(table)
        graph = cayley_graph(table.ctx, D)
        text = graph_to_text(graph)
        if args.graph_out:
            with open(args.graph_out, "w", encoding="utf-8") as fh:
                fh.write(text)
            sys.stdout.write(f"wrote {args.graph_out} (v={graph.v}, "
                             f"degree={graph.degree(0)})\n")
        else:
            sys.stdout.write(text)
        return OK
    # verify
    with open(args.graph, encoding="utf-8") as fh:
        graph = parse_graph_text(fh.read())
    v, k, lam, *mu = (int(x) for x in args.params.split(","))
    params = PdsParams(v, k, lam, mu[0] if mu else None)
    ok, witness = verify_srg(graph, params)
    payload = {"srg": ok, "params": params.as_tuple(), "rank2": rank2(graph),
               "witness": witness}
    _emit(args, payload, f"srg={ok} params={params} rank2={payload['rank2']}"
          + (f" witness={witness}" if witness else "") + "\n")
    return OK if ok else VERIFY_FAILED


def cmd_iso(args) -> int:
    with open(args.a, encoding="utf-8") as fh:
        g1 = parse_graph_text(fh.read())
    with open(args.b, encoding="utf-8") as fh:
        g2 = parse_graph_text(fh.read())
    try:
        found, mapping = is_isomorphic(g1, g2, timeout=args.timeout)
    except Timeout:
        _emit(args, {"isomorphic": None}, "undecided (timeout)\n")
        return VERIFY_FAILED
    payload = {"isomorphic": found,
               "mapping": mapping if args.out == "json" else None}
    _emit(args, payload, f"isomorphic: {found}\n")
    return OK


def cmd_aut(args) -> int:
    with open(args.graph, encoding="utf-8") as fh:
        graph = parse_graph_text(fh.read())
    try:
        info = automorphism_order(graph, timeout=args.timeout)
    except Timeout:
        _emit(args, {"order": None}, "undecided (timeout)\n")
        return VERIFY_FAILED
    payload = {"order": info.order, "base": list(info.base),
               "generators": len(info.generators)}
    _emit(args, payload, f"|Aut| = {info.order}\n")
    return OK


def cmd_search(args) -> int:
    ctx = _load_field(args.field)
    if args.search_cmd == "newapn":
        hits, checked = search_newapn(ctx, exhaustive=args.exhaustive,
                                      samples=args.samples, seed=args.seed)
        for h in hits:
            sys.stdout.write(
                f"alpha={ctx.format_elem(h.alpha)} "
                f"beta={ctx.format_elem(h.beta)} "
                f"gamma={ctx.format_elem(h.gamma)} permutation=True\n")
        sys.stdout.write(f"# checked {checked} triples, {len(hits)} hits, "
                         "closed form agreed on all\n")
        return OK
    # newfun
    family = f"newfun{ctx.n}"
    if args.exhaustive:
        if ctx.n != 4:
            sys.stderr.write("exhaustive newfun search is supported for n=4\n")
            return USAGE
        triples = ((a, b, c) for a in range(ctx.q) for b in range(ctx.q)
                   for c in range(ctx.q))
        params_iter = (FamilyParams(family, ctx, a, b, c)
                       for a, b, c in triples)
    elif ctx.n == 6:
        params_iter = iter(sample_newfun6(ctx, args.samples, seed=args.seed))
    else:
        rng = np.random.default_rng(args.seed)
        params_iter = (FamilyParams(family, ctx, int(rng.integers(0, ctx.q)),
                                    int(rng.integers(0, ctx.q)),
                                    int(rng.integers(0, ctx.q)))
                       for _ in range(args.samples))
    hits = 0
    checked = 0
    for params in params_iter:
        res = newfun_family(params)
        checked += 1
        if res.zdb_verified:
            hits += 1
            sys.stdout.write(
                f"alpha={ctx.format_elem(params.alpha)} "
                f"beta={ctx.format_elem(params.beta)} "
                f"gamma={ctx.format_elem(params.gamma)} "
                f"condition={res.condition} zdb={res.zdb_verified}\n")
    sys.stdout.write(f"# checked {checked} triples, {hits} ZDB hits\n")
    return OK


def cmd_injection_space(args) -> int:
    table = _fn_table(args.g)
    gamma = table.ctx.parse_elem(args.gamma)
    space = injection_space(table, gamma)
    payload = {"dim": space.dim, "constraints": space.constraint_count,
               "q": table.ctx.q}
    _emit(args, payload, f"dim={space.dim} constraints="
          f"{space.constraint_count} over 2^{table.ctx.q} functions\n")
    return OK


def cmd_ccc(args) -> int:
    table = _fn_table(args.fn)
    res = ccc_from_zdb(table)
    payload = {"length": res.length, "size": res.size,
               "min_distance": res.min_distance,
               "claimed": [res.claimed[0], res.claimed[1], res.claimed[2]],
               "matches": res.matches}
    _emit(args, payload,
          f"({res.length}, {res.size}, {res.min_distance}) "
          f"claimed ({res.claimed[0]}, {res.claimed[1]}, {res.claimed[2]}) "
          f"match={res.matches}\n")
    return OK if res.matches else VERIFY_FAILED


def cmd_table1(args) -> int:
    log = (lambda m: sys.stderr.write(m + "\n")) if args.verbose else None
    report = catalog_mod.reproduce_table1(
        with_aut=args.with_aut, iso_timeout=args.iso_timeout,
        aut_timeout=args.aut_timeout, log=log)
    if args.out == "json":
        sys.stdout.write(json.dumps(report.to_dict(), indent=2,
                                    sort_keys=True) + "\n")
    else:
        sys.stdout.write(report.to_text())
    paths = catalog_mod.write_reports(report, args.report_dir)
    sys.stderr.write(f"reports written: {', '.join(paths)} "
                     f"(elapsed {report.elapsed:.1f} s)\n")
    ok = report.partition_matches and report.cyclotomic_matches_gold_class \
        and (report.aut_matches is not False)
    return OK if ok else VERIFY_FAILED


# ----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="zdbkit",
        description="zero-difference balanced functions, partial difference "
                    "sets, and strongly regular graphs")
    ap.add_argument("--out", choices=("text", "json"), default="text")
    ap.add_argument("--write-report", action="store_true",
                    help="also write a .report.json/.txt file")
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("field", help="inspect a field preset or spec file")
    p.add_argument("--field", default="f256_paper")
    p.set_defaults(func=cmd_field)

    p = sub.add_parser("analyze", help="differential/Walsh/ZDB report")
    p.add_argument("--fn", required=True, help="catalog:<n> or function file")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("zdb-check", help="zero-difference profile")
    p.add_argument("--fn", required=True)
    p.add_argument("--expect-delta", type=int, default=None)
    p.set_defaults(func=cmd_zdb_check)

    p = sub.add_parser("walsh", help="Walsh values and power-sum identity")
    p.add_argument("--fn", required=True)
    p.add_argument("--power-sum-delta", type=int, default=None)
    p.set_defaults(func=cmd_walsh)

    p = sub.add_parser("pds", help="predict or verify difference sets")
    ps = p.add_subparsers(dest="pds_cmd", required=True)
    pv = ps.add_parser("verify")
    pv.add_argument("--fn", required=True)
    pv.add_argument("--params", default=None, help="v,k,l[,m]")
    pv.set_defaults(func=cmd_pds)
    pp = ps.add_parser("predict")
    pp.add_argument("--p", type=int, required=True)
    pp.add_argument("--t", type=int, required=True)
    pp.add_argument("--n", type=int, required=True)
    pp.set_defaults(func=cmd_pds)

    p = sub.add_parser("srg", help="build or verify strongly regular graphs")
    ss = p.add_subparsers(dest="srg_cmd", required=True)
    sb = ss.add_parser("build")
    sb.add_argument("--fn", required=True)
    sb.add_argument("--graph-out", default=None)
    sb.set_defaults(func=cmd_srg)
    sv = ss.add_parser("verify")
    sv.add_argument("--graph", required=True)
    sv.add_argument("--params", required=True, help="v,k,l,m")
    sv.set_defaults(func=cmd_srg)

    p = sub.add_parser("iso", help="graph isomorphism")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--timeout", type=float, default=600.0)
    p.set_defaults(func=cmd_iso)

    p = sub.add_parser("aut", help="automorphism group order")
    p.add_argument("--graph", required=True)
    p.add_argument("--timeout", type=float, default=7200.0)
    p.set_defaults(func=cmd_aut)

    p = sub.add_parser("search", help="parameter searches for the families")
    qs = p.add_subparsers(dest="search_cmd", required=True)
    for name in ("newapn", "newfun"):
        pq = qs.add_parser(name)
        pq.add_argument("--field", required=True)
        pq.add_argument("--exhaustive", action="store_true")
        pq.add_argument("--samples", type=int, default=1000)
        pq.add_argument("--seed", type=int, default=0)
        pq.set_defaults(func=cmd_search)

    p = sub.add_parser("injection-space", help="solve for coset-injective h")
    p.add_argument("--g", required=True, help="catalog:<n> or function file")
    p.add_argument("--gamma", required=True, help="element, e.g. w^5")
    p.set_defaults(func=cmd_injection_space)

    p = sub.add_parser("ccc", help="constant composition code of a ZDB function")
    p.add_argument("--fn", required=True)
    p.set_defaults(func=cmd_ccc)

    p = sub.add_parser("table1", help="reproduce the 18-function pipeline")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--with-aut", action="store_true",
                   help="also compute automorphism orders")
    g.add_argument("--skip-aut", action="store_true",
                   help="skip automorphism orders (the default)")
    p.add_argument("--iso-timeout", type=float, default=600.0)
    p.add_argument("--aut-timeout", type=float, default=7200.0)
    p.add_argument("--report-dir", default=".")
    p.add_argument("--verbose", action="store_true")
    p.set_defaults(func=cmd_table1)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return USAGE if e.code not in (0, None) else OK
    try:
        return args.func(args)
    except ZdbkitError as e:
        sys.stderr.write(f"error: {e}\n")
        return VERIFY_FAILED
    except FileNotFoundError as e:
        sys.stderr.write(f"error: {e}\n")
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
