"""Command-line interface.

One executable with subcommands for spectra, chromatic numbers, type
enumeration, the distance function, editing, the exact oracle, samplers,
Monte Carlo estimation, and the built-in reference checks.  Output is JSON by
default (``--format csv`` where tabular, ``--format text`` for type
listings); rationals are serialized as "num/den" strings.  All randomness
sits behind an explicit ``--seed``.

Exit codes: 0 success, 1 domain error (trivial property, guard, failed
reference check), 2 usage error or malformed file.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .crg import DirType, dir_mask_codes, enumerate_types, mask_colors
from .distance import dist_lower_turan, dist_max_upper, dist_upper, distfn_grid
from .editing import edit_by_dirtype, edit_by_type
from .errors import PropertyFormatError
from .files import format_graph, parse_graph, parse_property
from .graphs import (
    DIR_SYMBOL,
    DensityVector,
    DirDensity,
    PropertyFamily,
    is_member,
    pair_count,
)
from .oracle import estimate_dist, exact_dist, sample_digraph, sample_rgraph
from .spectrum import chromatic_number, clique_spectrum
from .verify import run_cases


def _frac(value) -> str:
    return str(Fraction(value))


def _density_list(dens):
    if isinstance(dens, DensityVector):
        return [_frac(p) for p in dens]
    return [_frac(dens.p), _frac(dens.q)]


def _parse_density(family: PropertyFamily, text: str):
    parts = [Fraction(p.strip()) for p in text.split(",")]
    if family.is_directed:
        if len(parts) != 2:
            raise ValueError("directed densities are given as 'p,q'")
        return DirDensity(parts[0], parts[1], family.palette)
    return DensityVector(tuple(parts))


def _set_token(mask, directed) -> str:
    if directed:
        return "".join(DIR_SYMBOL[c] for c in dir_mask_codes(mask))
    return "".join(str(c) for c in mask_colors(mask))


def _type_text(t) -> str:
    directed = isinstance(t, DirType)
    lines = [f"type n={t.k}"]
    lines.append(" ".join(_set_token(v, directed) for v in t.vertex_sets))
    for i in range(t.k - 1):
        lines.append(" ".join(
            _set_token(t.edge_sets[_tri(t.k, i, j)], directed) for j in range(i + 1, t.k)
        ))
    return "\n".join(lines)


def _tri(k, i, j):
    return i * (2 * k - i - 1) // 2 + (j - i - 1)


def _type_json(t):
    directed = isinstance(t, DirType)
    return {
        "k": t.k,
        "vertices": [_set_token(v, directed) for v in t.vertex_sets],
        "edges": [
            [_set_token(t.edge_sets[_tri(t.k, i, j)], directed) for j in range(i + 1, t.k)]
            for i in range(t.k - 1)
        ],
    }


def _emit(args, payload, csv_rows=None):
    if getattr(args, "format", "json") == "csv" and csv_rows is not None:
        out = "\n".join(",".join(str(v) for v in row) for row in csv_rows)
        print(out)
    else:
        print(json.dumps(payload))
    return 0


def _read_family(args) -> PropertyFamily:
    with open(args.property, encoding="utf-8") as fh:
        return parse_property(fh.read())


def _read_graph(args):
    with open(args.graph, encoding="utf-8") as fh:
        return parse_graph(fh.read())


def _cmd_spectrum(args):
    family = _read_family(args)
    spectrum = clique_spectrum(family, args.mode)
    payload = {
        "mode": args.mode,
        "tuples": [list(t) for t in spectrum.sorted_tuples()],
        "chi": 1 + spectrum.max_sum,
    }
    return _emit(args, payload, csv_rows=[list(t) for t in spectrum.sorted_tuples()])


def _cmd_chi(args):
    family = _read_family(args)
    chi = chromatic_number(family, args.mode)
    payload = {"mode": args.mode, "chi": chi}
    if chi == 1:
        payload["trivial"] = True
    return _emit(args, payload, csv_rows=[[args.mode, chi]])


def _cmd_types(args):
    family = _read_family(args)
    types = list(enumerate_types(family, args.kmax, candidate_ceiling=args.ceiling))
    if args.format == "json":
        return _emit(args, {"kmax": args.kmax, "count": len(types),
                            "types": [_type_json(t) for t in types]})
    print("\n\n".join(_type_text(t) for t in types))
    return 0


def _cmd_distfn(args):
    family = _read_family(args)
    if args.grid is not None:
        rows = distfn_grid(family, args.kmax, Fraction(args.grid),
                           candidate_ceiling=args.ceiling)
        payload = {"kmax": args.kmax,
                   "grid": [{"p": _density_list(d), "value": _frac(v)} for d, v in rows]}
        csv_rows = [_density_list(d) + [_frac(v)] for d, v in rows]
        return _emit(args, payload, csv_rows=csv_rows)
    if args.p is not None:
        dens = _parse_density(family, args.p)
        bound = dist_upper(family, dens, args.kmax, candidate_ceiling=args.ceiling)
        payload = {
            "value": _frac(bound.value),
            "kmax": args.kmax,
            "p": _density_list(dens),
            "certificate_type": _type_json(bound.certificate.crg_type),
            "weights": [_frac(w) for w in bound.certificate.weights],
        }
        return _emit(args, payload)
    bound, dens = dist_max_upper(family, args.kmax, candidate_ceiling=args.ceiling)
    lower = None
    try:
        lower = _frac(dist_lower_turan(family).value)
    except Exception:
        pass
    payload = {
        "max_value": _frac(bound.value),
        "argmax": _density_list(dens),
        "kmax": args.kmax,
        "turan_lower": lower,
        "certificate_type": _type_json(bound.certificate.crg_type),
    }
    return _emit(args, payload)


def _edit_trial(payload):
    family, graph, k_type, weights, seed = payload
    editor = edit_by_dirtype if family.is_directed else edit_by_type
    edited, changes = editor(graph, k_type, weights, seed=seed)
    return changes, is_member(edited, family)


def _cmd_edit(args):
    family = _read_family(args)
    graph = _read_graph(args)
    if not family.matches(graph):
        raise ValueError("graph arity does not match the property file")
    types = []
    for t in enumerate_types(family, args.kmax, candidate_ceiling=args.ceiling):
        types.append(t)
        if len(types) > args.type_index:
            break
    if args.type_index >= len(types):
        raise ValueError(f"type index {args.type_index} out of range at kmax={args.kmax}")
    k_type = types[args.type_index]
    weights = tuple(Fraction(w.strip()) for w in args.weights.split(","))
    payloads = [
        (family, graph, k_type, weights, args.seed + i) for i in range(args.trials)
    ]
    if args.jobs > 1:
        results = _pool_map(args.jobs)(_edit_trial, payloads)
    else:
        results = [_edit_trial(p) for p in payloads]
    if args.trials == 1:
        changes, member = results[0]
        payload = {
            "changes": changes,
            "normalized": _frac(Fraction(changes, pair_count(graph.n))),
            "member": member,
        }
        return _emit(args, payload, csv_rows=[[changes, member]])
    payload = {
        "trials": args.trials,
        "mean_changes": sum(c for c, _ in results) / args.trials,
        "min_changes": min(c for c, _ in results),
        "max_changes": max(c for c, _ in results),
        "all_members": all(m for _, m in results),
    }
    return _emit(args, payload, csv_rows=[[c, m] for c, m in results])


def _cmd_oracle(args):
    family = _read_family(args)
    graph = _read_graph(args)
    edits, witness = exact_dist(graph, family, max_n=args.max_n)
    payload = {
        "edits": edits,
        "normalized": _frac(Fraction(edits, pair_count(graph.n))) if graph.n >= 2 else "0",
        "witness_member": is_member(witness, family),
        "hamming_check": edits == sum(
            1 for a, b in zip(graph.colors, witness.colors) if a != b
        ),
    }
    return _emit(args, payload)


def _cmd_sample(args):
    if args.p is not None:
        dens = DensityVector.parse(args.p)
        graph = sample_rgraph(args.n, dens, args.seed)
        text = format_graph(graph)
    else:
        pal = args.palette or "tourn"
        if args.dens is not None:
            p, q = (Fraction(x.strip()) for x in args.dens.split(","))
        elif pal == "tourn":
            p, q = Fraction(0), Fraction(1, 2)
        else:
            raise ValueError("non-tournament palettes need --dens 'p,q'")
        dens = DirDensity.of(p, q, pal)
        graph = sample_digraph(args.n, dens, args.seed)
        text = format_graph(graph, pal)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        print(text, end="")
    return 0


def _pool_map(jobs):
    def run(fn, payloads):
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(fn, payloads))

    return run


def _cmd_estimate(args):
    family = _read_family(args)
    dens = _parse_density(family, args.p)
    map_fn = map
    if args.jobs > 1:
        runner = _pool_map(args.jobs)
        map_fn = lambda fn, items: runner(fn, list(items))  # noqa: E731
    stats = estimate_dist(args.n, dens, family, args.trials, args.seed,
                          kmax=args.kmax, mode=args.mode, max_n=args.max_n,
                          map_fn=map_fn)
    payload = {
        "n": stats.n,
        "trials": stats.trials,
        "mode": stats.mode,
        "mean": _frac(stats.mean),
        "std": stats.std,
        "min": _frac(stats.min),
        "max": _frac(stats.max),
    }
    csv = [[stats.n, stats.trials, stats.mode, _frac(stats.mean), stats.std,
            _frac(stats.min), _frac(stats.max)]]
    return _emit(args, payload, csv_rows=csv)


def _cmd_verify(args):
    report = run_cases(args.case)
    csv_rows = []
    for case in report["cases"]:
        for check in case["checks"]:
            csv_rows.append([case["case"], check["check"], check["expected"],
                             check["actual"], check["pass"]])
    code = _emit(args, report, csv_rows=csv_rows)
    if args.format != "csv":
        for case in report["cases"]:
            status = "pass" if case["pass"] else "FAIL"
            print(f"# {case['case']}: {status}", file=sys.stderr)
    return code if report["pass"] else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="edk",
        description="Edit distances from colored complete graphs and digraphs "
                    "to hereditary properties.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, prop=True, fmt=True):
        if prop:
            p.add_argument("--property", required=True, help="property file")
        if fmt:
            p.add_argument("--format", choices=("json", "csv", "text"), default="json")
        p.add_argument("--jobs", type=int, default=1, help="worker count for trials")
        p.add_argument("--ceiling", type=int, default=5_000_000,
                       help="candidate ceiling for type enumeration")

    p = sub.add_parser("spectrum", help="weak or strong clique spectrum")
    common(p)
    p.add_argument("--mode", choices=("weak", "strong"), default="weak")
    p.set_defaults(handler=_cmd_spectrum)

    p = sub.add_parser("chi", help="chromatic number of the family")
    common(p)
    p.add_argument("--mode", choices=("weak", "strong"), default="weak")
    p.set_defaults(handler=_cmd_chi)

    p = sub.add_parser("types", help="enumerate admissible types")
    common(p, fmt=False)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--kmax", type=int, required=True)
    p.set_defaults(handler=_cmd_types)

    p = sub.add_parser("distfn", help="distance function bounds")
    common(p)
    p.add_argument("--kmax", type=int, required=True)
    p.add_argument("--p", help="density vector, e.g. '1/3,1/3,1/3' (directed: 'p,q')")
    p.add_argument("--grid", help="rational grid step, e.g. '1/12'")
    p.set_defaults(handler=_cmd_distfn)

    p = sub.add_parser("edit", help="randomized editing toward an admissible type")
    common(p)
    p.add_argument("--graph", required=True, help="graph file")
    p.add_argument("--type-index", type=int, required=True,
                   help="index into the enumeration order")
    p.add_argument("--kmax", type=int, default=3)
    p.add_argument("--weights", required=True, help="simplex weights, e.g. '1/2,1/2'")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--trials", type=int, default=1)
    p.set_defaults(handler=_cmd_edit)

    p = sub.add_parser("oracle", help="exact edit distance at small n")
    common(p)
    p.add_argument("--graph", required=True, help="graph file")
    p.add_argument("--max-n", type=int, default=None, help="override the size guard")
    p.set_defaults(handler=_cmd_oracle)

    p = sub.add_parser("sample", help="seeded random graph")
    common(p, prop=False, fmt=False)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--p", help="multicolor density vector")
    p.add_argument("--palette", choices=("full", "compl", "orien", "undir", "tourn"))
    p.add_argument("--dens", help="directed densities 'p,q'")
    p.add_argument("--out", help="write to a file instead of stdout")
    p.set_defaults(handler=_cmd_sample)

    p = sub.add_parser("estimate", help="Monte Carlo distance estimate")
    common(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", required=True, help="densities ('p1,...,pr' or 'p,q')")
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--kmax", type=int, default=2)
    p.add_argument("--mode", choices=("auto", "exact", "algorithmic"), default="auto")
    p.add_argument("--max-n", type=int, default=None)
    p.set_defaults(handler=_cmd_estimate)

    p = sub.add_parser("verify-paper", help="recompute the built-in reference results")
    common(p, prop=False)
    p.add_argument("--case", default="all")
    p.set_defaults(handler=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.handler(args)
    except PropertyFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # domain errors
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
