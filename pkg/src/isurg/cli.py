"""Command-line front end.

Subcommands: dims, triangle, oracle, legendrian, planefield, trefoil.
Output is a human-readable table by default; --format json|tsv switches.
Exit codes: 0 success, 2 usage/validation error, 3 mathematical failure
(contradiction or undetermined oracle).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import graded, knots, legendrian, oracle, planefield, surgery, triangle

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_MATH = 3

CATALOG_ENV = "ISURG_CATALOG"


class UsageError(Exception):
    pass


# -- output formatting ----------------------------------------------------

# Fixed TSV column order per command.
_TSV_COLUMNS = {
    "dims": ["n", "z2_d0", "z2_d1", "z4_d0", "z4_d1", "z4_d2", "z4_d3", "provenance"],
    "oracle": ["n", "z2_d0", "z2_d1", "agrees", "provenance"],
    "triangle": ["n", "deg_surgery", "deg_to_s3", "deg_from_s3", "d_spin_surgery", "d_spin_other", "provenance"],
    "legendrian": ["tb", "rot", "target_tb", "rotations", "chern_count", "provenance"],
    "planefield": ["delta", "contact_grading", "d3", "rho", "provenance"],
    "trefoil": ["n", "z2_d0", "z2_d1", "provenance"],
}


def _fmt(v):
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, list):
        return ",".join(str(x) for x in v)
    return str(v)


def _emit(record: dict, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(record, indent=2))
        return
    cmd = record["command"]
    if fmt == "tsv":
        cols = _TSV_COLUMNS[cmd]
        print("\t".join(cols))
        for res in record["results"]:
            row = _flatten(res)
            print("\t".join(_fmt(row.get(c)) for c in cols))
    else:
        for res in record["results"]:
            row = _flatten(res)
            print("  ".join(f"{k}={_fmt(v)}" for k, v in row.items() if v is not None))
    for w in record["warnings"]:
        print(f"warning: {w}", file=sys.stderr)
    if fmt == "tsv":
        return
    if "trace" in record:
        for e in record["trace"]:
            print(
                f"trace: {e['constraint']} slope={e['slope']} "
                f"d{e['grading']}.{e['bound']}={e['value']} "
                f"consumed={e['consumed']}"
            )


def _flatten(res: dict) -> dict:
    out = {}
    for k, v in res.items():
        if k == "z2":
            out["z2_d0"], out["z2_d1"] = v
        elif k == "z4":
            out["z4_d0"], out["z4_d1"], out["z4_d2"], out["z4_d3"] = v
        else:
            out[k] = v
    return out


# -- argument helpers -----------------------------------------------------

def _parse_range(text: str):
    try:
        a, b = text.split(":")
        lo, hi = int(a), int(b)
    except ValueError:
        raise argparse.ArgumentTypeError(f"range must look like A:B, got {text!r}")
    if lo > hi:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return lo, hi


# Values like "-10:10" or "-1/2" look like options to argparse; glue them
# to their flag so they tokenize as a single argument.
_GLUED_FLAGS = {"--range", "--c1sq"}


def _preprocess(argv):
    out = []
    it = iter(argv)
    for tok in it:
        if tok in _GLUED_FLAGS:
            val = next(it, None)
            if val is None:
                out.append(tok)
            else:
                out.append(f"{tok}={val}")
        else:
            out.append(tok)
    return out


def _resolve_knot(args) -> knots.KnotDescriptor:
    spec_str = args.knot
    if spec_str.startswith("torus:"):
        try:
            p, q = (int(x) for x in spec_str[len("torus:"):].split(","))
        except ValueError:
            raise UsageError(f"torus knot must look like torus:P,Q, got {spec_str!r}")
        try:
            return knots.torus_knot(p, q)
        except ValueError as e:
            raise UsageError(str(e))
    path = args.catalog or os.environ.get(CATALOG_ENV)
    if not path:
        raise UsageError(
            f"--knot {spec_str!r} needs a catalog (--catalog or ${CATALOG_ENV})"
        )
    try:
        with open(path) as fh:
            catalog = knots.load_catalog(fh.read())
    except (OSError, knots.CatalogError) as e:
        raise UsageError(f"catalog {path}: {e}")
    for k in catalog:
        if k.name == spec_str:
            return k
    raise UsageError(f"knot {spec_str!r} not found in catalog {path}")


def _slopes(args):
    if args.n is not None:
        return [args.n]
    return list(range(args.range[0], args.range[1] + 1))


# -- subcommands ----------------------------------------------------------

def cmd_dims(args) -> dict:
    warnings = []
    if args.knot:
        k = _resolve_knot(args)
        g = k.genus
        inputs = {"knot": k.name, "genus": g}
        lens_known = k.lens_surgery
    else:
        if args.genus < 1:
            raise UsageError("genus must be >= 1")
        g = args.genus
        inputs = {"genus": g}
        lens_known = False
    if args.z4 and not lens_known:
        warnings.append(
            "Z/4 gradings assume a positive lens-space surgery; this knot is "
            "not marked lens_surgery=true"
        )
    results = []
    for n in _slopes(args):
        res = {"n": n, "z2": list(surgery.dims_z2(g, n).entries()), "provenance": "eq1"}
        if args.z4:
            res["z4"] = list(surgery.dims_z4(g, n).entries())
            res["provenance"] = "cor52"
        results.append(res)
    inputs.update(_slope_inputs(args))
    return _record("dims", inputs, results, warnings)


def cmd_triangle(args) -> dict:
    n = args.n
    degs = triangle.triangle_degrees(n)
    d_surgery = triangle.d_degree(triangle.surgery_map_cobordism_data(n))
    if n % 2 == 0:
        other = triangle.surgery_cobordism_data(n)  # S^3 -> S^3_n is spin
    else:
        other = triangle.to_s3_cobordism_data(n)    # S^3_{n+1} -> S^3 is spin
    res = {
        "n": n,
        "deg_surgery": degs.deg_surgery,
        "deg_to_s3": degs.deg_to_s3,
        "deg_from_s3": degs.deg_from_s3,
        "d_spin_surgery": d_surgery,
        "d_spin_other": triangle.d_degree(other),
        "provenance": "cor51",
    }
    return _record("triangle", {"n": n}, [res], [])


def cmd_oracle(args) -> dict:
    g = args.genus
    m = args.lspace_slope
    if g < 1:
        raise UsageError("genus must be >= 1")
    if m < 2 * g - 1:
        raise UsageError(f"lspace-slope must be >= 2g-1 = {2 * g - 1}")
    drop = frozenset(args.drop_constraint or [])
    system = oracle.build_system(g, m, args.range, drop=drop)
    try:
        solved = system.solve()
    except oracle.ContradictionError as e:
        raise MathError("contradiction", str(e), system, args)
    except oracle.NotDeterminedError as e:
        raise MathError("not-determined", str(e), system, args, slopes=e.slopes)
    results = []
    for n in sorted(solved):
        closed = surgery.dims_z2(g, n)
        results.append(
            {
                "n": n,
                "z2": list(solved[n].entries()),
                "agrees": solved[n] == closed,
                "provenance": "oracle",
            }
        )
    record = _record(
        "oracle",
        {"genus": g, "lspace_slope": m, "range": list(args.range), "dropped": sorted(drop)},
        results,
        [],
    )
    if args.trace:
        record["trace"] = [e.to_dict() for e in system.trace]
    return record


def cmd_legendrian(args) -> dict:
    try:
        rep = legendrian.LegendrianRep(args.tb, args.rot)
        rots = legendrian.rotation_numbers_after(rep, args.target_tb)
        count = legendrian.distinct_chern_count(rep, args.target_tb)
    except ValueError as e:
        raise UsageError(str(e))
    res = {
        "tb": args.tb,
        "rot": args.rot,
        "target_tb": args.target_tb,
        "rotations": rots,
        "chern_count": count,
        "provenance": "prop41",
    }
    return _record(
        "legendrian",
        {"tb": args.tb, "rot": args.rot, "target_tb": args.target_tb},
        [res],
        [],
    )


def cmd_planefield(args) -> dict:
    c1sq = None
    if args.c1sq is not None:
        try:
            c1sq = Fraction(args.c1sq)
        except (ValueError, ZeroDivisionError):
            raise UsageError(f"--c1sq must be a rational, got {args.c1sq!r}")
    try:
        f = planefield.FillingData(args.chi, args.sigma, args.b1, c1sq)
        d = planefield.delta(f)
        grading = planefield.contact_grading(f)
    except ValueError as e:
        raise UsageError(str(e))
    res = {
        "delta": d,
        "contact_grading": grading,
        "provenance": "delta",
    }
    if c1sq is not None:
        res["d3"] = str(planefield.d3(f))
        res["rho"] = str(planefield.rho(f))
    inputs = {"chi": args.chi, "sigma": args.sigma, "b1": args.b1}
    if args.c1sq is not None:
        inputs["c1sq"] = args.c1sq
    return _record("planefield", inputs, [res], [])


def cmd_trefoil(args) -> dict:
    if args.n < 1:
        raise UsageError("n must be >= 1")
    v = surgery.trefoil_one_over_n(args.n)
    res = {"n": args.n, "z2": list(v.entries()), "provenance": "prop61"}
    return _record("trefoil", {"n": args.n}, [res], [])


def _slope_inputs(args):
    if args.n is not None:
        return {"n": args.n}
    return {"range": list(args.range)}


def _record(command, inputs, results, warnings) -> dict:
    return {
        "command": command,
        "inputs": inputs,
        "results": results,
        "warnings": warnings,
    }


class MathError(Exception):
    def __init__(self, kind, message, system, cli_args, slopes=None):
        super().__init__(message)
        self.kind = kind
        self.system = system
        self.cli_args = cli_args
        self.slopes = slopes


# -- parser ---------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="isurg",
        description="Graded instanton surgery dimensions, degree tables, and "
        "the constraint-propagation oracle.",
    )
    parser.add_argument("--format", choices=["table", "json", "tsv"], default="table")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dims", help="closed-form graded dimensions of surgeries")
    who = p.add_mutually_exclusive_group(required=True)
    who.add_argument("--genus", type=int)
    who.add_argument("--knot", help="catalog name or torus:P,Q")
    where = p.add_mutually_exclusive_group(required=True)
    where.add_argument("--n", type=int)
    where.add_argument("--range", type=_parse_range, metavar="A:B")
    p.add_argument("--z4", action="store_true", help="include Z/4 gradings")
    p.add_argument("--catalog", help=f"catalog file (or ${CATALOG_ENV})")
    p.set_defaults(func=cmd_dims)

    p = sub.add_parser("triangle", help="Z/4 degree table of the surgery triangle")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_triangle)

    p = sub.add_parser("oracle", help="re-derive dimensions by constraint propagation")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--lspace-slope", type=int, required=True)
    p.add_argument("--range", type=_parse_range, metavar="A:B", required=True)
    p.add_argument("--trace", action="store_true")
    p.add_argument(
        "--drop-constraint",
        action="append",
        choices=list(oracle.CONSTRAINT_IDS),
        metavar="Ck",
    )
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("legendrian", help="rotation numbers after stabilization")
    p.add_argument("--tb", type=int, required=True)
    p.add_argument("--rot", type=int, required=True)
    p.add_argument("--target-tb", type=int, required=True)
    p.set_defaults(func=cmd_legendrian)

    p = sub.add_parser("planefield", help="plane-field invariants from filling data")
    p.add_argument("--chi", type=int, required=True)
    p.add_argument("--sigma", type=int, required=True)
    p.add_argument("--b1", type=int, default=0)
    p.add_argument("--c1sq")
    p.set_defaults(func=cmd_planefield)

    p = sub.add_parser("trefoil", help="1/n-surgery on the right-handed trefoil")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_trefoil)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    args = parser.parse_args(_preprocess(argv))
    try:
        record = args.func(args)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except MathError as e:
        report = _record(
            "oracle",
            {
                "genus": e.cli_args.genus,
                "lspace_slope": e.cli_args.lspace_slope,
                "range": list(e.cli_args.range),
                "dropped": sorted(e.cli_args.drop_constraint or []),
            },
            [],
            [],
        )
        report["error"] = {"kind": e.kind, "message": str(e)}
        if e.slopes is not None:
            report["error"]["undetermined_slopes"] = e.slopes
        if getattr(e.cli_args, "trace", False) and e.system is not None:
            report["trace"] = [t.to_dict() for t in e.system.trace]
        print(json.dumps(report, indent=2))
        return EXIT_MATH
    _emit(record, args.format)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
