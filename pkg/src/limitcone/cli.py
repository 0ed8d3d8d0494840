"""Command-line front end.

    limitcone group hecke:5
    limitcone enumerate hecke:5 --depth 12
    limitcone cone hecke:5 --depth 12 --out runs/
    limitcone zariski pslz-diag:x^2-5

Every subcommand prints one JSON document (schema "1") on stdout; artifacts
(CSV, SVG, JSON copies) go to ``--out`` when given.  Failures print an error
document and exit nonzero.
"""
import argparse
import json
import random
import sys
from pathlib import Path

from . import __version__
from .errors import BadFlag, BadSpec, LimitConeError
from .groups import enumerate_group, load_spec, parse_word, word_element, validate_spec
from .limits import (
    SCHEMA,
    cone_hull,
    direction_cloud,
    furstenberg_cloud,
    parabolic_family,
    thread_count,
    torus_orbit,
    write_direction_csv,
    write_family_csv,
    write_torus_csv,
    zariski_check,
)
from .moebius import schottky_powers
from .numfield import NumberField
from .svg import plot_svg

DEFAULTS = {"depth": 10, "cap": 100_000, "bits": 96, "order_bound": 200, "grid": 64}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise BadFlag(message)


def _positive_int(text):
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}")
    if value != int(value) or value <= 0:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return int(value)


def _nonneg_int(text):
    if text.strip() == "0":
        return 0
    return _positive_int(text)


def _common(p, depth=True, spec=True):
    if spec:
        p.add_argument("source", nargs="?", help="builtin name (hecke:q, tri-qinfinf:q, pslz-diag:<minpoly>) or JSON path")
        p.add_argument("--spec", dest="spec_file", help="group spec JSON file")
    if depth:
        p.add_argument("--depth", type=_nonneg_int, default=DEFAULTS["depth"])
        p.add_argument("--cap", type=_positive_int, default=DEFAULTS["cap"])
    p.add_argument("--bits", type=_positive_int, default=DEFAULTS["bits"])
    p.add_argument("--order-bound", type=_positive_int, default=DEFAULTS["order_bound"])
    p.add_argument("--grid", type=_positive_int, default=DEFAULTS["grid"])
    p.add_argument("--threads", type=_positive_int, default=None, help="worker processes (fallback: LIMITCONE_THREADS)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", help="directory for CSV/SVG/JSON artifacts")


def build_parser():
    parser = _Parser(prog="limitcone", description="Limit sets of semi-arithmetic Fuchsian groups.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    _common(sub.add_parser("group", help="validate a spec, print field and relations"))
    _common(sub.add_parser("enumerate", help="reduced-word enumeration counts"))
    _common(sub.add_parser("cone", help="translation directions and the limit cone"))
    _common(sub.add_parser("furstenberg", help="attractive fixed points on the torus"))
    _common(sub.add_parser("zariski", help="Zariski density through invariant traces"))
    p = sub.add_parser("parabolic-family", help="directions of T_n with tr = n A - B")
    _common(p, depth=False, spec=False)
    p.add_argument("--minpoly", default="x^2-x-1")
    p.add_argument("--tr-u", default="0,4", help="power-basis coordinates, comma separated")
    p.add_argument("--tr-v", default="0,4")
    p.add_argument("--n", default="1,10,100,1000,10000,100000,1000000", help="comma separated n values")
    p = sub.add_parser("schottky", help="ping-pong certificate for <g^n, h^n>")
    _common(p, depth=False)
    p.add_argument("--g", default="T^4 S")
    p.add_argument("--h", default="S T^4 S S^-1")
    p.add_argument("--embedding", type=_positive_int, default=1)
    p.add_argument("--max-power", type=_positive_int, default=20)
    p = sub.add_parser("torus-orbit", help="orbit of a pair of rotations on the 2-torus")
    _common(p, depth=False, spec=False)
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--beta", type=float, required=True)
    p.add_argument("-N", type=_positive_int, default=100_000)
    return parser


def _spec(args):
    src = args.spec_file or args.source
    if not src:
        raise BadSpec("no group given (positional name or --spec FILE)")
    return load_spec(src)


def _meta(args, **extra):
    out = {"schema": SCHEMA, "command": args.command}
    for key in ("depth", "cap", "bits", "order_bound", "grid"):
        if hasattr(args, key):
            out[key] = getattr(args, key)
    out.update(extra)
    return out


def _outdir(args):
    if not args.out:
        return None
    path = Path(args.out)
    path.mkdir(parents=True, exist_ok=True)
    return path


def _write(path, text):
    with open(path, "w", newline="") as fh:
        fh.write(text)


def cmd_group(args):
    spec = _spec(args)
    problems = validate_spec(spec, min(args.depth, 6), args.cap)
    doc = _meta(args, **spec.to_json())
    doc.update(valid=not problems, problems=problems, trusted=spec.trusted, r=spec.r, degree=spec.field.degree)
    doc["schema"] = SCHEMA
    return doc


def cmd_enumerate(args):
    spec = _spec(args)
    run = enumerate_group(spec, args.depth, args.cap)
    # re-verify projective distinctness on a seeded sample of pairs
    rng = random.Random(args.seed)
    n = len(run.elements)
    pairs = [(rng.randrange(n), rng.randrange(n)) for _ in range(min(200, n * n))] if n > 1 else []
    clashes = sum(1 for a, b in pairs if a != b and run.elements[a][1] == run.elements[b][1])
    return _meta(
        args,
        label=spec.label,
        elements=n,
        counts_per_length=run.counts,
        status=run.status,
        dedup_sample_pairs=len(pairs),
        dedup_clashes=clashes,
        seed=args.seed,
    )


def cmd_cone(args):
    spec = _spec(args)
    run = enumerate_group(spec, args.depth, args.cap)
    cloud = direction_cloud(spec, args.depth, args.cap, args.bits, args.order_bound, run=run, threads=args.threads)
    report = cone_hull(cloud, meta=_meta(args, label=spec.label, elements=len(run), truncated=run.truncated))
    doc = report.to_json()
    out = _outdir(args)
    if out:
        write_direction_csv(cloud, out / "directions.csv")
        if report.r == 2:
            _write(out / "ratios.svg", plot_svg(report))
        _write(out / "cone.json", json.dumps(doc, indent=2, sort_keys=True) + "\n")
    return doc


def cmd_furstenberg(args):
    spec = _spec(args)
    cloud = furstenberg_cloud(spec, args.depth, args.cap, args.bits, args.grid, args.order_bound, threads=args.threads)
    doc = _meta(args, label=spec.label)
    doc.update(cloud.to_json())
    out = _outdir(args)
    if out:
        write_torus_csv(cloud, out / "torus.csv")
        if len(cloud.points):
            _write(out / "torus.svg", plot_svg(cloud))
        _write(out / "furstenberg.json", json.dumps(doc, indent=2, sort_keys=True) + "\n")
    return doc


def cmd_zariski(args):
    spec = _spec(args)
    report = zariski_check(spec, args.depth, args.cap)
    doc = _meta(args, label=spec.label)
    doc.update(report.to_json())
    out = _outdir(args)
    if out:
        _write(out / "zariski.json", json.dumps(doc, indent=2, sort_keys=True) + "\n")
    return doc


def _coords(text):
    return [c.strip() for c in text.split(",")]


def cmd_parabolic(args):
    from .groups import parse_polynomial

    K = NumberField(parse_polynomial(args.minpoly))
    try:
        tr_u, tr_v = K.element(_coords(args.tr_u)), K.element(_coords(args.tr_v))
        ns = [int(float(x)) for x in _coords(args.n)]
    except ValueError as exc:
        raise BadFlag(str(exc)) from exc
    report = parabolic_family(tr_u, tr_v, ns, bits=args.bits)
    rows = [
        {
            "n": row.n,
            "ratio": [float(row.ratio(k).mid()) for k in range(1, len(row.lengths))],
            "diff": [float(x.mid()) for x in row.diff[1:]],
            "target": [float(x.mid()) for x in row.target[1:]],
            "error": [float(x.mid()) for x in row.error[1:]],
        }
        for row in report.rows
    ]
    skipped = [{"n": e.n, "embedding": e.index, "error": e.code} for e in report.skipped]
    doc = _meta(args, minpoly=[str(c) for c in K.minpoly], tr_u=tr_u.to_json(), tr_v=tr_v.to_json(), rows=rows, skipped=skipped)
    out = _outdir(args)
    if out and report.rows:
        write_family_csv(report, out / "parabolic_family.csv")
    return doc


def cmd_schottky(args):
    spec = _spec(args)
    g = word_element(spec, parse_word(args.g, spec.names))
    h = word_element(spec, parse_word(args.h, spec.names))
    cert = schottky_powers(g, h, args.embedding, args.max_power, args.bits)
    doc = _meta(args, label=spec.label, g=args.g, h=args.h, status="certified", certificate=cert.to_json())
    out = _outdir(args)
    if out:
        _write(out / "schottky.json", json.dumps(doc, indent=2, sort_keys=True) + "\n")
    return doc


def cmd_torus_orbit(args):
    cloud = torus_orbit(args.alpha, args.beta, args.N, args.grid)
    checkpoints = sorted({min(10 ** k, args.N) for k in range(1, 12)} | {args.N})
    table = [(n, torus_orbit(args.alpha, args.beta, n, args.grid).statistic) for n in checkpoints]
    doc = _meta(args, alpha=args.alpha, beta=args.beta, N=args.N, discrepancy=cloud.statistic, checkpoints=[{"N": n, "discrepancy": d} for n, d in table])
    out = _outdir(args)
    if out:
        _write(out / "torus_orbit.csv", "N,discrepancy\n" + "".join(f"{n},{d!r}\n" for n, d in table))
    return doc


COMMANDS = {
    "group": cmd_group,
    "enumerate": cmd_enumerate,
    "cone": cmd_cone,
    "furstenberg": cmd_furstenberg,
    "zariski": cmd_zariski,
    "parabolic-family": cmd_parabolic,
    "schottky": cmd_schottky,
    "torus-orbit": cmd_torus_orbit,
}


def _error_doc(code, message):
    return {"schema": SCHEMA, "status": "error", "error": code, "message": message}


def run(argv=None, stdout=None):
    """Parse ``argv``, run the subcommand, print JSON; returns the exit status."""
    stdout = stdout or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        if not args.command:
            raise BadFlag("a subcommand is required: " + ", ".join(COMMANDS))
        if getattr(args, "threads", None) is None:
            args.threads = thread_count()
        doc = COMMANDS[args.command](args)
        if "status" not in doc:
            doc["status"] = "ok"
        code = 0
    except LimitConeError as exc:
        status = 2 if isinstance(exc, (BadFlag, BadSpec)) else 1
        doc, code = _error_doc(exc.code, str(exc)), status
        if type(exc).__name__ == "NotFound":
            doc, code = {"schema": SCHEMA, "status": "NotFound", "message": str(exc)}, 0
    except OSError as exc:
        doc, code = _error_doc("IoError", str(exc)), 3
    print(json.dumps(doc, indent=2, sort_keys=True), file=stdout)
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
