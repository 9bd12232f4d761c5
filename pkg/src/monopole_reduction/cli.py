"""Command-line front end: ``mrk <command> ...`` or ``python -m monopole_reduction``.

Exit status: 0 success, 1 malformed input, 2 validation or congruence error,
3 lower-level reducible (no formula available).
"""
import argparse
import re
import sys
from fractions import Fraction

from . import io
from .arith import format_rational, parse_rational
from .errors import InputError, MRKError, UnsupportedLevelError, ValidationFailed
from .index import compute_p1, dim_asd, dim_dirac, dim_sw, dimension_report, n_lambda_s
from .lattice import square
from .manifold import blow_up, elliptic_setup
from .pairing import InvariantMonomial, jacobi, link_sum, reduction_donaldson, simple_type_donaldson
from .reducibles import DEFAULT_MAX_LEVEL, partition_reducibles
from .series import km_series, series_invariant, witten_series
from .validation import validate_setup


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(message)


def _emit(obj, table, fmt, out):
    if fmt == "tsv":
        if table is None:
            cols = sorted(k for k, v in obj.items() if not isinstance(v, (list, dict)))
            rows = [[obj[k] for k in cols]]
        else:
            cols, rows = table
        out.write("\t".join(cols) + "\n")
        for row in rows:
            out.write("\t".join(_tsv_cell(v) for v in row) + "\n")
    else:
        out.write(io.dumps(obj) + "\n")


def _tsv_cell(v):
    if isinstance(v, list):
        return ",".join(str(x) for x in v)
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def _read_job(path):
    try:
        text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None
    return io.loads_job(text)


def _need_gauge(job):
    if job.gauge is None:
        raise InputError("this command needs a \"gauge\" section")
    return job.gauge


def _opt(args, job, name, default):
    value = getattr(args, name, None)
    if value is None:
        value = job.options.get(name, default)
    return value


# monomials

_Z_TOKEN = re.compile(r"^([^\s^]+)(?:\^(\d+))?$")


def _resolve_beta(m, item):
    if isinstance(item, str):
        if re.fullmatch(r"-?\d+(,-?\d+)*", item):
            return m.vector([int(x) for x in item.split(",")])
        return m.label(item)
    return m.vector(item)


def _parse_z(m, text):
    betas, power = [], 0
    for tok in text.split():
        match = _Z_TOKEN.match(tok)
        if not match:
            raise InputError(f"cannot parse monomial token {tok!r}")
        name, exp = match.group(1), int(match.group(2) or 1)
        if name == "x":
            power += exp
        else:
            betas.extend([m.label(name)] * exp)
    return betas, power


def _monomial(args, job, report=None):
    """Build the monomial from --z/--beta/--m/--n-c1, else from the job file."""
    m = job.manifold
    betas, power, n_c1 = [], 0, None
    if args.z or args.beta:
        if args.z:
            betas, power = _parse_z(m, args.z)
        betas += [_resolve_beta(m, b) for b in args.beta or []]
    elif job.monomial is not None:
        betas = [_resolve_beta(m, b) for b in job.monomial.get("betas", [])]
        power = job.monomial.get("m", 0)
        n_c1 = job.monomial.get("n_c1")
    if args.m is not None:
        power += args.m
    if args.n_c1 is not None:
        n_c1 = args.n_c1
    if n_c1 is None:
        report = report or dimension_report(m, _need_gauge(job))
        n_c1 = report.d_a + report.n_a - 1 - (len(betas) + 2 * power)
        if n_c1 < 0:
            raise InputError(f"monomial degree too high: n_c1 would be {n_c1}")
    return InvariantMonomial(tuple(betas), power, n_c1)


def _validated(job, path, args):
    report = validate_setup(job.manifold, job.gauge, job.data)
    if report.blocking(path):
        raise ValidationFailed(report, path)
    return report


def _with_findings(obj, report, args, job):
    if getattr(args, "validate", False) or job.options.get("validate"):
        obj["findings"] = [io.finding_to_dict(f) for f in report.findings]
    return obj


def _reducible_table(rows):
    cols = ["K", "L1", "sw", "level", "d_s"]
    if rows and "value" in rows[0]:
        cols.append("value")
    return cols, [[r[c] for c in cols] for r in rows]


# commands

def cmd_catalog(args):
    m, g, data = elliptic_setup(args.n, args.aux_rank, args.f_square)
    job = io.JobConfig(manifold=m, gauge=g, sw_data=data)
    return io.job_to_dict(job), None


def cmd_blowup(args):
    job = _read_job(args.config)
    m = job.manifold
    for _ in range(args.times):
        m = blow_up(m)
    return {"schema": io.SCHEMA, "manifold": io.manifold_to_dict(m)}, None


def cmd_dims(args):
    job = _read_job(args.config)
    m, g = job.manifold, _need_gauge(job)
    obj = {"schema": io.SCHEMA}
    errors = []

    def attempt(key, fn):
        try:
            obj[key] = fn()
        except MRKError as exc:
            obj[key] = None
            errors.append({"field": key, "code": exc.code, "message": str(exc)})

    attempt("p1", lambda: compute_p1(g))
    attempt("d_a", lambda: dim_asd(m, obj["p1"]))
    attempt("n_a", lambda: dim_dirac(m, g))
    attempt("n_lambda_s", lambda: n_lambda_s(m, obj["p1"]))
    obj["dim_M_star"] = None if None in (obj["d_a"], obj["n_a"]) else 2 * obj["d_a"] + 2 * obj["n_a"] - 1
    d_s = []
    for datum in job.data:
        try:
            value = dim_sw(m, datum.K)
        except MRKError:
            value = None
        d_s.append({"K": list(datum.K.coords), "d_s": value})
    obj["d_s"] = d_s
    if errors:
        obj["errors"] = errors
    report = validate_setup(m, g, job.data)
    return _with_findings(obj, report, args, job), None


def cmd_reducibles(args):
    job = _read_job(args.config)
    report = _validated(job, "reducibles", args)
    enum = partition_reducibles(
        job.manifold, _need_gauge(job), job.data,
        max_level=_opt(args, job, "max_level", DEFAULT_MAX_LEVEL),
        keep_zero_sw=args.keep_zero_sw or job.options.get("keep_zero_sw", False),
    )
    rows = [io.reducible_to_dict(r) for r in enum.reducibles]
    obj = {
        "schema": io.SCHEMA,
        "reducibles": rows,
        "above_max_level": [io.reducible_to_dict(r) for r in enum.above_max_level],
        "top_level_only": not enum.above_max_level and all(r.level == 0 for r in enum.reducibles),
    }
    return _with_findings(obj, report, args, job), _reducible_table(rows)


def _reducibles_for(job, args):
    enum = partition_reducibles(
        job.manifold, job.gauge, job.data,
        max_level=_opt(args, job, "max_level", DEFAULT_MAX_LEVEL),
        keep_zero_sw=getattr(args, "keep_zero_sw", False) or job.options.get("keep_zero_sw", False),
    )
    if enum.above_max_level:
        raise UnsupportedLevelError([r.level for r in enum.above_max_level])
    return enum.reducibles


def cmd_pair(args):
    job = _read_job(args.config)
    g = _need_gauge(job)
    report = _validated(job, "pair", args)
    data = _reducibles_for(job, args)
    z = _monomial(args, job)
    result = link_sum(job.manifold, g, data, z)
    obj = {"schema": io.SCHEMA, **io.pairing_to_dict(result)}
    return _with_findings(obj, report, args, job), _reducible_table(obj["per_reducible"])


def _series_value(job, args, via, h, d):
    m, g = job.manifold, _need_gauge(job)
    w = _resolve_beta(m, args.w) if getattr(args, "w", None) else g.c1E
    if via == "witten":
        spec = witten_series(m, w, job.data)
    else:
        spec = km_series(w, [(datum.K, datum.sw) for datum in job.data])
    return series_invariant(spec, m, h, d)


def _series_argument(job, args):
    """(h, d) for a series evaluation on h^d."""
    m = job.manifold
    if getattr(args, "h", None):
        h = _resolve_beta(m, args.h)
        d = args.d if args.d is not None else 1
        return h, d
    z = _monomial(args, job)
    if z.m:
        raise InputError("series paths do not model point-class insertions; use m = 0")
    if not z.betas:
        return m.lattice.zero(), 0
    if any(b != z.betas[0] for b in z.betas):
        raise InputError("series paths evaluate powers h^d of a single class")
    return z.betas[0], len(z.betas)


def cmd_donaldson(args):
    job = _read_job(args.config)
    report = _validated(job, args.via, args)
    if args.via in ("reduction", "simple-type"):
        data = _reducibles_for(job, args)
        z = _monomial(args, job)
        fn = reduction_donaldson if args.via == "reduction" else simple_type_donaldson
        result = fn(job.manifold, job.gauge, data, z)
        obj = {"schema": io.SCHEMA, "via": args.via, **io.pairing_to_dict(result)}
        table = _reducible_table(obj["per_reducible"])
    else:
        h, d = _series_argument(job, args)
        value = _series_value(job, args, args.via, h, d)
        obj = {"schema": io.SCHEMA, "via": args.via, "d": d, "h": list(h.coords), "value": format_rational(value)}
        table = None
    return _with_findings(obj, report, args, job), table


def _ratio(a, b):
    return None if b == 0 else format_rational(Fraction(a) / b)


def _compare_row(job, args):
    data = _reducibles_for(job, args)
    z = _monomial(args, job)
    red = reduction_donaldson(job.manifold, job.gauge, data, z).value
    h, d = (z.betas[0], len(z.betas)) if z.betas else (job.manifold.lattice.zero(), 0)
    ser = _series_value(job, args, args.series, h, d)
    return red, ser


def cmd_compare(args):
    rows = []
    if args.config:
        job = _read_job(args.config)
        _validated(job, "reduction", args)
        red, ser = _compare_row(job, args)
        rows.append({"n": None, "reduction": format_rational(red), "series": format_rational(ser), "ratio": _ratio(red, ser)})
    else:
        if args.family != "elliptic":
            raise InputError(f"unknown family {args.family!r}")
        match = re.fullmatch(r"(\d+)\.\.(\d+)", args.n_range or "")
        if not match:
            raise InputError("--n-range must look like A..B")
        lo, hi = int(match.group(1)), int(match.group(2))
        if lo < 2 or hi < lo:
            raise InputError("--n-range needs 2 <= A <= B")
        for n in range(lo, hi + 1):
            m, g, data = elliptic_setup(n, args.aux_rank)
            job = io.JobConfig(m, g, data, monomial={"betas": ["s"] * (n - 2), "m": 0})
            _validated(job, "reduction", args)
            red, ser = _compare_row(job, args)
            rows.append({"n": n, "reduction": format_rational(red), "series": format_rational(ser), "ratio": _ratio(red, ser)})
    ratios = {r["ratio"] for r in rows}
    obj = {
        "schema": io.SCHEMA,
        "series": args.series,
        "rows": rows,
        "ratio_constant": ratios.pop() if len(ratios) == 1 else None,
    }
    cols = ["n", "reduction", "series", "ratio"]
    return obj, (cols, [[r[c] for c in cols] for r in rows])


def cmd_jacobi(args):
    if args.n < 0:
        raise InputError("--n must be non-negative")
    value = jacobi(args.a, args.b, args.n, parse_rational(args.x))
    return {"schema": io.SCHEMA, "value": format_rational(value)}, None


def build_parser():
    parser = _Parser(prog="mrk", description="Donaldson invariants from Seiberg-Witten data.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, config=True):
        if config:
            p.add_argument("--config", default="-", help="job JSON file, '-' for stdin")
        p.add_argument("--format", choices=["json", "tsv"], default="json")
        p.add_argument("--validate", action="store_true", help="include validation findings")

    def monomial_args(p):
        p.add_argument("--z", help='monomial over labels, e.g. "s^2 x^1"')
        p.add_argument("--beta", action="append", help="class as comma-separated coordinates (repeatable)")
        p.add_argument("--m", type=int, help="extra power of the point class x")
        p.add_argument("--n-c1", dest="n_c1", type=int, help="power of mu_c1(x); default d_a + n_a - 1 - n_p1")
        p.add_argument("--max-level", dest="max_level", type=int)
        p.add_argument("--keep-zero-sw", dest="keep_zero_sw", action="store_true")

    p = sub.add_parser("catalog", help="emit a catalogued manifold with SW data and gauge setup")
    p.add_argument("family", choices=["elliptic"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--aux-rank", dest="aux_rank", type=int, default=4)
    p.add_argument("--f-square", dest="f_square", type=int)
    common(p, config=False)
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("blowup", help="blow up the manifold of a job file")
    p.add_argument("--times", type=int, default=1)
    common(p)
    p.set_defaults(func=cmd_blowup)

    p = sub.add_parser("dims", help="expected dimensions and indices")
    common(p)
    p.set_defaults(func=cmd_dims)

    p = sub.add_parser("reducibles", help="enumerate reducibles and their levels")
    p.add_argument("--max-level", dest="max_level", type=int)
    p.add_argument("--keep-zero-sw", dest="keep_zero_sw", action="store_true")
    common(p)
    p.set_defaults(func=cmd_reducibles)

    p = sub.add_parser("pair", help="signed link pairings of top-level reducibles")
    monomial_args(p)
    common(p)
    p.set_defaults(func=cmd_pair)

    p = sub.add_parser("donaldson", help="Donaldson invariant by one computation path")
    p.add_argument("--via", choices=["reduction", "simple-type", "km", "witten"], default="reduction")
    p.add_argument("--h", help="series paths: label or coordinates of h")
    p.add_argument("--d", type=int, help="series paths: degree d")
    p.add_argument("--w", help="series paths: w (default c1(E))")
    monomial_args(p)
    common(p)
    p.set_defaults(func=cmd_donaldson)

    p = sub.add_parser("compare", help="reduction path against a series path")
    p.add_argument("--family", default="elliptic")
    p.add_argument("--n-range", dest="n_range")
    p.add_argument("--aux-rank", dest="aux_rank", type=int, default=4)
    p.add_argument("--series", choices=["witten", "km"], default="witten")
    p.add_argument("--config")
    monomial_args(p)
    p.add_argument("--format", choices=["json", "tsv"], default="json")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("jacobi", help="exact Jacobi polynomial value")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--x", default="0")
    p.add_argument("--format", choices=["json", "tsv"], default="json")
    p.set_defaults(func=cmd_jacobi)
    return parser


def main(argv=None, stdout=None, stderr=None):
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        obj, table = args.func(args)
    except MRKError as exc:
        err = {"code": exc.code, "message": str(exc)}
        if isinstance(exc, ValidationFailed):
            err["findings"] = [io.finding_to_dict(f) for f in exc.report.findings]
        stderr.write(io.dumps({"schema": io.SCHEMA, "error": err}) + "\n")
        return exc.exit_status
    _emit(obj, table, args.format, stdout)
    return 0


if __name__ == "__main__":
    sys.exit(main())
