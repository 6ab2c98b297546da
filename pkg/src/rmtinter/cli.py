"""Command-line front end.

Subcommands
-----------
verify          run registered identity checks
gap             gap probabilities or generating function of an interval
sff             spectral form factor of GUE_N or LUE_N
spectrum-power  bulk COE power spectrum
sample          ordered samples of an ensemble

Tables go to stdout as CSV; ``verify --json`` also writes the reports.
Exit status is 0 when every requested check passes, 1 when a check fails
and 2 on usage errors.
"""

import argparse
import csv
import json
import sys

import numpy as np

from .ensembles import EnsembleSpec, sample_batch
from .formfactor import sff_gue, sff_lue
from .gap import coe_poly, cse_poly, cue_poly, genfn_poly, orthogonal_group_poly
from .identities import REGISTRY, run_identity
from .scaling import power_spectrum_coe
from .weights import WeightSpec

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
GAP_ENSEMBLES = ("cue", "coe", "cse", "gue", "lue", "jue", "o+", "o-")
SAMPLE_ENSEMBLES = ("cue", "coe", "cse", "goe", "gue", "gse", "lue", "jue")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _fmt(v):
    if v is None:
        return ""
    if isinstance(v, (bool, np.bool_)):
        return "true" if v else "false"
    if isinstance(v, (float, np.floating)):
        return format(float(v), ".17g")
    return str(v)


def _write_csv(header, rows, out=None):
    w = csv.writer(out or sys.stdout, lineterminator="\n")
    w.writerow(header)
    for r in rows:
        w.writerow([_fmt(v) for v in r])


def _pair(text):
    try:
        a, b = (float(v) for v in text.split(","))
    except ValueError:
        raise UsageError(f"expected two comma-separated numbers, got {text!r}") from None
    return a, b


def _floats(text):
    try:
        return [float(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise UsageError(f"expected comma-separated numbers, got {text!r}") from None


def _param(text):
    key, sep, value = text.partition("=")
    if not sep:
        raise UsageError(f"parameter must look like key=value, got {text!r}")
    try:
        return key, json.loads(value)
    except json.JSONDecodeError:
        return key, value


# ---------------------------------------------------------------------------
# verify


def _summary_row(rep, timing):
    tests = rep.tests or []
    min_p = min((t["p_value"] for t in tests), default=None)
    return [rep.identity_id, rep.method, rep.passed, rep.abs_err, rep.rel_err, min_p,
            rep.p_floor, rep.runtime if timing else None]


def cmd_verify(args):
    if args.identity == "all":
        ids = sorted(REGISTRY)
        if args.param:
            raise UsageError("--param needs a single identity")
    elif args.identity in REGISTRY:
        ids = [args.identity]
    else:
        raise UsageError(f"unknown identity {args.identity!r}")
    reports = []
    for i in ids:
        params = dict(_param(p) for p in args.param)
        if args.samples is not None and "samples" in REGISTRY[i].defaults:
            params["samples"] = args.samples
        try:
            reports.append(run_identity(i, params, args.seed))
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    _write_csv(["identity_id", "method", "pass", "abs_err", "rel_err", "min_p", "p_floor",
                "runtime"], [_summary_row(r, args.timing) for r in reports])
    if args.json:
        with open(args.json, "w") as fh:
            json.dump([r.to_dict(args.timing) for r in reports], fh, indent=1, sort_keys=True)
            fh.write("\n")
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


# ---------------------------------------------------------------------------
# gap


def gap_poly(ensemble, n, interval, alpha=0.0, b=0.0):
    """Count law E(k; J) for the ``gap`` subcommand.

    Circular ensembles depend only on the arc length b - a; the orthogonal
    groups (free angles in (0, pi)) need a = 0.
    """
    lo, hi = interval
    if not hi > lo:
        raise UsageError("interval must satisfy a < b")
    if ensemble == "cue":
        return cue_poly(n, hi - lo)
    if ensemble == "coe":
        return coe_poly(n, hi - lo)
    if ensemble == "cse":
        return cse_poly(n, 0.5 * (hi - lo))
    if ensemble in ("o+", "o-"):
        if lo != 0:
            raise UsageError("orthogonal-group intervals start at 0")
        return orthogonal_group_poly(n, 1 if ensemble == "o+" else -1, hi)
    if ensemble == "gue":
        return genfn_poly(WeightSpec.gaussian(2), n, interval)
    if ensemble == "lue":
        return genfn_poly(WeightSpec.laguerre(alpha), n, interval)
    if ensemble == "jue":
        return genfn_poly(WeightSpec.jacobi(alpha, b), n, interval)
    raise UsageError(f"gap is not available for {ensemble!r}")


def cmd_gap(args):
    try:
        poly = gap_poly(args.ensemble, args.n, _pair(args.interval), args.alpha, args.b)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.counts:
        _write_csv(["k", "probability"], enumerate(poly.coefficients))
    else:
        xi = _floats(args.xi)
        _write_csv(["xi", "genfn"], [(x, float(np.real(poly(x)))) for x in xi])
    return EXIT_OK


# ---------------------------------------------------------------------------
# sff, spectrum-power, sample


def cmd_sff(args):
    if args.steps < 1 or args.kmax < 0:
        raise UsageError("need --steps >= 1 and --kmax >= 0")
    ks = np.linspace(0.0, args.kmax, args.steps + 1)
    try:
        if args.ensemble == "gue":
            rows = [(k, sff_gue(args.n, k)) for k in ks]
        else:
            rows = [(k, sff_lue(args.n, args.alpha, k)) for k in ks]
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _write_csv(["k", "S"], rows)
    return EXIT_OK


def cmd_spectrum_power(args):
    omega = _floats(args.omega_grid)
    if not omega:
        raise UsageError("empty omega grid")
    try:
        ps = power_spectrum_coe(omega, s_max=args.s_max)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _write_csv(["omega", "S", "est_error"], zip(ps.omega, ps.value, ps.est_error))
    return EXIT_OK


def _sample_spec(args):
    e, n = args.ensemble, args.n
    if e in ("cue", "coe", "cse", "goe", "gue", "gse"):
        return getattr(EnsembleSpec, e)(n)
    if e == "lue":
        return EnsembleSpec.lue(n, args.alpha)
    return EnsembleSpec.jue(n, args.alpha, args.b)


def cmd_sample(args):
    if args.count < 1:
        raise UsageError("--count must be positive")
    try:
        spec = _sample_spec(args)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    x = sample_batch(spec, np.random.default_rng(args.seed), args.count)
    _write_csv([f"x{j + 1}" for j in range(x.shape[1])], x)
    return EXIT_OK


# ---------------------------------------------------------------------------


def build_parser():
    p = _Parser(prog="rmtinter", description="Inter-relations between random matrix ensembles.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    v = sub.add_parser("verify", help="run identity checks")
    v.add_argument("identity", help="identity id or 'all'")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--samples", type=int, default=None)
    v.add_argument("--json", default=None, help="write the reports to this file")
    v.add_argument("--timing", action="store_true", help="record runtimes (not reproducible)")
    v.add_argument("--param", action="append", default=[], metavar="KEY=VALUE",
                   help="override a parameter; values are parsed as JSON")
    v.set_defaults(func=cmd_verify)

    g = sub.add_parser("gap", help="gap probabilities of an interval")
    g.add_argument("--ensemble", required=True, choices=GAP_ENSEMBLES)
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--interval", required=True, help="a,b (write --interval=a,b when a < 0)")
    g.add_argument("--alpha", type=float, default=0.0, help="LUE alpha or JUE a")
    g.add_argument("--b", type=float, default=0.0, help="JUE b")
    mode = g.add_mutually_exclusive_group()
    mode.add_argument("--genfn", action="store_true", help="generating function (default)")
    mode.add_argument("--counts", action="store_true", help="E(k; J) for k = 0..N")
    g.add_argument("--xi", default="1", help="comma-separated xi values for --genfn")
    g.set_defaults(func=cmd_gap)

    s = sub.add_parser("sff", help="spectral form factor on a k grid")
    s.add_argument("--ensemble", required=True, choices=("gue", "lue"))
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--alpha", type=float, default=0.0)
    s.add_argument("--kmax", type=float, required=True)
    s.add_argument("--steps", type=int, default=50)
    s.set_defaults(func=cmd_sff)

    w = sub.add_parser("spectrum-power", help="bulk COE power spectrum")
    w.add_argument("--omega-grid", required=True, help="comma-separated values in (0, pi]")
    w.add_argument("--s-max", type=float, default=None)
    w.set_defaults(func=cmd_spectrum_power)

    m = sub.add_parser("sample", help="ordered samples of an ensemble")
    m.add_argument("--ensemble", required=True, choices=SAMPLE_ENSEMBLES)
    m.add_argument("--n", type=int, required=True)
    m.add_argument("--count", type=int, default=10)
    m.add_argument("--seed", type=int, default=0)
    m.add_argument("--alpha", type=float, default=0.0, help="LUE alpha or JUE a (integer)")
    m.add_argument("--b", type=float, default=0.0, help="JUE b (integer)")
    m.set_defaults(func=cmd_sample)
    return p


def main(argv=None):
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
