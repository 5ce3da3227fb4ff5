"""Batch front end: experiment suites with CSV/JSON/SVG artifacts.

Every subcommand is deterministic for a fixed configuration (seeds pin all
randomness, floats are serialized canonically) and follows one exit-code
contract: 0 when every check passes, 1 when a check fails (a witness file
is written next to the other artifacts), 2 for malformed input.
"""

import argparse
import math
import os
import sys

import numpy as np

from . import codecs
from .config import default_tol
from .causality import NOT_ACHRONAL, graph_is_achronal, set_causal_class
from .cosmotime import cosmological_time_estimate, probe_exit_lengths
from .figures import render_domain_svg
from .fuchsian import (expansion_ratio, fuchsian_limit_set,
                       quasi_fuchsian_certificate, validate_rep)
from .invisible import (AchronalSample, conformal_probe, contains,
                        envelope_grid, INSIDE)
from .models import ConformalAdsPoint, ads_to_conformal, conformal_to_ads
from .quadratic import GeometryError, ray
from .randoms import random_ads_point, random_cone_tangent, random_h_tangent
from .sampling import hemisphere_grid


def _outdir(args):
    os.makedirs(args.out, exist_ok=True)
    return args.out


def _path(args, name):
    return os.path.join(_outdir(args), name)


def _write_witness(args, name, doc):
    codecs.write_json(_path(args, name), doc)


def cmd_roundtrip(args):
    rng = np.random.default_rng(args.seed)
    rows = []
    worst = 0.0
    for i in range(args.samples):
        p = random_ads_point(rng, args.n)
        c = ads_to_conformal(p)
        back = conformal_to_ads(c)
        res = float(np.abs(back - p).max())
        c2 = ads_to_conformal(back)
        res = max(res, abs(c2.theta - c.theta),
                  float(np.abs(c2.disk - c.disk).max()))
        rows.append((i, res))
        worst = max(worst, res)
    codecs.write_csv(_path(args, "roundtrip.csv"),
                     ["index", "residual"], rows)
    ok = worst <= args.tol
    codecs.write_json(_path(args, "roundtrip_summary.json"),
                      {"n": args.n, "samples": args.samples,
                       "max_residual": worst, "pass": ok})
    if not ok:
        _write_witness(args, "roundtrip_witness.json",
                       {"max_residual": worst, "tol": args.tol})
    return 0 if ok else 1


def cmd_causality_class(args):
    sample = codecs.read_limit_set(args.limit_set, require_achronal=False)
    check = graph_is_achronal(sample, tol=args.tol)
    cls = set_causal_class(sample.null_rays(), args.tol)
    report = {
        "graph_achronal": check.ok,
        "set_class": cls.value,
        "witness": (codecs.witness_to_doc(cls.witness_pair,
                                          cls.witness_inner)
                    if cls.witness_pair else None),
    }
    codecs.write_json(_path(args, "causality_class.json"), report)
    ok = check.ok and cls.value != NOT_ACHRONAL
    if not ok:
        _write_witness(args, "causality_witness.json", report)
    return 0 if ok else 1


def cmd_domain(args):
    sample = codecs.read_limit_set(args.limit_set)
    probes = hemisphere_grid(sample.n, args.grid)
    lo, hi = envelope_grid(sample, probes)
    rows = []
    agree = True
    width = 0.0
    for k in range(probes.shape[0]):
        mid = 0.5 * (lo[k] + hi[k])
        probe = ConformalAdsPoint(mid, probes[k], 0)
        verdict = contains(sample, probe)
        width = max(width, hi[k] - lo[k])
        margin = min(mid - lo[k], hi[k] - mid)
        if margin > 1e-6:
            point = ray(conformal_to_ads(probe))
            klein = bool(np.all(sample.inner_with(point.rep) < -1e-8))
            if klein != (verdict == INSIDE):
                agree = False
        rows.append((mid, *probes[k], lo[k], hi[k], verdict))
    header = (["theta"] + [f"disk{i}" for i in range(probes.shape[1])]
              + ["fminus", "fplus", "verdict"])
    codecs.write_csv(_path(args, "domain.csv"), header, rows)
    ok = width <= math.pi + args.tol and agree
    codecs.write_json(_path(args, "domain_summary.json"),
                      {"probes": len(rows), "max_width": width,
                       "cross_model_agreement": agree, "pass": ok})
    if sample.n == 2:
        with open(_path(args, "domain.svg"), "w", encoding="utf-8") as fh:
            fh.write(render_domain_svg(sample))
    if not ok:
        _write_witness(args, "domain_witness.json",
                       {"max_width": width, "agreement": agree})
    return 0 if ok else 1


def cmd_cosmotime(args):
    sample = codecs.read_limit_set(args.limit_set)
    if args.probe:
        probe = codecs.conformal_from_doc(codecs.read_json(args.probe))
    else:
        pole = np.zeros(sample.n + 1)
        pole[0] = 1.0
        lo, hi = envelope_grid(sample, pole[None, :])
        probe = ConformalAdsPoint(0.5 * float(lo[0] + hi[0]), pole, 0)
    p = conformal_to_ads(probe)
    dirs, lengths = probe_exit_lengths(p, sample, m=args.samples,
                                       seed=args.seed)
    rows = [(k, *dirs[k], lengths[k]) for k in range(dirs.shape[0])]
    header = (["probe_index"]
              + [f"direction{i}" for i in range(dirs.shape[1])]
              + ["exit_length"])
    codecs.write_csv(_path(args, "cosmotime.csv"), header, rows)
    best = int(np.argmax(lengths))
    tau = float(lengths[best])
    ok = 0.0 < tau <= math.pi + args.tol
    codecs.write_json(_path(args, "cosmotime_summary.json"),
                      {"tau_hat": tau, "argmax_dir": dirs[best].tolist(),
                       "pass": ok})
    if not ok:
        _write_witness(args, "cosmotime_witness.json",
                       {"tau_hat": tau, "tol": args.tol})
    return 0 if ok else 1


def cmd_expansion(args):
    rng = np.random.default_rng(args.seed)
    target_plus = math.exp(2.0 * args.t)
    target_minus = math.exp(-2.0 * args.t)
    rows = []
    worst = 0.0
    for i in range(args.samples):
        w0 = random_h_tangent(rng, args.n)
        wplus = random_cone_tangent(rng, w0, "plus")
        wminus = random_cone_tangent(rng, w0, "minus")
        rp = expansion_ratio(w0, args.t, wplus, endpoint="plus")
        rm = expansion_ratio(w0, args.t, wminus, endpoint="minus")
        ep = abs(rp - target_plus) / target_plus
        em = abs(rm - target_minus) / target_minus
        rows.append((i, rp, ep, rm, em))
        worst = max(worst, ep, em)
    codecs.write_csv(_path(args, "expansion.csv"),
                     ["index", "ratio_plus", "relerr_plus",
                      "ratio_minus", "relerr_minus"], rows)
    ok = worst <= args.tol
    codecs.write_json(_path(args, "expansion_summary.json"),
                      {"n": args.n, "t": args.t, "samples": args.samples,
                       "max_relative_error": worst, "pass": ok})
    if not ok:
        _write_witness(args, "expansion_witness.json",
                       {"max_relative_error": worst, "tol": args.tol})
    return 0 if ok else 1


def cmd_certify(args):
    rep = codecs.read_rep(args.rep)
    if args.limit_set:
        sample = codecs.read_limit_set(args.limit_set)
    else:
        validate_rep(rep)
        sample = fuchsian_limit_set(rep, args.samples)
    report = quasi_fuchsian_certificate(rep, sample)
    codecs.write_json(_path(args, "certify_report.json"), report.to_dict())
    if not report.passed:
        _write_witness(args, "certify_witness.json", report.witnesses)
    return 0 if report.passed else 1


def build_parser():
    parser = argparse.ArgumentParser(
        prog="adsgeo",
        description="anti-de Sitter geometry experiment suites")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, **defaults):
        p.add_argument("--n", type=int, default=defaults.get("n", 2))
        p.add_argument("--seed", type=int, default=defaults.get("seed", 1))
        p.add_argument("--samples", type=int,
                       default=defaults.get("samples", 100))
        p.add_argument("--tol", type=float,
                       default=defaults.get("tol", default_tol()))
        p.add_argument("--out", default=".")

    p = sub.add_parser("roundtrip", help="conformal model round trips")
    common(p, samples=10000)
    p.set_defaults(func=cmd_roundtrip)

    p = sub.add_parser("causality-class",
                       help="classify a sampled limit set")
    common(p)
    p.add_argument("--limit-set", required=True)
    p.set_defaults(func=cmd_causality_class)

    p = sub.add_parser("domain", help="envelopes and membership on a grid")
    common(p)
    p.add_argument("--limit-set", required=True)
    p.add_argument("--grid", type=int, default=64)
    p.set_defaults(func=cmd_domain)

    p = sub.add_parser("cosmotime", help="cosmological time estimate")
    common(p, samples=256, seed=0)
    p.add_argument("--limit-set", required=True)
    p.add_argument("--probe", default=None,
                   help="JSON conformal point to probe (default: band "
                        "midpoint above the pole)")
    p.set_defaults(func=cmd_cosmotime)

    p = sub.add_parser("expansion", help="boundary-metric expansion law")
    common(p, samples=100, seed=7, tol=1e-8)
    p.add_argument("--t", type=float, default=1.0)
    p.set_defaults(func=cmd_expansion)

    p = sub.add_parser("certify", help="quasi-Fuchsian certificate")
    common(p, samples=256)
    p.add_argument("--rep", required=True)
    p.add_argument("--limit-set", default=None)
    p.set_defaults(func=cmd_certify)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (codecs.SchemaError, GeometryError, OSError) as exc:
        print(f"adsgeo {args.command}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
