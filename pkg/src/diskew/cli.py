"""Command-line interface: subcommands over an algebra spec or preset.

Every command prints one JSON report to standard output.  Reports are
deterministic: field order is fixed and all values are exact, so repeated
runs on the same inputs are byte-identical.  Exit code 0 means the
analysis completed (including NotSimple verdicts); nonzero is reserved
for errors.
"""

import argparse
import json
import random
import sys

from . import dpr as dpr_mod
from . import gwa as gwa_mod
from . import padic
from .endos import identity_endo
from .errors import CommandUnknown, DiskewError, SpecInvalid
from .parser import parse_expression, render
from .rankn import verify_rankn
from .simplicity import DprBounds, dpr_simple, gwa_simple
from .specfile import PRESETS, load_preset, load_spec

_SEED = 20240811


def _report(command, inputs, results):
    return {"command": command, "inputs": inputs, "results": results}


def _checks_dict(validation):
    return {
        "ok": validation.ok,
        "checks": [
            {"name": c.name, "ok": c.ok, "witness": c.witness}
            for c in validation.checks
        ],
    }


def _simplicity_dict(report):
    return {
        "verdict": report.verdict,
        "conditions": [
            {"id": c.cid, "status": c.status, "witness": c.witness}
            for c in report.condition_results
        ],
        "witness": list(report.witness) if report.witness else None,
        "bounds": report.bounds_used,
    }


def _algebra(spec, prefer=None):
    if prefer == "gwa" and spec.gwa is not None:
        return spec.gwa
    if prefer == "dpr" and spec.dpr is not None:
        return spec.dpr
    if spec.dpr is not None:
        return spec.dpr
    if spec.gwa is not None:
        return spec.gwa
    raise SpecInvalid("spec has no gwa or dpr section")


def run_command(spec, command, args):
    """Execute one subcommand against a parsed spec; returns the report."""
    rng = random.Random(_SEED)

    if command == "verify":
        results = {}
        if spec.gwa is not None:
            results["gwa"] = _checks_dict(gwa_mod.verify_gwa_data(spec.gwa, rng))
        if spec.dpr is not None:
            results["dpr"] = _checks_dict(dpr_mod.verify_dpr_data(spec.dpr, rng))
        if spec.rankn is not None:
            results["rankn"] = _checks_dict(verify_rankn(spec.rankn, rng))
        return _report("verify", {"spec": spec.name}, results)

    if command == "mul":
        alg = _algebra(spec, args.target)
        u = parse_expression(args.lhs, alg)
        v = parse_expression(args.rhs, alg)
        return _report(
            "mul",
            {"spec": spec.name, "lhs": args.lhs, "rhs": args.rhs},
            {"product": render(u * v)},
        )

    if command == "normal-form":
        alg = _algebra(spec, args.target)
        value = alg.one()
        for token in args.word:
            value = value * parse_expression(token, alg)
        return _report(
            "normal-form",
            {"spec": spec.name, "word": list(args.word)},
            {"normal_form": render(value)},
        )

    if command == "structure-constants":
        if spec.gwa is None:
            raise SpecInvalid("structure constants need a gwa section")
        n = args.range
        table = []
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                table.append(
                    {
                        "n": i,
                        "m": -j,
                        "value": render(spec.gwa.structure_constant(i, -j)),
                    }
                )
                table.append(
                    {
                        "n": -i,
                        "m": j,
                        "value": render(spec.gwa.structure_constant(-i, j)),
                    }
                )
        return _report(
            "structure-constants",
            {"spec": spec.name, "range": n},
            {"table": table},
        )

    if command == "to-gwa":
        if spec.dpr is None:
            raise SpecInvalid("to-gwa needs a dpr section")
        image = dpr_mod.to_gwa(spec.dpr)
        sigma_h = image.gwa.sigma(image.h())
        tau_h = image.gwa.tau(image.h())
        return _report(
            "to-gwa",
            {"spec": spec.name},
            {
                "a": render(image.gwa.a),
                "sigma_h": render(sigma_h),
                "tau_h": render(tau_h),
            },
        )

    if command == "roundtrip":
        if spec.dpr is None:
            raise SpecInvalid("roundtrip needs a dpr section")
        ok, witness = dpr_mod.roundtrip_check(spec.dpr, rng, args.samples)
        return _report(
            "roundtrip",
            {"spec": spec.name, "samples": args.samples},
            {"ok": ok, "witness": render(witness[0]) if witness else None},
        )

    if command == "bi-table":
        if spec.dpr is None:
            raise SpecInvalid("bi-table needs a dpr section")
        rows = [
            {"i": i, "a_i": render(a_i), "b_i": render(b_i)}
            for i, (a_i, b_i) in enumerate(
                dpr_mod.sigma_power_coeffs(spec.dpr, args.max), start=1
            )
        ]
        return _report(
            "bi-table", {"spec": spec.name, "max": args.max}, {"rows": rows}
        )

    if command == "alpha-solve":
        if spec.dpr is None:
            raise SpecInvalid("alpha-solve needs a dpr section")
        alpha = dpr_mod.alpha_solver(spec.dpr)
        return _report(
            "alpha-solve",
            {"spec": spec.name},
            {"alpha": render(alpha) if alpha is not None else None},
        )

    if command == "normal-element":
        if spec.dpr is None:
            raise SpecInvalid("normal-element needs a dpr section")
        alpha = dpr_mod.alpha_solver(spec.dpr)
        if alpha is None:
            return _report(
                "normal-element", {"spec": spec.name}, {"exists": False}
            )
        C, checks = dpr_mod.normal_element_from_alpha(spec.dpr, alpha)
        return _report(
            "normal-element",
            {"spec": spec.name},
            {
                "exists": True,
                "alpha": render(alpha),
                "element": render(C),
                "checks": _checks_dict(checks),
            },
        )

    if command == "simplicity":
        results = {}
        if spec.gwa is not None:
            results["gwa"] = _simplicity_dict(gwa_simple(spec.gwa, args.bound))
        if spec.dpr is not None:
            results["dpr"] = _simplicity_dict(
                dpr_simple(spec.dpr, DprBounds(bi=args.bound))
            )
        if not results:
            raise SpecInvalid("simplicity needs a gwa or dpr section")
        return _report(
            "simplicity", {"spec": spec.name, "bound": args.bound}, results
        )

    if command == "iprime":
        if spec.gwa is None:
            raise SpecInvalid("iprime needs a gwa section")
        gen = parse_expression(args.ideal, spec.ring)
        out = gwa_mod.iprime_step(spec.gwa, [gen], args.depth)
        return _report(
            "iprime",
            {"spec": spec.name, "ideal": args.ideal, "depth": args.depth},
            {"generators": [render(g) for g in out]},
        )

    if command == "involution-check":
        if spec.gwa is None:
            raise SpecInvalid("involution-check needs a gwa section")
        star = identity_endo(spec.ring)
        checks = gwa_mod.check_involution_conditions(spec.gwa, star)
        return _report(
            "involution-check", {"spec": spec.name}, _checks_dict(checks)
        )

    if command == "lucas":
        value = padic.lucas_binomial(args.n, args.m, args.p)
        return _report(
            "lucas", {"n": args.n, "m": args.m, "p": args.p}, {"value": value}
        )

    if command == "neighbour":
        value = padic.p_neighbour(args.n, args.p)
        return _report(
            "neighbour", {"n": args.n, "p": args.p}, {"value": value}
        )

    raise CommandUnknown(command)


def _build_argparser():
    parser = argparse.ArgumentParser(
        prog="diskew",
        description="Exact arithmetic and simplicity analysis for graded "
        "algebras and their defect presentations.",
    )
    parser.add_argument("--spec", help="path to an algebra spec file (TOML)")
    parser.add_argument(
        "--preset", choices=sorted(PRESETS), help="bundled algebra preset"
    )
    parser.add_argument(
        "--p", type=int, default=5, help="prime for Fp presets (default 5)"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("verify")

    p_mul = sub.add_parser("mul")
    p_mul.add_argument("lhs")
    p_mul.add_argument("rhs")
    p_mul.add_argument("--target", choices=["gwa", "dpr"])

    p_nf = sub.add_parser("normal-form")
    p_nf.add_argument("word", nargs="+")
    p_nf.add_argument("--target", choices=["gwa", "dpr"])

    p_sc = sub.add_parser("structure-constants")
    p_sc.add_argument("--range", type=int, default=3)

    sub.add_parser("to-gwa")

    p_rt = sub.add_parser("roundtrip")
    p_rt.add_argument("--samples", type=int, default=100)

    p_bi = sub.add_parser("bi-table")
    p_bi.add_argument("--max", type=int, default=5)

    sub.add_parser("alpha-solve")
    sub.add_parser("normal-element")

    p_si = sub.add_parser("simplicity")
    p_si.add_argument("--bound", type=int, default=25)

    p_ip = sub.add_parser("iprime")
    p_ip.add_argument("--ideal", required=True)
    p_ip.add_argument("--depth", type=int, default=1)

    sub.add_parser("involution-check")

    p_lu = sub.add_parser("lucas")
    p_lu.add_argument("n", type=int)
    p_lu.add_argument("m", type=int)
    p_lu.add_argument("p", type=int)

    p_ne = sub.add_parser("neighbour")
    p_ne.add_argument("n", type=int)
    p_ne.add_argument("p", type=int)

    return parser


def main(argv=None):
    parser = _build_argparser()
    args = parser.parse_args(argv)
    try:
        spec = None
        if args.command not in ("lucas", "neighbour"):
            if args.spec:
                spec = load_spec(args.spec)
            elif args.preset:
                spec = load_preset(args.preset, p=args.p)
            else:
                parser.error("either --spec or --preset is required")
        report = run_command(spec, args.command, args)
    except DiskewError as exc:
        print(
            json.dumps({"error": type(exc).__name__, "message": str(exc)}),
            file=sys.stderr,
        )
        return 2
    print(json.dumps(report, indent=2))
    return 0


if __name__ == "__main__":
    sys.exit(main())
