"""Command-line front end.

Subcommands:
  spectrum     base eigenvalues and the eigenvalue lattice as CSV (+ SVG scatter)
  gap          spectral gaps and the zero-simplicity/compact-resolvent flags
  verify       the full numeric verification campaign with a pass/fail summary
  standardize  stationary Gaussian state, Williamson/Bogoliubov data, drifts
  dual         parameters of the dual model, in config format

Exit codes: 0 all good, 1 a verification check failed, 2 invalid model or
config.  GQMS_SEED fixes the seed of the random-model property sweeps.
"""

import argparse
import sys

from gqms import checks, spectrum
from gqms.config import (
    DEFAULT_MAX_DEGREE,
    DEFAULT_N_MAX,
    DEFAULT_S,
    ConfigError,
    load_model,
    format_model,
)
from gqms.model import dual_model, require_diagonal, validate
from gqms.standardize import stationary_gaussian, standardized_drifts

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_BAD_CONFIG = 2


def _write(path, text):
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def lattice_csv(pred):
    lines = ["re,im,n,m,multiplicity"]
    for p in pred.points:
        lines.append(f"{p.value.real:.12g},{p.value.imag:.12g},{p.n},{p.m},{p.multiplicity}")
    return "\n".join(lines) + "\n"


def lattice_svg(pred, width=480, height=360):
    """Static scatter of the lattice in the complex plane (axes through 0)."""
    values = [p.value for p in pred.points]
    re = [v.real for v in values]
    im = [v.imag for v in values]
    lo_x, hi_x = min(re + [0.0]) - 0.5, max(re + [0.0]) + 0.5
    lo_y, hi_y = min(im + [0.0]) - 0.5, max(im + [0.0]) + 0.5

    def sx(x):
        return 20 + (x - lo_x) / (hi_x - lo_x) * (width - 40)

    def sy(y):
        return height - 20 - (y - lo_y) / (hi_y - lo_y) * (height - 40)

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<line x1="{sx(lo_x):.2f}" y1="{sy(0):.2f}" x2="{sx(hi_x):.2f}" y2="{sy(0):.2f}" '
        'stroke="#888" stroke-width="1"/>',
        f'<line x1="{sx(0):.2f}" y1="{sy(lo_y):.2f}" x2="{sx(0):.2f}" y2="{sy(hi_y):.2f}" '
        'stroke="#888" stroke-width="1"/>',
        f'<text x="{width - 18}" y="{sy(0) - 6:.2f}" font-size="12">Re</text>',
        f'<text x="{sx(0) + 6:.2f}" y="14" font-size="12">Im</text>',
    ]
    for p in pred.points:
        parts.append(
            f'<circle cx="{sx(p.value.real):.2f}" cy="{sy(p.value.imag):.2f}" '
            'r="3" fill="black"/>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def cmd_spectrum(args):
    model = load_model(args.config)
    lam, mu, defective = spectrum.base_eigenvalues(model)
    pred = spectrum.predicted_lattice(lam, mu, defective, args.max_degree)
    print(f"base eigenvalues: {lam:.12g} {mu:.12g} defective={defective}")
    if not pred.complete:
        print("note: gapless model, lattice lists eigenvalues only")
    _write(args.out, lattice_csv(pred))
    if args.svg:
        _write(args.svg, lattice_svg(pred))
    return EXIT_OK


def cmd_gap(args):
    model = load_model(args.config)
    require_diagonal(model)
    report = spectrum.gap_report(model)
    rows = [
        ("gap_kms", f"{report.gap_kms:.12g}"),
        ("gap_gns", f"{report.gap_gns:.12g}"),
        ("zero_simple_kms", str(int(report.zero_simple_kms))),
        ("zero_simple_gns", str(int(report.zero_simple_gns))),
        ("compact_resolvent_kms", str(int(report.compact_resolvent_kms))),
        ("compact_resolvent_gns", str(int(report.compact_resolvent_gns))),
    ]
    for name, value in rows:
        print(f"{name} = {value}")
    if args.out:
        _write(args.out, "quantity,value\n" + "\n".join(f"{n},{v}" for n, v in rows) + "\n")
    return EXIT_OK


def cmd_verify(args):
    model = load_model(args.config)
    require_diagonal(model)
    tolerances = {}
    for entry in args.tol or []:
        name, _, value = entry.partition("=")
        if name not in checks.DEFAULT_TOLERANCES:
            raise ConfigError(f"unknown tolerance {name!r}")
        tolerances[name] = float(value)
    results = checks.run_campaign(
        model,
        tolerances=tolerances,
        n_max=args.n_max,
        max_degree=args.max_degree,
        workers=args.workers,
    )
    failed = 0
    for r in results:
        status = "pass" if r.passed else "FAIL"
        failed += not r.passed
        detail = f"  [{r.detail}]" if r.detail else ""
        print(f"{status:4s}  {r.name:<26s} value={r.value:.3e} tol={r.tolerance:.1e}{detail}")
    print(f"{len(results) - failed}/{len(results)} checks passed")
    if args.out:
        lines = ["quantity,value,tolerance,status"]
        for r in results:
            lines.append(
                f"{r.name},{r.value:.6e},{r.tolerance:.1e},"
                + ("pass" if r.passed else "fail")
            )
        _write(args.out, "\n".join(lines) + "\n")
    return EXIT_OK if failed == 0 else EXIT_VERIFY_FAILED


def cmd_standardize(args):
    model = load_model(args.config)
    sg = stationary_gaussian(model)
    Z_std, Z_dual = standardized_drifts(model)
    rows = [
        ("omega_re", sg.omega.real),
        ("omega_im", sg.omega.imag),
        ("S_00", sg.S[0, 0]),
        ("S_01", sg.S[0, 1]),
        ("S_10", sg.S[1, 0]),
        ("S_11", sg.S[1, 1]),
        ("nu", sg.nu),
        ("M_00", sg.M[0, 0]),
        ("M_01", sg.M[0, 1]),
        ("M_10", sg.M[1, 0]),
        ("M_11", sg.M[1, 1]),
        ("m1_re", sg.m1.real),
        ("m1_im", sg.m1.imag),
        ("m2_re", sg.m2.real),
        ("m2_im", sg.m2.imag),
        ("beta", sg.beta),
    ]
    rows += [(f"Z_std_{i}{j}", Z_std[i, j]) for i in range(2) for j in range(2)]
    rows += [(f"Z_dual_{i}{j}", Z_dual[i, j]) for i in range(2) for j in range(2)]
    for name, value in rows:
        print(f"{name} = {value:.12g}")
    if args.out:
        _write(
            args.out,
            "quantity,value\n" + "\n".join(f"{n},{v:.12g}" for n, v in rows) + "\n",
        )
    return EXIT_OK


def cmd_dual(args):
    model = load_model(args.config)
    text = format_model(dual_model(model))
    _write(args.out, text)
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="gqms",
        description="Spectral analysis of one-mode Gaussian quantum Markov semigroups",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--config", required=True, help="model config file")

    p = sub.add_parser("spectrum", help="eigenvalue lattice of the induced generator")
    add_common(p)
    p.add_argument(
        "--s",
        type=float,
        default=DEFAULT_S,
        help="embedding parameter (accepted for symmetry; the lattice is the same for every s)",
    )
    p.add_argument("--max-degree", type=int, default=DEFAULT_MAX_DEGREE)
    p.add_argument("--out", help="lattice CSV path (default stdout)")
    p.add_argument("--svg", help="optional SVG scatter path")
    p.set_defaults(handler=cmd_spectrum)

    p = sub.add_parser("gap", help="spectral gaps for the KMS and GNS embeddings")
    add_common(p)
    p.add_argument("--out", help="CSV path")
    p.set_defaults(handler=cmd_gap)

    p = sub.add_parser("verify", help="full numeric verification campaign")
    add_common(p)
    p.add_argument("--s", type=float, default=DEFAULT_S)
    p.add_argument("--max-degree", type=int, default=DEFAULT_MAX_DEGREE)
    p.add_argument("--n-max", type=int, default=DEFAULT_N_MAX)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument(
        "--tol",
        action="append",
        metavar="NAME=VALUE",
        help="override a check tolerance (repeatable)",
    )
    p.add_argument("--out", help="verification CSV path")
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("standardize", help="stationary state and standardized drifts")
    add_common(p)
    p.add_argument("--out", help="CSV path")
    p.set_defaults(handler=cmd_standardize)

    p = sub.add_parser("dual", help="dual model parameters in config format")
    add_common(p)
    p.add_argument("--out", help="output path (default stdout)")
    p.set_defaults(handler=cmd_dual)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except (ConfigError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_CONFIG
    except RuntimeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VERIFY_FAILED


if __name__ == "__main__":
    sys.exit(main())
