"""``chebkit`` command line.

Exit codes: 0 success, 1 verification failure, 2 usage/parse error, 3 I/O error.
"""
from __future__ import annotations

import argparse
import io
import sys
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import verify as _verify
from .approx import (
    cheb_coefficients,
    coefficient_energy,
    default_rule_size,
    error_metrics,
    fourier_coefficients,
    weighted_energy,
)
from .core import eval_trig
from .targets import PolyTarget, TargetParseError, parse_target, render_target

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3

DEFAULT_N = {"tabulate": 5, "approx": 7, "compare": 20, "parseval": 20, "verify": 30}


def fmt(v: float) -> str:
    return format(float(v), ".17g")


@dataclass(frozen=True)
class RunConfig:
    command: str
    target: str = "preset:septic"
    N: int = 7
    method: str = "chebyshev"
    samples: int = 201
    rule_size: int | None = None
    output_path: str | None = None
    seed: int | None = None
    ns: tuple[int, ...] | None = None
    inject_fault: str | None = None

    def __post_init__(self):
        if self.N < 0:
            raise ValueError("N must be non-negative")
        if self.samples < 2:
            raise ValueError("samples must be at least 2")
        if self.method not in ("chebyshev", "fourier", "both"):
            raise ValueError(f"unknown method {self.method!r}")


class _Table:
    def __init__(self):
        self.buf = io.StringIO()

    def comment(self, text: str):
        self.buf.write(f"# {text}\n")

    def row(self, *cells):
        self.buf.write(",".join(c if isinstance(c, str) else fmt(c) for c in cells) + "\n")

    def text(self) -> str:
        return self.buf.getvalue()


def _fit(target, method: str, N: int, rule_size: int | None):
    if method == "chebyshev":
        return cheb_coefficients(target, N, rule_size or default_rule_size(target, N))
    return fourier_coefficients(target, N)


def cmd_verify(cfg: RunConfig) -> tuple[int, str]:
    table = _verify.build_table(max(cfg.N, 12))
    if cfg.inject_fault:
        table = _verify.inject_fault(table, cfg.inject_fault)
    results = _verify.run_all(seed=cfg.seed or 0, table=table)
    lines = [r.line() for r in results]
    ok = all(r.passed for r in results)
    lines.append(f"{'ALL PASS' if ok else 'FAILED'}: {sum(r.passed for r in results)}/{len(results)} suites")
    return (EXIT_OK if ok else EXIT_FAIL), "\n".join(lines) + "\n"


def cmd_tabulate(cfg: RunConfig) -> tuple[int, str]:
    if cfg.N > 64:
        raise ValueError("tabulate supports N <= 64")
    t = _Table()
    t.row("x", *(f"T{n}" for n in range(cfg.N + 1)))
    for x in np.linspace(-1.0, 1.0, cfg.samples):
        t.row(float(x), *(eval_trig(n, float(x)) for n in range(cfg.N + 1)))
    return EXIT_OK, t.text()


def cmd_approx(cfg: RunConfig) -> tuple[int, str]:
    target = parse_target(cfg.target)
    methods = ["chebyshev", "fourier"] if cfg.method == "both" else [cfg.method]
    fits = {m: _fit(target, m, cfg.N, cfg.rule_size) for m in methods}
    x = np.linspace(-1.0, 1.0, cfg.samples)
    fx = np.asarray(target(x), dtype=float)
    vals = {m: np.asarray(s(x)) for m, s in fits.items()}
    t = _Table()
    t.comment(f"target={render_target(target)} N={cfg.N} method={cfg.method}")
    if len(methods) == 1:
        t.row("x", "f", "approx", "abs_error")
        m = methods[0]
        for i in range(len(x)):
            t.row(x[i], fx[i], vals[m][i], abs(fx[i] - vals[m][i]))
    else:
        header = ["x", "f"]
        for m in methods:
            header += [f"approx_{m}", f"abs_error_{m}"]
        t.row(*header)
        for i in range(len(x)):
            cells = [x[i], fx[i]]
            for m in methods:
                cells += [vals[m][i], abs(fx[i] - vals[m][i])]
            t.row(*cells)
    for m in methods:
        em = error_metrics(target, fits[m])
        prefix = "" if len(methods) == 1 else f"{m}_"
        t.comment(f"{prefix}sup_error={fmt(em.sup_error)},{prefix}l2w_error={fmt(em.l2w_error)}")
    return EXIT_OK, t.text()


def _sweep(cfg: RunConfig) -> Sequence[int]:
    return cfg.ns if cfg.ns is not None else range(cfg.N + 1)


def cmd_compare(cfg: RunConfig) -> tuple[int, str]:
    target = parse_target(cfg.target)
    t = _Table()
    t.comment(f"target={render_target(target)}")
    t.row("N", "chebyshev_sup", "chebyshev_l2w", "fourier_sup", "fourier_l2w")
    for N in _sweep(cfg):
        c = error_metrics(target, _fit(target, "chebyshev", N, cfg.rule_size))
        f = error_metrics(target, _fit(target, "fourier", N, cfg.rule_size))
        t.row(str(N), c.sup_error, c.l2w_error, f.sup_error, f.l2w_error)
    return EXIT_OK, t.text()


def cmd_parseval(cfg: RunConfig) -> tuple[int, str]:
    target = parse_target(cfg.target)
    sweep = list(_sweep(cfg))
    deg = target.degree if isinstance(target, PolyTarget) else 0
    size = cfg.rule_size or default_rule_size(target, max(max(sweep, default=0), deg))
    lhs = weighted_energy(target, size)
    t = _Table()
    t.comment(f"target={render_target(target)} rule_size={size}")
    t.row("N", "lhs_energy", "rhs_energy", "gap")
    for N in sweep:
        rhs = coefficient_energy(cheb_coefficients(target, N, size))
        t.row(str(N), lhs, rhs, abs(lhs - rhs))
    return EXIT_OK, t.text()


COMMANDS = {
    "verify": cmd_verify,
    "tabulate": cmd_tabulate,
    "approx": cmd_approx,
    "compare": cmd_compare,
    "parseval": cmd_parseval,
}


def _int_list(text: str) -> tuple[int, ...]:
    try:
        vals = tuple(int(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    if any(v < 0 for v in vals):
        raise argparse.ArgumentTypeError("orders must be non-negative")
    return vals


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--target", default="preset:septic", help="poly:c0,c1,.. | step:x0/low/high | preset:NAME")
    common.add_argument("--n", type=int, default=None, help="series order N (sweep maximum for compare/parseval)")
    common.add_argument("--ns", type=_int_list, default=None, help="explicit comma-separated N list for compare/parseval")
    common.add_argument("--method", choices=["chebyshev", "fourier", "both"], default="chebyshev")
    common.add_argument("--samples", type=int, default=201)
    common.add_argument("--rule-size", type=int, default=None, help="Gauss-Chebyshev rule size for fitting")
    common.add_argument("--out", default=None, help="write output here instead of stdout")
    common.add_argument("--seed", type=int, default=None)
    common.add_argument("--inject-fault", default=None, help=argparse.SUPPRESS)

    parser = argparse.ArgumentParser(prog="chebkit", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    helps = {
        "verify": "run the identity suites",
        "tabulate": "CSV of T_0..T_N on a uniform grid",
        "approx": "fit a target and emit samples with errors",
        "compare": "Chebyshev vs Fourier error table over N",
        "parseval": "weighted energy vs coefficient energy over N",
    }
    for name, h in helps.items():
        sub.add_parser(name, parents=[common], help=h)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = RunConfig(
            command=args.command,
            target=args.target,
            N=DEFAULT_N[args.command] if args.n is None else args.n,
            method=args.method,
            samples=args.samples,
            rule_size=args.rule_size,
            output_path=args.out,
            seed=args.seed,
            ns=args.ns,
            inject_fault=args.inject_fault,
        )
        code, text = COMMANDS[cfg.command](cfg)
    except (TargetParseError, ValueError) as exc:
        print(f"chebkit: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if cfg.output_path is None:
        sys.stdout.write(text)
        sys.stdout.flush()
        return code
    try:
        with open(cfg.output_path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        print(f"chebkit: cannot write {cfg.output_path}: {exc}", file=sys.stderr)
        return EXIT_IO
    return code


if __name__ == "__main__":
    sys.exit(main())
