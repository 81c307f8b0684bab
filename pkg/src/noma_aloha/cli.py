"""Command-line interface.

Subcommands: ladder, bounds, oracle, simulate, figure1, figure2.
Every CSV starts with '#'-prefixed manifest lines (key=value) that are
sufficient to reproduce the file byte-for-byte.  Exit codes: 0 success,
2 usage/validation error, 3 I/O error.
"""

import argparse
import math
import sys

from . import __version__
from ._kernel import BACKEND, RNG_NAME
from .bounds import argmax_upper_bound, lower_bound, lower_bound_peak, upper_bound
from .model import ConfigError, SystemConfig, build_power_ladder, gamma_db_to_linear, validate_config
from .montecarlo import simulate, subsequence_seed
from .oracle import exact_throughput
from .sic import Decoder

EXIT_USAGE = 2
EXIT_IO = 3


def _fmt(x):
    """Shortest decimal representation that round-trips."""
    if isinstance(x, float):
        return repr(x)
    return str(x)


def _manifest(subcommand, params):
    lines = [
        f"# tool=noma-aloha",
        f"# version={__version__}",
        f"# rng={RNG_NAME}",
        f"# subcommand={subcommand}",
    ]
    for key, val in params.items():
        lines.append(f"# {key}={_fmt(val)}")
    return lines


def _write_lines(path, lines):
    text = "\n".join(lines) + "\n"
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _gamma_args(args):
    gamma = gamma_db_to_linear(args.gamma_db)
    return gamma


def cmd_ladder(args):
    gamma = _gamma_args(args)
    ladder = build_power_ladder(gamma, args.q)
    print(f"# gamma_db={_fmt(args.gamma_db)} gamma_linear={_fmt(gamma)} q={args.q}")
    print("level,power,power_db")
    for q, v in enumerate(ladder.levels, start=1):
        print(f"{q},{_fmt(v)},{_fmt(10.0 * math.log10(v))}")
    return 0


def cmd_bounds(args):
    gamma = _gamma_args(args)  # accepted for interface symmetry; bounds are gamma-free
    ub = upper_bound(args.lam, args.q)
    lb = lower_bound(args.lam, args.q)
    lam_star, w = lower_bound_peak(args.q)
    lam_ub = argmax_upper_bound(args.q)
    print(f"lambda={_fmt(args.lam)} q={args.q} gamma_linear={_fmt(gamma)}")
    print(f"upper={_fmt(ub)} lower={_fmt(lb)}")
    print(f"lower_peak_lambda={_fmt(lam_star)} lower_peak_value={_fmt(w)}")
    print(f"upper_argmax_lambda={_fmt(lam_ub)}")
    return 0


def cmd_oracle(args):
    gamma = _gamma_args(args)
    if args.q > 6:
        raise ConfigError("q", "exact enumeration is limited to Q <= 6; use `simulate`")
    res = exact_throughput(args.lam, args.q, gamma, args.epsilon, Decoder(args.decoder))
    ub = upper_bound(args.lam, args.q)
    lb = lower_bound(args.lam, args.q)
    print(
        f"oracle={_fmt(res.value)} truncation_bound={_fmt(res.truncation_error_bound)} "
        f"m_max={res.m_max} states={res.enumerated_states} "
        f"lower={_fmt(lb)} upper={_fmt(ub)}"
    )
    return 0


def cmd_simulate(args):
    gamma = _gamma_args(args)
    cfg = validate_config(SystemConfig(args.channels, args.q, gamma, args.lam))
    est = simulate(cfg, args.slots, args.seed, Decoder(args.decoder), workers=args.workers)
    total = cfg.num_channels * est.mean
    print(
        f"per_channel_mean={_fmt(est.mean)} std_error={_fmt(est.std_error)} "
        f"slots={est.num_slots} seed={est.seed} decoder={est.decoder.value} "
        f"channels={cfg.num_channels} total_mean={_fmt(total)} "
        f"rng={RNG_NAME} backend={BACKEND}"
    )
    return 0


def _lambda_grid(args):
    grid = []
    lam = args.lambda_min
    k = 0
    while lam <= args.lambda_max + 1e-12:
        grid.append(round(lam, 10))
        k += 1
        lam = args.lambda_min + k * args.lambda_step
    if not grid:
        raise ConfigError("lambda grid", "empty grid")
    return grid


def cmd_figure1(args):
    gamma = _gamma_args(args)
    grid = _lambda_grid(args)
    lines = _manifest(
        "figure1",
        {
            "gamma_db": args.gamma_db,
            "gamma_linear": gamma,
            "q": args.q,
            "lambda_min": args.lambda_min,
            "lambda_max": args.lambda_max,
            "lambda_step": args.lambda_step,
            "slots": args.slots,
            "seed": args.seed,
            "decoder": args.decoder,
            "channels": args.channels,
        },
    )
    lines.append("lambda,upper,lower,sim_mean,sim_se,n_slots")
    for i, lam in enumerate(grid):
        cfg = validate_config(SystemConfig(args.channels, args.q, gamma, lam))
        est = simulate(cfg, args.slots, subsequence_seed(args.seed, i), Decoder(args.decoder))
        row = [lam, upper_bound(lam, args.q), lower_bound(lam, args.q), est.mean, est.std_error, est.num_slots]
        lines.append(",".join(_fmt(x) for x in row))
    _write_lines(args.output, lines)
    return 0


def _parse_q_list(text):
    out = []
    for part in text.split(","):
        part = part.strip()
        if ".." in part:
            lo, hi = part.split("..")
            out.extend(range(int(lo), int(hi) + 1))
        elif part:
            out.append(int(part))
    if not out:
        raise ConfigError("q_list", "empty list")
    return out


def cmd_figure2(args):
    gamma = _gamma_args(args)
    q_list = _parse_q_list(args.q_list)
    lines = _manifest(
        "figure2",
        {
            "gamma_db": args.gamma_db,
            "gamma_linear": gamma,
            "q_list": args.q_list,
            "slots": args.slots,
            "seed": args.seed,
            "decoder": args.decoder,
            "channels": args.channels,
        },
    )
    lines.append("q,lambda_ub,lambda_lb,upper_at_lub,lower_at_llb,sim_at_lub,se_ub,sim_at_llb,se_lb")
    for i, q in enumerate(q_list):
        lam_ub = argmax_upper_bound(q)
        lam_lb = math.sqrt(q)
        cfg_ub = validate_config(SystemConfig(args.channels, q, gamma, lam_ub))
        cfg_lb = validate_config(SystemConfig(args.channels, q, gamma, lam_lb))
        est_ub = simulate(cfg_ub, args.slots, subsequence_seed(args.seed, 2 * i), Decoder(args.decoder))
        est_lb = simulate(cfg_lb, args.slots, subsequence_seed(args.seed, 2 * i + 1), Decoder(args.decoder))
        row = [
            q,
            lam_ub,
            lam_lb,
            upper_bound(lam_ub, q),
            lower_bound(lam_lb, q),
            est_ub.mean,
            est_ub.std_error,
            est_lb.mean,
            est_lb.std_error,
        ]
        lines.append(",".join(_fmt(x) for x in row))
    _write_lines(args.output, lines)
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="noma-aloha",
        description="NOMA-ALOHA throughput: ladders, bounds, oracle, simulation, figure sweeps.",
    )
    parser.add_argument("--version", action="version", version=f"noma-aloha {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, lam=False, slots=False, epsilon=False):
        p.add_argument("--gamma-db", type=float, default=4.0, help="SINR target in dB (default 4)")
        p.add_argument("--q", type=int, default=4, help="number of power levels")
        if lam:
            p.add_argument("--lambda", dest="lam", type=float, required=True,
                           help="traffic intensity (mean active users per channel per slot)")
        if slots:
            p.add_argument("--slots", type=int, default=1_000_000, help="slots to simulate per point")
            p.add_argument("--seed", type=int, default=1, help="64-bit RNG seed")
            p.add_argument("--decoder", choices=[d.value for d in Decoder], default=Decoder.PAPER.value)
            p.add_argument("--channels", type=int, default=1, help="channel count L (reporting multiplier)")
        if epsilon:
            p.add_argument("--epsilon", type=float, default=1e-9, help="truncation error budget")
            p.add_argument("--decoder", choices=[d.value for d in Decoder], default=Decoder.PAPER.value)

    p = sub.add_parser("ladder", help="print the SIC power ladder")
    add_common(p)
    p.set_defaults(func=cmd_ladder)

    p = sub.add_parser("bounds", help="closed-form bounds at one point, plus their extrema")
    add_common(p, lam=True)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("oracle", help="exact throughput by truncated enumeration (Q <= 6)")
    add_common(p, lam=True, epsilon=True)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("simulate", help="seeded Monte Carlo throughput estimate")
    add_common(p, lam=True, slots=True)
    p.add_argument("--workers", type=int, default=None, help="worker threads (result is worker-invariant)")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("figure1", help="CSV: throughput vs lambda (bounds + simulation)")
    add_common(p, slots=True)
    p.add_argument("--lambda-min", type=float, default=0.25)
    p.add_argument("--lambda-max", type=float, default=8.0)
    p.add_argument("--lambda-step", type=float, default=0.25)
    p.add_argument("--output", "-o", default=None, help="output CSV path (default stdout)")
    p.set_defaults(func=cmd_figure1)

    p = sub.add_parser("figure2", help="CSV: throughput vs Q at the two optimal lambdas")
    p.add_argument("--gamma-db", type=float, default=4.0)
    p.add_argument("--q-list", default="1..8", help="comma list and/or ranges, e.g. 1,2,4 or 1..8")
    p.add_argument("--slots", type=int, default=1_000_000)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--decoder", choices=[d.value for d in Decoder], default=Decoder.PAPER.value)
    p.add_argument("--channels", type=int, default=1)
    p.add_argument("--output", "-o", default=None)
    p.set_defaults(func=cmd_figure2)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ConfigError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
