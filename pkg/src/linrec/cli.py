"""``linrec`` command-line front end.

Coefficient lists are comma-separated decimals, low degree first.  The
default ring is the integers; ``--mod m`` switches to Z/m (a prime field
when m is prime).  Exit status: 0 ok, 2 usage error, 3 ring or
precondition error.
"""
from __future__ import annotations

import argparse
import json
import random
import sys

import gmpy2

from .apps import SquareMatrix, fib_new, matrix_pow, matrix_pow_binary
from .bench import ALGORITHMS, run_grid, write_csv
from .errors import LinrecError, PreconditionError
from .kernel import (
    LinRec,
    RationalSeries,
    many_coeff_msb,
    one_coeff_fft,
    one_coeff_lsb,
    one_coeff_msb,
    one_term,
    rational_from_linrec,
    slice_coeff_msb,
)
from .modexp import (
    ModulusPoly,
    fiduccia_term,
    initial_segment_naive,
    modexp_binary,
    modexp_new,
    new_fiduccia_slice,
)
from .poly import DensePoly, MulConfig, expand_lists
from .ring import NTT_PRIME, ZZ, ModRing, PrimeField, Ring

EXIT_USAGE = 2
EXIT_RING = 3
MAX_N = (1 << 63) - 1


class UsageError(Exception):
    pass


def _ints(text: str, what: str) -> list[int]:
    try:
        vals = [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise UsageError(f"{what}: expected comma-separated integers, got {text!r}") from None
    if not vals:
        raise UsageError(f"{what}: empty list")
    return vals


def _need(args, name: str):
    v = getattr(args, name)
    if v is None:
        raise UsageError(f"--{name} is required for '{args.mode}'")
    return v


def _n(args) -> int:
    N = _need(args, "N")
    if not 0 <= N <= MAX_N:
        raise UsageError(f"N must be in [0, 2^63), got {N}")
    return N


def _ring(args) -> Ring:
    if args.mod is None:
        return ZZ
    m = args.mod
    if m < 2:
        raise UsageError(f"--mod must be >= 2, got {m}")
    if m < 1 << 63 and gmpy2.is_prime(m):
        return PrimeField(m)
    return ModRing(m)


def _cfg(args) -> MulConfig:
    return MulConfig(threshold=args.karatsuba_threshold)


def _algo(args, allowed) -> str:
    a = args.algo or "auto"
    if a not in allowed:
        raise UsageError(f"--algo {a} is not available for '{args.mode}' (choose from {', '.join(allowed)})")
    return a


def _linrec(args, R: Ring) -> LinRec:
    rec = _ints(_need(args, "rec"), "--rec")
    init = _ints(_need(args, "init"), "--init")
    if len(rec) != len(init):
        raise UsageError(f"--rec has {len(rec)} entries but --init has {len(init)}")
    return LinRec(R, rec, init)


# -- subcommands -------------------------------------------------------------


def cmd_term(args) -> list:
    R = _ring(args)
    rec = _linrec(args, R)
    N = _n(args)
    algo = _algo(args, ("auto", "lsb", "msb", "fft", "fiduccia", "binary"))
    cfg = _cfg(args)
    if algo in ("auto", "lsb"):
        return [one_term(rec, N, cfg)]
    if algo in ("fiduccia", "binary"):
        return [fiduccia_term(rec, N, cfg)]
    if N < rec.d:
        return [rec.init[N]]
    fs = rational_from_linrec(rec, cfg)
    return [one_coeff_msb(fs, N, cfg) if algo == "msb" else one_coeff_fft(fs, N)]


def cmd_coeff(args) -> list:
    R = _ring(args)
    nums = [DensePoly(R, _ints(t, "--num")) for t in _need(args, "num")]
    if args.k is not None and args.k != len(nums):
        raise UsageError(f"--k {args.k} but {len(nums)} numerator(s) given")
    q = DensePoly(R, _ints(_need(args, "den"), "--den"))
    N = _n(args)
    algo = _algo(args, ("auto", "lsb", "msb", "fft"))
    cfg = _cfg(args)
    if algo == "msb" or (algo == "auto" and len(nums) > 1):
        if q.degree < 1:
            raise PreconditionError("denominator must have degree >= 1")
        return many_coeff_msb(nums, q, N, cfg)
    out = []
    for p in nums:
        f = RationalSeries(p, q)
        out.append(one_coeff_fft(f, N) if algo == "fft" else one_coeff_lsb(f, N, cfg))
    return out


def cmd_slice(args) -> list:
    R = _ring(args)
    N = _n(args)
    cfg = _cfg(args)
    if args.den is not None:
        q = DensePoly(R, _ints(args.den, "--den"))
        return slice_coeff_msb(q, N, cfg=cfg).values
    return new_fiduccia_slice(_linrec(args, R), N, align=args.align, cfg=cfg).values


def cmd_modexp(args) -> list:
    R = _ring(args)
    m = ModulusPoly(DensePoly(R, _ints(_need(args, "gamma"), "--gamma")))
    N = _n(args)
    algo = _algo(args, ("auto", "msb", "binary", "fiduccia"))
    f = modexp_new if algo in ("auto", "msb") else modexp_binary
    return f(m, N, _cfg(args)).padded(m.d)


def cmd_fib(args) -> list:
    R = _ring(args)
    N = _n(args)
    algo = _algo(args, ("auto", "lsb", "msb", "fft", "fiduccia", "binary"))
    if algo == "auto":
        return [fib_new(N, R)]
    args.rec, args.init = "1,1", "0,1"
    return cmd_term(args)


def _matrix(text: str, R: Ring) -> SquareMatrix:
    rows = [_ints(r, "--matrix") for r in text.split(";")]
    if any(len(r) != len(rows) for r in rows):
        raise UsageError("--matrix must be square, rows separated by ';'")
    return SquareMatrix(R, rows)


def cmd_matpow(args) -> list:
    R = _ring(args)
    if not R.is_field:
        raise PreconditionError("matpow needs a prime modulus (--mod p)")
    M = _matrix(_need(args, "matrix"), R)
    N = _n(args)
    algo = _algo(args, ("auto", "binary"))
    P = matrix_pow(M, N, _cfg(args)) if algo == "auto" else matrix_pow_binary(M, N)
    return [",".join(map(str, row)) for row in P.rows]


def cmd_bench(args) -> list:
    ds = _ints(args.d, "--d") if args.d else []
    Ns = _ints(args.Ns, "-N") if args.Ns else []
    algos = [a for a in (args.algo or "lsb,fiduccia").split(",") if a]
    bad = [a for a in algos if a not in ALGORITHMS]
    if bad:
        raise UsageError(f"unknown bench algorithm(s) {bad}; choose from {sorted(ALGORITHMS)}")
    modulus = args.mod if args.mod is not None else NTT_PRIME
    if not gmpy2.is_prime(modulus):
        raise PreconditionError(f"bench needs a prime modulus, got {modulus}")
    recs = run_grid(ds, Ns, algos, seed=args.seed, modulus=modulus,
                    threshold=args.karatsuba_threshold, timing=not args.no_time)
    if args.csv:
        try:
            write_csv(recs, args.csv)
        except OSError as e:
            raise UsageError(f"cannot write {args.csv}: {e}") from None
        return []
    return [f"{r.algo},{r.d},{r.N},{r.mul_count},{r.add_count},{r.wall_time_ns},{r.m_of_d}"
            for r in recs]


def selftest(seed: int, count: int = 200) -> int:
    """Cross-check every route on random instances; returns the number of checks."""
    rng = random.Random(seed)
    F = PrimeField(NTT_PRIME)
    checks = 0

    def same(*vals):
        nonlocal checks
        checks += 1
        if any(v != vals[0] for v in vals):
            raise AssertionError(f"selftest mismatch: {vals}")

    for _ in range(count):
        d = rng.randint(1, 12)
        R = F if rng.random() < 0.5 else ModRing(rng.randrange(3, 1 << 30, 2))
        p = R.modulus
        rec = LinRec(R, [rng.randrange(p) for _ in range(d)], [rng.randrange(p) for _ in range(d)])
        N = rng.randrange(3000)
        fs = rational_from_linrec(rec)
        seq = initial_segment_naive(rec, N + d)
        same(seq[N], one_term(rec, N), one_coeff_lsb(fs, N), one_coeff_msb(fs, N),
             fiduccia_term(rec, N), expand_lists(R, fs.num.coeffs, fs.den.coeffs, N + 1)[N])
        if R.is_field:
            same(seq[N], one_coeff_fft(fs, N))
        same(seq[N:N + d], new_fiduccia_slice(rec, N).values)
        m = ModulusPoly(rec.characteristic())
        big = rng.randrange(1 << 40)
        same(modexp_new(m, big), modexp_binary(m, big))
    for _ in range(max(1, count // 10)):
        n = rng.randint(1, 6)
        M = SquareMatrix(F, [[rng.randrange(F.modulus) for _ in range(n)] for _ in range(n)])
        N = rng.randrange(1 << 20)
        same(matrix_pow(M, N), matrix_pow_binary(M, N))
    N = rng.randrange(10 ** 4)
    same(fib_new(N, F), one_term(LinRec(F, [1, 1], [0, 1]), N))
    return checks


def cmd_selftest(args) -> list:
    return [f"selftest ok: {selftest(args.seed, args.count)} checks"]


COMMANDS = {
    "term": cmd_term,
    "coeff": cmd_coeff,
    "slice": cmd_slice,
    "modexp": cmd_modexp,
    "fib": cmd_fib,
    "matpow": cmd_matpow,
    "bench": cmd_bench,
    "selftest": cmd_selftest,
}


# -- argument parsing ----------------------------------------------------------


def _common(p: argparse.ArgumentParser) -> None:
    g = p.add_mutually_exclusive_group()
    g.add_argument("--mod", type=int, help="work in Z/m (a prime field when m is prime)")
    g.add_argument("--bigint", action="store_true", help="work over the integers (default)")
    p.add_argument("--algo", help="algorithm choice; 'auto' picks the default route")
    p.add_argument("--karatsuba-threshold", type=int, default=32, metavar="n")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="linrec", description=__doc__.splitlines()[0])
    parser.add_argument("--file", help="JSON problem description mirroring the flags")
    sub = parser.add_subparsers(dest="mode")

    p = sub.add_parser("term", help="N-th term of a linear recurrence")
    p.add_argument("--rec", help="c_0,...,c_{d-1}")
    p.add_argument("--init", help="u_0,...,u_{d-1}")
    p.add_argument("-N", type=int)
    _common(p)

    p = sub.add_parser("coeff", help="[x^N] P/Q, one line per numerator")
    p.add_argument("--num", action="append", help="numerator; repeat for several")
    p.add_argument("--den")
    p.add_argument("--k", type=int, help="number of numerators (checked)")
    p.add_argument("-N", type=int)
    _common(p)

    p = sub.add_parser("slice", help="d consecutive terms")
    p.add_argument("--den", help="window a_{N-d+1}..a_N of 1/Q")
    p.add_argument("--rec")
    p.add_argument("--init")
    p.add_argument("--align", choices=("start", "end"), default="start",
                   help="with --rec: window starts (default) or ends at N")
    p.add_argument("-N", type=int)
    _common(p)

    p = sub.add_parser("modexp", help="coefficients of x^N mod Gamma")
    p.add_argument("--gamma")
    p.add_argument("-N", type=int)
    _common(p)

    p = sub.add_parser("fib", help="Fibonacci number F_N")
    p.add_argument("-N", type=int)
    _common(p)

    p = sub.add_parser("matpow", help="M^N over a prime field")
    p.add_argument("--matrix", help="rows separated by ';', e.g. '1,1;1,0'")
    p.add_argument("-N", type=int)
    _common(p)

    p = sub.add_parser("bench", help="operation-count grid as CSV")
    p.add_argument("--d", help="comma-separated orders")
    p.add_argument("-N", dest="Ns", help="comma-separated indices")
    p.add_argument("--csv", help="output path (stdout if omitted)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--no-time", action="store_true", help="write 0 for wall_time_ns")
    _common(p)

    p = sub.add_parser("selftest", help="seeded cross-algorithm checks")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=200)
    _common(p)
    return parser


def _file_argv(path: str) -> list[str]:
    try:
        with open(path) as fh:
            obj = json.load(fh)
    except (OSError, json.JSONDecodeError) as e:
        raise UsageError(f"cannot read problem file {path}: {e}") from None
    if not isinstance(obj, dict) or "mode" not in obj:
        raise UsageError("problem file must be a JSON object with a 'mode' key")
    argv = [str(obj.pop("mode"))]
    for key, val in obj.items():
        flag = "-N" if key == "N" else "--" + key.replace("_", "-")
        if val is True:
            argv.append(flag)
        elif val is False or val is None:
            continue
        elif key == "num" and isinstance(val, list) and val and isinstance(val[0], list):
            for v in val:
                argv += [flag, ",".join(map(str, v))]
        elif isinstance(val, list):
            argv += [flag, ",".join(map(str, val))]
        else:
            argv += [flag, str(val)]
    return argv


_VALUE_FLAGS = {"--rec", "--init", "--num", "--den", "--gamma", "--matrix", "--d", "-N", "--mod"}


def _attach_negatives(argv: list[str]) -> list[str]:
    # argparse would read "--den -1,2" as two flags
    out: list[str] = []
    for tok in argv:
        if out and out[-1] in _VALUE_FLAGS and tok[:1] == "-" and tok[1:2].isdigit():
            out[-1] = f"{out[-1]}={tok}"
        else:
            out.append(tok)
    return out


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    argv = _attach_negatives(list(sys.argv[1:] if argv is None else argv))
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        if args.file:
            if args.mode:
                raise UsageError("--file replaces the subcommand; give one or the other")
            args = parser.parse_args(_attach_negatives(_file_argv(args.file)))
        if not args.mode:
            parser.print_usage(sys.stderr)
            return EXIT_USAGE
        if args.karatsuba_threshold < 2:
            raise UsageError("--karatsuba-threshold must be >= 2")
        lines = COMMANDS[args.mode](args)
    except SystemExit as e:
        return int(e.code or 0)
    except UsageError as e:
        print(f"linrec: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except LinrecError as e:
        print(f"linrec: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_RING
    except AssertionError as e:
        print(f"linrec: {e}", file=sys.stderr)
        return 1
    for line in lines:
        print(line, file=out)
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
