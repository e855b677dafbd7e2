"""Operation-count benchmarks.

Every grid point runs on a fresh CountingRing over a prime field.  The
instance for a given d depends only on (seed, d), so all algorithms at
the same d see the same recurrence.  ``m_of_d`` is the measured cost of
one product of two degree-d polynomials under the backend the algorithm
uses, so ratios can be read off a single row.
"""
from __future__ import annotations

import csv
import random
import time
from dataclasses import astuple, dataclass, fields

from .kernel import (
    LinRec,
    one_coeff_fft,
    one_coeff_lsb,
    one_coeff_msb,
    rational_from_linrec,
)
from .modexp import ModulusPoly, fiduccia_term, modexp_binary, modexp_new, new_fiduccia_slice
from .poly import MulConfig, mul_lists
from .ring import NTT_PRIME, CountingRing, PrimeField

CSV_HEADER = "algo,d,N,mul_count,add_count,wall_time_ns,m_of_d"


@dataclass(frozen=True)
class BenchRecord:
    algo: str
    d: int
    N: int
    mul_count: int
    add_count: int
    wall_time_ns: int
    m_of_d: int


def _lsb(rec, fs, N, cfg):
    one_coeff_lsb(fs, N, cfg)


def _msb(rec, fs, N, cfg):
    one_coeff_msb(fs, N, cfg)


def _msb_plain(rec, fs, N, cfg):
    one_coeff_msb(fs, N, cfg, middle=False)


def _fft(rec, fs, N, cfg):
    one_coeff_fft(fs, N)


def _fiduccia(rec, fs, N, cfg):
    fiduccia_term(rec, N, cfg)


def _modexp_new(rec, fs, N, cfg):
    modexp_new(ModulusPoly(rec.characteristic()), N, cfg)


def _modexp_binary(rec, fs, N, cfg):
    modexp_binary(ModulusPoly(rec.characteristic()), N, cfg)


def _new_fiduccia(rec, fs, N, cfg):
    new_fiduccia_slice(rec, N, cfg=cfg)


# name -> (runner, multiplication backend)
ALGORITHMS = {
    "lsb": (_lsb, "karatsuba"),
    "msb": (_msb, "karatsuba"),
    "msb_plain": (_msb_plain, "karatsuba"),
    "fft": (_fft, "fft"),
    "lsb_fftmul": (_lsb, "fft"),
    "fiduccia": (_fiduccia, "karatsuba"),
    "modexp_new": (_modexp_new, "karatsuba"),
    "modexp_binary": (_modexp_binary, "karatsuba"),
    "new_fiduccia": (_new_fiduccia, "karatsuba"),
}


def random_linrec(ring, d: int, rng: random.Random) -> LinRec:
    p = ring.modulus
    c = [rng.randrange(p) for _ in range(d)]
    c[0] = rng.randrange(1, p)
    return LinRec(ring, c, [rng.randrange(p) for _ in range(d)])


def measure_m_of_d(d: int, cfg: MulConfig, modulus: int = NTT_PRIME) -> int:
    """Multiplications in one product of two degree-d polynomials."""
    R = CountingRing(PrimeField(modulus))
    rng = random.Random(d)
    a = [rng.randrange(1, modulus) for _ in range(d + 1)]
    b = [rng.randrange(1, modulus) for _ in range(d + 1)]
    mul_lists(R, a, b, cfg)
    return R.counter.mul_count


def run_point(algo: str, d: int, N: int, seed: int = 0, modulus: int = NTT_PRIME,
              threshold: int = 32, timing: bool = True) -> BenchRecord:
    runner, backend = ALGORITHMS[algo]
    cfg = MulConfig(backend=backend, threshold=threshold)
    R = CountingRing(PrimeField(modulus))
    rec = random_linrec(R, d, random.Random(f"{seed}:{d}"))
    fs = rational_from_linrec(rec)
    R.reset()
    t0 = time.perf_counter_ns()
    runner(rec, fs, N, cfg)
    elapsed = time.perf_counter_ns() - t0 if timing else 0
    c = R.snapshot()
    return BenchRecord(algo, d, N, c.mul_count, c.add_count, elapsed,
                       measure_m_of_d(d, cfg, modulus))


def run_grid(ds, Ns, algos, seed: int = 0, modulus: int = NTT_PRIME,
             threshold: int = 32, timing: bool = True) -> list[BenchRecord]:
    """One record per (algo, d, N), ordered by that key."""
    for a in algos:
        if a not in ALGORITHMS:
            raise KeyError(f"unknown algorithm {a!r}; choose from {sorted(ALGORITHMS)}")
    points = sorted({(a, d, N) for a in algos for d in ds for N in Ns})
    return [run_point(a, d, N, seed, modulus, threshold, timing) for a, d, N in points]


def write_csv(records, path) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow([f.name for f in fields(BenchRecord)])
        for r in records:
            w.writerow(astuple(r))
