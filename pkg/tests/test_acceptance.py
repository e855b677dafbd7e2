"""Acceptance gate: ten criteria, each with its own time budget.

Run with ``pytest tests/test_acceptance.py``; the terminal summary lists
one PASS/FAIL line per criterion.
"""
import io
import random
import time

from linrec import (
    NTT_PRIME,
    ZZ,
    CountingRing,
    DensePoly,
    LinRec,
    ModRing,
    ModulusPoly,
    PrimeField,
    RationalSeries,
    SquareMatrix,
    char_poly,
    dft_double,
    dft_forward,
    dft_halve_even,
    dft_halve_odd,
    dft_inverse,
    fiduccia_term,
    fib_new,
    fib_pow2,
    initial_segment_naive,
    matrix_pow,
    matrix_pow_binary,
    modexp_binary,
    modexp_new,
    new_fiduccia_slice,
    one_coeff_fft,
    one_coeff_lsb,
    one_coeff_msb,
    one_term,
    poly_alternate,
    poly_at_matrix,
    poly_even_part,
    poly_odd_part,
    rational_from_linrec,
    series_expand,
)
from linrec.bench import measure_m_of_d, random_linrec
from linrec.cli import run
from linrec.poly import MulConfig

P = NTT_PRIME
KARA = MulConfig("karatsuba", threshold=32)
FFT = MulConfig("fft")


class Budget:
    def __init__(self, seconds):
        self.seconds = seconds

    def __enter__(self):
        self.t0 = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.t0
        if exc[0] is None:
            assert self.elapsed < self.seconds, f"took {self.elapsed:.2f}s, budget {self.seconds}s"


def log_ceil(N):
    # ceil(log2(N + 1))
    return N.bit_length()


def test_criterion_1_golden_value():
    with Budget(1.0):
        F = PrimeField(P)
        fib_zz = LinRec(ZZ, [1, 1], [0, 1])
        fib_f = RationalSeries(DensePoly(F, [0, 1]), DensePoly(F, [1, -1, -1]))
        routes = {
            "fib_new": fib_new(43),
            "one_term": one_term(fib_zz, 43),
            "one_coeff_lsb": one_coeff_lsb(fib_f, 43),
            "one_coeff_msb": one_coeff_msb(fib_f, 43),
            "one_coeff_fft": one_coeff_fft(fib_f, 43),
            "fiduccia_term": fiduccia_term(fib_zz, 43),
        }
        out = io.StringIO()
        assert run(["fib", "-N", "43"], out=out) == 0
        routes["cli"] = int(out.getvalue())
    assert routes == {k: 433494437 for k in routes}


def test_criterion_2_oracle_equivalence():
    rng = random.Random(20240502)
    F = PrimeField(P)
    with Budget(30.0):
        for i in range(500):
            R = F if i % 2 == 0 else ModRing(rng.randrange(3, 1 << 62, 2))
            d = rng.randint(1, 16)
            N = rng.randint(0, 10 ** 4)
            rec = LinRec(R, [rng.randrange(R.modulus) for _ in range(d)],
                         [rng.randrange(R.modulus) for _ in range(d)])
            f = rational_from_linrec(rec)
            want = series_expand(f.num, f.den, N + 1)[N]
            got = [one_coeff_lsb(f, N), one_coeff_msb(f, N), fiduccia_term(rec, N)]
            if R.is_field:
                got.append(one_coeff_fft(f, N))
            assert got == [want] * len(got), (i, d, N, R)


def test_criterion_3_lsb_count_bound():
    F = PrimeField(P)
    with Budget(10.0):
        for d in (8, 64, 256):
            C = CountingRing(F)
            f = rational_from_linrec(random_linrec(C, d, random.Random(d)))
            m = measure_m_of_d(d, KARA)
            for N in (2 ** 20 - 1, 2 ** 40 - 1):
                C.reset()
                one_coeff_lsb(f, N, KARA)
                L = log_ceil(N)
                bound = 2 * m * L + m + 4 * d * L
                assert C.snapshot().mul_count <= bound, (d, N, C.snapshot().mul_count, bound)


def test_criterion_4_fiduccia_ratio():
    F = PrimeField(P)
    with Budget(10.0):
        C = CountingRing(F)
        rec = random_linrec(C, 64, random.Random(4))
        f = rational_from_linrec(rec)
        N = 2 ** 40 - 1
        C.reset()
        fiduccia_term(rec, N, KARA)
        fid = C.snapshot().mul_count
        C.reset()
        one_coeff_lsb(f, N, KARA)
        lsb = C.snapshot().mul_count
    assert 1.3 <= fid / lsb <= 1.7, fid / lsb


def test_criterion_5_fft_ratio():
    F = PrimeField(P)
    with Budget(10.0):
        C = CountingRing(F)
        f = rational_from_linrec(random_linrec(C, 255, random.Random(5)))
        N = 2 ** 30
        C.reset()
        one_coeff_fft(f, N)
        fft = C.snapshot().mul_count
        C.reset()
        one_coeff_lsb(f, N, FFT)
        lsb = C.snapshot().mul_count
    assert 0.28 <= fft / lsb <= 0.45, fft / lsb


def test_criterion_6_modexp():
    F = PrimeField(P)
    rng = random.Random(6)
    with Budget(20.0):
        for _ in range(200):
            d = rng.randint(1, 32)
            g = [rng.randrange(P) for _ in range(d)] + [1]
            m = ModulusPoly(DensePoly(F, g))
            N = rng.randint(0, 2 ** 40)
            assert modexp_new(m, N) == modexp_binary(m, N)
        C = CountingRing(F)
        d, N = 64, 2 ** 40 - 1
        m = ModulusPoly(DensePoly(C, [rng.randrange(P) for _ in range(d)] + [1]))
        C.reset()
        modexp_new(m, N, KARA)
        md = measure_m_of_d(d, KARA)
        L = log_ceil(N)
        assert C.snapshot().mul_count <= 2 * md * L + md + 4 * d * L


def test_criterion_7_new_fiduccia_slice():
    F = PrimeField(P)
    rng = random.Random(7)
    with Budget(20.0):
        for _ in range(300):
            d = rng.randint(1, 16)
            N = rng.randint(0, 10 ** 4)
            rec = LinRec(F, [rng.randrange(P) for _ in range(d)], [rng.randrange(P) for _ in range(d)])
            seq = initial_segment_naive(rec, N + d)
            s = new_fiduccia_slice(rec, N)
            assert s.start_index == N and s.values == seq[N:N + d]


def test_criterion_8_dft_properties():
    F = PrimeField(P)
    rng = random.Random(8)

    def poly(n):
        return DensePoly(F, [rng.randrange(P) for _ in range(n)])

    with Budget(10.0):
        for _ in range(300):
            k = rng.randint(0, 12)
            a = poly(rng.randint(0, 1 << k))
            assert dft_inverse(dft_forward(a, k)) == a
        for _ in range(300):
            k = rng.randint(0, 11)
            a = poly(rng.randint(0, 1 << k))
            assert dft_double(dft_forward(a, k)) == dft_forward(a, k + 1)
        for _ in range(300):
            k = rng.randint(1, 12)
            u = poly(rng.randint(0, 1 << k))
            v = dft_forward(u, k)
            assert dft_halve_even(v) == dft_forward(poly_even_part(u), k - 1)
            assert dft_halve_odd(v) == dft_forward(poly_odd_part(u), k - 1)
        for _ in range(300):
            k = rng.randint(1, 12)
            n, h = 1 << k, 1 << (k - 1)
            q = poly(rng.randint(0, n))
            qh = dft_forward(q, k).values
            qm = dft_forward(poly_alternate(q), k).values
            assert qm == [qh[y ^ h] for y in range(n)]


def test_criterion_9_matrix_powering():
    F = PrimeField(P)
    rng = random.Random(9)
    with Budget(30.0):
        for _ in range(100):
            n = rng.randint(1, 12)
            dense = rng.random() < 0.7
            M = SquareMatrix(F, [[rng.randrange(P) if dense or rng.random() < 0.3 else 0
                                  for _ in range(n)] for _ in range(n)])
            N = rng.randint(0, 2 ** 30)
            assert matrix_pow(M, N) == matrix_pow_binary(M, N)
            if n <= 8:
                assert poly_at_matrix(char_poly(M).coeffs, M) == SquareMatrix.zero(F, n)


def test_criterion_10_fib_pow2_counts():
    with Budget(1.0):
        for N in (8, 64, 1024):
            C = CountingRing(ZZ)
            assert fib_pow2(N, C) == fib_new(N)
            assert C.snapshot().mul_count == 2 * (N.bit_length() - 1) - 3
