"""Where the constant factors come from.

Counts ring multiplications for the coefficient algorithms on one random
order-64 recurrence over F_998244353 and compares them with the cost m(d)
of a single degree-d product.

Run:  python demos/operation_counts.py
"""
from linrec.bench import run_grid

N = 2 ** 40 - 1
rows = run_grid([64], [N], ["lsb", "msb", "msb_plain", "fiduccia", "modexp_new",
                            "modexp_binary", "new_fiduccia"], seed=1, timing=False)
L = N.bit_length()
m = rows[0].m_of_d
print(f"d=64, N=2^40-1, m(d)={m}, log2 N ~ {L}")
print(f"{'algo':<14} {'mults':>9} {'per bit / m(d)':>15}")
for r in rows:
    print(f"{r.algo:<14} {r.mul_count:>9} {r.mul_count / (L * m):>15.2f}")

# LSB and MSB both sit near 2 m(d) per bit; square-and-multiply sits near 3.
by = {r.algo: r.mul_count for r in rows}
print(f"\nfiduccia / lsb = {by['fiduccia'] / by['lsb']:.3f}")
print(f"msb without middle product / msb = {by['msb_plain'] / by['msb']:.3f}")

# With FFT multiplication, staying in the transform domain saves two thirds.
fft_rows = {r.algo: r for r in run_grid([255], [2 ** 30], ["fft", "lsb_fftmul"], timing=False)}
ratio = fft_rows["fft"].mul_count / fft_rows["lsb_fftmul"].mul_count
print(f"d=255: transform-domain / FFT-multiplied lsb = {ratio:.3f}")
