"""Graeffe steps without leaving the NTT domain.

Q(-x) is a rotation of the transform vector, the even and odd parts come
from an inverse butterfly, and doubling the length costs two half-size
transforms.  one_coeff_fft chains these so P and Q are never converted
back to coefficients.

Run:  python demos/transform_domain.py
"""
import random

from linrec import (
    DensePoly,
    RationalSeries,
    default_field,
    dft_double,
    dft_forward,
    dft_halve_odd,
    one_coeff_fft,
    one_coeff_lsb,
    poly_alternate,
    poly_odd_part,
)

F = default_field()
rng = random.Random(2)
q = DensePoly(F, [rng.randrange(100) for _ in range(6)])

k = 3
qh = dft_forward(q, k).values
qm = dft_forward(poly_alternate(q), k).values
print("Q(-x) is a half rotation:", qm == qh[4:] + qh[:4])

u = DensePoly(F, [rng.randrange(100) for _ in range(8)])
v = dft_forward(u, k)
print("odd part from the transform:", dft_halve_odd(v) == dft_forward(poly_odd_part(u), k - 1))
print("doubling matches a direct transform:", dft_double(v) == dft_forward(u, k + 1))

f = RationalSeries(DensePoly(F, [3, 1, 4]), DensePoly(F, [1, 5, 9, 2]))
N = 10 ** 18
print(f"\n[x^N] P/Q for N = 10^18: {one_coeff_fft(f, N)} (lsb: {one_coeff_lsb(f, N)})")
