"""x^N mod Gamma from a slice of 1/Q, and d terms for the price of one.

Run:  python demos/modexp_and_slices.py
"""
from linrec import (
    DensePoly,
    LinRec,
    ModulusPoly,
    default_field,
    initial_segment,
    modexp_binary,
    modexp_new,
    new_fiduccia_slice,
    poly_divrem,
    slice_coeff_msb,
)

F = default_field()

# Gamma = x^3 - 2x^2 - x + 5.  Its reversal Q = 1 - 2x - x^2 + 5x^3.
gamma = DensePoly(F, [5, -1, -2, 1])
m = ModulusPoly(gamma)
N = 10 ** 15
print("x^N mod Gamma (new):   ", modexp_new(m, N))
print("x^N mod Gamma (binary):", modexp_binary(m, N))

# The slice behind it: three consecutive coefficients of 1/Q ending at N.
Q = DensePoly(F, [1, -2, -1, 5])
print("a_{N-2..N} of 1/Q:", slice_coeff_msb(Q, N).values)

# Small N can be checked by long division.
print("N=20 by division:", poly_divrem(DensePoly.monomial(F, 20), gamma)[1])
print("N=20 by slices:  ", modexp_new(m, 20))

# A zero constant term is handled by splitting off x^v.
m0 = ModulusPoly(DensePoly(F, [0, 0, 3, 1]))
print(f"\nGamma = x^3 + 3x^2 has v={m0.v}; x^50 mod Gamma =", modexp_new(m0, 50))

# A recurrence u_{n+3} = u_{n+2} - 2u_{n+1} + 5u_n: the window u_N..u_{N+2}.
rec = LinRec(F, [5, -2, 1], [1, 0, 2])
print("\nfirst terms:", initial_segment(rec, 10))
print("window at 10^15:", new_fiduccia_slice(rec, N).values)
print("same window, ending at N:", new_fiduccia_slice(rec, N + 2, align="end").values)
