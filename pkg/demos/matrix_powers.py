"""M^N through the characteristic polynomial.

By Cayley-Hamilton, M^N = rho(M) where rho = x^N mod char_poly(M).  Only
the polynomial part depends on N; the matrix work is a fixed
Paterson-Stockmeyer evaluation of about 2 sqrt(n) products.

Run:  python demos/matrix_powers.py
"""
import random

from linrec import CountingRing, SquareMatrix, char_poly, default_field, matrix_pow, matrix_pow_binary

F = default_field()
M = SquareMatrix(F, [[1, 1], [1, 0]])
print("Fibonacci matrix to the 10th:", matrix_pow(M, 10).rows)

rng = random.Random(0)
n = 10
C = CountingRing(F)
A = SquareMatrix(C, [[rng.randrange(100) for _ in range(n)] for _ in range(n)])
print(f"\nchar poly of a random {n}x{n} matrix, low degree first:")
print(char_poly(A).coeffs)

N = 2 ** 60 + 12345
C.reset()
fast = matrix_pow(A, N)
cost_fast = C.snapshot().mul_count
C.reset()
slow = matrix_pow_binary(A, N)
cost_slow = C.snapshot().mul_count
print(f"\nM^N for N ~ 2^60: equal={fast == slow}")
print(f"  via char poly: {cost_fast} mults; binary powering: {cost_slow} mults")
