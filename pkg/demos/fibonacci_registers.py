"""F_43 with three registers, and why the loop is so cheap.

Run:  python demos/fibonacci_registers.py
"""
from linrec import ZZ, CountingRing, DensePoly, LinRec, fib_new, fib_pow2, one_term, series_expand

# The Fibonacci generating function is x / (1 - x - x^2).  One Graeffe step
# turns the denominator into 1 - 3x + x^2, and every later step keeps the
# shape 1 - c x + x^2.  So the whole state is (a, b, c).
trace = []
value = fib_new(43, trace=trace)
print(f"F_43 = {value}")
print(f"{'N':>4} {'a':>6} {'b':>8} {'c':>9}")
for s in trace:
    print(f"{s.remaining:>4} {s.a:>6} {s.b:>8} {s.c:>9}")

# At any point the registers still describe the answer.
last = trace[2]
num, den = DensePoly(ZZ, [last.a, last.b]), DensePoly(ZZ, [1, -last.c, 1])
print("\nfinishing from N=5 by naive expansion:", series_expand(num, den, 6)[5])

# Counting products: at most 2 log2(N) - 1.
C = CountingRing(ZZ)
fib_new(43, C)
print(f"products for N=43: {C.snapshot().mul_count}  (bound {2 * 5 - 1})")

# Powers of two need only the b register and the Lucas numbers in c.
for N in (8, 64, 1024):
    C.reset()
    f = fib_pow2(N, C)
    print(f"F_{N}: {C.snapshot().mul_count} products, {f.bit_length()} bits")

# The general machinery gives the same numbers.
print("one_term agrees:", one_term(LinRec(ZZ, [1, 1], [0, 1]), 1024) == fib_pow2(1024))
