"""Fibonacci numbers and matrix powers.

``fib_new`` specialises the LSB-first Graeffe loop to 1/(1 - 3x + x^2),
the generating function of the even-indexed Fibonacci numbers.  The
denominator stays of the form 1 - c x + x^2, so the whole state is three
registers (a, b, c) with c running through the Lucas numbers L_{2^k}.
"""
from __future__ import annotations

import math
import operator
from dataclasses import dataclass

from .errors import PreconditionError
from .modexp import ModulusPoly, modexp_new_lists
from .poly import DEFAULT_MUL, DensePoly, MulConfig
from .ring import ZZ, Ring


@dataclass
class FibState:
    """Registers after a halving: F_target = [x^remaining] (a + b x) / (1 - c x + x^2)."""

    a: int
    b: int
    c: int
    remaining: int


def fib_new(N: int, ring: Ring = ZZ, trace: list | None = None) -> int:
    """F_N with at most 2 log2(N) - 1 ring products.

    If ``trace`` is a list, a :class:`FibState` is appended after every
    halving of N.
    """
    if N < 0:
        raise PreconditionError(f"N must be non-negative, got {N}")
    R = ring
    if N < 2:
        return R.coerce(N)
    c = R.coerce(3)
    a, b = (R.coerce(1), R.coerce(-1)) if N & 1 else (R.coerce(0), R.coerce(1))
    N >>= 1
    if trace is not None:
        trace.append(FibState(a, b, c, N))
    while N > 1:
        if N & 1:
            a = R.add(b, R.mul(a, c))
        else:
            b = R.add(a, R.mul(b, c))
        c = R.sub(R.mul(c, c), 2)
        N >>= 1
        if trace is not None:
            trace.append(FibState(a, b, c, N))
    return R.add(b, R.mul(a, c))


def fib_pow2(N: int, ring: Ring = ZZ) -> int:
    """F_N for N = 2^m, using exactly 2m - 3 products when m >= 2."""
    if N < 2 or N & (N - 1):
        raise PreconditionError(f"N must be a power of two >= 2, got {N}")
    R = ring
    if N == 2:
        return R.coerce(1)
    b, c = R.coerce(1), R.coerce(3)
    N >>= 1
    while N > 2:
        b = R.mul(b, c)
        c = R.sub(R.mul(c, c), 2)
        N >>= 1
    return R.mul(b, c)


# -- matrices ------------------------------------------------------------------


class SquareMatrix:
    """Dense n x n matrix over a ring, row-major."""

    __slots__ = ("ring", "rows")

    def __init__(self, ring: Ring, rows):
        rows = [[ring.coerce(int(x)) for x in r] for r in rows]
        n = len(rows)
        if n < 1 or any(len(r) != n for r in rows):
            raise PreconditionError("matrix must be square with n >= 1")
        self.ring = ring
        self.rows = rows

    @classmethod
    def _raw(cls, ring: Ring, rows) -> "SquareMatrix":
        m = cls.__new__(cls)
        m.ring = ring
        m.rows = rows
        return m

    @classmethod
    def identity(cls, ring: Ring, n: int) -> "SquareMatrix":
        return cls._raw(ring, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, ring: Ring, n: int) -> "SquareMatrix":
        return cls._raw(ring, [[0] * n for _ in range(n)])

    @property
    def n(self) -> int:
        return len(self.rows)

    def __matmul__(self, other: "SquareMatrix") -> "SquareMatrix":
        R, n = self.ring, self.n
        cols = list(zip(*other.rows))
        R.note(muls=n ** 3, adds=n * n * (n - 1))
        mul = operator.mul
        return SquareMatrix._raw(
            R, [[R.coerce(sum(map(mul, row, col))) for col in cols] for row in self.rows]
        )

    def __add__(self, other: "SquareMatrix") -> "SquareMatrix":
        R = self.ring
        R.note(adds=self.n ** 2)
        return SquareMatrix._raw(
            R, [R.reduce_all(map(operator.add, r, s)) for r, s in zip(self.rows, other.rows)]
        )

    def scale(self, c: int) -> "SquareMatrix":
        R = self.ring
        R.note(muls=self.n ** 2)
        return SquareMatrix._raw(R, [R.reduce_all([c * x for x in r]) for r in self.rows])

    def __eq__(self, other):
        if not isinstance(other, SquareMatrix):
            return NotImplemented
        return self.ring == other.ring and self.rows == other.rows

    def __repr__(self):
        return f"SquareMatrix({self.ring!r}, {self.rows})"


def _hessenberg(R: Ring, H: list) -> None:
    # similarity transforms in place; pivot by row/column swaps
    n = len(H)
    for m in range(1, n - 1):
        piv = next((i for i in range(m, n) if H[i][m - 1]), None)
        if piv is None:
            continue
        if piv != m:
            H[piv], H[m] = H[m], H[piv]
            for row in H:
                row[piv], row[m] = row[m], row[piv]
        tinv = R.inv(H[m][m - 1])
        for i in range(m + 1, n):
            u = R.mul(H[i][m - 1], tinv)
            if not u:
                continue
            # row_i -= u row_m, then col_m += u col_i
            H[i] = R.reduce_all([x - u * y for x, y in zip(H[i], H[m])])
            for row in H:
                row[m] = R.coerce(row[m] + u * row[i])
            R.note(muls=2 * n, adds=2 * n)


def char_poly(m: SquareMatrix) -> DensePoly:
    """det(x I - M), monic of degree n."""
    R, n = m.ring, m.n
    if not R.is_field:
        raise PreconditionError(f"char_poly needs a field, got {R!r}")
    H = [list(r) for r in m.rows]
    _hessenberg(R, H)
    # p[k] = characteristic polynomial of the leading k x k block
    p = [[1]]
    for k in range(1, n + 1):
        nxt = [0] + p[k - 1]
        hk = H[k - 1][k - 1]
        for j, c in enumerate(p[k - 1]):
            nxt[j] -= hk * c
        prod = 1
        for i in range(1, k):
            prod = R.coerce(prod * H[k - i][k - i - 1])
            t = R.coerce(H[k - i - 1][k - 1] * prod)
            if t:
                for j, c in enumerate(p[k - i - 1]):
                    nxt[j] -= t * c
        p.append(R.reduce_all(nxt))
    return DensePoly.from_raw(R, p[n])


def poly_at_matrix(coeffs, m: SquareMatrix) -> SquareMatrix:
    """sum coeffs[i] M^i by Paterson-Stockmeyer with block size ceil(sqrt(len))."""
    R, n = m.ring, m.n
    L = len(coeffs)
    if L == 0:
        return SquareMatrix.zero(R, n)
    s = math.isqrt(L - 1) + 1
    pows = [SquareMatrix.identity(R, n), m]
    while len(pows) <= s:
        pows.append(pows[-1] @ m)
    giant = pows[s]

    def block(j):
        acc = SquareMatrix.zero(R, n)
        for i, c in enumerate(coeffs[j * s:(j + 1) * s]):
            if c:
                acc = acc + pows[i].scale(c)
        return acc

    t = -(-L // s)
    out = block(t - 1)
    for j in range(t - 2, -1, -1):
        out = out @ giant + block(j)
    return out


def matrix_pow(m: SquareMatrix, N: int, cfg: MulConfig = DEFAULT_MUL) -> SquareMatrix:
    """M^N as rho(M) with rho = x^N mod the characteristic polynomial."""
    if N < 0:
        raise PreconditionError(f"N must be non-negative, got {N}")
    rho = modexp_new_lists(ModulusPoly(char_poly(m)), N, cfg)
    return poly_at_matrix(rho, m)


def matrix_pow_binary(m: SquareMatrix, N: int) -> SquareMatrix:
    if N < 0:
        raise PreconditionError(f"N must be non-negative, got {N}")
    if N == 0:
        return SquareMatrix.identity(m.ring, m.n)
    result = m
    for bit in bin(N)[3:]:
        result = result @ result
        if bit == "1":
            result = result @ m
    return result
