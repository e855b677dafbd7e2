"""Radix-2 number-theoretic transforms over NTT-friendly prime fields.

Convention: the length-n transform of A holds ``values[y] = A(w**-y)``
where ``w`` is the field's primitive n-th root of unity.  Public vectors
are in natural order.

Cost accounting (all via ``Ring.note``): a forward or unscaled inverse
transform of length n notes (n/2)*log2(n) multiplications, trivial
twiddles included, and n*log2(n) additions.  Divisions by 2 or n are
multiplications by cached inverses and are counted; twiddle and inverse
tables are data and are not.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import PreconditionError, UnsupportedRootOrderError
from .poly import DensePoly, _same_ring, _trim
from .ring import Ring


def _log2(n: int) -> int:
    return n.bit_length() - 1


def _check_length(R: Ring, n: int) -> None:
    if n < 1 or n & (n - 1):
        raise PreconditionError(f"transform length {n} is not a power of two")
    if not R.supports_ntt(n):
        raise UnsupportedRootOrderError(f"{R!r} has no primitive root of order {n}")


@lru_cache(maxsize=None)
def _bitrev(n: int) -> tuple:
    k = _log2(n)
    rev = [0] * n
    for i in range(1, n):
        rev[i] = (rev[i >> 1] >> 1) | ((i & 1) << (k - 1))
    return tuple(rev)


@lru_cache(maxsize=None)
def _stages(p: int, base: int, n: int) -> tuple:
    """Per-stage twiddle lists for a DIT transform with kernel root ``base``."""
    out = []
    h = 1
    while h < n:
        w = pow(base, n // (2 * h), p)
        tw = [1] * h
        for j in range(1, h):
            tw[j] = tw[j - 1] * w % p
        out.append(tuple(tw))
        h *= 2
    return tuple(out)


def _transform(R: Ring, a, n: int, base: int) -> list:
    p = R.modulus
    a = list(a) + [0] * (n - len(a))
    x = [a[r] for r in _bitrev(n)]
    h = 1
    for tw in _stages(p, base, n):
        size = 2 * h
        if h >= n // size:
            for k in range(0, n, size):
                lo = x[k:k + h]
                t = [w * o % p for w, o in zip(tw, x[k + h:k + size])]
                x[k:k + h] = [(u + v) % p for u, v in zip(lo, t)]
                x[k + h:k + size] = [(u - v) % p for u, v in zip(lo, t)]
        else:
            for j in range(h):
                w = tw[j]
                lo = x[j::size]
                t = [w * o % p for o in x[j + h::size]]
                x[j::size] = [(u + v) % p for u, v in zip(lo, t)]
                x[j + h::size] = [(u - v) % p for u, v in zip(lo, t)]
        h = size
    k = _log2(n)
    R.note(muls=(n // 2) * k, adds=n * k)
    return x


def dft_lists(R: Ring, a, n: int) -> list:
    """values[y] = a(w_n^-y) for y < n; requires len(a) <= n."""
    _check_length(R, n)
    if len(a) > n:
        raise PreconditionError(f"{len(a)} coefficients do not fit length {n}")
    w = R.root_of_unity(n)
    return _transform(R, a, n, pow(w, -1, R.modulus))


def idft_lists(R: Ring, v, scale: bool = True) -> list:
    """Inverse transform; ``scale=False`` omits the final 1/n factor."""
    n = len(v)
    _check_length(R, n)
    out = _transform(R, v, n, R.root_of_unity(n))
    if scale:
        p = R.modulus
        ninv = pow(n, -1, p)
        out = [x * ninv % p for x in out]
        R.note(muls=n)
    return out


@lru_cache(maxsize=None)
def _double_scale(p: int, w2n: int, n: int) -> tuple:
    # w_{2n}^{-i} / n, fused so doubling spends n multiplications here
    step = pow(w2n, -1, p)
    c = pow(n, -1, p)
    out = []
    for _ in range(n):
        out.append(c)
        c = c * step % p
    return tuple(out)


@lru_cache(maxsize=None)
def _odd_scale(p: int, wn: int, h: int) -> tuple:
    # w_n^y / 2 for y < n/2
    c = pow(2, -1, p)
    out = []
    for _ in range(h):
        out.append(c)
        c = c * wn % p
    return tuple(out)


def double_lists(R: Ring, v) -> list:
    """Length-2n transform from a length-n transform of a polynomial of degree < n."""
    n = len(v)
    _check_length(R, 2 * n)
    p = R.modulus
    a = _transform(R, v, n, R.root_of_unity(n))
    scale = _double_scale(p, R.root_of_unity(2 * n), n)
    b = [x * s % p for x, s in zip(a, scale)]
    R.note(muls=n)
    bh = dft_lists(R, b, n)
    out = [0] * (2 * n)
    out[0::2] = v
    out[1::2] = bh
    return out


def halve_even_lists(R: Ring, v) -> list:
    n = len(v)
    if n < 2:
        raise PreconditionError("cannot halve a length-1 transform")
    h = n // 2
    p = R.modulus
    inv2 = pow(2, -1, p)
    R.note(muls=h, adds=h)
    return [(x + y) * inv2 % p for x, y in zip(v[:h], v[h:])]


def halve_odd_lists(R: Ring, v) -> list:
    n = len(v)
    if n < 2:
        raise PreconditionError("cannot halve a length-1 transform")
    h = n // 2
    p = R.modulus
    tw = _odd_scale(p, R.root_of_unity(n), h)
    R.note(muls=h, adds=h)
    return [(x - y) * t % p for x, y, t in zip(v[:h], v[h:], tw)]


def _pow2_at_least(m: int) -> int:
    return 1 << max(0, (m - 1).bit_length())


def fft_mul_lists(R: Ring, a, b) -> list:
    if not a or not b:
        return []
    m = len(a) + len(b) - 1
    n = _pow2_at_least(m)
    _check_length(R, n)
    fa = dft_lists(R, a, n)
    fb = dft_lists(R, b, n)
    p = R.modulus
    prod = [x * y % p for x, y in zip(fa, fb)]
    R.note(muls=n)
    return idft_lists(R, prod)[:m]


def cyclic_middle_lists(R: Ring, q, s, d: int) -> list:
    """Coefficients d..2d-1 of q*s (len q <= d+1, len s <= 2d) via one cyclic product.

    With cyclic length n >= 2d, wrap-around only lands on indices below d.
    """
    n = _pow2_at_least(2 * d)
    _check_length(R, n)
    fq = dft_lists(R, q, n)
    fs = dft_lists(R, s, n)
    p = R.modulus
    prod = [x * y % p for x, y in zip(fq, fs)]
    R.note(muls=n)
    return idft_lists(R, prod)[d:2 * d]


# -- public API -------------------------------------------------------------


@dataclass
class DftVector:
    """Transform values of a polynomial at the powers w**-y of an n-th root w."""

    ring: Ring
    values: list

    def __post_init__(self):
        _check_length(self.ring, len(self.values))

    @property
    def n(self) -> int:
        return len(self.values)

    @property
    def root(self) -> int:
        return self.ring.root_of_unity(self.n)


def dft_forward(a: DensePoly, k: int) -> DftVector:
    R = a.ring
    n = 1 << k
    c = _trim(a.coeffs)
    if len(c) > n:
        raise PreconditionError(f"degree {a.degree} needs a transform longer than {n}")
    return DftVector(R, dft_lists(R, c, n))


def dft_inverse(v: DftVector) -> DensePoly:
    return DensePoly.from_raw(v.ring, idft_lists(v.ring, v.values))


def dft_double(v: DftVector) -> DftVector:
    return DftVector(v.ring, double_lists(v.ring, v.values))


def dft_halve_even(v: DftVector) -> DftVector:
    return DftVector(v.ring, halve_even_lists(v.ring, v.values))


def dft_halve_odd(v: DftVector) -> DftVector:
    return DftVector(v.ring, halve_odd_lists(v.ring, v.values))


def fft_poly_mul(a: DensePoly, b: DensePoly) -> DensePoly:
    R = _same_ring(a, b)
    return DensePoly.from_raw(R, fft_mul_lists(R, _trim(a.coeffs), _trim(b.coeffs)))
