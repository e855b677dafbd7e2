"""Dense univariate polynomials over a :class:`~linrec.ring.Ring`.

Two layers live here.  The ``*_lists`` functions work on plain coefficient
lists (low degree first) and are what the algorithms call in their inner
loops.  :class:`DensePoly` and the ``poly_*`` functions wrap them with
validation and a ring reference.

Operation counts are reported structurally: a schoolbook product of
lengths n and m always notes n*m multiplications, whatever the values.
"""
from __future__ import annotations

import operator
from dataclasses import dataclass

from .errors import NotInvertibleError, PreconditionError, RingMismatchError
from .ring import Ring

NEG_INF = float("-inf")

BACKENDS = ("schoolbook", "karatsuba", "fft")


@dataclass(frozen=True)
class MulConfig:
    """Multiplication backend.  Karatsuba recurses while length >= threshold."""

    backend: str = "karatsuba"
    threshold: int = 32

    def __post_init__(self):
        if self.backend not in BACKENDS:
            raise ValueError(f"unknown backend {self.backend!r}")
        if self.threshold < 2:
            raise ValueError("karatsuba threshold must be >= 2")


DEFAULT_MUL = MulConfig()


# -- list kernels -----------------------------------------------------------


def _school(R: Ring, a, b):
    n, m = len(a), len(b)
    if not n or not m:
        return []
    c = [0] * (n + m - 1)
    for i, ai in enumerate(a):
        c[i:i + m] = [x + ai * y for x, y in zip(c[i:i + m], b)]
    R.note(muls=n * m, adds=(n - 1) * (m - 1))
    return R.reduce_all(c)


def _kara(R: Ring, a, b, thr):
    n = len(a)
    if n < thr or n < 2:
        return _school(R, a, b)
    m = (n + 1) // 2
    h = n - m
    a0, a1 = a[:m], a[m:]
    b0, b1 = b[:m], b[m:]
    p0 = _kara(R, a0, b0, thr)
    p2 = _kara(R, a1, b1, thr)
    sa = R.reduce_all([x + y for x, y in zip(a0, a1)] + a0[h:])
    sb = R.reduce_all([x + y for x, y in zip(b0, b1)] + b0[h:])
    p1 = _kara(R, sa, sb, thr)
    mid = [x - y for x, y in zip(p1, p0)]
    for i, y in enumerate(p2):
        mid[i] -= y
    c = p0 + [0] * (2 * n - 1 - len(p0))
    for i, y in enumerate(mid):
        c[m + i] += y
    for i, y in enumerate(p2):
        c[2 * m + i] += y
    R.note(adds=2 * h + (2 * m - 1) + (2 * h - 1) + (m - 1) + min(m - 1, 2 * h - 1))
    return R.reduce_all(c)


def _school_t(R: Ring, a, c):
    # out[k] = sum_i a[i] * c[i + k], len(c) == 2 * len(a) - 1
    n = len(a)
    mul = operator.mul
    out = [sum(map(mul, a, c[k:k + n])) for k in range(n)]
    R.note(muls=n * n, adds=n * (n - 1))
    return R.reduce_all(out)


def _kara_t(R: Ring, a, c, thr):
    """Transpose of :func:`_kara` with respect to its second operand."""
    n = len(a)
    if n < thr or n < 2:
        return _school_t(R, a, c)
    m = (n + 1) // 2
    h = n - m
    a0, a1 = a[:m], a[m:]
    s = R.reduce_all([x + y for x, y in zip(a0, a1)] + a0[h:])
    cm = c[m:3 * m - 1]
    alpha = _kara_t(R, s, cm, thr)
    beta = _kara_t(R, a0, R.reduce_all([x - y for x, y in zip(c[:2 * m - 1], cm)]), thr)
    gamma = _kara_t(
        R, a1, R.reduce_all([x - y for x, y in zip(c[2 * m:2 * m + 2 * h - 1], cm)]), thr
    )
    out = [x + y for x, y in zip(alpha, beta)] + [x + y for x, y in zip(alpha, gamma)]
    R.note(adds=h + (2 * m - 1) + (2 * h - 1) + m + h)
    return R.reduce_all(out)


def mul_lists(R: Ring, a, b, cfg: MulConfig = DEFAULT_MUL) -> list:
    """Full product of two coefficient lists (length len(a)+len(b)-1)."""
    if not a or not b:
        return []
    if cfg.backend == "schoolbook":
        return _school(R, a, b)
    if cfg.backend == "fft":
        from .ntt import fft_mul_lists

        return fft_mul_lists(R, a, b)
    if len(a) > len(b):
        a, b = b, a
    n, m = len(a), len(b)
    if m < cfg.threshold:
        return _school(R, a, b)
    if 2 * n >= m:
        if n < m:
            a = list(a) + [0] * (m - n)
        return _kara(R, list(a), list(b), cfg.threshold)[: n + m - 1]
    c = [0] * (n + m - 1)
    for start in range(0, m, n):
        part = mul_lists(R, a, b[start:start + n], cfg)
        for i, y in enumerate(part):
            c[start + i] += y
        if start:
            R.note(adds=n - 1)
    return R.reduce_all(c)


def short_mul_lists(R: Ring, a, b, n: int, cfg: MulConfig = DEFAULT_MUL) -> list:
    """First n coefficients of a*b, zero padded to length n."""
    c = mul_lists(R, a[:n], b[:n], cfg)[:n]
    return c + [0] * (n - len(c))


def middle_lists(R: Ring, q, s, d: int, cfg: MulConfig = DEFAULT_MUL) -> list:
    """Coefficients d..2d-1 of q*s for len(q) <= d+1 and len(s) <= 2d."""
    if d == 0:
        return []
    q = list(q) + [0] * (d + 1 - len(q))
    s = list(s) + [0] * (2 * d - len(s))
    if cfg.backend == "fft":
        from .ntt import cyclic_middle_lists

        return cyclic_middle_lists(R, q, s, d)
    rev = q[d - 1::-1]
    tail = s[1:]
    if cfg.backend == "schoolbook" or d < cfg.threshold:
        out = _school_t(R, rev, tail)
    else:
        out = _kara_t(R, rev, tail, cfg.threshold)
    top = q[d]
    if top:
        out = R.reduce_all([x + top * y for x, y in zip(out, s)])
        R.note(muls=d, adds=d)
    return out


def alternate_lists(R: Ring, a) -> list:
    """Coefficients of a(-x)."""
    out = list(a)
    out[1::2] = R.reduce_all([-x for x in a[1::2]])
    R.note(adds=len(out[1::2]))
    return out


def inverse_lists(R: Ring, q, n: int, cfg: MulConfig = DEFAULT_MUL) -> list:
    """Power series inverse of q modulo x^n by Newton iteration."""
    if n <= 0:
        return []
    if not q:
        raise NotInvertibleError("series with zero constant term")
    t = [R.inv(q[0])]
    prec = 1
    while prec < n:
        nxt = min(2 * prec, n)
        e = short_mul_lists(R, q, t, nxt, cfg)[prec:nxt]
        corr = short_mul_lists(R, t, e, nxt - prec, cfg)
        t = t + R.reduce_all([-x for x in corr])
        R.note(adds=nxt - prec)
        prec = nxt
    return t


def expand_lists(R: Ring, p, q, n: int) -> list:
    """First n coefficients of p/q by unrolling u_k = (p_k - sum q_i u_{k-i}) / q_0."""
    if n <= 0:
        return []
    if not q:
        raise NotInvertibleError("zero denominator")
    q0inv = R.inv(q[0])
    tail = list(q[1:])
    dq = len(tail)
    rtail = tail[::-1]
    out: list = []
    mul = operator.mul
    for k in range(n):
        pk = p[k] if k < len(p) else 0
        j = min(k, dq)
        acc = sum(map(mul, rtail[dq - j:], out[k - j:k])) if j else 0
        out.append(R.coerce((pk - acc) * q0inv))
        R.note(muls=j + 1, adds=j)
    return out


def _trim(c: list) -> list:
    n = len(c)
    while n and c[n - 1] == 0:
        n -= 1
    return c[:n]


# -- DensePoly --------------------------------------------------------------


class DensePoly:
    """Polynomial with coefficients ``coeffs[i]`` of x**i.

    Trailing zeros may be stored; equality and ``degree`` ignore them.
    The zero polynomial has degree ``-inf``.
    """

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: Ring, coeffs=()):
        self.ring = ring
        self.coeffs = [ring.coerce(int(c)) for c in coeffs]

    @classmethod
    def from_raw(cls, ring: Ring, coeffs) -> "DensePoly":
        p = cls.__new__(cls)
        p.ring = ring
        p.coeffs = list(coeffs)
        return p

    @classmethod
    def monomial(cls, ring: Ring, k: int, c: int = 1) -> "DensePoly":
        return cls(ring, [0] * k + [c])

    @property
    def degree(self):
        c = self.coeffs
        for i in range(len(c) - 1, -1, -1):
            if c[i] != 0:
                return i
        return NEG_INF

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def padded(self, n: int) -> list:
        """Coefficient list of exactly length n (truncating only zeros)."""
        c = self.coeffs
        if len(c) > n and any(c[n:]):
            raise PreconditionError(f"degree {self.degree} does not fit in {n} coefficients")
        return c[:n] + [0] * (n - len(c))

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def _check(self, other: "DensePoly"):
        if not isinstance(other, DensePoly):
            return False
        if other.ring != self.ring:
            raise RingMismatchError(f"{self.ring!r} vs {other.ring!r}")
        return True

    def __eq__(self, other):
        if isinstance(other, DensePoly):
            return self.ring == other.ring and _trim(self.coeffs) == _trim(other.coeffs)
        return NotImplemented

    def __hash__(self):
        return hash((self.ring, tuple(_trim(self.coeffs))))

    def __add__(self, other):
        if not self._check(other):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        a, b = a + [0] * (n - len(a)), b + [0] * (n - len(b))
        return DensePoly.from_raw(self.ring, self.ring.reduce_all(map(operator.add, a, b)))

    def __neg__(self):
        return DensePoly.from_raw(self.ring, self.ring.reduce_all([-x for x in self.coeffs]))

    def __sub__(self, other):
        if not self._check(other):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return DensePoly(self.ring, [c * other for c in self.coeffs])
        if not self._check(other):
            return NotImplemented
        return poly_mul(self, other)

    __rmul__ = __mul__

    def __call__(self, t: int) -> int:
        """Evaluate at t by Horner's rule."""
        R = self.ring
        acc = 0
        for c in reversed(self.coeffs):
            acc = R.coerce(acc * t + c)
        return acc

    def __repr__(self):
        return f"DensePoly({self.ring!r}, {_trim(self.coeffs)})"


def _same_ring(*polys: DensePoly) -> Ring:
    R = polys[0].ring
    for p in polys[1:]:
        if p.ring != R:
            raise RingMismatchError(f"{R!r} vs {p.ring!r}")
    return R


def poly_mul(a: DensePoly, b: DensePoly, cfg: MulConfig = DEFAULT_MUL) -> DensePoly:
    R = _same_ring(a, b)
    return DensePoly.from_raw(R, mul_lists(R, _trim(a.coeffs), _trim(b.coeffs), cfg))


def poly_middle_product(q: DensePoly, s: DensePoly, d: int,
                        cfg: MulConfig = DEFAULT_MUL) -> DensePoly:
    """Coefficients d..2d-1 of q*s, for deg q <= d and deg s <= 2d-1."""
    R = _same_ring(q, s)
    if q.degree > d or s.degree > 2 * d - 1:
        raise PreconditionError(
            f"middle product needs deg q <= {d} and deg s <= {2 * d - 1}, "
            f"got {q.degree} and {s.degree}"
        )
    return DensePoly.from_raw(R, middle_lists(R, q.padded(d + 1), s.padded(2 * d), d, cfg))


def poly_alternate(a: DensePoly) -> DensePoly:
    return DensePoly.from_raw(a.ring, alternate_lists(a.ring, a.coeffs))


def poly_even_part(a: DensePoly) -> DensePoly:
    return DensePoly.from_raw(a.ring, a.coeffs[0::2])


def poly_odd_part(a: DensePoly) -> DensePoly:
    return DensePoly.from_raw(a.ring, a.coeffs[1::2])


def poly_reversal(a: DensePoly, d: int) -> DensePoly:
    """x^d * a(1/x)."""
    return DensePoly.from_raw(a.ring, a.padded(d + 1)[::-1])


def poly_divrem(a: DensePoly, g: DensePoly) -> tuple[DensePoly, DensePoly]:
    """Schoolbook Euclidean division a = q*g + r with deg r < deg g."""
    R = _same_ring(a, g)
    gc = _trim(g.coeffs)
    if not gc:
        raise ZeroDivisionError("division by the zero polynomial")
    dg = len(gc) - 1
    lcinv = R.inv(gc[-1])
    r = list(_trim(a.coeffs))
    if len(r) <= dg:
        return DensePoly.from_raw(R, []), DensePoly.from_raw(R, r)
    quo = [0] * (len(r) - dg)
    for i in range(len(r) - 1, dg - 1, -1):
        coef = R.mul(r[i], lcinv)
        quo[i - dg] = coef
        base = i - dg
        r[base:i + 1] = R.reduce_all([x - coef * y for x, y in zip(r[base:i + 1], gc)])
        R.note(muls=dg + 1, adds=dg + 1)
    return DensePoly.from_raw(R, quo), DensePoly.from_raw(R, r[:dg])


def series_inverse(q: DensePoly, n: int, cfg: MulConfig = DEFAULT_MUL) -> DensePoly:
    """t with t*q = 1 mod x^n."""
    R = q.ring
    if not R.is_unit(q[0]):
        raise NotInvertibleError(f"constant term {q[0]} is not invertible")
    return DensePoly.from_raw(R, inverse_lists(R, q.padded(max(n, len(q.coeffs)))[:n], n, cfg))


def series_expand(p: DensePoly, q: DensePoly, n: int) -> list[int]:
    """First n coefficients of p/q, computed naively in O(n deg q)."""
    R = _same_ring(p, q)
    if not R.is_unit(q[0]):
        raise NotInvertibleError(f"constant term {q[0]} is not invertible")
    return expand_lists(R, p.coeffs, _trim(q.coeffs) or [0], n)
