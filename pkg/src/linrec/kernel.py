"""N-th coefficient of a rational power series P/Q.

LSB-first (``one_coeff_lsb``): repeatedly rewrite P/Q as
P(x)Q(-x) / Q(x)Q(-x); the denominator is even, so keeping only the even
or odd part of the numerator (by the parity of N) halves N while the
degree of Q stays put.

MSB-first (``slice_coeff_msb``): the transpose of the above.  It returns
the window a_{N-d+1}..a_N of 1/Q, from which any numerator's N-th
coefficient is a length-d inner product.

``one_coeff_fft`` runs the LSB loop without ever leaving the transform
domain: Q(-x) is an index rotation and the even/odd parts come from
inverse butterflies, so each step costs two transform doublings.

Inside the algorithms P is always stored with exactly d coefficients and
Q with d + 1, so degree drops (e.g. c_0 = 0) never change the cost.
"""
from __future__ import annotations

import operator
from dataclasses import dataclass, field

from .errors import PreconditionError, UnsupportedRootOrderError
from .ntt import dft_lists, double_lists, halve_even_lists, halve_odd_lists
from .poly import (
    DEFAULT_MUL,
    DensePoly,
    MulConfig,
    alternate_lists,
    middle_lists,
    mul_lists,
    short_mul_lists,
)
from .ring import Ring


@dataclass
class RationalSeries:
    """P/Q in R[[x]] with Q(0) invertible and deg P < deg Q."""

    num: DensePoly
    den: DensePoly
    d: int = field(init=False)

    def __post_init__(self):
        if self.num.ring != self.den.ring:
            raise PreconditionError("numerator and denominator live in different rings")
        if not self.den.ring.is_unit(self.den[0]):
            raise PreconditionError(f"Q(0) = {self.den[0]} is not invertible")
        dq = self.den.degree
        self.d = int(dq)
        if not self.num.degree < dq:
            raise PreconditionError(f"need deg P < deg Q, got {self.num.degree} >= {dq}")

    @property
    def ring(self) -> Ring:
        return self.den.ring


@dataclass
class LinRec:
    """u_{n+d} = c_{d-1} u_{n+d-1} + ... + c_0 u_n with initial terms u_0..u_{d-1}."""

    ring: Ring
    c: list
    init: list

    def __post_init__(self):
        if len(self.c) < 1 or len(self.c) != len(self.init):
            raise PreconditionError(
                f"need d >= 1 coefficients and as many initial terms, "
                f"got {len(self.c)} and {len(self.init)}"
            )
        self.c = [self.ring.coerce(int(x)) for x in self.c]
        self.init = [self.ring.coerce(int(x)) for x in self.init]

    @property
    def d(self) -> int:
        return len(self.c)

    def characteristic(self) -> DensePoly:
        """x^d - sum c_i x^i."""
        return DensePoly(self.ring, [-x for x in self.c] + [1])

    def denominator_list(self) -> list:
        """Reversal of the characteristic polynomial: 1 - c_{d-1} x - ... - c_0 x^d."""
        return [1] + self.ring.reduce_all([-x for x in reversed(self.c)])


@dataclass
class SequenceSlice:
    """values[i] is the term of index start_index + i (negative indices hold 0)."""

    start_index: int
    values: list


def rational_from_linrec(rec: LinRec, cfg: MulConfig = DEFAULT_MUL) -> RationalSeries:
    R = rec.ring
    q = rec.denominator_list()
    p = short_mul_lists(R, rec.init, q, rec.d, cfg)
    return RationalSeries(DensePoly.from_raw(R, p), DensePoly.from_raw(R, q))


def linrec_from_rational(f: RationalSeries) -> LinRec:
    """Recurrence of order d = deg Q with the first d terms of P/Q."""
    from .poly import expand_lists

    R, d = f.ring, f.d
    q = f.den.padded(d + 1)
    q0inv = R.inv(q[0])
    c = R.reduce_all([-q[d - i] * q0inv for i in range(d)])
    return LinRec(R, c, expand_lists(R, f.num.coeffs, q, d))


def _check_n(N: int) -> None:
    if N < 0:
        raise PreconditionError(f"N must be non-negative, got {N}")


# -- LSB-first ---------------------------------------------------------------


def graeffe_step(f: RationalSeries, parity, cfg: MulConfig = DEFAULT_MUL) -> RationalSeries:
    """(U_e or U_o, V) with U = P(x)Q(-x) and V(x^2) = Q(x)Q(-x).

    [x^N] P/Q equals [x^(N//2)] of the result when ``parity`` is N mod 2.
    """
    if parity in ("even", "odd"):
        parity = 0 if parity == "even" else 1
    R, d = f.ring, f.d
    p, q = f.num.padded(d), f.den.padded(d + 1)
    qm = alternate_lists(R, q)
    u = mul_lists(R, p, qm, cfg)
    u += [0] * (2 * d - len(u))
    v = mul_lists(R, q, qm, cfg)[0::2]
    return RationalSeries(DensePoly.from_raw(R, u[parity::2]), DensePoly.from_raw(R, v))


def _lsb(R: Ring, p: list, q: list, d: int, N: int, cfg: MulConfig):
    while N >= 1:
        qm = alternate_lists(R, q)
        u = mul_lists(R, p, qm, cfg)
        u += [0] * (2 * d - len(u))
        p = u[N & 1::2]
        q = mul_lists(R, q, qm, cfg)[0::2]
        N >>= 1
    return R.mul(p[0] if p else 0, R.inv(q[0]))


def one_coeff_lsb(f: RationalSeries, N: int, cfg: MulConfig = DEFAULT_MUL) -> int:
    """[x^N] P/Q using ceil(log2(N+1)) Graeffe steps."""
    _check_n(N)
    d = f.d
    return _lsb(f.ring, f.num.padded(d), f.den.padded(d + 1), d, N, cfg)


def one_term(rec: LinRec, N: int, cfg: MulConfig = DEFAULT_MUL) -> int:
    """u_N of a linear recurrence, through its generating function."""
    _check_n(N)
    if N < rec.d:
        return rec.init[N]
    R, d = rec.ring, rec.d
    q = rec.denominator_list()
    p = short_mul_lists(R, rec.init, q, d, cfg)
    return _lsb(R, p, q, d, N, cfg)


# -- MSB-first ---------------------------------------------------------------


def _slice(R: Ring, q: list, d: int, N: int, cfg: MulConfig, middle: bool = True) -> list:
    # descent: remember Q(-x) at every level, then climb back up the bits of N
    levels = []
    n = N
    while n > 0:
        qm = alternate_lists(R, q)
        levels.append((qm, n & 1))
        q = mul_lists(R, q, qm, cfg)[0::2]
        n >>= 1
    w = [0] * (d - 1) + [R.inv(q[0])]
    for qm, odd in reversed(levels):
        s = [0] * (2 * d)
        if odd:
            s[0::2] = w
        else:
            s[1::2] = w
        if middle:
            w = middle_lists(R, qm, s, d, cfg)
        else:
            b = mul_lists(R, qm, s, cfg)
            w = (b + [0] * (2 * d - len(b)))[d:2 * d]
    return w


def slice_coeff_msb(q: DensePoly, N: int, d: int | None = None,
                    cfg: MulConfig = DEFAULT_MUL, middle: bool = True) -> SequenceSlice:
    """The d coefficients a_{N-d+1}..a_N of 1/Q (d defaults to deg Q).

    ``middle=False`` replaces each middle product with a full product, for
    measuring what the middle product saves.
    """
    _check_n(N)
    R = q.ring
    if not R.is_unit(q[0]):
        raise PreconditionError(f"Q(0) = {q[0]} is not invertible")
    if d is None:
        d = int(q.degree)
    if d < 1:
        raise PreconditionError("slice needs d >= 1")
    return SequenceSlice(N - d + 1, _slice(R, q.padded(d + 1), d, N, cfg, middle))


def _dot_reversed(R: Ring, p: list, w: list) -> int:
    # p_0 w_{d-1} + ... + p_{d-1} w_0
    d = len(p)
    R.note(muls=d, adds=max(0, d - 1))
    return R.coerce(sum(map(operator.mul, p, reversed(w))))


def one_coeff_msb(f: RationalSeries, N: int, cfg: MulConfig = DEFAULT_MUL,
                  middle: bool = True) -> int:
    _check_n(N)
    R, d = f.ring, f.d
    if d == 0:
        return 0
    w = _slice(R, f.den.padded(d + 1), d, N, cfg, middle)
    return _dot_reversed(R, f.num.padded(d), w)


def many_coeff_msb(nums, q: DensePoly, N: int, cfg: MulConfig = DEFAULT_MUL,
                   middle: bool = True) -> list:
    """[x^N] P_j/Q for every numerator, sharing one slice computation."""
    _check_n(N)
    R = q.ring
    d = int(q.degree)
    for j, p in enumerate(nums):
        if p.ring != R:
            raise PreconditionError(f"numerator {j} is over a different ring")
        if not p.degree < d:
            raise PreconditionError(f"numerator {j} has degree {p.degree} >= {d}")
    if not R.is_unit(q[0]):
        raise PreconditionError(f"Q(0) = {q[0]} is not invertible")
    if d == 0:
        return [0] * len(nums)
    w = _slice(R, q.padded(d + 1), d, N, cfg, middle)
    return [_dot_reversed(R, p.padded(d), w) for p in nums]


# -- transform domain --------------------------------------------------------


def fft_length(d: int) -> int:
    """Smallest power of two n with n >= 2d + 1."""
    n = 1
    while n < 2 * d + 1:
        n *= 2
    return n


def one_coeff_fft(f: RationalSeries, N: int) -> int:
    """[x^N] P/Q with P and Q kept as length-n transforms throughout."""
    _check_n(N)
    R, d = f.ring, f.d
    n = fft_length(d)
    if not R.supports_ntt(n):
        raise UnsupportedRootOrderError(f"{R!r} has no primitive root of order {n}")
    h = n // 2
    p = R.modulus
    ph = dft_lists(R, f.num.padded(d), n)
    qh = dft_lists(R, f.den.padded(d + 1), n)
    while N >= 1:
        # Q(-x) has transform qh[y ^ h]
        u = [a * b % p for a, b in zip(ph, qh[h:] + qh[:h])]
        R.note(muls=n)
        u = halve_odd_lists(R, u) if N & 1 else halve_even_lists(R, u)
        ph = double_lists(R, u)
        v = [a * b % p for a, b in zip(qh[:h], qh[h:])]
        R.note(muls=h)
        qh = double_lists(R, v)
        N >>= 1
    R.note(adds=2 * (n - 1))
    return R.mul(sum(ph) % p, R.inv(sum(qh) % p))
