"""x^N mod Gamma, and the recurrence-term algorithms built on it.

``modexp_new`` gets x^N mod Gamma from a slice of 1/Q where Q is the
reversal of Gamma: with u the window a_{N-d+1}..a_N of 1/Q and
v = u*Q mod x^d, the remainder is the reversal of v.  It inherits the
slice's cost of two size-d products per bit of N.

``modexp_binary`` is the classical square-and-multiply in R[x]/(Gamma)
with division by Newton-precomputed inverse reversal, about three
size-d products per squaring.
"""
from __future__ import annotations

import operator
from dataclasses import dataclass, field

from .errors import PreconditionError
from .kernel import LinRec, SequenceSlice, _slice
from .poly import (
    DEFAULT_MUL,
    DensePoly,
    MulConfig,
    inverse_lists,
    middle_lists,
    mul_lists,
    short_mul_lists,
)
from .ring import Ring


@dataclass
class ModulusPoly:
    """Gamma = x^v * core with core(0) != 0 and an invertible leading coefficient."""

    gamma: DensePoly
    d: int = field(init=False)
    v: int = field(init=False)

    def __post_init__(self):
        g = self.gamma
        if g.degree < 1:
            raise PreconditionError("modulus must have degree >= 1")
        self.d = int(g.degree)
        if not g.ring.is_unit(g[self.d]):
            raise PreconditionError(f"leading coefficient {g[self.d]} is not invertible")
        v = 0
        while g[v] == 0:
            v += 1
        self.v = v

    @property
    def ring(self) -> Ring:
        return self.gamma.ring

    @property
    def gamma_core(self) -> DensePoly:
        return DensePoly.from_raw(self.ring, self.gamma.coeffs[self.v:self.d + 1])

    def monic_list(self) -> list:
        """Coefficients of Gamma / lc(Gamma), length d + 1."""
        R, d = self.ring, self.d
        g = self.gamma.padded(d + 1)
        if g[d] == 1:
            return g
        lcinv = R.inv(g[d])
        R.note(muls=d)
        return R.reduce_all([x * lcinv for x in g[:d]]) + [1]


def _monomial_list(N: int, d: int) -> list:
    out = [0] * d
    out[N] = 1
    return out


def _modexp_core(R: Ring, g: list, d: int, N: int, cfg: MulConfig) -> list:
    # g monic of length d + 1; its reversal q has q(0) = 1
    if N < d:
        return _monomial_list(N, d)
    q = g[::-1]
    u = _slice(R, q, d, N, cfg)
    v = short_mul_lists(R, u, q, d, cfg)
    return v[::-1]


def modexp_new_lists(m: ModulusPoly, N: int, cfg: MulConfig = DEFAULT_MUL) -> list:
    """Coefficients of x^N mod Gamma, exactly d of them."""
    if N < 0:
        raise PreconditionError(f"N must be non-negative, got {N}")
    R, d, v = m.ring, m.d, m.v
    if N < d:
        return _monomial_list(N, d)
    g = m.monic_list()
    if v == 0:
        return _modexp_core(R, g, d, N, cfg)
    # x^N = x^v * x^(N-v) and x^v * (. mod core) stays below degree d
    dc = d - v
    if dc == 0:
        return [0] * d
    return [0] * v + _modexp_core(R, g[v:], dc, N - v, cfg)


def modexp_new(m: ModulusPoly, N: int, cfg: MulConfig = DEFAULT_MUL) -> DensePoly:
    return DensePoly.from_raw(m.ring, modexp_new_lists(m, N, cfg))


# -- square and multiply -----------------------------------------------------


def _modexp_binary_lists(R: Ring, g: list, d: int, N: int, cfg: MulConfig) -> list:
    if N == 0:
        return _monomial_list(0, d)
    low = g[:d]
    # rev(Gamma)^-1 mod x^(d-1): quotients of a degree 2d-2 square have d-1 terms
    ginv = inverse_lists(R, g[::-1], d - 1, cfg)

    def times_x(r):
        top = r[-1]
        shifted = [0] + r[:-1]
        R.note(muls=d, adds=d)
        return R.reduce_all([a - top * b for a, b in zip(shifted, low)])

    def square(r):
        s = mul_lists(R, r, r, cfg)
        s += [0] * (2 * d - 1 - len(s))
        if d == 1:
            return s
        qrev = short_mul_lists(R, s[:d - 1:-1], ginv, d - 1, cfg)
        t = short_mul_lists(R, qrev[::-1], low, d, cfg)
        R.note(adds=d)
        return R.reduce_all([a - b for a, b in zip(s[:d], t)])

    r = times_x(_monomial_list(0, d))
    for bit in bin(N)[3:]:
        r = square(r)
        if bit == "1":
            r = times_x(r)
    return r


def modexp_binary_lists(m: ModulusPoly, N: int, cfg: MulConfig = DEFAULT_MUL) -> list:
    if N < 0:
        raise PreconditionError(f"N must be non-negative, got {N}")
    return _modexp_binary_lists(m.ring, m.monic_list(), m.d, N, cfg)


def modexp_binary(m: ModulusPoly, N: int, cfg: MulConfig = DEFAULT_MUL) -> DensePoly:
    return DensePoly.from_raw(m.ring, modexp_binary_lists(m, N, cfg))


# -- recurrences ---------------------------------------------------------------


def fiduccia_term(rec: LinRec, N: int, cfg: MulConfig = DEFAULT_MUL) -> int:
    """u_N as <x^N mod Gamma, (u_0..u_{d-1})>, powering by square-and-multiply."""
    if N < 0:
        raise PreconditionError(f"N must be non-negative, got {N}")
    if N < rec.d:
        return rec.init[N]
    R, d = rec.ring, rec.d
    g = rec.characteristic().padded(d + 1)
    rho = _modexp_binary_lists(R, g, d, N, cfg)
    R.note(muls=d, adds=d - 1)
    return R.coerce(sum(map(operator.mul, rho, rec.init)))


def initial_segment_naive(rec: LinRec, n: int) -> list:
    """u_0..u_{n-1} by direct unrolling."""
    R, d = rec.ring, rec.d
    out = list(rec.init[:n])
    c = rec.c
    for k in range(d, n):
        R.note(muls=d, adds=d - 1)
        out.append(R.coerce(sum(map(operator.mul, c, out[k - d:k]))))
    return out


def initial_segment(rec: LinRec, n: int, cfg: MulConfig = DEFAULT_MUL) -> list:
    """u_0..u_{n-1}, extended d terms at a time.

    Each block is one middle product of Q against the previous block
    (giving minus the next numerator) and one short product with 1/Q.
    """
    R, d = rec.ring, rec.d
    if n <= d:
        return list(rec.init[:n])
    q = rec.denominator_list()
    qinv = inverse_lists(R, q, d, cfg)
    out = list(rec.init)
    t = list(rec.init)
    while len(out) < n:
        h = middle_lists(R, q, t, d, cfg)
        R.note(adds=d)
        t = short_mul_lists(R, R.reduce_all([-x for x in h]), qinv, d, cfg)
        out.extend(t)
    return out[:n]


def new_fiduccia_slice(rec: LinRec, N: int, align: str = "start",
                       cfg: MulConfig = DEFAULT_MUL) -> SequenceSlice:
    """d consecutive terms: u_N..u_{N+d-1} (align="start") or u_{N-d+1}..u_N ("end")."""
    if align not in ("start", "end"):
        raise PreconditionError(f"align must be 'start' or 'end', got {align!r}")
    R, d = rec.ring, rec.d
    start = N if align == "start" else N - d + 1
    if start < 0:
        raise PreconditionError(f"window starting at {start} has negative indices")
    if start < d:
        return SequenceSlice(start, initial_segment(rec, start + d, cfg)[start:])
    g = rec.characteristic().padded(d + 1)
    rho = _modexp_core(R, g, d, start, cfg) if g[0] else modexp_new_lists(
        ModulusPoly(rec.characteristic()), start, cfg)
    u = initial_segment(rec, 2 * d - 1, cfg)
    # x^d rho(1/x) has coefficient rho_{d-j} at x^j
    return SequenceSlice(start, middle_lists(R, [0] + rho[::-1], u, d, cfg))

