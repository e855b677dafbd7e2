"""Coefficient rings.

Ring elements are plain Python ints kept in canonical form; a ring object
carries the arithmetic.  Kernels work on lists of these ints and report
their operation counts through :meth:`Ring.note`, which is a no-op except
on a :class:`CountingRing`.

:class:`RingElement` is a thin operator-overloading wrapper for interactive
use and for checking that operands share a context.
"""
from __future__ import annotations

from dataclasses import dataclass

import gmpy2

from .errors import NotInvertibleError, RingMismatchError, UnsupportedRootOrderError

__all__ = [
    "Ring",
    "IntegerRing",
    "ModRing",
    "PrimeField",
    "CountingRing",
    "OpCounter",
    "RingElement",
    "ZZ",
    "NTT_PRIME",
    "default_field",
    "ring_mul",
    "ring_inv",
    "counter_snapshot",
]

NTT_PRIME = 998244353  # 119 * 2**23 + 1, primitive root 3


class Ring:
    """Base class.  Subclasses implement ``coerce`` and ``inv``."""

    zero = 0
    one = 1
    is_field = False
    modulus: int | None = None

    def coerce(self, x: int) -> int:
        raise NotImplementedError

    def reduce_all(self, xs) -> list[int]:
        return [self.coerce(x) for x in xs]

    def note(self, muls: int = 0, adds: int = 0, invs: int = 0) -> None:
        """Record operations performed in bulk by a kernel."""

    def add(self, a: int, b: int) -> int:
        self.note(adds=1)
        return self.coerce(a + b)

    def sub(self, a: int, b: int) -> int:
        self.note(adds=1)
        return self.coerce(a - b)

    def neg(self, a: int) -> int:
        self.note(adds=1)
        return self.coerce(-a)

    def mul(self, a: int, b: int) -> int:
        self.note(muls=1)
        return self.coerce(a * b)

    def inv(self, a: int) -> int:
        raise NotImplementedError

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def is_unit(self, a: int) -> bool:
        try:
            self._raw_inv(a)
        except NotInvertibleError:
            return False
        return True

    def _raw_inv(self, a: int) -> int:
        raise NotImplementedError

    def root_of_unity(self, n: int) -> int:
        raise UnsupportedRootOrderError(f"{self!r} has no NTT support")

    def supports_ntt(self, n: int) -> bool:
        return False

    @property
    def base(self) -> "Ring":
        return self

    def __call__(self, x: int) -> "RingElement":
        return RingElement(self, self.coerce(int(x)))


class IntegerRing(Ring):
    """Arbitrary-precision integers.  Only ±1 is invertible."""

    def coerce(self, x: int) -> int:
        return x

    def reduce_all(self, xs) -> list[int]:
        return list(xs)

    def _raw_inv(self, a: int) -> int:
        if a in (1, -1):
            return a
        raise NotInvertibleError(f"{a} is not a unit in ZZ")

    def inv(self, a: int) -> int:
        self.note(invs=1)
        return self._raw_inv(a)

    def __eq__(self, other):
        return type(other) is IntegerRing

    def __hash__(self):
        return hash("ZZ")

    def __repr__(self):
        return "ZZ"


class ModRing(Ring):
    """Z/mZ for any modulus m >= 2; elements live in [0, m)."""

    def __init__(self, m: int):
        if m < 2:
            raise ValueError(f"modulus must be >= 2, got {m}")
        self.modulus = int(m)

    def coerce(self, x: int) -> int:
        return x % self.modulus

    def reduce_all(self, xs) -> list[int]:
        m = self.modulus
        return [x % m for x in xs]

    def _raw_inv(self, a: int) -> int:
        try:
            return pow(a, -1, self.modulus)
        except ValueError:
            raise NotInvertibleError(f"{a} is not invertible mod {self.modulus}") from None

    def inv(self, a: int) -> int:
        self.note(invs=1)
        return self._raw_inv(a)

    def __eq__(self, other):
        return type(other) is type(self) and other.modulus == self.modulus

    def __hash__(self):
        return hash((type(self).__name__, self.modulus))

    def __repr__(self):
        return f"ModRing({self.modulus})"


class PrimeField(ModRing):
    """F_p for a prime p < 2**63, with radix-2 root-of-unity data.

    ``generator`` must be a quadratic non-residue mod p so that
    ``generator ** ((p - 1) >> s)`` has order exactly ``2**s`` where
    ``2**s`` is the largest power of two dividing p - 1.  When omitted,
    the smallest non-residue is used.
    """

    is_field = True

    def __init__(self, p: int, generator: int | None = None):
        if p >= 1 << 63:
            raise ValueError("prime fields are limited to p < 2**63")
        if not gmpy2.is_prime(p):
            raise ValueError(f"{p} is not prime")
        super().__init__(p)
        s = 0
        while (p - 1) >> s & 1 == 0:
            s += 1
        self.two_adicity = s
        if p == 2:
            self.max_root = 1
            return
        if generator is None:
            generator = 2
            while pow(generator, (p - 1) // 2, p) != p - 1:
                generator += 1
        elif pow(generator, (p - 1) // 2, p) != p - 1:
            raise ValueError(f"{generator} is a square mod {p}")
        self.generator = generator
        self.max_root = pow(generator, (p - 1) >> s, p)
        assert pow(self.max_root, 1 << s, p) == 1
        assert s == 0 or pow(self.max_root, 1 << (s - 1), p) != 1

    def supports_ntt(self, n: int) -> bool:
        return n >= 1 and n & (n - 1) == 0 and n.bit_length() - 1 <= self.two_adicity

    def root_of_unity(self, n: int) -> int:
        """Primitive n-th root of unity, n a power of two."""
        if not self.supports_ntt(n):
            raise UnsupportedRootOrderError(
                f"F_{self.modulus} has no primitive root of order {n}"
            )
        k = n.bit_length() - 1
        return pow(self.max_root, 1 << (self.two_adicity - k), self.modulus)

    def __repr__(self):
        return f"PrimeField({self.modulus})"


@dataclass
class OpCounter:
    mul_count: int = 0
    add_count: int = 0
    inv_count: int = 0

    def __sub__(self, other: "OpCounter") -> "OpCounter":
        return OpCounter(
            self.mul_count - other.mul_count,
            self.add_count - other.add_count,
            self.inv_count - other.inv_count,
        )


class CountingRing(Ring):
    """Wraps another ring and counts the operations performed in it.

    Values are identical to the wrapped ring's.  Each counting ring is its
    own context (equality is identity), so do not share one across threads.
    """

    def __init__(self, base: Ring):
        self._base = base
        self.modulus = base.modulus
        self.is_field = base.is_field
        self.counter = OpCounter()

    @property
    def base(self) -> Ring:
        return self._base

    def coerce(self, x):
        return self._base.coerce(x)

    def reduce_all(self, xs):
        return self._base.reduce_all(xs)

    def note(self, muls=0, adds=0, invs=0):
        c = self.counter
        c.mul_count += muls
        c.add_count += adds
        c.inv_count += invs

    def _raw_inv(self, a):
        return self._base._raw_inv(a)

    def inv(self, a):
        self.note(invs=1)
        return self._base._raw_inv(a)

    def supports_ntt(self, n):
        return self._base.supports_ntt(n)

    def root_of_unity(self, n):
        return self._base.root_of_unity(n)

    def snapshot(self) -> OpCounter:
        c = self.counter
        return OpCounter(c.mul_count, c.add_count, c.inv_count)

    def reset(self) -> None:
        self.counter = OpCounter()

    def __repr__(self):
        return f"CountingRing({self._base!r})"


class RingElement:
    """An element bound to its ring, with arithmetic operators."""

    __slots__ = ("ring", "value")

    def __init__(self, ring: Ring, value: int):
        self.ring = ring
        self.value = value

    def _other(self, other) -> int:
        if isinstance(other, RingElement):
            if other.ring != self.ring:
                raise RingMismatchError(f"{self.ring!r} vs {other.ring!r}")
            return other.value
        if isinstance(other, int):
            return self.ring.coerce(other)
        return NotImplemented

    def _wrap(self, v):
        return RingElement(self.ring, v)

    def __add__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.ring.add(self.value, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.ring.sub(self.value, o))

    def __rsub__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.ring.sub(o, self.value))

    def __mul__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.ring.mul(self.value, o))

    __rmul__ = __mul__

    def __neg__(self):
        return self._wrap(self.ring.neg(self.value))

    def inverse(self) -> "RingElement":
        return self._wrap(self.ring.inv(self.value))

    def __truediv__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.ring.div(self.value, o))

    def __eq__(self, other):
        if isinstance(other, RingElement):
            return self.ring == other.ring and self.value == other.value
        if isinstance(other, int):
            return self.value == self.ring.coerce(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.ring, self.value))

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"{self.ring!r}({self.value})"


ZZ = IntegerRing()


def default_field() -> PrimeField:
    return PrimeField(NTT_PRIME, generator=3)


def ring_mul(a: RingElement, b: RingElement) -> RingElement:
    return a * b


def ring_inv(a: RingElement) -> RingElement:
    return a.inverse()


def counter_snapshot(ring: CountingRing) -> OpCounter:
    return ring.snapshot()
