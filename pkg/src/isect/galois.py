"""GF(p^d) arithmetic backing the projective-plane constructions.

Field elements are integers 0..q-1 encoding coefficient vectors in base p:
the element sum(c_i * alpha^i) is stored as sum(c_i * p**i).  The reduction
polynomial is the lexicographically smallest monic irreducible of degree d,
comparing coefficient tuples low-degree-first, which makes every field (and
everything built on top of one) byte-reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .arith import prime_power
from .errors import InputError


def _poly_divmod(a: list[int], b: list[int], p: int) -> tuple[list[int], list[int]]:
    # b monic; coefficient lists low-to-high, trailing zeros allowed
    a = a[:]
    db, da = len(b) - 1, len(a) - 1
    while da >= 0 and a[da] == 0:
        da -= 1
    q = [0] * max(da - db + 1, 0)
    for i in range(da - db, -1, -1):
        c = a[i + db] % p
        if c:
            q[i] = c
            for j, bj in enumerate(b):
                a[i + j] = (a[i + j] - c * bj) % p
    return q, [v % p for v in a[:db]] if db > 0 else []


def _poly_mul(a, b, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return out


def _is_irreducible(poly: list[int], p: int) -> bool:
    # trial division by every monic polynomial of degree 1..deg//2
    deg = len(poly) - 1
    for d in range(1, deg // 2 + 1):
        for tail in product(range(p), repeat=d):
            divisor = list(tail) + [1]
            _, rem = _poly_divmod(poly, divisor, p)
            if not any(rem):
                return False
    return True


@dataclass(frozen=True)
class FiniteField:
    """GF(p^d) with exact element arithmetic on integer-encoded elements."""

    p: int
    d: int
    reduction: tuple[int, ...]  # monic, low-to-high, length d+1

    @property
    def q(self) -> int:
        return self.p**self.d

    def elements(self) -> range:
        return range(self.q)

    def _decode(self, a: int) -> list[int]:
        coeffs = []
        for _ in range(self.d):
            a, c = divmod(a, self.p)
            coeffs.append(c)
        return coeffs

    def _encode(self, coeffs) -> int:
        out = 0
        for c in reversed(list(coeffs)):
            out = out * self.p + c % self.p
        return out

    def _check(self, *xs: int):
        for x in xs:
            if not 0 <= x < self.q:
                raise InputError(f"element {x} outside GF({self.q})")

    def add(self, a: int, b: int) -> int:
        self._check(a, b)
        ca, cb = self._decode(a), self._decode(b)
        return self._encode((x + y) % self.p for x, y in zip(ca, cb))

    def neg(self, a: int) -> int:
        self._check(a)
        return self._encode((-c) % self.p for c in self._decode(a))

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        self._check(a, b)
        if self.d == 1:
            return a * b % self.p
        prod_ = _poly_mul(self._decode(a), self._decode(b), self.p)
        _, rem = _poly_divmod(prod_, list(self.reduction), self.p)
        rem += [0] * (self.d - len(rem))
        return self._encode(rem)

    def pow(self, a: int, e: int) -> int:
        self._check(a)
        if e < 0:
            return self.pow(self.inv(a), -e)
        result, base = 1, a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def inv(self, a: int) -> int:
        self._check(a)
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return self.pow(a, self.q - 2)


@lru_cache(maxsize=None)
def gf(q: int) -> FiniteField:
    """The field of order q (q a prime power, q <= 2**16), deterministic."""
    if not isinstance(q, int) or not 2 <= q <= 2**16:
        raise InputError(f"field order must be an integer in 2..65536, got {q!r}")
    decomposition = prime_power(q)
    if decomposition is None:
        raise InputError(f"{q} is not a prime power")
    p, d = decomposition
    for tail in product(range(p), repeat=d):
        poly = list(tail) + [1]
        if d == 1 or _is_irreducible(poly, p):
            return FiniteField(p, d, tuple(poly))
    raise AssertionError(f"no irreducible polynomial found for GF({q})")
