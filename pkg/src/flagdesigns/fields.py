"""Small finite fields GF(p^e) with integer-encoded elements.

An element is the integer ``c0 + c1*p + ... + c_{e-1}*p^(e-1)`` of its
polynomial coefficients, so ``0`` and ``1`` are the field's zero and one and
the integer order is the fixed element order used for point enumeration.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product

FIELD_SIZE_CAP = 2 ** 16


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_power(q: int) -> tuple[int, int] | None:
    """Return ``(p, e)`` with ``q == p**e`` for a prime ``p``, else ``None``."""
    if q < 2:
        return None
    p = next(f for f in range(2, q + 1) if q % f == 0)
    e = 0
    while q % p == 0:
        q //= p
        e += 1
    return (p, e) if q == 1 else None


# polynomials over GF(p): coefficient lists, low degree first

def _poly_mod(a: list[int], m: list[int], p: int) -> list[int]:
    a = list(a)
    inv_lead = pow(m[-1], -1, p)
    while len(a) >= len(m):
        coef = a[-1] * inv_lead % p
        shift = len(a) - len(m)
        if coef:
            for i, c in enumerate(m):
                a[shift + i] = (a[shift + i] - coef * c) % p
        a.pop()
        while a and a[-1] == 0:
            a.pop()
    return a


def is_irreducible(coeffs: tuple[int, ...], p: int) -> bool:
    """Exhaustive test: no monic factor of degree 1..deg/2 divides ``coeffs``."""
    deg = len(coeffs) - 1
    if deg < 1:
        return False
    for d in range(1, deg // 2 + 1):
        for low in product(range(p), repeat=d):
            if not _poly_mod(list(coeffs), list(low) + [1], p):
                return False
    return True


def smallest_irreducible(p: int, e: int) -> tuple[int, ...]:
    """Monic irreducible of degree ``e`` with lexicographically least (c0, c1, ...)."""
    for low in product(range(p), repeat=e):
        coeffs = tuple(low) + (1,)
        if is_irreducible(coeffs, p):
            return coeffs
    raise ArithmeticError(f"no irreducible polynomial of degree {e} over GF({p})")


class FiniteField:
    """GF(p^e) with exp/log tables over a primitive element."""

    def __init__(self, p: int, e: int = 1):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        if e < 1:
            raise ValueError("extension degree must be >= 1")
        if p ** e > FIELD_SIZE_CAP:
            raise ValueError(f"field size {p}^{e} exceeds cap {FIELD_SIZE_CAP}")
        self.p = p
        self.e = e
        self.q = p ** e
        self.modulus = smallest_irreducible(p, e) if e > 1 else (0, 1)
        self._build_tables()

    def __repr__(self) -> str:
        return f"GF({self.p}^{self.e})" if self.e > 1 else f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, FiniteField) and (self.p, self.e) == (other.p, other.e)

    def __hash__(self):
        return hash((self.p, self.e))

    def digits(self, a: int) -> list[int]:
        out = []
        for _ in range(self.e):
            a, r = divmod(a, self.p)
            out.append(r)
        return out

    def from_digits(self, ds) -> int:
        a = 0
        for d in reversed(list(ds)):
            a = a * self.p + d
        return a

    def _slow_mul(self, a: int, b: int) -> int:
        da, db = self.digits(a), self.digits(b)
        prod_ = [0] * (2 * self.e - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod_[i + j] = (prod_[i + j] + x * y) % self.p
        return self.from_digits(_poly_mod(prod_, list(self.modulus), self.p) if self.e > 1
                                else [prod_[0] % self.p])

    def _slow_pow(self, a: int, n: int) -> int:
        result = 1
        while n:
            if n & 1:
                result = self._slow_mul(result, a)
            a = self._slow_mul(a, a)
            n >>= 1
        return result

    def _build_tables(self) -> None:
        q = self.q
        order = q - 1
        prime_factors = [f for f in range(2, order + 1) if order % f == 0 and is_prime(f)]
        g = next(g for g in range(1, q)
                 if all(self._slow_pow(g, order // f) != 1 for f in prime_factors))
        powers = [1]
        for _ in range(order - 1):
            powers.append(self._slow_mul(powers[-1], g))
        self.primitive = g
        self._exp = powers + powers
        self._log = [0] * q
        for i, x in enumerate(powers):
            self._log[x] = i
        digits = [self.digits(a) for a in range(q)]
        self._digits = digits
        self._neg = [self.from_digits((-d) % self.p for d in digits[a]) for a in range(q)]

    def add(self, a: int, b: int) -> int:
        if self.e == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        da, db = self._digits[a], self._digits[b]
        return self.from_digits((x + y) % self.p for x, y in zip(da, db))

    def neg(self, a: int) -> int:
        return self._neg[a]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self._neg[b])

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("zero has no inverse")
        return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]

    def pow(self, a: int, n: int) -> int:
        if a == 0:
            return 0 if n > 0 else 1
        return self._exp[(self._log[a] * n) % (self.q - 1)]

    def frobenius(self, a: int) -> int:
        return self.pow(a, self.p)

    def elements(self) -> range:
        return range(self.q)

    def basis(self) -> list[int]:
        """Powers ``1, w, ..., w^(e-1)`` of the primitive element; a GF(p)-basis."""
        return [self._exp[i] for i in range(self.e)] if self.e > 1 else [1]


@lru_cache(maxsize=None)
def field(p: int, e: int = 1) -> FiniteField:
    return FiniteField(p, e)


def field_of_order(q: int) -> FiniteField:
    pe = prime_power(q)
    if pe is None:
        raise ValueError(f"{q} is not a prime power")
    return field(*pe)
