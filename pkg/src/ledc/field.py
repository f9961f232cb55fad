"""Prime-field arithmetic.

Field elements are plain Python ints kept as canonical residues in
[0, q-1]; a PrimeField instance carries the modulus. All helpers reduce
eagerly so equality of elements is plain integer equality.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DivisionByZero, NotPrime

# An element of GF(q), always a canonical residue in [0, q-1].
Felt = int

MAX_Q = 2**31 - 1


def _is_prime(q: int) -> bool:
    if q < 2:
        return False
    if q % 2 == 0:
        return q == 2
    d = 3
    while d * d <= q:
        if q % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class PrimeField:
    """Arithmetic context for GF(q), q prime."""

    q: int

    def __post_init__(self) -> None:
        if not (2 <= self.q <= MAX_Q):
            raise NotPrime(f"field order must be in [2, 2^31-1], got {self.q}")
        if not _is_prime(self.q):
            raise NotPrime(f"{self.q} is not prime")

    def reduce(self, a: int) -> Felt:
        return a % self.q


def make_field(q: int) -> PrimeField:
    """Return the GF(q) context; raises NotPrime for composite q."""
    return PrimeField(q)


def add(f: PrimeField, a: Felt, b: Felt) -> Felt:
    return (a + b) % f.q


def sub(f: PrimeField, a: Felt, b: Felt) -> Felt:
    return (a - b) % f.q


def mul(f: PrimeField, a: Felt, b: Felt) -> Felt:
    return (a * b) % f.q


def neg(f: PrimeField, a: Felt) -> Felt:
    return (-a) % f.q


def inv(f: PrimeField, a: Felt) -> Felt:
    """Multiplicative inverse by the extended Euclidean algorithm."""
    a %= f.q
    if a == 0:
        raise DivisionByZero("0 has no multiplicative inverse")
    # Invariant: old_s * a == old_r (mod q).
    old_r, r = a, f.q
    old_s, s = 1, 0
    while r != 0:
        quot = old_r // r
        old_r, r = r, old_r - quot * r
        old_s, s = s, old_s - quot * s
    return old_s % f.q


def pow(f: PrimeField, a: Felt, e: int) -> Felt:
    """a^e for e >= 0 by square-and-multiply; 0^0 is defined as 1."""
    if e < 0:
        raise ValueError("negative exponent; invert the base first")
    result = 1
    base = a % f.q
    while e:
        if e & 1:
            result = result * base % f.q
        base = base * base % f.q
        e >>= 1
    return result


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


def is_primitive(f: PrimeField, w: Felt) -> bool:
    """True iff w has multiplicative order exactly q - 1."""
    w %= f.q
    if w == 0:
        return False
    if f.q == 2:
        return w == 1
    group = f.q - 1
    return all(pow(f, w, group // p) != 1 for p in _prime_factors(group))


def find_primitive(f: PrimeField) -> Felt:
    """Smallest generator of the multiplicative group of GF(q).

    The smallest candidate is chosen so that constructed matrices are
    reproducible across runs and implementations.
    """
    if f.q == 2:
        return 1
    group = f.q - 1
    factors = _prime_factors(group)
    for g in range(2, f.q):
        if all(pow(f, g, group // p) != 1 for p in factors):
            return g
    raise AssertionError("no primitive element found; field order not prime?")
