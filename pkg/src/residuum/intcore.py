"""Exact integer arithmetic primitives: primality, divisors, classical
two-square and Pythagorean decompositions.

All operations take nonnegative integers in the 64-bit range and reject
anything outside it instead of wrapping. Intermediate products are computed
with Python's exact integers, so they never lose precision. Everything here
is a pure function and safe to call from concurrent workers.

``ExactRational`` is the exact fraction type used by the identity checks in
the decomposition and diophantine modules: always in lowest terms, positive
denominator, exact equality. The stdlib ``fractions.Fraction`` satisfies
that contract verbatim and is re-exported under the contract name.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt

ExactRational = Fraction

U64_MAX = 2**64 - 1

# Deterministic Miller-Rabin witnesses: this fixed base set decides
# primality correctly for every n < 3.3 * 10^24, far beyond 64 bits.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


class PreconditionError(ValueError):
    """Violated operation precondition, with a stable ``code`` per condition."""

    def __init__(self, code: str, message: str):
        super().__init__(f"{code}: {message}")
        self.code = code


def check_u64(n: int, name: str = "n") -> int:
    """Validate that ``n`` is a nonnegative integer within 64 bits."""
    if not isinstance(n, int) or isinstance(n, bool):
        raise PreconditionError("not-integer", f"{name} must be an integer, got {type(n).__name__}")
    if n < 0:
        raise PreconditionError("negative", f"{name} must be nonnegative, got {n}")
    if n > U64_MAX:
        raise OverflowError(f"{name}={n} exceeds the 64-bit range")
    return n


def is_prime(n: int) -> bool:
    """Deterministic primality test for the full 64-bit range.

    Small cases are settled by trial against the witness bases; everything
    else runs Miller-Rabin with a fixed base set that is provably exact for
    n < 2^64. No randomness is involved, so verdicts are reproducible.
    """
    check_u64(n)
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def prime_sieve(limit: int) -> bytearray:
    """Sieve of Eratosthenes: byte ``s[i] == 1`` iff ``i`` is prime, i <= limit."""
    check_u64(limit, "limit")
    s = bytearray([1]) * (limit + 1)
    s[0:2] = b"\x00" * min(2, limit + 1)
    for p in range(2, isqrt(limit) + 1):
        if s[p]:
            s[p * p :: p] = b"\x00" * len(s[p * p :: p])
    return s


_SIEVE = bytearray(b"\x00\x00\x01\x01")  # shared cache, grown on demand
_SIEVE_CAP = 10**7


def cached_sieve(limit: int) -> bytearray:
    """Return a sieve covering at least ``limit`` (kept module-global).

    Growth replaces the whole buffer, so concurrent readers always see a
    consistent sieve; a duplicated rebuild under races is harmless.
    """
    global _SIEVE
    if limit >= len(_SIEVE):
        _SIEVE = prime_sieve(max(limit, 2 * len(_SIEVE)))
    return _SIEVE


def is_prime_small(n: int) -> bool:
    """Sieve-backed primality for desk-scale n; falls back to is_prime above the cache cap."""
    if n <= _SIEVE_CAP:
        return bool(cached_sieve(n)[n])
    return is_prime(n)


def divisors(n: int) -> list[int]:
    """All positive divisors of ``n`` in increasing order, by trial division."""
    check_u64(n)
    if n == 0:
        raise PreconditionError("zero", "0 has no divisor list")
    small = []
    large = []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
    return small + large[::-1]


@dataclass(frozen=True, slots=True)
class TwoSquaresRep:
    """One representation n = a^2 + b^2 with a >= b >= 0."""

    n: int
    a: int
    b: int

    def __post_init__(self):
        if self.a * self.a + self.b * self.b != self.n or not self.a >= self.b >= 0:
            raise ValueError(f"not a two-squares representation: {self}")


def two_squares(n: int) -> list[TwoSquaresRep]:
    """Every (a, b) with a >= b >= 0 and a^2 + b^2 = n, ascending in a.

    Scans b over [0, isqrt(n/2)] and keeps b where n - b^2 is a perfect
    square; empty when no representation exists. b = 0 is included (for
    example 25 = 5^2 + 0^2); callers needing b >= 1 filter explicitly.
    """
    check_u64(n)
    reps = []
    b = 0
    while 2 * b * b <= n:
        a2 = n - b * b
        a = isqrt(a2)
        if a * a == a2:
            reps.append(TwoSquaresRep(n, a, b))
        b += 1
    reps.sort(key=lambda r: r.a)
    return reps


def pythagorean_from(M: int, N: int) -> tuple[int, int, int]:
    """Primitive Pythagorean triple (2MN, M^2 - N^2, M^2 + N^2).

    Requires M > N >= 1, gcd(M, N) = 1 and opposite parity; each violated
    condition raises a PreconditionError with its own code. The returned
    triple satisfies leg1^2 + leg2^2 = hyp^2 exactly and is primitive.
    """
    check_u64(M, "M")
    check_u64(N, "N")
    if N < 1:
        raise PreconditionError("n-zero", "N must be >= 1")
    if not M > N:
        raise PreconditionError("order", f"need M > N, got M={M}, N={N}")
    if gcd(M, N) != 1:
        raise PreconditionError("not-coprime", f"gcd({M}, {N}) = {gcd(M, N)} != 1")
    if (M - N) % 2 == 0:
        raise PreconditionError("same-parity", f"M={M} and N={N} must have opposite parity")
    hyp = M * M + N * N
    if hyp > U64_MAX:
        raise OverflowError(f"hypotenuse {hyp} exceeds the 64-bit range")
    return (2 * M * N, M * M - N * N, hyp)
