"""Integer solutions of (x-n)^2 + (y-n)^2 = 2n^2, their tabulated relation
to primality, and the executable power-equation contradiction pipeline.

The circle solver reduces to two-square representations of 2n^2 and expands
sign and coordinate symmetry, so negative coordinates are admitted. The
primality probe only measures: it emits a contingency table between the
solution count, primality, and the presence of a prime factor = 1 mod 4,
asserting nothing beyond the data.

The pipeline takes the classical primitive parametrization (legs 2MN and
M^2 - N^2, hypotenuse M^2 + N^2), assigns m = M^2 + N^2 and
C^2n - m = M^2 - N^2, and lands on C^2n = 2M^2. Its executable content is
the perfect-square test of 2M^2, which fails for every M >= 1.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .intcore import PreconditionError, check_u64, is_prime, pythagorean_from, two_squares


@dataclass(frozen=True, slots=True, order=True)
class CirclePoint:
    x: int
    y: int


def circle_solve(n: int) -> list[CirclePoint]:
    """All integer points on (x-n)^2 + (y-n)^2 = 2n^2, sorted lexicographically.

    Centered coordinates (u, v) = (x-n, y-n) must satisfy u^2 + v^2 = 2n^2,
    so each two-square representation of 2n^2 expands to up to eight points.
    The representation n^2 + n^2 always exists, hence the four corner points
    (0,0), (0,2n), (2n,0), (2n,2n) are always present.
    """
    check_u64(n)
    if n < 1:
        raise PreconditionError("range", "n must be >= 1")
    target = 2 * n * n
    pts = set()
    for rep in two_squares(target):
        for u, v in ((rep.a, rep.b), (rep.b, rep.a)):
            for su in (-1, 1):
                for sv in (-1, 1):
                    pts.add((n + su * u, n + sv * v))
    return [CirclePoint(x, y) for x, y in sorted(pts)]


def _has_prime_factor_1_mod_4(n: int) -> bool:
    if n % 2 == 0:
        n >>= (n & -n).bit_length() - 1
    d = 3
    while d * d <= n:
        if n % d == 0:
            if d % 4 == 1:
                return True
            while n % d == 0:
                n //= d
        d += 2
    return n % 4 == 1 and n > 1


def circle_primality_probe(n_max: int):
    """Tabulate |circle_solve(n)| against primality for n <= n_max.

    Returns (rows, stats): per-n rows (n, count, prime flag, has a prime
    factor = 1 mod 4) and a contingency summary, including how often
    "exactly 4 solutions" coincides with "no prime factor = 1 mod 4".
    This is a measurement, not an assertion.
    """
    check_u64(n_max, "n_max")
    if n_max < 2:
        raise PreconditionError("range", "n_max must be >= 2")
    rows = []
    stats = {
        "prime_with_4": 0,
        "prime_with_more": 0,
        "composite_with_4": 0,
        "composite_with_more": 0,
        "four_iff_no_1mod4_factor_breaks": 0,
    }
    for n in range(2, n_max + 1):
        count = len(circle_solve(n))
        prime = is_prime(n)
        f1mod4 = _has_prime_factor_1_mod_4(n)
        rows.append((n, count, prime, f1mod4))
        key = ("prime" if prime else "composite") + ("_with_4" if count == 4 else "_with_more")
        stats[key] += 1
        if (count == 4) != (not f1mod4):
            stats["four_iff_no_1mod4_factor_breaks"] += 1
    return rows, stats


@dataclass(frozen=True, slots=True)
class FermatCase:
    """One instantiated case of the power-equation contradiction.

    m = M^2 + N^2, rhs_minus_m = M^2 - N^2, C2n = m + rhs_minus_m = 2M^2,
    and is_perfect_square_double records whether 2M^2 is a perfect square
    (the condition some integer C with C^(2n) = 2M^2 would require).
    """

    M: int
    N: int
    m: int
    rhs_minus_m: int
    C2n: int
    is_perfect_square_double: bool


def fermat_pipeline(M: int, N: int) -> FermatCase:
    """Construct the contradiction case for a primitive parameter pair (M, N).

    Preconditions (M > N >= 1, coprime, opposite parity) are enforced with
    per-condition error codes; the leg identity
    (2MN)^2 + (M^2 - N^2)^2 = (M^2 + N^2)^2 is verified exactly on the way.
    """
    leg_even, leg_odd, hyp = pythagorean_from(M, N)
    if leg_even * leg_even + leg_odd * leg_odd != hyp * hyp:
        raise RuntimeError("triple identity failed")  # unreachable
    m = hyp
    rhs_minus_m = M * M - N * N
    c2n = m + rhs_minus_m
    s = isqrt(c2n)
    return FermatCase(
        M=M,
        N=N,
        m=m,
        rhs_minus_m=rhs_minus_m,
        C2n=c2n,
        is_perfect_square_double=s * s == c2n,
    )


def fermat_swapped(M: int, N: int) -> tuple[int, bool]:
    """Outcome of the alternate leg assignment: C^2n - m = 2MN instead.

    Then C^2n = (M + N)^2, which is always a perfect square, so the swapped
    assignment never produces the contradiction. Returned as
    (C^2n, is perfect square) for reporting alongside the primary case.
    """
    pythagorean_from(M, N)
    c2n = (M + N) ** 2
    s = isqrt(c2n)
    return c2n, s * s == c2n


@dataclass(frozen=True, slots=True)
class SplitOutcome:
    """Result of the exact split of C^n into two addends.

    Either both addends are present (reason None) or the pair is absent
    with reason "negative-radicand" or "irrational-root".
    """

    a_pow: Fraction | None
    b_pow: Fraction | None
    reason: str | None

    @property
    def present(self) -> bool:
        return self.reason is None


def eq_ej3_4_split(c_pow_n: int, lambda2: Fraction) -> SplitOutcome:
    """Split C^n as C^n/2 +/- sqrt(C^n/(2*lambda2) - C^2n/4), exactly.

    Works on exact rationals throughout; the pair exists only when the
    radicand is a nonnegative perfect square of a rational. When present,
    the addends sum to C^n and satisfy C^n = lambda2 * (A^2 + B^2), which
    is re-checked exactly.
    """
    check_u64(c_pow_n, "c_pow_n")
    lambda2 = Fraction(lambda2)
    if lambda2 <= 0:
        raise PreconditionError("nonpositive", f"lambda2 must be > 0, got {lambda2}")
    c = Fraction(c_pow_n)
    radicand = c / (2 * lambda2) - c * c / 4
    if radicand < 0:
        return SplitOutcome(None, None, "negative-radicand")
    num, den = radicand.numerator, radicand.denominator
    sn, sd = isqrt(num), isqrt(den)
    if sn * sn != num or sd * sd != den:
        return SplitOutcome(None, None, "irrational-root")
    root = Fraction(sn, sd)
    a_pow = c / 2 + root
    b_pow = c / 2 - root
    if a_pow + b_pow != c or lambda2 * (a_pow**2 + b_pow**2) != c:
        raise RuntimeError("split identities failed")  # unreachable
    return SplitOutcome(a_pow, b_pow, None)
