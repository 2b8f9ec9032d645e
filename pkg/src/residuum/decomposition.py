"""Splitting an even number M into two parts K - alpha and K + alpha.

The central construction writes M = M(a-b)/(2a) + M(a+b)/(2a) for a divisor
a of M and a coprime b < a such that both quotients are integers. The two
parts straddle K = M/2 with half-gap alpha = Mb/(2a). Records classify the
parts by their final digits into three forms:

    FORM_33  both parts end in 3        (parts 10*k1 + 3 and 10*k2 + 3)
    FORM_97  parts end in 9 and 7       (parts 10*k1 + 9 and 10*k2 + 7)
    FORM_5   one part is 5, other ends 1 (5 + (10*k1 + 1))

plus companion checks: the prime-pair brute-force oracle, the 2a = M
biconditional, the (n, alpha) candidate scan with gcd(K, n) = 1, the mod-10
progression classes claimed to contain every prime-pair offset, the K -> K+5
shift law, and the exact-rational identity checks for the coefficients
t2 = a(a+b) / (M(a^2+b^2)) and r2 = a(a-b) / (M(a^2+b^2)).
"""

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .intcore import PreconditionError, check_u64, divisors, is_prime_small, prime_sieve
from .report import ClaimReport


class DecompositionForm(enum.Enum):
    FORM_33 = "33"
    FORM_97 = "97"
    FORM_5 = "5"
    UNCLASSIFIED = "unclassified"


@dataclass(slots=True)
class DecompositionRecord:
    """One decomposition of M with witnesses (a, b) and derived quantities.

    part_low = M(a-b)/(2a), part_high = M(a+b)/(2a), K = M/2,
    alpha = Mb/(2a) = (part_high - part_low)/2. k1/k2 are the form's digit
    cofactors when the record is classified, else None.
    """

    M: int
    form: DecompositionForm
    a: int
    b: int
    part_low: int
    part_high: int
    K: int
    alpha: int
    k1: int | None
    k2: int | None
    both_prime: bool


def classify_form(part_low: int, part_high: int):
    """Form tag plus (k1, k2) digit cofactors from the parts' last digits."""
    dl = part_low % 10
    dh = part_high % 10
    if dl == 3 and dh == 3:
        return DecompositionForm.FORM_33, (part_low - 3) // 10, (part_high - 3) // 10
    if (dl, dh) in ((9, 7), (7, 9)):
        # k1 belongs to the part ending in 9, k2 to the part ending in 7;
        # both orderings of the parts occur.
        if dl == 9:
            return DecompositionForm.FORM_97, (part_low - 9) // 10, (part_high - 7) // 10
        return DecompositionForm.FORM_97, (part_high - 9) // 10, (part_low - 7) // 10
    if part_low == 5 and dh == 1:
        return DecompositionForm.FORM_5, (part_high - 1) // 10, None
    if part_high == 5 and dl == 1:
        return DecompositionForm.FORM_5, (part_low - 1) // 10, None
    return DecompositionForm.UNCLASSIFIED, None, None


def theorem1_decompose(M: int, a_values=None) -> list[DecompositionRecord]:
    """All decompositions M = M(a-b)/(2a) + M(a+b)/(2a) with exact parts.

    Enumerates divisors a of M and 1 <= b < a with gcd(a, b) = 1, keeping
    pairs whose parts are exact positive integers. For even M that happens
    exactly when q = M/a is even: q odd would need a - b even, i.e. a and b
    both even (M even forces a even when q is odd), impossible for coprime
    a, b. Records come out ordered by (a, b).

    ``a_values`` restricts the divisor scan (used by large sweeps, which
    keep only a = M/2); entries must divide M.

    The digit classification is advisory: records whose part endings match
    no form carry UNCLASSIFIED rather than being dropped, since the
    existence identity is ending-agnostic.
    """
    check_u64(M, "M")
    if M == 0:
        raise PreconditionError("zero", "M must be positive")
    if M % 2 == 1:
        raise PreconditionError("odd", f"M={M} must be even")
    K = M // 2
    if a_values is None:
        scan = divisors(M)
    else:
        scan = sorted(set(a_values))
        for a in scan:
            if a < 1 or M % a != 0:
                raise PreconditionError("not-divisor", f"a={a} does not divide M={M}")
    records = []
    for a in scan:
        q = M // a
        if q % 2 == 1 or a < 2:
            continue
        half_q = q // 2
        for b in range(1, a):
            if gcd(a, b) != 1:
                continue
            part_low = half_q * (a - b)
            part_high = half_q * (a + b)
            form, k1, k2 = classify_form(part_low, part_high)
            records.append(
                DecompositionRecord(
                    M=M,
                    form=form,
                    a=a,
                    b=b,
                    part_low=part_low,
                    part_high=part_high,
                    K=K,
                    alpha=half_q * b,
                    k1=k1,
                    k2=k2,
                    both_prime=bool(is_prime_small(part_low) and is_prime_small(part_high)),
                )
            )
    return records


def prime_pair_oracle(M: int) -> list[tuple[int, int]]:
    """Brute-force list of all prime pairs p <= q with p + q = M, ascending in p."""
    check_u64(M, "M")
    if M < 4 or M % 2 == 1:
        raise PreconditionError("range", f"M={M} must be even and >= 4")
    sieve = prime_sieve(M)
    return [(p, M - p) for p in range(2, M // 2 + 1) if sieve[p] and sieve[M - p]]


def corollary1_check(M: int) -> ClaimReport:
    """Check the 2a = M biconditional: parts prime iff (a-b, a+b) prime.

    With a = M/2 the parts collapse to a - b and a + b, so the check first
    asserts that collapse exactly and then compares the primality flags of
    the two sides. The biconditional is tautological once the collapse
    holds; violations would expose an arithmetic fault, not number theory.
    """
    check_u64(M, "M")
    if M < 6 or M % 2 == 1:
        raise PreconditionError("range", f"M={M} must be even and >= 6")
    a = M // 2
    tested = 0
    prime_pairs = 0
    violations = []
    for b in range(1, a):
        if gcd(a, b) != 1:
            continue
        tested += 1
        part_low = M * (a - b) // (2 * a)
        part_high = M * (a + b) // (2 * a)
        if part_low != a - b or part_high != a + b:
            violations.append({"b": b, "kind": "part-collapse", "parts": [part_low, part_high]})
            continue
        lhs = is_prime_small(part_low) and is_prime_small(part_high)
        rhs = is_prime_small(a - b) and is_prime_small(a + b)
        if lhs != rhs:
            violations.append({"b": b, "kind": "biconditional", "lhs": lhs, "rhs": rhs})
        if lhs:
            prime_pairs += 1
    return ClaimReport(
        claim_id="cor1-biconditional",
        statement="with 2a = M the parts equal a-b and a+b, and both-prime status "
        "agrees on the two descriptions",
        range_desc=f"M={M}, all b coprime to M/2",
        tested=tested,
        violations=violations,
        stats={"prime_pairs": prime_pairs},
    )


def corollary2_candidates(K: int) -> list[tuple[int, int]]:
    """All n in [K^2, 2K^2] with n - K^2 a perfect square and gcd(K, n) = 1.

    Returned as (n, alpha) with alpha = sqrt(n - K^2); alpha = 0 is
    admitted (K ending 3 has a class starting at 0, so the candidate scan
    must not exclude it).
    """
    check_u64(K, "K")
    if K < 1:
        raise PreconditionError("range", "K must be >= 1")
    out = []
    # n - K^2 = alpha^2 parametrizes the scan: alpha runs over [0, K].
    for alpha in range(0, K + 1):
        n = K * K + alpha * alpha
        if gcd(K, n) == 1:
            out.append((n, alpha))
    return out


@dataclass(frozen=True, slots=True)
class AlphaProgression:
    """Arithmetic progression start, start+step, ..., last (empty if last < start)."""

    start: int
    step: int
    last: int

    def __contains__(self, value: int) -> bool:
        return self.start <= value <= self.last and (value - self.start) % self.step == 0

    def members(self) -> list[int]:
        return list(range(self.start, self.last + 1, self.step))


@dataclass(frozen=True, slots=True)
class AlphaClassSet:
    K: int
    K_ending: int
    classes: tuple[AlphaProgression, ...]

    def __contains__(self, alpha: int) -> bool:
        return any(alpha in c for c in self.classes)

    def members(self) -> set[int]:
        out: set[int] = set()
        for c in self.classes:
            out.update(c.members())
        return out


def alpha_classes(K: int) -> AlphaClassSet:
    """The claimed mod-10 offset classes for prime pairs K -/+ alpha.

    K ending 8: {1, 11, ..., K-7} and {5, 15, ..., K-3}.
    K ending 3: {0, 10, ..., K-3} and {6, 16, ..., K-7}.
    Other endings are rejected; the claim covers only these two.
    """
    check_u64(K, "K")
    ending = K % 10
    if ending == 8:
        classes = (AlphaProgression(1, 10, K - 7), AlphaProgression(5, 10, K - 3))
    elif ending == 3:
        classes = (AlphaProgression(0, 10, K - 3), AlphaProgression(6, 10, K - 7))
    else:
        raise PreconditionError("ending", f"K={K} must end in 8 or 3")
    return AlphaClassSet(K=K, K_ending=ending, classes=classes)


def alpha_class_check(K: int) -> ClaimReport:
    """Audit the offset classes against the prime-pair oracle for M = 2K.

    Every prime pair (K - alpha, K + alpha) should have alpha inside the
    class set; offsets that fall outside are reported with their pair.
    """
    classes = alpha_classes(K)
    pairs = prime_pair_oracle(2 * K)
    violations = []
    in_class = 0
    for p, q in pairs:
        alpha = (q - p) // 2
        if alpha in classes:
            in_class += 1
        else:
            violations.append({"alpha": alpha, "pair": [p, q]})
    return ClaimReport(
        claim_id="cor3-classes",
        statement="every prime-pair offset alpha for M = 2K lies in the mod-10 "
        "classes attached to K's final digit",
        range_desc=f"K={K}, all prime pairs of M={2 * K}",
        tested=len(pairs),
        violations=violations,
        stats={"in_class": in_class, "classes": [[c.start, c.step, c.last] for c in classes.classes]},
    )


def remark2_shift(K: int, alpha0: int) -> tuple[int, int, bool]:
    """Shift law K -> K+5 for a prime-pair offset alpha0 of a K ending in 8.

    For alpha0 = 1 mod 10 the offset shifts down by one and the square
    (K + alpha0 + 1)^2 must be divisible by 50; for alpha0 = 5 mod 10 it
    shifts up by one with (K + alpha0 - 3)^2 divisible by 50. Returns
    (K + 5, shifted alpha, divisibility flag). The two shifted parts always
    re-sum to 2K + 10, which is asserted.
    """
    classes = alpha_classes(K)
    if K % 10 != 8:
        raise PreconditionError("ending", f"K={K} must end in 8")
    if alpha0 % 10 == 1 and alpha0 in classes.classes[0]:
        k_new, alpha_new = K + 5, alpha0 - 1
        square = (K + alpha0 + 1) ** 2
    elif alpha0 % 10 == 5 and alpha0 in classes.classes[1]:
        k_new, alpha_new = K + 5, alpha0 + 1
        square = (K + alpha0 - 3) ** 2
    else:
        raise PreconditionError("class", f"alpha0={alpha0} outside both classes of K={K}")
    if (k_new + alpha_new) + (k_new - alpha_new) != 2 * K + 10:
        raise RuntimeError("shift broke the part-sum identity")  # unreachable
    return k_new, alpha_new, square % 50 == 0


def identity_m14_check(M: int, a: int, b: int) -> ClaimReport:
    """Exact-rational check of the coefficient identities for (M, a, b).

    With t2 = a(a+b)/(M(a^2+b^2)), r2 = a(a-b)/(M(a^2+b^2)) and
    S = M^2/2 + 2*alpha^2, verifies (r2 + t2) * S = M and
    (t2 - r2) * S = 2*alpha exactly; both residuals are reported and must
    be literally zero.
    """
    check_u64(M, "M")
    check_u64(a, "a")
    check_u64(b, "b")
    if a == 0 or M % a != 0:
        raise PreconditionError("not-divisor", f"a={a} does not divide M={M}")
    if gcd(a, b) != 1:
        raise PreconditionError("not-coprime", f"gcd({a}, {b}) != 1")
    if not a > b:
        raise PreconditionError("order", f"need a > b, got a={a}, b={b}")
    if (M * b) % (2 * a) != 0:
        raise PreconditionError("alpha-not-integral", f"2a does not divide Mb for M={M}, a={a}, b={b}")
    alpha = M * b // (2 * a)
    denom = M * (a * a + b * b)
    t2 = Fraction(a * (a + b), denom)
    r2 = Fraction(a * (a - b), denom)
    scale = Fraction(M * M, 2) + 2 * Fraction(alpha) ** 2
    residual_sum = (r2 + t2) * scale - M
    residual_gap = (t2 - r2) * scale - 2 * alpha
    violations = []
    if residual_sum != 0 or residual_gap != 0:
        violations.append(
            {"M": M, "a": a, "b": b, "residual_sum": str(residual_sum), "residual_gap": str(residual_gap)}
        )
    return ClaimReport(
        claim_id="m14-identities",
        statement="exact-rational coefficient identities reproduce M and 2*alpha",
        range_desc=f"M={M}, a={a}, b={b}",
        tested=1,
        violations=violations,
        stats={
            "alpha": alpha,
            "t2": str(t2),
            "r2": str(r2),
            "residual_sum": str(residual_sum),
            "residual_gap": str(residual_gap),
        },
    )


def lambda2_consistency(M: int, alpha: int) -> tuple[int, int, bool]:
    """Reduce lambda2 = M / (M^2/2 + 2*alpha^2) to m/n and verify exactly
    that (M*m - n)^2 = n^2 - 4*alpha^2*m^2 (integer arithmetic throughout)."""
    check_u64(M, "M")
    if M % 2 == 1:
        raise PreconditionError("odd", "M must be even")
    denom = M * M // 2 + 2 * alpha * alpha
    g = gcd(M, denom)
    m, n = M // g, denom // g
    ok = (M * m - n) ** 2 == n * n - 4 * alpha * alpha * m * m
    return m, n, ok
