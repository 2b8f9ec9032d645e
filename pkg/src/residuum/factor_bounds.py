"""Factorization forms of numbers ending in 3 and the claimed bounds on A+B.

A composite N = 10*k1 + 3 factors (nontrivially) only with ending pattern
7*9 or 3*1, giving the two forms

    F79:  N = (10A + 7)(10B + 9)
    F31:  N = (10A + 3)(10B + 1)

The claimed window for s = A + B is, with k1 = (N - 3)/10,

    F79:  (sqrt(10*k1 + 3 - 2*sqrt(10*k1 + 3)) - 7)/5 <= s <= 2*(sqrt(10*k1 - 31) - 7)/5
    F31:  (sqrt((110*k1 + 33)/13) - 1)/5 <= s <= 2*(sqrt(10*k1 + 1) - 1)/5

Verdicts never depend on floating point: every comparison above reduces to
an exact integer inequality by isolating one square root and squaring (all
quantities on the squared side are nonnegative integers). Floats are still
computed for display, and a directed-rounding float path is kept so sweeps
can demonstrate it never contradicts the exact path.
"""

import enum
import math
from dataclasses import dataclass

from .intcore import PreconditionError, check_u64, divisors, prime_sieve
from .parallel import fixed_chunks, run_chunks
from .report import ClaimReport

# Reports list violations in input order up to this cap; the true total is
# always in stats (unbalanced factorizations overrun the upper bound en
# masse, so uncapped lists would dwarf the report).
VIOLATION_CAP = 1000


class FactorFormKind(enum.Enum):
    F79 = "F79"
    F31 = "F31"


@dataclass(frozen=True, slots=True)
class FactorForm:
    N: int
    form: FactorFormKind
    A: int
    B: int

    def reconstruct(self) -> int:
        if self.form is FactorFormKind.F79:
            return (10 * self.A + 7) * (10 * self.B + 9)
        return (10 * self.A + 3) * (10 * self.B + 1)


@dataclass(frozen=True, slots=True)
class BoundCheck:
    """Verdict for one factor form. lower/upper are float renderings of the
    bound expressions (NaN when undefined); ``satisfied`` comes from the
    exact integer path and is False whenever ``defined`` is False."""

    factor_form: FactorForm
    k1: int
    lower: float
    upper: float
    sum_AB: int
    satisfied: bool
    defined: bool


def factor_forms(N: int) -> list[FactorForm]:
    """All (form, A, B) with nontrivial factors reproducing N, by divisor scan.

    Empty when N is prime (only the trivial factorization exists) or when no
    nontrivial factor pair matches an ending pattern. N must end in 3.
    """
    check_u64(N, "N")
    if N % 10 != 3:
        raise PreconditionError("ending", f"N={N} must end in 3")
    out = []
    for d in divisors(N):
        if d == 1 or d == N:
            continue
        e = N // d
        if d % 10 == 7 and e % 10 == 9:
            out.append(FactorForm(N, FactorFormKind.F79, (d - 7) // 10, (e - 9) // 10))
        elif d % 10 == 3 and e % 10 == 1:
            out.append(FactorForm(N, FactorFormKind.F31, (d - 3) // 10, (e - 1) // 10))
    out.sort(key=lambda f: (f.form.value, f.A, f.B))
    return out


def _exact_f79(k1: int, s: int) -> tuple[bool, bool, bool]:
    """(defined, lower_ok, upper_ok) for the F79 window, exact integers only."""
    d_up = 10 * k1 - 31
    if d_up < 0:
        return False, False, False
    x = 10 * k1 + 3
    r = 5 * s + 7
    # lower: sqrt(x - 2*sqrt(x)) <= r  <=>  x - r^2 <= 2*sqrt(x)
    t = x - r * r
    lower_ok = t <= 0 or t * t <= 4 * x
    # upper: (5s + 14)/2 <= sqrt(10*k1 - 31)
    upper_ok = (5 * s + 14) ** 2 <= 4 * d_up
    return True, lower_ok, upper_ok


def _exact_f31(k1: int, s: int) -> tuple[bool, bool, bool]:
    """(defined, lower_ok, upper_ok) for the F31 window, exact integers only."""
    # radicands 110*k1 + 33 and 10*k1 + 1 are nonnegative for every k1 >= 0
    lower_ok = 110 * k1 + 33 <= 13 * (5 * s + 1) ** 2
    upper_ok = (5 * s + 2) ** 2 <= 4 * (10 * k1 + 1)
    return True, lower_ok, upper_ok


def _float_bounds(form: FactorFormKind, k1: int) -> tuple[float, float]:
    if form is FactorFormKind.F79:
        x = 10 * k1 + 3
        inner = x - 2 * math.sqrt(x)
        lower = (math.sqrt(inner) - 7) / 5 if inner >= 0 else math.nan
        d = 10 * k1 - 31
        upper = 2 * (math.sqrt(d) - 7) / 5 if d >= 0 else math.nan
    else:
        lower = (math.sqrt((110 * k1 + 33) / 13) - 1) / 5
        upper = 2 * (math.sqrt(10 * k1 + 1) - 1) / 5
    return lower, upper


def float_verdict(form: FactorFormKind, k1: int, s: int) -> bool | None:
    """Directed-rounding float verdict: True/False when certain, None when
    the margin is within rounding distance of the bound."""
    lower, upper = _float_bounds(form, k1)
    if math.isnan(lower) or math.isnan(upper):
        return None
    eps = 1e-11 * max(1.0, abs(lower), abs(upper))
    if lower + eps <= s <= upper - eps:
        return True
    if s < lower - eps or s > upper + eps:
        return False
    return None


def bound_check(ff: FactorForm) -> BoundCheck:
    """Evaluate the A+B window for one factor form.

    The satisfaction verdict comes from the exact integer comparisons; the
    float bounds are attached for reporting. A negative radicand makes the
    window undefined (flagged, never counted as a violation).
    """
    if ff.reconstruct() != ff.N:
        raise PreconditionError("mismatch", f"form {ff} does not reproduce N={ff.N}")
    k1 = (ff.N - 3) // 10
    s = ff.A + ff.B
    if ff.form is FactorFormKind.F79:
        defined, lower_ok, upper_ok = _exact_f79(k1, s)
    else:
        defined, lower_ok, upper_ok = _exact_f31(k1, s)
    lower, upper = _float_bounds(ff.form, k1)
    return BoundCheck(
        factor_form=ff,
        k1=k1,
        lower=lower,
        upper=upper,
        sum_AB=s,
        satisfied=defined and lower_ok and upper_ok,
        defined=defined,
    )


def _sweep_chunk(args):
    lo, hi, sieve = args
    tested_n = 0
    forms_checked = 0
    violations = []
    violation_total = 0
    stats = {
        "satisfied_F79": 0,
        "satisfied_F31": 0,
        "violated_F79": 0,
        "violated_F31": 0,
        "undefined_cases": 0,
        "reconstruction_failures": 0,
        "float_indeterminate": 0,
        "float_misclassified": 0,
    }
    start = max(lo, 13)
    start += (3 - start) % 10
    for n in range(start, hi, 10):
        if sieve[n]:
            continue
        forms = factor_forms(n)
        if not forms:
            continue
        tested_n += 1
        for ff in forms:
            forms_checked += 1
            if ff.reconstruct() != n:
                stats["reconstruction_failures"] += 1
            bc = bound_check(ff)
            fv = float_verdict(ff.form, bc.k1, bc.sum_AB)
            if fv is None:
                stats["float_indeterminate"] += 1
            elif fv != bc.satisfied:
                stats["float_misclassified"] += 1
            if not bc.defined:
                stats["undefined_cases"] += 1
            elif bc.satisfied:
                stats["satisfied_" + ff.form.value] += 1
            else:
                stats["violated_" + ff.form.value] += 1
                violation_total += 1
                if len(violations) < VIOLATION_CAP:
                    violations.append(
                        {
                            "N": n,
                            "form": ff.form.value,
                            "A": ff.A,
                            "B": ff.B,
                            "sum_AB": bc.sum_AB,
                            "lower": bc.lower,
                            "upper": bc.upper,
                        }
                    )
    return tested_n, forms_checked, violations, violation_total, stats


def bounds_sweep(n_max: int, workers: int = 1) -> ClaimReport:
    """Audit the A+B window over all composite N ending in 3 up to n_max.

    Per-family satisfaction tallies, every bound violation (capped list,
    exact total in stats), a reconstruction check for every form found, and
    a float-vs-exact cross count that must show zero misclassifications.
    """
    check_u64(n_max, "n_max")
    if n_max < 13:
        raise PreconditionError("range", "n_max must be >= 13")
    sieve = prime_sieve(n_max)
    chunks = [(lo, hi, sieve) for lo, hi in fixed_chunks(13, n_max + 1, 20000)]
    parts = run_chunks(_sweep_chunk, chunks, workers)
    tested = 0
    forms_checked = 0
    violations = []
    violation_total = 0
    stats_keys = parts[0][4].keys() if parts else []
    stats = {k: 0 for k in stats_keys}
    for t, fc, viol, vt, st in parts:
        tested += t
        forms_checked += fc
        if len(violations) < VIOLATION_CAP:
            violations.extend(viol[: VIOLATION_CAP - len(violations)])
        violation_total += vt
        for k, v in st.items():
            stats[k] += v
    stats["composites_with_forms"] = tested
    stats["violation_total"] = violation_total
    stats["violations_truncated"] = violation_total > len(violations)
    return ClaimReport(
        claim_id="rem3-bounds",
        statement="for composite N = 10*k1 + 3 factored as (10A+7)(10B+9) or "
        "(10A+3)(10B+1), A+B lies in the square-root window attached to k1",
        range_desc=f"composite N ending in 3, 13 <= N <= {n_max}",
        tested=forms_checked,
        violations=violations,
        stats=stats,
    )
