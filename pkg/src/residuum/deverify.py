"""Closed-form DE solutions built by kernel projection, each paired with an
independent numerical check.

Cauchy problem x'' + b(t) x' + c(t) x = y(t), x(0) = alpha, x'(0) = beta:
the construction takes u'/u = b(t) tan(pi t / ell), so with
G(t) = int_0^t b tan(pi s / ell) ds the witness is

    u(t) = beta * e^G(t),   x(t) = alpha + int_0^t u,
    y(t) = c(t) x(t) + u(t) b(t) (1 + tan(pi t / ell)).

G and x are computed by composite Simpson quadrature matched to the grid
step; the verifier re-solves the first-order system x' = u,
u' = y - b u - c x with a classical order-4 stepper fed by the witness's
sampled forcing and reports the max relative deviation. The interval is
truncated to t_end < ell/2 because the tangent blows up at ell/2.

Poisson split: for -Lap(u) = f with u = 0 on the boundary, check the
claimed pointwise split u_xx = u_yy = -f/2 on a uniform grid via the
5-point stencil, plus the discrete integral of (u_xx - u_yy), which by
Green's theorem must vanish for boundary-zero u.

Membrane modes: u_k = C sin(k pi x / L) sin(k pi y / L) on [-L, L]^2 with
eigenvalue lambda = 2 (k pi / L)^2 solves Lap(u) + lambda u = 0; the
discrete residual must shrink at second order under refinement.
"""

import math
from dataclasses import dataclass

import numpy as np

from .coeffexpr import CoefficientExpr, evaluate, parse_coefficient
from .intcore import PreconditionError


def projection_lambda2(comp1: float, comp2: float, target: float) -> float:
    """Coefficient of the orthogonal-complement direction: the projection of
    (1,1) onto span{(comp1, comp2)} scaled so the functional hits ``target``,
    i.e. target / (comp1^2 + comp2^2)."""
    denom = comp1 * comp1 + comp2 * comp2
    if denom == 0:
        raise PreconditionError("zero-denominator", "comp1 and comp2 are both zero")
    return target / denom


def _as_expr(e) -> CoefficientExpr:
    return parse_coefficient(e) if isinstance(e, str) else e


def _sample(expr: CoefficientExpr, t: np.ndarray) -> np.ndarray:
    out = np.asarray(evaluate(expr, t=t), dtype=float)
    if out.shape != t.shape:
        out = np.full(t.shape, float(out))
    return out


@dataclass
class OdeWitness:
    """Constructed Cauchy-problem solution with its sampled forcing.

    Arrays are sampled at half-step resolution (spacing step/2, so
    2n + 1 points for n = t_end/step integrator steps); the verifier's
    order-4 stepper then finds the forcing at every substep without
    interpolating. x_values[0] = alpha and u_values[0] = beta.
    """

    alpha: float
    beta: float
    ell: float
    b: CoefficientExpr
    c: CoefficientExpr
    t_end: float
    step: float
    t_values: np.ndarray
    x_values: np.ndarray
    u_values: np.ndarray
    y_values: np.ndarray
    max_residual: float | None = None


def ode_construct(alpha, beta, ell, b, c, t_end, step) -> OdeWitness:
    """Build the witness by matched Simpson quadrature.

    Requires 0 < t_end < ell/2 (tangent singularity excluded) and
    step <= t_end/100. G is accumulated per half-step panel with quarter-
    point midpoints, so every sampled value carries order-4 accuracy.
    """
    b = _as_expr(b)
    c = _as_expr(c)
    if ell <= 0:
        raise PreconditionError("ell", "ell must be positive")
    if not 0 < t_end < ell / 2:
        raise PreconditionError("singularity", f"need 0 < t_end < ell/2, got t_end={t_end}, ell={ell}")
    if step <= 0 or step > t_end / 100:
        raise PreconditionError("step-coarse", f"need 0 < step <= t_end/100, got {step}")
    n = round(t_end / step)
    h = t_end / n
    delta = h / 2
    tf = np.linspace(0.0, t_end, 2 * n + 1)
    tq = tf[:-1] + delta / 4
    tm = tf[:-1] + delta / 2

    def g_at(t):
        return _sample(b, t) * np.tan(np.pi * t / ell)

    g_f = g_at(tf)
    g_q = g_at(tq)
    g_m = g_at(tm)
    inc = (delta / 6.0) * (g_f[:-1] + 4.0 * g_m + g_f[1:])
    G = np.concatenate(([0.0], np.cumsum(inc)))
    G_mid = G[:-1] + (delta / 12.0) * (g_f[:-1] + 4.0 * g_q + g_m)
    u = beta * np.exp(G)
    u_mid = beta * np.exp(G_mid)
    xinc = (delta / 6.0) * (u[:-1] + 4.0 * u_mid + u[1:])
    x = alpha + np.concatenate(([0.0], np.cumsum(xinc)))
    y = _sample(c, tf) * x + u * _sample(b, tf) * (1.0 + np.tan(np.pi * tf / ell))
    return OdeWitness(
        alpha=float(alpha),
        beta=float(beta),
        ell=float(ell),
        b=b,
        c=c,
        t_end=float(t_end),
        step=h,
        t_values=tf,
        x_values=x,
        u_values=u,
        y_values=y,
    )


def ode_verify(w: OdeWitness) -> float:
    """Re-solve x' = u, u' = y - b u - c x with a classical order-4 stepper
    consuming the witness's sampled y, and return
    max |x_stepped - x_constructed| / (1 + |x_constructed|) over the grid."""
    tf = w.t_values
    if len(tf) < 3 or len(tf) % 2 == 0:
        raise PreconditionError("witness", "witness arrays must hold 2n+1 half-step samples")
    n = (len(tf) - 1) // 2
    h = w.step
    b_f = _sample(w.b, tf)
    c_f = _sample(w.c, tf)
    y_f = w.y_values
    x = w.x_values[0]
    u = w.u_values[0]
    worst = 0.0
    for i in range(n):
        i0, im, i1 = 2 * i, 2 * i + 1, 2 * i + 2
        k1x = u
        k1u = y_f[i0] - b_f[i0] * u - c_f[i0] * x
        x2 = x + 0.5 * h * k1x
        u2 = u + 0.5 * h * k1u
        k2x = u2
        k2u = y_f[im] - b_f[im] * u2 - c_f[im] * x2
        x3 = x + 0.5 * h * k2x
        u3 = u + 0.5 * h * k2u
        k3x = u3
        k3u = y_f[im] - b_f[im] * u3 - c_f[im] * x3
        x4 = x + h * k3x
        u4 = u + h * k3u
        k4x = u4
        k4u = y_f[i1] - b_f[i1] * u4 - c_f[i1] * x4
        x = x + (h / 6.0) * (k1x + 2.0 * k2x + 2.0 * k3x + k4x)
        u = u + (h / 6.0) * (k1u + 2.0 * k2u + 2.0 * k3u + k4u)
        ref = w.x_values[i1]
        dev = abs(x - ref) / (1.0 + abs(ref))
        if dev > worst:
            worst = dev
    return worst


def constant_b_log_cos_primitive(b0: float, ell: float, t) -> float:
    """Closed form of G for constant b: G(t) = -(b0 * ell / pi) * ln cos(pi t / ell).
    Kept as an independent oracle for the quadrature path."""
    return -(b0 * ell / math.pi) * np.log(np.cos(np.pi * np.asarray(t) / ell))


def convergence_order(steps, errors) -> float:
    """Least-squares slope of log(error) against log(step)."""
    return float(np.polyfit(np.log(np.asarray(steps, float)), np.log(np.asarray(errors, float)), 1)[0])


@dataclass
class Grid2D:
    """Uniform rectangular grid; values[i, j] = u(x_i, y_j), equal spacing
    in both axes."""

    x_range: tuple[float, float]
    y_range: tuple[float, float]
    nx: int
    ny: int
    h: float
    values: np.ndarray

    def __post_init__(self):
        if self.nx < 3 or self.ny < 3:
            raise PreconditionError("size", "need nx, ny >= 3")
        hx = (self.x_range[1] - self.x_range[0]) / (self.nx - 1)
        hy = (self.y_range[1] - self.y_range[0]) / (self.ny - 1)
        if not math.isclose(hx, hy, rel_tol=1e-12, abs_tol=0.0):
            raise PreconditionError("non-uniform", f"spacing differs between axes: {hx} vs {hy}")
        if not math.isclose(self.h, hx, rel_tol=1e-12, abs_tol=0.0):
            raise PreconditionError("non-uniform", f"declared h={self.h} does not match {hx}")
        if self.values.shape != (self.nx, self.ny):
            raise PreconditionError("shape", f"values shape {self.values.shape} != ({self.nx}, {self.ny})")
        if not np.all(np.isfinite(self.values)):
            raise PreconditionError("finite", "grid values must be finite")


def grid_from_function(fn, x_range, y_range, nx: int, ny: int) -> Grid2D:
    """Sample ``fn(x, y)`` (must broadcast over arrays) on a uniform grid."""
    xs = np.linspace(x_range[0], x_range[1], nx)
    ys = np.linspace(y_range[0], y_range[1], ny)
    values = np.asarray(fn(xs[:, None], ys[None, :]), dtype=float)
    h = (x_range[1] - x_range[0]) / (nx - 1)
    return Grid2D(tuple(x_range), tuple(y_range), nx, ny, h, values)


@dataclass(frozen=True)
class PoissonSplitReport:
    max_split_residual: float
    max_asymmetry: float
    asymmetry_integral: float
    max_f: float


def poisson_split_check(u: Grid2D) -> PoissonSplitReport:
    """Check the pointwise split u_xx = u_yy = -f/2 with f = -Lap_h(u).

    Reports max |u_xx + f/2| (split residual), max |u_xx - u_yy|
    (asymmetry), the discrete integral of (u_xx - u_yy) (the Green's
    theorem quantity), and max |f|. Requires boundary values below 1e-12.
    """
    if u.nx < 5 or u.ny < 5:
        raise PreconditionError("size", "need nx, ny >= 5")
    v = u.values
    boundary = max(
        float(np.max(np.abs(v[0, :]))),
        float(np.max(np.abs(v[-1, :]))),
        float(np.max(np.abs(v[:, 0]))),
        float(np.max(np.abs(v[:, -1]))),
    )
    if boundary > 1e-12:
        raise PreconditionError("boundary", f"boundary values reach {boundary:.3e} > 1e-12")
    h2 = u.h * u.h
    u_xx = (v[2:, 1:-1] - 2.0 * v[1:-1, 1:-1] + v[:-2, 1:-1]) / h2
    u_yy = (v[1:-1, 2:] - 2.0 * v[1:-1, 1:-1] + v[1:-1, :-2]) / h2
    f = -(u_xx + u_yy)
    asym = u_xx - u_yy
    return PoissonSplitReport(
        max_split_residual=float(np.max(np.abs(u_xx + f / 2.0))),
        max_asymmetry=float(np.max(np.abs(asym))),
        asymmetry_integral=float(h2 * np.sum(asym)),
        max_f=float(np.max(np.abs(f))),
    )


@dataclass(frozen=True)
class EigenMode:
    """Product sine mode on [-L, L]^2; eigenvalue = 2 (k pi / L)^2."""

    L: float
    k: int
    eigenvalue: float
    amplitude: float


def membrane_modes(L: float, k: int, amplitude: float, grid_n: int) -> tuple[EigenMode, Grid2D]:
    """Sample C sin(k pi x / L) sin(k pi y / L) on [-L, L]^2.

    The mode vanishes on all boundary nodes to round-off and satisfies
    Lap(u) + eigenvalue * u = 0 with eigenvalue = 2 (k pi / L)^2.
    """
    if L <= 0:
        raise PreconditionError("L", "L must be positive")
    if k < 1:
        raise PreconditionError("k", "k must be >= 1")
    if grid_n < 5:
        raise PreconditionError("size", "grid_n must be >= 5")
    mode = EigenMode(L=float(L), k=int(k), eigenvalue=2.0 * (k * math.pi / L) ** 2, amplitude=float(amplitude))
    xs = np.linspace(-L, L, grid_n)
    line = np.sin(k * math.pi * xs / L)
    values = amplitude * np.outer(line, line)
    h = 2.0 * L / (grid_n - 1)
    grid = Grid2D((-L, L), (-L, L), grid_n, grid_n, h, values)
    return mode, grid


def membrane_residual(mode: EigenMode, u: Grid2D) -> float:
    """Max over interior nodes of |Lap_h(u) + eigenvalue * u|; second-order
    small for grids sampled from membrane_modes."""
    if u.nx != u.ny:
        raise PreconditionError("grid-mismatch", "membrane grids are square")
    for rng in (u.x_range, u.y_range):
        if not (math.isclose(rng[0], -mode.L, rel_tol=1e-12, abs_tol=1e-15) and math.isclose(rng[1], mode.L, rel_tol=1e-12, abs_tol=1e-15)):
            raise PreconditionError("grid-mismatch", f"grid range {rng} is not [-L, L] for L={mode.L}")
    v = u.values
    h2 = u.h * u.h
    lap = (
        v[2:, 1:-1] + v[:-2, 1:-1] + v[1:-1, 2:] + v[1:-1, :-2] - 4.0 * v[1:-1, 1:-1]
    ) / h2
    return float(np.max(np.abs(lap + mode.eigenvalue * v[1:-1, 1:-1])))


def superpose(modes, grid_n: int) -> Grid2D:
    """Nodewise sum of sampled modes sharing one L. The sum is itself an
    eigenfunction only when all eigenvalues agree; this is a constructor,
    and residuals are checked per mode."""
    modes = list(modes)
    if not modes:
        raise PreconditionError("empty", "need at least one mode")
    L = modes[0].L
    for m in modes[1:]:
        if m.L != L:
            raise PreconditionError("mixed-L", f"modes mix L={L} and L={m.L}")
    total = None
    for m in modes:
        _, grid = membrane_modes(m.L, m.k, m.amplitude, grid_n)
        total = grid.values if total is None else total + grid.values
    h = 2.0 * L / (grid_n - 1)
    return Grid2D((-L, L), (-L, L), grid_n, grid_n, h, total)
