"""Closed-form positive solutions of the quadratic-gradient boundary value
problems and their verifiers.

The general problem on [0, H],

    (p - q) u' - p q (u')^2 + (p + q) u u'' + 1 = 0,   u(0) = u(H) = 0,

has the single positive solution

    u(x) = (2H / (q pi_{p*,q})) cos_{p*,q}^(p*-1)(w x) sin_{p*,q}(w x),

with w = pi_{p*,q} / (2H).  The nonlocal variant replaces the constant
forcing by (2/H) int (phi')^2 and is solved by rescaling the general
solution with p* = q = r(m); the p = q case on [0, 1] collapses, through
the multiple-angle formula, to a mirrored sin_{2,p} profile.

Residual verifiers use central finite differences (one Richardson step),
so they stay independent of the closed forms they check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from . import quadrature
from .errors import DomainError
from .gtf import conjugate, cos_pq, extend_sin_symmetric, pi_pq, sin_pq


@dataclass(frozen=True)
class BvpSpec:
    """Instance (H, p, q) of the general boundary value problem."""

    H: float
    p: float
    q: float

    def __post_init__(self):
        if not self.H > 0:
            raise DomainError("need H > 0")
        if not (1.0 < self.p < math.inf and 1.0 < self.q < math.inf):
            raise DomainError("need p, q in (1, inf)")


@dataclass(frozen=True)
class NonlocalSpec:
    """Instance (H, m) of the nonlocal problem; m > 0 is the free amplitude."""

    H: float
    m: float

    def __post_init__(self):
        if not self.H > 0:
            raise DomainError("need H > 0")
        if not self.m > 0:
            raise DomainError("need m > 0")

    @property
    def r(self) -> float:
        """Induced exponent in (1, 2): both p* and q of the local problem."""
        return 1.0 / (0.5 + 0.25 / math.sqrt(self.m**2 + 0.25))


@dataclass(frozen=True)
class BvpSolution:
    """Immutable positive solution; evaluate with sol(x), vectorized in x."""

    spec: object
    amplitude: float
    _eval: Callable = field(repr=False)

    def __call__(self, x):
        xx = np.asarray(x, dtype=float)
        H = self.spec.H
        if np.any(xx < -1e-12 * H) or np.any(xx > H * (1.0 + 1e-12)):
            raise DomainError("x must lie in [0, H]")
        out = self._eval(np.clip(xx, 0.0, H))
        return float(out) if np.ndim(x) == 0 else out


def solve_general(spec: BvpSpec) -> BvpSolution:
    """Positive solution of (p-q)u' - pq(u')^2 + (p+q)uu'' + 1 = 0 on [0, H]."""
    H, p, q = spec.H, spec.p, spec.q
    P = conjugate(p)
    pi_val = pi_pq(P, q)
    omega = pi_val / (2.0 * H)
    amp = 2.0 * H / (q * pi_val)

    def u(x):
        theta = omega * x
        return amp * cos_pq(P, q, theta) ** (P - 1.0) * sin_pq(P, q, theta)

    return BvpSolution(spec=spec, amplitude=amp, _eval=u)


def solve_nonlocal(spec: NonlocalSpec) -> BvpSolution:
    """Positive solution of phi' - (phi')^2 + phi phi'' + (2/H) int (phi')^2 = 0.

    The solution is 2 sqrt(m^2 + 1/4) times the general solution with
    p* = q = r(m); the integral term then evaluates to exactly m^2.
    """
    r = spec.r
    inner = solve_general(BvpSpec(H=spec.H, p=conjugate(r), q=r))
    scale = 2.0 * math.sqrt(spec.m**2 + 0.25)

    def phi(x):
        return scale * inner._eval(x)

    return BvpSolution(spec=spec, amplitude=scale * inner.amplitude, _eval=phi)


def solve_pq_equal(p: float) -> BvpSolution:
    """Positive solution of -p^2(u')^2 + 2p u u'' + 1 = 0 on [0, 1].

    Equals sin_{2,p}(pi_{2,p} x) / (p pi_{2,p}) with the mirror extension on
    [1/2, 1]; symmetric about x = 1/2.
    """
    if not 1.0 < p < math.inf:
        raise DomainError("need p in (1, inf)")
    pi_val = pi_pq(2.0, p)
    amp = 1.0 / (p * pi_val)

    def u(x):
        return amp * extend_sin_symmetric(p, pi_val * x)

    return BvpSolution(spec=BvpSpec(H=1.0, p=p, q=p), amplitude=amp, _eval=u)


def _fd1(f, x: float, h: float) -> float:
    """Central first derivative with one Richardson extrapolation."""
    d1 = (f(x + h) - f(x - h)) / (2.0 * h)
    d2 = (f(x + h / 2) - f(x - h / 2)) / h
    return (4.0 * d2 - d1) / 3.0


def _fd2(f, x: float, h: float) -> float:
    """Central second derivative with one Richardson extrapolation."""
    f0 = f(x)
    d1 = (f(x + h) - 2.0 * f0 + f(x - h)) / h**2
    d2 = (f(x + h / 2) - 2.0 * f0 + f(x - h / 2)) / (h / 2) ** 2
    return (4.0 * d2 - d1) / 3.0


def _fd_step(spec, x: float) -> float:
    H = spec.H
    if not 0.0 < x < H:
        raise DomainError("x must be interior to (0, H)")
    return min(1e-4 * H, 0.5 * x, 0.5 * (H - x))


def residual_general(sol: BvpSolution, x: float) -> float:
    """|(p-q)u' - pq(u')^2 + (p+q)uu'' + 1| via finite differences."""
    spec = sol.spec
    if not isinstance(spec, BvpSpec):
        raise DomainError("residual_general needs a solution of the general problem")
    h = _fd_step(spec, x)
    p, q = spec.p, spec.q
    u0 = sol(x)
    u1 = _fd1(sol, x, h)
    u2 = _fd2(sol, x, h)
    return abs((p - q) * u1 - p * q * u1**2 + (p + q) * u0 * u2 + 1.0)


def residual_nonlocal(sol: BvpSolution, x: float) -> float:
    """|phi' - (phi')^2 + phi phi'' + m^2| for the local surrogate equation."""
    spec = sol.spec
    if not isinstance(spec, NonlocalSpec):
        raise DomainError("residual_nonlocal needs a nonlocal solution")
    h = _fd_step(spec, x)
    f0 = sol(x)
    f1 = _fd1(sol, x, h)
    f2 = _fd2(sol, x, h)
    return abs(f1 - f1**2 + f0 * f2 + spec.m**2)


def nonlocal_mean_square_slope(sol: BvpSolution) -> float:
    """(2/H) int_0^H (phi')^2 dt with phi' by central differences.

    For a nonlocal solution this reproduces m^2.  Stencil centres are
    clamped a step away from the boundary; the slope is bounded there
    (u' = 1/q at 0, -1/p at H, scaled by the amplitude), so the strips
    contribute only O(h) of a bounded integrand to the quadrature.
    """
    H = sol.spec.H
    h = 1e-5 * H

    def g(x):
        xc = np.clip(x, h, H - h)
        d = (sol(xc + h) - sol(xc - h)) / (2.0 * h)
        return d * d

    res = quadrature.integrate(g, 0.0, H, tol=1e-9)
    return 2.0 / H * res.value


def phase_curve_residual(sol: BvpSolution, x: float) -> float:
    """Residual of the first integral u = C |v + 1/p|^(1/p) |v - 1/q|^(1/q).

    v is evaluated in closed form, v = -1/p + (1/p + 1/q) cos_{p*,q}^{p*}(w x),
    and C = 2H / (p (1/p + 1/q)^(1/p+1/q) pi_{q*,p}); no differentiation
    enters, so this checks the solution against the phase-plane curve of
    its derivation.
    """
    spec = sol.spec
    if not isinstance(spec, BvpSpec):
        raise DomainError("phase_curve_residual needs a general-problem solution")
    H, p, q = spec.H, spec.p, spec.q
    if not 0.0 < x < H:
        raise DomainError("x must be interior to (0, H)")
    P = conjugate(p)
    omega = pi_pq(P, q) / (2.0 * H)
    v = -1.0 / p + (1.0 / p + 1.0 / q) * cos_pq(P, q, omega * x) ** P
    ssum = 1.0 / p + 1.0 / q
    C = 2.0 * H / (p * ssum**ssum * pi_pq(conjugate(q), p))
    rhs = C * abs(v + 1.0 / p) ** (1.0 / p) * abs(v - 1.0 / q) ** (1.0 / q)
    return abs(sol(x) - rhs)
