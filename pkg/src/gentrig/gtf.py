"""Generalized trigonometric functions with two parameters.

sin_pq is the inverse of x -> int_0^x (1 - t^q)^(-1/p) dt on [0, 1]; pi_pq
is twice that integral at x = 1, and cos_pq the derivative of sin_pq.  For
p = q = 2 everything reduces to the circular functions.  The numerical
realization goes through the regularized incomplete beta function and its
inverse; near the right end of the principal interval the inverse is solved
in the swapped-tail form to keep cos_pq accurate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
import scipy.special as sc

from . import specfun
from .errors import DomainError

_REL_SLACK = 1e-12  # tolerated floating overshoot of a domain endpoint


def conjugate(p: float) -> float:
    """Hoelder conjugate p* = p / (p - 1); 1* = inf and inf* = 1."""
    if math.isinf(p):
        return 1.0
    if p == 1.0:
        return math.inf
    if p <= 0:
        raise DomainError("conjugate requires p in [1, inf]")
    return p / (p - 1.0)


@dataclass(frozen=True)
class ParamPair:
    """Exponent pair (p, q), both in (1, inf) for the standard constructor."""

    p: float
    q: float

    def __post_init__(self):
        if not (1.0 < self.p < math.inf and 1.0 < self.q < math.inf):
            raise DomainError(f"need p, q in (1, inf), got ({self.p}, {self.q})")

    @property
    def p_star(self) -> float:
        return conjugate(self.p)

    @property
    def q_star(self) -> float:
        return conjugate(self.q)


@dataclass(frozen=True)
class GtfSample:
    """A point on the principal domain together with both function values."""

    x: float
    s: float
    c: float


def _check_pq(p: float, q: float):
    if not (1.0 < p < math.inf and 1.0 < q < math.inf):
        raise DomainError(f"need p, q in (1, inf), got ({p}, {q})")


def pi_pq(p: float, q: float) -> float:
    """Generalized pi: pi_pq = (2/q) B(1/p*, 1/q).

    The degenerate conventions pi_{s,1} = 2 s* and pi_{inf,s} = 2 are
    accepted here (and only here).
    """
    if q == 1.0:
        if not 1.0 < p:
            raise DomainError("pi_pq with q = 1 requires p > 1")
        return 2.0 * conjugate(p)
    if math.isinf(p):
        if not 1.0 < q < math.inf:
            raise DomainError("pi_pq with p = inf requires finite q > 1")
        return 2.0
    _check_pq(p, q)
    return (2.0 / q) * specfun.beta(1.0 / conjugate(p), 1.0 / q)


def _as_unit(x, top: float, what: str):
    """Validate x in [0, top] (tiny relative slack) and return clipped array."""
    xx = np.asarray(x, dtype=float)
    slack = _REL_SLACK * top
    if np.any(xx < -slack) or np.any(xx > top + slack):
        raise DomainError(f"{what} requires argument in [0, {top}]")
    return np.clip(xx, 0.0, top)


def _maybe_scalar(v):
    return float(v) if np.ndim(v) == 0 else v


def asin_pq(p: float, q: float, x):
    """Inverse generalized sine on [0, 1], via the incomplete beta form."""
    _check_pq(p, q)
    xx = _as_unit(x, 1.0, "asin_pq")
    a, b = 1.0 / q, 1.0 / conjugate(p)
    val = (1.0 / q) * specfun.beta(a, b) * sc.betainc(a, b, xx**q)
    return _maybe_scalar(val)


def sin_pq(p: float, q: float, x):
    """Generalized sine on the principal interval [0, pi_pq/2]."""
    _check_pq(p, q)
    halfpi = 0.5 * pi_pq(p, q)
    xx = _as_unit(x, halfpi, "sin_pq")
    a, b = 1.0 / q, 1.0 / conjugate(p)
    t = sc.betaincinv(a, b, xx / halfpi)
    return _maybe_scalar(t ** (1.0 / q))


def cos_pq(p: float, q: float, x):
    """Generalized cosine (1 - sin_pq^q)^(1/p) on [0, pi_pq/2].

    Solved in the swapped-tail form I_{1-t}(b, a) = 1 - I_t(a, b) so that
    accuracy is retained where sin_pq is close to 1.
    """
    _check_pq(p, q)
    halfpi = 0.5 * pi_pq(p, q)
    xx = _as_unit(x, halfpi, "cos_pq")
    a, b = 1.0 / q, 1.0 / conjugate(p)
    tc = sc.betaincinv(b, a, (halfpi - xx) / halfpi)
    return _maybe_scalar(tc ** (1.0 / p))


def sample(p: float, q: float, x: float) -> GtfSample:
    """Evaluate both functions at x and bundle the triple."""
    return GtfSample(float(x), float(sin_pq(p, q, x)), float(cos_pq(p, q, x)))


def dcos_power_identity_residual(p: float, q: float, x: float) -> float:
    """Residual of (cos_pq^(p-1))' = -((p-1) q / p) sin_pq^(q-1).

    The left side is a central finite difference (step 1e-5, shrunk when x
    sits close to an endpoint); the identity carries the minus sign that
    makes sin_pq solve the p-Laplacian oscillator.
    """
    _check_pq(p, q)
    halfpi = 0.5 * pi_pq(p, q)
    if not 0.0 < x < halfpi:
        raise DomainError("x must be interior to (0, pi_pq/2)")
    h = min(1e-5, 0.5 * x, 0.5 * (halfpi - x))
    lhs = (
        cos_pq(p, q, x + h) ** (p - 1.0) - cos_pq(p, q, x - h) ** (p - 1.0)
    ) / (2.0 * h)
    rhs = -((p - 1.0) * q / p) * sin_pq(p, q, x) ** (q - 1.0)
    return abs(lhs - rhs)


def sin_symmetry_appendix(p: float, q: float, x01: float):
    """Signed residuals of the two reflection formulas tying (p, q) to
    the conjugate pair (q*, p*):

        sin_pq((pi_pq/2) x)  vs  cos_{q*,p*}^(q*-1)((pi_{q*,p*}/2)(1-x))
        cos_pq((pi_pq/2) x)  vs  sin_{q*,p*}^(p*-1)((pi_{q*,p*}/2)(1-x))
    """
    _check_pq(p, q)
    if not 0.0 <= x01 <= 1.0:
        raise DomainError("x01 must lie in [0, 1]")
    ps, qs = conjugate(p), conjugate(q)
    half_a = 0.5 * pi_pq(p, q)
    half_b = 0.5 * pi_pq(qs, ps)
    r_sin = sin_pq(p, q, half_a * x01) - cos_pq(qs, ps, half_b * (1.0 - x01)) ** (
        qs - 1.0
    )
    r_cos = cos_pq(p, q, half_a * x01) - sin_pq(qs, ps, half_b * (1.0 - x01)) ** (
        ps - 1.0
    )
    return r_sin, r_cos


def multiple_angle_residual(p: float, x: float) -> float:
    """Residual of sin_{2,p}(2^(2/p) x) = 2^(2/p) sin_{p*,p}(x) cos_{p*,p}^(p*-1)(x)
    for x in [0, pi_{p*,p}/2]."""
    if not 1.0 < p < math.inf:
        raise DomainError("need p in (1, inf)")
    ps = conjugate(p)
    half = 0.5 * pi_pq(ps, p)
    if not 0.0 <= x <= half * (1.0 + _REL_SLACK):
        raise DomainError("x must lie in [0, pi_{p*,p}/2]")
    scale = 2.0 ** (2.0 / p)
    # the doubled argument sweeps the full arch [0, pi_{2,p}] as x sweeps
    # the half period, since pi_{2,p} = 2^(2/p - 1) pi_{p*,p}
    lhs = extend_sin_symmetric(p, min(scale * x, pi_pq(2.0, p)))
    rhs = scale * sin_pq(ps, p, x) * cos_pq(ps, p, x) ** (ps - 1.0)
    return abs(lhs - rhs)


def extend_sin_symmetric(p: float, x):
    """sin_{2,p} on [0, pi_{2,p}], mirrored about the midpoint on the
    second half.  This is the only family the extension is defined for."""
    if not 1.0 < p < math.inf:
        raise DomainError("need p in (1, inf)")
    full = pi_pq(2.0, p)
    xx = _as_unit(x, full, "extend_sin_symmetric")
    folded = np.minimum(xx, full - xx)
    return _maybe_scalar(sin_pq(2.0, p, folded))
