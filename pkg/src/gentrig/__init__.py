"""Generalized trigonometric functions with two parameters.

Library layout:

- ``specfun``: log-gamma, beta, Pochhammer, regularized incomplete beta and
  its inverse, Gauss hypergeometric function on [0, 1].
- ``gtf``: pi_pq, sin_pq, cos_pq, the inverse sine, and identity residuals.
- ``integrals``: primitives, definite integrals, Wallis-type formulas, the
  lemniscate catalog, generalized elliptic integrals, the infinite product.
- ``bvp``: closed-form boundary value problem solutions and verifiers.
- ``quadrature``: the independent tanh-sinh integration oracle.
- ``cli``: the ``gentrig`` command (eval / verify / table).
"""

from . import bvp, gtf, integrals, quadrature, specfun
from .errors import ConvergenceError, DomainError, ToleranceError
from .gtf import (
    ParamPair,
    asin_pq,
    conjugate,
    cos_pq,
    extend_sin_symmetric,
    pi_pq,
    sin_pq,
)
from .quadrature import QuadResult, integrate

__version__ = "0.1.0"

__all__ = [
    "ConvergenceError",
    "DomainError",
    "ParamPair",
    "QuadResult",
    "ToleranceError",
    "asin_pq",
    "bvp",
    "conjugate",
    "cos_pq",
    "extend_sin_symmetric",
    "gtf",
    "integrals",
    "integrate",
    "pi_pq",
    "quadrature",
    "sin_pq",
    "specfun",
]
