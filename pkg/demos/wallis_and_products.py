"""Wallis-type formulas and the infinite product for pi_{p,q}/2.

Half-period moments of sin_{p,q} and cos_{p,q} reduce to Pochhammer-ratio
products times a generalized pi constant.  The same circle of ideas gives
an infinite product converging (slowly, from below) to pi_{p,q}/2 that
collapses to the classical Wallis product at p = q = 2.
"""

import numpy as np

from gentrig import gtf, integrals
from gentrig.gtf import ParamPair
from gentrig.integrals import WallisQuery

print("classical check at p = q = 2 (moments of sin):")
pair = ParamPair(2.0, 2.0)
for n in range(1, 5):
    even = integrals.wallis_sin(WallisQuery(pair, n=n, r=0.0))
    odd = integrals.wallis_sin(WallisQuery(pair, n=n, r=1.0))
    print(f"  int sin^{2 * n:>2} = {even:.15f}   int sin^{2 * n + 1:>2} = {odd:.15f}")

print("\ngeneral moments int_0^{pi_pq/2} sin_pq^(qn+r) dt:")
pair = ParamPair(2.5, 3.0)
print(f"  p = {pair.p}, q = {pair.q}")
for n in range(3):
    for r in (0.0, 1.0, 2.0):
        value = integrals.wallis_sin(WallisQuery(pair, n=n, r=r))
        print(f"  exponent {pair.q * n + r:>4.1f}: {value:.15f}")

print("\ndegenerate endpoints are exact rationals times simple constants:")
v = integrals.wallis_sin(WallisQuery(ParamPair(3.0, 2.0), n=0, r=1.0))
print(f"  sine flavor, r = q-1:  int sin_pq^(q-1) = p*/q = {v}")
v = integrals.wallis_cos(WallisQuery(ParamPair(2.5, 3.0), n=0, r=1.0))
print(f"  cosine flavor, r = 1:  int cos_pq       = {v}")

print("\ninfinite product pi_pq/2 = prod (1 - 1/(pn(qn+1-q/p)))^(-1):")
for p, q in ((2.0, 2.0), (2.0, 4.0), (3.0, 1.5)):
    target = gtf.pi_pq(p, q) / 2.0
    partials = np.cumprod(integrals.product_factors(p, q, 100_000))
    print(f"  (p,q)=({p},{q}):  N=10^5 partial {partials[-1]:.9f}"
          f"  target {target:.9f}  gap {target - partials[-1]:.2e}")
    assert np.all(np.diff(partials) > 0.0), "partials must increase"
print("  every partial-product sequence is strictly increasing from below")
