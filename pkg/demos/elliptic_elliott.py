"""Generalized complete elliptic integrals and Elliott's identity.

K and E acquire three parameters (p, q, r): the integrals run over a half
period of sin_{p,q} and the modulus enters through (1 - (k sin_pq)^q)^(+-...).
Both reduce to hypergeometric values, and a bilinear relation between two
complementary moduli generalizes Legendre's E K' + E' K - K K' = pi/2.
"""

import math

from scipy.special import ellipe, ellipk

from gentrig import gtf, integrals
from gentrig.gtf import ParamPair
from gentrig.integrals import EllipticQuery

print("classical limit p = q = r = 2 against scipy (argument m = k^2):")
for k in (0.1, 0.5, 0.9):
    qy = EllipticQuery(ParamPair(2.0, 2.0), r=2.0, k=k)
    K, E = integrals.elliptic_K(qy), integrals.elliptic_E(qy)
    print(
        f"  k={k}: K={K:.12f} (scipy {ellipk(k * k):.12f})"
        f"  E={E:.12f} (scipy {ellipe(k * k):.12f})"
    )

print("\na generalized pair, p=2 q=3 r=2.5:")
for k in (0.0, 0.3, 0.6, 0.9):
    qy = EllipticQuery(ParamPair(2.0, 3.0), r=2.5, k=k)
    print(
        f"  k={k}: K={integrals.elliptic_K(qy):.12f}"
        f"  E={integrals.elliptic_E(qy):.12f}"
    )
print(f"  (K(0) = E(0) = pi_pq/2 = {gtf.pi_pq(2.0, 3.0) / 2.0:.12f})")

print("\nElliott residual E1 K2 + K1 E2 - K1 K2 - pi_pq pi_sr / 4,")
print("with the complementary modulus k'^r = 1 - k^q:")
classical = integrals.elliott_residual(2.0, 2.0, 2.0, 0.5)
print(f"  classical Legendre (2,2,2, k=0.5): residual = {classical:.2e}")
for p, q, r, k in (
    (1.5, 2.0, 2.0, 0.3),
    (2.0, 3.0, 2.5, 0.8),
    (1.5, 3.0, 4.0, 0.6),
    (2.5, 2.5, 1.5, 0.5),
):
    res = integrals.elliott_residual(p, q, r, k)
    print(f"  (p,q,r)=({p},{q},{r}), k={k}: residual = {res:.2e}")

print(f"\npi/2 from the classical right-hand side: {math.pi / 2:.15f}")
