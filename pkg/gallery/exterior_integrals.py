"""Integrals on exterior algebras and on their bosonizations.

The exterior algebra on n odd primitives has a one-dimensional space of
integrals spanned by the coefficient of the top monomial.  Bosonizing
trades the odd generators for an ordinary Hopf algebra where left and
right integrals no longer agree.
"""

from superhopf.bosonization import bosonize
from superhopf.hopf import exterior_hopf
from superhopf.integrals import boson_transport, classify

for n in range(1, 5):
    A = exterior_hopf(n)
    rep = classify(A)
    print(f"n={n}: dim {A.dim}, integral {rep.as_dict(A)['integral']}, "
          f"parity {rep.parity}, unimodular {rep.unimodular}")

b = bosonize(exterior_hopf(1))
Ah = b.Ahat
rep = classify(Ah)
print("\nbosonized line:", rep.as_dict(Ah))
print("left integral:", {Ah.space.name(i): str(c) for i, c in rep.left_basis[0].items()})

# the transported integral is ψ ⊗ ω with ω picking the coefficient of e
psi = classify(exterior_hopf(1)).phi
print("transport of the exterior integral:", {Ah.space.name(i): str(c) for i, c in boson_transport(b, psi).items()})
