"""Frobenius data and unimodularity for small Lie super-algebras.

For the Borel algebra [h, w] = w the character δ(h) = 1 is non-trivial;
on the Laurent carrier Δ(w) = w⊗1 + t⊗w the distinguished grouplike of
the explicit integral is t, whose image in the even part is δ.
"""

from superhopf import corpus
from superhopf.integrals import laurent_distinguished_grouplike, verify_integral_window
from superhopf.lie import delta_character, dual_basis, explicit_integral_laurent, unimodularity

g = corpus.borel()
fd = dual_basis(g)
print("Borel dual basis:", {J: str(y) for J, y in fd.y.items()}, "z =", fd.z)
print("δ =", {k: str(v) for k, v in delta_character(g).items()})

G = corpus.laurent_borel()
ex = explicit_integral_laurent(G)
print("φ(w t^m) for m=-2..2:", [str(ex.phi((1,), (m,))) for m in range(-2, 3)])
print("window 10 failures:", verify_integral_window(G, ex.phi, 10))
print("γ exponent:", laurent_distinguished_grouplike(G, ex.phi))

for name in ("borel", "gl11", "osp12", "odd-heisenberg"):
    rep = unimodularity(corpus.LIE_BUILTINS[name]())
    print(f"{name}: δ = {dict((k, str(v)) for k, v in rep['delta'].items())}, unimodular {rep['unimodular']}")
