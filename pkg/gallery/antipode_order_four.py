"""The antipode of a bosonization has order four.

On the 4-dimensional bosonization of the exterior algebra on one odd
generator, S sends w⊗e to w⊗σ and w⊗σ to -w⊗e, so S² = -1 on w⊗e.
"""

from superhopf.bosonization import bosonize
from superhopf.hopf import antipode_solve, exterior_hopf
from superhopf.spaces import GradedMap

Ah = bosonize(exterior_hopf(1)).Ahat
S = Ah.antipode_map
I = GradedMap.identity(Ah.space)

for i, name in enumerate(Ah.space.names):
    print(f"S({name}) = {Ah.fmt(S.cols[i])}")

print("S agrees with the convolution-inverse solve:", S == antipode_solve(Ah))
print("S² = id:", S @ S == I)
print("S⁴ = id:", (S @ S) @ (S @ S) == I)
