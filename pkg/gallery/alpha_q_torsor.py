"""A non-trivial α_3-torsor over an odd base.

C is the exterior algebra on two odd generators over F_3 and
B = C[T]/(T^3 - w1 w2) with T primitive.  The coaction is free and
B ⊗_C B ≅ B ⊗ A, but no primitive change of variable kills w1 w2.
"""

import time

from superhopf.comodule import alpha_q_bundle, alpha_q_trivializable, comodule_injective, exterior_C, invariants, torsor_check

C = exterior_C(3)
for label, tau in (("w1w2", {3: 1}), ("0", {}), ("1 + w1w2", {0: 1, 3: 1})):
    t0 = time.perf_counter()
    b = alpha_q_bundle(3, 1, C, tau)
    v = torsor_check(b)
    print(f"τ = {label}: dim B = {b.B.dim}, invariants {invariants(b).dim}, "
          f"β {v.dim_relative_tensor}→{v.dim_target} bijective {v.beta_bijective}, torsor {v.torsor}, "
          f"injective {comodule_injective(b)}, trivializable {alpha_q_trivializable(C, tau, 3)} "
          f"[{time.perf_counter() - t0:.2f}s]")

# characteristic 2, q = 4
b = alpha_q_bundle(2, 2, exterior_C(2), {3: 1})
print("p=2, q=4:", torsor_check(b).torsor)
