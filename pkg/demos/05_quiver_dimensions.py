"""Dimension formulas for quiver varieties and their strata.

Everything here is closed-form integer arithmetic: dimensions of the
moment-map locus, of stable/bistable quotients, of tensor-product and
multiplicity strata, plus the fiber dimensions of the splitting maps used
to relate them.  Several quantities have two independent derivations, so
their agreement is a strong internal check.

Run as:  python3 demos/05_quiver_dimensions.py
"""

from crystal_forge import (
    StratumParams,
    basic_dims,
    core_split_fiber_dim,
    dynkin,
    gprime_weight,
    hw_weight,
    strat_dims,
    v_from_weight,
)
from crystal_forge.dynkin import pairing

a1 = dynkin("A", 1)
a2 = dynkin("A", 2)

print("== One-vertex sanity: dim = 2 v (d - v) ==")
rec = basic_dims(a1, (5,), (2,))
print("  d=5, v=2:", rec["dim_bistable_variety"], "== 12")

print("\n== A2 records ==")
rec = basic_dims(a2, (2, 2), (1, 1), v0=(1, 0))
for key, value in rec.items():
    print(f"  {key}: {value}")

print("\n== Tensor-product stratum: two derivations of one number ==")
params = StratumParams(a2, (2, 2), (1, 1), ((2, 0), (0, 2)), ((1, 0), (0, 1)))
dims = strat_dims(params)
direct = dims["dim_tensor_variety"]
ms = basic_dims(a2, (2, 2), (1, 1))["dim_quiver_variety"]
mss = sum(
    basic_dims(a2, ds, vs)["dim_bistable_variety"]
    for ds, vs in zip(params.d_tuple, params.v_tuple)
)
print("  explicit formula:  ", direct)
print("  half-sum of pieces:", (ms + mss) // 2)

print("\n== Splitting off the kernel core costs a computable fiber ==")
d, u, t = (2, 1), (1, 0), (0, 1)
print("  fiber dimension:", core_split_fiber_dim(a2, d, u, t))

print("\n== Weight dictionaries ==")
d, v0 = (2, 0), (1, 0)
mu = hw_weight(a2, d, v0)
print(f"  label (d={d}, v0={v0}) has highest weight {mu}")
print("  inverting the dictionary:", v_from_weight(a2, d, mu))
print("  extended weight:", gprime_weight(a2, d, v0))
