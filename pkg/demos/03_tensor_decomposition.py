"""Tensor products, decompositions, and multiplicities.

The tensor product uses the signature rule per color; decomposing the
result counts highest vertices and certifies each component against the
generic crystal of its weight.  Multiplicities computed this way are the
Littlewood-Richardson numbers (and their ADE generalizations).

Run as:  python3 demos/03_tensor_decomposition.py
"""

from crystal_forge import build_crystal, decompose, dynkin, multiplicity, tensor
from crystal_forge.sl2 import sl2_mult_range

a1 = dynkin("A", 1)
a2 = dynkin("A", 2)
d4 = dynkin("D", 4)

print("== Clebsch-Gordan on a pair of chains ==")
t = tensor(build_crystal(a1, (3,)), build_crystal(a1, (2,)))
print("  B(3) x B(2) =", dict(decompose(t).summands))
print("  closed-form component labels:", sl2_mult_range(3, 0, 2, 0))

print("\n== The A2 adjoint squared (64 vertices) ==")
t = tensor(build_crystal(a2, (1, 1)), build_crystal(a2, (1, 1)))
dec = decompose(t)
for w, m in sorted(dec.summands.items(), reverse=True):
    print(f"  {w}: {m}")

print("\n== Multiplicities straight from the count of highest vertices ==")
print("  mult((1,1); (1,1),(1,1)) =", multiplicity(a2, (1, 1), [(1, 1), (1, 1)]))
print("  mult((2,2); (1,1),(1,1)) =", multiplicity(a2, (2, 2), [(1, 1), (1, 1)]))
print("  mult((0,0); (1,0),(0,1)) =", multiplicity(a2, (0, 0), [(1, 0), (0, 1)]))

print("\n== Triality on D4: three 8-dimensional crystals ==")
vec = build_crystal(d4, (1, 0, 0, 0))
spin_plus = build_crystal(d4, (0, 0, 1, 0))
print("  vector x vector:  ", dict(decompose(tensor(vec, vec)).summands))
print("  vector x spinor:  ", dict(decompose(tensor(vec, spin_plus)).summands))

print("\n== Bracketing does not change the multiset of summands ==")
a, b, c = (build_crystal(a2, hw) for hw in [(1, 0), (0, 1), (1, 1)])
left = decompose(tensor(tensor(a, b), c)).summands
right = decompose(tensor(a, tensor(b, c))).summands
print("  (a x b) x c:", dict(left))
print("  a x (b x c):", dict(right))
print("  equal:", left == right)
