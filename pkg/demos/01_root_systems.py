"""Tour of the root-system layer: diagrams, weights, reflections.

Run as:  python3 demos/01_root_systems.py
"""

from crystal_forge import dynkin, pairing, parse_diagram

print("== Building diagrams ==")
for name in ("A2", "D4", "E6"):
    diagram = parse_diagram(name)
    print(f"{diagram.label}: rank {diagram.rank}, edges {diagram.edges}")

a2 = dynkin("A", 2)
print("\n== Cartan matrix and its companion X = 2*Id - A (A2) ==")
for row in a2.cartan:
    print("  A:", row)
for row in a2.x_matrix:
    print("  X:", row)

print("\n== Simple roots in weight coordinates ==")
for i in range(a2.rank):
    print(f"  alpha_{i} =", a2.simple_root(i))

print("\n== Reflections are involutions ==")
w = (1, 0)
r = a2.weyl_reflect(0, w)
print(f"  s_0{w} = {r};  s_0(s_0{w}) = {a2.weyl_reflect(0, r)}")

print("\n== The pairing is compatible with X ==")
v, u = (2, -1), (1, 3)
print("  <Xv, u> =", pairing(a2.apply_x(v), u), " <v, Xu> =", pairing(v, a2.apply_x(u)))

print("\n== Positive roots and module dimensions ==")
d4 = dynkin("D", 4)
print("  D4 has", len(d4.positive_roots()), "positive roots")
for hw in [(1, 0, 0, 0), (0, 1, 0, 0), (1, 1, 0, 0)]:
    print(f"  dim of the D4 module with highest weight {hw}:", d4.weyl_dimension(hw))
