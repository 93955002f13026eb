"""Building highest-weight crystals with path operators.

The crystal of a dominant weight is generated from the straight-line path
by the lowering operators; vertices are piecewise-linear paths and edges
are colored by the diagram vertices.

Run as:  python3 demos/02_crystal_graphs.py
"""

from crystal_forge import build_crystal, dynkin, verify_axioms
from crystal_forge.paths import highest_path, path_f

a1 = dynkin("A", 1)
a2 = dynkin("A", 2)

print("== One lowering step splits the straight path ==")
p = highest_path(a1, (2,))
print("  start:", p)
print("  f_0:  ", path_f(a1, 0, p))
print("  f_0^2:", path_f(a1, 0, path_f(a1, 0, p)))
print("  f_0^3:", path_f(a1, 0, path_f(a1, 0, path_f(a1, 0, p))))

print("\n== The adjoint crystal of A2 ==")
adjoint = build_crystal(a2, (1, 1))
print("  vertices:", len(adjoint))
print("  weights:", sorted(adjoint.character().items(), reverse=True))
print("  axiom violations:", verify_axioms(adjoint))

print("\n== String lengths at the zero-weight vertices ==")
for v, w in enumerate(adjoint.weights):
    if w == (0, 0):
        eps = [adjoint.epsilon(v, i) for i in range(2)]
        phi = [adjoint.phi(v, i) for i in range(2)]
        print(f"  vertex {v}: eps = {eps}, phi = {phi}")

print("\n== DOT export (paste into graphviz) ==")
print(build_crystal(a2, (1, 0)).to_dot())
