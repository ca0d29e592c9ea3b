"""End-to-end tour on the smallest interesting ideal, I = (xy, yz, zu).

Orders the generators, builds the tree behind the minimal resolution of
I, then resolves I^2: six generators, six relations, one second syzygy.
"""

from morsepow import (
    PowerBasis,
    betti,
    build_resolution,
    format_monomial,
    order_generators,
    parse_generators,
    pd_computed,
    resolution_tree,
)

gens, variables = parse_generators(["x*y", "y*z", "z*u"])
og = order_generators(gens, variables)

print("generators in leaf order:",
      [format_monomial(m, variables) for m in og.generators])
print("joint of each generator (1-based):", [j + 1 for j in og.joints])
print("complement facets:",
      [sorted(variables.name(v) for v in f) for f in og.facets])

tree = resolution_tree(og)
print("\ntree supporting the resolution of I:")
for i, j, label in tree.edges:
    print(f"  m_{j+1} -- m_{i+1}   labeled {format_monomial(label, variables)}")

# the generators of I^2 are indexed by exponent vectors of weight two,
# listed from the colex-largest down
basis = PowerBasis(og, 2)
print(f"\nI^2 has {basis.size} generators:")
for a, m in zip(basis.vectors, basis.monomials):
    print(f"  {a} -> {format_monomial(m, variables)}")

complex = build_resolution(None, 2, og=og)
print("\nresolution of I^2: ranks", complex.ranks(),
      "length", complex.length, "pd", pd_computed(complex))

table = betti(complex)
print("\nBetti table:")
print(table.render())

print("\ndifferential in degree 1 (column label, sign, shift, row label):")
for (row, col), (coeff, shift) in sorted(complex.maps[1].items()):
    print(
        f"  {format_monomial(complex.labels[1][col], variables):14}"
        f" {coeff:+d} * {format_monomial(shift, variables):6}"
        f" -> {format_monomial(complex.labels[0][row], variables)}"
    )
