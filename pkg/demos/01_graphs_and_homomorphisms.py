"""Reflexive graphs, homomorphisms, and isomorphism testing.

Builds the standard small graphs, enumerates homomorphism sets, collapses
vertices with quotients, and shows the canonical JSON and DOT renderings.
"""

from monocat import (
    discrete_partition,
    disjoint_union,
    enumerate_homs,
    is_isomorphic,
    make_named,
    make_path,
    quotient,
    to_dot,
)

edge = make_path(1, "directed")
path2 = make_path(2, "directed")
square = make_named("csq", "directed")

print("the directed edge graph:", edge.to_json())
print("a length-two path:      ", path2.to_json())
print()

print("every vertex is implicitly looped, so the constant map is a hom:")
for h in enumerate_homs(edge, make_path(0, "directed")):
    print("  edge -> point:", h.to_json_dict())
print()

print(f"homs edge -> edge ({len(enumerate_homs(edge, edge))} of them):")
for h in enumerate_homs(edge, edge):
    print("  ", h.to_json_dict())
print(f"homs edge -> path2: {len(enumerate_homs(edge, path2))}")
print()

print("the commutative square and a quotient merging its corners:")
print("  square:", square.to_json())
merged = quotient(square, [{"a", "d"}, {"b"}, {"c"}])
print("  merge a,d:", merged.to_json())
print("  discrete quotient is the graph itself:",
      quotient(square, discrete_partition(square)) == square)
print()

two_pieces = disjoint_union(edge, make_path(0, "directed"))
print("disjoint union tags the sides:", two_pieces.to_json())
swapped = disjoint_union(make_path(0, "directed"), edge)
witness = is_isomorphic(two_pieces, swapped)
print("coproduct symmetry witness:", witness.to_json_dict())
print()

print("DOT rendering of the square:")
print(to_dot(square))
