"""The box and categorical products and their internal homs.

The square of the edge graph is where the two products differ: the box
product gives the commutative square, the categorical product adds one
diagonal.  Internal homs make both products biclosed; the currying
bijection is shown by exhaustive counting.
"""

from monocat import (
    curry,
    enumerate_homs,
    internal_hom,
    is_isomorphic,
    make_named,
    make_path,
    tensor,
    uncurry,
)

J1 = make_path(1, "directed")
J2 = make_path(2, "directed")
I1 = make_path(1, "undirected")

print("box square of the edge graph:")
print("  ", tensor("box", J1, J1).to_json())
print("categorical square (one extra diagonal):")
print("  ", tensor("categorical", J1, J1).to_json())
print("undirected categorical square is complete:",
      is_isomorphic(tensor("categorical", I1, I1),
                    make_named("k4r", "undirected")) is not None)
print()

print("internal hom of the edge graph into the length-two path:")
hbox = internal_hom("box", J1, J2)
hcat = internal_hom("categorical", J1, J2)
print("  box:        ", hbox.to_json())
print("  categorical:", hcat.to_json())
print()

print("the currying bijection Hom(A x B, C) = Hom(A, hom(B, C)), by count:")
for kind, H in (("box", hbox), ("categorical", hcat)):
    left = enumerate_homs(tensor(kind, J1, J1), J2)
    right = enumerate_homs(J1, H)
    print(f"  {kind:11s}: |Hom(J1 (x) J1, J2)| = {len(left)}"
          f" = |Hom(J1, hom(J1, J2))| = {len(right)}")
    for phi in left:
        psi = curry(kind, phi, J1, J1)
        assert uncurry(kind, psi, J1, J2) == phi
print("  every transpose round-trips exactly")
