"""Presheaves over the graph index categories and the reflector.

A presheaf is a marked directed multigraph: it may carry parallel pair or
edge elements.  The reflector collapses those onto an honest graph; the
density construction rebuilds any graph as a colimit of representables.
"""

from monocat import (
    Presheaf,
    density_recolimit,
    embed,
    index_category,
    is_graph_presheaf,
    make_named,
    make_path,
    reflect,
    reflector_adjunction_check,
    representable,
    validate_presheaf,
)
from monocat.products import pair_label

print("hom-set sizes of the directed index category (rows = domain V, V2, E):")
for row in index_category("directed").hom_counts():
    print("  ", row)
print("undirected adds the edge reversal, so E -> E grows:")
print("  ", index_category("undirected").hom_counts()[2])
print()

J1 = make_path(1, "directed")
X = embed(J1)
print("embedding the edge graph gives carriers of sizes",
      (len(X.v_elems), len(X.pair_elems), len(X.edge_elems)))
print("its equations all hold:", validate_presheaf(X) == [])
print("and it is an honest graph presheaf:", is_graph_presheaf(X))
print()

pairs = {(u, v): pair_label(u, v) for u in "xy" for v in "xy"}
parallel = Presheaf(
    "directed", ("x", "y"), tuple(pairs.values()), ("e1", "e2", "lx", "ly"),
    {
        "p": {pairs[(u, v)]: u for u, v in pairs},
        "q": {pairs[(u, v)]: v for u, v in pairs},
        "delta": {u: pairs[(u, u)] for u in "xy"},
        "sigma": {pairs[(u, v)]: pairs[(v, u)] for u, v in pairs},
        "e": {"e1": pairs[("x", "y")], "e2": pairs[("x", "y")],
              "lx": pairs[("x", "x")], "ly": pairs[("y", "y")]},
        "ell": {"x": "lx", "y": "ly"},
    })
print("a presheaf with two parallel edges over (x, y) is not a graph:",
      not is_graph_presheaf(parallel))
print("the reflector collapses it:", reflect(parallel).to_json())
check = reflector_adjunction_check(parallel, J1)
print("reflector adjunction (morphisms on both sides agree):",
      check.presheaf_morphisms, "=", check.graph_homs)
print()

print("representables:", representable("V", "directed").to_json(), "|",
      representable("E", "directed").to_json())
square = make_named("csq", "directed")
result = density_recolimit(square)
print("the commutative square rebuilt from", result.points, "points and",
      result.edge_copies, "edge copies; witness:", result.witness.to_json_dict())
