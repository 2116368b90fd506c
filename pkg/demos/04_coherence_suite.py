"""Running the monoidal coherence verifier.

The verifier exercises bifunctoriality, associativity and unit coherence,
biclosedness, and colimit preservation over the default corpus.  Fault
injection shows the suite is sensitive: flipping one edge of the tensor
square breaks a law with a replayable counterexample.
"""

from monocat import builtin_oracle, run_all, square_edge_flips, with_square
from monocat.verify import first_failure
from monocat.graphs import make_named, make_path

oracle = builtin_oracle("box", "directed")
print("verifying the box product on the default directed corpus:")
for report in run_all(oracle):
    for law in report.laws:
        print(f"  {report.check}/{law.law}: "
              f"{'PASS' if law.passed else 'FAIL'} ({law.instances} instances)")
print()

corpus = [make_named("empty", "directed"), make_path(0, "directed"),
          make_path(1, "directed"), make_path(2, "directed")]
pair, flipped = next(iter(square_edge_flips(oracle)))
print(f"now flip the square edge {pair} and re-run:")
failure = first_failure(with_square(oracle, flipped), corpus)
law = next(l for l in failure.laws if not l.passed)
print(f"  first failing law: {failure.check}/{law.law}")
print(f"  counterexample: {law.counterexample}")
