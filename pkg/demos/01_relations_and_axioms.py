"""What makes a fuzzy relation a fuzzy order, and what the checker reports.

A fuzzy relation grades every ordered pair of elements with a number in
[0, 1].  Three axioms turn it into an order: each element relates fully to
itself, no two distinct elements relate positively in both directions, and
every two-step path is dominated by its direct edge (max-min transitivity).
"""

from fuzzorder import FuzzyRelation, check_order, incomparable_pairs, is_linear

print("=" * 64)
print("A valid fuzzy order on three alternatives")
print("=" * 64)

r = FuzzyRelation(("a", "b", "c"), [
    [1, 0, 0.4],
    [0, 1, 0],
    [0, 0, 1],
])
report = check_order(r)
print(f"reflexive:     {report.reflexive}")
print(f"antisymmetric: {report.antisymmetric}")
print(f"transitive:    {report.transitive}")
print(f"fuzzy order:   {report.is_order}")
print()
print("Only (a, c) is comparable, at grade 0.4.  The other two pairs are")
print("incomparable, so the order is partial rather than linear:")
print(f"  linear: {bool(is_linear(r))}")
print(f"  incomparable pairs: "
      f"{[(p.first.label, p.second.label) for p in incomparable_pairs(r)]}")
print()

print("=" * 64)
print("Breaking each axiom produces a concrete witness")
print("=" * 64)

low_diagonal = r.with_value("b", "b", 0.9)
print("diagonal lowered:", check_order(low_diagonal).reflexivity_witnesses)

two_way = r.with_value("c", "a", 0.2)
print("both directions positive:", check_order(two_way).antisymmetry_witnesses)

chain_break = FuzzyRelation(("a", "b", "c"), [
    [1, 0.5, 0],
    [0, 1, 0.5],
    [0, 0, 1],
])
w = check_order(chain_break).transitivity_witnesses
print("path not dominated:", w)
print()
print("The last witness reads: the direct grade r(a,c) = 0 is smaller than")
print("min(r(a,b), r(b,c)) = 0.5, so the two-step path via b is not covered.")
