"""Linearizing without disturbing one chosen grade.

Plain linearization may raise comparable entries as collateral: in the
7-element sample the grade of (x1, x4) starts at 0.55 but ends at 0.60.
When that grade matters, the clamp construction caps the linear extension
at beta = r(a, b) wherever the original grade was at most beta:

    s(x, y) = r'(x, y)            where r(x, y) >  beta
    s(x, y) = min(beta, r'(x, y)) where r(x, y) <= beta

The result is still a linear order extending the input, and s(a, b) = beta.
"""

from pathlib import Path

from fuzzorder import clamp_extend, extends, is_linear, linearize, load_matrix

FIXTURES = Path(__file__).resolve().parents[1] / "fixtures"

r, _ = load_matrix(FIXTURES / "order7.csv")

print("=" * 64)
print("The problem: linearization drifts the grade we care about")
print("=" * 64)
base = linearize(r).relation
print(f"r(x1,x4)  = {r.value('x1', 'x4'):g}   (the grade to preserve)")
print(f"r'(x1,x4) = {base.value('x1', 'x4'):g}   (after plain linearization)")
print()

result = clamp_extend(r, "x1", "x4")
s = result.relation
print("=" * 64)
print(f"The fix: clamp the linear extension at beta = {result.beta:g}")
print("=" * 64)
for label, row in zip(s.labels, s.tolists()):
    print(f"  {label}: {[f'{v:g}' for v in row]}")
print()
print(f"s(x1,x4) = {s.value('x1', 'x4'):g}  (preserved exactly)")
print(f"still a linear order: {bool(is_linear(s))}")
print(f"still extends the input: {extends(r, s)}")
print()
print("Where the input grade exceeded beta the base value survives, e.g.")
print(f"  r(x1,x7) = {r.value('x1', 'x7'):g} > beta, so s(x1,x7) = "
      f"{s.value('x1', 'x7'):g} (the base value)")
print("everywhere else the cap applies, e.g.")
print(f"  r(x4,x5) = {r.value('x4', 'x5'):g} <= beta, so s(x4,x5) = "
      f"min(beta, 1) = {s.value('x4', 'x5'):g}")
