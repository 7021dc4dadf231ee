"""Walk one parameter tuple through the whole pipeline, printing each stage.

    python demos/worked_example.py
"""

from sslp.audit import full_audit
from sslp.bitspace import SearchParams, residue_classes, union_distance
from sslp.codes import assemble, transversal_action
from sslp.screens import shift_screen
from sslp.zfeas import build_lp, solve_feasibility

params = SearchParams(n=5, K=2, m=7, w=(1, 1, 2, 2, 2), S=(0, 4))
print(f"parameters: n={params.n} K={params.K} m={params.m} w={params.w} S={params.S}\n")

# 1. residue classes: every 5-bit string lands in exactly one class mod 7
classes = residue_classes(params)
for s, c in zip(params.S, classes):
    print(f"C_{s}: {' '.join(map(str, c))}")

# 2. the shift screen guarantees that no single bit flip links two classes
print(f"\nshift screen passes: {bool(shift_screen(params))}")
print(f"union distance: {union_distance(classes)}")

# 3. exact LP: find probabilities so every class has the same <Z_i>
lp = build_lp(classes, modulus=params.m)
rows, cols = lp.shape
print(f"\nZ-marginal program: {rows} equations, {cols} unknowns")
table = solve_feasibility(lp)
for j, block in enumerate(table.blocks):
    print(f"  state {j}: " + ", ".join(f"{x}:{p}" for x, p in block.items()))
print("  <Z_i> = " + ", ".join(str(z) for z in table.z_expectations()[0]))

# 4. amplitudes are square roots of the probabilities; audit everything
code = assemble(params, table)
report = full_audit(code)
print(f"\naudit: {report.verdict} ({len(report.kl)} KL checks over modes {', '.join(sorted(report.modes))})")

gate = transversal_action(code)
print(f"transversal Z(2 pi w_i / m) acts as {gate.describe()}, logical order {gate.order}")
