"""The three closed-form constructions, built and audited.

    python demos/families_tour.py
"""

import warnings

from sslp.audit import full_audit
from sslp.codes import transversal_action, z_expectations
from sslp.families import (
    EvenParityFamilySpec,
    ExtremaFamilySpec,
    ScreenWarning,
    build_642_code,
    build_even_parity_code,
    build_extrema_code,
    column_counts,
    even_parity_classes,
)


def show(label, code):
    gate = transversal_action(code)
    verdict = full_audit(code).verdict
    print(f"{label:<34} sizes {[len(s) for s in code.states]!s:<12} {gate.describe():<20} audit {verdict}")


print("two-slice extrema codes (uniform <Z_i> = 1 - 2s/m)")
for n, m in [(5, 5), (6, 7), (8, 11)]:
    for s in ExtremaFamilySpec.window(n, m):
        spec = ExtremaFamilySpec(n, m, s)
        if not spec.screen_ok:
            print(f"  n={n} m={m} s={s}: skipped, shift screen fails")
            continue
        code = build_extrema_code(spec)
        show(f"  n={n} m={m} s={s}  <Z>={z_expectations(code)[0][0]}", code)

with warnings.catch_warnings(record=True) as caught:
    warnings.simplefilter("always")
    code = build_extrema_code(ExtremaFamilySpec(5, 5, 1))
print(f"  forcing n=5 m=5 s=1 anyway: {caught[0].category.__name__}, audit {full_audit(code).verdict}")

print("\neven-parity codes (column-balanced supports, every <Z_i> = 0)")
for n, m, w, S in [(4, 4, (1, 1, 1, 1), (0, 2)), (6, 8, (6, 4, 0, 2, 7, 5), (0, 2)),
                   (6, 9, (1, 2, 5, 5, 7, 1), (0, 3, 6))]:
    spec = EvenParityFamilySpec(n, m, w, S)
    counts = [column_counts(c) for c in even_parity_classes(spec)]
    show(f"  n={n} m={m} S={S}", build_even_parity_code(spec))
    print(f"    ones per column: {counts}")

print("\ncharacter-signed ((6,4,2)) code")
show("  c642", build_642_code())
