"""Survey of split bundles: positivity, Picard rank, verdicts.

Sweeps every monotone exponent triple in a range, exactly like the CLI's
``cycone survey`` (the CLI adds TSV/JSON output and filters on top of the
same rows).  Two structural facts appear in the data:

* whenever -K_Z is nef, gamma >= -18, and the verdict is Rational;
* the admissible splitting types for -1 <= c1 <= 4 form a short table.
"""

from collections import Counter

from cycone import cone
from cycone.report import SURVEY_COLUMNS, survey_row
from cycone.chow import split_types

rows = [survey_row(t) for t in split_types(-4, 4)]
print(f"{len(rows)} split types with exponents in [-4, 4]")

nef_rows = [r for r in rows if r.nef]
print(f"{len(nef_rows)} of them have nef -K_Z; gamma range:",
      (min(r.gamma for r in nef_rows), max(r.gamma for r in nef_rows)))
assert all(r.gamma >= -18 for r in nef_rows)
assert all(r.verdict == "Rational" for r in nef_rows)
print("every nef case is Rational, and nef forces gamma >= -18")

print()
print("verdict and rank distribution over the nef rows:")
print("  rho:", dict(Counter(r.rho for r in nef_rows)))
print("  ample:", dict(Counter(r.ample for r in nef_rows)))

# The nef non-ample rows are where the anticanonical map contracts a
# surface; their types normalize into the admissible table.
print()
print("nef-but-not-ample rows:")
header = "  " + "\t".join(SURVEY_COLUMNS)
print(header)
for r in nef_rows:
    if not r.ample:
        print("  " + "\t".join(r.cells()))

print()
print("admissible splitting types by c1:")
for c1 in range(-1, 5):
    print(f"  c1 = {c1:>2}: {cone.allowed_splitting_types(c1)}")
