"""The genus-3 automorphism strata table and a coefficient-grid scan.

Run with:  python demos/06_strata_and_scan.py
"""

from ceresa_kit import stratum_info, verdict_consistency
from ceresa_kit.ceresa import scan, scan_csv_lines
from ceresa_kit.strata import labels

print("automorphism strata of non-hyperelliptic genus-3 curves:")
print(f"{'label':<7} {'dim':>3}  {'chow':<5} {'griffiths':<10} model")
for label in labels():
    r = stratum_info(label)
    print(f"{r.label:<7} {r.dim:>3}  {str(r.chow_torsion):<5}"
          f" {str(r.griffiths_torsion):<10} {r.model_equation or '-'}")
print()
print(f"table self-test: {verdict_consistency()}")
print()

# A small grid scan around the three-torsion family; grid points on the
# discriminant locus are reported as skipped.
print("scan of a in {-12}, b in {0..3}, c in {-12, 0}:")
for line in scan_csv_lines(scan([-12], [0, 1, 2, 3], [-12, 0])):
    print(" ", line)
