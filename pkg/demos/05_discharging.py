"""Exact discharging: charges, rules, conservation, and the audits.

Charges live in integer twelfths.  On any embedded fixture the transfers
cancel pairwise, so the total stays -20; negative final charges are
expected on real inputs (they host reducible configurations) and are
reported as diagnostics, never as errors.
"""

from chooselab.discharging import (audit_case_ledger, audit_family_partition,
                                   audit_inequality_6plus,
                                   audit_transfer_observations, final_charges,
                                   sweep_4face, twelfths_str)
from chooselab.plane import cube_graph, grid_patch

for name, G in (("cube", cube_graph()), ("4x4 grid patch", grid_patch(3, 3))):
    led = final_charges(G)
    print(f"{name}: total {twelfths_str(led.total_final)}, "
          f"conserved={led.conserved}, "
          f"{len(led.negatives)} elements end negative")

print("\nledger rows for the cube (3-regular, so only gaps, no transfers):")
for row in final_charges(cube_graph()).rows[:4]:
    print(f"  {row['element']}: initial {twelfths_str(row['initial'])}, "
          f"final {twelfths_str(row['final'])}")

print("\naudits:")
findings, catch_all = audit_family_partition()
print(f"  family partition: {len(findings)} double matches, "
      f"{catch_all} patterns fall to the 1/2 catch-all")
print(f"  observation floors: {len(audit_transfer_observations())} findings")
print(f"  high-degree bound (d <= 12): "
      f"{len(audit_inequality_6plus(12))} findings")
print(f"  displayed case arithmetic: {len(audit_case_ledger())} mismatches")
findings, surviving, excluded = sweep_4face()
print(f"  4-face sweep: {surviving} scenarios survive the exclusions, "
      f"{len(findings)} collect less than 2")
