"""
Checking the degree relations on random systems
===============================================

Draw certified semi-regular affine systems and run every check on them.
"""

import json

from semigb.verify import (
    InstanceSpec, random_affine_sequence, verify_all, verify_golden,
    verify_quadratic_dreg_table,
)

print("stored example passes:", verify_golden().passed)

for seed in range(5):
    spec = InstanceSpec(p=65521, n=4, m=5, degrees=(2, 2, 2, 2, 2), seed=seed)
    F = random_affine_sequence(spec)
    report = verify_all(F, spec=spec)
    bounds = report.to_dict()["checks"]["bounds"]["details"]["measured"]
    print(f"seed {seed}: passed={report.passed}",
          {k: bounds[k] for k in ("D", "max_gb_deg", "sd_hsd", "sd_mac", "macaulay_bound")})

# quadratic systems with m = n + 1: D = floor((n+1)/2) + 1
for row in verify_quadratic_dreg_table(range(2, 11)):
    print(json.dumps(row))
