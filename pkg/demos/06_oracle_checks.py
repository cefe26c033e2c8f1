"""Run the quadrature cross-checks and print the full scoreboard.

Every closed form in the package is re-derived here by a route that
shares no code with it: scipy Hermite polynomials instead of the
recurrence, mapped Gauss-Hermite integration instead of algebra, dense
scans instead of root finding.  Agreement at tight tolerances is the
correctness argument for both sides.
"""

from harmonium import run_verification

checks = run_verification(lambdas=(0.1, 0.3), qs=(0.5, 0.4))

width = max(len(c["check"]) for c in checks)
print(f"{'check':<{width}} {'error':>12} {'tolerance':>11} verdict")
for c in checks:
    verdict = "pass" if c["pass"] else "FAIL"
    print(f"{c['check']:<{width}} {c['error']:12.3e} {c['tolerance']:11.0e} {verdict}")

passed = sum(1 for c in checks if c["pass"])
print()
print(f"{passed}/{len(checks)} checks pass")
if passed != len(checks):
    raise SystemExit(1)
