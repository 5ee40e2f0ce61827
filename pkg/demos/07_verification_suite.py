# The verification registry: every identity in the package as a check.
#
# Each named identity is registered once with a stable id; run_suite
# sweeps a glob over the registry, never aborts on failure, and returns
# deterministic reports.  The same machinery backs `carlitz verify`.

from carlitz import checks

print("== the registry ==")
for cid in sorted(checks.REGISTRY):
    spec = checks.REGISTRY[cid]
    print(f"{cid:<18} [{spec.kind}] {spec.description}")

print("\n== one check, directly ==")
rep = checks.run_check("thm-formulas-2", qs=(3,), d_max=5)
print(f"{rep.id}: {rep.status} ({rep.witness})")

print("\n== a glob over the product identities ==")
reports = checks.run_suite("thm-formulas-*", qs=(3, 4), d_max=4)
print(checks.reports_to_text(reports))

print("\n== machine-readable output ==")
print(checks.reports_to_ndjson(reports[:2]))
