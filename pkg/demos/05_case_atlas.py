"""The bundled case atlas: desk-scale rows verified end to end, big rows as metadata.

Each case records a transitive simple group together with the subgroups
whose factorisation produces a Cartesian decomposition. Desk-scale cases
are rebuilt and re-verified from generators on every run; the large
classical-group rows ship as recorded metadata only.
"""

import json

from permdec.atlas import list_cases, load_case, verify_case

print(f"{'case':12s} {'desk':5s} citation")
for name, citation, desk in list_cases():
    print(f"{name:12s} {'yes' if desk else 'no':5s} {citation}")

print()
for name, _, desk in list_cases():
    if not desk:
        continue
    report = verify_case(name)
    status = "ok" if report["ok"] else f"FAILED {report.get('failures')}"
    print(f"verify {name}: {status} ({len(report['checks'])} checks)")

print()
record = load_case("POMEGA8_3")
print("a row beyond desk scale, kept as metadata:")
print(json.dumps(record.expected, indent=2))
