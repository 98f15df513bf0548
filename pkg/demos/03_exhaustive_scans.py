#!/usr/bin/env python3
#
# Exhaustive sweeps.
#
# The theorem scans cross-check the linear-algebra finders against the
# brute-force oracle on every threshold-size family.  A counterexample there
# would mean a bug.  The conjecture scan is different: it looks at every
# Sperner family (no member contains another) of size n+1, where no proof is
# known, so a clean run is evidence and nothing more.
#
import sys

from balfam import scan_conjecture, scan_theorem

for kind, n, k in [("theorem1", 3, None), ("theorem2", 3, None),
                   ("theorem3", 4, 2), ("theorem3", 5, 2)]:
    report = scan_theorem(kind, n, k)
    print(report.summary(), f"({report.elapsed:.2f}s)")

for n in (3, 4, 5):
    report = scan_conjecture(n)
    print(report.summary(), f"({report.elapsed:.2f}s)")

#
# The sweep splits by the first (smallest) member, so chunks can run in
# separate processes and merge back to the identical report.
#
jobs = int(sys.argv[1]) if len(sys.argv) > 1 else 2
print("parallel n=5 matches serial:", scan_conjecture(5, jobs=jobs) == scan_conjecture(5))
