"""
Scanning every small connected graph
====================================

Run the conjecture and theorem checks over all connected graphs up to
isomorphism.  A clean scan only means no counterexample exists in the
range searched.
"""

import time

from biregular.harness import ScanJob, run_scan

for job in [ScanJob(7, ("con_square", "lemma_conditions")),
            ScanJob(6, ("con_full",), r_max=4),
            ScanJob(5, ("theorem_table",), r_max=3)]:
    t = time.perf_counter()
    res = run_scan(job)
    print(f"{','.join(job.checks):28s} n<={job.n_max}: {res.connected_count:4d} graphs "
          f"{res.kind_counts} passed={res.passed} ({time.perf_counter() - t:.1f}s)")
