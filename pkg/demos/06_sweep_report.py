"""
A verification sweep
====================

The harness evaluates the formula over a grid, verifies each witness,
recomputes the value by search and writes a JSON report.  Results are cached
on disk, so a second run is served from the cache.
"""

# %%
import tempfile

from genramsey.harness import ResultCache, SweepConfig, dump_report, run_sweep, strip_timing

# %%
cache = ResultCache(tempfile.mkdtemp())
config = SweepConfig(n_values=(4, 5, 6), k_values=(2, 3, 4, 5), p_max=10)
report = run_sweep(config, cache)
print(report["summary"], f"{report['timing']:.2f} s")

# %%
for cell in report["cells"][:6]:
    print({k: cell[k] for k in ("n", "r_star", "k", "case", "formula", "oracle", "witness", "certificate")})

# %%
# A warm rerun reproduces the report body exactly.
again = run_sweep(config, ResultCache(cache.directory))
print("identical apart from timing:", dump_report(strip_timing(report)) == dump_report(strip_timing(again)))
