# src/metrics/metrics.py
# Prometheus metrics for computations and verification sweeps.
# The CLI can dump the default registry to a file with --metrics-out, which is
# the textfile-collector format node_exporter picks up on shared compute boxes.
#
# Counters updated inside worker processes would be lost, so sweep metrics are
# recorded in the parent when results are merged.

from prometheus_client import Counter, Histogram

# Single computations requested through `compute`/`export`, by target (groth, ortho, gco, ...)
COMPUTE_REQUESTS_TOTAL = Counter(
    "groth_compute_requests_total",
    "Total number of single computations",
    ["target"],
)

# Sweep cases checked, by theorem id
SWEEP_CASES_TOTAL = Counter(
    "groth_sweep_cases_total",
    "Total number of sweep cases checked",
    ["theorem"],
)

# Sweep cases that produced a mismatch, by theorem id
SWEEP_FAILURES_TOTAL = Counter(
    "groth_sweep_failures_total",
    "Total number of sweep cases that failed",
    ["theorem"],
)

# Wall time of whole sweeps; buckets cover sub-second sanity sweeps up to hour-long censuses
SWEEP_DURATION_SECONDS = Histogram(
    "groth_sweep_duration_seconds",
    "Wall time of verification sweeps",
    ["theorem"],
    buckets=(0.1, 0.5, 1, 5, 15, 60, 300, 900, 1800, 3600, 7200),
)

# Peeling steps taken by the Grothendieck basis expansion
EXPANSION_STEPS_TOTAL = Counter(
    "groth_expansion_steps_total",
    "Total peeling steps performed by basis expansions",
)
