# src/harness/census.py
# Census tables: GC^O values of w_0, support/B_inv^+ agreement counts and
# locally noncrossing counts.

from typing import List, Optional, Tuple

from config import settings
from errors import UsageError
from involutions import Involution, enumerate_vexillary
from logger import get_logger
from permgroup import Permutation
from resilience import WorkerPool, WorkerPoolConfig
from harness.report import CensusTable
from ortho import binv_plus_data, gc_values, gco, is_locally_noncrossing

logger = get_logger(__name__)

KINDS = ("values_table", "equality_census", "lnc_counts")

# rows at or above this size need --long-run
LONG_RUN_FROM = 7


def _require_long_run(n: int, kind: str) -> None:
    if n >= LONG_RUN_FROM and not settings.sweep.long_run:
        raise UsageError(f"{kind} for n={n} is a long-running job; pass --long-run or set GROTH_LONG_RUN=true")


def longest_involution(n: int) -> Involution:
    return Involution.from_permutation(Permutation(range(n, 0, -1)))


def w0_values(n: int) -> List[int]:
    """
    Sorted distinct nonzero GC^O_{w_0}(w) for w_0 = n...321.
    """
    return sorted(set(gc_values(longest_involution(n)).values()))


def values_table(n: int) -> CensusTable:
    if n < 1:
        raise UsageError(f"values_table needs n >= 1, got {n}")
    _require_long_run(n, "values_table")
    table = CensusTable(kind="values_table", columns=["n", "values"])
    for m in range(1, n + 1):
        values = w0_values(m)
        logger.info(f"values_table n={m}: {len(values)} distinct values")
        table.rows.append([m, values])
    return table


def _agreement(z: Involution) -> Tuple[bool, bool]:
    members = binv_plus_data(z).members
    return z.is_dominant(), gco(z).support() == members


def equality_census(n: int, jobs: Optional[int] = None) -> CensusTable:
    """
    Count dominant and vexillary z in I_n with supp(GC^O_z) = B_inv^+(z).
    """
    if n < 1:
        raise UsageError(f"equality_census needs n >= 1, got {n}")
    _require_long_run(n, "equality_census")
    jobs = settings.sweep.jobs if jobs is None else jobs

    cases = list(enumerate_vexillary(n))
    counts = {"dominant": [0, 0], "vexillary": [0, 0]}
    every = settings.sweep.progress_every

    def tally(index: int, outcome: Tuple[bool, bool]) -> None:
        dominant, equal = outcome
        classes = ("dominant", "vexillary") if dominant else ("vexillary",)
        for name in classes:
            counts[name][0] += int(equal)
            counts[name][1] += 1
        if (index + 1) % every == 0:
            logger.info(f"equality_census n={n}: {index + 1}/{len(cases)} involutions")

    pool = WorkerPool("equality_census", WorkerPoolConfig(max_workers=jobs, chunk_size=settings.sweep.chunk_size))
    pool.map_ordered(_agreement, cases, on_result=tally)

    table = CensusTable(kind="equality_census", columns=["class", "n", "equal", "total"])
    for name in ("dominant", "vexillary"):
        equal, total = counts[name]
        table.rows.append([name, n, equal, total])
    logger.info(
        f"equality_census n={n}: dominant {counts['dominant'][0]}/{counts['dominant'][1]}, "
        f"vexillary {counts['vexillary'][0]}/{counts['vexillary'][1]}"
    )
    return table


def lnc_counts(n_max: int) -> CensusTable:
    """
    Per n: locally noncrossing vexillary z in I_n, and those in I_{n+1} with z(1) = 1.
    """
    if n_max < 1:
        raise UsageError(f"lnc_counts needs n >= 1, got {n_max}")
    table = CensusTable(kind="lnc_counts", columns=["n", "locally_noncrossing", "fixing_one"])
    for n in range(1, n_max + 1):
        total = sum(1 for z in enumerate_vexillary(n) if is_locally_noncrossing(z))
        fixing = sum(1 for z in enumerate_vexillary(n + 1) if z(1) == 1 and is_locally_noncrossing(z))
        table.rows.append([n, total, fixing])
    return table


def run_census(kind: str, n: int, jobs: Optional[int] = None) -> CensusTable:
    if kind == "values_table":
        return values_table(n)
    if kind == "equality_census":
        return equality_census(n, jobs)
    if kind == "lnc_counts":
        return lnc_counts(n)
    raise UsageError(f"unknown census '{kind}', expected one of {KINDS}")
