# src/permgroup/partitions.py
# Integer partitions and strict partitions as nonincreasing tuples of positive parts

import re
from typing import Iterable, Iterator, Tuple

from errors import PreconditionError, UsageError

Partition = Tuple[int, ...]


class PartitionError(UsageError):
    pass


class NotStrictError(PreconditionError):
    pass


def as_partition(parts: Iterable[int]) -> Partition:
    """
    Validate and normalize: trailing zeros are dropped.
    """
    parts = [int(p) for p in parts]
    while parts and parts[-1] == 0:
        parts.pop()
    if any(p <= 0 for p in parts) or any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise PartitionError(f"{tuple(parts)} is not a partition")
    return tuple(parts)


def as_strict_partition(parts: Iterable[int]) -> Partition:
    lam = as_partition(parts)
    if any(lam[i] == lam[i + 1] for i in range(len(lam) - 1)):
        raise NotStrictError(f"not strict: {lam}")
    return lam


def parse_partition(text: str) -> Partition:
    """
    "3,2,1", "3 2 1", "(3,2,1)" or digit strings like "321"; "" and "0" are the empty partition.
    """
    body = text.strip().strip("()[]").strip()
    if body in ("", "0"):
        return ()
    try:
        if re.fullmatch(r"\d+", body):
            return as_partition(int(ch) for ch in body)
        return as_partition(int(x) for x in re.split(r"[,\s]+", body) if x)
    except ValueError as e:
        raise PartitionError(f"malformed partition '{text}'") from e


def transpose(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for part in lam if part > j) for j in range(lam[0]))


def is_symmetric(lam: Partition) -> bool:
    return tuple(lam) == transpose(tuple(lam))


def size(lam: Partition) -> int:
    return sum(lam)


def strict_partitions(max_part: int) -> Iterator[Partition]:
    """
    All strict partitions with parts in [1, max_part], shortest first.
    """
    from itertools import combinations
    for r in range(max_part + 1):
        for parts in combinations(range(max_part, 0, -1), r):
            yield tuple(parts)


def render_partition(lam: Partition) -> str:
    if not lam:
        return "()"
    return "(" + ",".join(str(p) for p in lam) + ")"
