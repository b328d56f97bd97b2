# src/permgroup/__init__.py
# Finitely supported permutations: statistics, diagrams, Demazure products, Bruhat order

from .permutation import Permutation, PermutationError, lehmer_code, from_code
from .diagrams import (
    RotheData,
    rothe,
    rothe_diagram,
    diagram_rows,
    is_vexillary,
    is_vexillary_by_rows,
    is_dominant,
    diagram_shape,
)
from .partitions import (
    Partition,
    PartitionError,
    NotStrictError,
    as_partition,
    as_strict_partition,
    parse_partition,
    transpose,
    is_symmetric,
    strict_partitions,
    render_partition,
)
from .bruhat import (
    NotShiftableError,
    TooManyPartsError,
    bruhat_leq,
    bruhat_cover,
    one_times,
    shift_down,
    embed,
    grassmannian,
    is_grassmannian,
)
from .hecke import reduced_word, demazure, demazure_simple, demazure_word, hecke_words


def length_stats(w: Permutation):
    """
    (length, right descents, left descents).
    """
    return w.length(), w.des_r(), w.des_l()


def all_permutations(n: int):
    """
    S_n in lexicographic one-line order.
    """
    from itertools import permutations
    for values in permutations(range(1, n + 1)):
        yield Permutation(values)


__all__ = [
    "Permutation",
    "PermutationError",
    "lehmer_code",
    "from_code",
    "length_stats",
    "all_permutations",
    "RotheData",
    "rothe",
    "rothe_diagram",
    "diagram_rows",
    "is_vexillary",
    "is_vexillary_by_rows",
    "is_dominant",
    "diagram_shape",
    "Partition",
    "PartitionError",
    "NotStrictError",
    "as_partition",
    "as_strict_partition",
    "parse_partition",
    "transpose",
    "is_symmetric",
    "strict_partitions",
    "render_partition",
    "NotShiftableError",
    "TooManyPartsError",
    "bruhat_leq",
    "bruhat_cover",
    "one_times",
    "shift_down",
    "embed",
    "grassmannian",
    "is_grassmannian",
    "reduced_word",
    "demazure",
    "demazure_simple",
    "demazure_word",
    "hecke_words",
]
