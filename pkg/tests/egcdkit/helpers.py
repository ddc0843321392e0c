import random
from typing import Tuple

from egcdkit.core import Mat2, Row2, identity, mat2_mul, row_mul, step_matrix
from egcdkit.verify import EgcdTrace

__all__ = ["egcd_left_accumulated", "random_pair", "perturb_trace"]

_ROW_FIELDS = ("k", "q", "a", "b", "c", "d", "e", "f")


def egcd_left_accumulated(a: int, b: int) -> Tuple[int, int]:
    """
    The loop before the transpose step: step matrices are multiplied onto the
    left of [[c, e], [d, f]] and [1 0] * [[c, e], [d, f]] is returned
    """
    accumulated = identity()
    pair = Row2(a, b)
    while pair.r1 != 0:
        step = step_matrix(pair.r0, pair.r1)
        accumulated = mat2_mul(step, accumulated)
        pair = row_mul(pair, step)
    x, y = row_mul(Row2(1, 0), accumulated)
    return x, y


def random_pair(rng: random.Random, max_bits: int) -> Tuple[int, int]:
    return (
        rng.getrandbits(rng.randint(0, max_bits)),
        rng.getrandbits(rng.randint(0, max_bits)),
    )


def perturb_trace(trace: EgcdTrace, rng: random.Random) -> Tuple[EgcdTrace, str]:
    """
    Add 1 to one randomly chosen entry of one randomly chosen row

    :return: the mutated trace and a description of the mutation
    """
    index = rng.randrange(len(trace.steps))
    row = trace.steps[index]
    field = rng.choice([name for name in _ROW_FIELDS if getattr(row, name) is not None])
    mutated_row = row.model_copy(update={field: getattr(row, field) + 1})
    steps = list(trace.steps)
    steps[index] = mutated_row
    return trace.model_copy(update={"steps": steps}), f"row {index} field {field}"


def as_rows(matrix: Mat2):
    return [list(row) for row in matrix.rows()]
