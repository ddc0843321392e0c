from enum import Enum
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

__all__ = ["BenchVariant", "BenchConfig", "BenchReport"]


class BenchVariant(str, Enum):
    RECURSIVE = "recursive"
    ITERATIVE = "iterative"


class BenchConfig(BaseModel):
    """
    Parameters of one benchmark run

    :param variant: which algorithm to time
    :param bits: exact bit length of the first operand of every pair
    :param count: number of pairs
    :param seed: seed of the operand generator, the same seed gives the same
        operands for every variant
    :param warmup: run the first pair once untimed before measuring
    """

    variant: BenchVariant = BenchVariant.ITERATIVE
    bits: int = Field(default=64, ge=2)
    count: int = Field(default=10, ge=1)
    seed: int = 0
    warmup: bool = True


class BenchReport(BaseModel):
    """
    Timing and iteration statistics of one benchmark run.
    Iterations are loop iterations for the iterative variant and recursion
    depth minus the base call for the recursive one, so both variants report
    identical statistics on identical operands.

    :param total_ns: summed wall time of the timed calls, monotonic clock
    """

    model_config = ConfigDict(frozen=True)

    variant: BenchVariant
    bits: int
    count: int = Field(ge=1)
    total_ns: int = Field(ge=0)
    iterations_min: int
    iterations_mean: float
    iterations_max: int
    seed: int

    @model_validator(mode="after")
    def _ordered_statistics(self) -> "BenchReport":
        if not self.iterations_min <= self.iterations_mean <= self.iterations_max:
            raise ValueError("expected iterations_min <= mean <= max")
        return self

    @property
    def mean_ns(self) -> float:
        return self.total_ns / self.count

    def to_json(self, indent: Optional[int] = None) -> str:
        return self.model_dump_json(indent=indent)
