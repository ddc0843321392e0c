"""
Verification suites run by `egcdkit verify`.

The exhaustive suite checks every pair 0 <= a, b <= limit against the
trial-division oracle; the random suite checks seeded random pairs of up to
max_bits bits, where the oracle is out of reach and the invariant checks
carry the weight. Both also compare the recursive and iterative results and
fully check the trace of every pair.
"""

import random
from typing import Callable, Iterable, List, Optional, Tuple

from loguru import logger
from pydantic import BaseModel, Field, ValidationError, model_validator
from tqdm import tqdm

from egcdkit.core import InvalidInput, egcd_iterative, egcd_recursive, gcd
from egcdkit.verify.checks import check_trace
from egcdkit.verify.oracle import coefficient_bound_holds, oracle_gcd, oracle_verify
from egcdkit.verify.trace import egcd_traced

__all__ = [
    "VerifyConfig",
    "VerifySummary",
    "run_exhaustive",
    "run_random",
    "run_verify",
    "random_pairs",
]

# violations kept in a summary, the count is always exact
_MAX_REPORTED_VIOLATIONS = 20


class VerifyConfig(BaseModel):
    """
    Selection of the verify suite, either exhaustive or random

    :param exhaustive_to: check all pairs 0 <= a, b <= exhaustive_to
    :param random_count: number of random pairs to check
    :param max_bits: maximum operand bit length of random pairs
    :param seed: seed of the random pair generator
    """

    exhaustive_to: Optional[int] = Field(default=None, ge=0)
    random_count: Optional[int] = Field(default=None, ge=1)
    max_bits: int = Field(default=256, ge=1)
    seed: int = 0

    @model_validator(mode="after")
    def _one_suite(self) -> "VerifyConfig":
        if (self.exhaustive_to is None) == (self.random_count is None):
            raise ValueError("exactly one of exhaustive_to or random_count is needed")
        return self


class VerifySummary(BaseModel):
    """
    :param suite: "exhaustive" or "random"
    :param pairs: number of (a, b) pairs checked
    :param checks: number of individual checks run
    :param violation_count: number of failed checks
    :param violations: descriptions of the first failed checks
    """

    suite: str
    pairs: int = 0
    checks: int = 0
    violation_count: int = 0
    violations: List[str] = Field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.violation_count == 0

    @property
    def passed(self) -> int:
        return self.checks - self.violation_count

    def record(self, ok: bool, describe: Callable[[], str]):
        """
        :param ok: outcome of one check
        :param describe: builds the violation description, only called on failure
        """
        self.checks += 1
        if not ok:
            self.violation_count += 1
            if len(self.violations) < _MAX_REPORTED_VIOLATIONS:
                self.violations.append(describe())


def random_pairs(count: int, max_bits: int, seed: int) -> List[Tuple[int, int]]:
    """
    :return: count pairs whose operands have independently drawn bit lengths
        in [0, max_bits], deterministic for a given seed
    """
    rng = random.Random(seed)
    return [
        (
            rng.getrandbits(rng.randint(0, max_bits)),
            rng.getrandbits(rng.randint(0, max_bits)),
        )
        for _ in range(count)
    ]


def _check_pair(summary: VerifySummary, a: int, b: int, with_oracle: bool):
    summary.pairs += 1
    iterative = egcd_iterative(a, b)
    recursive = egcd_recursive(a, b)
    summary.record(
        recursive == iterative,
        lambda: f"({a}, {b}): recursive {tuple(recursive)} != {tuple(iterative)}",
    )
    summary.record(
        iterative.satisfies(a, b),
        lambda: f"({a}, {b}): {tuple(iterative)} is not a Bezout triple",
    )
    summary.record(
        coefficient_bound_holds(a, b, iterative),
        lambda: f"({a}, {b}): coefficients of {tuple(iterative)} out of bounds",
    )

    trace = egcd_traced(a, b)
    result = check_trace(trace)
    summary.record(bool(result), lambda: f"({a}, {b}): {result.violated}")
    summary.record(
        trace.result == iterative,
        lambda: f"({a}, {b}): traced {tuple(trace.result)} != {tuple(iterative)}",
    )

    if with_oracle:
        summary.record(
            oracle_verify(a, b, iterative),
            lambda: f"({a}, {b}): oracle rejects {tuple(iterative)}",
        )
        summary.record(
            gcd(a, b) == oracle_gcd(a, b),
            lambda: f"({a}, {b}): gcd disagrees with oracle",
        )


def _run(
    summary: VerifySummary,
    pairs: Iterable[Tuple[int, int]],
    total: int,
    with_oracle: bool,
    progress: bool,
) -> VerifySummary:
    for a, b in tqdm(pairs, total=total, disable=not progress, desc=summary.suite):
        _check_pair(summary, a, b, with_oracle)

    logger.info(
        "{} suite: {} pairs, {} checks, {} violations",
        summary.suite,
        summary.pairs,
        summary.checks,
        summary.violation_count,
    )
    return summary


def run_exhaustive(limit: int, progress: bool = False) -> VerifySummary:
    """
    Check every pair 0 <= a, b <= limit, including the oracle comparisons.

    :param limit: the largest operand, within the oracle bound
    :param progress: show a tqdm progress bar on stderr
    """
    pairs = ((a, b) for a in range(limit + 1) for b in range(limit + 1))
    return _run(
        VerifySummary(suite="exhaustive"), pairs, (limit + 1) ** 2, True, progress
    )


def run_random(
    count: int, max_bits: int, seed: int, progress: bool = False
) -> VerifySummary:
    """
    Check count seeded random pairs of up to max_bits bits.

    :param progress: show a tqdm progress bar on stderr
    """
    pairs = random_pairs(count, max_bits, seed)
    return _run(VerifySummary(suite="random"), pairs, count, False, progress)


def run_verify(progress: bool = False, **kwargs) -> VerifySummary:
    """
    Validate the VerifyConfig fields in kwargs and run the selected suite

    :raises InvalidInput: if the configuration is invalid
    """
    try:
        config = VerifyConfig(**kwargs)
    except ValidationError as err:
        raise InvalidInput(str(err)) from err

    if config.exhaustive_to is not None:
        return run_exhaustive(config.exhaustive_to, progress=progress)
    return run_random(
        config.random_count, config.max_bits, config.seed, progress=progress
    )
