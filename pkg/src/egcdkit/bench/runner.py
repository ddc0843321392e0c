"""
Recursive versus iterative extended Euclid's algorithm at cryptographic
operand sizes.

Operands are drawn from a seeded generator so every variant sees the same
pairs; timing uses the monotonic perf_counter_ns clock and excludes the
untimed warm-up call. Only completion is ever asserted on timings.
"""

import random
import time
from typing import Callable, Dict, List, Tuple

import numpy
from loguru import logger
from pydantic import ValidationError

from egcdkit.bench.report import BenchConfig, BenchReport, BenchVariant
from egcdkit.core import (
    BezoutTriple,
    InvalidInput,
    Nat,
    ResourceExhausted,
    as_nat,
    egcd_iterative,
    egcd_recursive,
    recursion_depth_bound,
    recursion_headroom,
)
from egcdkit.logger import METRIC_LEVEL

__all__ = [
    "iteration_count",
    "recursion_depth",
    "generate_operands",
    "run_bench",
    "compare_variants",
]

_VARIANTS: Dict[BenchVariant, Callable[[Nat, Nat], BezoutTriple]] = {
    BenchVariant.RECURSIVE: egcd_recursive,
    BenchVariant.ITERATIVE: egcd_iterative,
}


def iteration_count(a: Nat, b: Nat) -> Nat:
    """
    :return: the number of loop iterations egcd_iterative(a, b) runs
    """
    a, b = as_nat(a, "a"), as_nat(b, "b")
    count = 0
    while b != 0:
        a, b = b, a % b
        count += 1

    return count


def _depth(a: int, b: int) -> int:
    if b == 0:
        return 1
    return 1 + _depth(b, a % b)


def recursion_depth(a: Nat, b: Nat) -> Nat:
    """
    :return: the number of nested calls egcd_recursive(a, b) makes, counting
        the base call, i.e. iteration_count(a, b) + 1
    """
    a, b = as_nat(a, "a"), as_nat(b, "b")
    recursion_headroom(recursion_depth_bound(a, b))

    return _depth(a, b)


def generate_operands(bits: int, count: int, seed: int) -> List[Tuple[Nat, Nat]]:
    """
    :return: count pairs (a, b) where a has exactly `bits` bits and b is
        uniform in [0, a), deterministic for a given seed
    """
    if bits < 2 or count < 1:
        raise InvalidInput(f"need bits >= 2 and count >= 1, got {bits}, {count}")

    rng = random.Random(seed)
    pairs = []
    for _ in range(count):
        a = rng.getrandbits(bits) | (1 << (bits - 1))
        pairs.append((a, rng.randrange(a)))

    return pairs


def _iterations(variant: BenchVariant, a: Nat, b: Nat) -> int:
    if variant is BenchVariant.RECURSIVE:
        return recursion_depth(a, b) - 1
    return iteration_count(a, b)


def run_bench(
    variant=BenchVariant.ITERATIVE,
    bits: int = 64,
    count: int = 10,
    seed: int = 0,
    warmup: bool = True,
) -> BenchReport:
    """
    Time one variant on count seeded random pairs of `bits`-bit operands.

    :param variant: BenchVariant or its string value
    :return: the report with summed timings and iteration statistics
    :raises InvalidInput: for bits < 2, count < 1 or an unknown variant
    :raises ResourceExhausted: if the recursive variant runs out of stack
    """
    try:
        config = BenchConfig(
            variant=variant, bits=bits, count=count, seed=seed, warmup=warmup
        )
    except ValidationError as err:
        raise InvalidInput(str(err)) from err

    algorithm = _VARIANTS[config.variant]
    pairs = generate_operands(config.bits, config.count, config.seed)

    total_ns = 0
    iterations = []
    try:
        if config.warmup:
            algorithm(*pairs[0])
        for a, b in pairs:
            start = time.perf_counter_ns()
            algorithm(a, b)
            total_ns += time.perf_counter_ns() - start
            iterations.append(_iterations(config.variant, a, b))
    except (RecursionError, MemoryError) as err:
        raise ResourceExhausted(
            f"{config.variant.value} variant exhausted the stack at {config.bits} bits"
        ) from err

    counts = numpy.asarray(iterations, dtype=numpy.int64)
    report = BenchReport(
        variant=config.variant,
        bits=config.bits,
        count=config.count,
        total_ns=total_ns,
        iterations_min=int(counts.min()),
        iterations_mean=float(counts.mean()),
        iterations_max=int(counts.max()),
        seed=config.seed,
    )
    logger.log(
        METRIC_LEVEL,
        "{} {} bits x{}: {:.0f} ns/call, iterations min {} mean {:.2f} max {}",
        report.variant.value,
        report.bits,
        report.count,
        report.mean_ns,
        report.iterations_min,
        report.iterations_mean,
        report.iterations_max,
    )

    return report


def compare_variants(
    bits: int = 64, count: int = 10, seed: int = 0, warmup: bool = True
) -> Tuple[BenchReport, BenchReport]:
    """
    Run both variants on the same operands and log the recursive to
    iterative time ratio. The ratio is reported, never asserted.

    :return: (recursive report, iterative report)
    """
    recursive = run_bench(BenchVariant.RECURSIVE, bits, count, seed, warmup)
    iterative = run_bench(BenchVariant.ITERATIVE, bits, count, seed, warmup)
    ratio = recursive.total_ns / max(iterative.total_ns, 1)
    logger.log(
        METRIC_LEVEL,
        "recursive / iterative time at {} bits: {:.2f}x",
        bits,
        ratio,
    )

    return recursive, iterative
