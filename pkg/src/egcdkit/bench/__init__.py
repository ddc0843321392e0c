from egcdkit.bench.report import BenchConfig, BenchReport, BenchVariant
from egcdkit.bench.runner import (
    compare_variants,
    generate_operands,
    iteration_count,
    recursion_depth,
    run_bench,
)

__all__ = [
    "BenchConfig",
    "BenchReport",
    "BenchVariant",
    "compare_variants",
    "generate_operands",
    "iteration_count",
    "recursion_depth",
    "run_bench",
]
