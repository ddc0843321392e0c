import pytest

from egcdkit.bench import (
    BenchVariant,
    compare_variants,
    generate_operands,
    iteration_count,
    recursion_depth,
    run_bench,
)
from egcdkit.core import InvalidInput, ResourceExhausted
from egcdkit.verify import egcd_traced, fibonacci_pair


@pytest.mark.smoke
@pytest.mark.parametrize("a,b,expected", [(7, 0, 0), (0, 0, 0), (12, 8, 2), (89, 55, 9)])
def test_iteration_count(a, b, expected):
    assert iteration_count(a, b) == expected
    assert recursion_depth(a, b) == expected + 1


@pytest.mark.sanity
def test_iteration_count_fibonacci():
    for n in range(2, 41):
        assert iteration_count(*fibonacci_pair(n)) == n - 1


@pytest.mark.sanity
def test_iteration_count_matches_trace(rng):
    for _ in range(100):
        a, b = rng.getrandbits(200), rng.getrandbits(200)
        assert iteration_count(a, b) == egcd_traced(a, b).iterations


@pytest.mark.smoke
def test_generate_operands():
    pairs = generate_operands(64, 10, seed=1)

    assert pairs == generate_operands(64, 10, seed=1)
    assert len(pairs) == 10
    assert all(a.bit_length() == 64 and 0 <= b < a for a, b in pairs)


@pytest.mark.sanity
@pytest.mark.parametrize("bits,count", [(1, 10), (64, 0)])
def test_generate_operands_rejects(bits, count):
    with pytest.raises(InvalidInput):
        generate_operands(bits, count, seed=0)


@pytest.mark.smoke
def test_run_bench_report():
    report = run_bench(BenchVariant.ITERATIVE, 64, 10, seed=1)

    assert report.variant is BenchVariant.ITERATIVE
    assert (report.bits, report.count, report.seed) == (64, 10, 1)
    assert report.total_ns >= 0
    assert report.iterations_min <= report.iterations_mean <= report.iterations_max
    # 64-bit operands are below F(94)
    assert report.iterations_max <= 91


@pytest.mark.sanity
def test_same_seed_same_statistics():
    recursive, iterative = compare_variants(bits=128, count=20, seed=5)

    assert recursive.variant is BenchVariant.RECURSIVE
    assert iterative.variant is BenchVariant.ITERATIVE
    assert (recursive.iterations_min, recursive.iterations_max) == (
        iterative.iterations_min,
        iterative.iterations_max,
    )
    assert recursive.iterations_mean == iterative.iterations_mean


@pytest.mark.sanity
def test_string_variant_and_rejects():
    assert run_bench("recursive", 32, 3, seed=0).variant is BenchVariant.RECURSIVE

    with pytest.raises(InvalidInput):
        run_bench("binary", 32, 3)
    with pytest.raises(InvalidInput):
        run_bench(BenchVariant.ITERATIVE, 1, 3)


@pytest.mark.sanity
def test_stack_exhaustion_is_reported(mocker):
    mocker.patch.dict(
        "egcdkit.bench.runner._VARIANTS",
        {BenchVariant.RECURSIVE: mocker.Mock(side_effect=RecursionError)},
    )
    with pytest.raises(ResourceExhausted):
        run_bench(BenchVariant.RECURSIVE, 64, 2)


@pytest.mark.regression
@pytest.mark.parametrize("variant", list(BenchVariant))
def test_cryptographic_size(variant):
    report = run_bench(variant, 2048, 100, seed=7)

    assert report.count == 100
    assert 0 < report.iterations_min <= report.iterations_max
