import pytest

from egcdkit.core import BezoutTriple, MalformedTrace
from egcdkit.verify import (
    CheckResult,
    InvariantClause,
    TraceRow,
    check_descent,
    check_exit,
    check_invariant,
    check_step_products,
    check_trace,
    egcd_traced,
    reference_gcd,
)
from tests.egcdkit.helpers import perturb_trace, random_pair


def _row(k, q, values):
    a, b, c, d, e, f = values
    return TraceRow(k=k, q=q, a=a, b=b, c=c, d=d, e=e, f=f)


@pytest.mark.smoke
@pytest.mark.parametrize(
    "row,alpha,beta",
    [
        (_row(0, None, (12, 8, 1, 0, 0, 1)), 12, 8),
        (_row(1, 1, (8, 4, 0, 1, 1, -1)), 12, 8),
        (_row(2, 2, (4, 0, 1, -2, -1, 3)), 12, 8),
    ],
)
def test_invariant_holds(row, alpha, beta):
    result = check_invariant(row, alpha, beta)
    assert result.ok
    assert result.violated is None
    assert result


@pytest.mark.smoke
def test_invariant_row_product_violation():
    result = check_invariant(_row(1, 1, (8, 4, 0, 1, 1, -1)), 13, 8)

    assert not result
    assert result.clause is InvariantClause.ROW_PRODUCT
    assert result.k == 1
    assert result.violated.startswith("clause 1 ")
    assert "k=1" in result.violated


@pytest.mark.sanity
def test_invariant_gcd_violation():
    # clause 1 holds, the expected gcd is wrong
    result = check_invariant(_row(0, None, (4, 2, 1, 0, 0, 1)), 4, 2, expected_gcd=1)

    assert result.clause is InvariantClause.GCD_PRESERVED
    assert result.k == 0


@pytest.mark.sanity
def test_check_result_consistency():
    with pytest.raises(ValueError):
        CheckResult(ok=True, violated="something")
    with pytest.raises(ValueError):
        CheckResult(ok=False)


@pytest.mark.smoke
@pytest.mark.parametrize("a,b", [(12, 8), (7, 0), (240, 46), (0, 0), (0, 5)])
def test_exit_holds(a, b):
    assert check_exit(egcd_traced(a, b)).ok


@pytest.mark.sanity
def test_exit_requires_finished_trace():
    trace = egcd_traced(12, 8)
    unfinished = trace.model_copy(update={"steps": trace.steps[:2]})

    with pytest.raises(MalformedTrace):
        check_exit(unfinished)


@pytest.mark.sanity
def test_exit_violation():
    trace = egcd_traced(12, 8)
    last = trace.last.model_copy(update={"c": 2})
    broken = trace.model_copy(update={"steps": [*trace.steps[:-1], last]})

    result = check_exit(broken)
    assert result.clause is InvariantClause.EXIT_IDENTITY
    assert result.k == 2


@pytest.mark.sanity
def test_step_product_catches_wrong_quotient():
    trace = egcd_traced(240, 46)
    row = trace.steps[2].model_copy(update={"q": trace.steps[2].q + 1})
    steps = list(trace.steps)
    steps[2] = row
    broken = trace.model_copy(update={"steps": steps})

    # the row itself still satisfies the invariant
    assert check_invariant(row, 240, 46).ok
    result = check_step_products(broken)
    assert result.clause is InvariantClause.STEP_PRODUCT
    assert result.k == 2
    assert check_descent(broken).clause is InvariantClause.EUCLID_STEP


@pytest.mark.sanity
def test_step_product_catches_reordered_rows():
    trace = egcd_traced(240, 46)
    steps = list(trace.steps)
    steps[1], steps[2] = steps[2], steps[1]
    broken = trace.model_copy(update={"steps": steps})

    assert check_step_products(broken).clause is InvariantClause.SHAPE


@pytest.mark.sanity
def test_trace_result_must_match_last_row():
    trace = egcd_traced(12, 8)
    broken = trace.model_copy(update={"result": BezoutTriple(4, 3, -4)})

    result = check_trace(broken)
    assert not result
    assert result.clause is InvariantClause.SHAPE


@pytest.mark.sanity
def test_reference_gcd_switches_past_oracle_bound():
    assert reference_gcd(240, 46) == 2
    assert reference_gcd(2**80 * 3, 2**70 * 9) == 2**70 * 3


@pytest.mark.regression
def test_invariant_suite(rng):
    for _ in range(1000):
        alpha, beta = random_pair(rng, 256)
        trace = egcd_traced(alpha, beta)
        for row in trace.steps:
            assert check_invariant(row, alpha, beta), (alpha, beta, row.k)
        assert check_exit(trace), (alpha, beta)
        assert check_step_products(trace), (alpha, beta)
        assert check_descent(trace), (alpha, beta)
        assert check_trace(trace), (alpha, beta)


@pytest.mark.regression
def test_mutation_sensitivity(rng):
    checked = 0
    while checked < 100:
        alpha, beta = random_pair(rng, 128)
        trace = egcd_traced(alpha, beta)
        mutated, where = perturb_trace(trace, rng)

        invariant_ok = all(
            check_invariant(row, alpha, beta) for row in mutated.steps
        )
        assert not (invariant_ok and check_step_products(mutated)), (
            alpha,
            beta,
            where,
        )
        assert not check_trace(mutated), (alpha, beta, where)
        checked += 1
