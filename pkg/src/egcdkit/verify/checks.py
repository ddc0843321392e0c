"""
Runtime checks of the loop invariant of the iterative algorithm.

At every loop boundary the invariant has two clauses:

    1. [a b] = [alpha beta] * [[c, d], [e, f]]
    2. gcd(a, b) = gcd(alpha, beta)

and at exit (b = 0) they give a = alpha*c + beta*e = gcd(alpha, beta).
Besides the invariant itself, a trace is checked for the facts that make
it true: the accumulated matrix is the product of the step matrices in
generation order, and each row is one Euclid step of the previous one.

Every check returns a `CheckResult`; a failure is a value, not an error.
"""

from enum import Enum
from typing import Optional

from loguru import logger
from pydantic import BaseModel, ConfigDict, model_validator

from egcdkit.core import (
    MalformedTrace,
    Mat2,
    Nat,
    Row2,
    det,
    gcd,
    identity,
    mat2_mul,
    row_mul,
)
from egcdkit.verify.oracle import ORACLE_BOUND, oracle_gcd
from egcdkit.verify.trace import EgcdTrace, TraceRow

__all__ = [
    "InvariantClause",
    "CheckResult",
    "reference_gcd",
    "check_invariant",
    "check_exit",
    "check_step_products",
    "check_descent",
    "check_trace",
]


class InvariantClause(Enum):
    ROW_PRODUCT = 1
    GCD_PRESERVED = 2
    EXIT_IDENTITY = 3
    EXIT_GCD = 4
    STEP_PRODUCT = 5
    EUCLID_STEP = 6
    SHAPE = 7

    @property
    def description(self) -> str:
        return _CLAUSE_DESCRIPTIONS[self]


_CLAUSE_DESCRIPTIONS = {
    InvariantClause.ROW_PRODUCT: "[a b] = [alpha beta] * [[c, d], [e, f]]",
    InvariantClause.GCD_PRESERVED: "gcd(a, b) = gcd(alpha, beta)",
    InvariantClause.EXIT_IDENTITY: "a = alpha*c + beta*e at exit",
    InvariantClause.EXIT_GCD: "a = gcd(alpha, beta) at exit",
    InvariantClause.STEP_PRODUCT: "[[c, d], [e, f]] = product of step matrices",
    InvariantClause.EUCLID_STEP: "(a, b) = (b', a' mod b') with q = a' div b'",
    InvariantClause.SHAPE: "trace shape",
}


class CheckResult(BaseModel):
    """
    Outcome of a check

    :param ok: True iff every checked clause held
    :param violated: description of the failing clause and the row index k,
        None when ok
    :param clause: the failing clause, None when ok
    :param k: the row index of the failure, None when ok or not row specific
    """

    model_config = ConfigDict(frozen=True)

    ok: bool
    violated: Optional[str] = None
    clause: Optional[InvariantClause] = None
    k: Optional[int] = None

    @model_validator(mode="after")
    def _ok_iff_no_violation(self) -> "CheckResult":
        if self.ok != (self.violated is None):
            raise ValueError("ok must be True exactly when violated is None")
        return self

    @classmethod
    def passed(cls) -> "CheckResult":
        return cls(ok=True)

    @classmethod
    def failed(
        cls, clause: InvariantClause, k: Optional[int], detail: str
    ) -> "CheckResult":
        where = "" if k is None else f" at k={k}"
        return cls(
            ok=False,
            violated=(
                f"clause {clause.value} ({clause.description}) violated"
                f"{where}: {detail}"
            ),
            clause=clause,
            k=k,
        )

    def __bool__(self) -> bool:
        return self.ok


def reference_gcd(alpha: Nat, beta: Nat) -> Nat:
    """
    :return: gcd(alpha, beta) from trial division when both operands are
        within the oracle bound, from Euclid's algorithm otherwise
    """
    if alpha <= ORACLE_BOUND and beta <= ORACLE_BOUND:
        return oracle_gcd(alpha, beta)
    return gcd(alpha, beta)


def check_invariant(
    row: TraceRow, alpha: Nat, beta: Nat, expected_gcd: Optional[Nat] = None
) -> CheckResult:
    """
    Check both loop invariant clauses on one trace row.

    :param row: the state at loop boundary row.k
    :param alpha: the first input of the traced run
    :param beta: the second input of the traced run
    :param expected_gcd: gcd(alpha, beta) if already known, computed with
        reference_gcd otherwise
    :return: the result, naming the clause and k on failure
    """
    product = row_mul(Row2(alpha, beta), row.matrix)
    if product != row.pair:
        return CheckResult.failed(
            InvariantClause.ROW_PRODUCT,
            row.k,
            f"[{alpha} {beta}] * {row.matrix} = {product}, row has {row.pair}",
        )

    if row.a < 0 or row.b < 0:
        return CheckResult.failed(
            InvariantClause.GCD_PRESERVED, row.k, f"negative pair {row.pair}"
        )
    if expected_gcd is None:
        expected_gcd = reference_gcd(alpha, beta)
    if gcd(row.a, row.b) != expected_gcd:
        return CheckResult.failed(
            InvariantClause.GCD_PRESERVED,
            row.k,
            f"gcd{tuple(row.pair)} = {gcd(row.a, row.b)} != {expected_gcd}",
        )

    return CheckResult.passed()


def check_exit(trace: EgcdTrace, expected_gcd: Optional[Nat] = None) -> CheckResult:
    """
    Check the exit condition: the last row gives a = alpha*c + beta*e and
    a = gcd(alpha, beta).

    :raises MalformedTrace: if the trace is empty or its last row has b != 0
    """
    last = trace.last
    if last.b != 0:
        raise MalformedTrace(f"last row k={last.k} has b={last.b}, expected 0")

    combination = trace.alpha * last.c + trace.beta * last.e
    if last.a != combination:
        return CheckResult.failed(
            InvariantClause.EXIT_IDENTITY,
            last.k,
            f"{trace.alpha}*{last.c} + {trace.beta}*{last.e} = {combination}"
            f" != {last.a}",
        )

    if expected_gcd is None:
        expected_gcd = reference_gcd(trace.alpha, trace.beta)
    if last.a != expected_gcd:
        return CheckResult.failed(
            InvariantClause.EXIT_GCD, last.k, f"{last.a} != {expected_gcd}"
        )

    return CheckResult.passed()


def check_step_products(trace: EgcdTrace) -> CheckResult:
    """
    Rebuild the accumulated matrix at every row from the recorded quotients,
    A_1 * A_2 * ... * A_k with A_i = [[0, 1], [1, -q_i]], and compare.
    """
    expected = identity()
    for index, row in enumerate(trace.steps):
        if row.k != index:
            return CheckResult.failed(
                InvariantClause.SHAPE, index, f"row index is {row.k}"
            )
        if index > 0:
            if row.q is None:
                return CheckResult.failed(
                    InvariantClause.SHAPE, index, "quotient missing"
                )
            expected = mat2_mul(expected, Mat2(0, 1, 1, -row.q))
        if row.matrix != expected:
            return CheckResult.failed(
                InvariantClause.STEP_PRODUCT,
                index,
                f"row has {row.matrix}, product is {expected}",
            )

    return CheckResult.passed()


def check_descent(trace: EgcdTrace) -> CheckResult:
    """
    Check that row 0 is the initial stack and that every later row is one
    Euclid step of the previous one: q = floor(a/b), (a, b) -> (b, a mod b)
    with b strictly decreasing, and det([[c, d], [e, f]]) = (-1)^k.
    """
    if not trace.steps:
        return CheckResult.failed(InvariantClause.SHAPE, None, "trace has no rows")

    first = trace.steps[0]
    initial = (trace.alpha, trace.beta, 1, 0, 0, 1)
    if first.as_tuple() != initial or first.q is not None:
        return CheckResult.failed(
            InvariantClause.SHAPE,
            0,
            f"initial row is {first.as_tuple()}, expected {initial}",
        )

    for previous, row in zip(trace.steps, trace.steps[1:]):
        if previous.b <= 0:
            return CheckResult.failed(
                InvariantClause.EUCLID_STEP, row.k, "loop continued after b = 0"
            )
        quotient, remainder = divmod(previous.a, previous.b)
        if row.q != quotient:
            return CheckResult.failed(
                InvariantClause.EUCLID_STEP,
                row.k,
                f"q = {row.q}, floor({previous.a}/{previous.b}) = {quotient}",
            )
        if (row.a, row.b) != (previous.b, remainder) or not row.b < previous.b:
            return CheckResult.failed(
                InvariantClause.EUCLID_STEP,
                row.k,
                f"({previous.a}, {previous.b}) -> ({row.a}, {row.b})",
            )
        if det(row.matrix) != (-1) ** row.k:
            return CheckResult.failed(
                InvariantClause.EUCLID_STEP,
                row.k,
                f"det {row.matrix} = {det(row.matrix)}",
            )

    return CheckResult.passed()


def check_trace(trace: EgcdTrace) -> CheckResult:
    """
    Run every check on a trace: the invariant on each row, the step matrix
    products, the Euclid steps, the exit condition and the recorded result.

    :return: the first failure found, or a passing result
    """
    try:
        expected_gcd = reference_gcd(trace.alpha, trace.beta)
        for row in trace.steps:
            result = check_invariant(row, trace.alpha, trace.beta, expected_gcd)
            if not result:
                break
        else:
            result = check_step_products(trace)
            if result:
                result = check_descent(trace)
            if result:
                result = check_exit(trace, expected_gcd)
    except MalformedTrace as err:
        result = CheckResult.failed(InvariantClause.SHAPE, None, str(err))

    if result and tuple(trace.result) != (trace.last.a, trace.last.c, trace.last.e):
        result = CheckResult.failed(
            InvariantClause.SHAPE,
            trace.last.k,
            f"result {tuple(trace.result)} is not (a, c, e) of the last row",
        )

    if not result:
        logger.warning(
            "Trace check failed for ({}, {}): {}",
            trace.alpha,
            trace.beta,
            result.violated,
        )

    return result
