"""
Step-by-step execution traces of the iterative extended Euclid's algorithm.

A trace holds one `TraceRow` per loop boundary: row k = 0 is the state
before the first iteration and row k is the state after k iterations.
Each row also records the quotient q that produced it, which the listing
itself does not keep, so that the accumulated matrix can be rebuilt
independently from the quotients alone.

Serialization follows one schema for both JSON and CSV, with every big
integer written as a decimal string:

    {"alpha": str, "beta": str,
     "steps": [{"k": int, "q": str|null, "a": str, "b": str,
                "c": str, "d": str, "e": str, "f": str}],
     "result": {"d": str, "x": str, "y": str}}

The CSV form has the header k,q,a,b,c,d,e,f with an empty q at k = 0.
"""

import csv
import io
import re
from typing import Annotated, Any, Dict, List, Optional

from loguru import logger
from pydantic import (
    BaseModel,
    BeforeValidator,
    ConfigDict,
    Field,
    PlainSerializer,
    ValidationError,
    field_serializer,
    field_validator,
)

from egcdkit.core import (
    BezoutTriple,
    MalformedTrace,
    Mat2,
    Nat,
    Row2,
    Stack3x2,
    as_nat,
    stack_mul,
    step_matrix,
)

__all__ = ["TraceRow", "EgcdTrace", "egcd_traced", "CSV_HEADER"]

CSV_HEADER = ("k", "q", "a", "b", "c", "d", "e", "f")

_DECIMAL = re.compile(r"[+-]?[0-9]+")


def _parse_decimal(value: Any) -> Any:
    if isinstance(value, str):
        if not _DECIMAL.fullmatch(value):
            raise ValueError(f"not a decimal integer: {value[:32]!r}")
        return int(value, 10)
    return value


DecimalInt = Annotated[
    int,
    BeforeValidator(_parse_decimal),
    PlainSerializer(str, return_type=str, when_used="json"),
]


class TraceRow(BaseModel):
    """
    State of the 3x2 stack [[a, b], [c, d], [e, f]] at loop boundary k

    :param k: iteration index, 0 for the state before the first iteration
    :param q: the quotient floor(a/b) of the previous row, None at k = 0
    """

    model_config = ConfigDict(frozen=True)

    k: int = Field(ge=0)
    q: Optional[DecimalInt] = None
    a: DecimalInt
    b: DecimalInt
    c: DecimalInt
    d: DecimalInt
    e: DecimalInt
    f: DecimalInt

    @classmethod
    def from_stack(cls, k: int, q: Optional[int], stack: Stack3x2) -> "TraceRow":
        (a, b), (c, d), (e, f) = stack
        return cls(k=k, q=q, a=a, b=b, c=c, d=d, e=e, f=f)

    @property
    def pair(self) -> Row2:
        return Row2(self.a, self.b)

    @property
    def matrix(self) -> Mat2:
        """
        :return: the accumulated matrix [[c, d], [e, f]]
        """
        return Mat2(self.c, self.d, self.e, self.f)

    def as_tuple(self):
        return self.a, self.b, self.c, self.d, self.e, self.f


class EgcdTrace(BaseModel):
    """
    A completed execution of the iterative algorithm for (alpha, beta)

    :param steps: the rows k = 0 ... n in order, the last one with b = 0
    :param result: the returned triple (a, c, e) of the last row
    """

    model_config = ConfigDict(frozen=True)

    alpha: DecimalInt
    beta: DecimalInt
    steps: List[TraceRow]
    result: BezoutTriple

    @field_validator("result", mode="before")
    @classmethod
    def _parse_result(cls, value: Any) -> Any:
        if isinstance(value, dict):
            missing = [key for key in "dxy" if key not in value]
            if missing:
                raise ValueError(f"result is missing {', '.join(missing)}")
            return BezoutTriple(*(_parse_decimal(value[key]) for key in "dxy"))
        return value

    @field_serializer("result")
    def _serialize_result(self, result: BezoutTriple, info) -> Dict[str, Any]:
        if info.mode == "json":
            return {"d": str(result.d), "x": str(result.x), "y": str(result.y)}
        return {"d": result.d, "x": result.x, "y": result.y}

    @property
    def last(self) -> TraceRow:
        if not self.steps:
            raise MalformedTrace("trace has no rows")
        return self.steps[-1]

    @property
    def iterations(self) -> int:
        return len(self.steps) - 1

    def quotients(self) -> List[int]:
        """
        :return: the quotient sequence, i.e. the continued fraction
            expansion of alpha / beta
        """
        return [row.q for row in self.steps[1:]]

    def to_json(self, indent: Optional[int] = None) -> str:
        return self.model_dump_json(indent=indent)

    @classmethod
    def from_json(cls, content: str) -> "EgcdTrace":
        """
        :raises MalformedTrace: if content does not match the trace schema
        """
        try:
            return cls.model_validate_json(content)
        except ValidationError as err:
            raise MalformedTrace(f"invalid trace json: {err}") from err

    def to_csv(self) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        for row in self.steps:
            writer.writerow(
                [row.k, "" if row.q is None else row.q, *row.as_tuple()]
            )
        return buffer.getvalue()

    @classmethod
    def from_csv(cls, content: str) -> "EgcdTrace":
        """
        Rebuild a trace from its CSV form; alpha and beta are read from the
        k = 0 row and the result from the last row

        :raises MalformedTrace: on a wrong header, bad values or no rows
        """
        reader = csv.DictReader(io.StringIO(content))
        if tuple(reader.fieldnames or ()) != CSV_HEADER:
            raise MalformedTrace(f"csv header must be {','.join(CSV_HEADER)}")

        try:
            steps = [_parse_csv_record(record) for record in reader]
        except (ValidationError, ValueError) as err:
            raise MalformedTrace(f"invalid trace csv: {err}") from err
        if not steps:
            raise MalformedTrace("trace csv has no rows")

        first, last = steps[0], steps[-1]
        return cls(
            alpha=first.a,
            beta=first.b,
            steps=steps,
            result=BezoutTriple(last.a, last.c, last.e),
        )


def _parse_csv_record(record: Dict[Optional[str], Any]) -> TraceRow:
    # DictReader files surplus columns under None and fills short rows with None
    if None in record or None in record.values():
        raise ValueError(f"row does not have {len(CSV_HEADER)} columns")
    return TraceRow(**{**record, "q": record["q"] or None})


def egcd_traced(alpha: Nat, beta: Nat) -> EgcdTrace:
    """
    Run the iterative algorithm on (alpha, beta) recording every loop boundary.
    The stack is updated with step_matrix and stack_mul, the same product
    egcd_iterative writes out entry by entry, so the result is identical.

    :return: the trace, with result (a, c, e) of the last row
    """
    alpha, beta = as_nat(alpha, "alpha"), as_nat(beta, "beta")

    stack = (Row2(alpha, beta), Row2(1, 0), Row2(0, 1))
    steps = [TraceRow.from_stack(0, None, stack)]
    while stack[0].r1 != 0:
        step = step_matrix(stack[0].r0, stack[0].r1)
        stack = stack_mul(stack, step)
        steps.append(TraceRow.from_stack(len(steps), -step.m11, stack))

    logger.debug("Traced ({}, {}) in {} iterations", alpha, beta, len(steps) - 1)
    top, middle, bottom = stack

    return EgcdTrace(
        alpha=alpha,
        beta=beta,
        steps=steps,
        result=BezoutTriple(top.r0, middle.r0, bottom.r0),
    )
