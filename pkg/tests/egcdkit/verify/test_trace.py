import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from egcdkit.core import BezoutTriple, MalformedTrace, egcd_iterative
from egcdkit.verify import CSV_HEADER, EgcdTrace, TraceRow, egcd_traced

naturals = st.integers(min_value=0, max_value=2**512)


@pytest.mark.smoke
def test_worked_trace():
    trace = egcd_traced(12, 8)

    assert [row.as_tuple() for row in trace.steps] == [
        (12, 8, 1, 0, 0, 1),
        (8, 4, 0, 1, 1, -1),
        (4, 0, 1, -2, -1, 3),
    ]
    assert [row.k for row in trace.steps] == [0, 1, 2]
    assert [row.q for row in trace.steps] == [None, 1, 2]
    assert trace.result == BezoutTriple(4, 1, -1)
    assert trace.iterations == 2


@pytest.mark.smoke
@pytest.mark.parametrize("a,b", [(7, 0), (0, 0)])
def test_trace_without_iterations(a, b):
    trace = egcd_traced(a, b)

    assert len(trace.steps) == 1
    assert trace.steps[0] == TraceRow(k=0, q=None, a=a, b=0, c=1, d=0, e=0, f=1)
    assert trace.result == BezoutTriple(a, 1, 0)


@pytest.mark.sanity
@given(a=naturals, b=naturals)
def test_trace_replays_iterative(a, b):
    trace = egcd_traced(a, b)
    assert trace.result == egcd_iterative(a, b)
    assert trace.last.b == 0
    assert all(row.b < previous.b for previous, row in zip(trace.steps, trace.steps[1:]))


@pytest.mark.sanity
def test_quotients_are_continued_fraction():
    # 240/46 = 5 + 1/(4 + 1/(1 + 1/(1 + 1/2)))
    assert egcd_traced(240, 46).quotients() == [5, 4, 1, 1, 2]


@pytest.mark.smoke
def test_json_schema():
    payload = json.loads(egcd_traced(12, 8).to_json())

    assert payload["alpha"] == "12"
    assert payload["beta"] == "8"
    assert payload["result"] == {"d": "4", "x": "1", "y": "-1"}
    assert payload["steps"][0] == {
        "k": 0,
        "q": None,
        "a": "12",
        "b": "8",
        "c": "1",
        "d": "0",
        "e": "0",
        "f": "1",
    }
    assert payload["steps"][2]["q"] == "2"
    assert payload["steps"][2]["e"] == "-1"


@pytest.mark.sanity
def test_json_and_csv_reparse():
    a, b = 2**300 + 12345, 3**150
    trace = egcd_traced(a, b)

    assert EgcdTrace.from_json(trace.to_json()) == trace
    assert EgcdTrace.from_csv(trace.to_csv()) == trace


@pytest.mark.smoke
def test_csv_rows():
    lines = egcd_traced(12, 8).to_csv().splitlines()
    assert lines == [
        ",".join(CSV_HEADER),
        "0,,12,8,1,0,0,1",
        "1,1,8,4,0,1,1,-1",
        "2,2,4,0,1,-2,-1,3",
    ]


@pytest.mark.sanity
@pytest.mark.parametrize(
    "content",
    [
        "",
        "a,b,c\n1,2,3\n",
        ",".join(CSV_HEADER) + "\n",
        ",".join(CSV_HEADER) + "\n0,,x,8,1,0,0,1\n",
        ",".join(CSV_HEADER) + "\n0,,7,0,1,0,0,1,9\n",
        ",".join(CSV_HEADER) + "\n0,,7,0,1,0\n",
        ",".join(CSV_HEADER) + "\n0,,1_000,0,1,0,0,1\n",
        ",".join(CSV_HEADER) + "\n0,, 7,0,1,0,0,1\n",
    ],
)
def test_malformed_csv(content):
    with pytest.raises(MalformedTrace):
        EgcdTrace.from_csv(content)


def _result(d, x, y):
    return {"d": d, "x": x, "y": y}


@pytest.mark.sanity
@pytest.mark.parametrize(
    "payload",
    [
        {"alpha": "1"},
        {"alpha": "7", "beta": "0", "steps": [], "result": {"d": "7"}},
        {"alpha": "7", "beta": "0", "steps": [], "result": _result("7", "1", "0x0")},
        {"alpha": "1_000", "beta": "0", "steps": [], "result": _result("7", "1", "0")},
    ],
)
def test_malformed_json(payload):
    with pytest.raises(MalformedTrace):
        EgcdTrace.from_json(json.dumps(payload))


@pytest.mark.sanity
def test_signed_decimal_strings():
    row = TraceRow(k=1, q="1", a="8", b="4", c="0", d="+1", e="1", f="-1")
    assert row.as_tuple() == (8, 4, 0, 1, 1, -1)


@pytest.mark.regression
def test_serializes_beyond_default_digit_limit():
    trace = egcd_traced(1 << 16000, 3)
    payload = json.loads(trace.to_json())

    assert payload["alpha"] == str(1 << 16000)
    assert EgcdTrace.from_json(trace.to_json()) == trace
    assert EgcdTrace.from_csv(trace.to_csv()) == trace
