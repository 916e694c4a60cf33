"""Smoke tests for the Python bindings: a quick pass over every exposed
operation with pinned small values.  Runs under pytest or as a script."""

import math

import subsumlab


def test_version():
    assert subsumlab.__version__ == "1.0.0"


def test_count_and_partitions():
    assert subsumlab.count(5) == 7
    assert subsumlab.count(5, "kreduced:2") == 5
    assert subsumlab.count(16, "distinct") == 32
    assert subsumlab.count(100) == 190569292
    assert list(subsumlab.partitions(4)) == [[1, 1, 1, 1], [1, 1, 2], [1, 3], [2, 2], [4]]
    assert list(subsumlab.partitions(5, "distinct")) == [[1, 4], [2, 3], [5]]
    assert list(subsumlab.partitions(0)) == [[]]


def test_asymptotic_log_count():
    assert math.isclose(
        subsumlab.asymptotic_log_count(100), math.pi * math.sqrt(200.0 / 3.0)
    )
    try:
        subsumlab.asymptotic_log_count(100, "kreduced:2")
    except ValueError:
        pass
    else:
        raise AssertionError("expected ValueError for kreduced:2")


def test_represent_and_queries():
    assert subsumlab.represent([1, 3]) == [0, 1, 3, 4]
    assert subsumlab.represent([2, 2]) == [0, 2, 4]
    assert subsumlab.represents([1, 3], 3)
    assert not subsumlab.represents([1, 3], 2)
    assert not subsumlab.represents([1, 3], 5)
    assert subsumlab.extract_subset([1, 3], 3) == [3]
    assert subsumlab.extract_subset([1, 3], 2) is None
    assert subsumlab.represents_full_range([1, 1, 2, 3, 4, 5], 1.0)
    assert not subsumlab.represents_full_range([2, 2, 2, 2, 2, 2, 2, 2], 1.0)


def test_census_and_forbid():
    result = subsumlab.census(4)
    assert result == {"n": 4, "class": "unrestricted", "partitions": 5, "distinct_sets": 4}
    assert subsumlab.census(10)["distinct_sets"] == subsumlab.census(10, "kreduced:2")[
        "distinct_sets"
    ]
    assert subsumlab.forbid_count(4, 2) == 2
    assert subsumlab.forbid_scan(4) == [0, 2, 2, 2, 0]


def test_lemma_machinery():
    delta = subsumlab.achieved_delta(16, "1.0")
    assert delta is not None and 0.0 < delta < 1.0
    report = subsumlab.check_conclusion(16, "1.0")
    assert report["b"] == 4
    assert (report["window_lo"], report["window_hi"]) == (3, 8)
    assert [row["j"] for row in report["rows"]] == [2, 3, 4]
    assert all(row["holds"] for row in report["rows"])
    aux = subsumlab.check_aux_inequalities(10000, "0.5", 10)
    assert aux["case1_ok"] and aux["case2_ok"] is None
    assert not subsumlab.check_aux_inequalities(4, "0.5", 4)["case1_ok"]


def test_theorem2_and_exponents():
    constants = subsumlab.theorem2_constants()
    assert constants["holds_q"] and constants["holds_p"]
    assert not subsumlab.theorem2_constants(q_exponent=0.95)["holds_q"]
    rows = subsumlab.exponent_table(4, ["unrestricted", "distinct"])
    assert [(r["n"], r["class"]) for r in rows] == [
        (2, "unrestricted"),
        (3, "unrestricted"),
        (3, "distinct"),
        (4, "unrestricted"),
        (4, "distinct"),
    ]
    assert math.isclose(rows[3]["exponent"], math.log(4) / math.log(5))


if __name__ == "__main__":
    for name, func in sorted(globals().items()):
        if name.startswith("test_") and callable(func):
            func()
            print(f"ok {name}")
    print("python smoke: all ok")
