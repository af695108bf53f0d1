# Copyright (c) widenkit contributors.
# SPDX-License-Identifier: MIT
import math

import pytest

import widenkit
from widenkit import Interval

COUNT = "init x in [0,0];\nwhile (x < 100) {\n  x = x + 1;\n}\n"


def test_interval_ops():
    a = Interval(0, 3)
    b = Interval(2, math.inf)
    assert a.join(b) == Interval(0, math.inf)
    assert a.meet(b) == Interval(2, 3)
    assert a.leq(Interval(-1, 3)) and not b.leq(a)
    assert Interval(0, 0).widen(Interval(0, 1)) == Interval(0, math.inf)
    assert (a + Interval(1, 1)) == Interval(1, 4)
    assert Interval.bottom().is_bottom
    assert Interval.top().lo == -math.inf
    assert a.contains(3) and not a.contains(4)
    assert str(b) == "[2, +inf]"


def test_big_integers_survive():
    n = 10**40
    iv = Interval(n, n + 1)
    assert iv.lo == n and iv.hi == n + 1


def test_malformed_interval():
    with pytest.raises(ValueError):
        Interval(3, 1)


def test_analyze_count_loop():
    naive = widenkit.analyze(COUNT)
    assert naive["loops"][0]["env"]["x"] == {"lo": "0", "hi": "inf"}
    assert widenkit.interval_from_json(naive["final"]["x"]) == Interval(100, math.inf)

    ramp = widenkit.analyze(COUNT, widening="ramp", thresholds=[255, 32767])
    assert ramp["loops"][0]["env"]["x"] == {"lo": "0", "hi": "255"}

    kleene = widenkit.analyze(COUNT, widening="kleene")
    assert kleene["steps"] == 101

    assert widenkit.analyze(COUNT, widening="delay", delay=5)["strategy"] == "delay(5, naive)"


def test_check_report():
    report = widenkit.analyze(COUNT)
    verdict = widenkit.check(COUNT, report)
    assert verdict["pass"] and verdict["states_checked"] == 101

    report["loops"][0]["env"]["x"]["hi"] = "50"
    bad = widenkit.check(COUNT, report)
    assert not bad["pass"]
    assert bad["counterexamples"][0] == {"loop_id": 0, "state": {"x": "51"}}


def test_errors():
    with pytest.raises(ValueError, match="undeclared variable"):
        widenkit.analyze("init x in [0,0]; x = y;")
    with pytest.raises(widenkit.SolverDefect, match="fuel exhausted"):
        widenkit.analyze("init x in [0,0]; while (1 < 2) { x = x + 1; }", widening="kleene", fuel=100)
    assert widenkit.check_syntax("init x in [0,0]; init y in [1,2]; while (x < y) { x = x + 1; }") == (["x", "y"], 1)
