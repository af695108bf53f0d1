# Copyright (c) widenkit contributors.
# SPDX-License-Identifier: MIT
"""Interval analysis of while-programs with widening trees."""

import json

from ._core import DEFAULT_FUEL, Interval, SolverDefect, analyze_json, check_json, check_syntax

__all__ = ["DEFAULT_FUEL", "Interval", "SolverDefect", "analyze", "check", "check_syntax", "interval_from_json"]


def interval_from_json(obj):
    """{"lo": "0", "hi": "inf"} -> Interval(0, math.inf)."""

    def endpoint(text):
        if text in ("inf", "-inf"):
            return float(text)
        return int(text)

    return Interval(endpoint(obj["lo"]), endpoint(obj["hi"]))


def analyze(source, widening="naive", thresholds=(), delay=0, delay_base="naive", fuel=DEFAULT_FUEL):
    """Analyze program text; returns the JSON report as a dict.

    Raises ValueError on parse errors and SolverDefect on a broken widening or
    fuel exhaustion.
    """
    return json.loads(analyze_json(source, widening, list(thresholds), delay, delay_base, fuel))


def check(source, report, max_steps=100_000, max_states=100_000, havoc_window=None):
    """Check a report (dict or JSON text) against bounded concrete execution."""
    text = report if isinstance(report, str) else json.dumps(report)
    return json.loads(check_json(source, text, max_steps, max_states, havoc_window))
