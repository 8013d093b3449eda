"""Pinned worked examples with self-checked golden values.

These fixtures back the ``paper-examples`` command: two famous
incomparable pairs of 3x3 Schmidt spectra, the one-parameter diagonal
family that realizes the unit-entropy / equal-concurrence coincidences,
and the bisection root where that family reaches one ebit.
"""

from __future__ import annotations

import math

from .errors import SelfCheckFailed
from .linalg import bisect_root
from .locc import Verdict, hierarchy_dominance, nielsen_verdict
from .measures import af_concurrence, eof_pure, hierarchy, hierarchy_via_minors
from .states import PureState, from_schmidt

#: The incomparable pair whose hierarchies disagree in opposite directions.
SPECTRUM_MIXED_SOURCE = (0.5, 0.4, 0.1)
SPECTRUM_MIXED_TARGET = (0.6, 0.2, 0.2)

#: The incomparable pair where one side dominates every hierarchy level.
SPECTRUM_DOMINANT_SOURCE = (0.55, 0.3, 0.15)
SPECTRUM_DOMINANT_TARGET = (0.5, 0.4, 0.1)


def diagonal_state(spectrum) -> PureState:
    """Diagonal state with the given Schmidt spectrum."""
    return from_schmidt([math.sqrt(v) for v in spectrum])


def x_family(x: float) -> PureState:
    """Diagonal 3x3 family with spectrum (x/2, x/2, 1-x), 0 <= x <= 1.

    At x = 1 this is the two-term uniform (Bell-like) state embedded in
    3x3; at x = 2/3 it is maximally entangled.
    """
    if not 0.0 <= x <= 1.0:
        raise ValueError(f"family parameter {x!r} outside [0, 1]")
    half = math.sqrt(x / 2.0)
    return from_schmidt([half, half, math.sqrt(1.0 - x)])


def bell_embedded() -> PureState:
    """Two-term uniform state in 3x3: spectrum (1/2, 1/2, 0)."""
    return x_family(1.0)


def unit_eof_equation(x: float) -> float:
    """x^x [2(1-x)]^(1-x) - 1: zero where the x-family entropy is one ebit."""
    return x**x * (2.0 * (1.0 - x)) ** (1.0 - x) - 1.0


def solve_unit_eof_x(tol: float = 1e-10) -> float:
    """Root of the unit-entropy equation inside (0, 1/2), near 0.2271."""
    return bisect_root(unit_eof_equation, 0.01, 0.49, tol)


def build_report() -> tuple[dict, list[str]]:
    """Recompute every pinned value and compare against its golden target.

    Returns the machine-readable results plus the list of failed check
    names (empty when everything lands inside tolerance).
    """
    checks: list[dict] = []
    failures: list[str] = []

    def check(name: str, value: float, expected: float, tol: float) -> None:
        value = float(value)
        expected = float(expected)
        passed = abs(value - expected) <= tol
        checks.append(
            {"name": name, "value": value, "expected": expected, "tolerance": tol, "passed": passed}
        )
        if not passed:
            failures.append(name)

    def check_flag(name: str, passed: bool, detail: str) -> None:
        checks.append({"name": name, "passed": bool(passed), "detail": detail})
        if not passed:
            failures.append(name)

    mixed_source = diagonal_state(SPECTRUM_MIXED_SOURCE)
    mixed_target = diagonal_state(SPECTRUM_MIXED_TARGET)
    dominant_source = diagonal_state(SPECTRUM_DOMINANT_SOURCE)
    dominant_target = diagonal_state(SPECTRUM_DOMINANT_TARGET)

    hier = {
        "source": hierarchy(mixed_source),
        "target": hierarchy(mixed_target),
        "dominant_source": hierarchy(dominant_source),
    }
    check("c2 of (0.5, 0.4, 0.1)", hier["source"][1], 0.29, 1e-12)
    check("c3 of (0.5, 0.4, 0.1)", hier["source"][2], 0.020, 1e-12)
    check("c2 of (0.6, 0.2, 0.2)", hier["target"][1], 0.28, 1e-12)
    check("c3 of (0.6, 0.2, 0.2)", hier["target"][2], 0.024, 1e-12)
    check("c2 of (0.55, 0.3, 0.15)", hier["dominant_source"][1], 0.2925, 1e-12)
    check("c3 of (0.55, 0.3, 0.15)", hier["dominant_source"][2], 0.02475, 1e-12)

    mixed_verdict = nielsen_verdict(mixed_source, mixed_target)
    mixed_dominance = hierarchy_dominance(mixed_source, mixed_target)
    dominant_verdict = nielsen_verdict(dominant_source, dominant_target)
    dominant_dominance = hierarchy_dominance(dominant_source, dominant_target)
    check_flag(
        "mixed pair incomparable",
        mixed_verdict.verdict is Verdict.INCOMPARABLE,
        mixed_verdict.verdict.value,
    )
    check_flag(
        "mixed pair dominance mixed",
        mixed_dominance.mixed,
        f"slacks {tuple(mixed_dominance.slacks)}",
    )
    check_flag(
        "dominant pair incomparable",
        dominant_verdict.verdict is Verdict.INCOMPARABLE,
        dominant_verdict.verdict.value,
    )
    check_flag(
        "dominant pair source-dominant",
        dominant_dominance.source_dominates and not dominant_dominance.mixed,
        f"slacks {tuple(dominant_dominance.slacks)}",
    )

    bell = bell_embedded()
    third = x_family(1.0 / 3.0)
    c3_bell = hierarchy_via_minors(bell)[2]
    c3_third = hierarchy_via_minors(third)[2]
    check("c3 of the two-term uniform state", c3_bell, 0.0, 1e-12)
    check("c3 of the x=1/3 family member", c3_third, 1.0 / 54.0, 1e-12)
    check("c3 gap at x=1/3", c3_third - c3_bell, 1.0 / 54.0, 1e-12)

    af_bell = af_concurrence(bell)
    af_third = af_concurrence(third)
    check("two-level concurrence at x=1/3", af_third, math.sqrt(0.75), 1e-12)
    check("two-level concurrence coincidence gap", af_third - af_bell, 0.0, 1e-12)

    x_star = solve_unit_eof_x()
    eof_at_root = eof_pure(x_family(x_star))
    eof_bell = eof_pure(bell)
    check("unit-entropy root", x_star, 0.2271, 5e-4)
    check("eof at the root", eof_at_root, 1.0, 1e-6)
    check("eof of the two-term uniform state", eof_bell, 1.0, 1e-12)

    results = {
        "hierarchies": {
            "spectrum_050_040_010": {"c2": float(hier["source"][1]), "c3": float(hier["source"][2])},
            "spectrum_060_020_020": {"c2": float(hier["target"][1]), "c3": float(hier["target"][2])},
            "spectrum_055_030_015": {
                "c2": float(hier["dominant_source"][1]),
                "c3": float(hier["dominant_source"][2]),
            },
        },
        "verdicts": {
            "mixed_pair": {
                "verdict": mixed_verdict.verdict.value,
                "slacks": [float(s) for s in mixed_dominance.slacks],
                "dominance": "mixed",
            },
            "dominant_pair": {
                "verdict": dominant_verdict.verdict.value,
                "slacks": [float(s) for s in dominant_dominance.slacks],
                "dominance": "source-dominates" if dominant_dominance.source_dominates else "other",
            },
        },
        "three_level": {
            "c3_two_term_uniform": float(c3_bell),
            "c3_x_one_third": float(c3_third),
            "gap": float(c3_third - c3_bell),
        },
        "two_level_coincidence": {
            "af_two_term_uniform": float(af_bell),
            "af_x_one_third": float(af_third),
        },
        "unit_eof_root": {
            "x_star": float(x_star),
            "eof_at_root": float(eof_at_root),
            "eof_two_term_uniform": float(eof_bell),
        },
        "checks": checks,
    }
    return results, failures


def self_check() -> dict:
    """Recompute every pinned value; raise SelfCheckFailed on any miss."""
    results, failures = build_report()
    if failures:
        raise SelfCheckFailed("golden values missed tolerance: " + ", ".join(failures))
    return results


__all__ = [
    "SPECTRUM_MIXED_SOURCE",
    "SPECTRUM_MIXED_TARGET",
    "SPECTRUM_DOMINANT_SOURCE",
    "SPECTRUM_DOMINANT_TARGET",
    "diagonal_state",
    "x_family",
    "bell_embedded",
    "unit_eof_equation",
    "solve_unit_eof_x",
    "build_report",
    "self_check",
]
