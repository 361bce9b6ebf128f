"""Acceptance gate: one test per criterion, each at its stated bound.

A PASS/FAIL line per criterion is printed in the terminal summary.
"""

from __future__ import annotations

import io
import json
import random
import time
from contextlib import redirect_stderr, redirect_stdout

import pytest
from oracles import brute_chromatic, random_graph

from ectlab import cli
from ectlab.coloring import chromatic_number_exact, is_proper
from ectlab.generators import catalog_names, named_graph
from ectlab.graph import complete_graph
from ectlab.harness import recheck_record
from ectlab.minors import (
    K5,
    K33,
    ORACLE_MAX_N,
    has_k5_or_k33_minor,
    planarity_oracle_small,
    search_minor,
    validate_minor_witness,
)
from ectlab.planarity import is_planar, validate_verdict

THEOREM2_ARGS = ["verify", "theorem2", "--count", "200", "--n-max", "10", "--seed", "7"]
FCT_ARGS = ["verify", "fct", "--count", "500", "--n-max", "12", "--seed", "11"]
THEOREM1_ARGS = ["verify", "theorem1", "--count", "50", "--n-max", "10", "--seed", "3"]


def run_cli(argv: list[str]) -> tuple[int, str, float]:
    out, err = io.StringIO(), io.StringIO()
    start = time.perf_counter()
    with redirect_stdout(out), redirect_stderr(err):
        code = cli.main(argv)
    return code, out.getvalue(), time.perf_counter() - start


def without_timing(text: str) -> str:
    return "\n".join(line for line in text.splitlines() if '"elapsed_ms"' not in line)


@pytest.fixture(scope="module")
def runs() -> dict[str, tuple[int, str, float]]:
    return {name: run_cli(args) for name, args in (("theorem2", THEOREM2_ARGS), ("fct", FCT_ARGS), ("theorem1", THEOREM1_ARGS))}


def test_c1_exact_chromatic_matches_brute_force():
    """C1 exact chi == brute-force k^n oracle on catalog + 250 random graphs (n<=7), 100% agreement, < 60 s"""
    start = time.perf_counter()
    graphs = [named_graph(name) for name in catalog_names()]
    rng = random.Random(1)
    graphs += [random_graph(rng, 1, 7) for _ in range(250)]
    mismatches = []
    for g in graphs:
        chi, witness = chromatic_number_exact(g)
        if chi != brute_chromatic(g) or not is_proper(g, witness) or witness.k != chi:
            mismatches.append(g)
    assert mismatches == []
    assert time.perf_counter() - start < 60


def test_c2_theorem2_suite(runs):
    """C2 verify theorem2 --count 200 --n-max 10 --seed 7: 0 violations, every minimal quotient is K_chi, < 120 s"""
    code, out, elapsed = runs["theorem2"]
    report = json.loads(out)
    assert code == 0
    assert report["instances"] == 200 and report["summary"]["violations"] == 0
    for r in report["per_instance"]:
        assert r["quotient_complete"] and r["colorings_checked"] >= 1
        assert recheck_record("theorem2", r) == []
    assert elapsed < 120


def test_c3_fct_sample(runs):
    """C3 verify fct --count 500 --n-max 12 --seed 11: chi in {1,2,3,4} for all planar instances, 0 violations, < 300 s"""
    code, out, elapsed = runs["fct"]
    report = json.loads(out)
    assert code == 0
    assert report["instances"] == 500 and report["summary"]["violations"] == 0
    for r in report["per_instance"]:
        assert r["chi"] in (1, 2, 3, 4)
        assert r["quotient_planar"]
        assert recheck_record("fct", r) == []
    assert elapsed < 300


def test_c4_theorem1_existence(runs):
    """C4 verify theorem1 on 50 seeded planar instances (n<=10): existence on every instance, < 120 s"""
    code, out, elapsed = runs["theorem1"]
    report = json.loads(out)
    assert code == 0
    assert report["instances"] == 50
    for r in report["per_instance"]:
        assert r["n"] <= 10
        assert r["existence"] is True and r["chi"] <= 4
        assert recheck_record("theorem1", r) == []
    assert elapsed < 120


def test_c5_wagner_consistency():
    """C5 is_planar == minor oracle on catalog + 520 random graphs (n<=8), witnesses validate, < 300 s"""
    start = time.perf_counter()
    graphs = [named_graph(name) for name in catalog_names()]
    rng = random.Random(2)
    graphs += [random_graph(rng, 1, 8, 0.15, 0.9) for _ in range(520)]
    disagreements = []
    for g in graphs:
        verdict = is_planar(g)
        validate_verdict(g, verdict)
        if g.n <= ORACLE_MAX_N:
            oracle = planarity_oracle_small(g)
        else:
            # the oracle refuses n > 10; C11, C12, P11, P12 go straight to the unbounded minor search
            oracle = has_k5_or_k33_minor(g, budget=None) is None
        if oracle != verdict.planar:
            disagreements.append(g)
    assert disagreements == []
    assert time.perf_counter() - start < 300


def test_c6_pinned_verdicts():
    """C6 pinned: K5 non-planar (K5 witness), K3,3 non-planar (K33 witness), K4 planar, petersen chi=3 with K5 minor"""
    k5 = is_planar(complete_graph(5))
    assert not k5.planar and k5.minor.target == K5
    validate_verdict(complete_graph(5), k5)
    k33 = is_planar(named_graph("K3,3"))
    assert not k33.planar and k33.minor.target == K33
    validate_verdict(named_graph("K3,3"), k33)
    k4 = is_planar(complete_graph(4))
    assert k4.planar
    validate_verdict(complete_graph(4), k4)
    petersen = named_graph("petersen")
    assert chromatic_number_exact(petersen)[0] == 3
    found = search_minor(petersen, K5)
    assert found.result == "found"
    validate_minor_witness(petersen, found.witness)


def test_c7_gap_demo():
    """C7 demo-gap: base planar, identified == K5 and non-planar, exit 0, < 1 s"""
    code, out, elapsed = run_cli(["demo-gap"])
    data = json.loads(out)
    assert code == 0
    assert data["base_planar"]["planar"] is True
    assert data["pair_adjacent"] is False
    assert data["identified"]["n"] == 5 and len(data["identified"]["edges"]) == 10 and data["identified_complete"]
    assert data["identified_planar"]["planar"] is False
    assert elapsed < 1
    assert run_cli(["demo-gap"])[1] == out


def test_c8_determinism(runs):
    """C8 rerunning every verify subcommand with identical flags gives byte-identical reports minus timing"""
    for name, args in (("theorem2", THEOREM2_ARGS), ("fct", FCT_ARGS), ("theorem1", THEOREM1_ARGS)):
        code, out, _ = run_cli(args)
        assert code == runs[name][0]
        assert without_timing(out) == without_timing(runs[name][1]), name


def test_c9_converse_regression(runs):
    """C9 C6 with classes {0,3},{1,4},{2,5} gives a complete K3 quotient while chi(C6)=2, recorded as non-violation"""
    report = json.loads(runs["theorem2"][1])
    note = report["notes"]["non_converse_witness"]
    assert note["classes"] == [[0, 3], [1, 4], [2, 5]]
    assert note["quotient"]["graph"] == complete_graph(3).to_json()
    assert note["quotient_complete"] is True and note["chi"] == 2
    assert note["is_violation"] is False
    assert report["summary"]["violations"] == 0
