from __future__ import annotations

import pytest

from ectlab.errors import ContractViolation, SearchInconclusive, WitnessError
from ectlab.generators import generate_random_planar, named_graph
from ectlab.graph import Graph, complete_graph
from ectlab.minors import (
    K5,
    K33,
    MinorWitness,
    has_k5_or_k33_minor,
    planarity_oracle_small,
    search_k5_or_k33,
    search_minor,
    validate_minor_witness,
)


def test_k5_is_its_own_minor():
    w = has_k5_or_k33_minor(complete_graph(5))
    assert w == MinorWitness(K5, ((0,), (1,), (2,), (3,), (4,)))


def test_k33_found_when_no_k5():
    g = named_graph("K3,3")
    assert search_minor(g, K5).result == "none"
    w = has_k5_or_k33_minor(g)
    assert w.target == K33
    validate_minor_witness(g, w)


@pytest.mark.parametrize("edges", [[], [(0, 1), (1, 2), (1, 3), (3, 4), (3, 5), (5, 6), (5, 7), (0, 8), (8, 9)]])
def test_trees_have_no_minor(edges):
    assert has_k5_or_k33_minor(Graph(10, edges)) is None


def test_petersen_has_k5_minor_with_pair_branch_sets():
    g = named_graph("petersen")
    result = search_minor(g, K5)
    assert result.result == "found"
    validate_minor_witness(g, result.witness)
    assert [len(s) for s in result.witness.branch_sets] == [2] * 5


def test_search_is_deterministic():
    g = named_graph("petersen")
    assert search_k5_or_k33(g) == search_k5_or_k33(g)


def test_budget_exhaustion_is_inconclusive():
    g = generate_random_planar(10, 1)
    result = search_k5_or_k33(g, budget=50)
    assert result.result == "inconclusive" and result.witness is None
    assert result.to_json() == {"result": "inconclusive"}
    with pytest.raises(SearchInconclusive):
        has_k5_or_k33_minor(g, budget=50)
    assert search_k5_or_k33(g, budget=None).to_json() == {"result": "none"}


def test_unknown_target():
    with pytest.raises(ContractViolation):
        search_minor(complete_graph(5), "K7")


@pytest.mark.parametrize(
    "name, expected",
    [("K5", False), ("C8", True), ("split-K5", True), ("K3,3", False), ("petersen", False), ("K4", True)],
)
def test_oracle_examples(name, expected):
    assert planarity_oracle_small(named_graph(name)) is expected


def test_oracle_refuses_large_graphs():
    with pytest.raises(ContractViolation):
        planarity_oracle_small(named_graph("C11"))


def test_k5_witness_on_k6():
    g = complete_graph(6)
    w = has_k5_or_k33_minor(g)
    assert w.target == K5
    validate_minor_witness(g, w)


def test_witness_json_round_trip():
    w = has_k5_or_k33_minor(named_graph("petersen"))
    assert MinorWitness.from_json(w.to_json()) == w


def test_canonical_k33_puts_lowest_side_first():
    w = MinorWitness.canonical(K33, [[5], [3], [4], [2], [0], [1]])
    assert w.branch_sets == ((0,), (1,), (2,), (3,), (4,), (5,))


@pytest.mark.parametrize(
    "g, w, needle",
    [
        (complete_graph(5), MinorWitness(K5, ((0,), (1,), (2,), (3,))), "needs 5"),
        (complete_graph(5), MinorWitness(K5, ((0,), (1,), (2,), (3,), (3,))), "overlaps"),
        (complete_graph(5), MinorWitness(K5, ((0,), (1,), (2,), (3,), (9,))), "not in graph"),
        (complete_graph(5), MinorWitness(K5, ((0,), (1,), (2,), (3,), ())), "empty"),
        (named_graph("C6"), MinorWitness(K5, ((0, 2), (1,), (3,), (4,), (5,))), "connected"),
        (named_graph("K3,3"), MinorWitness(K5, ((0,), (1,), (2,), (3,), (4,))), "not joined"),
        (named_graph("K3,3"), MinorWitness(K33, ((0,), (3,), (1,), (2,), (4,), (5,))), "not joined"),
        (complete_graph(5), MinorWitness("K7", ()), "unknown"),
    ],
)
def test_validator_rejects(g, w, needle):
    with pytest.raises(WitnessError, match=needle):
        validate_minor_witness(g, w)


def test_k33_same_side_adjacency_not_required():
    g = named_graph("K3,3")
    # adding an edge inside one side keeps the model valid
    validate_minor_witness(Graph(6, g.edges + ((0, 1),)), has_k5_or_k33_minor(g))
