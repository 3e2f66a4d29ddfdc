import networkx as nx
import pytest

from itertools import combinations

from pydantic import ValidationError

from hyperci.dismantling import (
    StopCondition,
    Strategy,
    StrategyKind,
    Trajectory,
    anc,
    batch_size_for,
    dismantle,
)
from hyperci.errors import HypergraphError, StrategyError
from hyperci.hypergraph import Hypergraph, Normalization, build

from tests.utils import random_corpus

SMALL_CORPUS = random_corpus(count=40, seed=11, max_nodes=12, max_edges=10, max_size=4)


def brute_force_parts(hyperedges, alive):
    """(hyperedge count, sorted nodes) per component induced by `alive`, by union-find."""
    parent = {v: v for v in alive}

    def find(v):
        while parent[v] != v:
            v = parent[v]
        return v

    shrunk = [[v for v in members if v in alive] for members in hyperedges]
    shrunk = [members for members in shrunk if members]
    for members in shrunk:
        for v in members[1:]:
            parent[find(v)] = find(members[0])

    nodes, edges = {}, {}
    for v in alive:
        nodes.setdefault(find(v), []).append(v)
    for members in shrunk:
        root = find(members[0])
        edges[root] = edges.get(root, 0) + 1

    return [(edges.get(root, 0), sorted(group)) for root, group in nodes.items()]


def brute_force_giant(hyperedges, alive):
    parts = brute_force_parts(hyperedges, alive)
    return max(parts, key=lambda part: (part[0], len(part[1]), -part[1][0]))[1]


def brute_force_sigma(hyperedges, alive, denominator):
    """Connectivity of the sub-hypergraph induced by `alive`."""
    if not alive:
        return 0.0
    return len(brute_force_giant(hyperedges, alive)) / denominator


def giant_is_largest(hyperedges, alive):
    if not alive:
        return True
    largest = max(len(group) for _, group in brute_force_parts(hyperedges, alive))
    return len(brute_force_giant(hyperedges, alive)) == largest


def direct_scores(hyperedges, alive, kind, radius):
    """Adaptive scores of the nodes in `alive`, straight from their definitions."""
    shrunk = [[v for v in members if v in alive] for members in hyperedges]
    shrunk = [members for members in shrunk if members]

    graph = nx.Graph()
    graph.add_nodes_from(alive)
    for members in shrunk:
        graph.add_edges_from(combinations(members, 2))

    if kind == StrategyKind.HDA:
        return {v: graph.degree(v) for v in alive}

    hyper_degree = {v: sum(1 for members in shrunk if v in members) for v in alive}
    scores = {}
    for v in alive:
        lengths = nx.single_source_shortest_path_length(graph, v, cutoff=radius)
        shell = sum(hyper_degree[u] for u, distance in lengths.items() if distance == radius)
        scores[v] = max(hyper_degree[v] - 1, 0) * shell
    return scores


def hhd_order(hypergraph: Hypergraph):
    return sorted(
        range(hypergraph.num_nodes),
        key=lambda v: (-len(hypergraph.node_to_edges[v]), v),
    )


# --- batch size ---


@pytest.mark.parametrize(
    "node_count, fraction, expected",
    [(7, 0.01, 1), (100, 0.01, 1), (1000, 0.01, 10), (7, 0.3, 2), (7, 1.0, 7), (150, 0.01, 1)],
)
def test_batch_size(node_count, fraction, expected):
    assert batch_size_for(node_count, fraction) == expected


# --- example runs ---


def test_hhd_static_example(example):
    trajectory = dismantle(example, Strategy.parse("hhd"))

    assert trajectory.batch_size == 1
    assert trajectory.removal_order() == ["x2", "x3", "x6", "x0", "x1", "x4", "x5"]
    ratios = [batch.ratio for batch in trajectory.batches]
    assert ratios == pytest.approx([4 / 6, 3 / 5, 1 / 2, 2 / 3, 1, 1, 0])
    assert trajectory.anc == pytest.approx(0.633333, abs=1e-6)


def test_hyper_ci_adaptive_example(example):
    trajectory = dismantle(example, Strategy.parse("hyperci"))

    assert trajectory.strategy.adaptive
    assert trajectory.removal_order() == ["x2", "x6", "x0", "x1", "x3", "x4", "x5"]
    ratios = [batch.ratio for batch in trajectory.batches]
    assert ratios == pytest.approx([4 / 6, 1 / 5, 1 / 4, 1 / 3, 1, 1, 0])
    assert trajectory.anc == pytest.approx(3.45 / 7)


def test_hyper_ci_beats_hhd_on_example(example):
    hyper_ci = dismantle(example, Strategy.parse("hyperci"))
    hhd = dismantle(example, Strategy.parse("hhd"))
    assert hyper_ci.anc < hhd.anc


@pytest.mark.parametrize(
    "method, expected",
    [("hhd", 14 / 49), ("hyperci", 10 / 49)],
)
def test_original_normalization_example(example, method, expected):
    trajectory = dismantle(example, Strategy.parse(method), norm=Normalization.ORIGINAL)
    assert trajectory.norm == Normalization.ORIGINAL
    assert trajectory.anc == pytest.approx(expected)

    sigmas = [trajectory.initial_sigma] + [batch.sigma_original for batch in trajectory.batches]
    assert sigmas == sorted(sigmas, reverse=True)


def test_first_batch_records_both_normalizations(example):
    trajectory = dismantle(example, Strategy.parse("hyperci"), stop=StopCondition.parse("frac=0.1"))

    assert len(trajectory.batches) == 1
    batch = trajectory.batches[0]
    assert batch.removed == ("x2",)
    assert batch.frac_removed == pytest.approx(1 / 7)
    assert batch.sigma_remaining == pytest.approx(4 / 6)
    assert batch.sigma_original == pytest.approx(4 / 7)
    assert trajectory.anc == pytest.approx(4 / 6)


def test_two_node_hyperedge():
    trajectory = dismantle(build([["a", "b"]]), Strategy.parse("hd"))
    assert trajectory.anc == pytest.approx(0.5)


def test_whole_graph_in_one_batch(example):
    trajectory = dismantle(
        example, Strategy.parse("hhd"), batch_fraction=1.0, norm=Normalization.ORIGINAL
    )
    assert len(trajectory.batches) == 1
    assert trajectory.removed_count == 7
    assert trajectory.anc == 0.0


def test_single_node_hypergraph():
    trajectory = dismantle(build([["a"]]), Strategy.parse("hyperci:2"))
    assert trajectory.removal_order() == ["a"]
    assert trajectory.anc == 0.0


# --- stop conditions ---


def test_stop_on_connectivity_threshold(example):
    trajectory = dismantle(example, Strategy.parse("hhd"), stop=StopCondition.parse("sigma=0.55"))
    assert trajectory.removal_order() == ["x2", "x3", "x6"]
    assert trajectory.anc == pytest.approx((4 / 6 + 3 / 5 + 1 / 2) / 3)


def test_stop_on_fraction(example):
    trajectory = dismantle(
        example, Strategy.parse("hda"), batch_fraction=0.3, stop=StopCondition.parse("frac=0.5")
    )
    # two batches of two nodes reach 4/7 >= 0.5
    assert [len(batch.removed) for batch in trajectory.batches] == [2, 2]


def test_stop_condition_parse():
    assert StopCondition.parse("all") == StopCondition()
    assert StopCondition.parse("frac=0.25") == StopCondition(mode="fraction", value=0.25)
    assert StopCondition.parse("sigma=0") == StopCondition(mode="sigma_below", value=0.0)
    assert str(StopCondition.parse("frac=0.25")) == "frac=0.25"


@pytest.mark.parametrize("text", ["frac=0", "frac=1.5", "sigma=2", "sigma=-0.1"])
def test_stop_condition_out_of_range(text):
    with pytest.raises(ValidationError):
        StopCondition.parse(text)


@pytest.mark.parametrize("text", ["some", "frac", "frac=x", "steps=3"])
def test_stop_condition_malformed(text):
    with pytest.raises(StrategyError):
        StopCondition.parse(text)


def test_stop_reached():
    assert not StopCondition().reached(1.0, 0.0)
    assert StopCondition(mode="fraction", value=0.5).reached(0.5, 1.0)
    assert not StopCondition(mode="sigma_below", value=0.5).reached(0.9, 0.5)
    assert StopCondition(mode="sigma_below", value=0.5).reached(0.9, 0.49)


# --- strategies ---


@pytest.mark.parametrize(
    "token, kind, radius, adaptive",
    [
        ("hd", StrategyKind.HD, None, False),
        ("hda", StrategyKind.HDA, None, True),
        ("hhd", StrategyKind.HHD, None, False),
        ("HHDA", StrategyKind.HHDA, None, True),
        ("ci", StrategyKind.CI, 1, False),
        ("ci:3", StrategyKind.CI, 3, False),
        ("hyperci", StrategyKind.HYPERCI, 1, True),
        ("hyperci:2", StrategyKind.HYPERCI, 2, True),
    ],
)
def test_strategy_parse(token, kind, radius, adaptive):
    strategy = Strategy.parse(token)
    assert strategy.kind == kind
    assert strategy.radius == radius
    assert strategy.adaptive == adaptive


def test_adaptive_ci_flag():
    assert Strategy.parse("ci:2", adaptive_ci=True).adaptive
    assert Strategy.parse("hyperci", adaptive_ci=False).adaptive


def test_strategy_token():
    assert Strategy.parse("hyperci").token == "hyperci:1"
    assert Strategy.parse("hhda").token == "hhda"


@pytest.mark.parametrize("token, message", [
    ("pagerank", "Unknown method"),
    ("hd:2", "does not take an L"),
    ("ci:0", "at least 1"),
    ("ci:x", "Invalid L"),
])
def test_strategy_parse_errors(token, message):
    with pytest.raises(StrategyError, match=message):
        Strategy.parse(token)


def test_strategy_adaptivity_is_fixed_by_kind():
    with pytest.raises(ValidationError, match="always adaptive"):
        Strategy(kind="hyperci", adaptive=False)
    with pytest.raises(ValidationError, match="never adaptive"):
        Strategy(kind="hhd", adaptive=True)
    with pytest.raises(ValidationError, match="does not take a radius"):
        Strategy(kind="hda", radius=2)


# --- invariants over random hypergraphs ---


@pytest.mark.parametrize("hypergraph", SMALL_CORPUS)
def test_static_hhd_matches_brute_force(hypergraph):
    trajectory = dismantle(hypergraph, Strategy.parse("hhd"))
    n0 = hypergraph.num_nodes
    initial = brute_force_sigma(hypergraph.hyperedges, set(range(n0)), n0)

    order = hhd_order(hypergraph)
    assert trajectory.removal_order() == [hypergraph.labels[v] for v in order]

    alive = set(range(n0))
    for v, batch in zip(order, trajectory.batches):
        alive.discard(v)
        sigma = brute_force_sigma(hypergraph.hyperedges, alive, len(alive) or 1)
        assert batch.sigma_remaining == pytest.approx(sigma)
        assert batch.ratio == pytest.approx(sigma / initial)


@pytest.mark.parametrize("method", ["hyperci:1", "hyperci:2", "hda"])
@pytest.mark.parametrize("hypergraph", SMALL_CORPUS)
def test_adaptive_run_matches_direct_rescoring(hypergraph, method):
    strategy = Strategy.parse(method)
    trajectory = dismantle(hypergraph, strategy)
    assert trajectory.batch_size == 1

    n0 = hypergraph.num_nodes
    alive = set(range(n0))
    initial = brute_force_sigma(hypergraph.hyperedges, alive, n0)

    for batch in trajectory.batches:
        scores = direct_scores(hypergraph.hyperedges, alive, strategy.kind, strategy.radius)
        chosen = min(alive, key=lambda v: (-scores[v], v))
        assert batch.removed == (hypergraph.labels[chosen],)

        alive.discard(chosen)
        sigma = brute_force_sigma(hypergraph.hyperedges, alive, len(alive) or 1)
        assert batch.sigma_remaining == pytest.approx(sigma)
        assert batch.ratio == pytest.approx(sigma / initial)


DISJOINT_HYPEREDGES = [build([["a", "b", "c"]]), build([["a", "b"], ["c", "d", "e"], ["f"]])]


@pytest.mark.parametrize("method", ["hhd", "hyperci"])
@pytest.mark.parametrize("hypergraph", SMALL_CORPUS + DISJOINT_HYPEREDGES)
def test_original_norm_connectivity_never_rises(hypergraph, method):
    trajectory = dismantle(hypergraph, Strategy.parse(method), norm=Normalization.ORIGINAL)

    alive = set(range(hypergraph.num_nodes))
    states = [set(alive)]
    for batch in trajectory.batches:
        alive -= {hypergraph.index_of(label) for label in batch.removed}
        states.append(set(alive))
    if not all(giant_is_largest(hypergraph.hyperedges, state) for state in states):
        pytest.skip("a smaller component holds more hyperedges than the largest one")

    sigmas = [trajectory.initial_sigma] + [batch.sigma_original for batch in trajectory.batches]
    assert all(later <= earlier for earlier, later in zip(sigmas, sigmas[1:]))
    assert 0.0 <= trajectory.anc <= 1.0


def test_original_norm_ratio_can_exceed_one():
    # {a, b} wins on hyperedge count, then the larger component takes over
    hypergraph = build([["a", "b"], ["a", "b"], ["a", "b"], ["c", "d", "e"], ["e", "f", "g"]])
    trajectory = dismantle(
        hypergraph, Strategy.parse("hhd"), batch_fraction=0.3, norm=Normalization.ORIGINAL
    )

    assert trajectory.initial_sigma == pytest.approx(2 / 7)
    assert [batch.removed for batch in trajectory.batches] == [
        ("a", "b"), ("e", "c"), ("d", "f"), ("g",),
    ]
    assert [batch.sigma_original for batch in trajectory.batches] == pytest.approx(
        [5 / 7, 2 / 7, 1 / 7, 0.0]
    )
    assert [batch.ratio for batch in trajectory.batches] == pytest.approx([2.5, 1.0, 0.5, 0.0])
    assert trajectory.anc == pytest.approx(8 / 7)


@pytest.mark.parametrize("method", ["hd", "hda", "hhd", "hhda", "ci", "hyperci:2"])
@pytest.mark.parametrize("hypergraph", SMALL_CORPUS[:20])
def test_run_removes_every_node_once(hypergraph, method):
    trajectory = dismantle(hypergraph, Strategy.parse(method), batch_fraction=0.2)

    assert sorted(trajectory.removal_order()) == sorted(hypergraph.labels)
    sizes = [len(batch.removed) for batch in trajectory.batches]
    assert all(size == trajectory.batch_size for size in sizes[:-1])
    assert 1 <= sizes[-1] <= trajectory.batch_size
    assert [batch.index for batch in trajectory.batches] == list(range(1, len(sizes) + 1))
    assert trajectory.batches[-1].ratio == 0.0
    assert trajectory.anc >= 0.0
    assert trajectory.anc == pytest.approx(anc(trajectory))


@pytest.mark.parametrize("hypergraph", SMALL_CORPUS[:20])
def test_runs_are_deterministic(hypergraph):
    strategy = Strategy.parse("hyperci:2")
    first = dismantle(hypergraph, strategy, batch_fraction=0.2)
    second = dismantle(hypergraph, strategy, batch_fraction=0.2)
    assert first == second


@pytest.mark.parametrize("hypergraph", SMALL_CORPUS[:20])
def test_per_node_with_unit_batches_changes_nothing(hypergraph):
    strategy = Strategy.parse("hyperci")
    batched = dismantle(hypergraph, strategy)
    per_node = dismantle(hypergraph, strategy, per_node=True)
    assert per_node.removal_order() == batched.removal_order()
    assert per_node.per_node


def test_per_node_rescoring_within_batch():
    hypergraph = build([["h", "a"], ["h", "b"], ["h", "c"], ["a", "x"], ["p", "q"], ["p", "r"]])
    strategy = Strategy.parse("hda")

    batched = dismantle(hypergraph, strategy, batch_fraction=0.25)
    per_node = dismantle(hypergraph, strategy, batch_fraction=0.25, per_node=True)

    # losing h drops a to one neighbour, below p
    assert batched.batches[0].removed == ("h", "a")
    assert per_node.batches[0].removed == ("h", "p")


# --- anc / errors ---


def test_anc_of_empty_trajectory(example):
    trajectory = dismantle(example, Strategy.parse("hd"))
    emptied = Trajectory(**{**trajectory.model_dump(), "batches": [], "anc": None})
    with pytest.raises(ValueError, match="empty trajectory"):
        anc(emptied)


def test_trajectory_rejects_repeated_nodes(example):
    trajectory = dismantle(example, Strategy.parse("hd"))
    data = trajectory.model_dump()
    data["batches"][1]["removed"] = data["batches"][0]["removed"]
    with pytest.raises(ValidationError, match="twice"):
        Trajectory(**data)


def test_dismantle_empty_hypergraph():
    with pytest.raises(HypergraphError, match="empty"):
        dismantle(Hypergraph.empty(), Strategy.parse("hd"))


@pytest.mark.parametrize("fraction", [0.0, -0.1, 1.5])
def test_dismantle_rejects_bad_batch_fraction(example, fraction):
    with pytest.raises(ValueError, match="Batch fraction"):
        dismantle(example, Strategy.parse("hd"), batch_fraction=fraction)
