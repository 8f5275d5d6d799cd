from collections import Counter, deque

import pytest

from entangle.entanglement import (
    ReactiveStrategy,
    Strategy,
    entanglement,
    entanglement_value,
    extract_strategy,
    verify_strategy,
)
from entangle.errors import ContractViolation, InconclusiveError
from entangle.game import Position, Turn, Variant, WinningRegion, build_arena, solve, solve_game
from entangle.graph import complete_graph, cycle_graph, delete_vertex, empty_graph, graphs_up_to, path_graph

STD = Variant.STANDARD


class AlwaysSkip(ReactiveStrategy):
    def step(self, memory, pos):
        return memory, Position(pos.v, pos.cops, Turn.ROBBER)


class CountingSkip(ReactiveStrategy):
    """Skips forever but with ever-growing memory."""

    initial_memory = 0

    def step(self, memory, pos):
        return memory + 1, Position(pos.v, pos.cops, Turn.ROBBER)


# values from the brute-force oracle (tests/test_oracle.py covers the small cases by hand)
@pytest.mark.parametrize("g, value", [
    (empty_graph(1), 0),
    (complete_graph(2), 1),
    (cycle_graph(3), 2),
    (empty_graph(5), 0),
    (path_graph(3), 1),
    (path_graph(4), 2),
    (path_graph(5), 2),
    (cycle_graph(4), 2),
    (cycle_graph(5), 3),
    (complete_graph(4), 3),
    (complete_graph(5), 4),
])
def test_entanglement_values(g, value):
    res = entanglement(g)
    assert res.value == value
    assert res.per_k == [(k, k == value) for k in range(value + 1)]
    assert entanglement_value(g) == value


def test_value_histogram_small_graphs():
    # frozen from oracle_entanglement over every class with 4 and 5 vertices
    hist = Counter((g.n, entanglement_value(g)) for g in graphs_up_to(5) if g.n >= 4)
    assert hist == {(4, 0): 1, (4, 1): 4, (4, 2): 5, (4, 3): 1,
                    (5, 0): 1, (5, 1): 6, (5, 2): 16, (5, 3): 10, (5, 4): 1}


def test_to_dict(k2):
    assert entanglement(k2).to_dict() == {
        "n": 2, "directed": False, "entanglement": 1,
        "per_k": [{"k": 0, "cops_win": False}, {"k": 1, "cops_win": True}],
    }


class TestExtraction:
    def test_k2_skip_after_flee(self, k2):
        s = entanglement(k2).strategy
        assert s[Position.of(1, {0}, Turn.COPS)] == Position.of(1, {0}, Turn.ROBBER)

    def test_single_vertex(self, k1):
        s = entanglement(k1).strategy
        assert s.choice == {Position(0, 0, Turn.COPS): Position(0, 0, Turn.ROBBER)}

    def test_triangle_adds_second_cop(self, c3):
        s = entanglement(c3).strategy
        assert s[Position.of(1, {0}, Turn.COPS)] == Position.of(1, {0, 1}, Turn.ROBBER)

    def test_choices_decrease_rank(self, c3):
        arena, region = solve_game(c3, 2)
        s = extract_strategy(arena, region)
        for p, q in s.choice.items():
            assert region.rank[q] < region.rank[p]
            assert q in arena.successors[p]

    def test_mismatched_region(self, c3, k2):
        region = solve(build_arena(c3, 2))
        with pytest.raises(ContractViolation):
            extract_strategy(build_arena(k2, 1), region)

    def test_bad_ranks(self, k2):
        arena = build_arena(k2, 1)
        fake = WinningRegion({Position(0, 0, Turn.COPS): 0})
        with pytest.raises(ContractViolation):
            extract_strategy(arena, fake)


class TestVerify:
    def test_extracted_wins(self, k2):
        res = entanglement(k2)
        assert verify_strategy(k2, 1, STD, res.strategy).verdict == "WIN"

    def test_always_skip_cycles(self, k2):
        rep = verify_strategy(k2, 1, STD, AlwaysSkip())
        assert rep.verdict == "LOSS" and "cycle" in rep.reason
        tail = [(p.v, p.cops) for p in rep.counterexample if p.turn == Turn.COPS]
        assert tail == [(0, 0), (1, 0), (0, 0)]

    def test_triangle_one_cop_always_loses(self, c3):
        # the triangle needs two cops: extracted strategies for smaller graphs do not help
        for strategy in (AlwaysSkip(), entanglement(path_graph(3)).strategy, Strategy(c3, 1, STD, {})):
            assert not verify_strategy(c3, 1, STD, strategy).won

    def test_undefined_is_loss(self, c3):
        rep = verify_strategy(c3, 2, STD, Strategy(c3, 2, STD, {}))
        assert not rep.won and "undefined" in rep.reason
        assert rep.counterexample[-1] == Position(0, 0, Turn.COPS)

    def test_illegal_move_is_loss(self, k2):
        bad = Strategy(k2, 1, STD, {Position(0, 0, Turn.COPS): Position.of(0, {0, 1}, Turn.ROBBER)})
        rep = verify_strategy(k2, 1, STD, bad)
        assert not rep.won and "illegal" in rep.reason

    def test_state_bound(self, k2):
        with pytest.raises(InconclusiveError):
            verify_strategy(k2, 1, STD, CountingSkip(), max_states=50)

    def test_report_dict(self, k2):
        d = verify_strategy(k2, 1, STD, AlwaysSkip()).to_dict()
        assert d["verdict"] == "LOSS"
        assert d["counterexample"][0] == [0, [], "cops"]


def _has_cycle(g):
    indeg = {v: 0 for v in g.vertices}
    for _, v in g.edges:
        indeg[v] += 1
    queue = deque(v for v, d in indeg.items() if d == 0)
    seen = 0
    while queue:
        u = queue.popleft()
        seen += 1
        for w in g.adjacency[u]:
            indeg[w] -= 1
            if indeg[w] == 0:
                queue.append(w)
    return seen < g.n


def test_zero_iff_acyclic():
    for g in graphs_up_to(4, directed=True):
        assert (entanglement_value(g) == 0) == (not _has_cycle(g))
    for g in graphs_up_to(6):
        assert (entanglement_value(g) == 0) == (not g.edges)


def test_roundtrip_on_digraphs():
    for g in graphs_up_to(4, directed=True):
        res = entanglement(g)
        assert verify_strategy(g, res.value, STD, res.strategy).won


def test_vertex_deletion_drops_at_most_one():
    for h in graphs_up_to(5):
        for v in h.vertices:
            assert entanglement_value(h) <= entanglement_value(delete_vertex(h, v)) + 1
