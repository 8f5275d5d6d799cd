"""Entanglement values, Cops strategies, and strategy verification by play exploration."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Hashable

from .errors import ContractViolation, EntangleError, InconclusiveError
from .game import (
    INITIAL,
    Arena,
    Position,
    Turn,
    Variant,
    WinningRegion,
    cops_moves,
    robber_moves,
    solve_game,
)
from .graph import CANONICAL_MAX_N, Graph, canonical_form

DEFAULT_MAX_STATES = 5_000_000


class ReactiveStrategy:
    """A Cops strategy with memory.

    Subclasses set ``initial_memory`` and implement :meth:`step`, which sees the
    current Cops-turn position and returns the updated memory together with the
    chosen Robber-turn successor (or ``None`` if it has no answer).  Memory
    values must be hashable; the verifier explores position x memory.
    """

    initial_memory: Hashable = None

    def step(self, memory: Hashable, pos: Position) -> tuple[Hashable, Position | None]:
        raise NotImplementedError


@dataclass
class Strategy(ReactiveStrategy):
    """Positional Cops strategy: one chosen successor per Cops node of its domain."""

    graph: Graph
    k: int
    variant: Variant
    choice: dict[Position, Position] = field(repr=False)

    @property
    def domain(self) -> set[Position]:
        return set(self.choice)

    def __getitem__(self, pos: Position) -> Position:
        return self.choice[pos]

    def get(self, pos: Position) -> Position | None:
        return self.choice.get(pos)

    def step(self, memory, pos):
        return memory, self.choice.get(pos)


def extract_strategy(arena: Arena, region: WinningRegion) -> Strategy:
    """Pick, at every winning Cops node, the successor of least rank (ties by position key)."""
    choice = {}
    for pos, r in region.rank.items():
        if pos not in arena.successors:
            raise ContractViolation(f"region node {pos} is not in the arena")
        if pos.turn != Turn.COPS:
            continue
        best = min(
            (s for s in arena.successors[pos] if s in region),
            key=lambda s: (region.rank[s], s.key()),
            default=None,
        )
        if best is None or region.rank[best] >= r:
            raise ContractViolation(f"region ranks are inconsistent at {pos}")
        choice[pos] = best
    return Strategy(arena.graph, arena.k, arena.variant, choice)


@dataclass
class VerificationReport:
    won: bool
    states_explored: int
    reason: str = ""
    counterexample: list[Position] = field(default_factory=list)

    @property
    def verdict(self) -> str:
        return "WIN" if self.won else "LOSS"

    def to_dict(self) -> dict[str, Any]:
        return {
            "verdict": self.verdict,
            "states_explored": self.states_explored,
            "reason": self.reason,
            "counterexample": [
                [p.v, sorted(p.cop_set), "cops" if p.turn == Turn.COPS else "robber"]
                for p in self.counterexample
                if p != INITIAL
            ],
        }


def verify_strategy(
    g: Graph,
    k: int,
    variant: Variant,
    strategy: ReactiveStrategy,
    max_states: int = DEFAULT_MAX_STATES,
) -> VerificationReport:
    """Explore every play consistent with ``strategy`` against all Robber moves.

    The strategy wins iff that play tree is finite: no reachable cycle, no Cops
    node where the strategy is silent or picks an illegal move.
    """
    variant = Variant(variant)
    start = (INITIAL, strategy.initial_memory)
    # DFS colours: 1 = on the current path, 2 = finished
    colour: dict[tuple, int] = {start: 1}
    path = [start]
    stack = [iter(_expand(g, k, variant, strategy, start))]

    def loss(reason, extra=()):
        return VerificationReport(False, len(colour), reason, [p for p, _ in path] + list(extra))

    while stack:
        try:
            nxt = next(stack[-1])
        except StopIteration:
            colour[path.pop()] = 2
            stack.pop()
            continue
        except _Undefined as exc:
            return loss(exc.reason, exc.extra)
        c = colour.get(nxt)
        if c == 1:
            return loss("cycle: Robber can play forever", [nxt[0]])
        if c == 2:
            continue
        if len(colour) >= max_states:
            raise InconclusiveError(f"more than {max_states} states explored")
        colour[nxt] = 1
        path.append(nxt)
        stack.append(iter(_expand(g, k, variant, strategy, nxt)))
    return VerificationReport(True, len(colour))


class _Undefined(Exception):
    def __init__(self, reason, extra=()):
        self.reason = reason
        self.extra = list(extra)


def _expand(g, k, variant, strategy, state):
    pos, mem = state
    if pos.turn == Turn.ROBBER:
        for nxt in robber_moves(pos, g):
            yield nxt, mem
        return
    new_mem, chosen = strategy.step(mem, pos)
    if chosen is None:
        raise _Undefined(f"strategy undefined at {pos}")
    if chosen not in cops_moves(pos, k, variant):
        raise _Undefined(f"illegal cops move {pos} -> {chosen}", [chosen])
    yield chosen, new_mem


@dataclass
class EntanglementResult:
    graph: Graph
    value: int
    per_k: list[tuple[int, bool]]
    strategy: Strategy = field(repr=False)

    def to_dict(self) -> dict[str, Any]:
        return {
            "n": self.graph.n,
            "directed": self.graph.directed,
            "entanglement": self.value,
            "per_k": [{"k": k, "cops_win": w} for k, w in self.per_k],
        }


def entanglement(g: Graph) -> EntanglementResult:
    """Least number of cops that win, with a certifying positional strategy."""
    per_k = []
    for k in range(g.n + 1):
        arena, region = solve_game(g, k, Variant.STANDARD)
        won = INITIAL in region
        per_k.append((k, won))
        if won:
            return EntanglementResult(g, k, per_k, extract_strategy(arena, region))
    raise EntangleError(f"{g.n} cops failed to win on {g!r}")


_VALUES: dict[bytes, int] = {}


def entanglement_value(g: Graph) -> int:
    """Entanglement only, memoised per isomorphism class for small graphs."""
    if g.n > CANONICAL_MAX_N:
        return entanglement(g).value
    code = canonical_form(g)
    if code not in _VALUES:
        _VALUES[code] = entanglement(g).value
    return _VALUES[code]
