"""Explicit arenas for the Robber-and-Cops game and their reachability solver.

A position is ``(v, cops, turn)``: Robber's vertex, the cop set as a bit mask
over vertex ids, and whose move it is.  Every finite play is a Cops win, so the
Cops winning region is the attractor of the Robber positions with no move.
"""

from __future__ import annotations

import enum
import os
from collections import deque
from dataclasses import dataclass, field
from math import comb
from typing import Iterable, NamedTuple

from .errors import ContractViolation, GraphDomainError, SizeLimitError
from .graph import Graph

DEFAULT_MAX_NODES = 2_000_000


class Turn(enum.IntEnum):
    COPS = 0
    ROBBER = 1


class Variant(str, enum.Enum):
    STANDARD = "standard"
    GENERALIZED = "generalized"


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def mask_members(mask: int) -> frozenset[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return frozenset(out)


class Position(NamedTuple):
    v: int
    cops: int
    turn: Turn

    @property
    def cop_set(self) -> frozenset[int]:
        return mask_members(self.cops)

    @classmethod
    def of(cls, v: int, cops: Iterable[int], turn: Turn) -> Position:
        return cls(v, mask_of(cops), Turn(turn))

    def key(self) -> tuple[int, int, int]:
        return (self.v, self.cops, int(self.turn))

    def __str__(self) -> str:
        who = "Cops" if self.turn == Turn.COPS else "Robber"
        if self.v < 0:
            return "(start)"
        return f"({self.v}, {set(sorted(self.cop_set)) or '{}'}, {who})"


# Robber's opening choice of vertex.
INITIAL = Position(-1, 0, Turn.ROBBER)


def cops_moves(pos: Position, k: int, variant: Variant = Variant.STANDARD) -> list[Position]:
    """Cops' options from ``pos``, sorted by position key."""
    if pos.turn != Turn.COPS or pos.v < 0:
        raise ContractViolation(f"cops_moves called on {pos}")
    v, cops = pos.v, pos.cops
    here = 1 << v
    targets: set[int] = set()
    if Variant(variant) == Variant.STANDARD:
        targets.add(cops)
        if cops.bit_count() < k and not cops & here:
            targets.add(cops | here)
        rest = cops
        while rest:
            x = rest & -rest
            targets.add((cops & ~x) | here)
            rest ^= x
    else:
        sub = cops
        while True:
            targets.add(sub)
            if (sub | here).bit_count() <= k:
                targets.add(sub | here)
            if sub == 0:
                break
            sub = (sub - 1) & cops
    return sorted(Position(v, c, Turn.ROBBER) for c in targets)


def robber_moves(pos: Position, g: Graph) -> list[Position]:
    """Robber's moves from ``pos``; an empty list means Robber is caught."""
    if pos.turn != Turn.ROBBER:
        raise ContractViolation(f"robber_moves called on {pos}")
    if pos == INITIAL:
        return [Position(v, 0, Turn.COPS) for v in g.vertices]
    return sorted(
        Position(w, pos.cops, Turn.COPS) for w in g.adjacency[pos.v] if not pos.cops >> w & 1
    )


def successors(pos: Position, g: Graph, k: int, variant: Variant) -> list[Position]:
    if pos.turn == Turn.COPS:
        return cops_moves(pos, k, variant)
    return robber_moves(pos, g)


def expected_node_count(n: int, k: int) -> int:
    """Position nodes of an arena, the initial node excluded."""
    return 2 * n * sum(comb(n, i) for i in range(k + 1))


def max_nodes() -> int:
    return int(os.environ.get("ENTANGLE_MAX_NODES", DEFAULT_MAX_NODES))


@dataclass
class Arena:
    graph: Graph
    k: int
    variant: Variant
    successors: dict[Position, tuple[Position, ...]] = field(repr=False)

    @property
    def nodes(self) -> list[Position]:
        return list(self.successors)

    def owner(self, pos: Position) -> Turn:
        return pos.turn

    def __len__(self) -> int:
        return len(self.successors)


def _cop_masks(vertices: tuple[int, ...], k: int) -> list[int]:
    masks = [0]
    for v in vertices:
        bit = 1 << v
        masks += [m | bit for m in masks if m.bit_count() < k]
    return sorted(masks)


def build_arena(g: Graph, k: int, variant: Variant = Variant.STANDARD) -> Arena:
    """All positions of the ``k``-cop game on ``g`` plus the initial choice node."""
    if not 0 <= k <= g.n:
        raise GraphDomainError(f"k must lie in 0..{g.n}, got {k}")
    variant = Variant(variant)
    total = expected_node_count(g.n, k)
    if total > max_nodes():
        raise SizeLimitError(f"arena would have {total} nodes (limit {max_nodes()}, see ENTANGLE_MAX_NODES)")
    succ: dict[Position, tuple[Position, ...]] = {INITIAL: tuple(robber_moves(INITIAL, g))}
    masks = _cop_masks(g.vertices, k)
    for v in g.vertices:
        for m in masks:
            for turn in Turn:
                pos = Position(v, m, turn)
                succ[pos] = tuple(successors(pos, g, k, variant))
    return Arena(g, k, variant, succ)


@dataclass(frozen=True)
class WinningRegion:
    """Nodes from which Cops force a finite play, with the attractor stage of each."""

    rank: dict[Position, int]

    def __contains__(self, pos: Position) -> bool:
        return pos in self.rank

    def __len__(self) -> int:
        return len(self.rank)


def solve(arena: Arena) -> WinningRegion:
    """Least fixpoint: caught-Robber nodes, closed under Cops-some / Robber-all predecessors."""
    preds: dict[Position, list[Position]] = {p: [] for p in arena.successors}
    for p, ss in arena.successors.items():
        for s in ss:
            preds[s].append(p)
    pending = {p: len(ss) for p, ss in arena.successors.items() if p.turn == Turn.ROBBER}
    rank: dict[Position, int] = {}
    queue: deque[Position] = deque()
    for p, ss in arena.successors.items():
        if p.turn == Turn.ROBBER and not ss:
            rank[p] = 0
            queue.append(p)
    # FIFO keeps ranks non-decreasing, so a Cops node gets 1 + its best
    # successor and a Robber node 1 + its worst.
    while queue:
        s = queue.popleft()
        r = rank[s] + 1
        for p in preds[s]:
            if p in rank:
                continue
            if p.turn == Turn.COPS:
                rank[p] = r
                queue.append(p)
            else:
                pending[p] -= 1
                if pending[p] == 0:
                    rank[p] = r
                    queue.append(p)
    return WinningRegion(rank)


def solve_game(g: Graph, k: int, variant: Variant = Variant.STANDARD) -> tuple[Arena, WinningRegion]:
    arena = build_arena(g, k, variant)
    return arena, solve(arena)


def cops_win(g: Graph, k: int, variant: Variant = Variant.STANDARD) -> bool:
    arena, region = solve_game(g, k, variant)
    return INITIAL in region
