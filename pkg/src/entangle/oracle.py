"""Independent brute-force check of who wins the entanglement game.

Deliberately shares no code with :mod:`entangle.game`: moves are regenerated
here from the game rules with plain frozensets, and the game is searched by
depth-first minimax.  A Robber move back onto a position already on the
current play stack closes a cycle, which Robber wins.
"""

from __future__ import annotations

import sys

from .errors import SizeLimitError
from .graph import Graph

ORACLE_MAX_N = 5

_COPS, _ROBBER = "cops", "robber"


def _cop_options(v, cops, k):
    opts = {cops}
    if len(cops) < k:
        opts.add(cops | {v})
    for x in cops:
        opts.add((cops - {x}) | {v})
    return sorted(opts, key=sorted)


def oracle_cops_win(g: Graph, k: int) -> bool:
    """Do ``k`` cops win on ``g``?  Memoised minimax; ``|V| <= 5``."""
    if g.n > ORACLE_MAX_N:
        raise SizeLimitError(f"oracle supports |V| <= {ORACLE_MAX_N}, got {g.n}")
    if not 0 <= k <= g.n:
        raise SizeLimitError(f"oracle needs 0 <= k <= |V|, got k={k}")
    adj = {v: set() for v in g.vertices}
    for u, v in g.edges:
        adj[u].add(v)

    settled: dict[tuple, bool] = {}
    # Robber wins that close a cycle through an ancestor: valid while every
    # ancestor they relied on is still on the stack (more stack only helps Robber).
    conditional: dict[tuple, frozenset] = {}
    on_stack: set[tuple] = set()
    nothing: frozenset = frozenset()

    def search(pos):
        """Return (cops_win, stack positions a Robber win relies on)."""
        if pos in settled:
            return settled[pos], nothing
        if pos in on_stack:
            return False, frozenset([pos])
        hits = conditional.get(pos)
        if hits is not None and hits <= on_stack:
            return False, hits
        on_stack.add(pos)
        v, cops, turn = pos
        hits = nothing
        if turn == _ROBBER:
            result = True
            for w in sorted(adj[v] - cops):
                r, h = search((w, cops, _COPS))
                if not r:
                    result, hits = False, h
                    break
        else:
            result = False
            for c in _cop_options(v, cops, k):
                r, h = search((v, c, _ROBBER))
                if r:
                    result = True
                    break
                hits = hits | h
        on_stack.discard(pos)
        hits = hits - {pos}
        if result or not hits:
            settled[pos] = result
            return result, nothing
        conditional[pos] = hits
        return result, hits

    limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(limit, 10_000))
    try:
        return all(search((v0, frozenset(), _COPS))[0] for v0 in g.vertices)
    finally:
        sys.setrecursionlimit(limit)


def oracle_entanglement(g: Graph) -> int:
    """Smallest ``k`` for which :func:`oracle_cops_win` holds."""
    for k in range(g.n + 1):
        if oracle_cops_win(g, k):
            return k
    raise AssertionError(f"cops lose with k=|V| on {g!r}")
