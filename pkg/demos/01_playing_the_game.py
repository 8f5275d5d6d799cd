# %% [markdown]
# # Playing Robber and Cops
#
# Robber walks along edges; after each Robber move the cops may stay put,
# put a fresh cop on Robber's vertex, or move a placed cop there.  Robber may
# never step onto a cop.  The entanglement of a graph is the least number of
# cops that can force Robber to get stuck.

# %%
from entangle import (
    INITIAL,
    Position,
    Turn,
    build_arena,
    entanglement,
    parse_edge_list,
    parse_graph6,
    solve,
    verify_strategy,
)
from entangle.graph import complete_graph, cycle_graph, path_graph

# %% [markdown]
# A few small graphs.  Undirected graphs are played as symmetric digraphs, so a
# single edge already lets Robber run back and forth forever when there are no cops.

# %%
for name, g in [
    ("K2", complete_graph(2)),
    ("C3", cycle_graph(3)),
    ("P4", path_graph(4)),
    ("C5", cycle_graph(5)),
    ("K5", complete_graph(5)),
    ("directed triangle", parse_edge_list("n 3 directed\n0 1\n1 2\n2 0")),
]:
    res = entanglement(g)
    print(f"{name:>18}: Ent = {res.value}   per k: {res.per_k}")

# %% [markdown]
# ## The arena
#
# The game on the triangle with two cops has `2 * 3 * (1 + 3 + 3) = 42`
# positions plus Robber's opening choice.  Solving it is a backward
# attractor computation from the positions where Robber is caught.

# %%
triangle = parse_graph6("Bw")
arena = build_arena(triangle, 2)
region = solve(arena)
print("nodes:", len(arena), " cops win from:", len(region), " start won:", INITIAL in region)

caught = [p for p, r in region.rank.items() if r == 0 and p != INITIAL]
print("Robber stuck at:", [str(p) for p in caught])

# %% [markdown]
# ## A certifying strategy, played out
#
# `entanglement` returns a positional strategy.  Let Robber start on vertex 0
# and always take the smallest free neighbour.

# %%
res = entanglement(triangle)
pos = Position(0, 0, Turn.COPS)
while True:
    nxt = res.strategy[pos]
    print(f"cops at {pos} -> {nxt}")
    free = sorted(triangle.adjacency[nxt.v] - nxt.cop_set)
    if not free:
        print("Robber is caught on", nxt.v)
        break
    pos = Position(free[0], nxt.cops, Turn.COPS)

# %% [markdown]
# The verifier explores every Robber reply, not just one line of play.

# %%
print(verify_strategy(triangle, 2, "standard", res.strategy))
print(verify_strategy(triangle, 1, "standard", entanglement(path_graph(3)).strategy).reason)
