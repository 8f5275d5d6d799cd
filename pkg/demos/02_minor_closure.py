# %% [markdown]
# # Entanglement under minors
#
# Deleting edges, contracting edges and dropping isolated vertices never
# raises entanglement, and a single such step lowers it by at most one.
# Here we check both over every graph with up to five vertices, then look
# inside the strategy transfer behind the contraction case.

# %%
from collections import Counter

from entangle import (
    check_direct_minor_bound,
    check_minor_monotonicity,
    contract_edge,
    entanglement,
    graphs_up_to,
    transfer_strategy,
    verify_strategy,
)
from entangle.graph import cycle_graph

# %%
tally = Counter()
for h in graphs_up_to(5):
    for rep in check_minor_monotonicity(h) + check_direct_minor_bound(h):
        tally[rep.theorem, rep.passed] += 1
print(dict(tally))

# %% [markdown]
# ## Transferring a strategy along a contraction
#
# Contract one edge of the 4-cycle.  The cops' strategy on the cycle is
# replayed inside the cycle while Robber moves on the triangle; when Robber
# steps onto the merged vertex, the simulation lets him bounce between the two
# original endpoints until the cycle strategy places a cop.

# %%
h = cycle_graph(4)
k = entanglement(h).value
g, cm = contract_edge(h, 0, 1)
print("H:", h, " G:", g, " merged vertex:", cm.z, " k:", k)

moved = transfer_strategy(entanglement(h).strategy, cm, k)
print(verify_strategy(g, k, "generalized", moved))

# %% [markdown]
# One line of play, showing the matched position in H after each exchange.

# %%
from entangle import Position, Turn
from entangle.game import mask_members

memory, pos = moved.initial_memory, Position(cm.z, 0, Turn.COPS)
for _ in range(4):
    memory, chosen = moved.step(memory, pos)
    h_vertex, h_cops, tag = memory
    print(f"{tag:>9}: G {chosen}   H robber on {h_vertex}, cops {sorted(mask_members(h_cops))}")
    free = sorted(g.adjacency[chosen.v] - chosen.cop_set)
    if not free:
        print("Robber caught")
        break
    pos = Position(free[-1], chosen.cops, Turn.COPS)
