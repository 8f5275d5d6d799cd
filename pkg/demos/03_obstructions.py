# %% [markdown]
# # Small excluded minors
#
# Because entanglement is minor-monotone, the graphs with entanglement at
# most k are characterised by their minor-minimal non-members.  We search all
# graphs with up to six vertices for k = 0, 1, 2 and confirm that each such
# graph has entanglement exactly k + 1.

# %%
from entangle import find_obstructions

for k in range(3):
    obs = find_obstructions(k, 6)
    print(f"k = {k}: {len(obs.members)} minimal graphs, all Ent = k+1: {obs.all_exactly_k_plus_1}")
    for g, e in zip(obs.members, obs.entanglements):
        print(f"    Ent {e}  n={g.n}  edges={g.edge_list()}")

# %% [markdown]
# For k = 1 the search finds the triangle and the path on four vertices:
# a path of length three already lets Robber dodge a single cop.
