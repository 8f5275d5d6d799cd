from hypothesis import strategies as st

from entangle.graph import Graph


@st.composite
def graphs(draw, max_n=6, directed=False):
    n = draw(st.integers(0, max_n))
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v and (directed or u < v)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return Graph.from_edges(n, chosen, directed)
