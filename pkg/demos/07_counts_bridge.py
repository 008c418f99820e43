"""Sum of squared dimensions per level against diagram counts."""

from easytraces.checks import counts_bridge
from easytraces.diagrams import enumerate_category
from easytraces.graphs import build_graph, pascalize


def square_sum(g, n):
    return sum(d * d for d in g.dims(n).values())


# %% each graph at level n (level 2n for the doubled Young graph) against a category
py = pascalize(build_graph("young", 4))
gb = build_graph("gamma_B", 4)
pt = pascalize(build_graph("theta", 4))
pd = pascalize(build_graph("doubled_young", 8))
for n in range(5):
    print(n,
          square_sum(py, n), len(enumerate_category("O", n)),
          square_sum(gb, n), len(enumerate_category("B", n)),
          square_sum(pt, n), len(enumerate_category("H", n)),
          square_sum(pd, 2 * n), len(enumerate_category("S", n)))

# %% the packaged check, including S = S' and B = B'
print("\n".join(counts_bridge(4).summary_lines()))
