"""Walk through the six branching graphs and their path-count dimensions."""

from easytraces.export import graph_to_dot, payload_label
from easytraces.graphs import KINDS, Vertex, build_graph, enumerate_paths, pascalize
from easytraces.young import make_diagram

# %% level sizes of every graph
for kind in KINDS:
    g = build_graph(kind, 6)
    print(f"{kind:17s}", [len(g.payloads(n)) for n in range(7)])

# %% Gamma_B: diagrams may grow, shrink or stay put
gb = build_graph("gamma_B", 3)
for v in gb.level(3):
    print(f"level 3  {payload_label(v.payload):6s} dim={gb.dim(v)}")

# %% the two lazy walks from the root back to the empty diagram at level 2
for path in enumerate_paths(gb, gb.root, Vertex(2, make_diagram([]))):
    print(" -> ".join(payload_label(v.payload) for v in path))

# %% coupled Young graph: ((1),(1)) at level 3 has three paths
theta = build_graph("theta", 3)
target = Vertex(3, (make_diagram([1]), make_diagram([1])))
print("dim", theta.dim(target))
for path in enumerate_paths(theta, theta.root, target):
    print("  " + " -> ".join(payload_label(v.payload) for v in path))

# %% pascalization turns walks on the Young graph into paths
py = pascalize(build_graph("young", 4))
print({payload_label(p): py.dim(Vertex(4, p)) for p in py.payloads(4)})

# %% DOT for graphviz
print(graph_to_dot(build_graph("young", 3)))
