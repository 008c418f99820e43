"""The M(n, l) array behind Gamma_B dimensions and its ratio limit."""

from fractions import Fraction

from easytraces.arrays import m_array, m_properties_report
from easytraces.graphs import build_graph
from easytraces.young import dim_young

M = m_array(12)

# %% first rows of the triangle
for n in range(7):
    print(n, [M(n, l) for l in range(n + 1)])

# %% the first column counts involutions
print([M(n, 0) for n in range(12)])

# %% Gamma_B dimensions factor as M(n, |lam|) * dim(lam)
g = build_graph("gamma_B", 6)
for v in g.level(6)[:6]:
    print(v.payload, g.dim(v), "=", M(6, v.payload.size), "*", dim_young(v.payload))

# %% the ratio M(n-1,0)/M(n,0) tends to zero like 1/sqrt(n)
for n in (10, 50, 100, 200):
    Mn = m_array(n)
    r = Fraction(Mn(n - 1, 0), Mn(n, 0))
    print(n, float(r), float(r * r * n))

# %% every identity and monotonicity claim up to n = 200
print("\n".join(m_properties_report(200).summary_lines()))
