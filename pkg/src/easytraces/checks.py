"""Cross-module verification sweeps tying graphs, arrays and diagram counts together."""

from __future__ import annotations

from .arrays import (
    dim_A_n,
    conjecture_check,
    coupled_dim_closed_form,
    hyperoct_dims,
    k_array,
    m_array,
    m_properties_report,
)
from .diagrams import Category, enumerate_category
from .graphs import Vertex, build_graph, check_isomorphism_gammaB, dim_between, pascalize
from .report import Report
from .young import EMPTY, YoungDiagram, dim_young, predecessors, successors


def _sweep(claim: str, rng: str, items) -> Report:
    count = 0
    for ok, witness in items:
        count += 1
        if not ok:
            return Report(claim, rng, False, witness, {"checked": count})
    return Report(claim, rng, True, None, {"checked": count})


def lazy_walk_count(n: int) -> int:
    """Brute-force count of n-step walks on Young diagrams from and back to the empty one.

    Each step keeps the diagram, adds a box or removes a box.
    """
    def rec(lam: YoungDiagram, steps: int) -> int:
        if len(lam) == 0 and steps == 0:
            return 1
        if sum(lam) > steps:
            return 0
        total = rec(lam, steps - 1)
        for mu in successors(lam):
            total += rec(mu, steps - 1)
        for mu in predecessors(lam):
            total += rec(mu, steps - 1)
        return total

    return rec(EMPTY, n)


def m_walk_report(N: int = 10) -> Report:
    M = m_array(N)
    return _sweep("M(n,0) = number of lazy return walks to the empty diagram", f"n <= {N}",
                  ((M(n, 0) == (w := lazy_walk_count(n)), {"n": n, "M": M(n, 0), "walks": w}) for n in range(N + 1)))


def gamma_b_factorization(N: int) -> Report:
    g = build_graph("gamma_B", N)
    M = m_array(N)
    return _sweep("dim_GammaB(n, lam) = M(n, |lam|) dim(lam)", f"n <= {N}", (
        (g.dim(v) == M(v.level, v.payload.size) * dim_young(v.payload), {"n": v.level, "lambda": list(v.payload)})
        for v in g.vertices()
    ))


def pascal_theta_factorization(N: int) -> Report:
    pt = pascalize(build_graph("theta", N))
    K = k_array(N)

    def items():
        for v in pt.vertices():
            lam, mu = v.payload.payload
            expected = K(v.level, lam.size, mu.size) * dim_young(lam) * dim_young(mu)
            yield pt.dim(v) == expected, {"n": v.level, "lambda": list(lam), "mu": list(mu)}

    return _sweep("dim_P(Theta)(n, (lam, mu)) = K(n, |lam|, |mu|) dim(lam) dim(mu)", f"n <= {N}", items())


def theta_closed_form(N: int) -> Report:
    t = build_graph("theta", N)
    return _sweep("dim_Theta(lam, mu) matches both closed forms", f"levels <= {N}", (
        (t.dim(v) == coupled_dim_closed_form(*v.payload), {"n": v.level, "pair": [list(x) for x in v.payload]})
        for v in t.vertices()
    ))


def theta_path_decomposition(N: int) -> Report:
    """dim_Theta((lam,mu); (lam~,mu~)) = dim_Y(lam; lam~) * dim_P(Y)((m,mu); (n,mu~)) for all pairs."""
    t = build_graph("theta", N)
    y = build_graph("young", N)
    py = pascalize(build_graph("young", N))

    def items():
        for u in t.vertices():
            for v in t.vertices():
                if v.level < u.level:
                    continue
                (lam, mu), (lam2, mu2) = u.payload, v.payload
                if lam.size <= lam2.size:
                    dy = dim_between(y, Vertex(lam.size, lam), Vertex(lam2.size, lam2))
                else:
                    dy = 0
                dp = dim_between(py, Vertex(u.level, Vertex(mu.size, mu)), Vertex(v.level, Vertex(mu2.size, mu2)))
                lhs = dim_between(t, u, v)
                yield lhs == dy * dp, {"u": [u.level, str(lam), str(mu)], "v": [v.level, str(lam2), str(mu2)],
                                       "theta": lhs, "young": dy, "pascal_young": dp}

    return _sweep("Theta path counts factor as Young x pascalized Young", f"all vertex pairs up to level {N}", items())


def iso_gammaB(N: int) -> Report:
    return check_isomorphism_gammaB(pascalize(build_graph("lambda_principal", N)), build_graph("gamma_B", N), N)


def dim_An_report(N: int) -> Report:
    t = build_graph("theta", N)

    def items():
        for n in range(N + 1):
            square_sum = sum(d * d for d in t.dims(n).values())
            yield dim_A_n(n) == square_sum, {"n": n, "closed_form": dim_A_n(n), "sum_dim_squared": square_sum}

    return _sweep("dim A_n closed form = sum of dim_Theta^2 over level n", f"n <= {N}", items())


def square_sum(g, n: int) -> int:
    return sum(d * d for d in g.dims(n).values())


def counts_bridge(N: int) -> Report:
    """Sum of squared dimensions per level against diagram-category counts.

    P(Y) level n vs O(n,n); Gamma_B level n vs B(n,n); P(Theta) level n vs
    H(n,n); P(doubled Y) level 2n vs S(n,n). Also checks S(n,n) = S'(n,n)
    and B(n,n) = B'(n,n).
    """
    py = pascalize(build_graph("young", N))
    gb = build_graph("gamma_B", N)
    pt = pascalize(build_graph("theta", N))
    pd = pascalize(build_graph("doubled_young", 2 * N))
    children = []
    for label, graph, cat, scale in (
        ("P(Y) vs O", py, Category.O, 1),
        ("Gamma_B vs B", gb, Category.B, 1),
        ("P(Theta) vs H", pt, Category.H, 1),
        ("P(doubled Y) at level 2n vs S", pd, Category.S, 2),
    ):
        rows = []
        for n in range(N + 1):
            rows.append((n, square_sum(graph, scale * n), len(enumerate_category(cat, n))))
        children.append(_sweep(f"sum dim^2 over {label}(n,n)", f"n <= {N}",
                               ((a == b, {"n": n, "graph": a, "diagrams": b}) for n, a, b in rows)))
    for cat, prime in ((Category.S, Category.S_PRIME), (Category.B, Category.B_PRIME)):
        children.append(_sweep(f"{cat.value}(n,n) = {prime.value}(n,n)", f"n <= {N}", (
            (enumerate_category(cat, n) == enumerate_category(prime, n), {"n": n}) for n in range(N + 1)
        )))
    return Report.combine("graph dimensions vs diagram counts", f"n <= {N}", children)


def factorizations(N: int) -> Report:
    return Report.combine("dimension factorizations", f"n <= {N}", [
        gamma_b_factorization(N),
        theta_closed_form(N),
        pascal_theta_factorization(N),
        theta_path_decomposition(min(N, 6)),
    ])


def m_properties(N: int) -> Report:
    return Report.combine("M-array suite", f"n <= {N}", [m_properties_report(N), m_walk_report(min(N, 10))])


def hyperoct(N: int) -> Report:
    return hyperoct_dims(N)[1]


TARGETS = {
    "m_properties": (m_properties, 2, 400),
    "conjecture": (conjecture_check, 3, 150),
    "hyperoct": (hyperoct, 0, 60),
    "iso_gammaB": (iso_gammaB, 0, 12),
    "dim_An": (dim_An_report, 0, 20),
    "factorizations": (factorizations, 0, 12),
    "counts_bridge": (counts_bridge, 0, 5),
}
