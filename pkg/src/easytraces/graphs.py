"""Graded branching graphs, pascalization and path counting.

A graph is generated level by level up to ``level_cap``. Vertices are
``Vertex(level, payload)`` pairs; the payload is a Young diagram, a pair of
Young diagrams, a ``Tagged`` diagram, or (for pascalized graphs) a vertex of
the base graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Iterable, Iterator, NamedTuple, Sequence

from .report import Report
from .young import (
    EMPTY,
    YoungDiagram,
    diagram_key,
    diagrams_up_to,
    enumerate_level,
    predecessors,
    successors,
)

KINDS = ("young", "gamma_B", "theta", "lambda_principal", "walled", "doubled_young")


class Vertex(NamedTuple):
    level: int
    payload: Any


class Tagged(NamedTuple):
    """A Young diagram together with a copy index (0 or 1)."""

    diagram: YoungDiagram
    copy: int


class PathOverflow(RuntimeError):
    """Raised when a path enumeration exceeds its cap."""


LevelFn = Callable[[int], Iterable[Any]]
UpFn = Callable[[int, Any], Iterable[tuple[Any, int]]]


class BranchingGraph:
    """A graded graph generated lazily from a level rule and an up-edge rule.

    ``level_fn(n)`` lists the payloads of level ``n``; ``up_fn(n, p)`` lists
    ``(payload, multiplicity)`` for the edges from ``(n, p)`` to level ``n + 1``.
    """

    def __init__(self, kind: str, level_fn: LevelFn, up_fn: UpFn, key: Callable[[Any], Any], level_cap: int):
        if level_cap < 0:
            raise ValueError("level_cap must be nonnegative")
        self.kind = kind
        self._level_fn = level_fn
        self._up_fn = up_fn
        self.payload_key = key
        self.level_cap = -1
        self._levels: list[tuple] = []
        self._members: list[set] = []
        # _up[n][p] = {q: mult} for edges (n, p) -> (n + 1, q); _down mirrors it.
        self._up: list[dict] = []
        self._down: list[dict] = []
        self._dims: list[dict] = []
        self.extend_to(level_cap)

    def extend_to(self, cap: int) -> None:
        """Generate all levels up to ``cap`` (no-op for already generated levels)."""
        for n in range(self.level_cap + 1, cap + 1):
            payloads = tuple(sorted(set(self._level_fn(n)), key=self.payload_key))
            if n == 0 and len(payloads) != 1:
                raise ValueError(f"{self.kind}: level 0 must have exactly one vertex")
            members = set(payloads)
            self._levels.append(payloads)
            self._members.append(members)
            self._up.append({})
            self._down.append({p: {} for p in payloads})
            if n > 0:
                below = self._up[n - 1]
                for p in self._levels[n - 1]:
                    row: dict = {}
                    for q, m in self._up_fn(n - 1, p):
                        if q not in members:
                            raise ValueError(f"{self.kind}: edge from {p} at level {n - 1} leaves level {n}: {q}")
                        if m > 0:
                            row[q] = row.get(q, 0) + m
                    below[p] = row
                    for q, m in row.items():
                        self._down[n][q][p] = m
                orphans = [q for q in payloads if not self._down[n][q]]
                if orphans:
                    raise ValueError(f"{self.kind}: vertices without a parent at level {n}: {orphans[:3]}")
            self.level_cap = n

    # -- structure ---------------------------------------------------------

    def _check(self, v: Vertex) -> None:
        n, p = v
        if not 0 <= n <= self.level_cap or p not in self._members[n]:
            raise KeyError(f"vertex {v!r} not in {self.kind} (generated to level {self.level_cap})")

    def __contains__(self, v) -> bool:
        n, p = v
        return 0 <= n <= self.level_cap and p in self._members[n]

    @property
    def root(self) -> Vertex:
        return Vertex(0, self._levels[0][0])

    def payloads(self, n: int) -> tuple:
        if not 0 <= n <= self.level_cap:
            raise KeyError(f"level {n} not generated (cap {self.level_cap})")
        return self._levels[n]

    def level(self, n: int) -> list[Vertex]:
        return [Vertex(n, p) for p in self.payloads(n)]

    def vertices(self) -> Iterator[Vertex]:
        for n in range(self.level_cap + 1):
            yield from self.level(n)

    def up(self, v: Vertex) -> list[tuple[Vertex, int]]:
        """Edges from ``v`` to the next level, as ``(vertex, multiplicity)``."""
        self._check(v)
        n, p = v
        if n >= self.level_cap:
            return []
        return [(Vertex(n + 1, q), m) for q, m in self._up[n][p].items()]

    def down(self, v: Vertex) -> list[tuple[Vertex, int]]:
        """Edges from ``v`` to the previous level."""
        self._check(v)
        n, p = v
        return [(Vertex(n - 1, q), m) for q, m in self._down[n][p].items()]

    def mult(self, u: Vertex, v: Vertex) -> int:
        """Number of edges between ``u`` (level n) and ``v`` (level n + 1)."""
        self._check(u)
        self._check(v)
        if v.level != u.level + 1:
            return 0
        return self._up[u.level][u.payload].get(v.payload, 0)

    def edges(self) -> Iterator[tuple[Vertex, Vertex, int]]:
        for n in range(self.level_cap):
            for p in self._levels[n]:
                for q, m in sorted(self._up[n][p].items(), key=lambda t: self.payload_key(t[0])):
                    yield Vertex(n, p), Vertex(n + 1, q), m

    def set_multiplicity(self, u: Vertex, v: Vertex, m: int) -> None:
        """Overwrite one edge multiplicity (used for negative controls)."""
        self._check(u)
        self._check(v)
        if v.level != u.level + 1:
            raise ValueError("edges join adjacent levels only")
        n = u.level
        if m:
            self._up[n][u.payload][v.payload] = m
            self._down[n + 1][v.payload][u.payload] = m
        else:
            self._up[n][u.payload].pop(v.payload, None)
            self._down[n + 1][v.payload].pop(u.payload, None)
        del self._dims[n + 1:]

    # -- dimensions --------------------------------------------------------

    def _dim_level(self, n: int) -> dict:
        while len(self._dims) <= n:
            k = len(self._dims)
            if k == 0:
                self._dims.append({self._levels[0][0]: 1})
                continue
            prev = self._dims[k - 1]
            self._dims.append({q: sum(prev[p] * m for p, m in self._down[k][q].items()) for q in self._levels[k]})
        return self._dims[n]

    def dim(self, v: Vertex) -> int:
        self._check(v)
        return self._dim_level(v.level)[v.payload]

    def dims(self, n: int) -> dict:
        """Mapping payload -> root dimension for level ``n``."""
        self.payloads(n)
        return dict(self._dim_level(n))

    def __repr__(self) -> str:
        sizes = [len(lv) for lv in self._levels]
        return f"BranchingGraph({self.kind!r}, level_cap={self.level_cap}, level_sizes={sizes})"


# -- constructors ----------------------------------------------------------

def _pair_key(pair):
    return (diagram_key(pair[0]), diagram_key(pair[1]))


def _tagged_key(t: Tagged):
    return (t.copy, diagram_key(t.diagram))


def _young_levels(n):
    return enumerate_level(n)


def _young_up(n, lam):
    return ((mu, 1) for mu in successors(lam))


def _gamma_b_levels(n):
    return diagrams_up_to(n)


def _gamma_b_up(n, lam):
    yield lam, 1
    for mu in successors(lam):
        yield mu, 1
    for mu in predecessors(lam):
        yield mu, 1


def _theta_levels(n):
    return [(lam, mu) for k in range(n // 2 + 1) for lam in enumerate_level(k) for mu in enumerate_level(n - 2 * k)]


def _theta_up(n, pair):
    lam, mu = pair
    for nu in successors(mu):
        yield (lam, nu), 1
    if mu:
        for nu in predecessors(mu):
            for eta in successors(lam):
                yield (eta, nu), 1


def _lambda_levels(n):
    out = [Tagged(lam, 0) for lam in enumerate_level(n)]
    if n >= 1:
        out += [Tagged(lam, 1) for lam in enumerate_level(n - 1)]
    return out


def _lambda_up(n, t):
    lam, copy = t
    for mu in successors(lam):
        yield Tagged(mu, copy), 1
    if copy == 0:
        yield Tagged(lam, 1), 1


def _walled_levels(n):
    return [(lam, mu) for lam in enumerate_level((n + 1) // 2) for mu in enumerate_level(n // 2)]


def _walled_up(n, pair):
    lam, mu = pair
    if n % 2 == 0:
        return (((eta, mu), 1) for eta in successors(lam))
    return (((lam, nu), 1) for nu in successors(mu))


def _doubled_levels(n):
    return [Tagged(lam, n % 2) for lam in enumerate_level(n // 2)]


def _doubled_up(n, t):
    if n % 2 == 0:
        return [(Tagged(t.diagram, 1), 1)]
    return [(Tagged(mu, 0), 1) for mu in successors(t.diagram)]


_RULES = {
    "young": (_young_levels, _young_up, diagram_key),
    "gamma_B": (_gamma_b_levels, _gamma_b_up, diagram_key),
    "theta": (_theta_levels, _theta_up, _pair_key),
    "lambda_principal": (_lambda_levels, _lambda_up, _tagged_key),
    "walled": (_walled_levels, _walled_up, _pair_key),
    "doubled_young": (_doubled_levels, _doubled_up, _tagged_key),
}


def build_graph(kind: str, level_cap: int) -> BranchingGraph:
    """Construct one of the named graphs up to ``level_cap``.

    Kinds:
        young: partitions of n, edges add a box.
        gamma_B: all diagrams with at most n boxes; edges keep, add or remove a box.
        theta: pairs (lam, mu) with 2|lam| + |mu| = n; mu gains a box, or lam
            gains a box while mu loses one.
        lambda_principal: partitions of n (copy 0) and of n - 1 (copy 1);
            Young edges within each copy plus identity edges from copy 0 to copy 1.
        walled: pairs with sizes (ceil(n/2), floor(n/2)), growing alternately.
        doubled_young: partitions of n // 2 on level n; identity edges from
            even to odd levels, Young edges from odd to even levels.
    """
    if kind not in _RULES:
        raise ValueError(f"unknown graph kind {kind!r}; expected one of {KINDS}")
    if level_cap < 0:
        raise ValueError("level_cap must be nonnegative")
    level_fn, up_fn, key = _RULES[kind]
    return BranchingGraph(kind, level_fn, up_fn, key, level_cap)


def pascalize(g: BranchingGraph, level_cap: int | None = None) -> BranchingGraph:
    """The pascalization of ``g``.

    Level n holds ``Vertex(k, gamma)`` for gamma on level k <= n of ``g`` with
    k ≡ n mod 2. Edges copy the undirected multiplicities of ``g``.
    """
    cap = g.level_cap if level_cap is None else level_cap
    base_key = g.payload_key

    def level_fn(n):
        g.extend_to(n)
        return [Vertex(k, p) for k in range(n % 2, n + 1, 2) for p in g.payloads(k)]

    def up_fn(n, v):
        k, p = v
        g.extend_to(k + 1)
        for q, m in g._up[k][p].items():
            yield Vertex(k + 1, q), m
        if k > 0:
            for q, m in g._down[k][p].items():
                yield Vertex(k - 1, q), m

    def key(v):
        return (v.level, base_key(v.payload))

    return BranchingGraph(f"pascal({g.kind})", level_fn, up_fn, key, cap)


# -- path counting -----------------------------------------------------------

def dim_root(g: BranchingGraph, v: Vertex) -> int:
    """Number of root-to-``v`` paths, counting edge multiplicities."""
    return g.dim(Vertex(*v))


def dim_between(g: BranchingGraph, u: Vertex, v: Vertex) -> int:
    """Number of paths from ``u`` up to ``v``."""
    u, v = Vertex(*u), Vertex(*v)
    g._check(u)
    g._check(v)
    if v.level < u.level:
        raise ValueError("dim_between needs level(u) <= level(v)")
    counts = {u.payload: 1}
    for n in range(u.level, v.level):
        nxt: dict = {}
        for p, c in counts.items():
            for q, m in g._up[n][p].items():
                nxt[q] = nxt.get(q, 0) + c * m
        counts = nxt
    return counts.get(v.payload, 0)


def _ancestors(g: BranchingGraph, u: Vertex, v: Vertex) -> list[set]:
    """For each level between u and v, the vertices from which v is reachable."""
    alive = [set() for _ in range(v.level + 1)]
    alive[v.level].add(v.payload)
    for n in range(v.level, u.level, -1):
        for q in alive[n]:
            alive[n - 1].update(g._down[n][q])
    return alive


def enumerate_paths(g: BranchingGraph, u: Vertex, v: Vertex, cap: int = 100_000) -> list[tuple[Vertex, ...]]:
    """Explicitly list the paths from ``u`` to ``v`` as vertex sequences.

    An edge of multiplicity m contributes m copies of each path through it.

    Raises:
        PathOverflow: if more than ``cap`` paths exist.
    """
    u, v = Vertex(*u), Vertex(*v)
    g._check(u)
    g._check(v)
    if v.level < u.level:
        raise ValueError("enumerate_paths needs level(u) <= level(v)")
    alive = _ancestors(g, u, v)
    if u.payload not in alive[u.level]:
        return []
    paths: list[tuple[Vertex, ...]] = []
    stack: list[tuple[Vertex, ...]] = [(u,)]
    while stack:
        path = stack.pop()
        last = path[-1]
        if last.level == v.level:
            paths.append(path)
            if len(paths) > cap:
                raise PathOverflow(f"more than {cap} paths from {u} to {v}")
            continue
        n = last.level
        for q, m in g._up[n][last.payload].items():
            if q in alive[n + 1]:
                nxt = path + (Vertex(n + 1, q),)
                stack.extend([nxt] * m)
    paths.sort(key=lambda p: [g.payload_key(x.payload) for x in p])
    return paths


# -- checks ------------------------------------------------------------------

def _forget_copy(v: Vertex):
    """(n, Vertex(k, Tagged(lam, c))) -> (n, lam)."""
    return Vertex(v.level, v.payload.payload.diagram)


def check_isomorphism_gammaB(pascalized_lambda: BranchingGraph, gamma_B: BranchingGraph, N: int) -> Report:
    """Check that forgetting copy tags maps the pascalized principal graph onto Gamma_B.

    Verifies a level-preserving bijection and equal multiplicities on every
    edge up to level ``N``; the first mismatch is reported, never raised.
    """
    claim = "P(Lambda) = Gamma_B under the copy-forgetting map"
    rng = f"levels 0..{N}"
    pascalized_lambda.extend_to(N)
    gamma_B.extend_to(N)
    for n in range(N + 1):
        images = [_forget_copy(v) for v in pascalized_lambda.level(n)]
        if len(set(images)) != len(images):
            dup = next(x for x in images if images.count(x) > 1)
            return Report(claim, rng, False, {"level": n, "reason": "map not injective", "vertex": str(dup.payload)})
        if set(images) != set(gamma_B.level(n)):
            diff = set(images) ^ set(gamma_B.level(n))
            x = min(diff, key=lambda w: gamma_B.payload_key(w.payload))
            return Report(claim, rng, False, {"level": n, "reason": "vertex sets differ", "vertex": str(x.payload)})
    for n in range(N):
        mapped = {}
        for u in pascalized_lambda.level(n):
            for v, m in pascalized_lambda.up(u):
                mapped[(_forget_copy(u).payload, _forget_copy(v).payload)] = m
        target = {(u.payload, v.payload): m for u in gamma_B.level(n) for v, m in gamma_B.up(u)}
        for pair in sorted(set(mapped) | set(target), key=lambda t: (diagram_key(t[0]), diagram_key(t[1]))):
            a, b = mapped.get(pair, 0), target.get(pair, 0)
            if a != b:
                return Report(claim, rng, False, {
                    "level": n,
                    "reason": "edge multiplicity mismatch",
                    "edge": [str(pair[0]), str(pair[1])],
                    "pascalized": a,
                    "gamma_B": b,
                })
    return Report(claim, rng, True, details={"levels_checked": N + 1})


@dataclass
class LevelMeasure:
    """A probability distribution on one level, with exact rational masses."""

    level: int
    masses: dict

    def __post_init__(self):
        self.masses = {p: Fraction(m) for p, m in self.masses.items()}
        if any(m < 0 for m in self.masses.values()):
            raise ValueError("masses must be nonnegative")
        if sum(self.masses.values()) != 1:
            raise ValueError(f"masses on level {self.level} sum to {sum(self.masses.values())}, not 1")

    def __getitem__(self, payload) -> Fraction:
        return self.masses.get(payload, Fraction(0))


def coherence_check(g: BranchingGraph, measures: Sequence[LevelMeasure]) -> Report:
    """Exact check that consecutive level measures come from one central measure.

    For every vertex gamma on level n < N:
    ``M_n(gamma) = sum m(gamma, eta) * dim(gamma) * M_{n+1}(eta) / dim(eta)``.
    """
    N = len(measures) - 1
    claim = "level measures are coherent"
    rng = f"levels 0..{N}"
    for i, mu in enumerate(measures):
        if mu.level != i:
            raise ValueError(f"measure {i} is for level {mu.level}")
        stray = [p for p in mu.masses if mu.masses[p] and p not in g.payloads(i)]
        if stray:
            return Report(claim, rng, False, {"level": i, "reason": "mass outside the level", "vertex": str(stray[0])})
    for n in range(N):
        dims_n, dims_next = g.dims(n), g.dims(n + 1)
        for p in g.payloads(n):
            rhs = sum(
                (Fraction(m * dims_n[p] * measures[n + 1][q], dims_next[q]) for q, m in g._up[n][p].items()),
                Fraction(0),
            )
            if rhs != measures[n][p]:
                return Report(claim, rng, False, {"level": n, "vertex": str(p), "lhs": measures[n][p], "rhs": rhs})
    return Report(claim, rng, True)


def plancherel_measures(N: int) -> list[LevelMeasure]:
    """Plancherel masses dim(lam)^2 / n! on the Young graph, levels 0..N."""
    from math import factorial

    from .young import dim_young

    return [
        LevelMeasure(n, {lam: Fraction(dim_young(lam) ** 2, factorial(n)) for lam in enumerate_level(n)})
        for n in range(N + 1)
    ]


def ratio_sequence(g: BranchingGraph, anchor: Vertex, path: Sequence[Vertex]) -> list[Fraction]:
    """Exact ratios dim(anchor, path[n]) / dim(path[n]) for n >= level(anchor).

    Raises:
        ValueError: if ``path`` does not start at the root or uses a non-edge.
    """
    anchor = Vertex(*anchor)
    path = [Vertex(*v) for v in path]
    if not path or path[0] != g.root:
        raise ValueError("path must start at the root")
    for i, (a, b) in enumerate(zip(path, path[1:])):
        if b not in g or b.level != a.level + 1 or g.mult(a, b) == 0:
            raise ValueError(f"invalid path step {i}: {a} -> {b}")
    return [Fraction(dim_between(g, anchor, v), g.dim(v)) for v in path if v.level >= anchor.level]


def root_of(kind: str):
    """Payload of the root vertex of a named graph."""
    return {
        "young": EMPTY,
        "gamma_B": EMPTY,
        "theta": (EMPTY, EMPTY),
        "lambda_principal": Tagged(EMPTY, 0),
        "walled": (EMPTY, EMPTY),
        "doubled_young": Tagged(EMPTY, 0),
    }[kind]
