"""Young diagrams, box moves, Young-graph dimensions and cycle types."""

from __future__ import annotations

from functools import lru_cache
from math import factorial, prod
from typing import Iterable, Iterator, Sequence


class YoungDiagram(tuple):
    """An integer partition stored as a weakly decreasing tuple of positive parts.

    The empty tuple is the empty diagram. Instances compare like tuples.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(parts)
        for i, p in enumerate(parts):
            if not isinstance(p, int) or isinstance(p, bool):
                raise ValueError(f"parts must be integers, got {p!r}")
            if p < 1:
                raise ValueError(f"parts must be positive, got {parts}")
            if i and p > parts[i - 1]:
                raise ValueError(f"parts must be weakly decreasing, got {parts}")
        return tuple.__new__(cls, parts)

    @classmethod
    def _trusted(cls, parts: Iterable[int]) -> YoungDiagram:
        return tuple.__new__(cls, parts)

    @property
    def parts(self) -> tuple[int, ...]:
        return tuple(self)

    @property
    def size(self) -> int:
        return sum(self)

    def __repr__(self) -> str:
        return f"YoungDiagram({list(self)})"

    def __str__(self) -> str:
        if not self:
            return "∅"
        return "(" + ",".join(map(str, self)) + ")"


EMPTY = YoungDiagram()

CycleType = YoungDiagram


def make_diagram(parts: Sequence[int]) -> YoungDiagram:
    """Validate ``parts`` and return the corresponding diagram.

    Raises:
        ValueError: if the parts are not positive and weakly decreasing.
    """
    return YoungDiagram(parts)


def successors(lam: YoungDiagram) -> list[YoungDiagram]:
    """All diagrams obtained by adding one box, in lexicographically decreasing order."""
    out = []
    n = len(lam)
    for i in range(n + 1):
        row = lam[i] if i < n else 0
        if i == 0 or lam[i - 1] > row:
            if i < n:
                out.append(YoungDiagram._trusted(lam[:i] + (row + 1,) + lam[i + 1:]))
            else:
                out.append(YoungDiagram._trusted(lam + (1,)))
    return out


def predecessors(lam: YoungDiagram) -> list[YoungDiagram]:
    """All diagrams obtained by removing one box, ordered by the row of the removed box."""
    out = []
    n = len(lam)
    for i in range(n):
        nxt = lam[i + 1] if i + 1 < n else 0
        if lam[i] > nxt:
            if lam[i] == 1:
                out.append(YoungDiagram._trusted(lam[:i]))
            else:
                out.append(YoungDiagram._trusted(lam[:i] + (lam[i] - 1,) + lam[i + 1:]))
    return out


def hook_lengths(lam: YoungDiagram) -> list[int]:
    if not lam:
        return []
    conj = [sum(1 for p in lam if p > j) for j in range(lam[0])]
    return [lam[i] - j + conj[j] - i - 1 for i in range(len(lam)) for j in range(lam[i])]


def dim_young_hook(lam: YoungDiagram) -> int:
    """Number of standard tableaux of shape ``lam`` by the hook length formula."""
    return factorial(sum(lam)) // prod(hook_lengths(lam))


@lru_cache(maxsize=None)
def dim_young_dp(lam: YoungDiagram) -> int:
    """Number of root-to-``lam`` paths in the Young graph, by summing over predecessors."""
    if not lam:
        return 1
    return sum(dim_young_dp(mu) for mu in predecessors(lam))


def dim_young(lam: YoungDiagram, method: str = "hook") -> int:
    """Dimension of ``lam`` in the Young graph.

    ``method`` is ``"hook"`` (hook length formula) or ``"dp"`` (path-count recursion).
    """
    if method == "hook":
        return dim_young_hook(lam)
    if method == "dp":
        return dim_young_dp(YoungDiagram._trusted(lam))
    raise ValueError(f"unknown method {method!r}")


def _partitions(n: int, max_part: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _level(n: int) -> tuple[YoungDiagram, ...]:
    return tuple(YoungDiagram._trusted(p) for p in _partitions(n, n))


def enumerate_level(n: int) -> list[YoungDiagram]:
    """All partitions of ``n`` in lexicographically decreasing order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return list(_level(n))


def diagrams_up_to(n: int) -> list[YoungDiagram]:
    """All diagrams with at most ``n`` boxes, by size and then decreasingly."""
    return [lam for k in range(n + 1) for lam in _level(k)]


def diagram_key(lam: YoungDiagram) -> tuple:
    """Sort key: fewer boxes first, then lexicographically decreasing parts."""
    return (sum(lam), tuple(-p for p in lam))


def validate_permutation(sigma: Sequence[int]) -> tuple[int, ...]:
    sigma = tuple(sigma)
    if sorted(sigma) != list(range(1, len(sigma) + 1)):
        raise ValueError(f"not a permutation of 1..{len(sigma)} in one-line form: {sigma}")
    return sigma


def cycles(sigma: Sequence[int]) -> list[tuple[int, ...]]:
    """Cycle decomposition of a one-line permutation, fixed points included."""
    sigma = validate_permutation(sigma)
    seen = [False] * (len(sigma) + 1)
    out = []
    for start in range(1, len(sigma) + 1):
        if seen[start]:
            continue
        cyc = []
        i = start
        while not seen[i]:
            seen[i] = True
            cyc.append(i)
            i = sigma[i - 1]
        out.append(tuple(cyc))
    return out


def cycle_type(sigma: Sequence[int]) -> CycleType:
    """Sorted cycle lengths of ``sigma`` (one-line form on 1..k), fixed points as 1s."""
    return YoungDiagram._trusted(sorted((len(c) for c in cycles(sigma)), reverse=True))
