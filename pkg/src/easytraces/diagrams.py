"""Set-partition diagrams and diagram algebras with a symbolic loop parameter.

Points are encoded as integers: upper point ``i`` is ``i`` and lower point
``i'`` is ``-i``. A diagram with ``k`` upper and ``l`` lower points is read
as a morphism from its lower row (``l`` points) to its upper row (``k``
points); ``compose(p, q)`` stacks ``q`` on top of ``p`` and corresponds to
the algebra product ``e_p * e_q``.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence, Union

MAX_ENUMERATION_K = 6


def _point_key(x: int) -> tuple[int, int]:
    return (0, x) if x > 0 else (1, -x)


@dataclass(frozen=True)
class SetPartitionDiagram:
    """A set partition of ``{1..k} u {1'..l'}`` in canonical block order.

    Use :func:`diagram` to build one from arbitrary block lists.
    """

    k: int
    l: int
    blocks: tuple[tuple[int, ...], ...]

    def __repr__(self) -> str:
        return f"SetPartitionDiagram({self.k}, {self.l}, {[list(b) for b in self.blocks]})"

    def __str__(self) -> str:
        def fmt(x):
            return str(x) if x > 0 else f"{-x}'"

        return "{" + ", ".join("{" + ",".join(fmt(x) for x in b) + "}" for b in self.blocks) + "}"

    def sort_key(self):
        return (self.k, self.l, tuple(tuple(_point_key(x) for x in b) for b in self.blocks))

    def __lt__(self, other: SetPartitionDiagram) -> bool:
        return self.sort_key() < other.sort_key()

    def block_sizes(self) -> list[int]:
        return [len(b) for b in self.blocks]

    def to_json(self) -> list[list[int]]:
        return [list(b) for b in self.blocks]


def _canonical(k: int, l: int, blocks: Iterable[Iterable[int]]) -> SetPartitionDiagram:
    bs = [tuple(sorted(b, key=_point_key)) for b in blocks]
    bs.sort(key=lambda b: _point_key(b[0]))
    return SetPartitionDiagram(k, l, tuple(bs))


def diagram(k: int, l: int, blocks: Iterable[Iterable[int]]) -> SetPartitionDiagram:
    """Validate and canonicalize a diagram with ``k`` upper and ``l`` lower points.

    Raises:
        ValueError: if the blocks are empty, overlap, or miss/invent points.
    """
    if k < 0 or l < 0:
        raise ValueError("point counts must be nonnegative")
    blocks = [tuple(b) for b in blocks]
    if any(not b for b in blocks):
        raise ValueError("blocks must be nonempty")
    seen = [x for b in blocks for x in b]
    expected = set(range(1, k + 1)) | {-i for i in range(1, l + 1)}
    if len(seen) != len(set(seen)):
        raise ValueError("blocks overlap")
    if set(seen) != expected:
        raise ValueError(f"blocks must cover exactly the points 1..{k} and -1..-{l}")
    return _canonical(k, l, blocks)


def from_json(blocks: Sequence[Sequence[int]], k: int | None = None, l: int | None = None) -> SetPartitionDiagram:
    """Parse a list of blocks; point counts default to the largest indices present."""
    pts = [x for b in blocks for x in b]
    if any(not isinstance(x, int) or isinstance(x, bool) or x == 0 for x in pts):
        raise ValueError("points must be nonzero integers")
    if k is None:
        k = max((x for x in pts if x > 0), default=0)
    if l is None:
        l = max((-x for x in pts if x < 0), default=0)
    return diagram(k, l, blocks)


def identity(k: int) -> SetPartitionDiagram:
    return SetPartitionDiagram(k, k, tuple((i, -i) for i in range(1, k + 1)))


def crossing(k: int, i: int) -> SetPartitionDiagram:
    """The simple crossing on points i, i+1 with through-strings elsewhere."""
    if not 1 <= i < k:
        raise ValueError(f"crossing position {i} out of range for k={k}")
    blocks = [(j, -j) for j in range(1, k + 1) if j not in (i, i + 1)]
    blocks += [(i, -(i + 1)), (i + 1, -i)]
    return _canonical(k, k, blocks)


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra


def compose(p: SetPartitionDiagram, q: SetPartitionDiagram) -> tuple[SetPartitionDiagram, int]:
    """Stack ``q`` on top of ``p`` and return the resulting diagram and erased loop count.

    ``q``'s lower row is glued to ``p``'s upper row; the result keeps ``q``'s
    upper row and ``p``'s lower row.

    Raises:
        ValueError: if ``q.l != p.k``.
    """
    if q.l != p.k:
        raise ValueError(f"size mismatch: q has {q.l} lower points, p has {p.k} upper points")
    top, mid, bot = q.k, p.k, p.l
    # ids: q's upper row [0, top), shared middle row [top, top+mid), p's lower row after.
    uf = _UnionFind(top + mid + bot)

    def q_id(x):
        return x - 1 if x > 0 else top - x - 1

    def p_id(x):
        return top + x - 1 if x > 0 else top + mid - x - 1

    for b in q.blocks:
        first = q_id(b[0])
        for x in b[1:]:
            uf.union(first, q_id(x))
    for b in p.blocks:
        first = p_id(b[0])
        for x in b[1:]:
            uf.union(first, p_id(x))
    groups: dict[int, list[int]] = {}
    for i in range(top):
        groups.setdefault(uf.find(i), []).append(i + 1)
    for j in range(bot):
        groups.setdefault(uf.find(top + mid + j), []).append(-(j + 1))
    middle_roots = {uf.find(top + j) for j in range(mid)}
    loops = len(middle_roots - set(groups))
    return _canonical(top, bot, groups.values()), loops


def involution(p: SetPartitionDiagram) -> SetPartitionDiagram:
    """Reflect ``p`` in a horizontal line, swapping upper and lower points."""
    return _canonical(p.l, p.k, [[-x for x in b] for b in p.blocks])


def tensor(p: SetPartitionDiagram, q: SetPartitionDiagram) -> SetPartitionDiagram:
    """Place ``q`` to the right of ``p``."""
    def shift(x):
        return x + p.k if x > 0 else x - p.l

    return _canonical(p.k + q.k, p.l + q.l, list(p.blocks) + [[shift(x) for x in b] for b in q.blocks])


# -- categories --------------------------------------------------------------

class Category(str, enum.Enum):
    S = "S"
    O = "O"
    H = "H"
    B = "B"
    S_PRIME = "S'"
    B_PRIME = "B'"

    @classmethod
    def parse(cls, tag: str) -> Category:
        aliases = {"Sp": "S'", "Bp": "B'", "S_prime": "S'", "B_prime": "B'"}
        try:
            return cls(aliases.get(tag, tag))
        except ValueError:
            raise ValueError(f"unknown category {tag!r}; expected one of {[c.value for c in cls]}") from None


def category_contains(c: Category | str, p: SetPartitionDiagram) -> bool:
    """Membership predicate of the six categories containing the simple crossing."""
    c = Category.parse(c) if isinstance(c, str) and not isinstance(c, Category) else c
    sizes = p.block_sizes()
    if c is Category.S:
        return True
    if c is Category.O:
        return all(s == 2 for s in sizes)
    if c is Category.H:
        return all(s % 2 == 0 for s in sizes)
    if c is Category.B:
        return all(s <= 2 for s in sizes)
    if c is Category.S_PRIME:
        return sum(1 for s in sizes if s % 2) % 2 == 0
    if c is Category.B_PRIME:
        return all(s <= 2 for s in sizes) and sizes.count(1) % 2 == 0
    raise ValueError(f"unknown category {c!r}")


def _set_partitions(points: Sequence[int], max_block: int) -> Iterator[list[list[int]]]:
    blocks: list[list[int]] = []

    def rec(i):
        if i == len(points):
            yield [list(b) for b in blocks]
            return
        x = points[i]
        for b in blocks:
            if len(b) < max_block:
                b.append(x)
                yield from rec(i + 1)
                b.pop()
        blocks.append([x])
        yield from rec(i + 1)
        blocks.pop()

    yield from rec(0)


def enumerate_category(c: Category | str, k: int) -> list[SetPartitionDiagram]:
    """All diagrams in ``c(k, k)`` in canonical order.

    Raises:
        ValueError: for k > 6 (Bell(2k) partitions would have to be listed).
    """
    c = Category.parse(c) if not isinstance(c, Category) else c
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k > MAX_ENUMERATION_K:
        raise ValueError(f"refusing to enumerate Part({k},{k}); supported up to k={MAX_ENUMERATION_K}")
    return list(_enumerate_category(c, k))


@lru_cache(maxsize=32)
def _enumerate_category(c: Category, k: int) -> tuple[SetPartitionDiagram, ...]:
    points = list(range(1, k + 1)) + [-i for i in range(1, k + 1)]
    max_block = 2 if c in (Category.O, Category.B, Category.B_PRIME) else len(points) or 1
    out = []
    for blocks in _set_partitions(points, max_block):
        d = _canonical(k, k, blocks)
        if category_contains(c, d):
            out.append(d)
    out.sort(key=SetPartitionDiagram.sort_key)
    return tuple(out)


def random_diagram(k: int, l: int, rng: random.Random, category: Category | str = Category.S) -> SetPartitionDiagram:
    """A random diagram of ``category`` with ``k`` upper and ``l`` lower points (by rejection)."""
    c = Category.parse(category) if not isinstance(category, Category) else category
    points = list(range(1, k + 1)) + [-i for i in range(1, l + 1)]
    if c is Category.O and len(points) % 2:
        raise ValueError("pair partitions need an even number of points")
    while True:
        rng.shuffle(points)
        blocks: list[list[int]] = []
        if c in (Category.O, Category.B, Category.B_PRIME):
            rest = list(points)
            while rest:
                x = rest.pop()
                if rest and (c is Category.O or rng.random() < 0.7):
                    blocks.append([x, rest.pop()])
                else:
                    blocks.append([x])
        else:
            for x in points:
                j = rng.randrange(len(blocks) + 1)
                if j == len(blocks):
                    blocks.append([x])
                else:
                    blocks[j].append(x)
        d = _canonical(k, l, blocks)
        if category_contains(c, d):
            return d


# -- invertibility and the quotient onto S_k ---------------------------------

def is_invertible(p: SetPartitionDiagram) -> bool:
    """True iff every block has exactly one upper and one lower point."""
    return p.k == p.l and all(len(b) == 2 and b[0] > 0 > b[1] for b in p.blocks)


def to_permutation(p: SetPartitionDiagram) -> tuple[int, ...]:
    """One-line permutation sending upper point i to lower point sigma(i).

    Raises:
        ValueError: if ``p`` is not invertible.
    """
    if not is_invertible(p):
        raise ValueError(f"diagram {p} is not invertible")
    sigma = [0] * p.k
    for up, low in p.blocks:
        sigma[up - 1] = -low
    return tuple(sigma)


def from_permutation(sigma: Sequence[int]) -> SetPartitionDiagram:
    return _canonical(len(sigma), len(sigma), [(i + 1, -s) for i, s in enumerate(sigma)])


def perm_mul(sigma: Sequence[int], tau: Sequence[int]) -> tuple[int, ...]:
    """Composition ``sigma o tau``: apply ``tau`` first."""
    return tuple(sigma[t - 1] for t in tau)


# -- polynomial coefficients in delta ------------------------------------------

Scalar = Union[int, Fraction]


class DeltaPolynomial:
    """Polynomial in the loop parameter with exact rational coefficients.

    ``coeffs`` lists coefficients by ascending power, without trailing zeros.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar | str] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def constant(cls, c: Scalar) -> DeltaPolynomial:
        return cls([c])

    @classmethod
    def delta_power(cls, n: int) -> DeltaPolynomial:
        return cls([0] * n + [1])

    @staticmethod
    def lift(x) -> DeltaPolynomial:
        return x if isinstance(x, DeltaPolynomial) else DeltaPolynomial([x])

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = DeltaPolynomial([other])
        return isinstance(other, DeltaPolynomial) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other) -> DeltaPolynomial:
        other = DeltaPolynomial.lift(other)
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return DeltaPolynomial([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])

    __radd__ = __add__

    def __neg__(self) -> DeltaPolynomial:
        return DeltaPolynomial([-c for c in self.coeffs])

    def __sub__(self, other) -> DeltaPolynomial:
        return self + (-DeltaPolynomial.lift(other))

    def __mul__(self, other) -> DeltaPolynomial:
        if not isinstance(other, DeltaPolynomial):
            if isinstance(other, (int, Fraction)):
                return DeltaPolynomial([c * other for c in self.coeffs])
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return DeltaPolynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return DeltaPolynomial(out)

    __rmul__ = __mul__

    def shift(self, n: int) -> DeltaPolynomial:
        """Multiply by delta**n."""
        return DeltaPolynomial([0] * n + list(self.coeffs)) if self.coeffs else self

    def __call__(self, delta: Scalar) -> Fraction:
        out = Fraction(0)
        for c in reversed(self.coeffs):
            out = out * delta + c
        return out

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    def __repr__(self) -> str:
        return f"DeltaPolynomial({[str(c) for c in self.coeffs]})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mono = "" if i == 0 else ("δ" if i == 1 else f"δ^{i}")
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}{mono}" if abs(c).denominator == 1 else f"({abs(c)}){mono}"
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


# -- algebra elements ----------------------------------------------------------

class AlgebraElement:
    """Finite linear combination of (k, k) diagrams with DeltaPolynomial coefficients."""

    __slots__ = ("k", "terms")

    def __init__(self, k: int, terms: Mapping[SetPartitionDiagram, DeltaPolynomial | Scalar] | None = None):
        self.k = k
        clean: dict[SetPartitionDiagram, DeltaPolynomial] = {}
        for d, c in (terms or {}).items():
            if d.k != k or d.l != k:
                raise ValueError(f"diagram {d} does not have {k} upper and lower points")
            c = DeltaPolynomial.lift(c)
            if c:
                clean[d] = clean[d] + c if d in clean else c
        self.terms = {d: c for d, c in clean.items() if c}

    @classmethod
    def basis(cls, p: SetPartitionDiagram) -> AlgebraElement:
        if p.k != p.l:
            raise ValueError("algebra elements need diagrams with k upper and k lower points")
        return cls(p.k, {p: DeltaPolynomial([1])})

    @classmethod
    def unit(cls, k: int) -> AlgebraElement:
        return cls.basis(identity(k))

    def __eq__(self, other) -> bool:
        return isinstance(other, AlgebraElement) and self.k == other.k and self.terms == other.terms

    def __hash__(self):
        return hash((self.k, frozenset(self.terms.items())))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def _same_k(self, other: AlgebraElement) -> None:
        if self.k != other.k:
            raise ValueError(f"size mismatch: {self.k} vs {other.k}")

    def __add__(self, other: AlgebraElement) -> AlgebraElement:
        self._same_k(other)
        out = dict(self.terms)
        for d, c in other.terms.items():
            out[d] = out[d] + c if d in out else c
        return AlgebraElement(self.k, out)

    def __neg__(self) -> AlgebraElement:
        return AlgebraElement(self.k, {d: -c for d, c in self.terms.items()})

    def __sub__(self, other: AlgebraElement) -> AlgebraElement:
        return self + (-other)

    def scale(self, c) -> AlgebraElement:
        c = DeltaPolynomial.lift(c)
        return AlgebraElement(self.k, {d: v * c for d, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return algebra_mul(self, other)
        if isinstance(other, (int, Fraction, DeltaPolynomial)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, DeltaPolynomial)):
            return self.scale(other)
        return NotImplemented

    def items(self) -> list[tuple[SetPartitionDiagram, DeltaPolynomial]]:
        return sorted(self.terms.items(), key=lambda t: t[0].sort_key())

    def evaluate(self, delta: Scalar) -> dict[SetPartitionDiagram, Fraction]:
        return {d: c(delta) for d, c in self.items() if c(delta)}

    def to_json(self) -> list[dict]:
        return [{"diagram": d.to_json(), "coeffs": c.to_json()} for d, c in self.items()]

    @classmethod
    def from_json(cls, data: Sequence[Mapping]) -> AlgebraElement:
        """Parse ``[{"diagram": blocks, "coeffs": ["p/q", ...]}, ...]``."""
        if not isinstance(data, list) or not data:
            raise ValueError("an algebra element is a nonempty list of {diagram, coeffs} terms")
        terms = []
        for i, item in enumerate(data):
            if not isinstance(item, Mapping) or "diagram" not in item:
                raise ValueError(f"term {i}: expected an object with a 'diagram' key")
            d = from_json(item["diagram"])
            coeffs = item.get("coeffs", ["1"])
            try:
                c = DeltaPolynomial([Fraction(str(x)) for x in coeffs])
            except (ValueError, ZeroDivisionError) as exc:
                raise ValueError(f"term {i}: bad coefficient list {coeffs!r}") from exc
            terms.append((d, c))
        ks = {d.k for d, _ in terms} | {d.l for d, _ in terms}
        if len(ks) != 1:
            raise ValueError(f"all diagrams must have the same number k of upper and lower points, got {sorted(ks)}")
        out = cls(ks.pop())
        for d, c in terms:
            out = out + cls(out.k, {d: c})
        return out

    def __repr__(self) -> str:
        return f"AlgebraElement({self.k}, {{{', '.join(f'{d}: {c}' for d, c in self.items())}}})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"({c})·e{d}" for d, c in self.items())


def algebra_mul(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    """Bilinear product: e_p * e_q = delta**loops * e_{compose(p, q)}."""
    x._same_k(y)
    out: dict[SetPartitionDiagram, DeltaPolynomial] = {}
    for p, a in x.terms.items():
        for q, b in y.terms.items():
            r, loops = compose(p, q)
            c = (a * b).shift(loops)
            out[r] = out[r] + c if r in out else c
    return AlgebraElement(x.k, out)


def involution_element(x: AlgebraElement) -> AlgebraElement:
    return AlgebraElement(x.k, {involution(d): c for d, c in x.terms.items()})


def random_element(
    k: int,
    rng: random.Random,
    category: Category | str = Category.S,
    terms: int = 3,
    max_degree: int = 1,
) -> AlgebraElement:
    """Random element with small integer polynomial coefficients."""
    out = AlgebraElement(k)
    for _ in range(terms):
        d = random_diagram(k, k, rng, category)
        c = DeltaPolynomial([rng.randint(-3, 3) for _ in range(max_degree + 1)])
        out = out + AlgebraElement(k, {d: c})
    return out


# -- group algebra of S_k ------------------------------------------------------

class GroupAlgebraElement:
    """Linear combination of permutations of 1..k with DeltaPolynomial coefficients."""

    __slots__ = ("k", "terms")

    def __init__(self, k: int, terms: Mapping[tuple[int, ...], DeltaPolynomial | Scalar] | None = None):
        self.k = k
        clean: dict[tuple[int, ...], DeltaPolynomial] = {}
        for s, c in (terms or {}).items():
            s = tuple(s)
            if sorted(s) != list(range(1, k + 1)):
                raise ValueError(f"{s} is not a permutation of 1..{k}")
            c = DeltaPolynomial.lift(c)
            clean[s] = clean[s] + c if s in clean else c
        self.terms = {s: c for s, c in clean.items() if c}

    def __eq__(self, other) -> bool:
        return isinstance(other, GroupAlgebraElement) and self.k == other.k and self.terms == other.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __add__(self, other: GroupAlgebraElement) -> GroupAlgebraElement:
        out = dict(self.terms)
        for s, c in other.terms.items():
            out[s] = out[s] + c if s in out else c
        return GroupAlgebraElement(self.k, out)

    def __sub__(self, other: GroupAlgebraElement) -> GroupAlgebraElement:
        return self + GroupAlgebraElement(other.k, {s: -c for s, c in other.terms.items()})

    def __mul__(self, other: GroupAlgebraElement) -> GroupAlgebraElement:
        if self.k != other.k:
            raise ValueError(f"size mismatch: {self.k} vs {other.k}")
        out: dict[tuple[int, ...], DeltaPolynomial] = {}
        for s, a in self.terms.items():
            for t, b in other.terms.items():
                st = perm_mul(s, t)
                out[st] = out[st] + a * b if st in out else a * b
        return GroupAlgebraElement(self.k, out)

    def items(self):
        return sorted(self.terms.items())

    def __repr__(self) -> str:
        return f"GroupAlgebraElement({self.k}, {{{', '.join(f'{s}: {c}' for s, c in self.items())}}})"


def quotient_project(x: AlgebraElement) -> GroupAlgebraElement:
    """Image of ``x`` in C[S_k]: drop non-invertible diagrams, map the rest to permutations."""
    return GroupAlgebraElement(x.k, {to_permutation(d): c for d, c in x.terms.items() if is_invertible(d)})
