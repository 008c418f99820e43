"""Integer arrays factoring graph dimensions, and their exact verification sweeps.

``M(n, l)`` divides Gamma_B dimensions by Young dimensions; ``K(n, k, l)``
does the same for the pascalized coupled Young graph. Ratios are compared
by cross-multiplication only.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial
from typing import Callable, Iterator

from .report import Report
from .young import YoungDiagram, dim_young, enumerate_level


def double_factorial(n: int) -> int:
    """n!! with the convention (-1)!! = 0!! = 1."""
    if n < -1:
        raise ValueError("double factorial undefined below -1")
    out = 1
    while n > 1:
        out *= n
        n -= 2
    return out


# -- M(n, l) -----------------------------------------------------------------

class MArray:
    """Triangular table ``M(n, l)``, 0 <= l <= n <= N; other indices read as 0."""

    def __init__(self, rows: list[list[int]]):
        self.rows = rows
        self.N = len(rows) - 1

    def __call__(self, n: int, l: int) -> int:
        if n < 0 or l < 0 or l > n or n > self.N:
            if n > self.N:
                raise IndexError(f"M computed only up to n={self.N}")
            return 0
        return self.rows[n][l]

    def __getitem__(self, idx: tuple[int, int]) -> int:
        return self(*idx)


def m_array(N: int) -> MArray:
    """M(n, l) by the lazy-walk recursion.

    M(n, n) = 1, M(n, 0) = M(n-1, 0) + M(n-1, 1) and
    M(n, l) = M(n-1, l-1) + M(n-1, l) + (l+1) M(n-1, l+1).
    """
    if N < 0:
        raise ValueError("N must be nonnegative")
    rows = [[1]]
    for n in range(1, N + 1):
        prev = rows[-1] + [0, 0]
        row = [prev[0] + prev[1]]
        for l in range(1, n):
            row.append(prev[l - 1] + prev[l] + (l + 1) * prev[l + 1])
        row.append(1)
        rows.append(row)
    return MArray(rows)


def _first_failure(claim: str, rng: str, checks: Iterator[tuple[bool, dict]], **details) -> Report:
    count = 0
    for ok, witness in checks:
        count += 1
        if not ok:
            return Report(claim, rng, False, witness, {"checked": count, **details})
    return Report(claim, rng, True, None, {"checked": count, **details})


def m_properties_report(N: int, M: MArray | None = None) -> Report:
    """Exact sweep of the M-array identities and monotonicity claims up to ``N``."""
    if N < 2:
        raise ValueError("N must be at least 2")
    M = M if M is not None and M.N >= N else m_array(N)

    def involution_rec():
        yield (M(0, 0) == 1 and M(1, 0) == 1), {"n": 1}
        for n in range(2, N + 1):
            yield M(n, 0) == M(n - 1, 0) + (n - 1) * M(n - 2, 0), {"n": n}

    def binomial():
        for n in range(N + 1):
            for l in range(1, N - n + 1):
                yield M(n + l, l) == comb(n + l, l) * M(n, 0), {"n": n, "l": l}

    # ratio r_n = M(n-1,0)/M(n,0); compare by cross-multiplication.
    def decreasing():
        for n in range(2, N + 1):
            yield M(n - 1, 0) * M(n - 1, 0) <= M(n - 2, 0) * M(n, 0), {"n": n}

    def n_times_increasing():
        for n in range(2, N + 1):
            yield (n - 1) * M(n - 2, 0) * M(n, 0) <= n * M(n - 1, 0) * M(n - 1, 0), {"n": n}

    def max_ratio():
        for n in range(1, N + 1):
            for l in range(1, n):
                ok = M(n - 1, l) * M(n, 0) <= M(n - 1, 0) * M(n, l)
                yield ok, {"n": n, "l": l}

    witness = next((n for n in range(1, N + 1) if 10 * M(n - 1, 0) < M(n, 0)), None)
    rng = f"n <= {N}"
    children = [
        _first_failure("M(n,0) = M(n-1,0) + (n-1) M(n-2,0)", rng, involution_rec()),
        _first_failure("M(n+l,l) = C(n+l,l) M(n,0)", f"n + l <= {N}", binomial()),
        _first_failure("M(n-1,0)/M(n,0) weakly decreasing", rng, decreasing()),
        _first_failure("n M(n-1,0)/M(n,0) weakly increasing", rng, n_times_increasing()),
        _first_failure("max_{l<n} M(n-1,l)/M(n,l) = M(n-1,0)/M(n,0)", rng, max_ratio()),
    ]
    return Report.combine(
        "M-array identities and monotonicity", rng, children,
        first_n_with_ratio_below_one_tenth=witness,
    )


# -- K(n, k, l) --------------------------------------------------------------

def coupled_coefficient(k: int, l: int) -> int:
    """(2k+l)! / (2^k k! l!), the Theta dimension factor of a pair with sizes (k, l)."""
    if k < 0 or l < 0:
        return 0
    return factorial(2 * k + l) // (2 ** k * factorial(k) * factorial(l))


KLevel = dict  # (k, l) -> K(n, k, l) for one n


def _k_next(prev: KLevel, n: int) -> KLevel:
    def P(k, l):
        return prev.get((k, l), 0)

    level: KLevel = {}
    for k in range(n // 2 + 1):
        for l in range((n - 2 * k) % 2, n - 2 * k + 1, 2):
            if 2 * k + l == n:
                level[(k, l)] = coupled_coefficient(k, l)
            else:
                level[(k, l)] = (
                    P(k, l - 1)
                    + (l + 1) * (P(k, l + 1) + P(k - 1, l + 1))
                    + (k + 1) * P(k + 1, l - 1)
                )
    return level


def k_levels(N: int) -> Iterator[KLevel]:
    """Yield the K levels n = 0..N one at a time as dicts (k, l) -> value."""
    level: KLevel = {(0, 0): 1}
    yield level
    for n in range(1, N + 1):
        level = _k_next(level, n)
        yield level


class KArray:
    """Table ``K(n, k, l)`` for 2k + l <= n <= N with matching parity; else 0."""

    def __init__(self, levels: list[KLevel]):
        self.levels = levels
        self.N = len(levels) - 1

    def __call__(self, n: int, k: int, l: int) -> int:
        if n > self.N:
            raise IndexError(f"K computed only up to n={self.N}")
        if n < 0:
            return 0
        return self.levels[n].get((k, l), 0)

    def __getitem__(self, idx: tuple[int, int, int]) -> int:
        return self(*idx)

    def entries(self, n: int) -> list[tuple[int, int, int]]:
        return sorted((k, l, v) for (k, l), v in self.levels[n].items())


def k_array(N: int) -> KArray:
    if N < 0:
        raise ValueError("N must be nonnegative")
    return KArray(list(k_levels(N)))


def conjecture_check(
    N: int,
    start: int = 3,
    on_level: Callable[[int], None] | None = None,
) -> Report:
    """Sweep the K-ratio inequalities for 3 <= n <= N.

    For 2k + l < n - 2 with matching parity, checks
    ``K(n-2,k,l)/K(n,k,l) >= K(n-2,k+1,l)/K(n,k+1,l)`` and
    ``K(n-2,k,l)/K(n,k,l) >= K(n-2,k,l+2)/K(n,k,l+2)``, and that the maximum
    of ``K(n-2,k,l)/K(n,k,l)`` over 2k + l < n sits at (0, n mod 2).

    Only three K levels are held at once. Levels below ``start`` are
    computed but not checked (resume support); ``on_level(n)`` is called
    after each level as long as no violation has been seen.
    """
    if N < 3:
        raise ValueError("N must be at least 3")
    rng = f"{max(3, start)} <= n <= {N}"
    window: list[KLevel] = []
    pair_checks = max_checks = 0
    pair_fail = max_fail = None
    for n, level in enumerate(k_levels(N)):
        window.append(level)
        if len(window) > 3:
            window.pop(0)
        if n < 3 or n < start:
            continue
        lo, hi = window[0], window[2]
        d = n % 2
        best = (lo[(0, d)], hi[(0, d)])
        for (k, l), a in lo.items():
            b = hi[(k, l)]
            if 2 * k + l < n - 2:
                for other in ((k + 1, l), (k, l + 2)):
                    pair_checks += 1
                    c, e = lo[other], hi[other]
                    if a * e < c * b and pair_fail is None:
                        pair_fail = {"n": n, "k": k, "l": l, "against": list(other),
                                     "lhs": Fraction(a, b), "rhs": Fraction(c, e)}
            max_checks += 1
            if a * best[1] > best[0] * b and max_fail is None:
                max_fail = {"n": n, "k": k, "l": l, "ratio": Fraction(a, b), "at_(0,delta)": Fraction(*best)}
        if on_level is not None and pair_fail is None and max_fail is None:
            on_level(n)
    children = [
        Report("K(n-2,k,l)/K(n,k,l) >= max(K(n-2,k+1,l)/K(n,k+1,l), K(n-2,k,l+2)/K(n,k,l+2))",
               rng, pair_fail is None, pair_fail, {"checked": pair_checks}),
        Report("max_{2k+l<n} K(n-2,k,l)/K(n,k,l) = K(n-2,0,delta(n))/K(n,0,delta(n))",
               rng, max_fail is None, max_fail, {"checked": max_checks}),
    ]
    return Report.combine("K-ratio conjecture", rng, children)


# -- hyperoctahedral dimensions --------------------------------------------

def hyperoct_sequence(N: int) -> list[int]:
    """a_0..a_N with a_0 = 1 and a_n = sum_j C(2n-1, 2j-1) a_{n-j}."""
    a = [1]
    for n in range(1, N + 1):
        a.append(sum(comb(2 * n - 1, 2 * j - 1) * a[n - j] for j in range(1, n + 1)))
    return a


def hyperoct_dims(N: int, K: KArray | None = None) -> tuple[list[int], Report]:
    """Hyperoctahedral dimensions plus their bridge to the K array and the ratio bound."""
    if N < 0:
        raise ValueError("N must be nonnegative")
    a = hyperoct_sequence(N)
    K = K if K is not None and K.N >= 2 * N else k_array(2 * N)
    rng = f"n <= {N}"

    def k_even():
        for n in range(N + 1):
            yield K(2 * n, 0, 0) == a[n], {"n": n, "K": K(2 * n, 0, 0), "a": a[n]}

    def k_odd():
        for n in range(1, N + 1):
            yield K(2 * n - 1, 0, 1) == K(2 * n, 0, 0), {"n": n}

    def bound():
        for n in range(1, N + 1):
            yield (2 * n - 1) * a[n - 1] <= a[n], {"n": n, "ratio": Fraction(a[n - 1], a[n])}

    def increasing():
        for n in range(2, N + 1):
            yield a[n] > a[n - 1], {"n": n}

    children = [
        _first_failure("K(2n,0,0) = a_n", rng, k_even()),
        _first_failure("K(2n-1,0,1) = K(2n,0,0)", rng, k_odd()),
        _first_failure("a_{n-1}/a_n <= 1/(2n-1)", rng, bound()),
        _first_failure("a_n strictly increasing for n >= 1", rng, increasing()),
    ]
    return a, Report.combine("hyperoctahedral dimensions", rng, children)


# -- closed forms ------------------------------------------------------------

def coupled_dim_closed_form(lam: YoungDiagram, mu: YoungDiagram) -> int:
    """Dimension of (lam, mu) in the coupled Young graph, by two closed forms.

    Raises:
        ArithmeticError: if the factorial and double-factorial forms disagree.
    """
    k, l = sum(lam), sum(mu)
    n = 2 * k + l
    young = dim_young(lam) * dim_young(mu)
    first = coupled_coefficient(k, l) * young
    second = comb(n, l) * double_factorial(n - l - 1) * young
    if first != second:
        raise ArithmeticError(f"closed forms disagree at {lam}, {mu}: {first} != {second}")
    return first


def dim_A_n(n: int) -> int:
    """sum over l = n mod 2 of (n!)^2 / (2^(n-l) l! ((n-l)/2)!)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    f = factorial(n) ** 2
    return sum(f // (2 ** (n - l) * factorial(l) * factorial((n - l) // 2)) for l in range(n % 2, n + 1, 2))


def theta_dim_square_sum(n: int) -> int:
    """sum of dim_Theta(lam, mu)^2 over level n, from the closed form."""
    return sum(
        coupled_dim_closed_form(lam, mu) ** 2
        for k in range(n // 2 + 1)
        for lam in enumerate_level(k)
        for mu in enumerate_level(n - 2 * k)
    )
