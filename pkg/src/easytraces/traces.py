"""Thoma traces on symmetric groups and their lifts to diagram algebras."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .diagrams import AlgebraElement, GroupAlgebraElement, quotient_project
from .report import Report
from .young import cycle_type


class TraceConvention(str, enum.Enum):
    """How a cycle of size s enters the Thoma product.

    PAPER_LITERAL: exponent s - 1 and sign (-1)**(s - 2) on the beta sum.
    CYCLE_LENGTH: exponent s and sign (-1)**(s - 1) (the classical formula).
    """

    PAPER_LITERAL = "paper-literal"
    CYCLE_LENGTH = "cycle-length"

    @classmethod
    def parse(cls, tag: str) -> TraceConvention:
        try:
            return cls(tag.replace("_", "-"))
        except ValueError:
            raise ValueError(f"unknown convention {tag!r}; expected paper-literal or cycle-length") from None


@dataclass(frozen=True)
class ThomaParameter:
    """Finitely supported Thoma parameter with exact rational entries."""

    alpha: tuple[Fraction, ...] = ()
    beta: tuple[Fraction, ...] = ()

    def __post_init__(self):
        alpha = tuple(Fraction(a) for a in self.alpha)
        beta = tuple(Fraction(b) for b in self.beta)
        for name, seq in (("alpha", alpha), ("beta", beta)):
            if any(x <= 0 for x in seq):
                raise ValueError(f"{name} entries must be positive")
            if any(a < b for a, b in zip(seq, seq[1:])):
                raise ValueError(f"{name} must be weakly decreasing")
        if sum(alpha) + sum(beta) > 1:
            raise ValueError("sum(alpha) + sum(beta) must be at most 1")
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "beta", beta)

    @classmethod
    def from_json(cls, data: Mapping) -> ThomaParameter:
        """Parse ``{"alpha": ["p/q", ...], "beta": [...]}``."""
        if not isinstance(data, Mapping):
            raise ValueError("Thoma parameter must be a JSON object with 'alpha' and 'beta'")
        unknown = set(data) - {"alpha", "beta"}
        if unknown:
            raise ValueError(f"unexpected keys {sorted(unknown)}")
        try:
            return cls(tuple(Fraction(str(a)) for a in data.get("alpha", [])),
                       tuple(Fraction(str(b)) for b in data.get("beta", [])))
        except ZeroDivisionError as exc:
            raise ValueError("zero denominator in Thoma parameter") from exc

    def to_json(self) -> dict:
        return {"alpha": [str(a) for a in self.alpha], "beta": [str(b) for b in self.beta]}


def cycle_factor(t: ThomaParameter, size: int, conv: TraceConvention) -> Fraction:
    """Contribution of one cycle of the given size; fixed points give 1."""
    if size == 1:
        return Fraction(1)
    if conv is TraceConvention.PAPER_LITERAL:
        e, sign = size - 1, (-1) ** (size - 2)
    else:
        e, sign = size, (-1) ** (size - 1)
    return sum((a ** e for a in t.alpha), Fraction(0)) + sign * sum((b ** e for b in t.beta), Fraction(0))


def thoma_trace(t: ThomaParameter, sigma: Sequence[int], conv: TraceConvention = TraceConvention.CYCLE_LENGTH) -> Fraction:
    """Value of the Thoma trace on a one-line permutation; depends only on its cycle type."""
    out = Fraction(1)
    for size in cycle_type(sigma):
        if size == 1:
            break
        out *= cycle_factor(t, size, conv)
    return out


def group_algebra_trace(
    t: ThomaParameter,
    conv: TraceConvention,
    x: GroupAlgebraElement,
    delta_value: Fraction | int | None = None,
) -> Fraction:
    """Linear extension of :func:`thoma_trace`, coefficients evaluated at ``delta_value``.

    Raises:
        ValueError: if a coefficient depends on delta and no value is given.
    """
    out = Fraction(0)
    for sigma, c in x.items():
        if delta_value is None:
            if not c.is_constant():
                raise ValueError("coefficients depend on delta; supply delta_value")
            coeff = c(0)
        else:
            coeff = c(Fraction(delta_value))
        out += coeff * thoma_trace(t, sigma, conv)
    return out


def lifted_diagram_trace(
    t: ThomaParameter,
    conv: TraceConvention,
    x: AlgebraElement,
    delta_value: Fraction | int | None = None,
) -> Fraction:
    """Trace on the diagram algebra obtained through the quotient onto C[S_k]."""
    return group_algebra_trace(t, conv, quotient_project(x), delta_value)


def product_thoma_trace(
    t1: ThomaParameter,
    t2: ThomaParameter,
    conv: TraceConvention,
    pair: tuple[Sequence[int], Sequence[int]],
) -> Fraction:
    """Product trace on S_k x S_l."""
    sigma, tau = pair
    return thoma_trace(t1, sigma, conv) * thoma_trace(t2, tau, conv)


def lambda_tower_coefficients(N: int, c1: Fraction | int = 1) -> list[Fraction]:
    """Solve c_0 = 1, n c_{n-1} = (n-1) c_n + 1 for n = 2..N, given c_1.

    The n = 1 equation reads c_0 = 1 and leaves c_1 free; the closed form
    is c_n = 1 + n (c_1 - 1).
    """
    c = [Fraction(1), Fraction(c1)]
    for n in range(2, N + 1):
        c.append((n * c[n - 1] - 1) / (n - 1))
    return c[: N + 1]


def lambda_tower_trace_check(N: int, seeds: Mapping[int, Fraction] | None = None) -> Report:
    """Check that the Lambda-tower recursion forces every weight c_n to be 1.

    Without ``seeds`` this solves the recursion, confirms c_n = 1 for
    n <= N, and confirms that any c_1 != 1 drives some c_n outside [0, 1]
    (the admissible c_1 interval within levels <= N is reported). With
    ``seeds`` (index -> value overriding the forced value) it reports the
    first index at which the recursion breaks.
    """
    if N < 1:
        raise ValueError("N must be at least 1")
    rng = f"0 <= n <= {N}"
    claim = "c_0 = 1 and n c_{n-1} = (n-1) c_n + 1 force c_n = 1"
    c = lambda_tower_coefficients(N)
    if seeds:
        c = [Fraction(seeds.get(n, v)) for n, v in enumerate(c)]
    if c[0] != 1:
        return Report(claim, rng, False, {"n": 0, "c_0": c[0]})
    for n in range(1, N + 1):
        lhs, rhs = n * c[n - 1], (n - 1) * c[n] + 1
        if lhs != rhs:
            return Report(claim, rng, False, {"n": n, "lhs": lhs, "rhs": rhs, "c": c[: n + 1]})
    not_one = [n for n, v in enumerate(c) if v != 1]
    if not_one:
        return Report(claim, rng, False, {"n": not_one[0], "c_n": c[not_one[0]]})
    # c_n = 1 + n (c_1 - 1) stays in [0, 1] for all n <= N iff c_1 in [1 - 1/N, 1].
    lower = 1 - Fraction(1, N)
    probe = [lower - Fraction(1, N * N), Fraction(1) + Fraction(1, N * N)]
    escapes = {}
    for x in probe:
        seq = lambda_tower_coefficients(N, x)
        escapes[str(x)] = next((n for n, v in enumerate(seq) if not 0 <= v <= 1), None)
    return Report(claim, rng, True, None, {
        "c": c,
        "admissible_c1_interval_within_range": [lower, Fraction(1)],
        "first_escape_for_perturbed_c1": escapes,
    })
