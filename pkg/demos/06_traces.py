"""Thoma traces on permutations and their lifts to diagram algebras."""

import random
from fractions import Fraction

from easytraces.diagrams import AlgebraElement, Category, crossing, random_element
from easytraces.report import jsonable
from easytraces.traces import (
    ThomaParameter,
    TraceConvention,
    lambda_tower_trace_check,
    lifted_diagram_trace,
    thoma_trace,
)

t = ThomaParameter((Fraction(1, 2), Fraction(1, 2)), ())

# %% the two readings of the cycle factor differ already on a transposition
for conv in TraceConvention:
    print(conv.value, thoma_trace(t, (2, 1, 3), conv), thoma_trace(t, (2, 3, 1), conv))

# %% lift through the quotient: the crossing has trace 1 at alpha = (1)
trivial = ThomaParameter((1,), ())
print(lifted_diagram_trace(trivial, TraceConvention.CYCLE_LENGTH, AlgebraElement.basis(crossing(2, 1))))

# %% tau(xy) = tau(yx) on random rook-Brauer elements
rng = random.Random(1)
unit = AlgebraElement.unit(3)
x = random_element(3, rng, Category.B) + unit.scale(2)
y = random_element(3, rng, Category.B) + AlgebraElement.basis(crossing(3, 1))
for delta in (Fraction(7, 2), Fraction(-1, 3), 5):
    a = lifted_diagram_trace(t, TraceConvention.CYCLE_LENGTH, x * y, delta)
    b = lifted_diagram_trace(t, TraceConvention.CYCLE_LENGTH, y * x, delta)
    print(delta, a, b)

# %% the Lambda tower leaves only the weights c_n = 1
rep = lambda_tower_trace_check(10)
print(rep.holds, jsonable(rep.details["admissible_c1_interval_within_range"]))
print(jsonable(lambda_tower_trace_check(10, {5: Fraction(1, 2)}).first_violation))
