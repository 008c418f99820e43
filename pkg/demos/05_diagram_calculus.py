"""Composing set-partition diagrams with a symbolic loop parameter."""

import random

from easytraces.diagrams import (
    AlgebraElement,
    Category,
    compose,
    crossing,
    diagram,
    enumerate_category,
    identity,
    quotient_project,
    random_element,
)

# %% points i are upper, -i are lower
cap_cup = diagram(2, 2, [[1, 2], [-1, -2]])
print(cap_cup, compose(cap_cup, cap_cup))
print(compose(crossing(2, 1), crossing(2, 1)) == (identity(2), 0))

# %% e_p * e_p = delta * e_p
e = AlgebraElement.basis(cap_cup)
print(e * e)
print((e * e).evaluate(3))

# %% category sizes for k = 0..4
for c in Category:
    print(f"{c.value:2s}", [len(enumerate_category(c, k)) for k in range(5)])

# %% the quotient onto the symmetric group kills the non-invertible diagrams
rng = random.Random(0)
x = random_element(3, rng, Category.B, terms=4)
print(x)
print(quotient_project(x))
