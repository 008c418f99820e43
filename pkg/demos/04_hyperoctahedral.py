"""Hyperoctahedral dimensions and the coupled Young algebra."""

from fractions import Fraction

from easytraces.arrays import dim_A_n, hyperoct_dims, k_array, theta_dim_square_sum

a, report = hyperoct_dims(12)

# %% a_n from the binomial recursion, checked against K(2n, 0, 0)
K = k_array(24)
for n in range(8):
    print(n, a[n], K(2 * n, 0, 0), Fraction(a[n - 1], a[n]) if n else "")
print(report.holds)

# %% dimensions of A_n, both from the closed form and as a sum of squares
print([dim_A_n(n) for n in range(8)])
print([theta_dim_square_sum(n) for n in range(8)])
