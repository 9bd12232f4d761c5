# %% [markdown]
# # Link-pairing constants and Jacobi polynomials
#
# The constant attached to a reducible is a Jacobi polynomial evaluated at
# 0, with integer (often negative) parameters.  Binomials are read as
# falling factorials, so C(-3, 2) = 6.

# %%
from fractions import Fraction

from monopole_reduction import binomial, c_constant, format_rational, jacobi

print(binomial(-3, 2), binomial(5, 2), binomial(-1, 3))

# %% [markdown]
# P_n^(a,b)(x) for a few parameter choices, including negative ones.

# %%
for a, b, n in [(1, 0, 1), (2, 2, 1), (-4, -1, 5), (3, -2, 4)]:
    print((a, b, n), format_rational(jacobi(a, b, n, 0)), format_rational(jacobi(a, b, n, Fraction(1, 3))))

# %% [markdown]
# The binomial-sum form of the constant agrees with the Jacobi value; it
# reduces to 1 for zero-dimensional Seiberg-Witten moduli and to
# (n_p1 - n_lambda - n_c1)/2 when d_s = 1.

# %%
for n_p1, n_c1, d_s, n_lambda in [(4, 2, 0, 3), (4, 2, 1, 0), (5, 3, 2, -1), (2, 6, 3, 7)]:
    print((n_p1, n_c1, d_s, n_lambda), format_rational(c_constant(n_p1, n_c1, d_s, n_lambda)))
