# %% [markdown]
# # Lattices, manifolds and dimension counts
#
# Everything is exact: pairings are integers, dimensions come from checked
# divisions.  We build the working lattice of the elliptic surface E(3),
# look at its basic classes, and count moduli dimensions.

# %%
from monopole_reduction import (
    blow_up,
    catalog_elliptic,
    dimension_report,
    dim_sw,
    elliptic_setup,
    is_characteristic,
    pair,
    square,
    validate_setup,
)

m, data = catalog_elliptic(3)
f, s = m.label("f"), m.label("s")
print("e, sigma, b1, b+ =", m.euler, m.signature, m.b1, m.bplus)
print("f.f, f.s, s.s    =", square(f), pair(f, s), square(s))

# %% [markdown]
# The basic classes of E(3) are +f and -f with SW values +1 and -1.  Both
# are characteristic on the working lattice and have zero-dimensional
# Seiberg-Witten moduli (E(n) has simple type).

# %%
for d in data:
    print(list(d.K.coords), d.sw, is_characteristic(d.K), dim_sw(m, d.K))

# %% [markdown]
# Choosing F = c1(W+) + c1(E) orthogonal to f puts every reducible in the
# top Uhlenbeck level.  With F^2 = -10 both d_a and n_a equal 1.

# %%
m, g, data = elliptic_setup(3)
print("F =", list(g.F.coords), " F^2 =", square(g.F))
print(dimension_report(m, g))
for finding in validate_setup(m, g, data).findings:
    print(finding.severity, finding.code, "-", finding.message)

# %% [markdown]
# Blowing up adds a generator of square -1 and shifts e and sigma.

# %%
b = blow_up(m)
print(b.euler, b.signature, b.lattice.rank, square(b.label("e*")))
