"""Intersection lattices, Mobius values and the Poincare polynomial."""

# %%
from logarr import boolean, braid, edelman_reiner, intersection_lattice, poincare_poly
from logarr.arrangement import char_from_poincare, characteristic_poly, essentialize, localize, mu_multiset, rank_profile
from logarr.reports import format_poly

# %% Boolean and braid arrangements factor as expected.
for A in (boolean(3), braid(4)):
    print(A.name, format_poly(poincare_poly(A)))

# %% The fifteen nonzero 0/1 vectors in four variables.
A = edelman_reiner()
L = intersection_lattice(A)
pi = poincare_poly(A, L)
print("pi =", format_poly(pi))
print("elements by rank:", L.rank_census())

# %% Rank-3 flats, grouped by how many planes pass through them.
for (count, mus), k in rank_profile(A, 3, L).items():
    print(f"{k:3d} flats on {count} planes, mu below = {mus}")

# %% A localization, essentialized, is an arrangement in three variables.
X = next(X for X in L.by_rank(3) if len(X.members) == 7)
sub, idx = localize(A, X, L)
E, empty = essentialize(sub)
print("hyperplanes", idx, "-> essential rank", E.n_vars, "mu multiset", mu_multiset(E, 2))

# %% The characteristic polynomial is pi read backwards with alternating signs.
print("chi =", format_poly(characteristic_poly(A, L)), "| from pi:", char_from_poincare(pi, A.n_vars))
