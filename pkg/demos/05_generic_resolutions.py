"""Resolutions of the forms of a generic arrangement."""

# %%
from logarr import FORM, ModuleSelector, betti_probe, generic, lebelt_check, lebelt_terms, ziegler_check, ziegler_matrix

A = generic(3, 5)

# %% The two-term resolution of Omega^1, checked against the kernel computation.
z = ziegler_matrix(A)
print("target twists", z.target_twists, "source twists", z.source_twists)
check = ziegler_check(A, (-1, 4))
for row in check.rows:
    print(row)

# %% Exterior powers: the predicted complex for Omega^2.
b1 = betti_probe(ModuleSelector(A, FORM, 1), 0, 5)
terms = lebelt_terms(b1.twists(0), b1.twists(1), 2)
print(terms.betti())

# %% Euler characteristic, Betti table, top power and wedge images all agree.
rep = lebelt_check(A, 2)
print("passed:", rep.passed, "pdim:", rep.pdim, "top pdim:", rep.top_pdim)
