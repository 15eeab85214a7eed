"""Logarithmic derivations and forms, degree by degree."""

# %%
from logarr import DER, FORM, ModuleSelector, boolean, braid, generic, graded_dim, minimal_generators, nlf_demo
from logarr.arrangement import essentialize, make_arrangement
from logarr.logmodules import freeness_test, local_freeness_test, stable_hilbert_series
from logarr.reports import format_laurent

lines = make_arrangement(2, [[1, 0], [0, 1], [1, 1]])

# %% Graded dimensions of D^1 and Omega^1 for three lines through the origin.
for side in (DER, FORM):
    sel = ModuleSelector(lines, side, 1)
    lo = sel.min_degree
    print(sel.label, [graded_dim(sel, m) for m in range(lo, lo + 6)])

# %% Generators: the Euler derivation and one of degree 2.
gens = minimal_generators(ModuleSelector(lines, DER, 1), 3)
for g, theta in zip(gens.degrees, gens.elements()):
    print(g, theta)

# %% The Hilbert series stabilizes once the numerator stops moving.
h = stable_hilbert_series(ModuleSelector(generic(2, 4), FORM, 1), 12)
print("Omega^1 of four generic planes:", format_laurent(h.numerator), f"/ (1-X)^{h.denom_power}")

# %% Freeness: a Saito determinant certifies a basis, a non-factoring pi refutes one.
for A in (boolean(3), essentialize(braid(4))[0], generic(2, 5)):
    rep = freeness_test(A)
    print(A.name, "free" if rep.free else "not free", rep.exponents, rep.certificate)

# %% Local freeness fails for a plane arrangement coned with a separate hyperplane.
rep = local_freeness_test(nlf_demo())
print("locally free:", rep.locally_free)
print("witness:", rep.witness["hyperplanes"], rep.witness["reason"])
