"""The Edelman-Reiner arrangement from lattice to Riemann-Roch, diffed against golden values."""

# %%
from logarr.demo import GOLDEN, run_edelman_reiner
from logarr.linalg import Field
from logarr.reports import format_poly

report, mismatches = run_edelman_reiner()
v = report["values"]

# %%
print("pi              ", format_poly(v["poincare"]))
print("rank-3 profiles ", v["rank3_profiles"])
print("locally free    ", v["locally_free"])
print("Betti of D^1_0  ", v["betti_D1_0"])
print("c_t(Omega^1_0)  ", format_poly(v["c_omega1_0"]))
print("c_t(Omega^1)    ", format_poly(v["c_omega1"]), "=", format_poly(v["pi_bar"]))
print("Hilbert poly    ", v["hilbert_poly_D1_0"], "| Riemann-Roch", v["riemann_roch"])
print("mismatches      ", mismatches)

# %% The modular backend gives the same values, flagged probabilistic.
fast, diffs = run_edelman_reiner(Field("modular"))
print(fast["probabilistic"], diffs == [], fast["values"] == v)

# %% A wrong golden constant is reported field by field.
_, diffs = run_edelman_reiner(golden={"c_omega1_0": [1, 14, 66, 105]})
print(diffs)
