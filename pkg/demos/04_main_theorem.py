"""pi-bar against the Chern polynomial of the sheaf of logarithmic 1-forms."""

# %%
from logarr import boolean, generic, nlf_demo, verify_main_theorem
from logarr.errors import HypothesisFailed

# %% Two independent routes on the Boolean arrangement in four variables.
for strategy in ("limit", "betti"):
    rep = verify_main_theorem(boolean(4), strategy)
    print(strategy, rep.pi_bar.coeffs, rep.c_omega.coeffs, rep.verified)

# %% Five generic planes in P^2: a locally free, non-free example.
rep = verify_main_theorem(generic(2, 5), "betti", gen_cutoff=5, syz_cutoff=8)
print(rep.pi_bar.coeffs, rep.c_omega.coeffs, rep.verified, rep.betti.entries)

# %% Without local freeness the pipeline refuses to answer.
try:
    verify_main_theorem(nlf_demo(), "limit")
except HypothesisFailed as exc:
    print(exc, exc.witness["hyperplanes"])
