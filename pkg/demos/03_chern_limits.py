"""Chern polynomials recovered as limits of Hilbert-series expressions."""

# %%
import random

from logarr import RInput, assemble_R, boolean, chern_split, limit_at_one, make_arrangement, solomon_terao
from logarr.arrangement import characteristic_poly
from logarr.chern import top_chern_checks

# %% For a split bundle the limit at X = 1 is the Whitney product.
rng = random.Random(1)
for _ in range(5):
    n = rng.randint(1, 4)
    twists = [rng.randint(-5, 5) for _ in range(rng.randint(1, 5))]
    lim = limit_at_one(assemble_R(RInput.split(twists, n)))
    print(twists, n, lim.coeffs, lim == chern_split(twists, n))

# %% Top Chern class from alternating Euler characteristics.
print(top_chern_checks([1, 1], 2).to_json())

# %% Solomon-Terao: the characteristic polynomial from the series of all D^p.
for A in (boolean(2), make_arrangement(2, [[1, 0], [0, 1], [1, 1]]), boolean(3)):
    print(A.name or "three lines", solomon_terao(A), list(characteristic_poly(A)))
