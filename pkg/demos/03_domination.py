"""k-dominated tournaments and why they need many stars."""

# %% Expected number of undominated k-sets, and where it first drops below 1.
from starfactor import avoidability_check, expected_undominated, has_star_factor_exact, search_k_dominated, threshold_n
from starfactor.domination import asymptotic_bound

for k in (1, 2, 3, 4):
    n = threshold_n(k)
    print(f"k={k}: threshold n={n}, E={expected_undominated(n, k):.4f}, 2^k k^2 ln2 = {asymptotic_bound(k):.1f}")

# %% A random search finds a 2-dominated tournament quickly at n = 22.
out = search_k_dominated(k=2, n=22, trials=100_000, seed=0)
print("found after", out.trials, "trials; seed", out.seed)

# %% No two stars of any sizes cover it, so in particular no 11-star-factor exists.
print("avoided by two stars:", avoidability_check(out.tournament, 2))
print("11-star-factor:", has_star_factor_exact(out.tournament, 11))

# %% Success rate as n grows past the threshold.
for n in (14, 18, 21, 26, 30):
    hits = sum(search_k_dominated(2, n, 1, seed=s).tournament is not None for s in range(400))
    print(f"n={n}: {hits / 400:.3f} of random tournaments are 2-dominated; E[undominated pairs] = {expected_undominated(n, 2):.3f}")
