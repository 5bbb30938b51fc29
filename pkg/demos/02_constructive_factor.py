"""Walking through the max-out-degree construction on one tournament."""

# %% A random tournament just above the guaranteed size for m = 4.
from starfactor import random_tournament, trace_constructive, verify_star_factor
from starfactor.bitset import to_list
from starfactor.factor import construction_bound

m = 4
n = (construction_bound(m) // m + 1) * m
t = random_tournament(n, seed=2024)
print(f"m={m}, bound={construction_bound(m)}, n={n}")

# %% Run it and look at the intermediate sets.
tr = trace_constructive(t, m)
print("x =", tr.x, "with out-degree", t.out_degree(tr.x))
print("A  (left in N-(x) after packing):", to_list(tr.leftover_in))
print("A' (not absorbed into N+(x)):   ", to_list(tr.remainder_in))
print("|B| =", tr.rest_out.bit_count(), " |B'| =", tr.dominators.bit_count())
print("y =", tr.pivot, " R =", to_list(tr.reserve))

# %% Every inequality the argument relies on, with its two sides.
for c in tr.checks:
    print(f"  {'ok ' if c.holds else 'BAD'} {c.name:40s} {c.lhs} vs {c.rhs}")

# %% The factor itself.
f = tr.factor
print(len(f.stars), "stars; valid:", verify_star_factor(t, f)[0])
for s in f.stars[:3]:
    print("  centre", s.center, "leaves", s.leaf_list())

# %% Below the bound the run may stop at a named stage.
import warnings

from starfactor import StageFailure
from starfactor.factor import ProofInequalityWarning

stages = {}
with warnings.catch_warnings():
    warnings.simplefilter("ignore", ProofInequalityWarning)
    for seed in range(2000):
        try:
            trace_constructive(random_tournament(12, seed), 4)
            stages["success"] = stages.get("success", 0) + 1
        except StageFailure as exc:
            stages[f"stage {exc.stage}"] = stages.get(f"stage {exc.stage}", 0) + 1
print("n=12, m=4 outcomes over 2000 tournaments:", stages)
