"""Transitive chains and partitions into transitive triples."""

# %% The greedy chain is at least floor(lg n) + 1 long.
import math

from starfactor import greedy_transitive, lonc_partition, random_tournament, verify_star_factor
from starfactor.transitive import exact_theta, lonc_order, verify_transitive_partition

for n in (8, 32, 128, 256):
    lengths = [len(greedy_transitive(random_tournament(n, s))) for s in range(50)]
    print(f"n={n}: guaranteed {math.floor(math.log2(n)) + 1}, observed min {min(lengths)}, max {max(lengths)}")

# %% Exact values for tiny orders.
print("least n forcing a transitive m-set, m = 1..3:", [exact_theta(m) for m in (1, 2, 3)])

# %% 129 vertices always split into 43 transitive triples.
n = lonc_order(3)
t = random_tournament(n, seed=7)
part = lonc_partition(t, 3)
print(n, "vertices ->", len(part.blocks), "blocks; valid:", verify_transitive_partition(t, part)[0])
print("first blocks:", part.blocks[:4])

# %% Each block's first vertex beats the other two, which gives a 3-star-factor.
print("as a 3-star-factor:", verify_star_factor(t, part.to_star_factor())[0])
