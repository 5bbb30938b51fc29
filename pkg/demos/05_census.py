"""Counting tournaments up to isomorphism and caching the catalogues."""

# %%
import tempfile
import time

from starfactor import enumerate_classes, raw_census
from starfactor.enumeration import cached_catalog, catalog_path

for n in range(1, 9):
    start = time.perf_counter()
    cat = enumerate_classes(n)
    print(f"n={n}: {len(cat):5d} classes ({time.perf_counter() - start:.2f}s)")

# %% The labelled brute force agrees where it is affordable.
print("raw n=5:", len(raw_census(5)), " raw n=6:", len(raw_census(6)))

# %% Catalogues persist as plain text.
with tempfile.TemporaryDirectory() as d:
    cached_catalog(6, d)
    text = catalog_path(d, 6).read_text()
    print(text.splitlines()[0])
    print("\n".join(text.splitlines()[1:8]))
