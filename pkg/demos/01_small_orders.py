"""Small star-factor values, checked by exhaustive sweeps.

Run with ``python demos/01_small_orders.py``.
"""

# %% The three-vertex case: the cyclic triple has no spanning 3-star.
from starfactor import enumerate_classes, has_star_factor_exact, sweep
from starfactor.canon import canonical_code
from starfactor.factor import find_star_partition
from starfactor.tournament import T8_LABELS, add_sink, cyclic_triple, serialize, t7, t8

cat3 = enumerate_classes(3)
rep = sweep(cat3, lambda t: has_star_factor_exact(t, 3) is not None, "3-star")
print("3-vertex classes:", len(cat3), "without a spanning S3:", len(rep.failures))
print(serialize(cat3.representatives[rep.failures[0]]))

# %% Every 6-vertex tournament splits into two 3-stars.
rep = sweep(enumerate_classes(6), lambda t: has_star_factor_exact(t, 3) is not None, "2S3")
print("6-vertex classes:", rep.total, "failures:", len(rep.failures))

# %% The 7- and 8-vertex constructions.
print("T7 out-degrees:", t7().out_degrees())
print("T7 has S4+S3:", find_star_partition(t7(), [4, 3]) is not None)
print("T8 out-degrees:", dict(zip(T8_LABELS, t8().out_degrees())))
print("T8 has 2S4:", has_star_factor_exact(t8(), 4) is not None)
print("T7 + sink has 2S4:", has_star_factor_exact(add_sink(t7()), 4) is not None)

# %% How many 8-vertex classes avoid 2S4?
cat8 = enumerate_classes(8)
rep = sweep(cat8, lambda t: has_star_factor_exact(t, 4) is not None, "2S4")
failing = {cat8.codes[i] for i in rep.failures}
print(f"{len(rep.failures)} of {rep.total} 8-vertex classes have no 2S4")
print("T8 among them:", canonical_code(t8()) in failing,
      "| T7+sink among them:", canonical_code(add_sink(t7())) in failing)
