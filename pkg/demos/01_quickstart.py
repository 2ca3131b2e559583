"""
Quickstart: minimize the sphere function through the library API
================================================================

The optimizer needs three things: an objective, a box, and a seed.
Everything else has sensible defaults (30 samples per operator,
1000 iterations, rotation radius annealed from 1 down to 1e-4).
"""

import numpy as np

from stapy import SearchSpace, StaParams, sphere, sta_run

# A 10-dimensional sphere over the customary [-100, 100] box.
space = SearchSpace.uniform(10, -100.0, 100.0)

result = sta_run(sphere, space, StaParams(iterations=1000), rng=0)

print("best point :", np.array2string(result.best, precision=3))
print("best value :", result.fbest)
print("evaluations:", result.evaluations)
print("iterations :", len(result.history))

# The convergence history is non-increasing by construction; print a
# coarse descent profile, one value per 100 iterations.
for k in range(0, 1000, 100):
    print(f"  iter {k + 1:4d}  fbest = {result.history[k]:.3e}")

# Same seed, same run: results are bit-identical within this package.
again = sta_run(sphere, space, StaParams(iterations=1000), rng=0)
assert np.array_equal(result.best, again.best)
print("reproducible: same seed gave the identical run")
