"""
Operator geometry: what each of the four samplers actually does
===============================================================

Each operator takes the incumbent best and returns a batch of candidate
states with a distinct geometric signature:

  rotation    - points inside a hypersphere of radius alpha around best
  translation - points on the ray from the old best through the new one
  expansion   - every coordinate rescaled by an independent Gaussian
  axesion     - exactly one coordinate perturbed per sample

This script samples each one and prints the statistics that make those
signatures visible.
"""

import numpy as np

from stapy import RandomSource, op_axes, op_expand, op_rotate, op_translate

rng = RandomSource(7)
best = np.array([2.0, -1.0, 0.5, 3.0])
n = best.size
SE = 2000

# Rotation: step norms never exceed alpha, whatever the scale of best.
for alpha in (0.1, 1.0):
    batch = op_rotate(best, SE, alpha, rng)
    norms = np.linalg.norm(batch - best, axis=1)
    print(f"rotation  alpha={alpha:4.1f}: max step {norms.max():.4f} "
          f"(bound {alpha}), mean step {norms.mean():.4f}")

# Translation: samples live on the old->new line, never past length beta.
old, new = best, best + np.array([1.0, 1.0, 0.0, 0.0])
batch = op_translate(old, new, SE, 1.0, rng)
offsets = batch - new
direction = (new - old) / np.linalg.norm(new - old)
along = offsets @ direction
off_line = np.linalg.norm(offsets - np.outer(along, direction), axis=1)
print(f"translate beta=1.0 : steps in [{along.min():.4f}, {along.max():.4f}], "
      f"max off-line residual {off_line.max():.2e}")

# Expansion: per-coordinate Gaussian rescaling; zeros would stay zero.
batch = op_expand(best, SE, 1.0, rng)
ratios = (batch - best) / best  # the Gaussian gains, recovered
print(f"expansion gamma=1.0: gain mean {ratios.mean():+.4f} "
      f"(expect ~0), gain std {ratios.std():.4f} (expect ~1)")

# Axesion: one coordinate moves per sample, axes drawn uniformly.
batch = op_axes(best, SE, 1.0, rng)
changed = batch != best
print(f"axesion   delta=1.0: coordinates changed per sample "
      f"min={changed.sum(axis=1).min()} max={changed.sum(axis=1).max()}")
print(f"                     axis usage {changed.sum(axis=0)} "
      f"(expect ~{SE // n} each)")

# The all-zero state is a fixed point of the whole family: every operator
# is multiplicative in best, so nothing can move off the origin.
zero = np.zeros(n)
assert not op_rotate(zero, 10, 1.0, rng).any()
assert not op_expand(zero, 10, 1.0, rng).any()
assert not op_axes(zero, 10, 1.0, rng).any()
print("all-zero state: confirmed fixed point of rotation/expansion/axesion")
