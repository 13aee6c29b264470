#!/usr/bin/env python3
"""The same machinery in n dimensions: n+2 mutually tangent n-spheres.

The residual generalizes to (sum k)^2 - n sum k^2 and the determinant
identity to (-1)^n 2^(2n+1) (prod r)^2 * residual.  Nothing else changes
but the matrix sizes.
"""

import math
import random
from fractions import Fraction

from soddy import (
    cm_determinant,
    curvatures_from_radii,
    descartes_residual,
    solve_missing_curvature,
    tangency_squared_distances,
    validate_radii,
)

# Five unit spheres in 3-space: residual 25 - 3*5 = 10, not tangentially flat.
r3 = validate_radii([1, 1, 1, 1, 1], n=3)
print("five unit 3-spheres")
print("  residual:", descartes_residual(curvatures_from_radii(r3)))   # 10
print("  determinant:", cm_determinant(tangency_squared_distances(r3)))  # -1280

# Completing four unit 3-spheres: k = 2 +- sqrt(6).
hi, lo = solve_missing_curvature([1.0, 1.0, 1.0, 1.0], 3)
print("\ncompleting four unit 3-spheres")
print("  roots:", hi, lo)
print("  against 2 +- sqrt(6):", 2 + math.sqrt(6), 2 - math.sqrt(6))

# The identity holds exactly for any rational radii in every dimension.
rng = random.Random(7)
print("\nexact identity check across dimensions")
for n in range(1, 7):
    values = [
        Fraction(rng.choice([i for i in range(-10, 11) if i]), rng.randint(1, 10))
        for _ in range(n + 2)
    ]
    values = [abs(v) for v in values]
    values[0] = -values[0]
    r = validate_radii(values, n)
    k = curvatures_from_radii(r)
    lhs = cm_determinant(tangency_squared_distances(r))
    rhs = (
        Fraction((-1) ** n * 2 ** (2 * n + 1))
        * r.product() ** 2
        * descartes_residual(k)
    )
    print(f"  n={n}: det = {lhs} = scaled residual -> {lhs == rhs}")

# Tangent quadruples exist with an exact rational completion whenever the
# discriminant is a perfect square; the solver refuses to round silently.
print("\nexact completion of curvatures (2, 2, 3):")
print("  roots:", solve_missing_curvature([Fraction(2), 2, 3], 2))  # 15 and -1
