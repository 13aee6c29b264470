#!/usr/bin/env python3
"""Four mutually tangent circles and the identity their curvatures satisfy.

With signed radii (negative for the enclosing circle) the center distances
are d_ij = |r_i + r_j|, and the squared-distance determinant factors into
(prod r_i)^2 times the curvature residual (sum k)^2 - 2 sum k^2.  Flat
configuration <=> zero residual.
"""

from fractions import Fraction

from soddy import (
    cm_determinant,
    curvatures_from_radii,
    descartes_residual,
    factored_volume_squared,
    solve_missing_curvature,
    tangency_squared_distances,
    validate_curvatures,
    validate_radii,
    vieta_partner,
)

# The classic integer quadruple: curvatures -1, 2, 2, 3.
radii = validate_radii([-1, Fraction(1, 2), Fraction(1, 2), Fraction(1, 3)], n=2)
k = curvatures_from_radii(radii)
print("curvatures:", [str(v) for v in k.values])
print("residual:", descartes_residual(k))                       # 0 -> tangent circles

d = tangency_squared_distances(radii)
print("center-distance determinant:", cm_determinant(d))        # 0 -> flat
print("simplex volume^2 (factored):", factored_volume_squared(radii).value)

# Unit radii do NOT satisfy the identity: four unit spheres in 3-space
# form a genuine tetrahedron instead of a flat quadruple.
unit = validate_radii([1, 1, 1, 1], n=2)
print("\nfour unit circles")
print("  residual:", descartes_residual(curvatures_from_radii(unit)))   # 8
print("  determinant:", cm_determinant(tangency_squared_distances(unit)))  # 256
print("  volume^2:", factored_volume_squared(unit).value)       # 8/9

# Completing three circles: the quadratic has two roots.
print("\ncompleting three unit circles (float mode)")
hi, lo = solve_missing_curvature([1.0, 1.0, 1.0], 2)
print("  inner Soddy circle curvature:", hi)                    # 3 + 2*sqrt(3)
print("  outer Soddy circle curvature:", lo)                    # 3 - 2*sqrt(3)

print("\ncompleting (-1, 2, 2) (exact mode, double root)")
print("  roots:", solve_missing_curvature([Fraction(-1), 2, 2], 2))

# Vieta reflection hops between the two roots without any square root.
quad = validate_curvatures([-1, 2, 2, 3], 2)
print("\nVieta partners of (-1, 2, 2, 3)")
for i, kv in enumerate(quad.values):
    print(f"  replace k={kv}: partner {vieta_partner(quad, i)}")
