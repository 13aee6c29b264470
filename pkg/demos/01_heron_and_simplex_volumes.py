#!/usr/bin/env python3
"""Squared distances in, exact simplex volumes out.

The bordered determinant of pairwise squared distances equals
(-1)^m 2^(m-1) ((m-1)!)^2 v^2, so triangle areas and tetrahedron volumes
fall out of one formula with no square roots until the very end.
"""

from fractions import Fraction

from soddy import (
    SquaredDistanceMatrix,
    cm_determinant,
    heron_area_squared,
    volume_squared,
    volume_squared_from_coordinates,
)

# The 3-4-5 right triangle, as squared side lengths.
triangle = SquaredDistanceMatrix.from_entries(
    [[0, 9, 16], [9, 0, 25], [16, 25, 0]]
)
print("3-4-5 triangle")
print("  bordered determinant:", cm_determinant(triangle))      # -576
print("  area^2 via determinant:", volume_squared(triangle).value)
print("  area^2 via Heron:", heron_area_squared(3, 4, 5))
print("  area^2 via coordinates:", volume_squared_from_coordinates(
    [(0, 0), (3, 0), (0, 4)]).value)

# A regular tetrahedron of side 1: v = 1/(6 sqrt(2)).
tetra = SquaredDistanceMatrix.from_entries(
    [[0, 1, 1, 1], [1, 0, 1, 1], [1, 1, 0, 1], [1, 1, 1, 0]]
)
v2 = volume_squared(tetra)
print("\nregular tetrahedron, side 1")
print("  determinant:", cm_determinant(tetra))                  # 4
print(f"  volume^2: {v2.value} (dimension {v2.dim})")           # 1/72

# Everything stays exact for rational inputs: a 4-simplex with side 2.
simplex = SquaredDistanceMatrix.from_entries(
    [[0 if i == j else 4 for j in range(5)] for i in range(5)]
)
print("\nregular 4-simplex, side 2")
print("  volume^2:", volume_squared(simplex).value)             # 5/36

# Degeneracy is an exact zero, not a tolerance call.
collinear = SquaredDistanceMatrix.from_entries(
    [[0, 1, 9], [1, 0, 4], [9, 4, 0]]
)
print("\ncollinear points at distances 1, 2, 3")
print("  determinant:", cm_determinant(collinear))              # 0

# Rational coordinates round-trip exactly through the determinant route.
points = [(Fraction(1, 3), Fraction(2, 7)), (4, 0), (Fraction(-5, 2), 1)]
d2 = [
    [sum((p[c] - q[c]) ** 2 for c in range(2)) for q in points]
    for p in points
]
via_distances = volume_squared(SquaredDistanceMatrix.from_entries(d2)).value
via_coordinates = volume_squared_from_coordinates(points).value
print("\nrandom rational triangle")
print("  determinant route:", via_distances)
print("  coordinate route: ", via_coordinates)
print("  exactly equal:", via_distances == via_coordinates)
