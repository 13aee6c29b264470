#!/usr/bin/env python3
"""Replaying the determinant reduction step by step, in exact arithmetic.

U^T W U rebuilds the distance determinant from coordinates; P and Q
congruences strip it down to a bordered block of curvatures over the
constant core S; the block-determinant rule finishes the job.  Every
equality below is checked entrywise over the rationals, and the report
carries both sides of each identity.
"""

import random
from fractions import Fraction

from soddy import (
    build_S,
    check_reduction_chain,
    check_S_properties,
    check_UWU_congruence,
    determinant,
    s_determinant_formula,
    validate_radii,
)

# The core matrix S = 2*ones - 4I and its closed forms.
print("S at n=2:")
for row in build_S(2).to_rows():
    print("  ", [int(v) for v in row])
print("det(S):", determinant(build_S(2)))            # -256
for n in range(1, 6):
    print(f"n={n}: det(S) = {determinant(build_S(n))} "
          f"(closed form {s_determinant_formula(n)})")

print("\nS-matrix report at n=2:")
for line in check_S_properties(2).lines():
    print(" ", line)

# Coordinates -> distance determinant, via the U and W factor matrices.
report = check_UWU_congruence([(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)])
print("\ncorner tetrahedron congruence:")
for entry in report.entries:
    print(f"  {entry.name}: {'pass' if entry.passed else 'FAIL'}")

# The full reduction chain on a rational configuration.
r = validate_radii([Fraction(-1), Fraction(1, 2), Fraction(1, 2), Fraction(1, 3)], 2)
chain = check_reduction_chain(r)
print("\nreduction chain for radii (-1, 1/2, 1/2, 1/3):")
for entry in chain.entries:
    print(f"  {entry.name}: {'pass' if entry.passed else 'FAIL'}")

# And on 25 random rational configurations per dimension.
rng = random.Random(11)
print("\nrandomized audit:")
for n in (1, 2, 3, 4):
    ok = 0
    for _ in range(25):
        values = [
            abs(Fraction(rng.choice([i for i in range(-10, 11) if i]), rng.randint(1, 10)))
            for _ in range(n + 2)
        ]
        if rng.random() < 0.5:
            values[rng.randrange(n + 2)] *= -1
        ok += check_reduction_chain(validate_radii(values, n)).passed
    print(f"  n={n}: {ok}/25 chains pass")
