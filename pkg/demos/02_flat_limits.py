"""Walkthrough: the constructive flat-limit algorithm and its oracles.

Run with:  python3 demos/02_flat_limits.py
"""

from degenlab import (
    NormalForm,
    TropicalIncompatibility,
    associated_pair,
    flat_limit,
    unique_stable_subdivision_oracle,
)

# Two points of a smooth nearby fibre, recorded by the vanishing orders of
# their coordinates at height 3.
points = [((1, 2, 0), 1), ((2, 0, 1), 1)]

# The limit subdivision is read off directly: candidate levels are the
# first coordinates and height-minus-second coordinates.
report = flat_limit(points, 3)
print("cut levels:", report.fibre.nf.cuts)
print("base tuple:", report.base_tuple.exponents)
for p, loc in zip(report.configuration.points, report.configuration.placements):
    kind = report.fibre.dual_complex.vertices[loc.index].kind.value
    print(f"  point {p.valuations} lands on {kind}")
print("stable:", report.stability.sws_stable)

# Brute force over all cut sets finds the same subdivision, uniquely.
winners = unique_stable_subdivision_oracle(points, 3)
print("oracle winners:", [nf.cuts for nf in winners])

# Scaling the valuations is a finite base change: cuts scale along.
scaled = flat_limit([((2, 4, 0), 1), ((4, 0, 2), 1)], 6)
print("rescaled cuts:", scaled.fibre.nf.cuts)

# A declared generic fibre must be refined by the limit.  A point set that
# leaves a declared bubble empty is inconsistent input.
try:
    associated_pair([((0, 0, 3), 1)], 3, NormalForm(3, (1,)))
except TropicalIncompatibility as exc:
    print("incompatible:", exc)
