"""Walkthrough: stability notions and the torus weight calculus.

Run with:  python3 demos/03_stability_and_weights.py
"""

from degenlab import (
    NormalForm,
    admissible_sign_vectors,
    bounded_weight,
    combinatorial_weight,
    constructive_linearization,
    default_scale,
    exists_stabilizing_linearization,
    hm_invariant,
    is_git_stable,
    make_base_tuple,
    normalize_pair,
    place,
    stability_report,
)

# A configuration on the two-cut fibre: one point on the mixed bubble, one
# on a pure bubble.  Every torus level is occupied.
cfg = place(NormalForm(3, (1, 2)), [((1, 2, 0), 1), ((2, 0, 1), 1)])
print("report:", stability_report(cfg))

# The constructive linearization weights each level so that the per-level
# combinatorial term is strictly positive for every admissible subgroup.
lin = constructive_linearization(cfg)
print("lift exponents:", [tuple(x) for x in lin.levels])
scale = default_scale(cfg.m)
pattern = cfg.presentation.vanishing_pattern()
print(f"{'s':<10} {'bounded':>8} {'combinatorial':>14} {'total':>6}")
for s in admissible_sign_vectors(pattern):
    mu_b, _ = bounded_weight(cfg, s)
    mu_c = combinatorial_weight(cfg, s, lin)
    print(f"{str(list(s)):<10} {mu_b:>8} {mu_c:>14} {hm_invariant(cfg, s, lin, scale):>6}")
print("stable at scale", scale, ":", is_git_stable(cfg, lin, scale))

# A configuration missing a level admits no stabilizing lift at all.
corner = place(NormalForm(2, (1,)), [((0, 0, 2), 1)])
print("corner point lift:", exists_stabilizing_linearization(corner))

# Presentations with boundary unit directions can fail strict stability even
# when the class is stable; normalization exhibits the bijection.
cfg = place(make_base_tuple([2, 0]), [((0, 2, 0), 1)])
print("on (2, 0):        ", stability_report(cfg))
print("normalized to (2):", stability_report(normalize_pair(cfg)))
