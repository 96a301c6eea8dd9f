"""Walkthrough: presentations of the expanded base and their equivalences.

Run with:  python3 demos/04_base_equivalences.py
"""

from degenlab import (
    equivalent,
    make_base_tuple,
    make_closed_point,
    normal_form,
    standard_embed,
    tau_move,
)

# Presentations differing by unit insertions describe the same fibre.
t = make_base_tuple([1, 2])
embedded = standard_embed(t, {1, 3})
print(f"{t.exponents} embeds to {embedded.exponents}")
print("same normal form:", normal_form(t) == normal_form(embedded))

# Slot moves relocate vanishing directions while keeping their order; the
# cut levels, being partial sums of the nonzero entries, never change.
u = make_base_tuple([1, 0, 2])
moved = tau_move(u, target=frozenset({2, 3}), source=frozenset({1, 3}))
print(f"{u.exponents} moves to {moved.exponents}, cuts {normal_form(moved).cuts}")

# A non-identity move never fixes a tuple whose vanishing set fills the
# source: the zeros land on the target positions.
print("fixed by the move:", moved == u)

# Scaling all orders is a finite base change; equivalence sees through it.
print("(1,1) ~ (2,2):", equivalent(make_base_tuple([1, 1]), make_base_tuple([2, 2])))
print("(1,2) ~ (2,1):", equivalent(make_base_tuple([1, 2]), make_base_tuple([2, 1])))

# Closed points: one vanishing entry makes every unit value reachable, so
# only the number of zeros matters; with no zeros the product is the
# invariant.
print("(0,5,0) ~ (0,0,7):", equivalent(make_closed_point([0, 5, 0]),
                                       make_closed_point([0, 0, 7])))
print("(2,3) ~ (3,2):    ", equivalent(make_closed_point([2, 3]),
                                       make_closed_point([3, 2])))
print("(2,3) ~ (2,2):    ", equivalent(make_closed_point([2, 3]),
                                       make_closed_point([2, 2])))
