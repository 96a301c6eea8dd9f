"""Walkthrough: from vanishing orders to the dual complex of a fibre.

Run with:  python3 demos/01_fibres_and_dual_complexes.py
"""

from degenlab import (
    NormalForm,
    build_fibre,
    complex_counts,
    locate,
    make_base_tuple,
    normal_form,
    refines,
    render_fibre,
)

# A point of the expanded base is a tuple of vanishing orders.  Its normal
# form keeps the height and the partial sums that land strictly inside it.
t = make_base_tuple([1, 1, 1, 0])
nf = normal_form(t)
print(f"tuple {t.exponents} has height {t.height} and cuts {nf.cuts}")

# Each cut level s draws a chord pair into the height-k triangle: one at
# a = s and its partner at b = k - s, meeting at a mixed vertex on the
# bottom side.  Crossings in the interior are quadric bubbles.
fibre = build_fibre(nf)
v, e, f = complex_counts(fibre)
print(f"dual complex: V={v} E={e} F={f} (Euler number {v - e + f})")
for vx in fibre.dual_complex.vertices:
    print(f"  {vx.kind.value:<12} at {tuple(vx.position)}  [{vx.surface_kind}]")

# Any integral point of the triangle sits in a unique stratum.
for pos in [(1, 2, 0), (1, 1, 1), (2, 1, 0), (3, 0, 0)]:
    loc = locate(fibre, pos)
    print(f"position {pos} lies in {loc.stratum} {loc.index}")

# Counts depend only on the number of cuts, not their spacing.
for n in range(5):
    cuts = tuple(range(1, n + 1))
    print(f"n={n}: counts {complex_counts(build_fibre(NormalForm(n + 1, cuts)))}")

# Refinement compares cut sets after rescaling to a common height.
print("(3,{1,2}) refines (3,{1}):", refines(NormalForm(3, (1, 2)), NormalForm(3, (1,))))
print("(4,{2}) refines (2,{1}):  ", refines(NormalForm(4, (2,)), NormalForm(2, (1,))))

# Diagrams are deterministic byte-for-byte; see also the render subcommand.
svg = render_fibre(fibre)
out = "demo_fibre.svg"
with open(out, "w", encoding="utf-8") as fh:
    fh.write(svg)
print(f"wrote {out} ({len(svg)} bytes)")
