"""Shapes of density-induced membership functions.

Builds three fuzzy numbers in the tangent/Gaussian family, prints a few
grades, and plots the curves.  The side means control how the grade mass
leans toward the peak: mean 0 reproduces the symmetric S-curve through
grade 1/2 at each side midpoint, negative means pull grades upward.

Run:  python demos/01_membership_shapes.py
"""

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from pdmf import GPdmf, eval_gpdmf, sample_curve

OUT = Path(__file__).parent / "output"
OUT.mkdir(exist_ok=True)

b1 = GPdmf(-1.0, 0.0, 1.0, 0.0, 0.0)
b2 = GPdmf(-1.0, 1.0, 4.0, 0.0, 0.0)
b3 = GPdmf(-1.0, 1.0, 2.0, -0.6745, -0.4399)

print("grades at a few points")
print(f"  b1(-0.5) = {eval_gpdmf(b1, -0.5):.6f}   (side midpoint, mean 0 -> 1/2)")
print(f"  b2( 2.5) = {eval_gpdmf(b2, 2.5):.6f}")
print(f"  b3( 0.0) = {eval_gpdmf(b3, 0.0):.6f}   (fitted to grade 0.75 here)")
print(f"  b3( 1.0) = {eval_gpdmf(b3, 1.0):.6f}   (peak)")
print(f"  b3( 2.0) = {eval_gpdmf(b3, 2.0):.6f}   (support edge)")

fig, ax = plt.subplots(figsize=(7, 4))
for number, label, style in [(b1, "b1", "--"), (b2, "b2", ":"), (b3, "b3", "-")]:
    curve = sample_curve(number, 400)
    ax.plot([x for x, _ in curve], [f for _, f in curve], style, label=label)
ax.set_xlabel("x")
ax.set_ylabel("membership grade")
ax.legend()
ax.set_title("Tangent/Gaussian membership functions")
fig.tight_layout()
fig.savefig(OUT / "membership_shapes.png", dpi=120)
print(f"\nwrote {OUT / 'membership_shapes.png'}")
