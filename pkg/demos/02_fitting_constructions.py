"""Fitting membership functions to prescribed control points.

Three constructions:

1. closed-form side means so the tangent/Gaussian curve passes through one
   control point per side;
2. a step density interpolating several control points per side exactly;
3. the classic triangular number realized with a Gaussian kernel - the
   kernel mean is a free parameter and cancels out.

Run:  python demos/02_fitting_constructions.py
"""

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from pdmf import (
    ControlPoint,
    eval_membership,
    fit_gpdmf,
    fit_step_pdmf,
    membership,
    sample_curve,
    triangular_as_pdmf,
)

OUT = Path(__file__).parent / "output"
OUT.mkdir(exist_ok=True)

# 1. one control point per side, closed-form means
P, Q = ControlPoint(0.0, 0.75), ControlPoint(1.5, 0.6)
fitted = fit_gpdmf(-1.0, 1.0, 2.0, P, Q)
print("closed-form fit on support (-1, 1, 2):")
print(f"  mu_left  = {fitted.mu_left:.12f}")
print(f"  mu_right = {fitted.mu_right:.12f}")
print(f"  grade at P.x: {membership(fitted, P.x):.12f}  (prescribed {P.y})")
print(f"  grade at Q.x: {membership(fitted, Q.x):.12f}  (prescribed {Q.y})")

# 2. many control points, step-density interpolation
lefts = [ControlPoint(0.2, 0.15), ControlPoint(0.5, 0.4), ControlPoint(0.8, 0.85)]
rights = [ControlPoint(1.4, 0.7), ControlPoint(2.2, 0.3)]
step_spec = fit_step_pdmf(0.0, 1.0, 3.0, lefts, rights)
print("\nstep-density fit through five control points:")
for point in lefts + rights:
    print(f"  f({point.x}) = {eval_membership(step_spec, point.x)}  (prescribed {point.y})")

# 3. triangular realization; the kernel mean is immaterial
print("\ntriangular number (0, 1, 2) realized with two different kernel means:")
for mu in (0.0, 3.7):
    spec = triangular_as_pdmf(0.0, 1.0, 2.0, mu)
    grades = ", ".join(f"f({x}) = {eval_membership(spec, x):.9f}" for x in (0.5, 1.75))
    print(f"  mean {mu:>4}: {grades}")

fig, axes = plt.subplots(1, 2, figsize=(10, 4), sharey=True)
curve = sample_curve(fitted, 400)
axes[0].plot([x for x, _ in curve], [f for _, f in curve])
axes[0].plot([P.x, Q.x], [P.y, Q.y], "o", color="crimson")
axes[0].set_title("closed-form fit through two points")
curve = sample_curve(step_spec, 400)
axes[1].plot([x for x, _ in curve], [f for _, f in curve])
axes[1].plot(
    [p.x for p in lefts + rights], [p.y for p in lefts + rights], "o", color="crimson"
)
axes[1].set_title("step density through five points")
for ax in axes:
    ax.set_xlabel("x")
axes[0].set_ylabel("membership grade")
fig.tight_layout()
fig.savefig(OUT / "fitting_constructions.png", dpi=120)
print(f"\nwrote {OUT / 'fitting_constructions.png'}")
