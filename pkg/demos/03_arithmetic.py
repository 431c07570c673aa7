"""Arithmetic on the five-parameter representation.

Addition, scalar multiples and subtraction act componentwise (with the
support reversed and the means swapped under a negative scalar), so no
membership sampling is involved.  The toy equation b2 (+) X = b1 is solved
by direct subtraction; its substitution residual shows that the means are
recovered while the support generally widens.

The final plot contrasts the componentwise sum with the naive pointwise
MIN/MAX combinations of the two operand curves.

Run:  python demos/03_arithmetic.py
"""

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from pdmf import GPdmf, add, membership, sample_curve, scale, solve_add_equation, sub

OUT = Path(__file__).parent / "output"
OUT.mkdir(exist_ok=True)


def show(label: str, number: GPdmf):
    a, b, c, ml, mr = number.components
    print(f"  {label} = <({a:g}, {b:g}, {c:g}); {ml:.4f}, {mr:.4f}>")


b1 = GPdmf(-1.0, 0.0, 1.0, 0.0, 0.0)
b2 = GPdmf(-1.0, 1.0, 4.0, 0.0, 0.0)
b3 = GPdmf(-1.0, 1.0, 2.0, -0.6745, -0.4399)

print("operands")
show("b1", b1)
show("b2", b2)
show("b3", b3)

print("\narithmetic")
show("b1 + b2", add(b1, b2))
show("3 * b3 ", scale(3.0, b3))
show("-2 * b3", scale(-2.0, b3))
show("b3 - b1", sub(b3, b1))

print("\ntoy equation  b1 (+) X = b3")
result = solve_add_equation(b3, b1)
show("X      ", result.solution)
print(f"  substitution residual: {tuple(round(r, 12) for r in result.residual)}")
print(f"  means recovered:   {result.mu_recovered}")
print(f"  support recovered: {result.support_recovered}  (widens unless the")
print("  second operand is crisp; the residual makes that visible)")

total = add(b1, b2)
xs = [x for x, _ in sample_curve(total, 500)]
fig, ax = plt.subplots(figsize=(7, 4))
ax.plot(xs, [membership(total, x) for x in xs], label="componentwise sum")
ax.plot(
    xs,
    [min(membership(b1, x), membership(b2, x)) for x in xs],
    "--",
    label="pointwise MIN",
)
ax.plot(
    xs,
    [max(membership(b1, x), membership(b2, x)) for x in xs],
    ":",
    label="pointwise MAX",
)
ax.set_xlabel("x")
ax.set_ylabel("membership grade")
ax.legend()
ax.set_title("Sum of b1 and b2 versus pointwise MIN/MAX")
fig.tight_layout()
fig.savefig(OUT / "arithmetic_comparison.png", dpi=120)
print(f"\nwrote {OUT / 'arithmetic_comparison.png'}")
