# Smallest sum of two sides of a triangle with inradius 1.
#
# For comparison: one side can be made arbitrarily close to 2, and all three
# sides together are at least 6 sqrt(3) (equilateral).
import math

from tangenttri import optimize

print("side infimum      ", optimize.side_infimum())
print("minimum perimeter ", optimize.min_perimeter())

# Isosceles family (v, v, w): Heron's formula with area = semiperimeter gives v(w).
for w in (2.5, 3.0, 2 * math.sqrt(3), 4.0, 4.5, 6.0):
    print(f"w={w:.4f}  v={optimize.v_of_w(w):.6f}  2v={2 * optimize.v_of_w(w):.6f}")

closed = optimize.two_side_min_closed()
print("\nclosed form:", closed)
print(f"  cos(apex) = sqrt(5) - 2 = 1/phi^3 -> {closed.cos_apex:.15f} vs {1 / optimize.GOLDEN ** 3:.15f}")
print(f"  apex = {closed.apex_angle:.6f} rad = {closed.apex_angle_deg:.4f} deg")

# Same minimum without assuming the isosceles shape.
numeric = optimize.two_side_min_numeric()
print("\nfull search:", numeric)
print(f"  |sum_uv - closed| = {abs(numeric.sum_uv - closed.sum_uv):.2e},  |u - v| = {numeric.uv_difference:.2e}")

iso = optimize.isosceles_search(1e-9)
print(f"1-D isosceles search: w* = {iso.w_star:.9f} (closed {closed.w_star:.9f})")
