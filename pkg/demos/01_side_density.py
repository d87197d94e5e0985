# Side length of a random triangle around the unit circle.
#
# Three models, from crude to correct:
#   single    one tangent pair, h = cot(theta/2), theta ~ U[0, pi]
#   naive     h + k with h, k independent (excircles allowed)
#   incircle  h + k conditioned on the unit circle being the incircle (h k > 1)
import numpy as np

from tangenttri import analytic
from tangenttri.analytic import DensityModel

# Densities on a common grid. The incircle law vanishes on l <= 2.
grid = np.array([0.5, 1.0, 2.0, 2.5, 3.0, 5.0, 10.0, 50.0])
print(f"{'l':>6} {'single':>12} {'naive':>12} {'incircle':>12}")
for l in grid:
    row = [analytic.density(m, l) for m in DensityModel]
    print(f"{l:6.1f} " + " ".join(f"{v:12.8f}" for v in row))

# The incircle density is a convolution over a < k < b, with a, b the roots of
# k^2 - l k + 1. Compare the closed form with brute-force quadrature.
for l in (2.5, 4.0, 20.0):
    a, b = analytic.integration_limits(l)
    print(f"l={l}: a={a:.6f} b={b:.6f}  closed={analytic.density_incircle(l):.15f}"
          f"  quadrature={analytic.density_incircle_by_convolution(l):.15f}")

# Every model integrates to one.
for m in DensityModel:
    print(m.value, "total mass", analytic.total_mass(m).value)

# Medians. The means are all infinite.
for m in DensityModel:
    print(f"median[{m.value}] = {analytic.median(m)!r}")
print("incircle median, 30 digits:", analytic.median_high_precision(DensityModel.INCIRCLE, 30))

# Heavy tail: l^2 f(l) settles at 8/pi.
for l in (1e2, 1e4, 1e6):
    print(f"l={l:.0e}  l^2 f(l) = {l * l * analytic.density_incircle(l):.8f}   8/pi = {8 / np.pi:.8f}")
