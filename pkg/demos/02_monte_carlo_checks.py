# Seeded simulation against the exact results.
import math

import numpy as np

from tangenttri import analytic, sampling
from tangenttri.analytic import DensityModel

SEED = 7
n = 10 ** 6

# Contact angles are uniform on the triangle alpha + beta < pi; alpha then has
# density 2 (pi - alpha) / pi^2 and mean pi/3.
summary, _ = sampling.estimate_alpha_mean(n, SEED)
print(f"E(alpha): {summary.estimate:.6f} +- {summary.std_error:.6f}   exact {math.pi / 3:.6f}"
      f"   chi-square p = {summary.extra['chi2_pvalue']:.3f}")

# Side samples against the analytic CDF.
for model in (DensityModel.INCIRCLE, DensityModel.NAIVE):
    side, _ = sampling.simulate_side(10 ** 5, SEED, model=model)
    print(f"{model.value:9s} median {side.estimate:.4f} (exact {side.extra['median_exact']:.4f})"
          f"  KS D = {side.extra['ks']:.4f}  min = {side.extra['min']:.4f}")

# Acute triangles: exact 1/4.
acute = sampling.estimate_acute_probability(n, SEED)
print(f"P(acute) MC {acute.estimate:.5f} +- {acute.std_error:.5f}   exact {analytic.acute_probability_exact()}")

# Sharding changes the stream, not the answer.
for shards in (1, 4, 8):
    s = sampling.estimate_acute_probability(n, SEED, shards=shards)
    print(f"  shards={shards}: {s.estimate:.5f}")

# Sample means do not settle: they creep up like (8/pi) ln n with large jumps.
x = sampling.sample_side_incircle(sampling.make_rng(SEED), 10 ** 6)
print("running means:", [round(m, 2) for m in sampling.running_means(x, [10 ** 3, 10 ** 4, 10 ** 5, 10 ** 6])])
print("largest draw:", np.max(x))
