# The perimeter has no known closed-form law; tabulate it by simulation.
import math

from tangenttri import sampling

summary, hist = sampling.simulate_perimeter(10 ** 6, seed=11, bins=30)
print(f"n = {summary.n}")
print(f"floor 6 sqrt(3) = {6 * math.sqrt(3):.6f}, observed min = {summary.extra['min']:.6f}")
for q in ("q25", "q50", "q75", "q90"):
    print(f"  {q}: {summary.extra[q]:.4f}")
print(f"median {summary.estimate:.4f} +- {summary.std_error:.4f}")

peak = max(hist.counts)
for lo, hi, count in hist.rows():
    bar = "#" * int(50 * count / peak)
    print(f"[{lo:8.3f}, {hi:8.3f}) {count:7d} {bar}")
