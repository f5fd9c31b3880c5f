# The model rests on the planar random-walk law: after n steps of length lam
# the RMS distance from the start is sqrt(n) * lam. Check it by simulation.
import math

from ecfmodel import WalkConfig, simulate_walks, verify_sqrt_law

for n in (1, 4, 16, 100, 1000):
    stats = simulate_walks(WalkConfig(n_steps=n, step_length=1.0, n_walks=50_000, seed=7))
    report = verify_sqrt_law(stats, tolerance=0.01)
    print(f"n={n:5d}  rms={stats.rms_displacement:8.4f}  sqrt(n)={math.sqrt(n):8.4f}  "
          f"mean={stats.mean_displacement:8.4f}  pass={report.passed}")

# The mean displacement is smaller than the RMS (for 2-D walks it tends to
# sqrt(pi/4) of it); the square-root law is about the RMS.

# Same seed, same answer, however many threads do the work
cfg = WalkConfig(200, 1.0, 20_000, 42)
assert simulate_walks(cfg) == simulate_walks(cfg, workers=4)
print("deterministic across thread counts")
