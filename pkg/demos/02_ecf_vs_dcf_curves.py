# ECF discounts by sqrt(time) instead of compounding a rate. Compare the
# k = 0 curve with DCF at 5%, 10% and 15%.
import numpy as np

from ecfmodel import curve_table, find_crossover

rates = [0.05, 0.10, 0.15]
rows = curve_table(max_years=50, step_years=0.25, k=0.0, rates=rates)

t = np.array([r.t for r in rows])
ecf = np.array([r.df_ecf for r in rows])
dcf = {rate: np.array([r.df_dcf[rate] for r in rows]) for rate in rates}

print("   t     ECF    DCF5%  DCF10%  DCF15%")
for year in (0, 0.25, 1, 2, 5, 10, 20, 30, 50):
    i = int(np.argmin(np.abs(t - year)))
    print(f"{t[i]:5.2f}  {ecf[i]:.4f}  " + "  ".join(f"{dcf[r][i]:.4f}" for r in rates))

# Sharp early decline, then a slow tail: ECF starts below every DCF curve and
# ends above all of them.
for r in rates:
    print(f"ECF overtakes DCF at {r:.0%} after {find_crossover(r, 0.0):6.2f} years")

# A more efficient issuer decays more slowly and crosses sooner
for k in (0.0, 0.3, 0.6):
    print(f"k={k}: crossover with 10% at {find_crossover(0.10, k):.2f} years")

try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(7, 4))
    ax.plot(t, ecf, "k-", lw=2, label="ECF, k = 0")
    for r in rates:
        ax.plot(t, dcf[r], label=f"DCF {r:.0%}")
    ax.set_xlabel("years")
    ax.set_ylabel("discount factor")
    ax.legend()
    fig.savefig("ecf_vs_dcf.png", dpi=120, bbox_inches="tight")
    print("wrote ecf_vs_dcf.png")
except ImportError:
    pass
