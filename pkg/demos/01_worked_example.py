# A loan promising 110 in one year trades at 100. What does that say about
# the borrower?
from ecfmodel import (
    days_saved,
    ecf_discount_factor,
    effective_periods,
    fv_single,
    pv_single,
    risk_equivalent_days,
    solve_k_single,
)

k = solve_k_single(pv=100, fv=110, days=365)
print(f"implied issuer efficiency k = {k:.4f} ({100 * k:.0f}%)")

# Going forward again recovers the price
print("pv of 110 at that k:", pv_single(110, 365, k))
print("fv of 100 at that k:", fv_single(100, 365, k))

# n = X(1-k)/365 + 1 and the discount factor 1/sqrt(n)
print("effective periods:", effective_periods(365, k))
print("discount factor:  ", ecf_discount_factor(365, k))

# k splits the 365-day tenor into days the issuer "saves" and days of risk
# actually carried
print("days saved:          ", days_saved(365, k))
print("risk-equivalent days:", risk_equivalent_days(365, k))

# A "natural" issuer (k = 0) and a perfect one (k = 1)
for kk in (0.0, 0.5, 0.79, 1.0):
    print(f"k={kk:4.2f}  pv of 110 due in a year = {pv_single(110, 365, kk):8.4f}")

# k can go negative without limit: worse than natural
print("k for a price of 50:", solve_k_single(50, 110, 365))
