# If an issuer's bonds all trade at one compound yield, what k does each
# maturity imply? The longer the bond, the lower k.
from ecfmodel import k_term_under_constant_yield

for y in (0.05, 0.10):
    print(f"constant yield {y:.0%}")
    for p in k_term_under_constant_yield(y, range(1, 16)):
        bar = "#" * max(0, int(40 * p.k))
        print(f"  {p.maturity_years:4.0f}y  k = {p.k:8.4f}  {bar}")

# At 10% the one- and two-year values are 0.79 and 0.77. Fifteen years lands
# just below zero (-0.0966); no constant yield gives a gentle slope all the
# way out, because compounding outruns the square root.
