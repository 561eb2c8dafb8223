"""Print the distribution generating functions, coefficient by coefficient.

Each series is an exponential generating function in t whose t^(3n)/(3n)!
coefficient is the polynomial sum of x^statistic over all forests of n
shrubs.  Everything is exact integer arithmetic; the tables below can be
compared line by line against the published expansions.
"""

from shrubstat import build_gf, closed_form_gf, min_rise_gf, rise_gf

SHRUBS = 5

for stat in ("ris", "risT", "risB", "risL", "risA", "minris"):
    gf = build_gf(stat, SHRUBS)
    print(f"{stat}:")
    for n in range(SHRUBS + 1):
        print(f"  t^{3 * n:<2}/{3 * n:>2}!  ->  {gf.coeff(n)}")
    print()

print("Three of the statistics also have closed denominators; building the")
print("series from those must give the same coefficients:")
for stat in ("risT", "risB", "risL"):
    same = closed_form_gf(stat, SHRUBS).series == rise_gf(stat, SHRUBS).series
    print(f"  {stat}: closed form agrees -> {same}")

print()
print("The minimal-ascent series counts forests whose word has exactly n")
print("ascents, the least possible; its coefficients reappear as the x^n")
print("coefficients of the ris series:")
word_gf = rise_gf("ris", SHRUBS)
for n in range(1, SHRUBS + 1):
    low = word_gf.coeff(n).coeff(n)
    print(f"  n={n}: {min_rise_gf(SHRUBS).coeff(n)}  (x^{n} coefficient of ris: {low})")
