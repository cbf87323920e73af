"""The u.l.g. series of S_4, and where its coefficients come from.

Run: python3 demos/01_symmetric_group.py
"""

from ulg import ball_census, build_chain, evaluate, generating_series
from ulg.geodesics import reduced_words

d = build_chain(3)
series = generating_series(ball_census(d, 6))
print("U(t1, t2, t3) =", series)
print(f"{len(series)} monomials, U(1, 1, 1) = {series.at_ones()}")

# t1 t2^2 t3 has coefficient 4: four elements each own exactly one geodesic
# with this label.
for text in ("2123", "1232", "3212", "2321"):
    e = evaluate(d, d.parse_word(text))
    words = [d.format_word(w) for w in reduced_words(d, e)]
    print(f"  {text}: all reduced words {words}")
