"""Type A counts: closed forms side by side with exhaustive censuses.

The nonzero-coefficient count and the n^2 + 1 unique-expression count hold.
The total number of u.l.g.'s and the Type III(a) coefficients do not: the
census is the reference.

Run: python3 demos/02_type_a_counts.py
"""

from ulg.typea import LabelType, census_series, classify_label, coefficient, typea_table

print("n  nonzero(formula/census)  total(formula/census)  unique  max length")
for row in typea_table(range(2, 7)):
    print(f"{row['n']}  {row['nonzero_count_formula']:>6} / {row['nonzero_count_oracle']:<8}"
          f"       {str(row['total_formula']):>4} / {row['total_oracle']:<6}"
          f"      {row['unique_geodesics']:>3}  {row['max_length']:>5}")

print("\nType III(a) labels, case table vs census:")
for n in (5, 6):
    series = census_series(n)
    for lab in sorted(series.coeffs):
        if classify_label(n, lab).tag is LabelType.TYPE_III_A:
            print(f"  A{n} {''.join(map(str, lab))}: table {coefficient(n, lab)}, census {series[lab]}")
