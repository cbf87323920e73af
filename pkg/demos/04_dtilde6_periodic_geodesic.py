"""An infinite u.l.g. in the affine group D~6.

The diagram has spine a - b, leaves 1, 2 on a and 3, 4 on b. Powers of
w = a1ab3ba2ab4b are reduced and uniquely labelled; its mirror images w2, w3
run parallel to it in the Cayley graph.

Run: python3 demos/04_dtilde6_periodic_geodesic.py
"""

from ulg import dtilde6

w, w2, w3 = dtilde6.paper_words()
print("w =", w, " w2 =", w2, " w3 =", w3)
print("l(w^n), n = 1..6:", [dtilde6.power_length("w", n) for n in range(1, 7)])
print("l((a1a2ab3b4b)^n), n = 1..3:", [dtilde6.power_length("base", n) for n in range(1, 4)])
print("w^n = 1a3 (1b23a4)^(2n-1) 2b4 for n = 1..4:", [dtilde6.normal_form_identity(n) for n in range(1, 5)])
print("w^2, w2^2, w3^2 are u.l.g.'s:", [dtilde6.power_is_ulg(v, 2) for v in ("w", "w2", "w3")])

results = dtilde6.run_case_corpus()
tally = {}
for r in results:
    tally[r.status] = tally.get(r.status, 0) + 1
print("\ncase corpus:", tally)
for r in results:
    if r.status != "pass":
        print("  ", r.tsv())

for other in ("w2", "w3"):
    prof = dtilde6.fellow_travel_profile("w", other, n=60)
    print(f"\ndistance from the {other} line (anchored at {prof.anchor}) to the w line:")
    print("  ", "".join(map(str, prof.distances)))
    print(f"   interior max {prof.max}, min {prof.min}; unanchored minimum {prof.raw_min}")
