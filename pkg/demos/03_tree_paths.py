"""u.l.g.'s on trees are paths that turn in constrained ways.

Run: python3 demos/03_tree_paths.py
"""

from collections import Counter

from ulg import ball_census, builtin
from ulg.treepath import forbidden_pattern_scan, turning_profile, ulg_structure_check

star = builtin("Dstar4")
census = ball_census(star, 12, collect_ulgs=True)
print(f"Dstar4 is finite: {census.complete}; it has {len(census.ulg_words)} u.l.g.'s")
index = Counter(turning_profile(star, w).branching_index for w in census.ulg_words)
longest = {b: max(len(w) for w in census.ulg_words if turning_profile(star, w).branching_index == b)
           for b in sorted(index)}
print("branching index -> number of u.l.g.'s:", dict(sorted(index.items())))
print("branching index -> longest u.l.g.:", longest)

d = builtin("A3")
word = d.parse_word("123212")
print("\n123212 in A3:")
for f in forbidden_pattern_scan(d, word):
    print(f"  {f.kind} on letters {f.start}..{f.stop - 1}")
print("  structure check:", ulg_structure_check(d, word).summary())
