"""
The periodic u.l.g. of the affine group D~6 and its case analysis.

The diagram is the builtin "Dtilde6-paper": a - b is the spine, with leaves
1, 2 on a and 3, 4 on b. The period

    w = a1ab3ba2ab4b

has label (a: 4, b: 4, each leaf: 1), and every power w^n is a u.l.g. Two
relatives come from the diagram symmetries:

    w2 = a1ab4ba2ab3b   (swap 3 <-> 4)
    w3 = a2ab3ba1ab4b   (swap 1 <-> 2)

This module checks these facts at finite n with the exact engine. It also
replays a 68-case corpus of prefixes that rule out other infinite u.l.g.'s.
The three lines are compared by their Cayley graph distance profile.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from ulg.diagram import CoxeterDiagram, builtin
from ulg.engine import Element, evaluate, inverse, is_reduced, length, multiply
from ulg.geodesics import is_ulg

__all__ = [
    "DIAGRAM_NAME", "VARIANTS", "MECHANISMS",
    "CaseRecord", "CaseResult", "FellowTravelProfile",
    "diagram", "paper_words", "letter_map", "power_word", "power_length", "power_is_ulg",
    "normal_form_identity", "load_cases", "run_case_corpus", "format_case_report",
    "fellow_travel_profile", "ANCHORS",
]

DIAGRAM_NAME = "Dtilde6-paper"

VARIANTS = {
    "w": "a1ab3ba2ab4b",
    "w2": "a1ab4ba2ab3b",
    "w3": "a2ab3ba1ab4b",
    "base": "a1a2ab3b4b",
    # one factor from each class of pairwise commuting generators: {a,3,4}, {b,1,2}
    "coxIJ": "a34b12",
}

# offsets that put the w2 and w3 lines next to the w line: w^2 rewrites as
# 1a23b3 . w2 . 1a24b4 and as 1a3b41 . w3 . 2a23b4
ANCHORS = {"w2": "1a23b3", "w3": "1a3b41", "w": ""}

MECHANISMS = (
    "PROOF_HANDLED",
    "XYXY_NOT_REDUCED",
    "XYX_DOTS_XYX_NOT_REDUCED",
    "XY_DOTS_YXY_NOT_ULG",
    "UNLISTED",
)

# normal form 1a3 (1b23a4)^(2n-1) 2b4
_NF_HEAD, _NF_MID, _NF_TAIL = "1a3", "1b23a4", "2b4"


def diagram() -> CoxeterDiagram:
    return builtin(DIAGRAM_NAME)


def paper_words() -> tuple[str, str, str]:
    return VARIANTS["w"], VARIANTS["w2"], VARIANTS["w3"]


def letter_map(word: str, swaps: dict[str, str]) -> str:
    """Apply a letter permutation given as pairs, e.g. {"3": "4"} (symmetric)."""
    full = dict(swaps)
    full.update({v: k for k, v in swaps.items()})
    return "".join(full.get(ch, ch) for ch in word)


def power_word(variant: str, n: int) -> str:
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}; choose from {', '.join(VARIANTS)}")
    if n < 1:
        raise ValueError("power must be >= 1")
    return VARIANTS[variant] * n


def power_length(variant: str, n: int) -> int:
    d = diagram()
    return length(evaluate(d, d.parse_word(power_word(variant, n))))


def power_is_ulg(variant: str, n: int, *, max_states: int = 10**7) -> bool:
    """True iff variant^n is a u.l.g. Raises ResourceLimitError past the state cap."""
    if variant not in ("w", "w2", "w3"):
        raise ValueError("power_is_ulg applies to w, w2 and w3")
    d = diagram()
    return is_ulg(d, d.parse_word(power_word(variant, n)), max_states=max_states)


def normal_form_identity(n: int) -> bool:
    """w^n equals 1a3 (1b23a4)^(2n-1) 2b4, the middle factor is reduced, and
    l(w^n) >= 12n - 12."""
    if n < 1:
        raise ValueError("n must be >= 1")
    d = diagram()
    lhs = evaluate(d, d.parse_word(power_word("w", n)))
    mid = d.parse_word(_NF_MID * (2 * n - 1))
    rhs = evaluate(d, d.parse_word(_NF_HEAD) + mid + d.parse_word(_NF_TAIL))
    return lhs == rhs and is_reduced(d, mid) and length(lhs) >= 12 * n - 12


# case corpus

@dataclass(frozen=True)
class CaseRecord:
    case_id: int
    word: str
    mechanisms: tuple[str, ...]


@dataclass(frozen=True)
class CaseResult:
    case_id: int
    claim: str
    observed: str
    status: str  # pass, fail, prose-only or flag

    def tsv(self) -> str:
        return f"{self.case_id}\t{self.claim}\t{self.observed}\t{self.status}"


def _corpus_path(name: str) -> Path:
    override = os.environ.get("ULG_CORPUS_DIR")
    if override:
        return Path(override) / name
    return Path(str(resources.files("ulg") / "data" / name))


def load_cases(path: str | os.PathLike | None = None) -> list[CaseRecord]:
    """Read `<id><TAB><word><TAB><mechanism[,mechanism]>` lines; # starts a comment."""
    p = Path(path) if path is not None else _corpus_path("dtilde6_cases.tsv")
    out = []
    for lineno, raw in enumerate(p.read_text(encoding="utf-8").splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 3:
            raise ValueError(f"{p}:{lineno}: expected three tab-separated fields")
        mechs = tuple(m.strip() for m in parts[2].split(","))
        bad = [m for m in mechs if m not in MECHANISMS]
        if bad:
            raise ValueError(f"{p}:{lineno}: unknown mechanism {bad[0]!r}")
        out.append(CaseRecord(int(parts[0]), "".join(parts[1].split()), mechs))
    out.sort(key=lambda r: r.case_id)
    return out


def _word_len(d: CoxeterDiagram, text: str) -> tuple[int, int]:
    word = d.parse_word(text)
    return length(evaluate(d, word)), len(word)


def _not_reduced(d: CoxeterDiagram, case_id: int, text: str, what: str = "") -> CaseResult:
    ell, size = _word_len(d, text)
    claim = f"{what or text} not reduced"
    return CaseResult(case_id, claim, f"length {ell} of {size}", "pass" if ell < size else "fail")


def _not_ulg(d: CoxeterDiagram, case_id: int, text: str) -> CaseResult:
    word = d.parse_word(text)
    reduced = is_reduced(d, word)
    ulg = reduced and is_ulg(d, word)
    observed = f"reduced={str(reduced).lower()} ulg={str(ulg).lower()}"
    return CaseResult(case_id, f"{text} not a u.l.g.", observed, "fail" if ulg else "pass")


# displayed rewrites from the case discussion
_CASE27_PAIR = ("a1ab4b3bab4b3b", "a14bab3b4bab3b")
_CASE52_SUFFIX = "a2ab3b4ba1a2aba1a2a"
_CASE23_EXTENSION = "a1aba2a1ab4b3ba2ab4ba1a"
_NOT_REDUCED_BY_PROOF = {28, 33, 36, 59, 60, 62, 68}


def _proof_case(d: CoxeterDiagram, rec: CaseRecord, by_id: dict[int, CaseRecord]) -> CaseResult:
    cid, word = rec.case_id, rec.word
    if cid in _NOT_REDUCED_BY_PROOF:
        return _not_reduced(d, cid, word)
    if cid == 17:
        return CaseResult(cid, "letter spacing argument on the periodic word", "no word-level check", "prose-only")
    if cid == 27:
        u, v = (d.parse_word(x) for x in _CASE27_PAIR)
        same = evaluate(d, u) == evaluate(d, v) and d.label(u) == d.label(v) and u != v
        ulg = is_ulg(d, d.parse_word(word))
        observed = f"same element and label={str(same).lower()} ulg={str(ulg).lower()}"
        return CaseResult(cid, f"{_CASE27_PAIR[0]} = {_CASE27_PAIR[1]}, not a u.l.g.", observed,
                          "pass" if same and not ulg else "fail")
    if cid == 52:
        ok = word.endswith(_CASE52_SUFFIX)
        res = _not_reduced(d, cid, _CASE52_SUFFIX, f"suffix {_CASE52_SUFFIX}")
        if not ok:
            return CaseResult(cid, res.claim, "suffix not found in the case word", "fail")
        return res
    if cid == 23:
        return _not_reduced(d, cid, _CASE23_EXTENSION, f"extension {_CASE23_EXTENSION}")
    if cid == 31:
        other = by_id.get(23)
        mirrored = other is not None and word[::-1] == other.word
        ext = _CASE23_EXTENSION[::-1]
        ell, size = _word_len(d, ext)
        ok = mirrored and ell < size
        observed = f"reverse equals case 23={str(mirrored).lower()}; {ext} length {ell} of {size}"
        return CaseResult(cid, "reverse of case 23; reversed extension not reduced", observed,
                          "pass" if ok else "fail")
    if cid == 5:
        image = letter_map(word, {"3": "4"})
        other = by_id.get(6)
        target = other.word if other else ""
        if image == target:
            return CaseResult(cid, "3<->4 image equals case 6", image, "pass")
        prefix = bool(target) and target.startswith(image)
        return CaseResult(
            cid, "3<->4 image equals case 6",
            f"image {image} differs from {target}" + ("; it is a proper prefix" if prefix else ""),
            "flag",
        )
    return CaseResult(cid, "discussed case", "no check defined", "flag")


def _unlisted_case(d: CoxeterDiagram, rec: CaseRecord) -> CaseResult:
    word = d.parse_word(rec.word)
    reduced = is_reduced(d, word)
    ulg = reduced and is_ulg(d, word)
    observed = f"reduced={str(reduced).lower()} ulg={str(ulg).lower()}"
    if not ulg:
        return CaseResult(rec.case_id, "unclassified; ruled out", observed, "pass")
    return CaseResult(rec.case_id, "unclassified", observed + "; still a u.l.g. prefix", "flag")


def _check_case(d: CoxeterDiagram, rec: CaseRecord, by_id: dict[int, CaseRecord]) -> list[CaseResult]:
    out = []
    for mech in rec.mechanisms:
        if mech in ("XYXY_NOT_REDUCED", "XYX_DOTS_XYX_NOT_REDUCED"):
            out.append(_not_reduced(d, rec.case_id, rec.word))
        elif mech == "XY_DOTS_YXY_NOT_ULG":
            out.append(_not_ulg(d, rec.case_id, rec.word))
        elif mech == "PROOF_HANDLED":
            out.append(_proof_case(d, rec, by_id))
        else:
            out.append(_unlisted_case(d, rec))
    return out


def run_case_corpus(cases: list[CaseRecord] | None = None, *, threads: int = 1) -> list[CaseResult]:
    """Check every case by its mechanism. Results are ordered by case id; a
    case listed under two mechanisms yields two rows."""
    if cases is None:
        cases = load_cases()
    d = diagram()
    by_id = {r.case_id: r for r in cases}
    ordered = sorted(cases, key=lambda r: r.case_id)
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            chunks = list(pool.map(lambda r: _check_case(d, r, by_id), ordered))
    else:
        chunks = [_check_case(d, r, by_id) for r in ordered]
    return [res for chunk in chunks for res in chunk]


def format_case_report(results: list[CaseResult]) -> str:
    return "".join(r.tsv() + "\n" for r in results)


# fellow travelling

@dataclass
class FellowTravelProfile:
    window: int  # prefix length N of line B
    anchor: str
    distances: list[int]  # per vertex v_0..v_N of line B
    interior: tuple[int, int]  # inclusive index range that is analysed
    raw_min: int  # unanchored lines, all vertices

    @property
    def max(self) -> int:
        lo, hi = self.interior
        return max(self.distances[lo:hi + 1])

    @property
    def min(self) -> int:
        lo, hi = self.interior
        return min(self.distances[lo:hi + 1])


def _line(d: CoxeterDiagram, period: str, count: int, anchor: str = "") -> list[Element]:
    """Vertices anchor * prefix_k(period^oo) for k = 0..count."""
    p = d.parse_word(period)
    word = d.parse_word(anchor) + tuple(p[k % len(p)] for k in range(count))
    start = len(word) - count
    return [evaluate(d, word[:k]) for k in range(start, len(word) + 1)]


def _profile(d, line_a, line_b, offset, half):
    inv_a = [inverse(u) for u in line_a]
    out = []
    for i, v in enumerate(line_b):
        c = i + offset
        js = range(max(0, c - half), min(len(line_a), c + half + 1))
        out.append(min(length(multiply(inv_a[j], v)) for j in js))
    return out


def fellow_travel_profile(
    line_a: str = "w", line_b: str = "w2", anchor: str | None = None, n: int = 60, half_width: int = 12
) -> FellowTravelProfile:
    """Distances from the vertices of line B (started at `anchor`) to line A.

    For v_i, the minimum of l(u_j^-1 v_i) is taken over j within `half_width`
    of i + |anchor|. The analysed window drops the first and last |anchor|
    vertices. `raw_min` repeats the scan with both lines starting at 1.
    """
    if n < 1 or half_width < 12:
        raise ValueError("need n >= 1 and a window of at least 24 vertices")
    d = diagram()
    pa, pb = VARIANTS[line_a], VARIANTS[line_b]
    if anchor is None:
        anchor = ANCHORS.get(line_b, "")
    k = len(anchor)
    a_vertices = _line(d, pa, n + k + half_width)
    b_vertices = _line(d, pb, n, anchor)
    dist = _profile(d, a_vertices, b_vertices, k, half_width)
    raw = _profile(d, a_vertices, _line(d, pb, n), 0, half_width)
    lo, hi = k, n - k
    if lo > hi:
        raise ValueError("anchor too long for the window")
    return FellowTravelProfile(n, anchor, dist, (lo, hi), min(raw))
