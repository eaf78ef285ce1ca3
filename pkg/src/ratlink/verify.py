"""Acceptance checks, runnable from the CLI (``ratlink verify-paper``) or pytest.

Each check returns a pass flag and a short detail string; failures name the
offending inputs so the report can be read without rerunning anything.
"""
from __future__ import annotations

import random
import time
from collections import Counter
from dataclasses import dataclass
from typing import Callable

from .counting import codim_upper_bound, max_unique_resultants
from .fertility import (
    _canonical_words,
    default_catalog,
    fertility_number,
    generate_rational_classes,
    is_fertile,
    load_families,
    rational_fertility_number,
    verify_local_fertility_threshold,
)
from .frac import cf_eval, class_of_pair, classify
from .resultants import brute_force_distribution, resultant_distribution, resultant_set
from .rewrite import normalize

SEED = 20240601


@dataclass(frozen=True)
class CheckResult:
    number: int
    title: str
    passed: bool
    detail: str
    seconds: float

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status}  [{self.number}] {self.title}: {self.detail} ({self.seconds:.1f}s)"


def _summary(failures: list, total: int, what: str) -> tuple[bool, str]:
    if not failures:
        return True, f"{total} {what} ok"
    shown = "; ".join(str(f) for f in failures[:8])
    more = f" (+{len(failures) - 8} more)" if len(failures) > 8 else ""
    return False, f"{len(failures)}/{total} {what} failed: {shown}{more}"


def check_table_reproduction(slow: bool = False) -> tuple[bool, str]:
    failures, total = [], 0
    for entry in default_catalog():
        if entry.fertility is None:
            continue
        total += 1
        got = fertility_number(entry.word)
        if got != entry.fertility:
            failures.append(f"{entry.name} {list(entry.word)} table={entry.fertility} computed={got}")
    return _summary(failures, total, "rows")


def check_family_stability(slow: bool = False) -> tuple[bool, str]:
    failures = []
    families = load_families()
    for fam in families:
        values = {w: fertility_number(w) for w in fam.samples()}
        if len(set(values.values())) > 1:
            spread = ", ".join(f"{list(w)}->{f}" for w, f in values.items())
            failures.append(f"'{fam.pattern}' varies: {spread}")
    return _summary(failures, len(families), "families")


def check_point_values(slow: bool = False) -> tuple[bool, str]:
    unlink, hopf, four = class_of_pair(0, 1), class_of_pair(2, 1), class_of_pair(4, 1)
    failures = []

    def amphi(shadow):
        return resultant_distribution(shadow).amphi_counts()

    d2 = amphi([2])
    if d2 != {unlink: 2, hopf: 2}:
        failures.append(f"N[2'] gave {d2}")
    for a, want in ((10, (252, 240)), (12, (924, 990))):
        d = amphi([a])
        got = (d.get(unlink, 0), d.get(four, 0))
        if got != want:
            failures.append(f"N[{a}'] unlinks/4^2_1 = {got}, expected {want}")
    n = len(resultant_set([2, 2, 2, 2]))
    if n != 11:
        failures.append(f"N[2 2 2 2] has {n} distinct resultants")
    bound = max_unique_resultants([2, 2, 2, 2])
    if bound != 54:
        failures.append(f"max_unique_resultants([2,2,2,2]) = {bound}")
    return _summary(failures, 5, "values")


FR_WORDS = ((2, 2, 1, 1, 1, 1, 1, 2), (2, 1, 1, 2, 1, 1, 1, 2), (2, 2, 2, 1, 1, 1, 2), (2, 2, 2, 2, 1, 2))


def check_rational_fertility(slow: bool = False) -> tuple[bool, str]:
    failures = []
    for w in FR_WORDS:
        got = rational_fertility_number(w)
        if got != 8:
            failures.append(f"{list(w)} -> {got}")
    return _summary(failures, len(FR_WORDS), "words")


def random_shadow(rng: random.Random, max_crossing: int) -> tuple[int, ...]:
    c = rng.randint(1, max_crossing)
    cuts = sorted(rng.sample(range(1, c), rng.randint(0, min(c - 1, 6)))) if c > 1 else []
    bounds = [0, *cuts, c]
    return tuple(b - a for a, b in zip(bounds, bounds[1:]))


def check_oracle(slow: bool = False) -> tuple[bool, str]:
    rng = random.Random(SEED)
    shadows = [e.word for e in default_catalog() if e.crossing <= 12]
    shadows += [random_shadow(rng, 14) for _ in range(200)]
    failures = [list(s) for s in shadows
                if resultant_distribution(s).counts != brute_force_distribution(s).counts]
    return _summary(failures, len(shadows), "shadows")


def random_word(rng: random.Random) -> tuple[int, ...]:
    return tuple(rng.randint(-6, 6) for _ in range(rng.randint(1, 7)))


def check_rewrite(slow: bool = False, samples: int = 100_000) -> tuple[bool, str]:
    rng = random.Random(SEED)
    failures = []
    for _ in range(samples):
        w = random_word(rng)
        res = normalize(w)
        start = cf_eval(w)
        if any(cf_eval(step) != start for step in res.trace) or res.link_class != classify(w):
            failures.append(list(w))
    return _summary(failures, samples, "words")


def check_structure(slow: bool = False) -> tuple[bool, str]:
    failures, total = [], 0
    for c in range(2, 15):
        for w in _canonical_words(c):
            total += 1
            d = len(w)
            if d > c - 2:
                failures.append(f"{list(w)}: length {d} > c-2 = {c - 2}")
            if c > 12:
                continue
            levels = Counter(k.crossing_number for k in resultant_set(w))
            if levels[c] != 1:
                failures.append(f"{list(w)}: codim-0 count {levels[c]}")
            if levels[c - 1] > max(d - 1, 0):
                failures.append(f"{list(w)}: codim-1 count {levels[c - 1]} > d-1")
            if w == w[::-1] and levels[c - 1] > d // 2:
                failures.append(f"{list(w)}: palindrome codim-1 count {levels[c - 1]} > d/2")
            for k in (2, 3):
                bound = codim_upper_bound(d, k)
                if levels[c - k] > bound:
                    failures.append(f"{list(w)}: codim-{k} count {levels[c - k]} > {bound}")
            if c <= 10:
                failures.extend(_grid_failures(w))
    seven_seven = sum(1 for k in resultant_set((2, 1, 1, 1, 2)) if k.crossing_number == 6)
    if seven_seven != 2:
        failures.append(f"[2 1 1 1 2] codim-1 count {seven_seven}, expected 2")
    return _summary(failures, total, "canonical words")


def _grid_failures(w: tuple[int, ...]) -> list[str]:
    out = []
    found = resultant_set(w)
    for i in range(len(w)):
        bigger = w[:i] + (w[i] + 2,) + w[i + 1:]
        if not found <= resultant_set(bigger):
            out.append(f"{list(w)}: not contained in {list(bigger)}")
    if len(w) >= 3 and w[-1] % 2 == 0 and not resultant_set(w[:-2]) <= found:
        out.append(f"{list(w)}: misses resultants of {list(w[:-2])}")
    if len(w) >= 2 and w[-1] % 2 == 1:
        shorter = w[:-2] + (w[-2] + 1,)
        if not resultant_set(shorter) <= found:
            out.append(f"{list(w)}: misses resultants of {list(shorter)}")
    return out


def check_thresholds(slow: bool = False) -> tuple[bool, str]:
    failures, checked = [], 0
    for comps, n in ((2, 6), (1, 10)):
        report = verify_local_fertility_threshold(comps, n)
        checked += len(report.results)
        failures.extend(f"({comps},{n}) {list(w)}" for w in report.failures)
    if slow:
        # every long-enough word sits at the local-fertility ceiling
        for c in range(2, 15):
            for w in _canonical_words(c):
                cls = classify(w)
                if (cls.components == 2 and len(w) >= 4 and c <= 12) or (cls.components == 1 and len(w) >= 8):
                    checked += 1
                    want = 6 if cls.components == 2 else 7
                    if fertility_number(w) != want:
                        failures.append(f"{list(w)} F != {want}")
                if c >= 8 and is_fertile(w):
                    failures.append(f"{list(w)} fertile at {c} crossings")
    return _summary(failures, checked, "words")


TABLE_ONE = {1: (1, 1, 2, 3, 7), 2: (1, 1, 1, 3)}


def check_class_counts(slow: bool = False) -> tuple[bool, str]:
    failures = []
    for comps, top in ((1, 7), (2, 6)):
        counts = Counter(k.crossing_number for k in generate_rational_classes(top, comps))
        got = tuple(counts[c] for c in sorted(counts))
        if got != TABLE_ONE[comps]:
            failures.append(f"components={comps}: {got}, expected {TABLE_ONE[comps]}")
    return _summary(failures, 2, "tallies")


CRITERIA: list[tuple[int, str, Callable[..., tuple[bool, str]]]] = [
    (1, "fertility table reproduction", check_table_reproduction),
    (2, "starred family stability", check_family_stability),
    (3, "resultant point values", check_point_values),
    (4, "rational fertility spot checks", check_rational_fertility),
    (5, "enumerator vs brute-force oracle", check_oracle),
    (6, "rewrite soundness", check_rewrite),
    (7, "structural bounds", check_structure),
    (8, "local fertility thresholds", check_thresholds),
    (9, "rational class tallies", check_class_counts),
]


def run_check(number: int, slow: bool = False) -> CheckResult:
    for num, title, fn in CRITERIA:
        if num == number:
            t0 = time.perf_counter()
            ok, detail = fn(slow=slow)
            return CheckResult(num, title, ok, detail, time.perf_counter() - t0)
    raise KeyError(number)


def run_checks(slow: bool = False, only: list[int] | None = None) -> list[CheckResult]:
    numbers = only or [num for num, _, _ in CRITERIA]
    return [run_check(n, slow=slow) for n in numbers]
