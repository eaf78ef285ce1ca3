"""Fertility of rational links, the named-link catalog, and trunk/branch machinery.

A link ``L`` is ``m``-fertile when every prime link with the same number of
components and at most ``m`` crossings arises as a resultant of a minimal
shadow of ``L`` (mirror images identified). Below 8 crossings for knots and 7
for two-component links every prime target is rational, so the targets are
generated exhaustively from canonical words; above those bounds non-rational
targets appear and the fertility number of a rational link stops growing.
"""
from __future__ import annotations

import csv
import io
import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Iterable, Sequence

from .errors import CatalogInconsistent, DomainError, NotCanonical, Undefined
from .frac import LinkClass, Word, canonical_word, classify, is_canonical, parse_word
from .resultants import resultant_set

KNOT_CAP = 7
LINK_CAP = 6
MAX_GENERATED_CROSSING = 16

# smallest crossing number of a nontrivial prime link, by component count
_FLOOR = {1: 3, 2: 2}


def fertility_cap(components: int) -> int:
    """Largest crossing number below which every prime target is rational."""
    return KNOT_CAP if components == 1 else LINK_CAP


# --- target generation ---------------------------------------------------

def _canonical_words(c: int) -> Iterable[Word]:
    """All-positive words summing to ``c`` with both ends at least 2."""
    if c >= 2:
        yield (c,)
    for first in range(2, c - 1):
        for last in range(2, c - first + 1):
            middle = c - first - last
            if middle == 0:
                yield (first, last)
                continue
            # compositions of the middle: choose cut points
            for cuts in itertools.product((0, 1), repeat=middle - 1):
                parts, run = [], 1
                for cut in cuts:
                    if cut:
                        parts.append(run)
                        run = 1
                    else:
                        run += 1
                parts.append(run)
                yield (first, *parts, last)


@lru_cache(maxsize=None)
def _classes_at(c: int) -> frozenset[LinkClass]:
    return frozenset(classify(w).amphi_rep() for w in _canonical_words(c))


def generate_rational_classes(max_crossing: int, components: int | None = None) -> frozenset[LinkClass]:
    """One class per rational link type with ``2 <= crossing <= max_crossing``.

    Classes are mirror-identified representatives; the unknot and unlink are
    excluded. ``components`` filters to knots (1) or two-component links (2).
    """
    if max_crossing > MAX_GENERATED_CROSSING:
        raise DomainError(f"max_crossing={max_crossing} exceeds {MAX_GENERATED_CROSSING}")
    out: set[LinkClass] = set()
    for c in range(2, max_crossing + 1):
        out.update(k for k in _classes_at(c) if components is None or k.components == components)
    return frozenset(out)


def _targets_by_crossing(components: int, top: int) -> dict[int, frozenset[LinkClass]]:
    return {
        c: frozenset(k for k in _classes_at(c) if k.components == components)
        for c in range(_FLOOR[components], top + 1)
    }


# --- fertility numbers ---------------------------------------------------

def _nontrivial(word: Sequence[int]) -> LinkClass:
    cls = classify(tuple(word))
    if cls.is_trivial:
        raise Undefined(f"{list(word)} closes to an unknot or unlink")
    return cls


def _coverage(cls: LinkClass, top: int) -> int:
    """Largest populated crossing level ``m <= top`` with every target up to ``m`` present."""
    found = resultant_set(canonical_word(cls), mirror_identified=True)
    best = _FLOOR[cls.components] - 1
    for c, targets in _targets_by_crossing(cls.components, top).items():
        if not targets:
            continue
        if not targets <= found:
            break
        best = c
    return best


def fertility_number(word: Sequence[int]) -> int:
    """F(L) for the rational link N[word], computed on its canonical shadow."""
    cls = _nontrivial(word)
    return _coverage(cls, fertility_cap(cls.components))


def rational_fertility_number(word: Sequence[int], max_crossing: int = 12) -> int:
    """As :func:`fertility_number`, but only rational targets, up to ``max_crossing``."""
    cls = _nontrivial(word)
    if max_crossing > MAX_GENERATED_CROSSING:
        raise DomainError(f"max_crossing={max_crossing} exceeds {MAX_GENERATED_CROSSING}")
    return _coverage(cls, max_crossing)


def is_fertile(word: Sequence[int]) -> bool:
    """Every prime target with fewer crossings than N[word] is a resultant.

    Past 8 crossings (knots) or 7 (links) some targets are not rational and
    cannot be resultants, so the answer there is False without computation.
    """
    cls = classify(tuple(word))
    if cls.is_trivial:
        return True
    c = cls.crossing_number
    if c > fertility_cap(cls.components) + 1:
        return False
    found = resultant_set(canonical_word(cls), mirror_identified=True)
    return all(t <= found for t in _targets_by_crossing(cls.components, c - 1).values())


# --- catalog -------------------------------------------------------------

@dataclass(frozen=True)
class CatalogEntry:
    name: str
    word: Word
    link_class: LinkClass
    crossing: int
    components: int
    fertility: int | None = None


@dataclass(frozen=True)
class Catalog:
    entries: tuple[CatalogEntry, ...]
    _by_name: dict = field(default_factory=dict, compare=False, repr=False)
    _by_key: dict = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self):
        for e in self.entries:
            self._by_name[e.name] = e
            self._by_key[e.link_class.amphi_key] = e

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, name: str) -> CatalogEntry:
        return self._by_name[name]

    def find(self, cls: LinkClass) -> CatalogEntry | None:
        return self._by_key.get(cls.amphi_key)

    def name_of(self, cls: LinkClass) -> str:
        """Catalog name when known, otherwise the ``p/q`` label."""
        entry = self.find(cls)
        return entry.name if entry is not None else cls.label()


def _data_text(filename: str) -> str:
    return resources.files("ratlink").joinpath("data", filename).read_text(encoding="utf-8")


def _rows(text: str) -> list[dict]:
    lines = [ln for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    return list(csv.DictReader(io.StringIO("\n".join(lines))))


def load_catalog(source: str | Path | None = None) -> Catalog:
    """Load and validate catalog rows (embedded data unless a path is given)."""
    text = _data_text("catalog.csv") if source is None else Path(source).read_text(encoding="utf-8")
    entries: list[CatalogEntry] = []
    names: set[str] = set()
    keys: dict[tuple[int, int], str] = {}
    for row in _rows(text):
        try:
            name = row["name"].strip()
            word = parse_word(row["word"])
            crossing = int(row["crossing"])
            components = int(row["components"])
            fert = (row.get("fertility") or "").strip()
        except (KeyError, ValueError, AttributeError) as exc:
            raise CatalogInconsistent(f"malformed catalog row {row}: {exc}") from None
        cls = classify(word)
        if cls.crossing_number != crossing or cls.components != components:
            raise CatalogInconsistent(
                f"{name}: word {list(word)} has crossing {cls.crossing_number} and "
                f"{cls.components} component(s), row says {crossing} and {components}")
        if name in names:
            raise CatalogInconsistent(f"duplicate name {name}")
        if cls.amphi_key in keys:
            raise CatalogInconsistent(f"{name} and {keys[cls.amphi_key]} are the same link")
        names.add(name)
        keys[cls.amphi_key] = name
        entries.append(CatalogEntry(name, word, cls, crossing, components, int(fert) if fert else None))
    return Catalog(tuple(entries))


@lru_cache(maxsize=1)
def default_catalog() -> Catalog:
    return load_catalog()


# --- starred families ----------------------------------------------------

@dataclass(frozen=True)
class Family:
    """Canonical words where each starred slot ``n*`` may grow by any even amount."""

    trunk: Word
    fertility: int
    slots: tuple[tuple[int, bool], ...]

    @property
    def pattern(self) -> str:
        return " ".join(f"{a}*" if star else str(a) for a, star in self.slots)

    @property
    def starred(self) -> tuple[int, ...]:
        return tuple(i for i, (_, star) in enumerate(self.slots) if star)

    def word(self, offsets: Sequence[int]) -> Word:
        """Instance with ``offsets[j]`` extra full twists in the j-th starred slot."""
        bump = dict(zip(self.starred, offsets))
        return tuple(a + 2 * bump.get(i, 0) for i, (a, _) in enumerate(self.slots))

    def samples(self, ks: Sequence[int] = (0, 1, 2)) -> list[Word]:
        """All starred slots raised together, and each slot raised alone."""
        n = len(self.starred)
        out = [self.word([k] * n) for k in ks]
        for j in range(n):
            for k in ks:
                offs = [0] * n
                offs[j] = k
                out.append(self.word(offs))
        return list(dict.fromkeys(out))


def _parse_pattern(text: str) -> tuple[tuple[int, bool], ...]:
    slots = []
    for tok in text.split():
        star = tok.endswith("*")
        slots.append((int(tok.rstrip("*")), star))
    return tuple(slots)


def load_families(source: str | Path | None = None) -> list[Family]:
    text = _data_text("families.csv") if source is None else Path(source).read_text(encoding="utf-8")
    return [
        Family(parse_word(r["trunk"]), int(r["fertility"]), _parse_pattern(r["pattern"]))
        for r in _rows(text)
    ]


# --- trunks and branches -------------------------------------------------

_END_PAIRS = ((2, 2), (3, 2), (3, 3))


@dataclass(frozen=True)
class Trunk:
    length: int
    members: tuple[Word, ...]

    def with_components(self, components: int) -> tuple[Word, ...]:
        return tuple(w for w in self.members if classify(w).components == components)


@lru_cache(maxsize=None)
def trunk(length: int) -> Trunk:
    """Least-twisted canonical words of a given length, one per link type."""
    if length < 1:
        raise DomainError("trunk length must be at least 1")
    if length == 1:
        return Trunk(1, ((2,), (3,)))
    members = []
    seen: set[tuple[int, int]] = set()
    for first, last in _END_PAIRS:
        for middle in itertools.product((1, 2), repeat=length - 2):
            w = (first, *middle, last)
            # equal ends: a word and its reversal close to the same link up to mirror
            if first == last and w[::-1] < w:
                continue
            key = classify(w).amphi_key
            if key not in seen:
                seen.add(key)
                members.append(w)
    return Trunk(length, tuple(sorted(members)))


def g(length: int, components: int) -> int:
    """Smallest fertility number among trunk members with this component count."""
    words = trunk(length).with_components(components)
    if not words:
        raise Undefined(f"no {components}-component links in the length-{length} trunk")
    return min(fertility_number(w) for w in words)


def branch_decompose(word: Sequence[int]) -> tuple[Word, tuple[int, ...]]:
    """Split a canonical word into its trunk parent and even twist offsets."""
    w = tuple(word)
    if not is_canonical(w):
        raise NotCanonical(f"{list(w)} is not a canonical word")
    last = len(w) - 1
    parent = tuple(
        (3 if a % 2 else 2) if i in (0, last) else (1 if a % 2 else 2)
        for i, a in enumerate(w)
    )
    return parent, tuple((a - p) // 2 for a, p in zip(w, parent))


@dataclass(frozen=True)
class LocalFertilityReport:
    components: int
    n: int
    k: int
    results: tuple[tuple[Word, int, bool], ...]

    @property
    def passed(self) -> bool:
        return all(ok for _, _, ok in self.results)

    @property
    def failures(self) -> tuple[Word, ...]:
        return tuple(w for w, _, ok in self.results if not ok)


def verify_local_fertility_threshold(components: int, n: int) -> LocalFertilityReport:
    """Check the sufficient condition for every length-``>= n`` link to be locally fertile.

    The words checked are the trunk members of lengths ``n-1`` and ``n-2`` with
    the right component count, plus ``[2 1^(n-2) 2]`` when it has that count.
    """
    if components not in (1, 2):
        raise DomainError("components must be 1 or 2")
    if n < 3:
        raise DomainError("n must be at least 3")
    k = fertility_cap(components)
    words = list(trunk(n - 1).with_components(components)) + list(trunk(n - 2).with_components(components))
    spine = (2,) + (1,) * (n - 2) + (2,)
    if classify(spine).components == components:
        words.append(spine)
    results = []
    for w in words:
        f = fertility_number(w)
        results.append((w, f, f >= k))
    return LocalFertilityReport(components, n, k, tuple(results))
