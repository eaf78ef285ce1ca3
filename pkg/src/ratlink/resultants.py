"""Resolutions of rational shadows N[a_1' ... a_n'].

A shadow tangle with ``a`` crossings resolves to the integer tangle ``c`` for
every ``c`` in ``a, a-2, ..., -a``, in ``C(a, (a-|c|)/2)`` ways. The
distribution over all ``2**sum(a)`` crossing choices is accumulated exactly.
"""
from __future__ import annotations

import itertools
import math
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from typing import Callable, Iterator, Sequence

from .errors import DomainError, LimitExceeded, NotCanonical
from .frac import LinkClass, Word, class_of_pair, classify, is_canonical

Shadow = tuple[int, ...]


def as_shadow(entries: Sequence[int]) -> Shadow:
    shadow = tuple(int(a) for a in entries)
    if not shadow or any(a < 1 for a in shadow):
        raise DomainError(f"a shadow needs positive entries, got {list(entries)}")
    return shadow


def tangle_resolutions(a: int) -> list[tuple[int, int]]:
    """``(c, multiplicity)`` for one shadow tangle with ``a`` crossings, c descending."""
    return [(c, math.comb(a, (a - abs(c)) // 2)) for c in range(a, -a - 1, -2)]


def enumerate_assignments(shadow: Sequence[int]) -> Iterator[tuple[Word, int]]:
    """Every assigned word with its multiplicity, last tangle varying fastest."""
    options = [tangle_resolutions(a) for a in as_shadow(shadow)]
    for combo in itertools.product(*options):
        word = tuple(c for c, _ in combo)
        yield word, math.prod(m for _, m in combo)


@dataclass
class ResultantDistribution:
    """Multiplicity of each chiral class among all resolutions of a shadow."""

    counts: dict[LinkClass, int] = field(default_factory=dict)

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def amphi_counts(self) -> dict[LinkClass, int]:
        merged: dict[LinkClass, int] = defaultdict(int)
        for cls, n in self.counts.items():
            merged[cls.amphi_rep()] += n
        return dict(merged)

    def view(self, mirror_identified: bool = True) -> dict[LinkClass, int]:
        return self.amphi_counts() if mirror_identified else dict(self.counts)

    def distinct(self, mirror_identified: bool = True) -> set[LinkClass]:
        return set(self.view(mirror_identified))

    def count(self, cls: LinkClass, mirror_identified: bool = False) -> int:
        if mirror_identified:
            return self.amphi_counts().get(cls.amphi_rep(), 0)
        return self.counts.get(cls, 0)

    def rows(self, mirror_identified: bool = True,
             namer: Callable[[LinkClass], str] | None = None) -> list[dict]:
        """Serializable rows sorted by (crossing, p, q)."""
        out = []
        for cls, n in self.view(mirror_identified).items():
            q = cls.q_amphi if mirror_identified else cls.q_chiral
            row = {"p": cls.p, "q": q, "components": cls.components,
                   "crossing": cls.crossing_number}
            if namer is not None:
                row["name"] = namer(cls)
            row["count"] = n
            out.append(row)
        out.sort(key=lambda r: (r["crossing"], r["p"], r["q"]))
        return out


def _value_counts(shadow: Shadow, first: Callable[[int], bool] | None = None) -> dict[tuple[int, int], int]:
    # Fold right to left; resolutions sharing a suffix value share all prefixes.
    states: dict[tuple[int, int], int] = {(1, 0): 1}
    last = len(shadow) - 1
    for idx in range(last, -1, -1):
        options = tangle_resolutions(shadow[idx])
        if idx == 0 and first is not None:
            options = [(c, m) for c, m in options if first(c)]
        nxt: dict[tuple[int, int], int] = defaultdict(int)
        for (p, q), k in states.items():
            for c, m in options:
                np_, nq = c * p + q, p
                if nq < 0 or (nq == 0 and np_ < 0):
                    np_, nq = -np_, -nq
                nxt[(np_, nq)] += k * m
        states = nxt
    return states


def resultant_distribution(shadow: Sequence[int]) -> ResultantDistribution:
    """Exact distribution of resultants over all ``2**c`` crossing choices."""
    counts: dict[LinkClass, int] = defaultdict(int)
    for (p, q), k in _value_counts(as_shadow(shadow)).items():
        counts[class_of_pair(p, q)] += k
    return ResultantDistribution(dict(counts))


def brute_force_distribution(shadow: Sequence[int], crossing_limit: int = 20) -> ResultantDistribution:
    """Same contract as :func:`resultant_distribution`, by flipping every crossing.

    Each of the ``c`` crossings gets its own sign bit; a tangle's net twist is
    the signed sum of its crossings. No binomial counting is involved.
    """
    shadow = as_shadow(shadow)
    c = sum(shadow)
    if c > crossing_limit:
        raise LimitExceeded(f"{c} crossings exceeds the brute-force cap of {crossing_limit}")
    offsets = list(itertools.accumulate((0,) + shadow[:-1]))
    spans = [(off, (1 << a) - 1, a) for off, a in zip(offsets, shadow)]
    nets: Counter = Counter()
    for mask in range(1 << c):
        nets[tuple(2 * ((mask >> off) & bits).bit_count() - a for off, bits, a in spans)] += 1
    counts: dict[LinkClass, int] = defaultdict(int)
    for word, n in nets.items():
        counts[classify(word)] += n
    return ResultantDistribution(dict(counts))


def resultant_set(shadow: Sequence[int], mirror_identified: bool = True) -> set[LinkClass]:
    return resultant_distribution(shadow).distinct(mirror_identified)


def is_resultant(shadow: Sequence[int], target: LinkClass) -> bool:
    return target.amphi_rep() in resultant_set(shadow, mirror_identified=True)


def first_nonnegative_set(shadow: Sequence[int]) -> set[LinkClass]:
    """Distinct classes (mirror identified) from resolutions with ``c_1 >= 0``."""
    values = _value_counts(as_shadow(shadow), first=lambda c: c >= 0)
    return {class_of_pair(p, q).amphi_rep() for p, q in values}


def codim_resultant_count(shadow: Sequence[int], k: int) -> int:
    """Distinct classes (mirror identified) with crossing number ``c(shadow) - k``."""
    shadow = as_shadow(shadow)
    if not is_canonical(shadow):
        raise NotCanonical(f"{list(shadow)} is not a canonical word")
    target = sum(shadow) - k
    return sum(1 for cls in resultant_set(shadow) if cls.crossing_number == target)
