"""Continued fractions of rational tangles and the classification of their closures.

A tangle word ``(a_1, ..., a_n)`` has the value ``a_1 + 1/(a_2 + 1/(... + 1/a_n))``.
The numerator closure of a tangle with reduced value ``p/q`` is the two-bridge
link ``b(|p|, q)``; two such links agree iff the numerators agree and the
denominators are congruent to each other or inverse to each other mod ``p``.
Mirror images are related by ``q -> -q``.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import DomainError, NoCanonicalWord

Word = tuple[int, ...]


@dataclass(frozen=True)
class ProjectiveRational:
    """Reduced fraction ``p/q`` on the projective line; ``1/0`` is infinity."""

    p: int
    q: int

    def __post_init__(self):
        if self.q < 0 or (self.q == 0 and self.p != 1) or math.gcd(self.p, self.q) != 1:
            raise ValueError(f"unnormalized projective rational {self.p}/{self.q}")

    @classmethod
    def of(cls, p: int, q: int) -> "ProjectiveRational":
        if p == 0 and q == 0:
            raise ValueError("0/0 is not a projective rational")
        g = math.gcd(p, q)
        p, q = p // g, q // g
        if q < 0 or (q == 0 and p < 0):
            p, q = -p, -q
        return cls(p, q)

    @property
    def is_infinite(self) -> bool:
        return self.q == 0

    def __str__(self) -> str:
        return "inf" if self.q == 0 else f"{self.p}/{self.q}"


def _cf_pair(word: Sequence[int]) -> tuple[int, int]:
    # right-to-left unimodular recurrence; total on zeros
    p, q = word[-1], 1
    for a in reversed(word[:-1]):
        p, q = a * p + q, p
    return p, q


def cf_eval(word: Sequence[int]) -> ProjectiveRational:
    """Exact projective value of a nonempty tangle word (zeros allowed)."""
    if len(word) == 0:
        raise DomainError("empty tangle word")
    return ProjectiveRational.of(*_cf_pair(word))


def cf_expand(p: int, q: int) -> Word:
    """Regular continued fraction of ``p/q`` for ``p >= 0``, ``q > 0``.

    The last term is at least 2 unless the value is an integer.
    """
    if q <= 0 or p < 0:
        raise ValueError("cf_expand needs p >= 0 and q > 0")
    terms = []
    while q:
        a, r = divmod(p, q)
        terms.append(a)
        p, q = q, r
    return tuple(terms)


@dataclass(frozen=True, order=True)
class LinkClass:
    """Isotopy class of the numerator closure of a rational tangle.

    ``q_chiral`` is the least element of ``{q, q^-1} mod p`` and ``q_amphi`` the
    least element of ``{+-q, +-q^-1} mod p``. Both are 0 for the unknot (p = 1)
    and the two-component unlink (p = 0).
    """

    p: int
    q_chiral: int
    q_amphi: int
    components: int
    crossing_number: int

    @property
    def chiral_key(self) -> tuple[int, int]:
        return (self.p, self.q_chiral)

    @property
    def amphi_key(self) -> tuple[int, int]:
        return (self.p, self.q_amphi)

    @property
    def is_trivial(self) -> bool:
        return self.p < 2

    def mirror(self) -> "LinkClass":
        if self.p < 2:
            return self
        return class_of_pair(self.p, self.p - self.q_chiral)

    def amphi_rep(self) -> "LinkClass":
        """The member of the mirror pair whose chiral key equals its amphichiral key."""
        if self.q_chiral == self.q_amphi:
            return self
        return self.mirror()

    def is_amphichiral(self) -> bool:
        return self.mirror() == self

    def label(self) -> str:
        if self.p == 0:
            return "0^2_1"
        if self.p == 1:
            return "0_1"
        return f"{self.p}/{self.q_amphi}"


@lru_cache(maxsize=None)
def class_of_pair(p: int, q: int) -> LinkClass:
    """Class of N[p/q] for a coprime pair (any signs, q may be 0)."""
    r = ProjectiveRational.of(p, q)
    big_p = abs(r.p)
    if big_p == 0:
        return LinkClass(0, 0, 0, 2, 0)
    if big_p == 1:
        return LinkClass(1, 0, 0, 1, 0)
    res = (r.q if r.p > 0 else -r.q) % big_p
    inv = pow(res, -1, big_p)
    chiral = min(res, inv)
    amphi = min(res, inv, big_p - res, big_p - inv)
    crossing = min(sum(cf_expand(big_p, x)) for x in {res, inv, big_p - res, big_p - inv})
    return LinkClass(big_p, chiral, amphi, 2 - big_p % 2, crossing)


def class_of(value: ProjectiveRational) -> LinkClass:
    return class_of_pair(value.p, value.q)


def classify(word: Sequence[int]) -> LinkClass:
    """Class of the numerator closure N[word]."""
    if len(word) == 0:
        raise DomainError("empty tangle word")
    return class_of_pair(*_cf_pair(tuple(word)))


def equivalent(w1: Sequence[int], w2: Sequence[int], mirror_identified: bool = False) -> bool:
    c1, c2 = classify(w1), classify(w2)
    if mirror_identified:
        return c1.amphi_key == c2.amphi_key
    return c1.chiral_key == c2.chiral_key


def canonical_word(cls: LinkClass) -> Word:
    """All-positive word of minimal crossing sum with first and last entries >= 2.

    Representatives from the class's own chiral orbit are preferred; the mirror
    orbit is used only when the class has no positive canonical word itself.
    Ties go to the lexicographically smallest word.
    """
    p = cls.p
    if p < 2:
        raise NoCanonicalWord(f"class with p={p} (unknot or unlink) has no canonical word")
    chiral = {cls.q_chiral, pow(cls.q_chiral, -1, p)}
    for orbit in (chiral, {p - x for x in chiral}):
        words = [cf_expand(p, x) for x in orbit if 2 * x <= p]
        words = [w for w in words if sum(w) == cls.crossing_number and w[0] >= 2 and w[-1] >= 2]
        if words:
            return min(words)
    raise AssertionError(f"no canonical word found for {cls}")


def is_canonical(word: Sequence[int]) -> bool:
    """True for all-positive words with both end entries at least 2."""
    return (
        len(word) > 0
        and all(a >= 1 for a in word)
        and word[0] >= 2
        and word[-1] >= 2
    )


def denominator_class(word: Sequence[int]) -> LinkClass:
    """Class of the denominator closure D[word] = N[word without its last entry]."""
    if len(word) == 0:
        raise DomainError("empty tangle word")
    if len(word) == 1:
        return class_of_pair(1, 0)
    return classify(word[:-1])


def reverse_word(word: Sequence[int]) -> Word:
    return tuple(reversed(word))


_FRACTION = re.compile(r"^\s*([+-]?\d+)\s*/\s*([+-]?\d+)\s*$")


def parse_word(text: str) -> Word:
    """Parse ``"3 2"``, ``"[3 2]"``, ``"3,2"`` or a fraction ``"7/2"`` into a word."""
    m = _FRACTION.match(text)
    if m:
        p, q = int(m.group(1)), int(m.group(2))
        if p == 0 and q == 0:
            raise DomainError("0/0 is not a fraction")
        r = ProjectiveRational.of(p, q)
        if r.is_infinite:
            return (1, 0)
        word = cf_expand(abs(r.p), r.q)
        return word if r.p >= 0 else tuple(-a for a in word)
    body = text.strip().strip("[]()")
    tokens = [t for t in re.split(r"[\s,]+", body) if t]
    if not tokens:
        raise DomainError(f"empty tangle word: {text!r}")
    try:
        return tuple(int(t) for t in tokens)
    except ValueError:
        raise DomainError(f"not a tangle word: {text!r}") from None


def format_word(word: Iterable[int]) -> str:
    return "[" + " ".join(str(a) for a in word) + "]"
