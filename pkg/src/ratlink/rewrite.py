"""Sign-assigned tangle words and their reduction to one-signed form.

Each rule rewrites a word into another word with exactly the same continued
fraction value, so the isotopy class of the numerator closure never changes:

* untangling: ``s*a, -s*b, t...`` becomes ``s*(a-1), s, s*(b-1), -t...``
  (merged through the zero when ``b == 1``); crossings drop by one;
* zero merge: ``x, 0, y`` becomes ``x + y``; a trailing ``x, 0`` is dropped
  when something precedes it;
* unit absorption: a trailing ``x, s`` with ``s = +-1`` becomes ``x + s``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import DomainError, RewriteBudgetExceeded, SignsAgree
from .frac import LinkClass, Word, cf_eval, classify, format_word


def _sign(x: int) -> int:
    return (x > 0) - (x < 0)


def untangle_step(word: Sequence[int], i: int) -> Word:
    """Apply the untangling move to the pair at 0-based positions ``i, i+1``.

    Requires ``word[i] != 0`` and ``word[i+1]`` zero or of the opposite sign.
    Every entry after the rewritten block is negated.
    """
    w = tuple(word)
    if not 0 <= i < len(w) - 1:
        raise DomainError(f"index {i} has no right neighbour in {format_word(w)}")
    ci, cj = w[i], w[i + 1]
    s = _sign(ci)
    if s == 0 or _sign(cj) == s:
        raise SignsAgree(f"entries {ci}, {cj} at {i}, {i + 1} do not disagree in sign")
    a, b = abs(ci), abs(cj)
    head, tail = w[:i], w[i + 2:]

    if b == 0:
        if tail:
            return head + (ci + tail[0],) + tail[1:]
        if not head:
            raise DomainError(f"{format_word(w)} is already a terminal form")
        return head[:-1]

    neg_tail = tuple(-t for t in tail)
    if b >= 2:
        return head + (s * (a - 1), s, s * (b - 1)) + neg_tail
    # b == 1: the middle unit meets a zero and merges with what follows it
    if neg_tail:
        return head + (s * (a - 1), s + neg_tail[0]) + neg_tail[1:]
    return head + (s * (a - 1),)


def _merge_zero(w: Word) -> Word | None:
    for j in range(1, len(w) - 1):
        if w[j] == 0:
            return w[:j - 1] + (w[j - 1] + w[j + 1],) + w[j + 2:]
    if len(w) >= 3 and w[-1] == 0:
        return w[:-2]
    return None


def _absorb_unit(w: Word) -> Word | None:
    if len(w) >= 2 and abs(w[-1]) == 1:
        return w[:-2] + (w[-2] + w[-1],)
    return None


def _leftmost_disagreement(w: Word) -> int | None:
    for j in range(len(w) - 1):
        if w[j] != 0 and w[j + 1] != 0 and _sign(w[j]) != _sign(w[j + 1]):
            return j
    return None


@dataclass(frozen=True)
class Normalized:
    word: Word
    link_class: LinkClass
    trace: tuple[Word, ...]

    def trace_text(self) -> str:
        return "\n".join(format_word(w) for w in self.trace)


def normalize(word: Sequence[int]) -> Normalized:
    """Reduce an assigned word to a one-signed (or terminal) form.

    The trace starts with the input and lists one word per rewrite. Zeros are
    merged first, then a trailing unit is absorbed, then the leftmost sign
    disagreement is untangled.
    """
    w = tuple(word)
    if not w:
        raise DomainError("empty tangle word")
    budget = sum(abs(c) for c in w) + len(w)
    trace = [w]
    while True:
        nxt = _merge_zero(w)
        if nxt is None:
            nxt = _absorb_unit(w)
        if nxt is None:
            j = _leftmost_disagreement(w)
            if j is None:
                break
            nxt = untangle_step(w, j)
        w = nxt
        trace.append(w)
        if len(trace) > budget + 1:
            raise RewriteBudgetExceeded(f"no normal form for {format_word(trace[0])} within {budget} steps")
    return Normalized(w, classify(w), tuple(trace))


def is_reduced(word: Sequence[int]) -> bool:
    """True when no rewrite rule applies."""
    w = tuple(word)
    return _merge_zero(w) is None and _absorb_unit(w) is None and _leftmost_disagreement(w) is None


def values_along(trace: Sequence[Word]) -> list:
    return [cf_eval(w) for w in trace]
