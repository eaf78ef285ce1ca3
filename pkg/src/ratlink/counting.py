"""Closed-form resultant counts for short rational shadows.

Binomials whose lower index falls outside ``0..n`` count as zero. Formulas are
written as stated, without repairing double counts; the test suite compares
each one against the enumerator.
"""
from __future__ import annotations

import math
from typing import Sequence

from .errors import DomainError, ParityMismatch, UnsupportedCase
from .resultants import Shadow, as_shadow


def binom(n: int, k: int | float) -> int:
    """``C(n, k)``, zero when ``k`` is not an integer in ``0..n``."""
    if k != int(k):
        return 0
    k = int(k)
    if k < 0 or k > n or n < 0:
        return 0
    return math.comb(n, k)


def _half(n: int, k: int) -> int | float:
    return (n - k) / 2 if (n - k) % 2 else (n - k) // 2


def torus_resultant_count(a1: int, k: int) -> int:
    """Resolutions of N[a1'] equal to N[+k] (the same number give N[-k])."""
    if a1 < 1:
        raise DomainError("a1 must be positive")
    if (a1 - k) % 2:
        raise ParityMismatch(f"k={k} and a1={a1} differ in parity")
    if abs(k) > a1:
        raise DomainError(f"|k|={abs(k)} exceeds a1={a1}")
    return binom(a1, (a1 - abs(k)) // 2)


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise DomainError(msg)


def two_tangle_counts_even_even(a1: int, a2: int, k: int, l: int) -> tuple[int, int, int]:
    """(count of N[k l], count of N[(k-1) 1 (l-1)], count of unknots) for N[a1' a2']."""
    _require(a1 >= 2 and a2 >= 2 and a1 % 2 == 0 and a2 % 2 == 0, "a1, a2 must be even and positive")
    _require(k % 2 == 0 and l % 2 == 0 and k >= 2 and l >= 2, "k, l must be even and at least 2")
    pair = (binom(a1, _half(a1, k)) * binom(a2, _half(a2, l))
            + binom(a1, _half(a1, l)) * binom(a2, _half(a2, k)))
    c1 = binom(a1, a1 // 2)
    unknots = 2 ** a2 * c1 + (2 ** a1 - c1) * binom(a2, a2 // 2)
    return pair, pair, unknots


def two_tangle_counts_even_odd(a1: int, a2: int, k: int, l: int) -> tuple[int, int, int]:
    """(count of N[k l] = count of N[(k-1) 1 (l-1)], count of N[k+1], count of unknots)."""
    _require(a1 >= 2 and a1 % 2 == 0, "a1 must be even and positive")
    _require(a2 >= 1 and a2 % 2 == 1, "a2 must be odd and positive")
    _require(k >= 2 and k % 2 == 0, "k must be even and at least 2")
    _require(l >= 3 and l % 2 == 1, "l must be odd and at least 3")
    pair = 2 * binom(a1, _half(a1, k)) * binom(a2, _half(a2, l))
    torus = 2 * binom(a2, (a2 - 1) // 2) * (binom(a1, _half(a1, k)) + binom(a1, _half(a1, k + 2)))
    unknots = 2 ** a2 * binom(a1, a1 // 2) + 2 * binom(a1, (a1 - 2) // 2) * binom(a2, (a2 - 1) // 2)
    return pair, torus, unknots


def three_tangle_unknot_count(a1: int, a2: int, a3: int) -> int:
    """Unknots among resolutions of N[a1' a2' a3'] for parities (e, e, o) or (e, o, o)."""
    _require(min(a1, a2, a3) >= 1, "entries must be positive")
    parity = (a1 % 2, a2 % 2, a3 % 2)
    head = 2 ** (a2 + 1) * binom(a1, a1 // 2) * binom(a3, (a3 - 1) // 2)
    if parity == (0, 0, 1):
        inner = sum(
            binom(a1, _half(a1, c1)) * (binom(a3, _half(a3, c1 - 1)) + binom(a3, _half(a3, c1 + 1)))
            for c1 in range(2, a1 + 1, 2)
        )
        return (head
                + 2 * binom(a1, (a1 - 2) // 2) * binom(a2, (a2 - 2) // 2) * binom(a3, (a3 - 1) // 2)
                + 2 * binom(a2, a2 // 2) * inner)
    if parity == (0, 1, 1):
        return (head
                + 2 * binom(a1, (a1 - 2) // 2) * binom(a2, (a2 - 1) // 2) * binom(a3, _half(a3, 3))
                + 2 * binom(a2, (a2 - 1) // 2) * binom(a3, (a3 - 1) // 2) * (2 ** a1 - binom(a1, a1 // 2)))
    raise UnsupportedCase(f"no closed form for parities {parity}")


def max_unique_resultants(shadow: Sequence[int]) -> int:
    """Upper bound on distinct resultants: the first tangle fixes the sign convention."""
    s = as_shadow(shadow)
    return (s[0] + 2) // 2 * math.prod(a + 1 for a in s[1:])


def codim_upper_bound(d: int, k: int) -> int:
    """Bound on distinct resultants ``k`` crossings below the link, for length ``d``."""
    if d < 1:
        raise DomainError("length must be positive")
    if k == 2:
        return binom(d, 1) + binom(d - 1, 2)
    if k == 3:
        return binom(d, 1) * binom(d - 1, 1) + binom(d - 1, 3)
    raise UnsupportedCase(f"no codimension bound for k={k}")


def codim_upper_bound_poly(d: int, k: int) -> int:
    """Polynomial forms of :func:`codim_upper_bound`."""
    if k == 2:
        return (d * d - d + 2) // 2
    if k == 3:
        return (d ** 3 + 5 * d - 6) // 6
    raise UnsupportedCase(f"no codimension bound for k={k}")


def unlink_domination_threshold(k: int) -> int:
    """Least even ``n >= k`` with ``2 C(n, (n-k)/2) >= C(n, n/2)``."""
    if k < 2 or k % 2:
        raise DomainError("k must be even and at least 2")
    n = k
    while 2 * math.comb(n, (n - k) // 2) < math.comb(n, n // 2):
        n += 2
    return n


def domination_holds_poly(n: int, k: int) -> bool:
    """The same inequality after cancelling factorials: falling vs rising products of n/2."""
    h, j = n // 2, k // 2
    left = 2 * math.prod(h - i for i in range(j))
    right = math.prod(h + i for i in range(1, j + 1))
    return left >= right


def denominator_resolution_count(shadow: Sequence[int]) -> tuple[int, Shadow]:
    """D[a_1' ... a_n'] resolves into ``2**a_n`` copies of N[a_1' ... a_{n-1}'].

    For a single tangle the residual is empty, meaning every resolution is an unknot.
    """
    s = as_shadow(shadow)
    return 2 ** s[-1], s[:-1]


# --- formula versus enumerator -------------------------------------------

def _enumerated(shadow: Sequence[int]):
    from .resultants import resultant_distribution
    return resultant_distribution(shadow)


def compare_counts(kind: str, args: Sequence[int]) -> list[dict]:
    """Evaluate a closed form next to the matching enumerator count.

    ``kind`` is one of ``torus`` (a1 k), ``even-even`` (a1 a2 k l),
    ``even-odd`` (a1 a2 k l) or ``three`` (a1 a2 a3). Formulas that separate
    ``+k`` from ``-k`` or a link from its mirror are compared with chiral
    counts; those carrying an explicit factor of two for both chiralities are
    compared with mirror-identified counts.
    """
    from .frac import classify

    def row(quantity, formula, enumerated):
        return {"quantity": quantity, "formula_value": formula,
                "enumerated_value": enumerated, "agree": formula == enumerated}

    args = [int(a) for a in args]
    arity = {"torus": 2, "even-even": 4, "even-odd": 4, "three": 3}
    if kind not in arity:
        raise UnsupportedCase(f"unknown count kind {kind!r}")
    if len(args) != arity[kind]:
        raise DomainError(f"{kind} takes {arity[kind]} integers, got {len(args)}")

    if kind == "torus":
        a1, k = args
        formula = torus_resultant_count(a1, k)
        target = classify((k,))
        if k != 0 and target == classify((-k,)):
            formula *= 2  # N[k] and N[-k] are the same link
        return [row(f"N[{k}]", formula, _enumerated([a1]).count(target))]

    if kind == "even-even":
        a1, a2, k, l = args
        pair, second, unknots = two_tangle_counts_even_even(a1, a2, k, l)
        dist = _enumerated([a1, a2])
        # with k == l both summands count the same assignments, which land on
        # N[(k-1) 1 (k-1)] and on its mirror image
        return [
            row(f"N[{k} {l}]", pair, dist.count(classify((k, l)))),
            row(f"N[{k - 1} 1 {l - 1}]", second,
                dist.count(classify((k - 1, 1, l - 1)), mirror_identified=(k == l))),
            row("unknot", unknots, dist.count(classify((1,)))),
        ]

    if kind == "even-odd":
        a1, a2, k, l = args
        pair, torus, unknots = two_tangle_counts_even_odd(a1, a2, k, l)
        dist = _enumerated([a1, a2])
        return [
            row(f"N[{k} {l}]", pair, dist.count(classify((k, l)), mirror_identified=True)),
            row(f"N[{k - 1} 1 {l - 1}]", pair, dist.count(classify((k - 1, 1, l - 1)), mirror_identified=True)),
            row(f"N[{k + 1}]", torus, dist.count(classify((k + 1,)), mirror_identified=True)),
            row("unknot", unknots, dist.count(classify((1,)))),
        ]

    a1, a2, a3 = args
    formula = three_tangle_unknot_count(a1, a2, a3)
    return [row("unknot", formula, _enumerated([a1, a2, a3]).count(classify((1,))))]
