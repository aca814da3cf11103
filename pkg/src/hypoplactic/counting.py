"""Exact counting for the hypoplactic world, with brute-force oracles.

Every count here is an exact integer; nothing in this module touches
floating point.  The brute-force routines enumerate words of a fixed
weight (multiset permutations), which is sound because congruent words
always share a weight.  Enumerations refuse oversized inputs with
TooLargeError instead of running unbounded.
"""

from __future__ import annotations

from itertools import accumulate
from math import comb
from typing import Iterator, Optional

from .graphs import CRYSTAL, explore_component
from .quasiribbon import (
    QuasiRibbonTableau,
    highest_weight_qrw,
    hypo_congruent,
    hypo_rsk,
    is_quasi_ribbon_word,
)
from .words import (
    Composition,
    Word,
    check_alphabet,
    coarsenings,
    format_composition,
    is_partition,
    weight,
    words_of_weight,
    words_over,
)
from .young import rsk


class TooLargeError(Exception):
    """Raised when a brute-force enumeration would be unreasonably big."""


MAX_BRUTE_WEIGHT = 10
MAX_BRUTE_WORDS = 200_000


def _validate_composition(shape) -> Composition:
    shape = tuple(shape)
    if any(not isinstance(p, int) or p < 1 for p in shape):
        raise ValueError("composition parts must be positive integers")
    return shape


def _guard_weight(shape: Composition) -> None:
    if sum(shape) > MAX_BRUTE_WEIGHT:
        raise TooLargeError(
            f"brute-force enumeration capped at weight {MAX_BRUTE_WEIGHT}, "
            f"got {format_composition(shape)!r}"
        )


def multinomial(total: int, parts) -> int:
    """Exact multinomial coefficient total! / (parts[0]! * ...)."""
    parts = tuple(parts)
    if total < 0 or any(p < 0 for p in parts):
        raise ValueError("multinomial arguments must be non-negative")
    if sum(parts) != total:
        raise ValueError(f"parts {parts} do not sum to {total}")
    result = 1
    remaining = total
    for p in parts:
        result *= comb(remaining, p)
        remaining -= p
    return result


def hypo_class_size(shape: Composition, n: int) -> int:
    """Size of any hypoplactic class whose tableau has the given shape,
    over the alphabet 1..n: an inclusion-exclusion over coarsenings."""
    shape = _validate_composition(shape)
    if n < 1:
        raise ValueError("n must be at least 1")
    if len(shape) > n:
        return 0
    total = 0
    for beta in coarsenings(shape):
        sign = -1 if (len(shape) - len(beta)) % 2 else 1
        total += sign * multinomial(sum(beta), beta)
    return total


def hypo_class_members(shape: Composition, n: int) -> list[Word]:
    """The hypoplactic class of the highest-weight word of the given
    shape, listed lexicographically.  Brute force: enumerate all words
    of that weight and keep those inserting to the same tableau."""
    shape = _validate_composition(shape)
    _guard_weight(shape)
    if n < 1:
        raise ValueError("n must be at least 1")
    if len(shape) > n:
        return []
    representative = highest_weight_qrw(shape)
    target = hypo_rsk(representative)[0]
    return [u for u in words_of_weight(shape) if hypo_rsk(u)[0] == target]


def hypo_class_size_brute(shape: Composition, n: int) -> int:
    """Oracle for hypo_class_size by direct enumeration."""
    return len(hypo_class_members(shape, n))


def novelli_recursion_check(alpha: Composition, n: int) -> bool:
    """Whether the coarsening sum of class sizes recovers the
    multinomial coefficient of ``alpha``.

    The summand for each coarser shape beta is the size of the class of
    shape beta and content ``alpha``; classes of one shape all have one
    size, so each summand is computed from the class of content beta
    instead.  Class sizes do not depend on the alphabet bound once the
    alphabet covers the content, so the check enumerates over
    max(n, len(alpha)) symbols.
    """
    alpha = _validate_composition(alpha)
    _guard_weight(alpha)
    if n < 1:
        raise ValueError("n must be at least 1")
    effective_n = max(n, len(alpha))
    total = sum(hypo_class_size_brute(beta, effective_n) for beta in coarsenings(alpha))
    return total == multinomial(sum(alpha), alpha)


def count_qrt(shape: Composition, n: int) -> int:
    """Number of quasi-ribbon tableaux of the given shape with entries
    in 1..n."""
    shape = _validate_composition(shape)
    if n < 1:
        raise ValueError("n must be at least 1")
    if len(shape) > n:
        return 0
    return comb(n + sum(shape) - len(shape), n - len(shape))


def qr_tableaux_of_shape(shape: Composition, n: int) -> Iterator[QuasiRibbonTableau]:
    """Generate every quasi-ribbon tableau of the given shape over 1..n."""
    shape = _validate_composition(shape)
    total = sum(shape)
    if total == 0:
        yield QuasiRibbonTableau()
        return
    breaks = set(accumulate(shape[:-1]))
    entries: list[int] = []

    def extend(idx: int, minimum: int) -> Iterator[QuasiRibbonTableau]:
        if idx == total:
            yield QuasiRibbonTableau(shape, tuple(entries))
            return
        for a in range(minimum, n + 1):
            entries.append(a)
            yield from extend(idx + 1, a + 1 if idx + 1 in breaks else a)
            entries.pop()

    yield from extend(0, 1)


def count_qrt_brute(shape: Composition, n: int) -> int:
    """Oracle for count_qrt by exhaustive filling."""
    shape = _validate_composition(shape)
    _guard_weight(shape)
    return sum(1 for _ in qr_tableaux_of_shape(shape, n))


def count_iso_plac_components_with_qrw(lam: Composition, n: int) -> int:
    """Number of crystal components isomorphic to a shape-``lam``
    component that contain a quasi-ribbon word component."""
    lam = tuple(lam)
    if not is_partition(lam):
        raise ValueError(f"expected a partition, got {lam}")
    if n < 1:
        raise ValueError("n must be at least 1")
    if not lam:
        return 1 if n >= 0 else 0
    if sum(lam) - lam[0] + 1 > n:
        return 0
    diffs = [lam[h] - lam[h + 1] for h in range(len(lam) - 1)] + [lam[-1]]
    return multinomial(lam[0], diffs)


def count_iso_plac_components_with_qrw_brute(lam: Composition, n: int) -> int:
    """Oracle: enumerate all words of length |lam| over 1..n, bucket
    them into crystal components by recording tableau, and among the
    shape-``lam`` components (all isomorphic, which is re-checked via
    signatures) count those holding a quasi-ribbon word."""
    lam = tuple(lam)
    if not is_partition(lam):
        raise ValueError(f"expected a partition, got {lam}")
    k = sum(lam)
    if n ** k > MAX_BRUTE_WORDS:
        raise TooLargeError(f"{n}^{k} words is beyond the enumeration cap")
    buckets: dict = {}
    for w in words_over(n, k):
        p, q = rsk(w)
        if p.shape != lam:
            continue
        entry = buckets.setdefault(q, {"qrw": False, "witness": w})
        if not entry["qrw"] and is_quasi_ribbon_word(w):
            entry["qrw"] = True
    signatures = {
        explore_component(entry["witness"], n, CRYSTAL).signature()
        for entry in buckets.values()
    }
    if len(signatures) > 1:
        raise AssertionError("same-shape crystal components must be isomorphic")
    return sum(1 for entry in buckets.values() if entry["qrw"])


def _qrw_with_weight(shape: Composition, gamma: tuple[int, ...]) -> Optional[Word]:
    """Reading of the quasi-ribbon tableau of the given shape and
    content, or None when that filling is not a tableau."""
    entries = [k for k, count in enumerate(gamma, start=1) for _ in range(count)]
    if len(entries) != sum(shape):
        return None
    try:
        return QuasiRibbonTableau(shape, entries).reading()
    except ValueError:
        return None


def factorization_count(w: Word, alpha: Composition, beta: Composition, n: int) -> int:
    """Number of two-factor products congruent to ``w`` whose factors
    are quasi-ribbon words of shapes ``alpha`` and ``beta``.

    Quasi-ribbon words are cross-sections of their classes, and
    congruence preserves weight, so candidates are indexed by the ways
    of splitting the weight of ``w``.
    """
    check_alphabet(w, n)
    if not is_quasi_ribbon_word(w):
        raise ValueError(f"{w} is not a quasi-ribbon word")
    alpha = tuple(alpha)
    beta = tuple(beta)
    if sum(alpha) + sum(beta) != len(w):
        raise ValueError("factor shapes must split the length of w")
    wt = weight(w)
    count = 0
    for left in _splits_of(wt, sum(alpha)):
        right = tuple(wt[k] - left[k] for k in range(len(wt)))
        u = _qrw_with_weight(alpha, left)
        v = _qrw_with_weight(beta, right)
        if u is None or v is None:
            continue
        if hypo_congruent(w, u + v):
            count += 1
    return count


def _splits_of(wt: tuple[int, ...], left_sum: int) -> Iterator[tuple[int, ...]]:
    """All componentwise splits of ``wt`` whose left part sums to
    ``left_sum``."""
    acc: list[int] = []

    def extend(k: int, remaining: int) -> Iterator[tuple[int, ...]]:
        if k == len(wt):
            if remaining == 0:
                yield tuple(acc)
            return
        if remaining > sum(wt[k:]):
            return
        for take in range(min(wt[k], remaining) + 1):
            acc.append(take)
            yield from extend(k + 1, remaining - take)
            acc.pop()

    yield from extend(0, left_sum)


def o_conjugacy_witness(u: Word, v: Word, n: int) -> Optional[Word]:
    """The decreasing word g = n .. 2 1 whenever ``u`` and ``v`` have
    equal weight, in which case ug = gv and gu = vg hold in the
    hypoplactic monoid; None when the weights differ."""
    check_alphabet(u, n)
    check_alphabet(v, n)
    if weight(u) != weight(v):
        return None
    g = tuple(range(n, 0, -1))
    if not (hypo_congruent(u + g, g + v) and hypo_congruent(g + u, v + g)):
        raise AssertionError("conjugacy witness failed its defining congruences")
    return g


def check_identity_xyxy(x: Word, y: Word, n: int) -> bool:
    """Whether xyxy and yxyx are hypoplactically congruent (they always
    are; this exists to be tested)."""
    check_alphabet(x, n)
    check_alphabet(y, n)
    return hypo_congruent(x + y + x + y, y + x + y + x)
