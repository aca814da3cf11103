"""Words over the ordered alphabet of positive integers, plus the
composition and partition arithmetic everything else is built on.

Conventions used throughout the package:

* a *word* is a tuple of positive integers; the empty tuple is the
  empty word; positions and symbols are 1-indexed on every public
  surface;
* a *weak composition* is a tuple of non-negative integers stored
  canonically with no trailing zeros, so equality of tuples is equality
  of weak compositions;
* a *composition* is a tuple of strictly positive integers;
* a *partition* is a non-increasing composition.

Words have a compact text form: a plain digit string when every symbol
is at most 9 ("4323"), comma-separated integers otherwise ("10,2,11").
The empty string is the empty word.  Compositions are always written as
comma-separated integers.
"""

from __future__ import annotations

from itertools import zip_longest
from typing import Iterable, Iterator

Word = tuple[int, ...]
Composition = tuple[int, ...]
WeakComposition = tuple[int, ...]


def weight(w: Word) -> WeakComposition:
    """Count how many times each symbol occurs in ``w``.

    The k-th term of the result is the number of symbols k; trailing
    zeros are stripped, so the result is canonical.
    """
    if not w:
        return ()
    counts = [0] * max(w)
    for a in w:
        counts[a - 1] += 1
    return tuple(counts)


def weight_leq(a: WeakComposition, b: WeakComposition) -> bool:
    """Dominance comparison: every prefix sum of ``a`` is at most the
    corresponding prefix sum of ``b`` (missing terms count as 0)."""
    sa = sb = 0
    for x, y in zip_longest(a, b, fillvalue=0):
        sa += x
        sb += y
        if sa > sb:
            return False
    return True


def standardize(w: Word) -> Word:
    """Relabel ``w`` as a standard word.

    The h-th occurrence of a symbol a (scanning left to right) is ranked
    below later occurrences of a and below all occurrences of larger
    symbols; replacing each position by its rank gives a permutation
    that preserves this order.  Standard words are fixed points.
    """
    order = sorted(range(len(w)), key=lambda h: (w[h], h))
    out = [0] * len(w)
    for rank, h in enumerate(order, start=1):
        out[h] = rank
    return tuple(out)


def is_standard(w: Word) -> bool:
    """Whether ``w`` contains each of 1..len(w) exactly once."""
    return sorted(w) == list(range(1, len(w) + 1))


def _require_standard(w: Word) -> None:
    if not is_standard(w):
        raise ValueError(f"expected a standard word, got {format_word(w)!r}")


def inverse_permutation(w: Word) -> Word:
    """Inverse of a standard word viewed as the permutation h -> w[h]."""
    _require_standard(w)
    inv = [0] * len(w)
    for h, a in enumerate(w, start=1):
        inv[a - 1] = h
    return tuple(inv)


def descent_set(w: Word) -> set[int]:
    """Positions h with w[h] > w[h+1], for a standard word (1-indexed)."""
    _require_standard(w)
    return {h for h in range(1, len(w)) if w[h - 1] > w[h]}


def composition_from_descents(descents: Iterable[int], total: int) -> Composition:
    """The unique composition of weight ``total`` whose proper partial
    sums are exactly ``descents``."""
    ds = sorted(set(descents))
    if any(not 0 < d < total for d in ds):
        raise ValueError(f"descents {ds} out of range for weight {total}")
    if total == 0:
        return ()
    parts = []
    prev = 0
    for d in ds + [total]:
        parts.append(d - prev)
        prev = d
    return tuple(parts)


def descent_composition(w: Word) -> Composition:
    """Composition of weight len(w) encoding the descent set of ``w``."""
    return composition_from_descents(descent_set(w), len(w))


def descents_of_composition(a: Composition) -> tuple[int, ...]:
    """Proper partial sums a[0], a[0]+a[1], ... (the last sum excluded)."""
    out = []
    s = 0
    for part in a[:-1]:
        s += part
        out.append(s)
    return tuple(out)


def coarser(b: Composition, a: Composition) -> bool:
    """Whether ``b`` arises from ``a`` by merging consecutive parts.

    Equivalently, every proper partial sum of ``b`` is a proper partial
    sum of ``a``.  Both compositions must have the same weight.
    """
    if sum(b) != sum(a):
        raise ValueError("coarser() requires compositions of equal weight")
    return set(descents_of_composition(b)) <= set(descents_of_composition(a))


def coarsenings(a: Composition) -> list[Composition]:
    """All compositions coarser than ``a``, each exactly once.

    The order is deterministic: subsets of the partial-sum set of ``a``
    are visited by descending bitmask, so ``a`` itself comes first and
    the one-part composition comes last.
    """
    ds = descents_of_composition(a)
    total = sum(a)
    out = []
    for mask in range((1 << len(ds)) - 1, -1, -1):
        subset = [d for j, d in enumerate(ds) if mask >> j & 1]
        out.append(composition_from_descents(subset, total))
    return out


def compositions(total: int) -> Iterator[Composition]:
    """All compositions of ``total``, via subsets of {1..total-1}."""
    if total < 0:
        raise ValueError("total must be non-negative")
    if total == 0:
        yield ()
        return
    for mask in range(1 << (total - 1)):
        descents = [j + 1 for j in range(total - 1) if mask >> j & 1]
        yield composition_from_descents(descents, total)


def max_decreasing_factorization(w: Word) -> list[Word]:
    """Split ``w`` into its maximal strictly decreasing factors."""
    factors: list[list[int]] = []
    for a in w:
        if factors and a < factors[-1][-1]:
            factors[-1].append(a)
        else:
            factors.append([a])
    return [tuple(f) for f in factors]


def has_inversion(w: Word, i: int) -> bool:
    """Whether ``w`` contains a symbol i+1 somewhere left of a symbol i."""
    if i < 1:
        raise ValueError("i must be at least 1")
    seen_upper = False
    for a in w:
        if a == i + 1:
            seen_upper = True
        elif a == i and seen_upper:
            return True
    return False


def schuetzenberger_involution(w: Word, n: int) -> Word:
    """Reverse ``w`` and replace each symbol a by n-a+1."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if any(a > n for a in w):
        raise ValueError(f"word {format_word(w)!r} has a symbol above {n}")
    return tuple(n - a + 1 for a in reversed(w))


_DIGITS = frozenset("123456789")


def parse_word(text: str) -> Word:
    """Parse the shared text form of a word (see module docstring)."""
    text = text.strip()
    if not text:
        return ()
    if all(ch in _DIGITS for ch in text):
        return tuple(int(ch) for ch in text)
    try:
        symbols = tuple(int(p.strip()) for p in text.split(","))
    except ValueError:
        raise ValueError(f"cannot parse word {text!r}") from None
    if any(a < 1 for a in symbols):
        raise ValueError(f"word symbols must be positive: {text!r}")
    return symbols


def format_word(w: Word) -> str:
    if not w:
        return ""
    if all(a <= 9 for a in w):
        return "".join(str(a) for a in w)
    return ",".join(str(a) for a in w)


def parse_composition(text: str) -> Composition:
    """Parse comma-separated parts; surrounding parentheses are allowed."""
    text = text.strip().strip("()").strip()
    if not text:
        return ()
    try:
        parts = tuple(int(p.strip()) for p in text.split(","))
    except ValueError:
        raise ValueError(f"cannot parse composition {text!r}") from None
    if any(p < 1 for p in parts):
        raise ValueError(f"composition parts must be positive: {text!r}")
    return parts


def format_composition(a: Composition) -> str:
    return ",".join(str(p) for p in a)


def is_partition(a: Composition) -> bool:
    return all(a[h] >= a[h + 1] for h in range(len(a) - 1)) and all(p >= 1 for p in a)


def check_alphabet(w: Word, n: int) -> None:
    """Reject words mentioning symbols above the alphabet bound ``n``."""
    if n < 1:
        raise ValueError("alphabet bound must be at least 1")
    if any(a > n for a in w):
        raise ValueError(f"word {format_word(w)!r} has a symbol above {n}")


def words_over(n: int, length: int) -> Iterator[Word]:
    """All words of the given length over 1..n, lexicographically."""
    if length == 0:
        yield ()
        return
    for prefix in words_over(n, length - 1):
        for a in range(1, n + 1):
            yield prefix + (a,)


def _next_permutation(a: list[int]) -> bool:
    # Standard in-place step to the lexicographic successor.
    i = len(a) - 2
    while i >= 0 and a[i] >= a[i + 1]:
        i -= 1
    if i < 0:
        return False
    j = len(a) - 1
    while a[j] <= a[i]:
        j -= 1
    a[i], a[j] = a[j], a[i]
    a[i + 1:] = reversed(a[i + 1:])
    return True


def words_of_weight(gamma: WeakComposition) -> Iterator[Word]:
    """All words with the given weight, in lexicographic order.

    These are the multiset permutations of the multiset containing
    gamma[k-1] copies of each symbol k.
    """
    symbols = [k for k, count in enumerate(gamma, start=1) for _ in range(count)]
    if not symbols:
        yield ()
        return
    current = symbols[:]  # already sorted ascending, the lex minimum
    while True:
        yield tuple(current)
        if not _next_permutation(current):
            return
