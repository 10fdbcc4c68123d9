"""Words over a signed generator alphabet.

A generator is a positive integer index and its formal inverse is the
negated index, so a word is a tuple of nonzero ints.  In letter notation
(valid up to 26 generators) ``a = 1``, ``A = -1``: the word "abA" is
``(1, 2, -1)``.  Relators are circular; circularity is realized through
rotation, front extension and modular indexing rather than a dedicated
cyclic container.
"""

from __future__ import annotations

Word = tuple[int, ...]


def word_from_letters(s: str) -> Word:
    """Parse letter notation, lowercase = generator, uppercase = inverse.

    >>> word_from_letters("abAB")
    (1, 2, -1, -2)
    """
    out = []
    for ch in s:
        if "a" <= ch <= "z":
            out.append(ord(ch) - ord("a") + 1)
        elif "A" <= ch <= "Z":
            out.append(-(ord(ch) - ord("A") + 1))
        else:
            raise ValueError(f"not a generator letter: {ch!r}")
    return tuple(out)


def letters(w: Word) -> str:
    """Inverse of :func:`word_from_letters`; only valid for indices <= 26."""
    out = []
    for s in w:
        if not 1 <= abs(s) <= 26:
            raise ValueError(f"symbol {s} has no letter form")
        out.append(chr(ord("a") + s - 1) if s > 0 else chr(ord("A") - s - 1))
    return "".join(out)


def invert(w: Word) -> Word:
    """Formal inverse: reverse the word and invert each symbol.

    >>> letters(invert(word_from_letters("aBc")))
    'CbA'
    """
    return tuple(-s for s in reversed(w))


def rotate_right(w: Word, i: int) -> Word:
    """Move the last ``i mod len(w)`` symbols to the front.

    >>> letters(rotate_right(word_from_letters("abc"), 1))
    'cab'
    """
    if i < 0:
        raise ValueError("rotation count must be non-negative")
    n = len(w)
    if n == 0:
        return w
    k = i % n
    if k == 0:
        return w
    return w[n - k:] + w[:n - k]


def free_reduce(w: Word) -> Word:
    """Cancel adjacent inverse pairs until none remain."""
    out: list[int] = []
    for s in w:
        if out and out[-1] == -s:
            out.pop()
        else:
            out.append(s)
    return tuple(out)


def cyclic_reduce(w: Word) -> Word:
    """Strip mutually inverse first/last symbols of a freely reduced word."""
    lo, hi = 0, len(w)
    while hi - lo >= 2 and w[lo] == -w[hi - 1]:
        lo += 1
        hi -= 1
    return w[lo:hi]


def reduce_cyclic_word(w: Word) -> Word:
    """Full normalization for a relator: free then cyclic reduction."""
    return cyclic_reduce(free_reduce(w))


def extend_front(w: Word, k: int) -> Word:
    """Append the first ``k`` symbols of ``w`` to its end.

    The extension is capped at one extra period: ``k`` may not exceed
    ``len(w)``.
    """
    if not 0 <= k <= len(w):
        raise ValueError(f"extension {k} out of range for word of length {len(w)}")
    return w + w[:k]


def useful_threshold(l_p: int) -> int:
    """Minimal useful common-substring length, ceil((l_p + 1) / 2)."""
    if l_p < 1:
        raise ValueError("empty pattern has no useful substring length")
    return (l_p + 2) // 2


def smallest_period(w: Word) -> int:
    """Smallest p dividing len(w) with w equal to its length-p prefix repeated.

    ``w`` is a nontrivial power iff the result is < len(w).

    >>> smallest_period(word_from_letters("abab"))
    2
    """
    n = len(w)
    if n < 1:
        raise ValueError("empty word has no period")
    for p in range(1, n + 1):
        if n % p == 0 and all(w[i] == w[i - p] for i in range(p, n)):
            return p
    return n  # unreachable: p = n always matches


def all_equivalents(w: Word) -> list[Word]:
    """All rotations of ``w`` and of its formal inverse."""
    n = len(w)
    if n == 0:
        return [w]
    inv = invert(w)
    return [rotate_right(w, i) for i in range(n)] + [rotate_right(inv, i) for i in range(n)]


def canonical_rep(w: Word) -> Word:
    """Lexicographically least equivalent of a cyclically reduced word.

    Equal for every rotation of ``w`` and of ``invert(w)``; used for
    duplicate detection.  Symbols compare by signed integer value.
    """
    if len(w) == 0:
        return w
    return min(all_equivalents(w))
