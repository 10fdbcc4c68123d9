"""Karp-Rabin fingerprints over sliding windows, with Bloom or exact backing.

Symbols are coded densely: code(g) = 2g for a generator, 2g + 1 for its
inverse.  Fingerprints are Horner evaluations of the code sequence modulo
a Mersenne prime, with the base drawn from the run seed so adversarial
collisions are improbable.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .match import Match, SearchCounters, match_from_seed
from .words import Word, extend_front, invert, useful_threshold

MERSENNE61 = (1 << 61) - 1

# one odd mixing constant per Bloom table
_BLOOM_MIX = (
    0x9E3779B97F4A7C15,
    0xC2B2AE3D27D4EB4F,
    0x165667B19E3779F9,
    0x27D4EB2F165667C5,
)


def symbol_code(s: int) -> int:
    """code(g_j) = 2j, code(g_j^-1) = 2j + 1."""
    if s == 0:
        raise ValueError("0 is not a symbol")
    return 2 * s if s > 0 else 1 - 2 * s


@dataclass(frozen=True)
class FingerprintParams:
    base: int
    modulus: int = MERSENNE61

    @staticmethod
    def from_seed(seed: int) -> "FingerprintParams":
        base = random.Random(seed).randrange(2, MERSENNE61 - 1)
        return FingerprintParams(base)

    def high_power(self, m: int) -> int:
        """base^(m-1) mod modulus, the weight of the outgoing code."""
        return pow(self.base, m - 1, self.modulus)


def fingerprint_codes(codes, params: FingerprintParams) -> int:
    if len(codes) == 0:
        raise ValueError("empty window has no fingerprint")
    v = 0
    for c in codes:
        v = (v * params.base + c) % params.modulus
    return v


def fp_init(w: Word, start: int, m: int, params: FingerprintParams) -> int:
    if m < 1 or start < 0 or start + m > len(w):
        raise ValueError(f"window [{start}, {start + m}) out of bounds")
    return fingerprint_codes([symbol_code(s) for s in w[start:start + m]], params)


def fp_roll(value: int, out_code: int, in_code: int, high: int,
            params: FingerprintParams) -> int:
    """Shift the window one symbol: drop out_code, append in_code."""
    return ((value - out_code * high) * params.base + in_code) % params.modulus


def _window_fingerprints(w: Word, m: int, params: FingerprintParams):
    """Fingerprints of all len(w) circular length-m windows, by rolling."""
    ext = extend_front(w, m - 1)
    high = params.high_power(m)
    v = fp_init(ext, 0, m, params)
    yield 0, v
    for i in range(1, len(w)):
        v = fp_roll(v, symbol_code(ext[i - 1]), symbol_code(ext[i + m - 1]), high, params)
        yield i, v


class BloomFilter:
    """k bit-tables of 2^log2_size bits; one bit per table per fingerprint."""

    def __init__(self, bits_per_fingerprint: int = 3, log2_size: int = 16):
        if bits_per_fingerprint not in (3, 4):
            raise ValueError("bits_per_fingerprint must be 3 or 4")
        if not 3 <= log2_size <= 30:
            raise ValueError("log2_size out of range")
        self.k = bits_per_fingerprint
        self.log2_size = log2_size
        self.tables = [bytearray(1 << (log2_size - 3)) for _ in range(self.k)]

    def _addresses(self, value: int):
        shift = 64 - self.log2_size
        for i in range(self.k):
            yield i, ((value * _BLOOM_MIX[i]) & 0xFFFFFFFFFFFFFFFF) >> shift

    def insert(self, value: int) -> None:
        for i, a in self._addresses(value):
            self.tables[i][a >> 3] |= 1 << (a & 7)

    def query(self, value: int) -> bool:
        return all(self.tables[i][a >> 3] >> (a & 7) & 1 for i, a in self._addresses(value))


def bloom_insert(b: BloomFilter, value: int) -> None:
    b.insert(value)


def bloom_query(b: BloomFilter, value: int) -> bool:
    return b.query(value)


class PatternIndex:
    """Per-pattern search state for the Karp-Rabin strategies.

    Indexes the 2*l_p minimal possibly-useful windows (all threshold-length
    circular windows of the pattern and of its formal inverse).  The
    backing store answers the first-stage membership probe: an exact hash
    table, or a Bloom filter whose hits are re-checked against the exact
    fingerprint set so false Bloom hits can be counted.
    """

    def __init__(self, p_word: Word, backing: str, params: FingerprintParams,
                 bloom_log2_size: int = 16):
        if backing not in ("exact", "bloom3", "bloom4"):
            raise ValueError(f"unknown backing {backing!r}")
        if len(p_word) < 1:
            raise ValueError("cannot index an empty pattern")
        self.backing = backing
        self.params = params
        self.m = useful_threshold(len(p_word))
        self.windows_inserted = 0
        # fingerprint value -> [(inverted, window start)], insertion order
        self.candidates: dict[int, list[tuple[bool, int]]] = {}
        self.bloom: BloomFilter | None = None
        if backing != "exact":
            self.bloom = BloomFilter(3 if backing == "bloom3" else 4, bloom_log2_size)
        for inverted, base in ((False, p_word), (True, invert(p_word))):
            for start, value in _window_fingerprints(base, self.m, params):
                self.candidates.setdefault(value, []).append((inverted, start))
                if self.bloom is not None:
                    self.bloom.insert(value)
                self.windows_inserted += 1


def build_pattern_index(p_word: Word, backing: str, params: FingerprintParams,
                        bloom_log2_size: int = 16) -> PatternIndex:
    return PatternIndex(p_word, backing, params, bloom_log2_size)


def kr_search(idx: PatternIndex, p_word: Word, t_word: Word,
              counters: SearchCounters | None = None) -> Match | None:
    """Roll a threshold-length fingerprint across the text and confirm hits."""
    l_p, l_t = len(p_word), len(t_word)
    if not 1 <= l_p <= l_t:
        raise ValueError("kr search requires 1 <= |pattern| <= |text|")
    if counters is None:
        counters = SearchCounters()
    m = idx.m
    bases = (p_word, invert(p_word))
    for tstart, value in _window_fingerprints(t_word, m, idx.params):
        counters.windows_scanned += 1
        if idx.bloom is not None:
            if not idx.bloom.query(value):
                continue
            counters.filter_hits += 1
            cands = idx.candidates.get(value)
            if cands is None:
                counters.bloom_false_hits += 1
                continue
        else:
            cands = idx.candidates.get(value)
            if cands is None:
                continue
            counters.filter_hits += 1
        counters.fingerprint_matches += 1
        t_window = tuple(t_word[(tstart + i) % l_t] for i in range(m))
        confirmed = None
        for inverted, pstart in cands:
            counters.confirmations += 1
            base = bases[inverted]
            if all(base[(pstart + i) % l_p] == t_window[i] for i in range(m)):
                confirmed = (inverted, pstart)
                break
        if confirmed is None:
            counters.fingerprint_false_matches += 1
            continue
        inverted, pstart = confirmed
        match = match_from_seed(p_word, t_word, inverted, pstart, tstart)
        if match is None:  # confirmed window already reaches the threshold
            raise AssertionError("confirmed window failed to extend")
        counters.successes += 1
        return match
    return None
