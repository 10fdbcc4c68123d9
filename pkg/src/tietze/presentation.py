"""Presentation data model: generators, involutions and the relator sequence.

The file format is line oriented UTF-8:

    # comment and blank lines are ignored
    gens <d>              exactly once, first significant line, d >= 1
    rel <s1> <s2> ...     one relator, nonzero signed integers, |s| <= d
    relw <letters>        letter form (a=1 ... z=26, uppercase = inverse),
                          only accepted when d <= 26

Serialization always emits the numeric ``rel`` form.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .words import Word, canonical_rep, reduce_cyclic_word, word_from_letters


class ParseError(ValueError):
    """Raised on a malformed presentation file; carries the line number."""

    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


@dataclass
class RelatorRecord:
    """A relator with stable identity and the two search timestamps.

    ``tp`` is the last time the relator was used as a pattern, ``ts`` the
    last time it was changed; their value domain depends on the active
    skip policy.  The word is always freely and cyclically reduced.
    """

    id: int
    word: Word
    tp: int = -1
    ts: int = 0

    @property
    def len(self) -> int:
        return len(self.word)

    def set_word(self, word: Word) -> None:
        self.word = word

    def canonical(self) -> Word:
        return canonical_rep(self.word)


@dataclass
class Presentation:
    """Generator count, involution set and the ordered relator sequence."""

    d: int
    involutions: set[int] = field(default_factory=set)
    rel: list[RelatorRecord] = field(default_factory=list)
    next_id: int = 0

    def add_relator(self, word: Word) -> RelatorRecord:
        word = reduce_cyclic_word(word)
        rec = RelatorRecord(self.next_id, word)
        self.next_id += 1
        self.rel.append(rec)
        return rec

    def total_length(self) -> int:
        return sum(r.len for r in self.rel)

    def words(self) -> list[Word]:
        return [r.word for r in self.rel]

    def is_sorted(self) -> bool:
        return all(self.rel[i].len <= self.rel[i + 1].len for i in range(len(self.rel) - 1))

    def clone(self) -> "Presentation":
        p = Presentation(self.d, set(self.involutions), [], self.next_id)
        p.rel = [RelatorRecord(r.id, r.word, r.tp, r.ts) for r in self.rel]
        return p


def make_presentation(d: int, relators: Iterable[Word]) -> Presentation:
    """Build a normalized presentation from raw relator words."""
    p = Presentation(d)
    for w in relators:
        for s in w:
            if s == 0 or abs(s) > d:
                raise ValueError(f"symbol {s} out of range for {d} generators")
        rec = p.add_relator(w)
        if rec.len == 0:
            p.rel.pop()
    normalize_involutions(p)
    return p


def parse_presentation(text: str) -> Presentation:
    """Parse the file format above into a normalized Presentation."""
    pres: Presentation | None = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        kind = fields[0]
        if pres is None:
            if kind != "gens":
                raise ParseError(lineno, f"expected 'gens <d>' first, got {kind!r}")
            if len(fields) != 2:
                raise ParseError(lineno, "'gens' takes exactly one argument")
            try:
                d = int(fields[1])
            except ValueError:
                raise ParseError(lineno, f"bad generator count {fields[1]!r}") from None
            if d < 1:
                raise ParseError(lineno, "generator count must be >= 1")
            pres = Presentation(d)
            continue
        if kind == "gens":
            raise ParseError(lineno, "duplicate 'gens' line")
        if kind == "rel":
            syms = []
            for f in fields[1:]:
                try:
                    s = int(f)
                except ValueError:
                    raise ParseError(lineno, f"bad symbol {f!r}") from None
                if s == 0:
                    raise ParseError(lineno, "generator index 0 is invalid")
                if abs(s) > pres.d:
                    raise ParseError(lineno, f"generator index out of range: {s}")
                syms.append(s)
            word = tuple(syms)
        elif kind == "relw":
            if pres.d > 26:
                raise ParseError(lineno, "'relw' is only valid for at most 26 generators")
            if len(fields) != 2:
                raise ParseError(lineno, "'relw' takes exactly one word")
            try:
                word = word_from_letters(fields[1])
            except ValueError as e:
                raise ParseError(lineno, str(e)) from None
            if any(abs(s) > pres.d for s in word):
                raise ParseError(lineno, "generator letter out of range")
        else:
            raise ParseError(lineno, f"unknown directive {kind!r}")
        rec = pres.add_relator(word)
        if rec.len == 0:
            pres.rel.pop()
    if pres is None:
        raise ParseError(0, "missing 'gens' line")
    normalize_involutions(pres)
    return pres


def serialize_presentation(p: Presentation) -> str:
    lines = [f"gens {p.d}"]
    for r in p.rel:
        lines.append("rel " + " ".join(str(s) for s in r.word))
    return "\n".join(lines) + "\n"


def sort_rel(p: Presentation) -> Presentation:
    """Stable sort of the relator sequence by ascending length."""
    p.rel.sort(key=lambda r: r.len)
    return p


def normalize_involutions(p: Presentation) -> list[int]:
    """Mark generators with a square relator as involutions and rewrite.

    Every relator gg (or its inverse form) adds g to the involution set,
    after which g^-1 never appears in any relator: occurrences are
    rewritten to g and words re-reduced.  Returns ids of relators whose
    word changed.
    """
    changed: list[int] = []
    while True:
        found = False
        for r in p.rel:
            if r.len == 2 and r.word[0] == r.word[1]:
                g = abs(r.word[0])
                if g not in p.involutions:
                    p.involutions.add(g)
                    found = True
        rewritten = False
        if p.involutions:
            for r in p.rel:
                w = tuple(-s if (s < 0 and -s in p.involutions) else s for s in r.word)
                if w != r.word:
                    r.set_word(reduce_cyclic_word(w))
                    changed.append(r.id)
                    rewritten = True
        p.rel[:] = [r for r in p.rel if r.len > 0]
        if not (found or rewritten):
            return changed


def total_length(p: Presentation) -> int:
    return p.total_length()


def remove_duplicates(p: Presentation) -> list[int]:
    """Drop relators equal to an earlier one up to rotation/inversion."""
    seen: set[Word] = set()
    removed: list[int] = []
    kept: list[RelatorRecord] = []
    for r in p.rel:
        key = r.canonical()
        if key in seen:
            removed.append(r.id)
        else:
            seen.add(key)
            kept.append(r)
    p.rel[:] = kept
    return removed
