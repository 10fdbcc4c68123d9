"""Longest-substring automaton over a pattern word.

The automaton recognizes exactly the substrings of the indexed word and,
scanned over a text, yields at each position the length of the longest
indexed substring ending there.  It is a suffix automaton (at most
2*len(P) states) whose transitions are resolved into flat per-symbol
next_state / next_length tables, so a step is a single dictionary probe:
next_length caps the running length after a fallback through suffix
links.  Space is O(len(P) * alphabet) for the resolved tables.
"""

from __future__ import annotations

from .match import Match, SearchCounters, match_from_seed
from .words import Word, extend_front, invert, useful_threshold


class LSAutomaton:
    def __init__(self, word: Word):
        if len(word) < 1:
            raise ValueError("cannot build an automaton for the empty word")
        self.word = word
        # raw suffix automaton arrays
        maxlen = [0]
        link = [-1]
        nxt: list[dict[int, int]] = [{}]
        first_end = [0]
        last = 0
        for i, c in enumerate(word):
            cur = len(maxlen)
            maxlen.append(maxlen[last] + 1)
            link.append(0)
            nxt.append({})
            first_end.append(i + 1)
            p = last
            while p >= 0 and c not in nxt[p]:
                nxt[p][c] = cur
                p = link[p]
            if p >= 0:
                q = nxt[p][c]
                if maxlen[p] + 1 == maxlen[q]:
                    link[cur] = q
                else:
                    clone = len(maxlen)
                    maxlen.append(maxlen[p] + 1)
                    link.append(link[q])
                    nxt.append(dict(nxt[q]))
                    first_end.append(first_end[q])
                    while p >= 0 and nxt[p].get(c) == q:
                        nxt[p][c] = clone
                        p = link[p]
                    link[q] = clone
                    link[cur] = clone
            last = cur
        self.max_len = maxlen
        self.first_end = first_end
        self._next = nxt
        # resolve fallbacks: per state, symbol -> (next state, next length).
        # Parents in the suffix-link tree have strictly smaller max_len, so
        # resolving in max_len order sees the parent table first.
        order = sorted(range(len(maxlen)), key=lambda s: maxlen[s])
        table: list[dict[int, tuple[int, int]]] = [dict() for _ in maxlen]
        for s in order:
            if link[s] >= 0:
                table[s] = dict(table[link[s]])
            for c, q in nxt[s].items():
                table[s][c] = (q, maxlen[s] + 1)
        self.table = table

    @property
    def state_count(self) -> int:
        return len(self.max_len)

    def step(self, state: int, length: int, sym: int) -> tuple[int, int]:
        """One scan step; falls back to the initial state on a dead symbol."""
        hit = self.table[state].get(sym)
        if hit is None:
            return 0, 0
        nstate, nlength = hit
        return nstate, min(length + 1, nlength)

    def longest_match_lengths(self, text: Word) -> list[int]:
        """Longest indexed substring ending at each text position."""
        out = []
        state, length = 0, 0
        for sym in text:
            state, length = self.step(state, length, sym)
            out.append(length)
        return out

    def accepts_substring(self, s: Word) -> bool:
        """Whether s is a (linear) substring of the indexed word."""
        state = 0
        for sym in s:
            nstate = self._next[state].get(sym)
            if nstate is None:
                return False
            state = nstate
        return True


def build_ls_automaton(word: Word) -> LSAutomaton:
    return LSAutomaton(word)


def automaton_step(a: LSAutomaton, state: int, length: int, sym: int) -> tuple[int, int]:
    return a.step(state, length, sym)


def _scan_for_match(a: LSAutomaton, p_word: Word, t_word: Word, inverted_pattern: bool,
                    inverted_text: bool, counters: SearchCounters) -> Match | None:
    """Scan one extended text and turn the first threshold hit into a Match."""
    l_p, l_t = len(p_word), len(t_word)
    m = useful_threshold(l_p)
    t_base = invert(t_word) if inverted_text else t_word
    scan_text = extend_front(t_base, min(m - 1, l_t))
    state, length = 0, 0
    for idx, sym in enumerate(scan_text):
        counters.windows_scanned += 1
        state, length = a.step(state, length, sym)
        if length < m:
            continue
        # some occurrence of the matched string ends at first_end in the
        # indexed word; map both ends back onto the original circles
        p_end = (a.first_end[state] - 1) % l_p
        t_end = idx % l_t
        if inverted_text:
            # the hit pairs pattern with invert(text); reflect it onto the
            # inverted pattern equivalent against the original text
            bpos = (l_p - 1 - p_end) % l_p
            tpos = (l_t - 1 - t_end) % l_t
            match = match_from_seed(p_word, t_word, True, bpos, tpos)
        else:
            match = match_from_seed(p_word, t_word, inverted_pattern, p_end, t_end)
        if match is None:
            raise AssertionError("threshold hit failed to extend")
        counters.successes += 1
        return match
    return None


def automaton_search(p_word: Word, t_word: Word, mode: str = "two",
                     counters: SearchCounters | None = None,
                     automata: tuple[LSAutomaton, ...] | None = None) -> Match | None:
    """Automaton-backed ComStr.

    ``two`` builds automata for the extended pattern and its extended
    inverse and runs both over the extended text; ``one`` builds only the
    pattern automaton and additionally runs it over the extended inverse
    of the text.  Prebuilt automata may be supplied by a caller that
    caches them per pattern.
    """
    l_p, l_t = len(p_word), len(t_word)
    if not 1 <= l_p <= l_t:
        raise ValueError("automaton search requires 1 <= |pattern| <= |text|")
    if mode not in ("one", "two"):
        raise ValueError(f"unknown automaton mode {mode!r}")
    if counters is None:
        counters = SearchCounters()
    ext = useful_threshold(l_p) - 1
    if automata is None:
        if mode == "two":
            automata = (
                build_ls_automaton(extend_front(p_word, ext)),
                build_ls_automaton(extend_front(invert(p_word), ext)),
            )
        else:
            automata = (build_ls_automaton(extend_front(p_word, ext)),)
        counters.automata_built += len(automata)
    if mode == "two":
        m = _scan_for_match(automata[0], p_word, t_word, False, False, counters)
        if m is not None:
            return m
        return _scan_for_match(automata[1], p_word, t_word, True, False, counters)
    m = _scan_for_match(automata[0], p_word, t_word, False, False, counters)
    if m is not None:
        return m
    return _scan_for_match(automata[0], p_word, t_word, False, True, counters)
