"""Completion steps, bounded closure and a polynomial membership oracle.

A right completion rewrites ``stem + a + middle + a~`` to the same word with
``complement(stem)`` appended; a left completion mirrors this on the other
end.  The closure of a word under these steps is explored breadth-first with
a length cutoff, which is exact because steps never shorten a word.
"""

from __future__ import annotations

import itertools
from collections import deque

from .analysis import analyze
from .words import Alphabet, Primer, occurrences


def right_completions(w: str, primer: Primer) -> set[str]:
    """All words ``w + complement(u)`` reachable by one right completion.

    ``u`` ranges over the left anchors of ``w`` whose primer occurrence does
    not overlap the final complement occurrence (``len(u) + 2k <= len(w)``).
    The empty anchor contributes ``w`` itself.
    """
    primer.alphabet.validate(w)
    if not w.endswith(primer.comp):
        return set()
    k = primer.k
    comp = primer.alphabet.complement
    return {
        w + comp(w[:p])
        for p in occurrences(primer.word, w)
        if p + 2 * k <= len(w)
    }


def left_completions(w: str, primer: Primer) -> set[str]:
    """All words ``v + w`` reachable by one left completion (mirror case)."""
    primer.alphabet.validate(w)
    if not w.startswith(primer.word):
        return set()
    k = primer.k
    comp = primer.alphabet.complement
    # a complement occurrence at q yields the stem complement(w[q + k:]);
    # q >= k keeps it disjoint from the leading primer occurrence
    return {
        comp(w[q + k:]) + w
        for q in occurrences(primer.comp, w)
        if q >= k
    }


def one_step(w: str, primer: Primer) -> set[str]:
    """Words reachable by a single completion step on either side."""
    return right_completions(w, primer) | left_completions(w, primer)


def enumerate_bounded(w: str, primer: Primer, max_len: int) -> list[str]:
    """Every word of length at most ``max_len`` in the completion closure of
    ``w``, sorted by length then lexicographically."""
    if max_len < len(w):
        raise ValueError("max_len must be at least the length of the start word")
    primer.alphabet.validate(w)
    seen = {w}
    queue = deque([w])
    while queue:
        cur = queue.popleft()
        for nxt in one_step(cur, primer):
            if len(nxt) <= max_len and nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return sorted(seen, key=lambda z: (len(z), z))


def member(z: str, w: str, primer: Primer) -> bool:
    """Decide ``z in closure(w)`` in time polynomial in ``len(z)``.

    Requires ``w`` to pass :func:`analyze`.  Every word in the closure of a
    non-crossing ``w`` contains ``w`` exactly once and completion steps only
    extend the ends, so each derivation step is determined by how much of the
    flanks of ``z`` it has already produced.  The oracle searches that grid
    of flank extents instead of enumerating the closure.
    """
    analyze(w, primer)
    primer.alphabet.validate(z)
    occ = occurrences(w, z)
    if len(occ) != 1:
        return False
    x = z[: occ[0]]
    y = z[occ[0] + len(w):]
    alpha, abar, k = primer.word, primer.comp, primer.k
    comp = primer.alphabet.complement
    target = (len(x), len(y))
    seen = {(0, 0)}
    stack = [(0, 0)]
    while stack:
        i, j = stack.pop()
        if (i, j) == target:
            return True
        cur = x[len(x) - i:] + w + y[: j]
        if cur.endswith(abar):
            for p in occurrences(alpha, cur):
                if p == 0 or p + 2 * k > len(cur):
                    continue
                nj = j + p
                if nj <= len(y) and y[j:nj] == comp(cur[:p]) and (i, nj) not in seen:
                    seen.add((i, nj))
                    stack.append((i, nj))
        if cur.startswith(alpha):
            for q in occurrences(abar, cur):
                step = len(cur) - q - k
                if step == 0 or q < k:
                    continue
                ni = i + step
                if ni <= len(x) and x[len(x) - ni: len(x) - i] == comp(cur[q + k:]) \
                        and (ni, j) not in seen:
                    seen.add((ni, j))
                    stack.append((ni, j))
    return False


def hk_one_step(w: str, k: int, alphabet: Alphabet) -> set[str]:
    """Single completion steps under every primer of length ``k``."""
    if k < 1:
        raise ValueError("primer length must be at least 1")
    alphabet.validate(w)
    out: set[str] = set()
    for letters in itertools.product(sorted(alphabet.letters), repeat=k):
        out |= one_step(w, Primer("".join(letters), alphabet))
    return out


def hk_enumerate_bounded(w: str, k: int, alphabet: Alphabet, max_len: int) -> list[str]:
    """Bounded breadth-first closure under all length-``k`` primers at once."""
    if max_len < len(w):
        raise ValueError("max_len must be at least the length of the start word")
    alphabet.validate(w)
    seen = {w}
    queue = deque([w])
    while queue:
        cur = queue.popleft()
        for nxt in hk_one_step(cur, k, alphabet):
            if len(nxt) <= max_len and nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return sorted(seen, key=lambda z: (len(z), z))
