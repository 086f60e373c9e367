"""Independent oracles used to cross-check the library.

Everything here is deliberately written from the raw definitions (letter
loops, factorization scans, recursive descent) rather than through the
library's own occurrence/anchor machinery, so the two routes can disagree.
"""

import itertools
from collections import deque

from hairpinlang import DNA, Primer, is_non_crossing

PRIMER_A = Primer("A")


def naive_complement(w, alphabet=DNA):
    out = []
    for c in w:
        out.append(alphabet.complement_letter(c))
    out.reverse()
    return "".join(out)


def naive_in_star(x, words):
    tokens = [t for t in words if t]
    if x == "":
        return True
    return any(x.startswith(t) and naive_in_star(x[len(t):], tokens) for t in tokens)


def brute_one_step(w, primer):
    """Single completions straight from the factorization shapes."""
    alpha, abar, k = primer.word, primer.comp, primer.k
    comp = primer.alphabet.complement
    out = set()
    for g in range(len(w) + 1):
        stem, rest = w[:g], w[g:]
        if rest.startswith(alpha) and rest.endswith(abar) and len(rest) >= 2 * k:
            out.add(w + comp(stem))
    for g in range(len(w) + 1):
        stem_comp, rest = w[len(w) - g:], w[: len(w) - g]
        if rest.startswith(alpha) and rest.endswith(abar) and len(rest) >= 2 * k:
            out.add(comp(stem_comp) + w)
    return out


def brute_enumerate(w, primer, max_len):
    seen = {w}
    queue = deque([w])
    while queue:
        cur = queue.popleft()
        for nxt in brute_one_step(cur, primer):
            if len(nxt) <= max_len and nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return sorted(seen, key=lambda z: (len(z), z))


def domain_words(max_len, primer=PRIMER_A):
    """All analyzable words up to ``max_len``: primer-prefixed,
    complement-suffixed, non-crossing."""
    alpha, abar = primer.word, primer.comp
    letters = sorted(primer.alphabet.letters)
    out = []
    for inner_len in range(0, max_len - len(alpha) - len(abar) + 1):
        for tup in itertools.product(letters, repeat=inner_len):
            w = alpha + "".join(tup) + abar
            if is_non_crossing(w, primer):
                out.append(w)
    return out


def direct_suffix_complements(w, primer):
    """Right anchors computed by scanning complement occurrences directly,
    without the mirror identity the library uses."""
    k = primer.k
    comp = primer.alphabet.complement
    qs = []
    i = w.find(primer.comp)
    while i != -1:
        qs.append(i)
        i = w.find(primer.comp, i + 1)
    return [comp(w[q + k:]) for q in sorted(qs, reverse=True)]
