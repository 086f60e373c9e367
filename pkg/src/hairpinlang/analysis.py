"""Non-crossing validation and the prefix/suffix structure of a word.

For a word ``w`` and primer ``a`` (with complement ``a~``), the analysis
collects every *left anchor* ``u`` with ``u + a`` a prefix of ``w`` and every
*right anchor* ``v`` with ``a~ + complement(v)`` a suffix of ``w``.  These are
exactly the stems that single completion steps can append (as ``complement(u)``)
or prepend (as ``v``).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import CrossingError, DomainError, InternalInvariantViolation
from .words import Primer, alpha_index, in_star, occurrences


def is_non_crossing(w: str, primer: Primer) -> bool:
    """True iff every occurrence of the primer starts no later than every
    occurrence of its complement (the two factors may still overlap)."""
    primer.require_asymmetric()
    primer.alphabet.validate(w)
    alpha, abar = primer.word, primer.comp
    last_a = w.rfind(alpha)
    first_b = w.find(abar)
    if last_a == -1 or first_b == -1:
        return True
    return last_a <= first_b


def _in_anchor_language(x: str, primer: Primer) -> bool:
    return x.startswith(primer.word) and x.endswith(primer.comp) and len(x) >= primer.k


def minimal_factor_occurrences(w: str, primer: Primer) -> list[tuple[int, int]]:
    """Occurrences ``(i, j)`` of factors ``w[i:j]`` that start with the primer,
    end with its complement, and contain no proper such factor."""
    alpha, abar, k = primer.word, primer.comp, primer.k
    starts = occurrences(alpha, w)
    ends = [q + k for q in occurrences(abar, w)]
    occs = [(i, j) for i in starts for j in ends if j - i >= k]
    out = []
    for i, j in occs:
        if any((i2, j2) != (i, j) and i <= i2 and j2 <= j for i2, j2 in occs):
            continue
        out.append((i, j))
    return out


def is_non_crossing_by_minimal_factor(w: str, primer: Primer) -> bool:
    """Independent characterization: ``w`` is non-crossing iff it contains
    exactly one minimal factor starting with the primer and ending with its
    complement.  Only defined on words that themselves start/end that way."""
    primer.require_asymmetric()
    primer.alphabet.validate(w)
    if not _in_anchor_language(w, primer):
        raise DomainError(
            f"word must start with {primer.word!r} and end with {primer.comp!r}"
        )
    return len(minimal_factor_occurrences(w, primer)) == 1


def alpha_prefixes(w: str, primer: Primer) -> list[str]:
    """All ``u`` with ``u + primer`` a prefix of ``w``, ascending by length."""
    primer.alphabet.validate(w)
    return [w[:p] for p in occurrences(primer.word, w)]


def alpha_suffix_complements(w: str, primer: Primer) -> list[str]:
    """The complements of all ``v~`` with ``primer~ + v~`` a suffix of ``w``.

    Computed through the mirror identity: these are exactly the prefix anchors
    of ``complement(w)``.
    """
    return alpha_prefixes(primer.alphabet.complement(w), primer)


@dataclass(frozen=True)
class HairpinAnalysis:
    """Validated non-crossing word with its anchor lists and index sets.

    ``prefixes[i]`` is the i-th shortest left anchor (``prefixes[0] == ""``),
    ``suffix_complements[j]`` the j-th shortest right anchor.  ``I`` and ``J``
    hold the indices of anchors that are not concatenations of shorter ones.
    Build instances through :func:`analyze` only.
    """

    word: str
    primer: Primer
    prefixes: tuple[str, ...]
    suffix_complements: tuple[str, ...]
    I: frozenset[int]
    J: frozenset[int]

    @property
    def m(self) -> int:
        return len(self.prefixes)

    @property
    def n(self) -> int:
        return len(self.suffix_complements)

    @property
    def u1(self) -> str:
        return self.prefixes[1]

    @property
    def v1(self) -> str:
        return self.suffix_complements[1]


def _irreducible_indices(anchors: tuple[str, ...]) -> frozenset[int]:
    out = set()
    for i in range(1, len(anchors)):
        if not in_star(anchors[i], anchors[1:i]):
            out.add(i)
    return frozenset(out)


@lru_cache(maxsize=65536)
def analyze(w: str, primer: Primer) -> HairpinAnalysis:
    """Validate ``w`` and compute its full anchor structure.

    Raises PrimerSelfComplementary, DomainError (word does not start with the
    primer / end with its complement) or CrossingError.  Results are cached;
    analyses are immutable so sharing them is safe.
    """
    primer.require_asymmetric()
    primer.alphabet.validate(w)
    if not _in_anchor_language(w, primer):
        raise DomainError(
            f"word must start with {primer.word!r} and end with {primer.comp!r}"
        )
    if not is_non_crossing(w, primer):
        raise CrossingError(f"word {w!r} is crossing for primer {primer.word!r}")
    prefixes = tuple(alpha_prefixes(w, primer))
    suffixes = tuple(alpha_suffix_complements(w, primer))
    for i, x in enumerate(prefixes):
        if alpha_index(x, primer) != i:
            raise InternalInvariantViolation(f"prefix anchor {x!r} has bad index")
    for j, x in enumerate(suffixes):
        if alpha_index(x, primer) != j:
            raise InternalInvariantViolation(f"suffix anchor {x!r} has bad index")
    return HairpinAnalysis(
        word=w,
        primer=primer,
        prefixes=prefixes,
        suffix_complements=suffixes,
        I=_irreducible_indices(prefixes),
        J=_irreducible_indices(suffixes),
    )
