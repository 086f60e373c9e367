"""Alphabets with a complement involution and basic word operations.

Words are plain Python strings; an :class:`Alphabet` supplies the letter set
and the complement map.  The complement of a word is the reverse of the word
with every letter complemented, so that complementing twice is the identity
and ``complement(uv) == complement(v) + complement(u)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional

from .errors import AlphabetMismatch, PrimerSelfComplementary


class Alphabet:
    """A finite letter set equipped with a complement involution.

    Built from letter pairs ``(x, y)`` meaning that x and y are complements
    of each other.  A pair ``(x, x)`` declares a self-complementary letter.
    """

    def __init__(self, pairs: Iterable[tuple[str, str]]):
        table: dict[str, str] = {}
        for x, y in pairs:
            for c in (x, y):
                if len(c) != 1 or not c.isprintable() or c.isspace():
                    raise ValueError(f"letters must be single printable symbols, got {c!r}")
            for c, d in ((x, y), (y, x)):
                if c in table and table[c] != d:
                    raise ValueError(f"conflicting complement for letter {c!r}")
                table[c] = d
        if not table:
            raise ValueError("alphabet needs at least one letter pair")
        self._table = table
        self._letter_set = frozenset(table)

    @classmethod
    def from_spec(cls, text: str) -> "Alphabet":
        """Parse the textual pair format, e.g. ``"A:T,C:G"`` (``"X:X"`` is allowed)."""
        pairs = []
        for chunk in text.split(","):
            chunk = chunk.strip()
            parts = chunk.split(":")
            if len(parts) != 2 or not parts[0] or not parts[1]:
                raise ValueError(f"bad alphabet pair {chunk!r}, expected X:Y")
            pairs.append((parts[0], parts[1]))
        return cls(pairs)

    def spec(self) -> str:
        """Canonical textual form; inverse of :meth:`from_spec` up to pair order."""
        seen = set()
        chunks = []
        for c in sorted(self._table):
            if c in seen:
                continue
            d = self._table[c]
            seen.update((c, d))
            chunks.append(f"{c}:{d}")
        return ",".join(chunks)

    @property
    def letters(self) -> frozenset[str]:
        return frozenset(self._table)

    def __contains__(self, letter: str) -> bool:
        return letter in self._table

    def complement_letter(self, letter: str) -> str:
        try:
            return self._table[letter]
        except KeyError:
            raise AlphabetMismatch(f"letter {letter!r} is not in the alphabet") from None

    def complement(self, w: str) -> str:
        """Reverse of ``w`` with every letter complemented."""
        t = self._table
        try:
            return "".join(t[c] for c in reversed(w))
        except KeyError as e:
            raise AlphabetMismatch(f"letter {e.args[0]!r} is not in the alphabet") from None

    def validate(self, w: str) -> None:
        if not self._letter_set.issuperset(w):
            bad = next(c for c in w if c not in self._table)
            raise AlphabetMismatch(f"letter {bad!r} is not in the alphabet")

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Alphabet) and self._table == other._table

    def __hash__(self) -> int:
        return hash(frozenset(self._table.items()))

    def __repr__(self) -> str:
        return f"Alphabet.from_spec({self.spec()!r})"


DNA = Alphabet.from_spec("A:T,C:G")


@dataclass(frozen=True)
class Primer:
    """A nonempty word that anchors completion steps, with its alphabet."""

    word: str
    alphabet: Alphabet = field(default=DNA)

    def __post_init__(self):
        if not self.word:
            raise ValueError("primer must be nonempty")
        self.alphabet.validate(self.word)
        object.__setattr__(self, "_comp", self.alphabet.complement(self.word))

    @property
    def k(self) -> int:
        return len(self.word)

    @property
    def comp(self) -> str:
        return self._comp

    def is_pseudo_palindrome(self) -> bool:
        return self.word == self.comp

    def require_asymmetric(self) -> None:
        """Decision operations assume the primer differs from its complement."""
        if self.is_pseudo_palindrome():
            raise PrimerSelfComplementary(
                f"primer {self.word!r} equals its complement {self.comp!r}"
            )

    def __repr__(self) -> str:
        return f"Primer({self.word!r})"


def is_prefix(u: str, w: str) -> bool:
    return w.startswith(u)


def is_proper_prefix(u: str, w: str) -> bool:
    return len(u) < len(w) and w.startswith(u)


def is_suffix(u: str, w: str) -> bool:
    return w.endswith(u)


def is_proper_suffix(u: str, w: str) -> bool:
    return len(u) < len(w) and w.endswith(u)


def occurrences(pattern: str, w: str) -> list[int]:
    """All start positions of ``pattern`` in ``w``, ascending, overlaps included."""
    if not pattern:
        raise ValueError("pattern must be nonempty")
    out = []
    i = w.find(pattern)
    while i != -1:
        out.append(i)
        i = w.find(pattern, i + 1)
    return out


def _star_reachable(x: str, tokens: list[str]) -> list[bool]:
    # ok[i] == True iff x[i:] is a concatenation of tokens
    n = len(x)
    ok = [False] * (n + 1)
    ok[n] = True
    for i in range(n - 1, -1, -1):
        ok[i] = any(ok[i + len(t)] for t in tokens if x.startswith(t, i))
    return ok


def _tokens(words: Iterable[str]) -> list[str]:
    # empty words never change the generated monoid; drop them silently
    return sorted({w for w in words if w}, key=len, reverse=True)


def in_star(x: str, words: Iterable[str]) -> bool:
    """True iff ``x`` is a concatenation of elements of ``words`` (always true for ε)."""
    tokens = _tokens(words)
    if not x:
        return True
    if not tokens:
        return False
    return _star_reachable(x, tokens)[0]


def star_factorization(x: str, words: Iterable[str]) -> Optional[list[str]]:
    """One witness factorization of ``x`` over ``words``, or None.

    Deterministic: scanning left to right, always takes the longest token
    that still lets the remainder be factorized.
    """
    tokens = _tokens(words)
    if not x:
        return []
    if not tokens:
        return None
    ok = _star_reachable(x, tokens)
    if not ok[0]:
        return None
    out = []
    i = 0
    while i < len(x):
        t = next(t for t in tokens if x.startswith(t, i) and ok[i + len(t)])
        out.append(t)
        i += len(t)
    return out


def alpha_index(x: str, primer: Primer) -> int:
    """Number of occurrences of the primer in ``x + primer`` before the final one.

    Additive over concatenation when the left part keeps the primer aligned:
    if the primer is a prefix of ``x + primer`` then
    ``alpha_index(y + x) == alpha_index(y) + alpha_index(x)``.
    """
    xa = x + primer.word
    return sum(1 for p in occurrences(primer.word, xa) if p < len(x))
