"""Symbolic language expressions over whole-word atoms.

The node types mirror the shapes the decision procedure produces: single
words, finite-set stars ``{w1,w2}*``, lower-bounded powers ``w^{>=c}``,
concatenations and unions.  Expressions stay human-readable in reports and
compile to automata via :mod:`hairpinlang.automata`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .words import Alphabet


class LangExpr:
    """Base class of expression nodes; all nodes are immutable."""

    __slots__ = ()


@dataclass(frozen=True)
class Atom(LangExpr):
    word: str


@dataclass(frozen=True)
class StarSet(LangExpr):
    """Kleene star of a finite, nonempty, epsilon-free set of words."""

    words: frozenset[str]

    def __init__(self, words: Iterable[str]):
        ws = frozenset(words)
        if not ws:
            raise ValueError("star set must be nonempty")
        if "" in ws:
            raise ValueError("star set must not contain the empty word")
        object.__setattr__(self, "words", ws)


@dataclass(frozen=True)
class AtLeast(LangExpr):
    """``word`` repeated ``count`` or more times."""

    word: str
    count: int

    def __post_init__(self):
        if not self.word:
            raise ValueError("repeated word must be nonempty")
        if self.count < 0:
            raise ValueError("count must be nonnegative")


@dataclass(frozen=True)
class Concat(LangExpr):
    parts: tuple[LangExpr, ...]

    def __init__(self, parts: Iterable[LangExpr]):
        object.__setattr__(self, "parts", tuple(parts))


@dataclass(frozen=True)
class Union(LangExpr):
    parts: tuple[LangExpr, ...]

    def __init__(self, parts: Iterable[LangExpr]):
        ps = tuple(parts)
        if not ps:
            raise ValueError("union needs at least one branch")
        object.__setattr__(self, "parts", ps)


def _sorted_words(words: Iterable[str]) -> list[str]:
    return sorted(words, key=lambda w: (len(w), w))


def render(e: LangExpr) -> str:
    """Stable textual form: atoms quoted, ``{w1,w2}*``, ``w^{>=c}``,
    concatenation with ``·``, union with `` ∪ ``."""
    if isinstance(e, Atom):
        return f'"{e.word}"'
    if isinstance(e, StarSet):
        return "{" + ",".join(_sorted_words(e.words)) + "}*"
    if isinstance(e, AtLeast):
        return f'"{e.word}"^{{>={e.count}}}'
    if isinstance(e, Concat):
        return "·".join(
            f"({render(p)})" if isinstance(p, Union) else render(p) for p in e.parts
        )
    if isinstance(e, Union):
        return " ∪ ".join(
            f"({render(p)})" if isinstance(p, Union) else render(p) for p in e.parts
        )
    raise TypeError(f"not an expression node: {e!r}")


def letters_of(e: LangExpr) -> frozenset[str]:
    if isinstance(e, Atom):
        return frozenset(e.word)
    if isinstance(e, StarSet):
        return frozenset().union(*(frozenset(w) for w in e.words))
    if isinstance(e, AtLeast):
        return frozenset(e.word)
    if isinstance(e, (Concat, Union)):
        out: frozenset[str] = frozenset()
        for p in e.parts:
            out |= letters_of(p)
        return out
    raise TypeError(f"not an expression node: {e!r}")


def _enum(e: LangExpr, max_len: int) -> set[str]:
    if isinstance(e, Atom):
        return {e.word} if len(e.word) <= max_len else set()
    if isinstance(e, StarSet):
        out = {""}
        frontier = [""]
        while frontier:
            nxt = []
            for base in frontier:
                for t in e.words:
                    z = base + t
                    if len(z) <= max_len and z not in out:
                        out.add(z)
                        nxt.append(z)
            frontier = nxt
        return out
    if isinstance(e, AtLeast):
        out = set()
        j = e.count
        while j * len(e.word) <= max_len:
            out.add(e.word * j)
            j += 1
        return out
    if isinstance(e, Concat):
        acc = {""}
        for p in e.parts:
            part = _enum(p, max_len)
            acc = {a + b for a in acc for b in part if len(a) + len(b) <= max_len}
            if not acc:
                return set()
        return acc
    if isinstance(e, Union):
        out: set[str] = set()
        for p in e.parts:
            out |= _enum(p, max_len)
        return out
    raise TypeError(f"not an expression node: {e!r}")


def enumerate_expr(e: LangExpr, max_len: int) -> list[str]:
    """Exactly the denoted words of length at most ``max_len``, built by
    bounded expansion of the expression, sorted by length then value."""
    if max_len < 0:
        raise ValueError("max_len must be nonnegative")
    return sorted(_enum(e, max_len), key=lambda z: (len(z), z))


def complement_image(e: LangExpr, alphabet: Alphabet) -> LangExpr:
    """Expression denoting exactly the complements of the denoted words.

    Complementing is an anti-morphism, so concatenations reverse and every
    atom word is complemented; stars and unions keep their shape.
    """
    comp = alphabet.complement
    if isinstance(e, Atom):
        return Atom(comp(e.word))
    if isinstance(e, StarSet):
        return StarSet(comp(w) for w in e.words)
    if isinstance(e, AtLeast):
        return AtLeast(comp(e.word), e.count)
    if isinstance(e, Concat):
        return Concat(complement_image(p, alphabet) for p in reversed(e.parts))
    if isinstance(e, Union):
        return Union(complement_image(p, alphabet) for p in e.parts)
    raise TypeError(f"not an expression node: {e!r}")
