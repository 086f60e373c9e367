"""Compilation of expressions to finite automata, plus DOT export.

The nondeterministic construction threads epsilon moves (label ``None``)
between per-node fragments; determinization is the usual subset construction
with states numbered in discovery order so output is reproducible.
"""

from __future__ import annotations

from typing import Iterable, Optional

from .errors import AlphabetMismatch
from .expressions import Atom, AtLeast, Concat, LangExpr, StarSet, Union, letters_of

Label = Optional[str]  # None marks an epsilon move


class Automaton:
    """Letter-labeled automaton with integer states.

    ``transitions`` maps ``state -> {label -> frozenset(states)}``.  When
    ``deterministic`` is set there are no epsilon labels and every target
    set is a singleton; missing transitions reject.
    """

    def __init__(
        self,
        num_states: int,
        start: int,
        accepting: Iterable[int],
        transitions: dict[int, dict[Label, frozenset[int]]],
        letters: Iterable[str],
        deterministic: bool = False,
    ):
        self.num_states = num_states
        self.start = start
        self.accepting = frozenset(accepting)
        self.transitions = transitions
        self.letters = frozenset(letters)
        self.deterministic = deterministic
        if deterministic:
            for arcs in transitions.values():
                if None in arcs:
                    raise ValueError("deterministic automaton cannot have epsilon moves")
                if any(len(t) != 1 for t in arcs.values()):
                    raise ValueError("deterministic automaton needs unique targets")

    def __repr__(self) -> str:
        kind = "DFA" if self.deterministic else "NFA"
        return f"<{kind} states={self.num_states} accepting={sorted(self.accepting)}>"


class _Builder:
    def __init__(self):
        self.n = 0
        self.arcs: dict[int, dict[Label, set[int]]] = {}

    def state(self) -> int:
        s = self.n
        self.n += 1
        self.arcs[s] = {}
        return s

    def arc(self, src: int, label: Label, dst: int) -> None:
        self.arcs[src].setdefault(label, set()).add(dst)

    def chain(self, src: int, word: str, dst: int) -> None:
        cur = src
        for c in word[:-1]:
            nxt = self.state()
            self.arc(cur, c, nxt)
            cur = nxt
        if word:
            self.arc(cur, word[-1], dst)
        else:
            self.arc(cur, None, dst)

    def fragment(self, e: LangExpr) -> tuple[int, int]:
        if isinstance(e, Atom):
            s, t = self.state(), self.state()
            self.chain(s, e.word, t)
            return s, t
        if isinstance(e, StarSet):
            hub = self.state()
            for w in e.words:
                self.chain(hub, w, hub)
            return hub, hub
        if isinstance(e, AtLeast):
            parts = [Atom(e.word)] * e.count + [StarSet([e.word])]
            return self.fragment(Concat(parts))
        if isinstance(e, Concat):
            if not e.parts:
                s = self.state()
                return s, s
            s, t = self.fragment(e.parts[0])
            for p in e.parts[1:]:
                s2, t2 = self.fragment(p)
                self.arc(t, None, s2)
                t = t2
            return s, t
        if isinstance(e, Union):
            s, t = self.state(), self.state()
            for p in e.parts:
                s2, t2 = self.fragment(p)
                self.arc(s, None, s2)
                self.arc(t2, None, t)
            return s, t
        raise TypeError(f"not an expression node: {e!r}")


def compile(e: LangExpr, letters: Optional[Iterable[str]] = None) -> Automaton:
    """Nondeterministic automaton accepting exactly the denoted language.

    ``letters`` widens the automaton alphabet beyond the letters that occur
    in the expression (useful when running words over a larger alphabet).
    """
    b = _Builder()
    start, accept = b.fragment(e)
    transitions = {
        s: {label: frozenset(ts) for label, ts in arcs.items()}
        for s, arcs in b.arcs.items()
    }
    alphabet = frozenset(letters) if letters is not None else letters_of(e)
    return Automaton(b.n, start, [accept], transitions, alphabet, deterministic=False)


def _eps_closure(a: Automaton, states: frozenset[int]) -> frozenset[int]:
    out = set(states)
    stack = list(states)
    while stack:
        s = stack.pop()
        for t in a.transitions.get(s, {}).get(None, ()):
            if t not in out:
                out.add(t)
                stack.append(t)
    return frozenset(out)


def determinize(a: Automaton) -> Automaton:
    """Subset construction; states numbered breadth-first from the start set."""
    if a.deterministic:
        return a
    letters = sorted(a.letters)
    first = _eps_closure(a, frozenset([a.start]))
    ids: dict[frozenset[int], int] = {first: 0}
    order = [first]
    transitions: dict[int, dict[Label, frozenset[int]]] = {0: {}}
    i = 0
    while i < len(order):
        subset = order[i]
        for c in letters:
            nxt = frozenset(
                t
                for s in subset
                for t in a.transitions.get(s, {}).get(c, ())
            )
            if not nxt:
                continue
            nxt = _eps_closure(a, nxt)
            if nxt not in ids:
                ids[nxt] = len(order)
                order.append(nxt)
                transitions[ids[nxt]] = {}
            transitions[ids[subset]][c] = frozenset([ids[nxt]])
        i += 1
    accepting = [ids[s] for s in order if s & a.accepting]
    return Automaton(len(order), 0, accepting, transitions, a.letters, deterministic=True)


def accepts(a: Automaton, z: str) -> bool:
    """Run ``z`` through the automaton; letters outside its alphabet are errors."""
    for c in z:
        if c not in a.letters:
            raise AlphabetMismatch(f"letter {c!r} is not in the automaton alphabet")
    if a.deterministic:
        state = a.start
        for c in z:
            targets = a.transitions.get(state, {}).get(c)
            if not targets:
                return False
            (state,) = targets
        return state in a.accepting
    current = _eps_closure(a, frozenset([a.start]))
    for c in z:
        step = frozenset(
            t for s in current for t in a.transitions.get(s, {}).get(c, ())
        )
        if not step:
            return False
        current = _eps_closure(a, step)
    return bool(current & a.accepting)


def _bfs_order(a: Automaton) -> list[int]:
    order = [a.start]
    seen = {a.start}
    i = 0
    while i < len(order):
        s = order[i]
        arcs = a.transitions.get(s, {})
        for label in sorted(arcs, key=lambda x: (x is not None, x or "")):
            for t in sorted(arcs[label]):
                if t not in seen:
                    seen.add(t)
                    order.append(t)
        i += 1
    return order


def to_dot(a: Automaton) -> str:
    """DOT digraph with stable breadth-first node numbering."""
    order = _bfs_order(a)
    name = {s: f"q{i}" for i, s in enumerate(order)}
    lines = ["digraph automaton {", "  rankdir=LR;", '  __start [shape=point label=""];']
    for s in order:
        shape = "doublecircle" if s in a.accepting else "circle"
        lines.append(f"  {name[s]} [shape={shape}];")
    lines.append(f"  __start -> {name[order[0]]};")
    edges = []
    for s in order:
        for label, targets in a.transitions.get(s, {}).items():
            text = "ε" if label is None else label
            for t in targets:
                if t in name:
                    edges.append((name[s], text, name[t]))
    for src, text, dst in sorted(edges):
        lines.append(f'  {src} -> {dst} [label="{text}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
