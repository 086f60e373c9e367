import pytest

from hairpinlang import AlphabetMismatch, AtLeast, Atom, Concat, StarSet
from hairpinlang.automata import Automaton, accepts, compile, determinize, to_dot


def star_concat(left, word, right):
    return Concat([StarSet(left), Atom(word), StarSet(right)])


class TestCompileAndAccept:
    def test_two_sided_star(self):
        a = compile(star_concat(["AC"], "AT", ["GT"]))
        assert accepts(a, "ACATGT")
        assert accepts(a, "AT")
        assert not accepts(a, "ACGT")

    def test_single_atom(self):
        a = compile(Atom("AT"))
        assert accepts(a, "AT")
        assert not accepts(a, "A")
        assert not accepts(a, "ATA")
        assert not accepts(a, "")

    def test_at_least_counts(self):
        a = compile(AtLeast("AC", 3))
        assert not accepts(a, "ACAC")
        assert accepts(a, "ACACAC")
        assert accepts(a, "ACACACAC")

    def test_epsilon_atom(self):
        a = compile(Concat([Atom(""), Atom("A")]), letters="ACGT")
        assert accepts(a, "A")
        assert not accepts(a, "")

    def test_construction_expression(self):
        a = compile(star_concat(["AC"], "ACAGTGT", ["GT"]))
        assert accepts(a, "ACACAGTGTGT")
        assert not accepts(a, "ACAGTGTG")
        assert accepts(a, "ACAGTGT")

    def test_alphabet_mismatch(self):
        a = compile(Atom("AT"))
        with pytest.raises(AlphabetMismatch):
            accepts(a, "AC")
        wide = compile(Atom("AT"), letters="ACGT")
        assert not accepts(wide, "AC")


class TestDeterminize:
    def test_preserves_language(self):
        e = star_concat(["AC", "ACAG"], "AT", ["GT", "CTGT"])
        nfa = compile(e)
        dfa = determinize(nfa)
        assert dfa.deterministic
        for z in ("AT", "ACAT", "ACAGATGT", "ACAGATCTGT", "ACATG", "", "ACACAGAT"):
            assert accepts(dfa, z) == accepts(nfa, z)

    def test_idempotent(self):
        dfa = determinize(compile(Atom("AT")))
        assert determinize(dfa) is dfa

    def test_no_epsilon_and_unique_targets(self):
        dfa = determinize(compile(star_concat(["AC"], "AT", ["GT"])))
        for arcs in dfa.transitions.values():
            assert None not in arcs
            assert all(len(t) == 1 for t in arcs.values())


class TestDot:
    def test_atom_chain_state_count(self):
        dfa = determinize(compile(Atom("ACGT")))
        text = to_dot(dfa)
        assert text.count("shape=circle") + text.count("shape=doublecircle") == 5
        assert text.count("doublecircle") == 1

    def test_empty_language_has_no_accepting_node(self):
        dead = Automaton(1, 0, [], {0: {}}, "AT")
        text = to_dot(dead)
        assert "doublecircle" not in text
        assert "q0" in text

    def test_golden_two_sided_star(self):
        dfa = determinize(compile(star_concat(["AC"], "AT", ["GT"])))
        assert to_dot(dfa) == GOLDEN_DOT
        assert to_dot(dfa) == to_dot(determinize(compile(star_concat(["AC"], "AT", ["GT"]))))


GOLDEN_DOT = """digraph automaton {
  rankdir=LR;
  __start [shape=point label=""];
  q0 [shape=circle];
  q1 [shape=circle];
  q2 [shape=doublecircle];
  q3 [shape=circle];
  q4 [shape=doublecircle];
  __start -> q0;
  q0 -> q1 [label="A"];
  q1 -> q0 [label="C"];
  q1 -> q2 [label="T"];
  q2 -> q3 [label="G"];
  q3 -> q4 [label="T"];
  q4 -> q3 [label="G"];
}
"""
