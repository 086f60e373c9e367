import itertools
import random

import pytest

from hairpinlang import (
    DNA,
    AtLeast,
    Atom,
    Concat,
    StarSet,
    Union,
    complement_image,
    enumerate_expr,
    render,
)
from hairpinlang import automata


def star_concat(left, word, right):
    return Concat([StarSet(left), Atom(word), StarSet(right)])


class TestNodes:
    def test_star_set_validation(self):
        with pytest.raises(ValueError):
            StarSet([])
        with pytest.raises(ValueError):
            StarSet(["AC", ""])

    def test_at_least_validation(self):
        with pytest.raises(ValueError):
            AtLeast("", 2)
        with pytest.raises(ValueError):
            AtLeast("AC", -1)

    def test_union_validation(self):
        with pytest.raises(ValueError):
            Union([])

    def test_equality_is_structural(self):
        assert StarSet(["AC", "GT"]) == StarSet(["GT", "AC"])
        assert Concat([Atom("A")]) == Concat([Atom("A")])


class TestRender:
    def test_shapes(self):
        e = star_concat(["AC"], "ACAGTGT", ["GT"])
        assert render(e) == '{AC}*·"ACAGTGT"·{GT}*'
        assert render(AtLeast("AC", 3)) == '"AC"^{>=3}'
        assert render(Union([Atom("A"), Atom("C")])) == '"A" ∪ "C"'

    def test_star_set_members_sorted(self):
        assert render(StarSet(["GT", "AC", "ACAG"])) == "{AC,GT,ACAG}*"

    def test_nested_union_parenthesized(self):
        inner = Union([Atom("A"), Atom("C")])
        assert render(Union([Atom("G"), inner])) == '"G" ∪ ("A" ∪ "C")'
        assert render(Concat([Atom("G"), inner])) == '"G"·("A" ∪ "C")'


class TestEnumerate:
    def test_two_sided_star_example(self):
        e = star_concat(["AC"], "ACAGTGT", ["GT"])
        words = enumerate_expr(e, 11)
        assert len(words) == 6
        assert words[0] == "ACAGTGT"
        assert set(words) == {
            "ACAGTGT",
            "ACACAGTGT",
            "ACAGTGTGT",
            "ACACACAGTGT",
            "ACACAGTGTGT",
            "ACAGTGTGTGT",
        }

    def test_atom_longer_than_bound(self):
        assert enumerate_expr(Atom("AT"), 1) == []

    def test_union_deduplicates(self):
        assert enumerate_expr(Union([Atom("AT"), Atom("AT")]), 2) == ["AT"]

    def test_at_least_counts(self):
        assert enumerate_expr(AtLeast("AC", 2), 7) == ["ACAC", "ACACAC"]
        assert enumerate_expr(AtLeast("AC", 0), 4) == ["", "AC", "ACAC"]

    def test_empty_concat_is_epsilon(self):
        assert enumerate_expr(Concat([]), 3) == [""]


class TestComplementImage:
    def test_atoms_and_order(self):
        e = Concat([Atom("AC"), AtLeast("AC", 2), Atom("GGT")])
        d = complement_image(e, DNA)
        assert d == Concat([Atom("ACC"), AtLeast("GT", 2), Atom("GT")])

    def test_denotes_complements(self):
        e = Union(
            [
                star_concat(["AC", "ACAG"], "ACATCTGT", ["GT", "CTGT"]),
                Concat([AtLeast("AC", 1), Atom("AT")]),
            ]
        )
        d = complement_image(e, DNA)
        left = enumerate_expr(d, 14)
        right = sorted((DNA.complement(z) for z in enumerate_expr(e, 14)),
                       key=lambda z: (len(z), z))
        assert left == right

    def test_involution(self):
        e = star_concat(["AC"], "ACAGTGT", ["GT"])
        assert complement_image(complement_image(e, DNA), DNA) == e


def random_expr(rng, words):
    kind = rng.randrange(5)
    if kind == 0:
        return Atom(rng.choice(words))
    if kind == 1:
        return StarSet(rng.sample(words, rng.randrange(1, 3)))
    if kind == 2:
        return AtLeast(rng.choice(words), rng.randrange(0, 3))
    children = [random_expr(rng, words) for _ in range(rng.randrange(1, 3))]
    return Concat(children) if kind == 3 else Union(children)


class TestAgainstAutomata:
    def test_enumeration_matches_dfa_filter(self):
        rng = random.Random(2024)
        words = ["A", "T", "AT", "TA", "AAT", "TTA"]
        universe = [
            "".join(t)
            for n in range(0, 11)
            for t in itertools.product("AT", repeat=n)
        ]
        for _ in range(25):
            e = random_expr(rng, words)
            dfa = automata.determinize(automata.compile(e, "AT"))
            expected = [z for z in universe if automata.accepts(dfa, z)]
            assert enumerate_expr(e, 10) == expected
