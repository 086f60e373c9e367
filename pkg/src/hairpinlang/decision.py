"""The regularity decision procedure and its constructive outputs.

For an analyzed word the closure is regular exactly when, side by side, every
left anchor is generated by the right anchors or vice versa (checked with
:func:`hairpinlang.words.in_star`).  Three regimes exist:

* a single anchor on one side: always regular (construction cited externally);
* equal shortest anchors: the star condition decides, yielding either a
  symbolic construction or a pumping witness;
* different shortest anchors: the closure splits into a disjoint union over
  one-step extensions, each of which lands in the previous regime.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .analysis import HairpinAnalysis, analyze
from .dynamics import enumerate_bounded
from .errors import InternalInvariantViolation, PreconditionError
from .expressions import Atom, AtLeast, Concat, LangExpr, StarSet, Union, complement_image
from .words import Primer, in_star

REGULAR = "regular"
NONREGULAR = "nonregular"

_EXTERNAL_SAMPLE_MARGIN = 10


@dataclass(frozen=True)
class Witness:
    """Checkable evidence that the closure of ``base_word`` is not regular.

    ``nonreg_expr`` is a regular set whose intersection with the closure is
    exactly the aligned pumping family (equal repeat counts on both flanks),
    which is context-free but not regular; ``noncf_expr`` doubles the left
    block, giving an intersection that is not even context-free.  When
    ``mirrored`` is set the anchors were selected on the complement word and
    the expressions have been mapped back.
    """

    base_word: str
    primer: Primer
    s: int
    t: int
    u_s: str
    v_t: str
    u_1: str
    n: int
    mirrored: bool
    nonreg_expr: Concat
    noncf_expr: Concat

    def _fill(self, expr: Concat, counts: list[int]) -> str:
        reps = iter(counts)
        out = []
        for part in expr.parts:
            if isinstance(part, Atom):
                out.append(part.word)
            elif isinstance(part, AtLeast):
                out.append(part.word * next(reps))
            else:  # pragma: no cover - witness expressions hold no other nodes
                raise InternalInvariantViolation("unexpected witness expression node")
        return "".join(out)

    def pump(self, count: int, right_count: Optional[int] = None) -> str:
        """The word of ``nonreg_expr`` with the given repeat counts; it belongs
        to the closure of ``base_word`` iff the two counts are equal."""
        return self._fill(self.nonreg_expr, [count, count if right_count is None else right_count])

    def pump_doubled(
        self,
        count: int,
        second: Optional[int] = None,
        right_count: Optional[int] = None,
    ) -> str:
        """Same for ``noncf_expr``, which carries three repeat blocks."""
        return self._fill(
            self.noncf_expr,
            [count, count if second is None else second, count if right_count is None else right_count],
        )

    def _describe(self, expr: Concat) -> str:
        parts = []
        for part in expr.parts:
            if isinstance(part, Atom):
                parts.append(f'"{part.word}"')
            elif isinstance(part, AtLeast):
                parts.append(f'"{part.word}"^l')
        return "{ " + " ".join(parts) + f" : l >= {self.n} }}"

    @property
    def predicted_intersection(self) -> str:
        return self._describe(self.nonreg_expr)

    @property
    def noncf_intersection(self) -> str:
        return self._describe(self.noncf_expr)


@dataclass(frozen=True)
class Verdict:
    """Outcome of the decision procedure.

    Regular verdicts carry a construction unless one anchor side is trivial
    (``construction_external``); non-regular verdicts carry a witness.  When
    the shortest anchors differ the verdict also records the reduction to
    the one-step extensions it recursed into.
    """

    kind: str
    construction: Optional[LangExpr] = None
    construction_external: bool = False
    witness: Optional[Witness] = None
    reduction: Optional[tuple[tuple[str, "Verdict"], ...]] = None
    sample: Optional[tuple[str, ...]] = None

    def __post_init__(self):
        if self.kind not in (REGULAR, NONREGULAR):
            raise ValueError(f"bad verdict kind {self.kind!r}")
        if self.kind == NONREGULAR and self.witness is None:
            raise ValueError("non-regular verdict needs a witness")

    @property
    def is_regular(self) -> bool:
        return self.kind == REGULAR


def _star(words) -> Optional[StarSet]:
    ws = [w for w in words if w]
    return StarSet(ws) if ws else None


def _concat(*parts) -> Concat:
    return Concat(p for p in parts if p is not None)


def _generated_sides(analysis: HairpinAnalysis) -> tuple[list[int], list[int]]:
    """Indices of left anchors outside the right-anchor star and vice versa."""
    u = analysis.prefixes
    v = analysis.suffix_complements
    bad_left = [s for s in range(1, analysis.m) if not in_star(u[s], v[1:])]
    bad_right = [t for t in range(1, analysis.n) if not in_star(v[t], u[1:])]
    return bad_left, bad_right


def condition_holds(analysis: HairpinAnalysis) -> bool:
    """The two-sided star condition deciding regularity when the shortest
    anchors coincide."""
    u = analysis.prefixes
    v = analysis.suffix_complements
    for s in range(1, analysis.m):
        if not in_star(u[s], v[1:]) and not all(in_star(x, u[1: s + 1]) for x in v[1:]):
            return False
    for t in range(1, analysis.n):
        if not in_star(v[t], u[1:]) and not all(in_star(x, v[1: t + 1]) for x in u[1:]):
            return False
    return True


def _require_core_case(analysis: HairpinAnalysis) -> None:
    if analysis.m < 2 or analysis.n < 2:
        raise PreconditionError("both anchor sides must have at least two entries")
    if analysis.u1 != analysis.v1:
        raise PreconditionError("shortest anchors must coincide")


def construct_regular(analysis: HairpinAnalysis) -> LangExpr:
    """Symbolic form of the closure when the star condition holds.

    With no violations on either side the closure is ``P* w comp(P)*``.  A
    violating left anchor at minimal index s yields the union of layered sets
    ``R' = V* w {comp(u_1..u_{s-1})}*`` and, for s <= i < m,
    ``R_i = {u_1..u_i}* w {comp}* comp(u_i) {comp}*``.  A violating right
    anchor is handled on the complement word and mapped back.
    """
    _require_core_case(analysis)
    if not condition_holds(analysis):
        raise PreconditionError("the star condition fails; no regular construction")
    u = analysis.prefixes
    v = analysis.suffix_complements
    w = analysis.word
    comp = analysis.primer.alphabet.complement
    bad_left, bad_right = _generated_sides(analysis)
    if not bad_left and not bad_right:
        return _concat(_star(u[1:]), Atom(w), _star(comp(x) for x in u[1:]))
    if bad_left and bad_right:
        raise InternalInvariantViolation("violations on both sides despite the condition")
    if bad_right:
        mirror = analyze(comp(w), analysis.primer)
        return complement_image(construct_regular(mirror), analysis.primer.alphabet)
    s = min(bad_left)
    if set(bad_left) != set(range(s, analysis.m)):
        raise InternalInvariantViolation("left violations are not upward closed")
    branches: list[LangExpr] = [
        _concat(_star(v[1:]), Atom(w), _star(comp(x) for x in u[1:s]))
    ]
    for i in range(s, analysis.m):
        tail = _star(comp(x) for x in u[1: i + 1])
        branches.append(_concat(_star(u[1: i + 1]), Atom(w), tail, Atom(comp(u[i])), tail))
    return Union(branches)


def _primal_selection(analysis: HairpinAnalysis) -> Optional[tuple[int, int]]:
    u = analysis.prefixes
    v = analysis.suffix_complements
    s = next((i for i in range(1, analysis.m) if not in_star(u[i], v[1:])), None)
    if s is None:
        return None
    t = next((j for j in range(1, analysis.n) if not in_star(v[j], u[1: s + 1])), None)
    if t is None or s > t:
        return None
    return s, t


def _build_witness(analysis: HairpinAnalysis, s: int, t: int, mirrored: bool,
                   base_word: str) -> Witness:
    u = analysis.prefixes
    v = analysis.suffix_complements
    alphabet = analysis.primer.alphabet
    n = analysis.n
    if in_star(u[s], v[1:]) or in_star(v[t], u[1: s + 1]):
        raise InternalInvariantViolation("selected anchors do not violate the condition")
    head = [Atom(u[s]), AtLeast(u[1], n), Atom(v[t])]
    tail = [Atom(analysis.word), AtLeast(alphabet.complement(u[1]), n),
            Atom(alphabet.complement(u[s]))]
    nonreg = Concat(head + tail)
    noncf = Concat(head + head + tail)
    if mirrored:
        nonreg = complement_image(nonreg, alphabet)
        noncf = complement_image(noncf, alphabet)
    return Witness(
        base_word=base_word,
        primer=analysis.primer,
        s=s,
        t=t,
        u_s=u[s],
        v_t=v[t],
        u_1=u[1],
        n=n,
        mirrored=mirrored,
        nonreg_expr=nonreg,
        noncf_expr=noncf,
    )


def witness_nonregular(analysis: HairpinAnalysis) -> Witness:
    """Anchor pair certifying non-regularity, per the minimal-index selection.

    Picks the smallest s with ``u_s`` outside the right-anchor star, then the
    smallest t with ``v_t`` outside ``{u_1..u_s}*``.  If that yields s > t
    (or no pair), the selection is performed on the complement word, where it
    must succeed with s <= t, and the expressions are mapped back.
    """
    _require_core_case(analysis)
    if condition_holds(analysis):
        raise PreconditionError("the star condition holds; no witness exists")
    pair = _primal_selection(analysis)
    if pair is not None:
        return _build_witness(analysis, *pair, mirrored=False, base_word=analysis.word)
    mirror = analyze(analysis.primer.alphabet.complement(analysis.word), analysis.primer)
    pair = _primal_selection(mirror)
    if pair is None:
        raise InternalInvariantViolation("mirrored anchor selection failed")
    return _build_witness(mirror, *pair, mirrored=True, base_word=analysis.word)


def witness_noncf(witness: Witness) -> LangExpr:
    """Regular set whose intersection with the closure is not context-free."""
    return witness.noncf_expr


def _decide(analysis: HairpinAnalysis, depth: int) -> Verdict:
    w = analysis.word
    primer = analysis.primer
    if analysis.m == 1 or analysis.n == 1:
        sample = enumerate_bounded(w, primer, len(w) + _EXTERNAL_SAMPLE_MARGIN)
        return Verdict(REGULAR, construction_external=True, sample=tuple(sample))
    if analysis.u1 == analysis.v1:
        if condition_holds(analysis):
            return Verdict(REGULAR, construction=construct_regular(analysis))
        return Verdict(NONREGULAR, witness=witness_nonregular(analysis))
    if depth > 0:
        raise InternalInvariantViolation("anchor mismatch below the first reduction")
    comp = primer.alphabet.complement
    sub_words = [w + comp(analysis.prefixes[i]) for i in sorted(analysis.I)]
    sub_words += [analysis.suffix_complements[j] + w for j in sorted(analysis.J)]
    reduction = []
    for sub in sub_words:
        sub_analysis = analyze(sub, primer)
        if sub_analysis.m < 2 or sub_analysis.n < 2 or sub_analysis.u1 != sub_analysis.v1:
            raise InternalInvariantViolation(
                f"one-step extension {sub!r} lost the matched-anchor shape"
            )
        reduction.append((sub, _decide(sub_analysis, depth + 1)))
    reduction = tuple(reduction)
    failing = next((sv for _, sv in reduction if not sv.is_regular), None)
    if failing is None:
        construction = Union([Atom(w)] + [sv.construction for _, sv in reduction])
        return Verdict(REGULAR, construction=construction, reduction=reduction)
    return Verdict(NONREGULAR, witness=failing.witness, reduction=reduction)


def decide(w: str, primer: Primer) -> Verdict:
    """Decide whether the completion closure of ``w`` is regular.

    Propagates the validation errors of :func:`hairpinlang.analysis.analyze`.
    """
    return _decide(analyze(w, primer), depth=0)
