"""Decision procedures: normal-form criterion, canonical proofs, bounded search.

``decide`` applies the normal-form criterion: an inference is provable in mode
``t`` iff antecedent and consequent carry the same atom multiset, and in mode
``tprime`` iff they carry the same left-to-right atom list (units ignored in
both).  ``synthesize_proof`` constructs a canonical cut-free witness for the
positive case.  ``bounded_search`` is an independent exhaustive backward
search used to cross-validate the criterion.
"""

from __future__ import annotations

import enum
import sys
from collections import Counter
from dataclasses import dataclass

from .kernel import (
    ConvAxiom,
    Cut,
    Exchange,
    Id,
    LAxiom,
    LTensor,
    LUnit,
    Mode,
    Proof,
    RAxiom,
    RTensor,
    RUnit,
)
from .terms import UNIT, Atom, Inference, Tensor, Term, Unit, atom_list, term_size


class Decision(enum.Enum):
    PROVABLE = "provable"
    NOT_PROVABLE = "not-provable"


class NotProvableError(ValueError):
    """Raised when a witness is requested for an unprovable inference."""


def decide(inference: Inference, mode: Mode) -> Decision:
    src = atom_list(inference.consequent)
    tgt = atom_list(inference.antecedent)
    if mode is Mode.T:
        ok = Counter(src) == Counter(tgt)
    else:
        ok = src == tgt
    return Decision.PROVABLE if ok else Decision.NOT_PROVABLE


def is_provable(inference: Inference, mode: Mode) -> bool:
    return decide(inference, mode) is Decision.PROVABLE


# --- canonical synthesis -----------------------------------------------------


def _build_consequent(term: Term) -> Proof:
    """A proof of ``atoms(term) |- term`` following the consequent's shape."""
    if isinstance(term, Atom):
        return Proof(Id(term))
    if isinstance(term, Unit):
        return Proof(RUnit())
    return Proof(RTensor(), (_build_consequent(term.left), _build_consequent(term.right)))


def _assemble_item(proof: Proof, term: Term, start: int) -> Proof:
    """Fuse the antecedent atoms at ``start`` into the single item ``term``."""
    if isinstance(term, Atom):
        return proof
    if isinstance(term, Unit):
        return Proof(LUnit(start), (proof,))
    proof = _assemble_item(proof, term.left, start)
    proof = _assemble_item(proof, term.right, start + 1)
    return Proof(LTensor(start), (proof,))


def _occurrence_labels(names: list[str]) -> list[tuple[str, int]]:
    seen: Counter = Counter()
    out = []
    for nm in names:
        out.append((nm, seen[nm]))
        seen[nm] += 1
    return out


def synthesize_proof(inference: Inference, mode: Mode) -> Proof:
    """The canonical cut-free proof of a provable inference.

    Identity leaves cover the consequent's atoms, the consequent is assembled
    by right-tensor steps following its tree shape, Exchange nodes (mode ``t``
    only) realise the occurrence matching, and each antecedent item is then
    rebuilt by left rules.  The i-th occurrence of an atom name on the left
    matches the i-th occurrence on the right.

    Raises :class:`NotProvableError` if the inference fails the criterion.
    """
    if decide(inference, mode) is not Decision.PROVABLE:
        raise NotProvableError(str(inference))
    src = atom_list(inference.consequent)
    tgt = atom_list(inference.antecedent)
    proof = _build_consequent(inference.consequent)
    if mode is Mode.T and src != tgt:
        cur = _occurrence_labels(src)
        want = _occurrence_labels(tgt)
        for i in range(len(want)):
            j = cur.index(want[i], i)
            while j > i:
                cur[j - 1], cur[j] = cur[j], cur[j - 1]
                proof = Proof(Exchange(j - 1, j, j + 1), (proof,))
                j -= 1
    start = 0
    for item in inference.antecedent:
        proof = _assemble_item(proof, item, start)
        start += 1
    return proof


# --- bounded backward search -------------------------------------------------


@dataclass
class SearchResult:
    found: bool
    proof: Proof | None = None


def _subterms(term: Term, acc: set[Term]) -> None:
    acc.add(term)
    if isinstance(term, Tensor):
        _subterms(term.left, acc)
        _subterms(term.right, acc)


_Goal = tuple[tuple[Term, ...], Term]


class Prover:
    """Exhaustive backward proof search with memoised subgoals.

    The search is independent of the normal-form criterion: no atom-counting
    pruning is used, only an exact structural lower bound on cut-free proof
    sizes.  With a theory, Cut is searched with cut terms drawn from goal
    subterms and axiom terms; without one, cut-free search is complete.
    """

    def __init__(self, mode: Mode, theory=None, allow_cut: bool | None = None):
        self.mode = mode
        self.theory = theory
        self.allow_cut = (theory is not None) if allow_cut is None else allow_cut
        # goal -> ("proved", size, proof) | ("failed", explored_cap)
        self.memo: dict[_Goal, tuple] = {}

    def prove(self, inference: Inference, max_nodes: int) -> SearchResult:
        # cut search nests at most one level per budgeted node
        limit = sys.getrecursionlimit()
        sys.setrecursionlimit(max(limit, 4 * max_nodes + 200))
        goal = (inference.antecedent, inference.consequent)
        try:
            if self.allow_cut:
                # cuts may grow the goal, so deepen the cap gradually to keep
                # the explored tree close to the size of the smallest proof
                proof = None
                for cap in range(1, max_nodes + 1):
                    proof = self._search(goal, cap)
                    if proof is not None:
                        break
            else:
                proof = self._search(goal, max_nodes)
        finally:
            sys.setrecursionlimit(limit)
        return SearchResult(proof is not None, proof)

    def _lower_bound(self, goal: _Goal) -> int:
        ant, cons = goal
        lb = term_size(cons)
        for item in ant:
            lb += term_size(item) - len(atom_list(item))
        return lb

    def _cut_terms(self, goal: _Goal) -> list[Term]:
        acc: set[Term] = {UNIT}
        for item in goal[0]:
            _subterms(item, acc)
        _subterms(goal[1], acc)
        if self.theory is not None:
            for x in self.theory.available:
                _subterms(x, acc)
            for y in self.theory.disposable:
                _subterms(y, acc)
            for a, b in self.theory.conversions:
                _subterms(a, acc)
                _subterms(b, acc)
        return sorted(acc, key=lambda t: (term_size(t), str(t)))

    @staticmethod
    def _block_move_chain(perm: list[int]) -> list[Exchange]:
        """Exchange rules whose nesting turns premise order ``perm`` into 0..n-1.

        ``perm`` lists original antecedent positions in premise order.  Rules
        are returned outermost first; each one rotates the next wanted item to
        the front of the still-unsorted block.
        """
        n = len(perm)
        work = list(range(n))
        chain: list[Exchange] = []
        for i, want in enumerate(perm):
            p = work.index(want)
            if p != i:
                chain.append(Exchange(i, i + 1, p + 1))
                work[i : p + 1] = [work[p]] + work[i:p]
        return chain

    @staticmethod
    def _selections(n: int):
        """All ways to pick a subset of positions, preserving relative order."""
        for mask in range(1 << n):
            inside = [p for p in range(n) if mask >> p & 1]
            outside = [p for p in range(n) if not mask >> p & 1]
            yield inside, outside

    def _search(self, goal: _Goal, cap: int) -> Proof | None:
        """Minimal proof of ``goal`` within ``cap`` nodes, or ``None``.

        In mode ``t``, premises of right-tensor and cut steps take arbitrary
        sub-antecedents (not just contiguous splits); the proof is completed by
        an Exchange chain restoring the conclusion's ordering, which keeps the
        recursion cycle-free without ever permuting the goal itself.
        """
        if cap < 1:
            return None
        cached = self.memo.get(goal)
        if cached is not None:
            if cached[0] == "proved":
                return cached[2] if cached[1] <= cap else None
            if cached[1] >= cap:
                return None
        if not self.allow_cut and self._lower_bound(goal) > cap:
            self.memo[goal] = ("failed", max(cap, cached[1] if cached else 0))
            return None

        ant, cons = goal
        n = len(ant)
        best: Proof | None = None

        def consider(p: Proof | None) -> None:
            nonlocal best
            if p is not None and (best is None or p.size() < best.size()):
                best = p

        def budget() -> int:
            return cap if best is None else best.size() - 1

        def wrap(sub: Proof, chain: list[Exchange]) -> Proof:
            for rule in reversed(chain):
                sub = Proof(rule, (sub,))
            return sub

        if isinstance(cons, Atom) and ant == (cons,):
            consider(Proof(Id(cons)))
        if cons == UNIT and n == 0:
            consider(Proof(RUnit()))
        if self.theory is not None:
            if n == 0 and self.theory.is_available(cons):
                consider(Proof(RAxiom(cons)))
            if cons == UNIT and n == 1 and self.theory.is_disposable(ant[0]):
                consider(Proof(LAxiom(ant[0])))
            if n == 1 and self.theory.is_conversion(ant[0], cons):
                consider(Proof(ConvAxiom(ant[0], cons)))

        for pos in range(n):
            if ant[pos] == UNIT:
                sub = self._search((ant[:pos] + ant[pos + 1 :], cons), budget() - 1)
                if sub is not None:
                    consider(Proof(LUnit(pos), (sub,)))
        for pos in range(n):
            item = ant[pos]
            if isinstance(item, Tensor):
                pre = ant[:pos] + (item.left, item.right) + ant[pos + 1 :]
                sub = self._search((pre, cons), budget() - 1)
                if sub is not None:
                    consider(Proof(LTensor(pos), (sub,)))
        if isinstance(cons, Tensor):
            for left_pos, right_pos in self._splits(ant):
                chain = self._block_move_chain(left_pos + right_pos)
                if budget() < 2 + len(chain):
                    continue
                m1 = self._search((tuple(ant[p] for p in left_pos), cons.left), budget() - 2 - len(chain))
                if m1 is None:
                    continue
                m2 = self._search(
                    (tuple(ant[p] for p in right_pos), cons.right),
                    budget() - 1 - len(chain) - m1.size(),
                )
                if m2 is not None:
                    consider(wrap(Proof(RTensor(), (m1, m2)), chain))
        if self.allow_cut:
            self._search_cuts(goal, budget, consider, wrap)

        if best is not None:
            self.memo[goal] = ("proved", best.size(), best)
        else:
            self.memo[goal] = ("failed", max(cap, cached[1] if cached else 0))
        return best

    def _splits(self, ant: tuple[Term, ...]):
        """Premise splits of the antecedent: contiguous in ``tprime``, any
        order-preserving subset in ``t``."""
        n = len(ant)
        if self.mode is Mode.T:
            yield from self._selections(n)
        else:
            for split in range(n + 1):
                yield list(range(split)), list(range(split, n))

    def _search_cuts(self, goal: _Goal, budget, consider, wrap) -> None:
        ant, cons = goal
        n = len(ant)
        candidates = self._cut_terms(goal)
        for gamma_pos, delta_pos, lo in self._cut_spans(n):
            gamma = tuple(ant[p] for p in gamma_pos)
            delta = tuple(ant[p] for p in delta_pos)
            if self.mode is Mode.T:
                # the raw cut concludes delta followed by gamma
                chain = self._block_move_chain(delta_pos + gamma_pos)
            else:
                chain = []
            for b in candidates:
                if gamma == (b,):
                    continue  # cutting an item against itself loops
                if budget() < 2 + len(chain):
                    break
                m1 = self._search((gamma, b), budget() - 2 - len(chain))
                if m1 is None:
                    continue
                pre2 = delta + (b,) if lo is None else delta[:lo] + (b,) + delta[lo:]
                m2 = self._search((pre2, cons), budget() - 1 - len(chain) - m1.size())
                if m2 is None:
                    continue
                if lo is None:
                    consider(wrap(Proof(Cut(None), (m1, m2)), chain))
                else:
                    consider(Proof(Cut(lo), (m1, m2)))

    def _cut_spans(self, n: int):
        """Cut antecedent selections with the insertion index for the cut term:
        any order-preserving subset in ``t`` (index ``None`` marks last
        position), contiguous blocks in ``tprime``."""
        if self.mode is Mode.T:
            for inside, outside in self._selections(n):
                yield inside, outside, None
        else:
            for lo in range(n + 1):
                for hi in range(lo, n + 1):
                    yield list(range(lo, hi)), list(range(lo)) + list(range(hi, n)), lo


def bounded_search(
    inference: Inference, mode: Mode, max_nodes: int = 2000, theory=None, allow_cut: bool | None = None
) -> SearchResult:
    return Prover(mode, theory, allow_cut).prove(inference, max_nodes)
