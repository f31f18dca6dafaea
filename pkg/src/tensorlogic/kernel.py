"""Proof kernel: rule applications, proof trees, and the checker.

Two modes are supported.  Mode ``T`` has an explicit Exchange rule and a Cut
that always cuts the last antecedent item of its right premise; mode
``TPRIME`` has no Exchange and a positional Cut.  The left rules (unit
insertion and tensor fusion) are positional in both modes.  Positions are
0-based.

Proofs serialise to s-expressions::

    (id A)  (r1)  (l1 POS p)  (lx POS p)  (rx p p)  (cut POS? p p)
    (ex I J K p)  (ax-r TERM)  (ax-l TERM)  (conv TERM TERM)

where ``POS`` is omitted for Cut in mode ``T``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import TYPE_CHECKING, Union

from .terms import (
    UNIT,
    Atom,
    Inference,
    ParseError,
    Tensor,
    Term,
    Unit,
    _lex,
    _parse_term_tokens,
    _TokenStream,
    render_term,
)

if TYPE_CHECKING:  # pragma: no cover
    from .theory import Theory


class Mode(enum.Enum):
    T = "t"
    TPRIME = "tprime"


class ProofError(ValueError):
    """A proof tree does not check."""


class ArityError(ProofError):
    pass


class RuleMismatch(ProofError):
    pass


class PositionOutOfRange(ProofError):
    pass


class ExchangeNotAllowed(ProofError):
    pass


class AxiomNotLicensed(ProofError):
    pass


# --- rule applications -------------------------------------------------------


@dataclass(frozen=True)
class Id:
    atom: Atom


@dataclass(frozen=True)
class RUnit:
    pass


@dataclass(frozen=True)
class LUnit:
    position: int


@dataclass(frozen=True)
class LTensor:
    position: int


@dataclass(frozen=True)
class RTensor:
    pass


@dataclass(frozen=True)
class Cut:
    position: int | None = None


@dataclass(frozen=True)
class Exchange:
    i: int
    j: int
    k: int


@dataclass(frozen=True)
class RAxiom:
    term: Term


@dataclass(frozen=True)
class LAxiom:
    term: Term


@dataclass(frozen=True)
class ConvAxiom:
    source: Term
    target: Term


RuleApp = Union[Id, RUnit, LUnit, LTensor, RTensor, Cut, Exchange, RAxiom, LAxiom, ConvAxiom]

_ARITY = {Id: 0, RUnit: 0, RAxiom: 0, LAxiom: 0, ConvAxiom: 0, LUnit: 1, LTensor: 1, Exchange: 1, RTensor: 2, Cut: 2}


@dataclass(frozen=True)
class Proof:
    rule: RuleApp
    premises: tuple["Proof", ...] = ()

    def size(self) -> int:
        return 1 + sum(p.size() for p in self.premises)


NodePath = tuple[int, ...]


def subproof_at(proof: Proof, path: NodePath) -> Proof:
    for i in path:
        proof = proof.premises[i]
    return proof


def replace_at(proof: Proof, path: NodePath, new: Proof) -> Proof:
    if not path:
        return new
    i = path[0]
    premises = list(proof.premises)
    premises[i] = replace_at(premises[i], path[1:], new)
    return Proof(proof.rule, tuple(premises))


def cut_paths(proof: Proof, prefix: NodePath = ()) -> list[NodePath]:
    """Paths of every Cut node, in pre-order."""
    out = [prefix] if isinstance(proof.rule, Cut) else []
    for i, p in enumerate(proof.premises):
        out.extend(cut_paths(p, prefix + (i,)))
    return out


# --- checking ----------------------------------------------------------------


def check(proof: Proof, mode: Mode, theory: "Theory | None" = None) -> Inference:
    """Validate ``proof`` bottom-up and return its conclusion.

    Raises a :class:`ProofError` subclass naming the offending rule when the
    tree does not check.
    """
    rule = proof.rule
    expected = _ARITY[type(rule)]
    if len(proof.premises) != expected:
        raise ArityError(f"{type(rule).__name__} takes {expected} premises, got {len(proof.premises)}")
    concs = [check(p, mode, theory) for p in proof.premises]
    return rule_conclusion(rule, concs, mode, theory)


def rule_conclusion(
    rule: RuleApp, concs: list[Inference], mode: Mode, theory: "Theory | None" = None
) -> Inference:
    """The conclusion of one rule application given its premises' conclusions."""
    if isinstance(rule, Id):
        return Inference((rule.atom,), rule.atom)

    if isinstance(rule, RUnit):
        return Inference((), UNIT)

    if isinstance(rule, RAxiom):
        if theory is None or not theory.is_available(rule.term):
            raise AxiomNotLicensed(f"no availability axiom for {render_term(rule.term)}")
        return Inference((), rule.term)

    if isinstance(rule, LAxiom):
        if theory is None or not theory.is_disposable(rule.term):
            raise AxiomNotLicensed(f"no disposability axiom for {render_term(rule.term)}")
        return Inference((rule.term,), UNIT)

    if isinstance(rule, ConvAxiom):
        if theory is None or not theory.is_conversion(rule.source, rule.target):
            raise AxiomNotLicensed(
                f"no conversion axiom {render_term(rule.source)} -> {render_term(rule.target)}"
            )
        return Inference((rule.source,), rule.target)

    if isinstance(rule, LUnit):
        (c,) = concs
        items = c.antecedent
        if not 0 <= rule.position <= len(items):
            raise PositionOutOfRange(f"unit insertion at {rule.position} in antecedent of length {len(items)}")
        new = items[: rule.position] + (UNIT,) + items[rule.position :]
        return Inference(new, c.consequent)

    if isinstance(rule, LTensor):
        (c,) = concs
        items = c.antecedent
        if not 0 <= rule.position <= len(items) - 2:
            raise PositionOutOfRange(f"tensor fusion at {rule.position} in antecedent of length {len(items)}")
        fused = Tensor(items[rule.position], items[rule.position + 1])
        new = items[: rule.position] + (fused,) + items[rule.position + 2 :]
        return Inference(new, c.consequent)

    if isinstance(rule, RTensor):
        c1, c2 = concs
        return Inference(c1.antecedent + c2.antecedent, Tensor(c1.consequent, c2.consequent))

    if isinstance(rule, Exchange):
        if mode is not Mode.T:
            raise ExchangeNotAllowed("Exchange is only available in mode t")
        (c,) = concs
        items = c.antecedent
        i, j, k = rule.i, rule.j, rule.k
        if not 0 <= i < j < k <= len(items):
            raise PositionOutOfRange(f"exchange blocks ({i},{j},{k}) in antecedent of length {len(items)}")
        new = items[:i] + items[j:k] + items[i:j] + items[k:]
        return Inference(new, c.consequent)

    if isinstance(rule, Cut):
        c1, c2 = concs
        if mode is Mode.T:
            if rule.position is not None:
                raise RuleMismatch("Cut carries no position in mode t (the last item is cut)")
            if not c2.antecedent:
                raise RuleMismatch("Cut right premise needs a nonempty antecedent")
            pos = len(c2.antecedent) - 1
        else:
            if rule.position is None:
                raise RuleMismatch("Cut requires a position in mode tprime")
            pos = rule.position
            if not 0 <= pos < len(c2.antecedent):
                raise PositionOutOfRange(f"cut at {pos} in antecedent of length {len(c2.antecedent)}")
        if c2.antecedent[pos] != c1.consequent:
            raise RuleMismatch(
                f"cut term mismatch: left premise proves {render_term(c1.consequent)}, "
                f"right premise holds {render_term(c2.antecedent[pos])} at position {pos}"
            )
        new = c2.antecedent[:pos] + c1.antecedent + c2.antecedent[pos + 1 :]
        return Inference(new, c2.consequent)

    raise RuleMismatch(f"unknown rule {rule!r}")  # pragma: no cover


def cut_position(proof: Proof, mode: Mode, right_conclusion: Inference) -> int:
    """Effective cut position of a Cut node given its right premise's conclusion."""
    assert isinstance(proof.rule, Cut)
    if mode is Mode.T:
        return len(right_conclusion.antecedent) - 1
    assert proof.rule.position is not None
    return proof.rule.position


# --- constructors ------------------------------------------------------------


def identity_proof(term: Term, mode: Mode) -> Proof:
    """A proof of ``A |- A`` by structural induction on ``A``."""
    if isinstance(term, Atom):
        return Proof(Id(term))
    if isinstance(term, Unit):
        return Proof(LUnit(0), (Proof(RUnit()),))
    left = identity_proof(term.left, mode)
    right = identity_proof(term.right, mode)
    return tensor_proofs(left, right)


def tensor_proofs(p1: Proof, p2: Proof) -> Proof:
    """From ``A |- B`` and ``C |- D`` build ``A (x) C |- B (x) D``.

    The premises must each have a single antecedent item; this is the tensor
    of proofs used to lift proofs through tensor contexts.
    """
    return Proof(LTensor(0), (Proof(RTensor(), (p1, p2)),))


def cut_proofs(p1: Proof, p2: Proof, pos: int, mode: Mode, n2: int) -> Proof:
    """A cut of ``p1`` into position ``pos`` of ``p2``'s antecedent.

    ``n2`` is the length of ``p2``'s antecedent.  In mode ``tprime`` this is a
    single positional Cut; in mode ``t`` the cut item is first moved to the
    end with Exchange, cut there, and the spliced block moved back.
    """
    if mode is Mode.TPRIME:
        return Proof(Cut(pos), (p1, p2))
    if pos == n2 - 1:
        return Proof(Cut(None), (p1, p2))
    # Delta | B | Theta  ->  Delta | Theta | B
    moved = Proof(Exchange(pos, pos + 1, n2), (p2,))
    cut = Proof(Cut(None), (p1, moved))
    # Delta | Theta | Gamma  ->  Delta | Gamma | Theta
    g = _antecedent_len_of(p1, mode)
    if g == 0:
        return cut
    theta = n2 - 1 - pos
    return Proof(Exchange(pos, pos + theta, pos + theta + g), (cut,))


def _antecedent_len_of(proof: Proof, mode: Mode) -> int:
    return len(check_loose(proof, mode).antecedent)


def check_loose(proof: Proof, mode: Mode) -> Inference:
    """Like :func:`check` but accepting any axiom leaf without a theory.

    Used internally where the licensing theory is not at hand; axiom leaves
    contribute their nominal conclusions.
    """

    class _AnyTheory:
        def is_available(self, term: Term) -> bool:
            return True

        def is_disposable(self, term: Term) -> bool:
            return True

        def is_conversion(self, source: Term, target: Term) -> bool:
            return True

    return check(proof, mode, _AnyTheory())  # type: ignore[arg-type]


# --- derived eliminations ----------------------------------------------------


def eliminate_left_unit(proof: Proof, mode: Mode, site: int) -> Proof:
    """From a proof of ``Gamma, 1, Delta |- A`` derive ``Gamma, Delta |- A``.

    ``site`` indexes the unit item to remove.  Realised by cutting an empty
    unit proof against the given proof.
    """
    conc = check_loose(proof, mode)
    if not (0 <= site < len(conc.antecedent)) or conc.antecedent[site] != UNIT:
        raise PositionOutOfRange(f"antecedent item {site} is not the unit")
    return cut_proofs(Proof(RUnit()), proof, site, mode, len(conc.antecedent))


def eliminate_left_tensor(proof: Proof, mode: Mode, site: int) -> Proof:
    """From ``Gamma, A (x) B, Delta |- C`` derive ``Gamma, A, B, Delta |- C``.

    Realised by cutting ``A, B |- A (x) B`` against the given proof.
    """
    conc = check_loose(proof, mode)
    if not 0 <= site < len(conc.antecedent):
        raise PositionOutOfRange(f"no antecedent item {site}")
    item = conc.antecedent[site]
    if not isinstance(item, Tensor):
        raise RuleMismatch(f"antecedent item {site} is not a tensor")
    pair = Proof(RTensor(), (identity_proof(item.left, mode), identity_proof(item.right, mode)))
    return cut_proofs(pair, proof, site, mode, len(conc.antecedent))


def _unit_paths(term: Term, prefix: tuple[int, ...] = ()) -> list[tuple[int, ...]]:
    if isinstance(term, Unit):
        return [prefix]
    if isinstance(term, Tensor):
        return _unit_paths(term.left, prefix + (0,)) + _unit_paths(term.right, prefix + (1,))
    return []


def _drop_at(term: Term, path: tuple[int, ...]) -> Term:
    """Replace the tensor node above the unit at ``path`` by its other child."""
    if not path:
        raise RuleMismatch("cannot remove a bare unit consequent")
    if len(path) == 1:
        assert isinstance(term, Tensor)
        return term.right if path[0] == 0 else term.left
    assert isinstance(term, Tensor)
    if path[0] == 0:
        return Tensor(_drop_at(term.left, path[1:]), term.right)
    return Tensor(term.left, _drop_at(term.right, path[1:]))


def _unit_drop_proof(term: Term, path: tuple[int, ...], mode: Mode) -> Proof:
    """A proof of ``C |- C'`` where ``C'`` drops the unit factor at ``path``."""
    if len(path) == 1:
        assert isinstance(term, Tensor)
        if path[0] == 1:
            # X (x) 1 |- X
            body = identity_proof(term.left, mode)
            body = Proof(LUnit(1), (body,))
        else:
            # 1 (x) X |- X
            body = identity_proof(term.right, mode)
            if mode is Mode.T:
                body = Proof(LUnit(1), (body,))
                body = Proof(Exchange(0, 1, 2), (body,))
            else:
                body = Proof(LUnit(0), (body,))
        return Proof(LTensor(0), (body,))
    assert isinstance(term, Tensor)
    if path[0] == 0:
        inner = _unit_drop_proof(term.left, path[1:], mode)
        other = identity_proof(term.right, mode)
        return tensor_proofs(inner, other)
    inner = _unit_drop_proof(term.right, path[1:], mode)
    other = identity_proof(term.left, mode)
    return tensor_proofs(other, inner)


def eliminate_right_unit(proof: Proof, mode: Mode, site: int) -> Proof:
    """Remove the ``site``-th unit factor (left-to-right) from the consequent.

    From ``Gamma |- ... 1 ...`` derive the proof with that unit factor
    dropped, by cutting against a unit-dropping identity-style proof.
    """
    conc = check_loose(proof, mode)
    # a bare-unit consequent is not a droppable factor
    paths = [p for p in _unit_paths(conc.consequent) if p]
    if not 0 <= site < len(paths):
        raise PositionOutOfRange(f"consequent has {len(paths)} unit factors, requested {site}")
    drop = _unit_drop_proof(conc.consequent, paths[site], mode)
    if mode is Mode.T:
        return Proof(Cut(None), (proof, drop))
    return Proof(Cut(0), (proof, drop))


# --- mode adapter ------------------------------------------------------------


def to_mode_t(proof: Proof) -> Proof:
    """Re-express a mode ``tprime`` proof as a mode ``t`` proof.

    Positional cuts become Exchange-wrapped last-item cuts; everything else is
    unchanged.  The conclusion is preserved.
    """
    premises = tuple(to_mode_t(p) for p in proof.premises)
    rule = proof.rule
    if isinstance(rule, Cut) and rule.position is not None:
        p1, p2 = premises
        n2 = len(check_loose(p2, Mode.T).antecedent)
        return cut_proofs(p1, p2, rule.position, Mode.T, n2)
    return Proof(rule, premises)


# --- s-expression serialisation ----------------------------------------------


def render_proof(proof: Proof) -> str:
    rule = proof.rule
    if isinstance(rule, Id):
        head = f"id {rule.atom.name}"
    elif isinstance(rule, RUnit):
        head = "r1"
    elif isinstance(rule, LUnit):
        head = f"l1 {rule.position}"
    elif isinstance(rule, LTensor):
        head = f"lx {rule.position}"
    elif isinstance(rule, RTensor):
        head = "rx"
    elif isinstance(rule, Cut):
        head = "cut" if rule.position is None else f"cut {rule.position}"
    elif isinstance(rule, Exchange):
        head = f"ex {rule.i} {rule.j} {rule.k}"
    elif isinstance(rule, RAxiom):
        head = f"ax-r {render_term(rule.term)}"
    elif isinstance(rule, LAxiom):
        head = f"ax-l {render_term(rule.term)}"
    elif isinstance(rule, ConvAxiom):
        head = f"conv {render_term(rule.source)} {render_term(rule.target)}"
    else:  # pragma: no cover
        raise ValueError(f"unknown rule {rule!r}")
    parts = [head] + [render_proof(p) for p in proof.premises]
    return "(" + " ".join(parts) + ")"


def _parse_int(ts: _TokenStream) -> int:
    tok = ts.next()
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"expected an integer, got {tok!r}") from None


def _peek_int(ts: _TokenStream) -> bool:
    tok = ts.peek()
    if tok is None:
        return False
    try:
        int(tok)
        return True
    except ValueError:
        return False


def _parse_proof_tokens(ts: _TokenStream) -> Proof:
    ts.expect("(")
    head = ts.next()
    rule: RuleApp
    n_premises: int
    if head == "id":
        tok = ts.next()
        if tok in _STRUCTURAL_SEXP:
            raise ParseError(f"expected an atom name, got {tok!r}")
        rule, n_premises = Id(Atom(tok)), 0
    elif head == "r1":
        rule, n_premises = RUnit(), 0
    elif head == "l1":
        rule, n_premises = LUnit(_parse_int(ts)), 1
    elif head == "lx":
        rule, n_premises = LTensor(_parse_int(ts)), 1
    elif head == "rx":
        rule, n_premises = RTensor(), 2
    elif head == "cut":
        pos = _parse_int(ts) if _peek_int(ts) else None
        rule, n_premises = Cut(pos), 2
    elif head == "ex":
        i, j, k = _parse_int(ts), _parse_int(ts), _parse_int(ts)
        rule, n_premises = Exchange(i, j, k), 1
    elif head == "ax-r":
        rule, n_premises = RAxiom(_parse_term_tokens(ts)), 0
    elif head == "ax-l":
        rule, n_premises = LAxiom(_parse_term_tokens(ts)), 0
    elif head == "conv":
        src = _parse_term_tokens(ts)
        tgt = _parse_term_tokens(ts)
        rule, n_premises = ConvAxiom(src, tgt), 0
    else:
        raise ParseError(f"unknown proof rule {head!r}")
    premises = tuple(_parse_proof_tokens(ts) for _ in range(n_premises))
    ts.expect(")")
    return Proof(rule, premises)


_STRUCTURAL_SEXP = {"(", ")", "*", ",", "|-", "1"}


def parse_proof(text: str) -> Proof:
    ts = _TokenStream(_lex(text))
    proof = _parse_proof_tokens(ts)
    if ts.peek() is not None:
        raise ParseError(f"trailing input after proof: {ts.peek()!r}")
    return proof
