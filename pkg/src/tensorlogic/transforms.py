"""Proof rewriting: local transformations, cut elimination, canonical forms.

Eleven named local transformations rearrange cuts, tensor rules, and
identities while preserving the conclusion.  Each is bidirectional; the
forward direction is the left-to-right reading of its defining figure.
``eliminate_cuts`` removes every cut whose cut term is introduced by the
logical rules; cuts fed by theory axiom leaves are kept in place.
``canonicalize`` maps every proof of an inference to one canonical cut-free
proof, which decides proof equivalence.
"""

from __future__ import annotations

from .decision import synthesize_proof
from .kernel import (
    Cut,
    Exchange,
    LTensor,
    LUnit,
    Mode,
    NodePath,
    Proof,
    ProofError,
    RTensor,
    RUnit,
    check,
    cut_proofs,
    identity_proof,
    replace_at,
    rule_conclusion,
    subproof_at,
)
from .terms import Inference


class TransformMismatch(ProofError):
    """The subproof does not match the requested transformation pattern."""


class _Permissive:
    """Licenses every axiom leaf; used where conclusions are shape-only."""

    def is_available(self, term) -> bool:
        return True

    def is_disposable(self, term) -> bool:
        return True

    def is_conversion(self, source, target) -> bool:
        return True


_PERMISSIVE = _Permissive()


class _Concluder:
    """Conclusion computation with sharing-aware memoisation."""

    def __init__(self, mode: Mode):
        self.mode = mode
        self.memo: dict[int, tuple[Proof, Inference]] = {}

    def __call__(self, proof: Proof) -> Inference:
        hit = self.memo.get(id(proof))
        if hit is not None and hit[0] is proof:
            return hit[1]
        concs = [self(p) for p in proof.premises]
        conc = rule_conclusion(proof.rule, concs, self.mode, _PERMISSIVE)
        self.memo[id(proof)] = (proof, conc)
        return conc


# --- cut elimination ---------------------------------------------------------


class _Eliminator:
    def __init__(self, mode: Mode):
        self.mode = mode
        self.conclude = _Concluder(mode)

    def eliminate(self, proof: Proof) -> Proof:
        premises = tuple(self.eliminate(p) for p in proof.premises)
        if isinstance(proof.rule, Cut):
            p1, p2 = premises
            if self.mode is Mode.T:
                pos = len(self.conclude(p2).antecedent) - 1
            else:
                pos = proof.rule.position
            return self.splice(p1, p2, pos)
        return Proof(proof.rule, premises)

    def _cut(self, p1: Proof, p2: Proof, pos: int) -> Proof:
        n2 = len(self.conclude(p2).antecedent)
        return cut_proofs(p1, p2, pos, self.mode, n2)

    def splice(self, p1: Proof, p2: Proof, pos: int) -> Proof:
        """A proof of the cut's conclusion from cut-free-so-far premises.

        ``p1`` proves ``Gamma |- B`` and ``p2`` proves ``Delta, B, Theta |- A``
        with ``B`` at ``pos``.  Cases are tried in the order: identity
        elimination, right-premise commutation, left-premise commutation,
        primary reduction.  When nothing applies (an axiom leaf feeds the
        cut), the cut is rebuilt in place.
        """
        c1 = self.conclude(p1)
        c2 = self.conclude(p2)
        b = c2.antecedent[pos]
        g = len(c1.antecedent)
        d = g - 1

        # identity elimination
        if c1.antecedent == (b,):
            return p2
        if len(c2.antecedent) == 1 and c2.consequent == b:
            return p1

        r2 = p2.rule
        # right-premise commutation
        if isinstance(r2, Exchange):
            (q2,) = p2.premises
            i, j, k = r2.i, r2.j, r2.k
            # map pos in the exchanged antecedent back to the premise
            if pos < i or pos >= k:
                pos_src = pos
            elif pos < i + (k - j):
                pos_src = j + (pos - i)
            else:
                pos_src = i + (pos - (i + (k - j)))
            rec = self.splice(p1, q2, pos_src)
            i2 = i + d if i > pos_src else i
            j2 = j + d if j > pos_src else j
            k2 = k + d if k > pos_src else k
            if i2 == j2 or j2 == k2:  # a block vanished with an empty splice
                return rec
            return Proof(Exchange(i2, j2, k2), (rec,))
        if isinstance(r2, LUnit) and r2.position != pos:
            (q2,) = p2.premises
            q = r2.position
            pos_src = pos if pos < q else pos - 1
            rec = self.splice(p1, q2, pos_src)
            q2pos = q + d if q > pos_src else q
            return Proof(LUnit(q2pos), (rec,))
        if isinstance(r2, LTensor) and r2.position != pos:
            (q2,) = p2.premises
            q = r2.position
            pos_src = pos if pos < q else pos + 1
            rec = self.splice(p1, q2, pos_src)
            q2pos = q + d if q > pos_src else q
            return Proof(LTensor(q2pos), (rec,))
        if isinstance(r2, RTensor):
            qa, qb = p2.premises
            la = len(self.conclude(qa).antecedent)
            if pos < la:
                return Proof(RTensor(), (self.splice(p1, qa, pos), qb))
            return Proof(RTensor(), (qa, self.splice(p1, qb, pos - la)))

        # left-premise commutation
        r1 = p1.rule
        if isinstance(r1, LUnit):
            rec = self.splice(p1.premises[0], p2, pos)
            return Proof(LUnit(pos + r1.position), (rec,))
        if isinstance(r1, LTensor):
            rec = self.splice(p1.premises[0], p2, pos)
            return Proof(LTensor(pos + r1.position), (rec,))
        if isinstance(r1, Exchange):
            rec = self.splice(p1.premises[0], p2, pos)
            return Proof(Exchange(pos + r1.i, pos + r1.j, pos + r1.k), (rec,))

        # primary reductions
        if isinstance(r2, LUnit) and r2.position == pos and isinstance(r1, RUnit):
            return p2.premises[0]
        if isinstance(r2, LTensor) and r2.position == pos and isinstance(r1, RTensor):
            p1a, p1b = p1.premises
            (q2,) = p2.premises
            rec1 = self.splice(p1b, q2, pos + 1)
            return self.splice(p1a, rec1, pos)

        # an axiom leaf introduces the cut term; keep this cut
        return self._cut(p1, p2, pos)


def eliminate_cuts(proof: Proof, mode: Mode) -> Proof:
    """Remove cuts innermost-first; the conclusion is preserved.

    Cuts whose cut term comes from a theory axiom leaf cannot be removed and
    remain in the result; :func:`tensorlogic.kernel.cut_paths` reports them.
    """
    return _Eliminator(mode).eliminate(proof)


# --- named transformations ---------------------------------------------------


def _epos(node: Proof, mode: Mode, conclude: _Concluder) -> int:
    assert isinstance(node.rule, Cut)
    if mode is Mode.T:
        return len(conclude(node.premises[1]).antecedent) - 1
    assert node.rule.position is not None
    return node.rule.position


def _require(cond: bool, detail: str) -> None:
    if not cond:
        raise TransformMismatch(detail)


def _as_cut(node: Proof, detail: str) -> None:
    _require(isinstance(node.rule, Cut), detail)


class _Rewriter:
    def __init__(self, mode: Mode):
        self.mode = mode
        self.conclude = _Concluder(mode)

    def _cut(self, p1: Proof, p2: Proof, pos: int) -> Proof:
        n2 = len(self.conclude(p2).antecedent)
        return cut_proofs(p1, p2, pos, self.mode, n2)

    def _pos(self, node: Proof) -> int:
        return _epos(node, self.mode, self.conclude)

    def _ant_len(self, p: Proof) -> int:
        return len(self.conclude(p).antecedent)

    # (1) two stacked cuts, reassociated through the left premise
    def cut_cut_v_fwd(self, node: Proof) -> Proof:
        _as_cut(node, "expected a cut whose left premise is a cut")
        inner, pc = node.premises
        _as_cut(inner, "left premise is not a cut")
        pa, pb = inner.premises
        q = self._pos(node)
        p = self._pos(inner)
        return self._cut(pa, self._cut(pb, pc, q), q + p)

    def cut_cut_v_inv(self, node: Proof) -> Proof:
        _as_cut(node, "expected a cut whose right premise is a cut")
        pa, inner = node.premises
        _as_cut(inner, "right premise is not a cut")
        pb, pc = inner.premises
        q = self._pos(inner)
        r = self._pos(node)
        len_b = self._ant_len(pb)
        _require(q <= r < q + len_b, "outer cut item lies outside the inner left block")
        return self._cut(self._cut(pa, pb, r - q), pc, q)

    # (2) two independent cuts into one proof, order swapped
    def cut_cut_h_fwd(self, node: Proof) -> Proof:
        _as_cut(node, "expected a cut whose right premise is a cut")
        px, inner = node.premises
        _as_cut(inner, "right premise is not a cut")
        py, ppsi = inner.premises
        q = self._pos(inner)
        r = self._pos(node)
        _require(r < q, "outer cut item is not left of the inner block")
        len_x = self._ant_len(px)
        new_inner = self._cut(px, ppsi, r)
        return self._cut(py, new_inner, q + len_x - 1)

    def cut_cut_h_inv(self, node: Proof) -> Proof:
        _as_cut(node, "expected a cut whose right premise is a cut")
        px, inner = node.premises
        _as_cut(inner, "right premise is not a cut")
        py, ppsi = inner.premises
        q = self._pos(inner)
        r = self._pos(node)
        len_y = self._ant_len(py)
        _require(r >= q + len_y, "outer cut item is not right of the inner block")
        new_inner = self._cut(px, ppsi, r - len_y + 1)
        return self._cut(py, new_inner, q)

    # (3) a tensored pair cut against its own left fusion, split in two
    def cut_tensor_fwd(self, node: Proof) -> Proof:
        _as_cut(node, "expected a cut of a right-tensor against a left-tensor")
        pt, pl = node.premises
        _require(isinstance(pt.rule, RTensor), "left premise is not a right-tensor step")
        _require(isinstance(pl.rule, LTensor), "right premise is not a left-tensor step")
        pos = self._pos(node)
        _require(pl.rule.position == pos, "the left-tensor does not fuse the cut item")
        pa, pb = pt.premises
        (pc,) = pl.premises
        return self._cut(pa, self._cut(pb, pc, pos + 1), pos)

    def cut_tensor_inv(self, node: Proof) -> Proof:
        _as_cut(node, "expected two nested cuts at adjacent positions")
        pa, inner = node.premises
        _as_cut(inner, "right premise is not a cut")
        pb, pc = inner.premises
        p = self._pos(node)
        _require(self._pos(inner) == p + 1, "inner cut is not at the adjacent position")
        new_left = Proof(RTensor(), (pa, pb))
        new_right = Proof(LTensor(p), (pc,))
        return self._cut(new_left, new_right, p)

    # (4) the unit cut against its own insertion
    def one_cut_fwd(self, node: Proof) -> Proof:
        _as_cut(node, "expected a unit cut")
        p1, p2 = node.premises
        _require(isinstance(p1.rule, RUnit), "left premise is not the unit rule")
        _require(isinstance(p2.rule, LUnit), "right premise is not a unit insertion")
        _require(p2.rule.position == self._pos(node), "the insertion is not at the cut position")
        return p2.premises[0]

    def one_cut_inv(self, node: Proof) -> Proof:
        pos = self._ant_len(node)
        inserted = Proof(LUnit(pos), (node,))
        if self.mode is Mode.T:
            return Proof(Cut(None), (Proof(RUnit()), inserted))
        return Proof(Cut(pos), (Proof(RUnit()), inserted))

    # (5) left-tensor inside the cut's left premise
    def lx_cut_l_fwd(self, node: Proof) -> Proof:
        _as_cut(node, "expected a cut with a left-tensor left premise")
        p1, p2 = node.premises
        _require(isinstance(p1.rule, LTensor), "left premise is not a left-tensor step")
        pos = self._pos(node)
        return Proof(LTensor(pos + p1.rule.position), (self._cut(p1.premises[0], p2, pos),))

    def lx_cut_l_inv(self, node: Proof) -> Proof:
        _require(isinstance(node.rule, LTensor), "expected a left-tensor over a cut")
        (inner,) = node.premises
        _as_cut(inner, "the premise is not a cut")
        p1, p2 = inner.premises
        pos = self._pos(inner)
        s = node.rule.position
        len_g = self._ant_len(p1)
        _require(pos <= s and s + 1 <= pos + len_g - 1, "fused pair is not inside the spliced block")
        return self._cut(Proof(LTensor(s - pos), (p1,)), p2, pos)

    # (6) left-tensor inside the cut's right premise, away from the cut item
    def lx_cut_r_fwd(self, node: Proof) -> Proof:
        _as_cut(node, "expected a cut with a left-tensor right premise")
        p1, p2 = node.premises
        _require(isinstance(p2.rule, LTensor), "right premise is not a left-tensor step")
        pos = self._pos(node)
        q = p2.rule.position
        _require(q != pos, "the left-tensor fuses the cut item")
        d = self._ant_len(p1) - 1
        pos_src = pos if pos < q else pos + 1
        q2 = q + d if q > pos_src else q
        return Proof(LTensor(q2), (self._cut(p1, p2.premises[0], pos_src),))

    def lx_cut_r_inv(self, node: Proof) -> Proof:
        _require(isinstance(node.rule, LTensor), "expected a left-tensor over a cut")
        (inner,) = node.premises
        _as_cut(inner, "the premise is not a cut")
        p1, p2 = inner.premises
        pos = self._pos(inner)
        s = node.rule.position
        len_g = self._ant_len(p1)
        if s + 1 < pos:
            return self._cut(p1, Proof(LTensor(s), (p2,)), pos - 1)
        if s >= pos + len_g:
            return self._cut(p1, Proof(LTensor(s - len_g + 1), (p2,)), pos)
        raise TransformMismatch("fused pair overlaps the spliced block")

    # (7) cut into one factor of a right-tensor
    def rx_cut_fwd(self, node: Proof) -> Proof:
        _as_cut(node, "expected a cut into a right-tensor")
        p1, p2 = node.premises
        _require(isinstance(p2.rule, RTensor), "right premise is not a right-tensor step")
        pos = self._pos(node)
        qa, qb = p2.premises
        la = self._ant_len(qa)
        if pos < la:
            return Proof(RTensor(), (self._cut(p1, qa, pos), qb))
        return Proof(RTensor(), (qa, self._cut(p1, qb, pos - la)))

    def rx_cut_inv(self, node: Proof) -> Proof:
        _require(isinstance(node.rule, RTensor), "expected a right-tensor with a cut factor")
        qa, qb = node.premises
        if isinstance(qa.rule, Cut):
            p = self._pos(qa)
            return self._cut(qa.premises[0], Proof(RTensor(), (qa.premises[1], qb)), p)
        if isinstance(qb.rule, Cut):
            p = self._pos(qb)
            return self._cut(qb.premises[0], Proof(RTensor(), (qa, qb.premises[1])), p + self._ant_len(qa))
        raise TransformMismatch("neither factor ends in a cut")

    # (8) cut against an identity proof on the right
    def r_id_fwd(self, node: Proof) -> Proof:
        _as_cut(node, "expected a cut against a right identity")
        p1, p2 = node.premises
        c2 = self.conclude(p2)
        _require(
            len(c2.antecedent) == 1 and c2.antecedent[0] == c2.consequent,
            "right premise is not an identity-shaped proof",
        )
        return p1

    def r_id_inv(self, node: Proof) -> Proof:
        conc = self.conclude(node)
        idp = identity_proof(conc.consequent, self.mode)
        if self.mode is Mode.T:
            return Proof(Cut(None), (node, idp))
        return Proof(Cut(0), (node, idp))

    # (9) cut against an identity proof on the left
    def l_id_fwd(self, node: Proof) -> Proof:
        _as_cut(node, "expected a cut against a left identity")
        p1, p2 = node.premises
        c1 = self.conclude(p1)
        _require(
            len(c1.antecedent) == 1 and c1.antecedent[0] == c1.consequent,
            "left premise is not an identity-shaped proof",
        )
        return p2

    def l_id_inv(self, node: Proof) -> Proof:
        conc = self.conclude(node)
        _require(len(conc.antecedent) > 0, "the antecedent is empty")
        pos = len(conc.antecedent) - 1 if self.mode is Mode.T else 0
        item = conc.antecedent[pos]
        return self._cut(identity_proof(item, self.mode), node, pos)

    # (10) left-tensor commuted past a right-tensor
    def lx_rx_fwd(self, node: Proof) -> Proof:
        _require(isinstance(node.rule, RTensor), "expected a right-tensor over a left-tensor")
        pa, pb = node.premises
        _require(isinstance(pa.rule, LTensor), "left factor is not a left-tensor step")
        q = pa.rule.position
        return Proof(LTensor(q), (Proof(RTensor(), (pa.premises[0], pb)),))

    def lx_rx_inv(self, node: Proof) -> Proof:
        _require(isinstance(node.rule, LTensor), "expected a left-tensor over a right-tensor")
        (inner,) = node.premises
        _require(isinstance(inner.rule, RTensor), "the premise is not a right-tensor step")
        qa, qb = inner.premises
        q = node.rule.position
        _require(q + 1 <= self._ant_len(qa) - 1, "fused pair is not inside the left factor")
        return Proof(RTensor(), (Proof(LTensor(q), (qa,)), qb))

    # (11) unit insertion commuted past a right-tensor
    def l1_rx_fwd(self, node: Proof) -> Proof:
        _require(isinstance(node.rule, RTensor), "expected a right-tensor over a unit insertion")
        pa, pb = node.premises
        _require(isinstance(pa.rule, LUnit), "left factor is not a unit insertion")
        q = pa.rule.position
        return Proof(LUnit(q), (Proof(RTensor(), (pa.premises[0], pb)),))

    def l1_rx_inv(self, node: Proof) -> Proof:
        _require(isinstance(node.rule, LUnit), "expected a unit insertion over a right-tensor")
        (inner,) = node.premises
        _require(isinstance(inner.rule, RTensor), "the premise is not a right-tensor step")
        qa, qb = inner.premises
        q = node.rule.position
        _require(q <= self._ant_len(qa), "insertion is not inside the left factor")
        return Proof(RTensor(), (Proof(LUnit(q), (qa,)), qb))


TRANSFORMS = (
    "cut-cut-v",
    "cut-cut-h",
    "cut-tensor",
    "one-cut",
    "lx-cut-l",
    "lx-cut-r",
    "rx-cut",
    "r-id",
    "l-id",
    "lx-rx",
    "l1-rx",
)

_DISPATCH = {
    "cut-cut-v": ("cut_cut_v_fwd", "cut_cut_v_inv"),
    "cut-cut-h": ("cut_cut_h_fwd", "cut_cut_h_inv"),
    "cut-tensor": ("cut_tensor_fwd", "cut_tensor_inv"),
    "one-cut": ("one_cut_fwd", "one_cut_inv"),
    "lx-cut-l": ("lx_cut_l_fwd", "lx_cut_l_inv"),
    "lx-cut-r": ("lx_cut_r_fwd", "lx_cut_r_inv"),
    "rx-cut": ("rx_cut_fwd", "rx_cut_inv"),
    "r-id": ("r_id_fwd", "r_id_inv"),
    "l-id": ("l_id_fwd", "l_id_inv"),
    "lx-rx": ("lx_rx_fwd", "lx_rx_inv"),
    "l1-rx": ("l1_rx_fwd", "l1_rx_inv"),
}


def apply_transform(
    proof: Proof, path: NodePath, name: str, mode: Mode, direction: str = "forward"
) -> Proof:
    """Apply the named transformation at ``path`` and return the whole proof.

    ``direction`` is ``"forward"`` or ``"inverse"``.  Raises
    :class:`TransformMismatch` when the subproof does not fit the pattern.
    """
    if name not in _DISPATCH:
        raise ValueError(f"unknown transformation {name!r}")
    if direction not in ("forward", "inverse"):
        raise ValueError(f"direction must be 'forward' or 'inverse', got {direction!r}")
    rw = _Rewriter(mode)
    fn = getattr(rw, _DISPATCH[name][0 if direction == "forward" else 1])
    node = subproof_at(proof, path)
    return replace_at(proof, path, fn(node))


# --- canonical forms ---------------------------------------------------------


def canonicalize(proof: Proof, mode: Mode) -> Proof:
    """The canonical cut-free proof of this proof's conclusion.

    Cut elimination preserves the conclusion, and the canonical proof of an
    inference is determined by the conclusion alone, so the canonical form is
    rebuilt directly from the checked conclusion.  Proofs using theory axiom
    leaves are rejected (they fail :func:`check` without a theory).
    """
    conclusion = check(proof, mode)
    return synthesize_proof(conclusion, mode)


def proofs_equivalent(p1: Proof, p2: Proof, mode: Mode) -> bool:
    """Two proofs are equivalent iff their canonical forms coincide."""
    return canonicalize(p1, mode) == canonicalize(p2, mode)
