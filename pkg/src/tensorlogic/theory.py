"""Resource theories: axiom sets over the base calculus and their decision.

A theory declares an atom alphabet and three kinds of axioms: *available*
terms (provable from nothing), *disposable* terms (reducible to the unit),
and *conversions* ``A -> B``.  Conversions are stored after common-factor
reduction, so the two sides of a stored conversion share no atoms.

The text format, one statement per ``;``::

    # comment
    atoms C Q_A Q_B E ;
    free C ;
    dispose Q_A ;
    convert E -> Q_A * Q_B ;

``decide_in_theory`` runs in three stages: (i) enumerate non-negative integer
solutions of the atom balance equation by increasing total axiom usage up to
a cap, (ii) search for an application order in which each conversion holds
its full source multiset, and (iii) synthesise a checkable witness proof with
axiom leaves.  ``NotProvable`` is only reported when the balance equation is
infeasible even over non-negative rationals for a conversion-free form of the
theory; otherwise exhaustion of the cap yields ``Unknown``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from pathlib import Path

from scipy.optimize import linprog

from .decision import synthesize_proof
from .kernel import (
    ConvAxiom,
    Cut,
    LAxiom,
    Mode,
    Proof,
    RAxiom,
    RTensor,
    identity_proof,
    tensor_proofs,
)
from .terms import (
    UNIT,
    Atom,
    Inference,
    ParseError,
    Tensor,
    Term,
    atom_list,
    atom_vector,
    parse_term,
    render_term,
    tensor_of,
)


class TheoryError(ValueError):
    pass


class UndeclaredAtom(TheoryError):
    pass


class SharedAtoms(TheoryError):
    pass


class ConversionPresent(TheoryError):
    pass


class EncodingError(TheoryError):
    pass


@dataclass(frozen=True)
class Theory:
    atoms: frozenset[str]
    available: tuple[Term, ...] = ()
    disposable: tuple[Term, ...] = ()
    conversions: tuple[tuple[Term, Term], ...] = ()

    def is_available(self, term: Term) -> bool:
        return term in self.available

    def is_disposable(self, term: Term) -> bool:
        return term in self.disposable

    def is_conversion(self, source: Term, target: Term) -> bool:
        return (source, target) in self.conversions


def _check_declared(atoms: frozenset[str], term: Term, what: str) -> None:
    for name in atom_list(term):
        if name not in atoms:
            raise UndeclaredAtom(f"{what} uses undeclared atom {name!r}")


def _rebuild(names: list[str]) -> Term:
    return tensor_of(Atom(n) for n in names)


def _remove_occurrences(names: list[str], drop: Counter) -> list[str]:
    """Remove ``drop[n]`` rightmost occurrences of each name, keeping order."""
    remaining = Counter(drop)
    out: list[str] = []
    for n in reversed(names):
        if remaining[n] > 0:
            remaining[n] -= 1
        else:
            out.append(n)
    if +remaining:
        raise ValueError(f"cannot remove {dict(+remaining)} from {names}")
    out.reverse()
    return out


def _reduce_conversion(source: Term, target: Term) -> tuple[Term, Term]:
    """Cancel the shared atom multiset from both sides of a conversion."""
    common = atom_vector(source) & atom_vector(target)
    if not common:
        return source, target
    return (
        _rebuild(_remove_occurrences(atom_list(source), common)),
        _rebuild(_remove_occurrences(atom_list(target), common)),
    )


def make_theory(
    atoms,
    available=(),
    disposable=(),
    conversions=(),
) -> Theory:
    """Build a theory, validating atom declarations and reducing conversions."""
    atom_set = frozenset(atoms)
    for t in available:
        _check_declared(atom_set, t, "availability axiom")
    for t in disposable:
        _check_declared(atom_set, t, "disposability axiom")
    reduced = []
    for a, b in conversions:
        _check_declared(atom_set, a, "conversion source")
        _check_declared(atom_set, b, "conversion target")
        a2, b2 = _reduce_conversion(a, b)
        if atom_vector(a2) & atom_vector(b2):
            raise SharedAtoms(f"conversion sides still share atoms: {render_term(a2)} -> {render_term(b2)}")
        reduced.append((a2, b2))
    return Theory(atom_set, tuple(available), tuple(disposable), tuple(reduced))


# --- theory files ------------------------------------------------------------


def parse_theory(text: str) -> Theory:
    lines = [line.split("#", 1)[0] for line in text.splitlines()]
    body = "\n".join(lines)
    atoms: list[str] = []
    available: list[Term] = []
    disposable: list[Term] = []
    conversions: list[tuple[Term, Term]] = []
    for raw in body.split(";"):
        stmt = raw.strip()
        if not stmt:
            continue
        head, _, rest = stmt.partition(" ")
        rest = rest.strip()
        if head == "atoms":
            names = rest.split()
            if not names:
                raise ParseError("atoms statement needs at least one name")
            atoms.extend(names)
        elif head == "free":
            available.append(parse_term(rest))
        elif head == "dispose":
            disposable.append(parse_term(rest))
        elif head == "convert":
            src, sep, tgt = rest.partition("->")
            if not sep:
                raise ParseError(f"convert statement needs '->': {stmt!r}")
            conversions.append((parse_term(src), parse_term(tgt)))
        else:
            raise ParseError(f"unknown theory statement {head!r}")
    return make_theory(atoms, available, disposable, conversions)


def load_theory(path: str | Path) -> Theory:
    return parse_theory(Path(path).read_text())


# --- lifting -----------------------------------------------------------------


def lift(theory: Theory, inference: Inference, counts: tuple[tuple[int, ...], tuple[int, ...]]) -> Inference:
    """Translate a theory inference into a plain inference.

    ``counts = (m, n)`` gives the usage multiplicities of the availability and
    disposability axioms: each available ``X`` is appended ``m_i`` times to
    the antecedent, each disposable ``Y`` tensored ``n_j`` times onto the
    consequent.  The theory inference holds with these counts iff the lifted
    plain inference holds in mode ``t``.
    """
    if theory.conversions:
        raise ConversionPresent("encode conversions before lifting")
    m, n = counts
    if len(m) != len(theory.available) or len(n) != len(theory.disposable):
        raise ValueError("counts do not match the theory's axiom lists")
    antecedent = inference.antecedent + tuple(
        x for x, mi in zip(theory.available, m) for _ in range(mi)
    )
    consequent = inference.consequent
    for y, nj in zip(theory.disposable, n):
        for _ in range(nj):
            consequent = Tensor(consequent, y)
    return Inference(antecedent, consequent)


# --- conversion encoding -----------------------------------------------------


def _negative_name(term: Term) -> str:
    if isinstance(term, Atom):
        return "-" + term.name
    return "-(" + render_term(term).replace(" ", "") + ")"


def encode_conversion(theory: Theory, style: str) -> Theory:
    """Replace conversions by availability/disposability axioms over fresh
    negative atoms.

    ``style`` is ``"negativeFrom"`` (negate each conversion's source) or
    ``"negativeTo"`` (negate its target).  Each conversion ``A -> B`` becomes
    the available term ``N (x) B`` and the disposable term ``A (x) N`` where
    ``N`` is the fresh negative atom.  Provability of inferences not
    mentioning negative atoms is unchanged.
    """
    if style not in ("negativeFrom", "negativeTo"):
        raise ValueError(f"style must be 'negativeFrom' or 'negativeTo', got {style!r}")
    atoms = set(theory.atoms)
    available = list(theory.available)
    disposable = list(theory.disposable)
    used: set[str] = set()
    for a, b in theory.conversions:
        if atom_vector(a) & atom_vector(b):  # stored theories are reduced
            raise SharedAtoms(f"conversion shares atoms: {render_term(a)} -> {render_term(b)}")
        name = _negative_name(a if style == "negativeFrom" else b)
        if name in theory.atoms or name in used:
            raise EncodingError(f"negative atom name {name!r} is not fresh")
        used.add(name)
        atoms.add(name)
        neg = Atom(name)
        available.append(Tensor(neg, b))
        disposable.append(Tensor(a, neg))
    return Theory(frozenset(atoms), tuple(available), tuple(disposable), ())


# --- balance equation --------------------------------------------------------


def _balance_columns(theory: Theory):
    cols: list[Counter] = []
    for x in theory.available:
        cols.append(+atom_vector(x))
    for y in theory.disposable:
        cols.append(Counter({k: -v for k, v in atom_vector(y).items()}))
    for a, b in theory.conversions:
        c = Counter(atom_vector(b))
        c.subtract(atom_vector(a))
        cols.append(c)
    return cols


def _balance_rhs(inference: Inference) -> Counter:
    rhs = Counter(atom_vector(inference.consequent))
    rhs.subtract(atom_vector(inference.antecedent))
    return rhs


def balance_feasible(theory: Theory, inference: Inference) -> bool:
    """Feasibility of the balance equation over non-negative rationals."""
    cols = _balance_columns(theory)
    rhs = _balance_rhs(inference)
    names = sorted(set(rhs) | {n for c in cols for n in c})
    if not cols:
        return all(rhs[n] == 0 for n in names)
    if not names:
        return True
    a_eq = [[c[n] for c in cols] for n in names]
    b_eq = [rhs[n] for n in names]
    res = linprog(
        c=[0.0] * len(cols), A_eq=a_eq, b_eq=b_eq, bounds=[(0, None)] * len(cols), method="highs"
    )
    return res.status != 2  # 2 = infeasible


def _balanced_solutions(theory: Theory, inference: Inference, cap: int):
    """Yield ``(m, n, k)`` solving the balance equation, by increasing total."""
    cols = _balance_columns(theory)
    rhs = _balance_rhs(inference)
    names = sorted(set(rhs) | {n for c in cols for n in c})
    vecs = [[c[n] for n in names] for c in cols]
    target = [rhs[n] for n in names]
    n_vars = len(cols)
    if n_vars == 0:
        if all(v == 0 for v in target):
            yield ()
        return

    def rec(idx: int, budget: int, acc: list[int], partial: list[int]):
        if idx == n_vars - 1:
            use = budget
            row = [p + use * v for p, v in zip(partial, vecs[idx])]
            if row == target:
                yield tuple(acc + [use])
            return
        for use in range(budget + 1):
            row = [p + use * v for p, v in zip(partial, vecs[idx])]
            yield from rec(idx + 1, budget - use, acc + [use], row)

    for total in range(cap + 1):
        yield from rec(0, total, [], [0] * len(names))


# --- conversion ordering -----------------------------------------------------


def _freeze(c: Counter) -> tuple:
    return tuple(sorted((+c).items()))


def _conversion_order(theory: Theory, start: Counter, k: tuple[int, ...]) -> list[int] | None:
    """An order applying each conversion its budgeted number of times, such
    that the full source multiset is held at each application; None if no
    order exists.  Disposals are deferred to the end, which is never worse."""
    sources = [atom_vector(a) for a, _ in theory.conversions]
    targets = [atom_vector(b) for _, b in theory.conversions]
    seen: set[tuple] = set()

    def dfs(held: Counter, rem: tuple[int, ...]) -> list[int] | None:
        if not any(rem):
            return []
        key = (_freeze(held), rem)
        if key in seen:
            return None
        seen.add(key)
        for l, r in enumerate(rem):
            if r == 0:
                continue
            if any(held[n] < v for n, v in sources[l].items()):
                continue
            nxt = Counter(held)
            nxt.subtract(sources[l])
            nxt.update(targets[l])
            rest = dfs(nxt, rem[:l] + (r - 1,) + rem[l + 1 :])
            if rest is not None:
                return [l] + rest
        return None

    return dfs(Counter(start), k)


# --- witness synthesis -------------------------------------------------------


def _flat(names: list[str]) -> Term:
    return _rebuild(names)


def _cut_last(p: Proof, q: Proof) -> Proof:
    return Proof(Cut(None), (p, q))


def _step(p: Proof, cur: Term, target: Term) -> tuple[Proof, Term]:
    q = synthesize_proof(Inference((cur,), target), Mode.T)
    return _cut_last(p, q), target


def build_witness(
    theory: Theory,
    inference: Inference,
    m: tuple[int, ...],
    n: tuple[int, ...],
    order: list[int],
) -> Proof:
    """A mode-``t`` proof of ``inference`` using the budgeted axiom leaves."""
    state = atom_list(inference.antecedent)
    cur = _flat(state)
    p = synthesize_proof(Inference(inference.antecedent, cur), Mode.T)
    for i, mi in enumerate(m):
        x = theory.available[i]
        for _ in range(mi):
            p = Proof(RTensor(), (p, Proof(RAxiom(x))))
            cur = Tensor(cur, x)
            state = state + atom_list(x)
            p, cur = _step(p, cur, _flat(state))
    for l in order:
        a, b = theory.conversions[l]
        state = _remove_occurrences(state, atom_vector(a))
        rest = _flat(state)
        p, cur = _step(p, cur, Tensor(rest, a))
        conv = tensor_proofs(identity_proof(rest, Mode.T), Proof(ConvAxiom(a, b)))
        p = _cut_last(p, conv)
        cur = Tensor(rest, b)
        state = state + atom_list(b)
        p, cur = _step(p, cur, _flat(state))
    for j, nj in enumerate(n):
        y = theory.disposable[j]
        for _ in range(nj):
            state = _remove_occurrences(state, atom_vector(y))
            rest = _flat(state)
            p, cur = _step(p, cur, Tensor(rest, y))
            disp = tensor_proofs(identity_proof(rest, Mode.T), Proof(LAxiom(y)))
            p = _cut_last(p, disp)
            cur = Tensor(rest, UNIT)
            p, cur = _step(p, cur, _flat(state))
    p, cur = _step(p, cur, inference.consequent)
    return p


# --- the decision procedure --------------------------------------------------


@dataclass
class TheoryVerdict:
    status: str  # "provable" | "not-provable" | "unknown"
    cap: int
    counts: dict | None = None
    witness: Proof | None = None


def decide_in_theory(theory: Theory, inference: Inference, cap: int = 16) -> TheoryVerdict:
    for t in inference.antecedent:
        _check_declared(theory.atoms, t, "inference")
    _check_declared(theory.atoms, inference.consequent, "inference")

    n_av, n_di = len(theory.available), len(theory.disposable)
    if not balance_feasible(theory, inference):
        if not theory.conversions:
            return TheoryVerdict("not-provable", cap)
        # The obstruction is only complete for conversion-free theories;
        # escalate through the negative-atom encoding when it exists.
        try:
            encoded = encode_conversion(theory, "negativeFrom")
        except EncodingError:
            return TheoryVerdict("unknown", cap)
        if not balance_feasible(encoded, inference):
            return TheoryVerdict("not-provable", cap)
        return TheoryVerdict("unknown", cap)

    start_base = atom_vector(inference.antecedent)
    for sol in _balanced_solutions(theory, inference, cap):
        m = sol[:n_av]
        n = sol[n_av : n_av + n_di]
        k = sol[n_av + n_di :]
        held = Counter(start_base)
        for x, mi in zip(theory.available, m):
            for _ in range(mi):
                held.update(atom_vector(x))
        order = _conversion_order(theory, held, k)
        if order is None:
            continue
        witness = build_witness(theory, inference, m, n, order)
        counts = {"available": m, "disposable": n, "conversions": k}
        return TheoryVerdict("provable", cap, counts, witness)
    return TheoryVerdict("unknown", cap)
