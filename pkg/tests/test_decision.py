import random

import pytest
from hypothesis import given, settings, strategies as st

from tensorlogic import (
    Decision,
    Mode,
    NotProvableError,
    Prover,
    bounded_search,
    check,
    decide,
    is_provable,
    parse_inference,
    synthesize_proof,
)
from tensorlogic.terms import atom_list, atom_vector

from helpers import random_balanced_inference, random_inference, random_proof

seeds = st.integers(0, 2**32 - 1)
modes_st = st.sampled_from([Mode.T, Mode.TPRIME])


@pytest.mark.parametrize(
    "text,in_t,in_tprime",
    [
        ("A |- A", True, True),
        ("A * B |- A * B", True, True),
        ("A * B |- B * A", True, False),
        ("A, B |- B * A", True, False),
        ("A * (B * C) |- (A * B) * C", True, True),
        ("1 |- 1", True, True),
        ("|- 1", True, True),
        ("A |- A * 1", True, True),
        ("1, A, 1 |- A", True, True),
        ("A |- A * A", False, False),
        ("A, A |- A", False, False),
        ("A |- B", False, False),
        ("|- A", False, False),
        ("A |-  1", False, False),
        ("A * A, B |- A * (B * A)", True, False),
        ("A, B, C |- C * (A * B)", True, False),
        ("A, B, C |- A * (B * C)", True, True),
        ("A * 1 * B |- 1 * (A * B)", True, True),
    ],
)
def test_decide_oracle(text, in_t, in_tprime):
    inf = parse_inference(text)
    assert (decide(inf, Mode.T) is Decision.PROVABLE) == in_t
    assert (decide(inf, Mode.TPRIME) is Decision.PROVABLE) == in_tprime


@given(seeds, modes_st)
@settings(max_examples=150, deadline=None)
def test_synthesized_proofs_check(seed, mode):
    inf = random_balanced_inference(random.Random(seed))
    if mode is Mode.TPRIME and decide(inf, mode) is not Decision.PROVABLE:
        return
    proof = synthesize_proof(inf, mode)
    assert check(proof, mode) == inf


@given(seeds, modes_st)
@settings(max_examples=100, deadline=None)
def test_synthesize_refuses_unprovable(seed, mode):
    inf = random_inference(random.Random(seed))
    if decide(inf, mode) is Decision.PROVABLE:
        proof = synthesize_proof(inf, mode)
        assert check(proof, mode) == inf
    else:
        with pytest.raises(NotProvableError):
            synthesize_proof(inf, mode)


@given(seeds, modes_st)
@settings(max_examples=100, deadline=None)
def test_checked_proofs_decide_provable(seed, mode):
    """Everything a proof concludes is judged provable (kernel soundness)."""
    proof = random_proof(random.Random(seed), mode)
    conc = check(proof, mode)
    assert decide(conc, mode) is Decision.PROVABLE


def test_decide_criteria_shapes():
    # mode t compares atom multisets, mode tprime ordered atom lists
    inf = parse_inference("B, A |- A * B")
    assert atom_vector(inf.antecedent) == atom_vector(inf.consequent)
    assert atom_list(inf.antecedent) != atom_list(inf.consequent)
    assert is_provable(inf, Mode.T)
    assert not is_provable(inf, Mode.TPRIME)


@given(seeds, modes_st)
@settings(max_examples=60, deadline=None)
def test_bounded_search_agrees_with_decide(seed, mode):
    inf = random_inference(random.Random(seed), max_items=2, depth=1)
    result = bounded_search(inf, mode, 400)
    if decide(inf, mode) is Decision.PROVABLE:
        assert result.found
        assert check(result.proof, mode) == inf
    else:
        assert not result.found


@given(seeds, modes_st)
@settings(max_examples=40, deadline=None)
def test_search_finds_minimal_or_none(seed, mode):
    inf = random_balanced_inference(random.Random(seed), max_items=2)
    result = bounded_search(inf, mode, 400)
    if result.found:
        # the canonical proof is an upper bound for the minimal proof
        assert result.proof.size() <= synthesize_proof(inf, mode).size()


def test_prover_memo_reuse():
    prover = Prover(Mode.T)
    inf = parse_inference("A * B, C |- C * (B * A)")
    first = prover.prove(inf, 400)
    second = prover.prove(inf, 400)
    assert first.found and second.found
    assert first.proof == second.proof


def test_search_with_theory_uses_axioms():
    from tensorlogic.theory import parse_theory

    theory = parse_theory("atoms A B ; free A ; dispose B ;")
    inf = parse_inference("B |- A")
    result = bounded_search(inf, Mode.T, 400, theory)
    assert result.found
    assert check(result.proof, Mode.T, theory) == inf
