"""Handwritten proof fixtures exercising every rule in both modes.

Each positive fixture is ``(sexpr, mode, theory_text, conclusion)``; each
negative fixture is ``(sexpr, mode, theory_text, error_class_name)``.
"""

THEORY = "atoms A B C ; free A ; dispose B ; convert A -> B ;"

POSITIVE = [
    # identity and units
    ("(id A)", "t", None, "A |- A"),
    ("(id B)", "tprime", None, "B |- B"),
    ("(r1)", "t", None, "|- 1"),
    ("(r1)", "tprime", None, "|- 1"),
    ("(l1 0 (id A))", "t", None, "1, A |- A"),
    ("(l1 1 (id A))", "t", None, "A, 1 |- A"),
    ("(l1 0 (r1))", "t", None, "1 |- 1"),
    ("(l1 0 (l1 0 (id A)))", "t", None, "1, 1, A |- A"),
    ("(l1 0 (id A))", "tprime", None, "1, A |- A"),
    ("(l1 1 (id C))", "tprime", None, "C, 1 |- C"),
    # right tensor
    ("(rx (id A) (id B))", "t", None, "A, B |- A * B"),
    ("(rx (r1) (id A))", "t", None, "A |- 1 * A"),
    ("(rx (id A) (r1))", "t", None, "A |- A * 1"),
    ("(rx (id A) (id B))", "tprime", None, "A, B |- A * B"),
    ("(rx (rx (id A) (id B)) (id C))", "t", None, "A, B, C |- (A * B) * C"),
    ("(rx (id A) (rx (id B) (id C)))", "t", None, "A, B, C |- A * (B * C)"),
    ("(rx (id A) (rx (id B) (rx (id C) (id A))))", "t", None, "A, B, C, A |- A * (B * (C * A))"),
    ("(rx (rx (id A) (id B)) (rx (id C) (id A)))", "tprime", None, "A, B, C, A |- (A * B) * (C * A)"),
    ("(l1 2 (rx (id A) (id B)))", "tprime", None, "A, B, 1 |- A * B"),
    # left tensor
    ("(lx 0 (rx (id A) (id B)))", "t", None, "A * B |- A * B"),
    ("(lx 1 (l1 0 (rx (id A) (id B))))", "t", None, "1, A * B |- A * B"),
    ("(lx 0 (lx 1 (rx (id A) (rx (id B) (id C)))))", "t", None, "A * (B * C) |- A * (B * C)"),
    ("(lx 0 (lx 0 (rx (rx (id A) (id B)) (id C))))", "t", None, "(A * B) * C |- (A * B) * C"),
    ("(lx 0 (l1 1 (id A)))", "t", None, "A * 1 |- A"),
    ("(lx 0 (l1 0 (id A)))", "tprime", None, "1 * A |- A"),
    ("(lx 1 (rx (id A) (rx (id B) (id C))))", "tprime", None, "A, B * C |- A * (B * C)"),
    ("(lx 0 (lx 0 (lx 0 (rx (rx (rx (id A) (id B)) (id C)) (id A)))))", "t", None,
     "((A * B) * C) * A |- ((A * B) * C) * A"),
    # exchange (mode t only)
    ("(ex 0 1 2 (rx (id A) (id B)))", "t", None, "B, A |- A * B"),
    ("(ex 0 1 3 (rx (id A) (rx (id B) (id C))))", "t", None, "B, C, A |- A * (B * C)"),
    ("(ex 0 2 3 (rx (id A) (rx (id B) (id C))))", "t", None, "C, A, B |- A * (B * C)"),
    ("(ex 1 2 3 (rx (id A) (rx (id B) (id C))))", "t", None, "A, C, B |- A * (B * C)"),
    ("(ex 0 1 2 (ex 0 1 2 (rx (id A) (id B))))", "t", None, "A, B |- A * B"),
    ("(ex 0 2 4 (rx (rx (id A) (id B)) (rx (id C) (id A))))", "t", None,
     "C, A, A, B |- (A * B) * (C * A)"),
    ("(ex 1 3 4 (rx (rx (id A) (id B)) (rx (id C) (id A))))", "t", None,
     "A, A, B, C |- (A * B) * (C * A)"),
    ("(lx 0 (ex 0 1 2 (rx (id B) (id A))))", "t", None, "A * B |- B * A"),
    # cut, mode t (always at the last antecedent position)
    ("(cut (id A) (id A))", "t", None, "A |- A"),
    ("(cut (rx (id A) (id B)) (lx 0 (rx (id A) (id B))))", "t", None, "A, B |- A * B"),
    ("(cut (r1) (l1 1 (id A)))", "t", None, "A |- A"),
    ("(cut (id B) (rx (id A) (id B)))", "t", None, "A, B |- A * B"),
    ("(cut (l1 0 (id A)) (id A))", "t", None, "1, A |- A"),
    ("(cut (id A) (ex 0 1 2 (cut (id B) (rx (id A) (id B)))))", "t", None, "B, A |- A * B"),
    ("(cut (rx (id A) (r1)) (lx 0 (l1 1 (id A))))", "t", None, "A |- A"),
    ("(cut (rx (r1) (r1)) (lx 0 (l1 0 (l1 0 (r1)))))", "t", None, "|- 1"),
    ("(cut (ex 0 1 2 (rx (id B) (id A))) (lx 0 (rx (id B) (id A))))", "t", None,
     "A, B |- B * A"),
    # cut, mode tprime (explicit position)
    ("(cut 0 (id A) (rx (id A) (id B)))", "tprime", None, "A, B |- A * B"),
    ("(cut 1 (id B) (rx (id A) (id B)))", "tprime", None, "A, B |- A * B"),
    ("(cut 0 (rx (id A) (id B)) (lx 0 (rx (id A) (id B))))", "tprime", None, "A, B |- A * B"),
    ("(cut 1 (r1) (l1 1 (id A)))", "tprime", None, "A |- A"),
    ("(cut 0 (l1 0 (id A)) (id A))", "tprime", None, "1, A |- A"),
    ("(cut 1 (rx (id B) (id C)) (rx (id A) (lx 0 (rx (id B) (id C)))))", "tprime", None,
     "A, B, C |- A * (B * C)"),
    ("(cut 0 (r1) (l1 0 (rx (id A) (id B))))", "tprime", None, "A, B |- A * B"),
    # theory axioms
    ("(ax-r A)", "t", THEORY, "|- A"),
    ("(ax-l B)", "t", THEORY, "B |- 1"),
    ("(conv A B)", "t", THEORY, "A |- B"),
    ("(ax-r A)", "tprime", THEORY, "|- A"),
    ("(conv A B)", "tprime", THEORY, "A |- B"),
    ("(cut (ax-r A) (conv A B))", "t", THEORY, "|- B"),
    ("(rx (ax-r A) (id C))", "t", THEORY, "C |- A * C"),
    ("(cut (conv A B) (ax-l B))", "t", THEORY, "A |- 1"),
    ("(rx (conv A B) (ax-r A))", "t", THEORY, "A |- B * A"),
    ("(l1 0 (ax-l B))", "t", THEORY, "1, B |- 1"),
    ("(cut (ax-r A) (rx (id C) (conv A B)))", "t", THEORY, "C |- C * B"),
    ("(cut 0 (ax-r A) (rx (conv A B) (id C)))", "tprime", THEORY, "C |- B * C"),
]

NEGATIVE = [
    ("(id A * B)", "t", None, "ParseError"),
    ("(id 1)", "t", None, "ParseError"),
    ("(lx 0 (id A))", "t", None, "PositionOutOfRange"),
    ("(lx 1 (rx (id A) (id B)))", "t", None, "PositionOutOfRange"),
    ("(l1 2 (id A))", "t", None, "PositionOutOfRange"),
    ("(ex 0 1 2 (id A))", "t", None, "PositionOutOfRange"),
    ("(ex 1 1 2 (rx (id A) (id B)))", "t", None, "PositionOutOfRange"),
    ("(ex 0 1 2 (rx (id A) (id B)))", "tprime", None, "ExchangeNotAllowed"),
    ("(cut (id A) (id B))", "t", None, "RuleMismatch"),
    ("(cut 0 (id A) (id A))", "t", None, "RuleMismatch"),
    ("(cut (id A) (id A))", "tprime", None, "RuleMismatch"),
    ("(cut 1 (id A) (id A))", "tprime", None, "PositionOutOfRange"),
    ("(cut (id A) (r1))", "t", None, "RuleMismatch"),
    ("(ax-r A)", "t", None, "AxiomNotLicensed"),
    ("(ax-r B)", "t", THEORY, "AxiomNotLicensed"),
    ("(ax-l A)", "t", THEORY, "AxiomNotLicensed"),
    ("(conv B A)", "t", THEORY, "AxiomNotLicensed"),
    ("(rx (id A))", "t", None, "ParseError"),
]
