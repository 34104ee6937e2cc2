"""Word language: parsing, printing, evaluation, and the law checker.

The law checker is cross-validated against a naive nested-loop oracle that
shares nothing with the vectorized scan path.
"""

import itertools

import pytest

from dmagma.errors import (
    BudgetExceededError,
    ParseError,
    SpecError,
    UnboundVariableError,
)
from dmagma.groups import make_cyclic, make_dihedral, make_metacyclic, parse_group_spec
from dmagma.words import (
    BUILTIN_LAWS,
    Bracket,
    Conjugate,
    IdentityLiteral,
    IntPower,
    Inverse,
    Product,
    Variable,
    Verdict,
    builtin_law,
    check_law_exhaustive,
    check_law_sampled,
    evaluate,
    free_variables,
    parse_law,
    parse_term,
    to_string,
)

X, Y, Z, U = Variable("x"), Variable("y"), Variable("z"), Variable("u")


# --- parsing -----------------------------------------------------------------


def test_semicolon_bracket_desugars():
    assert parse_term("[x,y;x,z]") == Bracket(Bracket(X, Y), Bracket(X, Z))
    assert parse_term("[w,x;y,z]") == parse_term("[[w,x],[y,z]]")


def test_left_nesting():
    assert parse_term("[x,y,z]") == Bracket(Bracket(X, Y), Z)
    assert parse_term("[x,y,z]") != parse_term("[x,[y,z]]")
    assert parse_term("[x,y,z,u]") == parse_term("[[[x,y],z],u]")


def test_identity_literal():
    assert parse_term("1") == IdentityLiteral()


def test_power_vs_conjugation_tiebreak():
    assert parse_term("a^-1") == Inverse(Variable("a"))
    assert parse_term("a^2") == IntPower(Variable("a"), 2)
    assert parse_term("a^+3") == IntPower(Variable("a"), 3)
    assert parse_term("a^1") == IntPower(Variable("a"), 1)  # integer wins the tie
    assert parse_term("a^b") == Conjugate(Variable("a"), Variable("b"))
    assert parse_term("[x,y]^[y,z]") == Conjugate(Bracket(X, Y), Bracket(Y, Z))


def test_products_and_juxtaposition():
    a, b, c = Variable("a"), Variable("b"), Variable("c")
    assert parse_term("a*b*c") == Product(Product(a, b), c)
    assert parse_term("a b c") == Product(Product(a, b), c)
    assert parse_term("[x,y][y,z]") == Product(Bracket(X, Y), Bracket(Y, Z))
    # a multi-letter run is one identifier, not a product
    assert parse_term("ab") == Variable("ab")


def test_semicolon_right_side_is_a_full_term():
    got = parse_term("[x,y;[x,z]^u]")
    assert got == Bracket(Bracket(X, Y), Conjugate(Bracket(X, Z), U))


def test_parse_errors():
    for bad, what in [
        ("", "empty"),
        ("[x]", "two"),
        ("x^40", "out of range"),
        ("x^", "after"),
        ("2", "constant"),
        ("(x", "expected"),
        ("x)", "trailing"),
        ("x$y", "unexpected character"),
        ("[x,y", "expected"),
    ]:
        with pytest.raises(ParseError, match=what):
            parse_term(bad)


def test_parse_law():
    law = parse_law("[x,y;x,z] = 1")
    assert law.variables == ("x", "y", "z")
    law = parse_law("[w,x;y,z]=[w,y;x,z]")
    assert law.variables == ("w", "x", "y", "z")
    assert parse_law("x = x").variables == ("x",)


def test_parse_law_equals_sign_errors():
    with pytest.raises(ParseError, match="'='"):
        parse_law("[x,y]")
    with pytest.raises(ParseError, match="exactly one"):
        parse_law("x = y = z")


def test_free_variable_order():
    assert free_variables(parse_term("[w,x;y,z]")) == ["w", "x", "y", "z"]
    assert free_variables(parse_term("[z,y]*[y,z]")) == ["z", "y"]


def test_round_trip_examples():
    for text in (
        "[x,y;x,z]",
        "[x,y,z,u]",
        "x^-1*x^y",
        "(x*y)^-2",
        "[x,y]^2*1",
        "x^(y^-1)",
        "[x,y;[x,z]^u]",
    ):
        t = parse_term(text)
        assert parse_term(to_string(t)) == t


# --- evaluation ----------------------------------------------------------------


def test_evaluate_commutator_on_d8():
    g = make_dihedral(8)
    val = evaluate(parse_term("[x,y]"), g, {"x": g.index_of("a"), "y": g.index_of("b")})
    assert g.names[val] == "a6"


def test_evaluate_inverse_product_is_identity():
    g = make_dihedral(6)
    t = parse_term("x^-1 * x")
    for x in g.elements():
        assert evaluate(t, g, {"x": x}) == g.identity


def test_evaluate_commutator_square_on_d3():
    g = make_metacyclic(3, 2, 2)
    val = evaluate(parse_term("[x,y]^2"), g, {"x": g.index_of("a"), "y": g.index_of("b")})
    assert g.names[val] == "a2"


def test_evaluate_powers_and_conjugates():
    g = make_dihedral(8)
    a, b = g.index_of("a"), g.index_of("b")
    assert evaluate(parse_term("x^8"), g, {"x": a}) == g.identity
    assert evaluate(parse_term("x^-3"), g, {"x": a}) == g.power(a, 5)
    assert evaluate(parse_term("x^y"), g, {"x": a, "y": b}) == g.conjugate(a, b)
    assert evaluate(parse_term("x^0"), g, {"x": b}) == g.identity


def test_evaluate_unbound_variable_names_it():
    g = make_cyclic(3)
    with pytest.raises(UnboundVariableError, match="'y'"):
        evaluate(parse_term("[x,y]"), g, {"x": 1})


# --- law checking ----------------------------------------------------------------


def naive_check(group, law):
    """Oracle: plain nested loops in lexicographic order, scalar evaluation."""
    k = len(law.variables)
    for pos, combo in enumerate(itertools.product(range(group.order), repeat=k)):
        env = dict(zip(law.variables, combo))
        if evaluate(law.lhs, group, env) != evaluate(law.rhs, group, env):
            witness = {v: group.names[i] for v, i in env.items()}
            return Verdict("counterexample", evaluations=pos + 1, witness=witness)
    return Verdict("holds-exhaustive", evaluations=group.order**k)


@pytest.mark.parametrize(
    "spec,law_text",
    [
        ("dihedral:3", "[x,y]^2=1"),
        ("dihedral:3", "[x,y,z][y,z,x]=1"),
        ("cyclic:4", "x*y=y*x"),
        ("metacyclic:3,2,2", "[x,y;x,z]=1"),
        ("perm:(1 2),(1 2 3)", "[x,y,z]=1"),
        ("dihedral:4", "[x,y;x,z]=1"),
    ],
)
def test_checker_matches_naive_oracle(spec, law_text):
    g = parse_group_spec(spec)
    law = parse_law(law_text)
    got = check_law_exhaustive(g, law)
    want = naive_check(g, law)
    assert got == want


def test_chunked_scan_is_deterministic():
    g = make_dihedral(4)
    law = parse_law("[x,y,z]=1")
    verdicts = {check_law_exhaustive(g, law, chunk_size=c) for c in (1, 7, 64, 1 << 20)}
    assert len(verdicts) == 1


def test_d8_three_metabelian_law_counts():
    g = make_dihedral(8)
    v = check_law_exhaustive(g, builtin_law("3M_I"))
    assert v.status == "holds-exhaustive"
    assert v.evaluations == 16**3


def test_s4_is_not_three_metabelian():
    g = parse_group_spec("perm:(1 2),(1 2 3 4)")
    v = check_law_exhaustive(g, builtin_law("3M_I"))
    assert v.status == "counterexample"
    # the witness really fails, checked by scalar evaluation
    law = builtin_law("3M_I")
    env = {name: g.index_of(el) for name, el in v.witness.items()}
    assert evaluate(law.lhs, g, env) != evaluate(law.rhs, g, env)


def test_trivial_law_always_holds():
    for spec in ("cyclic:1", "dihedral:5", "perm:(1 2),(1 2 3 4)"):
        assert check_law_exhaustive(parse_group_spec(spec), parse_law("x=x")).holds


def test_no_variable_law():
    v = check_law_exhaustive(make_cyclic(5), parse_law("1=1"))
    assert v.holds and v.evaluations == 1


def test_budget_exceeded_suggests_sampling():
    g = make_dihedral(8)
    with pytest.raises(BudgetExceededError, match="sampled"):
        check_law_exhaustive(g, builtin_law("CI"), budget=1000)


def test_sampled_is_deterministic_and_consistent():
    g = parse_group_spec("perm:(1 2),(1 2 3 4)")
    law = builtin_law("3M_I")
    v1 = check_law_sampled(g, law, 100_000, seed=7)
    v2 = check_law_sampled(g, law, 100_000, seed=7)
    assert v1 == v2
    assert v1.status == "counterexample"
    env = {name: g.index_of(el) for name, el in v1.witness.items()}
    assert evaluate(law.lhs, g, env) != evaluate(law.rhs, g, env)


def test_sampled_holds_when_exhaustive_holds():
    g = make_metacyclic(3, 2, 2)  # D3, 3-metabelian
    law = builtin_law("3M_I")
    assert check_law_exhaustive(g, law).holds
    for seed in (0, 1, 7, 123):
        v = check_law_sampled(g, law, 10_000, seed=seed)
        assert v.status == "holds-sampled"
        assert v.sample_count == 10_000 and v.seed == seed


def test_sampled_heisenberg_second_derived_trivial():
    g = parse_group_spec("heisenberg:3")
    law = parse_law("[w,x;y,z]=1")
    assert check_law_sampled(g, law, 10_000, seed=1).holds
    assert check_law_exhaustive(g, law).holds  # 27^4 assignments, exact


def test_builtin_law_registry():
    assert builtin_law("JACOBI").variables == ("x", "y", "z")
    assert builtin_law("CI").variables == ("w", "x", "y", "z")
    assert str(builtin_law("ASSOC_COMM")) == "[[x,y],z]*[[y,z],x]=1"
    assert set(BUILTIN_LAWS) >= {"3M_I", "CI", "SQUARE", "PAIR", "COMM_SQ", "CLASS2"}
    with pytest.raises(SpecError, match="JACOBI"):
        builtin_law("NO_SUCH_LAW")


def test_comm_sq_verdict_matches_direct_pair_scan(corpus_groups):
    # the law route must agree with squaring every commutator by hand
    law = builtin_law("COMM_SQ")
    for spec, g in corpus_groups:
        direct = all(
            g.product(g.commutator(x, y), g.commutator(x, y)) == g.identity
            for x in g.elements()
            for y in g.elements()
        )
        assert check_law_exhaustive(g, law).holds == direct, spec


def test_verdict_witness_is_lexicographically_smallest():
    g = make_metacyclic(3, 2, 2)
    law = parse_law("[x,y]^2=1")
    got = check_law_exhaustive(g, law)
    want = naive_check(g, law)
    assert got.witness == want.witness
    assert got.evaluations == want.evaluations
