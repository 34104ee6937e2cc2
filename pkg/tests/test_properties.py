"""Property-based tests for the structural invariants."""

import hypothesis.strategies as st
import numpy as np
import pytest
from hypothesis import given, settings

from dmagma.constructions import commutator_double
from dmagma.groups import (
    make_cyclic,
    make_dihedral,
    make_heisenberg,
    make_metacyclic,
    parse_group_spec,
)
from dmagma.words import (
    Bracket,
    Conjugate,
    IdentityLiteral,
    IntPower,
    Inverse,
    Product,
    Variable,
    _eval_batch,
    evaluate,
    free_variables,
    parse_term,
    to_string,
)

GROUPS = [
    make_cyclic(6),
    make_dihedral(3),
    make_dihedral(4),
    make_metacyclic(7, 3, 2),
    make_heisenberg(2),
    parse_group_spec("perm:(1 2),(1 2 3)"),
]

_names = st.sampled_from(["x", "y", "z", "u", "w", "ab"])
_base = st.one_of(st.builds(Variable, _names), st.just(IdentityLiteral()))
# IntPower(-1) is excluded: the parser canonicalizes that exponent to Inverse.
_exponents = st.integers(-32, 32).filter(lambda k: k != -1)
terms = st.recursive(
    _base,
    lambda sub: st.one_of(
        st.builds(Inverse, sub),
        st.builds(Product, sub, sub),
        st.builds(IntPower, sub, _exponents),
        st.builds(Conjugate, sub, sub),
        st.builds(Bracket, sub, sub),
    ),
    max_leaves=24,
)


@given(terms)
def test_print_parse_round_trip(term):
    assert parse_term(to_string(term)) == term


@given(terms, st.integers(0, 10**9))
@settings(max_examples=60)
def test_scalar_and_batch_evaluation_agree(term, pick):
    g = GROUPS[pick % len(GROUPS)]
    rng = np.random.default_rng(pick)
    names = free_variables(term)
    assignment = {v: int(rng.integers(0, g.order)) for v in names}
    scalar = evaluate(term, g, assignment)
    env = {v: np.array([i], dtype=np.int32) for v, i in assignment.items()}
    batch = int(_eval_batch(term, g, env, 1)[0])
    assert scalar == batch


@pytest.mark.parametrize("g", GROUPS, ids=lambda g: g.label)
@given(data=st.data())
@settings(max_examples=40, deadline=None)
def test_commutator_identities_pointwise(g, data):
    x = data.draw(st.integers(0, g.order - 1))
    y = data.draw(st.integers(0, g.order - 1))
    z = data.draw(st.integers(0, g.order - 1))
    comm, conj, mul, inv = g.commutator, g.conjugate, g.product, g.inverse
    # (I i)  [x,y] = x^-1 x^y
    assert comm(x, y) == mul(inv(x), conj(x, y))
    # (I ii) [x,y]^-1 = [y,x]
    assert inv(comm(x, y)) == comm(y, x)
    # (I iii) [x^-1,y] = ([x,y]^-1)^(x^-1) and [x,y^-1] = ([x,y]^-1)^(y^-1)
    assert comm(inv(x), y) == conj(inv(comm(x, y)), inv(x))
    assert comm(x, inv(y)) == conj(inv(comm(x, y)), inv(y))
    # (I iv) [xy,z] = [x,z]^y [y,z]
    assert comm(mul(x, y), z) == mul(conj(comm(x, z), y), comm(y, z))
    # (I v)  [x,yz] = [x,z] [x,y]^z
    assert comm(x, mul(y, z)) == mul(comm(x, z), conj(comm(x, y), z))


@pytest.mark.parametrize("g", GROUPS, ids=lambda g: g.label)
def test_commutation_double_tables_are_mutually_inverse(g):
    d = commutator_double(g)
    assert np.array_equal(d.bullet.op, g.inv[d.star.op])
    assert np.array_equal(d.bullet.op, d.star.op.T)


@given(st.integers(1, 40))
def test_cyclic_tables_are_latin_with_pinned_identity(n):
    g = make_cyclic(n)
    idx = np.arange(n)
    assert np.array_equal(np.sort(g.mul, axis=1), np.tile(idx, (n, 1)))
    assert np.array_equal(g.mul[0], idx)
    assert np.all(g.mul[idx, g.inv] == 0)
