"""Finite ring constructors, the Lie bracket, and the bracket-law registry."""

import numpy as np
import pytest

from dmagma.errors import SpecError
from dmagma.rings import (
    FiniteRing,
    check_ring_law,
    lie_bracket,
    make_matrix_ring,
    make_upper_triangular,
    make_zmod,
    parse_ring_spec,
)


def decode_matrix(r, index, k, n, upper=False):
    """Rebuild the matrix behind an element index, independent of ring internals."""
    if upper:
        positions = [(i, j) for i in range(k) for j in range(i, k)]
    else:
        positions = [(i, j) for i in range(k) for j in range(k)]
    m = np.zeros((k, k), dtype=int)
    for i, j in reversed(positions):
        m[i, j] = index % n
        index //= n
    return m


def encode_matrix(m, k, n):
    index = 0
    for i in range(k):
        for j in range(k):
            index = index * n + int(m[i, j]) % n
    return index


# --- constructors -----------------------------------------------------------


def test_zmod_basics():
    r = make_zmod(1)
    assert r.order == 1 and r.zero == 0
    r6 = make_zmod(6)
    assert np.all(r6.bracket_table() == 0)
    r4 = make_zmod(4)
    assert r4.mul[2, 2] == 0


def test_zmod_rejects_zero():
    with pytest.raises(ValueError):
        make_zmod(0)


def test_matrix_ring_m2z2():
    r = make_matrix_ring(2, 2)
    assert r.order == 16
    noncomm = any(
        r.mul[x, y] != r.mul[y, x] for x in range(16) for y in range(16)
    )
    assert noncomm
    # <E12, E21> = E11 + E22, recomputed from raw matrices
    e12 = encode_matrix(np.array([[0, 1], [0, 0]]), 2, 2)
    e21 = encode_matrix(np.array([[0, 0], [1, 0]]), 2, 2)
    m12, m21 = (decode_matrix(r, e, 2, 2) for e in (e12, e21))
    want = encode_matrix((m12 @ m21 - m21 @ m12) % 2, 2, 2)
    assert lie_bracket(r, e12, e21) == want
    assert decode_matrix(r, want, 2, 2).tolist() == [[1, 0], [0, 1]]


def test_one_by_one_matrices_match_zmod():
    m = make_matrix_ring(1, 5)
    z = make_zmod(5)
    assert np.array_equal(m.add, z.add)
    assert np.array_equal(m.mul, z.mul)


def test_matrix_mul_table_matches_raw_matrix_product():
    r = make_matrix_ring(2, 3)
    rng = np.random.default_rng(0)
    for x, y in rng.integers(0, 81, size=(25, 2)):
        mx, my = decode_matrix(r, int(x), 2, 3), decode_matrix(r, int(y), 2, 3)
        assert int(r.mul[x, y]) == encode_matrix((mx @ my) % 3, 2, 3)


def test_upper_triangular_orders():
    assert make_upper_triangular(2, 2).order == 8
    assert make_upper_triangular(2, 3).order == 27
    u17 = make_upper_triangular(1, 7)
    assert np.all(u17.bracket_table() == 0)


def test_budget_checks():
    with pytest.raises(ValueError, match="budget"):
        make_matrix_ring(5, 3)
    with pytest.raises(ValueError, match="budget"):
        make_upper_triangular(2, 40)


def test_ring_validation_rejects_bad_tables():
    with pytest.raises(ValueError, match="Latin"):
        FiniteRing([[0, 0], [0, 0]], [[0, 0], [0, 0]], ["0", "1"])
    # additive group of Z2 but a multiplication that fails distributivity
    with pytest.raises(ValueError, match="distribute"):
        FiniteRing([[0, 1], [1, 0]], [[1, 1], [1, 1]], ["0", "1"])


def test_parse_ring_spec():
    assert parse_ring_spec("zmod:6").order == 6
    assert parse_ring_spec("matrix:2,2").order == 16
    assert parse_ring_spec("uppertri:2,3").order == 27
    for bad in ("nope:2", "zmod", "zmod:x", "matrix:2", "zmod:0"):
        with pytest.raises(SpecError):
            parse_ring_spec(bad)


# --- bracket structure ----------------------------------------------------------


def test_bracket_of_element_with_itself_is_zero(corpus_rings):
    for spec, r in corpus_rings:
        assert np.all(np.diagonal(r.bracket_table()) == r.zero), spec


def test_bracket_antisymmetry(corpus_rings):
    for spec, r in corpus_rings:
        bk = r.bracket_table()
        assert np.array_equal(bk, r.neg[bk.T]), spec


def test_bracket_jacobi_identity():
    for r in (make_zmod(4), make_upper_triangular(2, 2), make_matrix_ring(2, 2)):
        bk = r.bracket_table()
        n = r.order
        # <<x,y>,z> + <<y,z>,x> + <<z,x>,y> = 0 over all triples
        t1 = bk[bk[:, :, None], np.arange(n)[None, None, :]]
        t2 = np.transpose(t1, (2, 0, 1))  # <<y,z>,x> at position [x,y,z]
        t3 = np.transpose(t1, (1, 2, 0))  # <<z,x>,y> at position [x,y,z]
        total = r.add[r.add[t1, t2], t3]
        assert np.all(total == r.zero)


# --- the law registry -------------------------------------------------------------


def test_commutative_ring_satisfies_everything():
    r = make_zmod(6)
    for name in ("RCI", "ALT3M", "DOUBLE2", "NILP2"):
        assert check_ring_law(r, name).holds, name
    assert check_ring_law(r, "PROPER_WITNESS").holds  # no witness pair


def test_m2z2_has_no_properness_witness():
    r = make_matrix_ring(2, 2)
    v = check_ring_law(r, "PROPER_WITNESS")
    assert v.status == "holds-exhaustive"


def test_m2z3_has_properness_witness():
    r = make_matrix_ring(2, 3)
    v = check_ring_law(r, "PROPER_WITNESS")
    assert v.status == "counterexample"
    x, y = (r.names.index(v.witness[k]) for k in ("x", "y"))
    b = lie_bracket(r, x, y)
    assert int(r.add[b, b]) != r.zero


def test_rci_equivalence_on_corpus(corpus_rings):
    for spec, r in corpus_rings:
        rci = check_ring_law(r, "RCI").holds
        alt = check_ring_law(r, "ALT3M").holds
        dbl = check_ring_law(r, "DOUBLE2").holds
        assert rci == (alt and dbl), spec


def test_law_witnesses_verify_by_scalar_recomputation():
    r = make_matrix_ring(2, 3)
    v = check_ring_law(r, "RCI")
    assert v.status == "counterexample"
    w, x, y, z = (r.names.index(v.witness[k]) for k in ("w", "x", "y", "z"))
    lhs = lie_bracket(r, lie_bracket(r, w, x), lie_bracket(r, y, z))
    rhs = lie_bracket(r, lie_bracket(r, w, y), lie_bracket(r, x, z))
    assert lhs != rhs
    v = check_ring_law(r, "NILP2")
    assert v.status == "counterexample"
    x, y, z = (r.names.index(v.witness[k]) for k in ("x", "y", "z"))
    assert lie_bracket(r, lie_bracket(r, x, y), z) != r.zero


def test_sampled_fallback_past_budget():
    r = make_upper_triangular(2, 2)  # RCI holds here
    v = check_ring_law(r, "RCI", budget=100, sample_count=5000, seed=9)
    assert v.status == "holds-sampled"
    assert v.sample_count == 5000 and v.seed == 9
    bad = make_matrix_ring(2, 3)  # RCI fails; sampling must find a witness
    v = check_ring_law(bad, "RCI", budget=100, sample_count=100_000, seed=3)
    assert v.status == "counterexample"


def test_unknown_ring_law():
    with pytest.raises(SpecError, match="RCI"):
        check_ring_law(make_zmod(2), "NOPE")
