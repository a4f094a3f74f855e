from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings, strategies as st

from lie2.classical import BilinearForm, gl, make_classical, matrix_coords, matrix_lie, sl, unit_matrix
from lie2.divpow import GeneratingFunction, make_ext, make_vect, vect_superization
from lie2.cli import enumerate_gradings
from lie2.field import GF
from lie2.linalg import identity, mat_mul, rank
from lie2.liealg import (
    LieAlgebra, LieError, Subspace, bracket_space, center, derivation_space, is_derivation,
    is_ideal, is_solvable, quotient_by, series, series_dims, subalgebra, two_power, validate_lie,
)


def vec(g, *idx):
    v = [0] * g.dim
    for i in idx:
        v[i] ^= 1
    return v


def sup(*c):
    return vect_superization(GeneratingFunction(len(c), tuple(c)))


def abelian(d):
    return LieAlgebra(d, {})


def test_bracket_alternating_and_vect_example():
    g = make_vect(2)
    # [d, x^(2) d] = x d
    assert g.bracket(vec(g, 0), vec(g, 2)) == vec(g, 1)
    for x in itertools.product((0, 1), repeat=g.dim):
        assert not any(g.bracket(x, x))


def test_even_block_bracket_example():
    # even block of the (0,0) superization of vect^(1)(1;2), as 3x3 matrices
    e_m2, e0, e2 = unit_matrix(3, 1, 2), unit_matrix(3, 1, 1), unit_matrix(3, 2, 1)
    e0[2][2] = 1
    g = matrix_lie([e_m2, e0, e2])
    c = lambda M: matrix_coords(g, M)
    assert g.dim == 3
    assert g.bracket(c(e_m2), c(e2)) == c(e0)


def test_validate_examples():
    bad = LieAlgebra(2, {(0, 1): {0: 1}}, check=False)
    rep = validate_lie(bad)
    assert not rep.ok
    with pytest.raises(LieError):
        LieAlgebra(2, {(0, 1): {0: 1}})
    assert validate_lie(make_vect(4)).ok
    # Jacobi failure on an alternating table
    broken = LieAlgebra(3, {(0, 1): {1: 1}, (1, 0): {1: 1}, (1, 2): {0: 1}, (2, 1): {0: 1}})
    assert not validate_lie(broken).ok


def test_center_examples():
    assert center(sl(3)).dim == 0
    z = center(gl(2))
    assert z.dim >= 1 and z.contains(matrix_coords(gl(2), identity(2)))
    o2 = make_classical("o2", 8, BilinearForm.Pi(8))
    assert center(o2).dim == 1


def test_quotient_examples():
    g = make_vect(3)
    q = quotient_by(g, Subspace(g))
    assert q.sc == g.sc and q.dim == g.dim
    g3 = gl(3)
    assert quotient_by(g3, center(g3)).dim == 8
    o2 = make_classical("o2", 8, BilinearForm.Pi(8))
    q = quotient_by(o2, center(o2))
    assert q.dim == o2.dim - 1 and validate_lie(q).ok
    with pytest.raises(LieError):
        quotient_by(g, Subspace(g, [vec(g, 0)]))


def test_series_examples():
    a = abelian(4)
    assert series_dims(a) == [4, 0, 0]
    # tables list L_1, L_2, ... up to the first repeat
    even_dims = lambda s: series_dims(s.even_algebra())[1:-1]
    assert even_dims(sup(0, 0, 0)) == [3, 2, 1, 0]
    assert even_dims(sup(0, 1, 0, 0))[:2] == [7, 6]


def test_solvable_examples():
    assert is_solvable(abelian(3))
    assert is_solvable(sup(1, 1).even_algebra())
    assert not is_solvable(sup(1, 0, 1).even_algebra())


def test_derivation_space_examples():
    assert len(derivation_space(abelian(3))) == 9
    assert len(derivation_space(make_vect(2, 1))) == 5
    assert len(derivation_space(make_vect(3, 1))) == 10
    assert derivation_space(abelian(0)) == []


def test_two_power_examples():
    g = make_vect(3)
    z = center(g)
    for b in z.basis:
        assert not any(two_power(g, b))
    s = sl(3)
    for i, M in enumerate(s.mats):
        sq = mat_mul(M, M, s.F)
        assert two_power(s, s.unit(i)) == matrix_coords(s, sq)
    v = make_vect(2, 1)
    assert two_power(v, vec(v, 0)) is None


def test_json_roundtrip():
    g = make_ext(3, GF(2))
    h = LieAlgebra.from_json(g.to_json())
    assert h == g and h.labels == g.labels


ALGEBRAS = {
    "vect3": make_vect(3),
    "vect1_3": make_vect(3, 1),
    "ext3": make_ext(3),
    "sl3": sl(3),
    "o1_5": make_classical("o1", 5, BilinearForm.I(5)),
    "sl3_gf4": sl(3, GF(2)),
}


def algebra_and_vector(name):
    g = ALGEBRAS[name]
    return st.tuples(st.just(g), st.lists(st.integers(0, g.F.order - 1), min_size=g.dim, max_size=g.dim))


pairs = st.sampled_from(sorted(ALGEBRAS)).flatmap(algebra_and_vector)


@given(pairs)
@settings(max_examples=60, deadline=None)
def test_two_power_identity(gx):
    g, x = gx
    z = two_power(g, x)
    A = g.ad(x)
    if z is not None:
        assert g.ad(z) == mat_mul(A, A, g.F)


@pytest.mark.parametrize("name", sorted(ALGEBRAS))
def test_constructed_algebras_validate(name):
    assert validate_lie(ALGEBRAS[name]).ok


@pytest.mark.parametrize("name", ["vect1_3", "sl3", "o1_5"])
def test_derivations_reverified(name):
    g = ALGEBRAS[name]
    for D in derivation_space(g):
        assert is_derivation(g, D)
    # inner derivations are among them
    n = g.dim
    flat = [sum(D, []) for D in derivation_space(g)]
    for i in range(n):
        assert rank(flat + [sum(g.ad_basis(i), [])], g.F) == len(flat)


@pytest.mark.parametrize("name", ["vect3", "ext3", "sl3"])
def test_series_terms_are_ideals(name):
    g = ALGEBRAS[name]
    for kind in ("lower_central", "derived"):
        terms = series(g, kind=kind)
        for a, b in zip(terms, terms[1:]):
            assert a.contains_space(b)
            sub = subalgebra(g, a)
            img = Subspace(sub, [a.coords(v) for v in b.basis])
            assert is_ideal(sub, img)
    L0 = Subspace.whole(g)
    for t in series(g, kind="lower_central"):
        assert bracket_space(g, L0, t).basis == [] or t.contains_space(bracket_space(g, L0, t))


def test_idempotent_derivations_are_gradings():
    # every 3x3 GF(2) matrix, filtered by "derivation and U^2 = U", against
    # the idempotents drawn from the solved derivation space
    g = make_vect(2, 1)
    brute = []
    for bits in range(1 << 9):
        U = [[(bits >> (3 * r + c)) & 1 for c in range(3)] for r in range(3)]
        if mat_mul(U, U) == U and is_derivation(g, U):
            brute.append(U)
    found = enumerate_gradings(g)
    listed = [U for c in found["classes"] for U in c["gradings"]]
    assert sorted(brute) == sorted(listed)
    assert found["gradings"] == len(brute)
    for U in brute:
        ker = Subspace(g, [v for v in itertools.product((0, 1), repeat=g.dim)
                           if not any(mat_mul(U, [[x] for x in v])[i][0] for i in range(g.dim))])
        im = Subspace(g, [[U[r][c] for r in range(g.dim)] for c in range(g.dim)])
        assert ker.dim + im.dim == g.dim
        assert ker.contains_space(bracket_space(g, ker, ker))
        assert im.contains_space(bracket_space(g, ker, im))
        assert ker.contains_space(bracket_space(g, im, im))
