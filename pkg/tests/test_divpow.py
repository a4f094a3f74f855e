from __future__ import annotations

import itertools
import math
import random
from pathlib import Path

import pytest
from hypothesis import given, settings, strategies as st

from lie2.classical import BilinearForm, make_classical
from lie2.divpow import (
    D1_matrix, D_u, D_u_ext, DividedPoly, GeneratingFunction, binom2, bk_grading, bk_vect_sdim,
    conjectured_charpoly, d2_charpoly, deform_maps, deformed_bracket, dp_divpow, dp_mul,
    dp_partial, dp_shift, e_o_basis, ext_square, make_ext, make_vect, rescale_orbits,
    sierpinski_pattern, sigma_rescale, vect_superization,
)
from lie2.field import GF
from lie2.linalg import det, identity, mat_mul, mat_vec
from lie2.liealg import LieError, is_derivation, is_solvable, lie_fingerprint, validate_lie
from lie2.superalg import fingerprint, validate_super

GOLDEN = Path(__file__).parent / "golden"


def gf(c, F=None):
    return GeneratingFunction(len(c), tuple(c), F or GF(1))


def inner_tuples(n, F):
    for rest in itertools.product(range(F.order), repeat=n - 1):
        yield (0,) + rest


# binomials and divided powers


@given(st.integers(0, 4000), st.integers(0, 4000))
def test_binom2_is_lucas(a, b):
    assert binom2(a, b) == math.comb(a, b) % 2


def test_binom2_examples():
    assert all(binom2(r, 0) == 1 for r in range(50))
    assert binom2(3, 1) == 1


@pytest.mark.parametrize("n", range(3, 9))
def test_highest_weight_binomials(n):
    # the three vanishing binomials behind the highest weight vectors
    for k in range(1, n - 1):
        assert binom2(2 ** (n - 1) - 2 + 2 ** k, 2 ** k) == 0
        assert binom2(2 ** (n - 1) - 1 + 2 ** k, 2 ** k) == 0
        assert binom2(2 ** (n - 1) - 1 + 2 ** k - 1, 2 ** k - 1) == 0


def test_dp_examples():
    x = DividedPoly.mono(3, 1)
    assert not dp_mul(x, x)
    assert dp_mul(x, DividedPoly.mono(3, 2)) == DividedPoly.mono(3, 3)
    for k in range(1, 8):
        assert dp_partial(DividedPoly.mono(3, k)) == DividedPoly.mono(3, k - 1)
    assert not dp_partial(DividedPoly.const(3, 1))


def polys(n, F):
    return st.dictionaries(st.integers(0, 2 ** n - 1), st.integers(1, F.order - 1), max_size=6).map(
        lambda d: DividedPoly(n, d, F))


@given(st.data())
def test_dp_mul_assoc_comm(data):
    F = GF(data.draw(st.integers(1, 3)))
    n = data.draw(st.integers(1, 5))
    p, q, r = (data.draw(polys(n, F)) for _ in range(3))
    assert dp_mul(p, q) == dp_mul(q, p)
    assert dp_mul(dp_mul(p, q), r) == dp_mul(p, dp_mul(q, r))
    # d is a derivation of the product
    assert dp_partial(dp_mul(p, q)) == dp_mul(dp_partial(p), q) + dp_mul(p, dp_partial(q))


def w_divpow(n, m):
    """(x + x^(2))^(m) = sum_i x^(i) x^(2(m-i)) with (x^(2))^(j) = x^(2j) mod 2."""
    out = {}
    for i in range(m + 1):
        a, b = i, 2 * (m - i)
        if a + b < 2 ** n and math.comb(a + b, a) % 2:
            out[a + b] = out.get(a + b, 0) ^ 1
    return DividedPoly(n, out)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_dp_divpow_against_expansion(n):
    w = DividedPoly(n, {1: 1, 2: 1})
    for m in range(2 ** (n - 1) + 1):
        assert dp_divpow(w, m) == w_divpow(n, m)


# vect(1;n)


def test_make_vect_examples():
    for n in range(1, 6):
        assert make_vect(n).dim == 2 ** n
    assert make_vect(2, 1).dim == 3
    o3 = make_classical("o1", 3, BilinearForm.I(3))
    assert lie_fingerprint(make_vect(2, 1)) == lie_fingerprint(o3)
    assert validate_lie(make_vect(5)).ok
    assert validate_lie(make_ext(4)).ok


# D_u


def reference_U(c0, c1, F):
    m, s = F.mul, F.sq
    return [[m(c0, c1) ^ 1, c0, s(c0)], [c1, 0, c0], [s(c1), c1, m(c0, c1) ^ 1]]


@pytest.mark.parametrize("k", [1, 2, 3])
def test_U_family_entrywise(k):
    F = GF(k)
    for c0, c1 in itertools.product(range(F.order), repeat=2):
        assert D_u(gf((c0, c1), F)) == reference_U(c0, c1, F)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_D0_is_degree_operator(n):
    g = make_vect(n, 1)
    assert D_u(gf((0,) * n)) == g.ad(g.unit(1))


def gen_functions():
    return st.integers(1, 3).flatmap(lambda k: st.integers(2, 5).flatmap(
        lambda n: st.tuples(*[st.integers(0, 2 ** k - 1)] * n).map(lambda c: gf(c, GF(k)))))


@given(gen_functions())
@settings(max_examples=40, deadline=None)
def test_D_u_idempotent_derivation(u):
    U = D_u(u)
    assert mat_mul(U, U, u.F) == U
    assert is_derivation(make_vect(u.n, 1, u.F), U)


@given(gen_functions())
@settings(max_examples=40, deadline=None)
def test_inner_u_identity(u):
    p = u.poly() + DividedPoly.const(u.n, u.c[0], u.F)   # drop u(0)
    x = DividedPoly.mono(u.n, 1, u.F)
    assert dp_mul(x, dp_shift(p, 2)) == dp_partial(p)


def test_u_property_enforced():
    with pytest.raises(LieError):
        D_u(DividedPoly(3, {1: 1}))
    with pytest.raises(LieError):
        GeneratingFunction(3, (0, 1))


# the e/o basis


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_e_o_basis(n):
    ev, od = e_o_basis(n)
    D = D1_matrix(n)
    assert len(ev) == 2 ** (n - 1) + 1 and len(od) == 2 ** (n - 1)
    for v in ev.values():
        assert not any(mat_vec(D, v))
    for v in od.values():
        assert mat_vec(D, v) == v
    one_x = DividedPoly(n, {0: 1, 1: 1})
    assert ev[-2] == [1] + [1, 1] + [0] * (2 ** n - 2)
    for k in range(-1, 2 ** (n - 1) - 1):
        f = dp_mul(one_x, w_divpow(n, k + 1))
        assert ev[k] == [0] + [f.coeff(r) for r in range(2 ** n)]
        g = w_divpow(n, k + 1)
        assert od[k] == [0] + [g.coeff(r) for r in range(2 ** n)]


# T_u and A_u


def apply(M, v, F):
    return mat_vec(M, v, F)


def check_deform_identities(u):
    n, F = u.n, u.F
    V = make_ext(n, F)
    T, A = deform_maps(u)
    fac = DividedPoly.const(n, 1, F) + dp_mul(u.poly(), dp_shift(u.poly(), 2))
    dim = V.dim
    units = [V.unit(i) for i in range(dim)]
    for i in range(1, dim):
        for j in range(i + 1, dim):
            lhs = V.bracket(apply(T, units[i], F), apply(T, units[j], F))
            rhs = apply(T, apply(A, V.bracket(units[i], units[j]), F), F)
            assert lhs == rhs
    for r in range(0, 2 ** n, 2):   # 0-odd basis: x^(even) d
        X = units[r + 1]
        assert ext_square(apply(T, X, F), n, F) == apply(T, apply(A, ext_square(X, n, F), F), F)
    for i in range(1, dim):
        br = V.bracket(units[0], units[i])
        f = dp_mul(fac, DividedPoly(n, {r: a for r, a in enumerate(br[1:]) if a}, F))
        scaled = [br[0]] + [f.coeff(r) for r in range(2 ** n)]
        assert V.bracket(apply(T, units[0], F), apply(T, units[i], F)) == apply(T, scaled, F)


@pytest.mark.parametrize("n", [3, 4])
def test_deform_identities_exhaustive(n):
    for c in inner_tuples(n, GF(1)):
        check_deform_identities(gf(c))


def test_deform_identities_gf4_sample():
    rng = random.Random(5)
    F = GF(2)
    for _ in range(6):
        c = (0,) + tuple(rng.randrange(4) for _ in range(3))
        check_deform_identities(gf(c, F))


def test_deform_maps_u0_identity():
    for n in (2, 3, 4):
        T, A = deform_maps(gf((0,) * n))
        assert T == identity(2 ** n + 1) and A == identity(2 ** n + 1)
    with pytest.raises(LieError):
        deform_maps(gf((1, 0, 0)))


def test_T_invertible_and_triangular():
    rng = random.Random(11)
    F = GF(2)
    for n in (2, 3, 4, 5):
        for _ in range(4):
            c = (0,) + tuple(rng.randrange(4) for _ in range(n - 1))
            T, _ = deform_maps(gf(c, F))
            assert det(T, F) == 1
            assert all(T[i][i] == 1 for i in range(len(T)))
            # columns are images, so triangular in the row convention reads as T[i][j] = 0 for i < j
            assert all(T[i][j] == 0 for i in range(len(T)) for j in range(i + 1, len(T)))


@pytest.mark.parametrize("n", [3, 4])
def test_parity_transport(n):
    # T_u sends 0-even to u-even and 0-odd to u-odd
    for c in inner_tuples(n, GF(1)):
        u = gf(c)
        T, _ = deform_maps(u)
        D = D_u_ext(u)
        D0 = D_u_ext(gf((0,) * n))
        for i in range(2 ** n + 1):
            e = [int(t == i) for t in range(2 ** n + 1)]
            img = apply(T, e, u.F)
            if not any(mat_vec(D0, e)):
                assert not any(mat_vec(D, img))
            elif mat_vec(D0, e) == e:
                assert mat_vec(D, img) == img


# the deformed superalgebra


@pytest.mark.parametrize("n", [3, 4])
def test_deformed_bracket_super_jacobi(n):
    base = fingerprint(deformed_bracket(gf((0,) * n)))
    assert base == fingerprint(vect_superization(gf((0,) * n)))
    for c in inner_tuples(n, GF(1)):
        S = deformed_bracket(gf(c))
        assert validate_super(S).ok
        assert fingerprint(S) == fingerprint(vect_superization(gf(c)))


@pytest.mark.parametrize("k,n", [(1, 2), (1, 3), (1, 4), (1, 5), (2, 2), (2, 3), (2, 4)])
def test_even_part_solvable(k, n):
    F = GF(k)
    for c in inner_tuples(n, F):
        assert is_solvable(deformed_bracket(gf(c, F)).even_algebra())


def test_even_part_solvable_gf4_n5():
    F = GF(2)
    for c in inner_tuples(5, F):
        assert is_solvable(deformed_bracket(gf(c, F)).even_algebra())


# rescaling


def burnside_orbits(n, F):
    units = list(F.units())
    fixed = 0
    for e in units:
        fixed += sum(1 for c in itertools.product(range(F.order), repeat=n - 1)
                     if sigma_rescale(c, e, F) == c)
    assert fixed % len(units) == 0
    return fixed // len(units)


def test_sigma_rescale_examples():
    F4 = GF(2)
    assert sigma_rescale((3, 2), 1, F4) == (3, 2)
    for c in itertools.product((0, 1), repeat=3):
        assert sigma_rescale(c, 1) == c
    for e in F4.units():
        assert sigma_rescale((1, 3), e, F4) == (e, 3)
    with pytest.raises(LieError):
        sigma_rescale((1, 1), 0, F4)


@pytest.mark.parametrize("k,n", [(1, 3), (2, 3), (3, 3), (2, 4), (3, 4)])
def test_rescale_orbits_partition(k, n):
    F = GF(k)
    orbits = rescale_orbits(n, F)
    allc = sorted(c for o in orbits for c in o)
    assert allc == sorted(itertools.product(range(F.order), repeat=n - 1))
    assert len(orbits) == burnside_orbits(n, F)


# characteristic polynomial of the d^2 action


def test_d2_charpoly_examples():
    for n in (2, 3, 4):
        assert d2_charpoly(gf((0,) * n)) == [0] * 2 ** (n - 1) + [1]
    # n = 2: x d -> 0, x^(3) d -> x d + c_1^2 x^(3) d, so lambda^2 + c_1^2 lambda
    F = GF(3)
    for c1 in F.elements():
        assert d2_charpoly(gf((0, c1), F)) == [0, F.sq(c1), 1]
        assert conjectured_charpoly((0, c1), 2, F) == [0, F.sq(c1), 1]


@given(st.integers(2, 5), st.data())
@settings(max_examples=30, deadline=None)
def test_d2_charpoly_conjecture_gf8(n, data):
    F = GF(3)
    c = (0,) + tuple(data.draw(st.integers(0, 7)) for _ in range(n - 1))
    assert d2_charpoly(gf(c, F)) == conjectured_charpoly(c, n, F)


# Sierpinski patterns


@pytest.mark.parametrize("n,dim", [(2, 5), (3, 10), (4, 19)])
def test_sierpinski(n, dim):
    res = sierpinski_pattern(n)
    assert res.grid() == (GOLDEN / f"sierpinski_{n}.txt").read_text().rstrip("\n")
    assert res.dim == dim == 2 ** n - 1 + n
    assert res.lower_ok and res.upper_ok
    # n = 2: the centre entry is blank
    if n == 2:
        assert not res.support[1][1]


def test_sierpinski_lower_relation_direct():
    res = sierpinski_pattern(3)
    for D in res.basis:
        for i in range(1, 8):
            for j in range(1, i + 1):
                assert D[i - 1][j - 1] == binom2(i, j - 1) * D[i - j][0]


# gradings of O(m;1)


def test_bk_grading():
    assert bk_grading(1, 0, [1]) == {0: ["1"], 1: ["x1"]}
    assert bk_vect_sdim(3, [0, 0, 1]) == (12, 12)
    table = bk_grading(2, 1, [1, 1])
    assert sorted(table[0] + table[1]) == sorted(["1", "x2", "(1+x1)", "(1+x1)*x2"])
    with pytest.raises(LieError):
        bk_grading(2, 3, [1, 1])


# superization sdim law


@pytest.mark.parametrize("n", [2, 3, 4])
def test_sdim_law_all_gf2(n):
    for c in itertools.product((0, 1), repeat=n):
        S = vect_superization(gf(c))
        assert S.sdim == (2 ** (n - 1) + 1, 2 ** (n - 1))
