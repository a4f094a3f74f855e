from __future__ import annotations

import itertools

import pytest

from lie2.divpow import (
    D_u, GeneratingFunction, binom2, e_o_basis, ext_superalgebra, make_vect, vect_superization,
)
from lie2.field import GF
from lie2.linalg import mat_pow
from lie2.liealg import LieError, Subspace, series_dims
from lie2.superalg import (
    GradedPair, LieSuperalgebra, fingerprint, make_kl, make_known_super, make_q_vect,
    matrix_superalgebra, method2_superize, one_step_closure, q_discriminant, rebase,
    superize, validate_super, weight_vectors,
)


def E(i, j, N=3):
    """1-based matrix unit e_{i,j}."""
    return [[int(a == i - 1 and b == j - 1) for b in range(N)] for a in range(N)]


def msum(*ms):
    return [[sum(m[a][b] for m in ms) % 2 for b in range(len(ms[0]))] for a in range(len(ms[0]))]


def table_super(n, rel, squares):
    """Superalgebra with X_{-2}..X_T, Y_{-1}..Y_T from a bracket rule and a square rule."""
    T = 2 ** (n - 1) - 2
    X = {k: k + 2 for k in range(-2, T + 1)}
    n0 = len(X)
    Y = {k: n0 + k + 1 for k in range(-1, T + 1)}
    sc = {}
    names = [("X", k) for k in X] + [("Y", k) for k in Y]
    idx = {("X", k): v for k, v in X.items()} | {("Y", k): v for k, v in Y.items()}
    for a, b in itertools.combinations(names, 2):
        out = {}
        for name in rel(a, b, T):
            if name in idx:
                out[idx[name]] = out.get(idx[name], 0) ^ 1
        out = {k: 1 for k, c in out.items() if c}
        if out:
            sc[(idx[a], idx[b])] = out
            sc[(idx[b], idx[a])] = dict(out)
    sq = {}
    for k in Y:
        terms = [idx[t] for t in squares(k, T) if t in idx]
        if terms:
            sq[Y[k]] = {t: 1 for t in terms}
    return LieSuperalgebra(n0, len(Y), sc, sq)


def table_q_rel(a, b, T):
    # X_k = z^(k+1) d; the [Y_t, Y_s] coefficient is binom(t+s+2, t+1)
    (p, k), (q, m) = sorted([a, b], key=lambda t: (t[0] == "Y", t[1]))
    c = binom2(k + m + 2, k + 1)
    if p == "X" and k == -2:
        if q == "X":
            return [("X", m - 2)] if m >= 1 else []
        return [("Y", m - 2)] if m >= 1 else []
    if p == "X" and q == "X":
        return [("X", k + m)] if c else []
    if p == "X" and q == "Y":
        if k == -1 and m == -1:
            return []
        return [("Y", k + m)] if c else []
    return [("X", k + m)] if c else []


def table_q_sq(k, T):
    if k == -1:
        return [("X", -2)]
    return [("X", 2 * k)] if binom2(2 * k + 1, k) else []


def kl_rel(fix_x2y=True):
    def rel(a, b, T):
        (p, k), (q, m) = sorted([a, b], key=lambda t: (t[0] == "Y", t[1]))
        c = binom2(k + m + 2, k + 1)
        if p == "X" and k == -2:
            if q == "X":
                return [("X", m - 2)] if m >= 1 else []
            return [("Y", m), ("Y", m - 2)] if fix_x2y else []
        if p == "X" and q == "X":
            return [("X", k + m)] if c else []
        if p == "X" and q == "Y":
            if k == -1 and m == -1:
                return [("Y", -1)]
            return [("Y", k + m), ("Y", k + m + 1)] if c else []
        return [("X", k + m)] if c else []
    return rel


def kl_sq(fix_square=True):
    def sq(k, T):
        if k == -1:
            return [("X", -2), ("X", -1)] if fix_square else [("X", -2), ("X", 0)]
        return [("X", 2 * k)] if binom2(2 * k + 1, k) else []
    return sq


# kl and q(vect)


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_kl_equals_e_o_superization(n):
    ev, od = e_o_basis(n)
    S = ext_superalgebra(n, [ev[k] for k in sorted(ev)], [od[k] for k in sorted(od)])
    K = make_kl(n)
    assert S.sc == K.sc and S.sq == K.sq


@pytest.mark.parametrize("n", [3, 4, 5])
def test_kl_equals_relation_table(n):
    K = make_kl(n)
    P = table_super(n, kl_rel(), kl_sq())
    assert K.sc == P.sc and K.sq == P.sq
    assert validate_super(K).ok


@pytest.mark.parametrize("n", [3, 4])
def test_kl_uncorrected_variants_fail(n):
    assert not validate_super(table_super(n, kl_rel(), kl_sq(False))).ok
    assert not validate_super(table_super(n, kl_rel(False), kl_sq())).ok


@pytest.mark.parametrize("n", [3, 4, 5])
def test_q_vect_against_relation_table(n):
    Q = make_q_vect(n)
    P = table_super(n, table_q_rel, table_q_sq)
    assert Q.sc == P.sc and Q.sq == P.sq
    assert validate_super(Q).ok
    assert Q.sdim == (2 ** (n - 1) + 1, 2 ** (n - 1))


def test_kl_mutation_detected():
    K = make_kl(3)
    key = next(k for k in sorted(K.sc) if k[0] < K.n0 <= k[1])
    sc = {k: dict(v) for k, v in K.sc.items()}
    sc[key] = dict(sc[key])
    tgt = next(iter(sc[key]))
    sc[key][tgt] ^= 1
    sc[key[::-1]] = dict(sc[key])
    rep = validate_super(LieSuperalgebra(K.n0, K.n1, sc, K.sq, K.F, K.labels))
    assert not rep.ok and rep.violations


def test_kl_bracket_example():
    K = make_kl(3)
    X_m1, Y_m1 = K.unit(1), K.unit(K.n0)
    assert K.bracket(X_m1, Y_m1) == Y_m1


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_q_discriminant(n):
    K = make_kl(n)
    X_m1 = K.unit(1)
    assert q_discriminant(K, X_m1) == "not_q"
    ev = [[r[: K.n0] for r in K.ad(X_m1)[: K.n0]]]
    assert not any(any(r) for r in mat_pow(ev[0], 2 ** (n - 1) + 1))
    assert K.bracket(X_m1, K.unit(K.n0)) == K.unit(K.n0)
    Q = make_q_vect(n)
    assert all(q_discriminant(Q, Q.unit(i)) == "q_like" for i in range(Q.n0))
    assert q_discriminant(K, [0] * K.dim) == "q_like"
    with pytest.raises(LieError):
        q_discriminant(K, K.unit(K.n0))


@pytest.mark.parametrize("n", [3, 4, 5])
def test_weight_vectors(n):
    K = make_kl(n)
    raising = [K.unit(2 ** k - 1 + 2) for k in range(1, n - 1)]
    high, low = weight_vectors(K, raising, K.unit(1))
    T = 2 ** (n - 1) - 2
    # odd coordinate of Y_s is s + 1
    expect = [[int(t == s + 1) for t in range(K.n1)] for s in (T - 1, T)]
    assert high == expect
    assert low == []
    high0, _ = weight_vectors(K, [], K.unit(1))
    assert len(high0) == K.n1


# superization of vect^(1)(1;2)


def ext_vec(*coeffs):
    return list(coeffs)


# v_3 coordinates: d^2, d, x d, x^(2) d, x^(3) d
GRADING_00 = {
    "even": [ext_vec(1, 0, 0, 0, 0), ext_vec(0, 0, 1, 0, 0), ext_vec(0, 0, 0, 0, 1)],
    "odd": [ext_vec(0, 1, 0, 0, 0), ext_vec(0, 0, 0, 1, 0)],
    "even_m": [E(2, 3), msum(E(2, 2), E(3, 3)), E(3, 2)],
    "odd_m": [msum(E(1, 3), E(2, 1)), msum(E(1, 2), E(3, 1))],
}
E1, E2, E3 = msum(E(1, 1), E(2, 2)), msum(E(2, 2), E(3, 3)), msum(E(2, 3), E(3, 2))
O1, O2 = msum(E(1, 2), E(2, 1)), msum(E(1, 3), E(3, 1))
GRADING_11 = {
    "even": [ext_vec(0, 1, 1, 1, 0), ext_vec(1, 1, 1, 0, 0), ext_vec(1, 0, 1, 0, 1)],
    "odd": [ext_vec(0, 1, 1, 0, 0), ext_vec(0, 1, 0, 1, 0)],
    "even_m": [E3, E1, msum(E2, E3)],
    "odd_m": [O1, msum(O1, O2)],
}


@pytest.mark.parametrize("c,data", [((0, 0), GRADING_00), ((1, 1), GRADING_11)])
def test_vect12_superization_matches_matrices(c, data):
    S = ext_superalgebra(2, data["even"], data["odd"])
    M = matrix_superalgebra(data["even_m"], data["odd_m"])
    assert S.sc == M.sc and S.sq == M.sq
    assert validate_super(S).ok
    # the basis spans the computed superization of that grading
    V = vect_superization(GeneratingFunction(2, c))
    n0 = V.n0
    assert V.sdim == (3, 2)
    from lie2.divpow import make_ext
    ext = make_ext(2)
    assert Subspace(ext, V.basis_in_ext[:n0]) == Subspace(ext, data["even"])
    assert Subspace(ext, V.basis_in_ext[n0:]) == Subspace(ext, data["odd"])


def test_grading_00_relations():
    S = ext_superalgebra(2, GRADING_00["even"], GRADING_00["odd"])
    em2, e0, e2, om1, o1 = (S.unit(i) for i in range(5))
    assert S.square(om1) == em2 and S.square(o1) == e2
    assert not any(S.bracket(e0, em2)) and not any(S.bracket(e0, e2))
    assert S.bracket(em2, e2) == e0
    assert not any(S.bracket(em2, om1))
    assert S.bracket(e0, om1) == om1 and S.bracket(e2, om1) == o1
    assert S.bracket(em2, o1) == om1 and S.bracket(e0, o1) == o1 and not any(S.bracket(e2, o1))


def test_grading_11_relations():
    S = ext_superalgebra(2, GRADING_11["even"], GRADING_11["odd"])
    e1, e2, e3, o1, o2 = (S.unit(i) for i in range(5))
    add = lambda a, b: [x ^ y for x, y in zip(a, b)]
    assert S.square(o1) == e2 and S.square(o2) == e3
    assert S.bracket(e1, e2) == e1 and not any(S.bracket(e1, e3)) and S.bracket(e2, e3) == e1
    assert S.bracket(e1, o1) == add(o1, o2) and not any(S.bracket(e2, o1)) and S.bracket(e3, o1) == o2
    assert S.bracket(e1, o2) == o2 and S.bracket(e2, o2) == add(o1, o2) and not any(S.bracket(e3, o2))
    M = matrix_superalgebra([E1, E2, E3], [O1, O2])
    E_1, E_2, E_3, O_1, O_2 = (M.unit(i) for i in range(5))
    assert M.square(O_1) == E_1 and M.square(O_2) == add(E_1, E_2)
    assert not any(M.bracket(E_1, E_2)) and M.bracket(E_1, E_3) == E_3 and not any(M.bracket(E_2, E_3))
    assert M.bracket(E_2, O_1) == O_1 and M.bracket(E_2, O_2) == O_2
    assert not any(M.bracket(E_1, O_1)) and M.bracket(E_1, O_2) == O_2
    assert M.bracket(E_3, O_1) == O_2 and M.bracket(E_3, O_2) == O_1


@pytest.mark.parametrize("c", [(0, 0), (1, 1), (0, 1), (1, 0)])
def test_generic_and_concrete_routes_agree(c):
    u = GeneratingFunction(2, c)
    g = make_vect(2, 1)
    S = superize(g, D_u(u))
    assert fingerprint(S) == fingerprint(vect_superization(u))


def test_closure_examples():
    g = make_vect(2, 1)
    cl = one_step_closure(GradedPair(g, D_u(GeneratingFunction(2, (0, 0)))))
    # squares of d and x^(2) d are d^2 and x^(3) d, both outside the derived algebra
    assert cl.h.dim == 5 and len(cl.added) == 2
    S = method2_superize(cl)
    assert S.sdim == (3, 2)
    # all squares already inner: the trivial grading adds nothing
    cl0 = one_step_closure(GradedPair(g, [[0] * 3 for _ in range(3)]))
    assert cl0.h.dim == 3 and cl0.added == []
    assert method2_superize(cl0).sdim == (3, 0)
    # standard grading of vect^(1)(1;n): even part of the closure is v_n
    for n in (3, 4):
        S = superize(make_vect(n - 1, 1), D_u(GeneratingFunction(n - 1, (0,) * (n - 1))))
        assert S.n0 == 2 ** (n - 2) + 1


def test_closure_rejects_non_grading():
    g = make_vect(2, 1)
    with pytest.raises(LieError):
        one_step_closure(GradedPair(g, [[1, 0, 0], [0, 0, 0], [0, 0, 0]]))


def graded_ideals(S):
    F = S.F
    def subspaces(idx):
        vecs = [v for v in itertools.product(range(F.order), repeat=len(idx)) if any(v)]
        seen = set()
        for r in range(len(idx) + 1):
            for gens in itertools.combinations(vecs, r):
                from lie2.linalg import rref
                key = tuple(map(tuple, rref(list(gens), F))) if gens else ()
                if key not in seen:
                    seen.add(key)
                    yield [list(b) for b in key]
    ev = list(range(S.n0))
    od = list(range(S.n0, S.dim))
    for a in subspaces(ev):
        for b in subspaces(od):
            basis = [v + [0] * S.n1 for v in a] + [[0] * S.n0 + v for v in b]
            yield basis


@pytest.mark.parametrize("c", [(0, 0), (1, 1)])
def test_vect12_superizations_simple(c):
    S = vect_superization(GeneratingFunction(2, c))
    from lie2.linalg import rank
    proper = 0
    for basis in graded_ideals(S):
        if not basis or len(basis) == S.dim:
            continue
        closed = all(rank(basis + [S.bracket(S.unit(i), v)], S.F) == len(basis)
                     for v in basis for i in range(S.dim))
        closed = closed and all(rank(basis + [S.square(v)], S.F) == len(basis)
                                for v in basis if not any(v[: S.n0]))
        proper += closed
    assert proper == 0


# fingerprints and known algebras


def test_fingerprint_examples():
    fp = fingerprint(vect_superization(GeneratingFunction(3, (0, 0, 0))))
    assert fp["lower_central"] == [3, 2, 1, 0] and fp["derived"] == [3, 0] and fp["solvable"]
    fp5 = fingerprint(vect_superization(GeneratingFunction(5, (0, 1, 0, 0, 0))))
    assert fp5["lower_central"] == list(range(15, 7, -1))
    S0 = superize(make_vect(3, 1), [[0] * 7 for _ in range(7)])
    assert S0.sdim == (7, 0)


def test_outer_family_is_kl():
    for n in (3, 4):
        target = fingerprint(make_kl(n))
        for rest in itertools.product((0, 1), repeat=n - 1):
            assert fingerprint(vect_superization(GeneratingFunction(n, (1,) + rest))) == target


def test_n3_outer_even_part():
    for rest in itertools.product((0, 1), repeat=2):
        e = vect_superization(GeneratingFunction(3, (1,) + rest)).even_algebra()
        assert series_dims(e)[1:-1] == [3] and series_dims(e, kind="derived")[1:-1] == [3]


def test_known_oo_IPi_12_basis():
    S = make_known_super("oo_IPi", n0=1, n1=2, derived=1)
    M = matrix_superalgebra(GRADING_00["even_m"], GRADING_00["odd_m"])
    assert S.sdim == (3, 2) and fingerprint(S) == fingerprint(M)
    assert validate_super(S).ok


@pytest.mark.parametrize("name,kw", [
    ("oo_II", dict(n0=1, n1=2, derived=1)), ("oo_PiPi", dict(n0=2, n1=4, derived=2, mod_c=True)),
    ("pe", dict(n=3, derived=2, mod_c=True)), ("sl", dict(n0=1, n1=2)), ("psl", dict(n0=2, n1=2)),
    ("gl", dict(n0=1, n1=1)), ("k_contact", dict(n=3)), ("kl", dict(n=3)), ("q_vect", dict(n=3)),
])
def test_known_superalgebras_validate(name, kw):
    assert validate_super(make_known_super(name, **kw)).ok


def test_known_errors():
    with pytest.raises(LieError):
        make_known_super("nope")
    with pytest.raises(LieError):
        make_kl(2)
    with pytest.raises(LieError):
        make_known_super("oo_IPi", n0=1, n1=3)


def test_super_json_roundtrip():
    K = make_kl(4)
    d = K.to_dict()
    assert set(d) == {"dim_even", "dim_odd", "field", "sc_ee", "sc_eo", "sc_oo", "squares", "labels"}
    assert LieSuperalgebra.from_json(K.to_json()) == K
    G = make_known_super("oo_II", n0=1, n1=2, derived=1, F=GF(2))
    assert LieSuperalgebra.from_json(G.to_json()) == G


def test_rebase_roundtrip():
    K = make_kl(3)
    even = [K.unit(i) for i in range(K.n0)]
    odd = [K.unit(i) for i in range(K.n0, K.dim)]
    assert rebase(K, even, odd, K.labels) == K
    odd2 = [odd[0], [a ^ b for a, b in zip(odd[0], odd[1])]] + odd[2:]
    R = rebase(K, even, odd2)
    assert validate_super(R).ok and fingerprint(R) == fingerprint(K)
