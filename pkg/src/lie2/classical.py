"""Classical matrix Lie algebras in characteristic 2 and their projection gradings.

Every algebra here is realized by N x N matrices with bracket XY + YX.
The basis of a matrix algebra is the reduced echelon basis of the
flattened matrices, so constructions are canonical.  Central quotients keep
a pointer to the matrix algebra they came from, so ad_A of a normalizing
matrix can be pushed down.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from .field import GF, Field
from .linalg import Matrix, identity, is_zero, mat_add, mat_mul, nullspace, rank, rref, transpose
from .liealg import (
    LieAlgebra, LieError, Report, center, induced_on_quotient,
    is_derivation, quotient_by,
)

SERIES = ("gl", "sl", "psl", "o", "o1", "o2", "o2_mod_c", "tilde_o")


# bilinear forms


@dataclass
class BilinearForm:
    dim: int
    gram: Matrix
    kind: str = ""

    def __post_init__(self):
        if not self.kind:
            self.kind = classify_form(self.gram)
        if self.kind == "degenerate":
            raise LieError("the form is degenerate")

    @classmethod
    def I(cls, n: int) -> "BilinearForm":
        return cls(n, identity(n), "I")

    @classmethod
    def Pi(cls, n: int) -> "BilinearForm":
        """Split form [[0, I_m], [I_m, 0]] on 2m coordinates."""
        if n % 2:
            raise LieError("the split form needs even dimension")
        return cls(n, pi_gram(n), "Pi")


def pi_gram(n: int) -> Matrix:
    m = n // 2
    return [[int(j == (i + m) % n) if n else 0 for j in range(n)] for i in range(n)]


def block_diag(*blocks: Matrix) -> Matrix:
    n = sum(len(b) for b in blocks)
    M = [[0] * n for _ in range(n)]
    o = 0
    for b in blocks:
        for i, row in enumerate(b):
            for j, x in enumerate(row):
                M[o + i][o + j] = x
        o += len(b)
    return M


def classify_form(G: Matrix, F: Field = None) -> str:
    """'I', 'Pi' or 'degenerate' for a symmetric Gram matrix."""
    F = F or GF(1)
    n = len(G)
    if any(G[i][j] != G[j][i] for i in range(n) for j in range(n)):
        raise LieError("Gram matrix is not symmetric")
    if rank(G, F) < n:
        return "degenerate"
    if n % 2:
        return "I"
    # B(v,v) = sum v_i^2 G_ii in char 2, so alternation is a zero diagonal
    return "Pi" if all(G[i][i] == 0 for i in range(n)) else "I"


# matrix algebras


def mat_bracket(X: Matrix, Y: Matrix, F: Field) -> Matrix:
    return mat_add(mat_mul(X, Y, F), mat_mul(Y, X, F))


def _flat(M: Matrix) -> List[int]:
    return [x for row in M for x in row]


def _unflat(v: Sequence[int], N: int) -> Matrix:
    return [list(v[i * N:(i + 1) * N]) for i in range(N)]


def unit_matrix(N: int, i: int, j: int) -> Matrix:
    M = [[0] * N for _ in range(N)]
    M[i][j] = 1
    return M


def _mat_label(M: Matrix, F: Field) -> str:
    parts = []
    for i, row in enumerate(M):
        for j, x in enumerate(row):
            if x:
                e = f"e{i + 1},{j + 1}" if len(M) > 9 else f"e{i + 1}{j + 1}"
                parts.append(e if x == 1 else f"{F.fmt(x)}*{e}")
    return "+".join(parts) or "0"


def matrix_lie(mats: Sequence[Matrix], F: Field = None, labels=None) -> LieAlgebra:
    """Lie algebra spanned by matrices, in the echelon basis of their span."""
    F = F or GF(1)
    if not mats:
        g = LieAlgebra(0, {}, F)
        g.mats, g.N = [], 0
        return g
    N = len(mats[0])
    basis = [b for b in rref([_flat(m) for m in mats], F) if any(b)]
    space = _FlatSpace(basis, F)

    def fn(i, j):
        return space.coords(_flat(mat_bracket(_unflat(basis[i], N), _unflat(basis[j], N), F)))
    bm = [_unflat(b, N) for b in basis]
    if labels is None:
        labels = [_mat_label(m, F) for m in bm]
    g = LieAlgebra.from_bracket(len(basis), fn, F, labels)
    g.mats, g.N, g._space = bm, N, space
    return g


class _FlatSpace:
    def __init__(self, basis, F):
        self.basis = basis
        self.F = F
        self.pivots = [next(i for i, x in enumerate(b) if x) for b in basis]

    def coords(self, v):
        v = list(v)
        out = []
        for p, b in zip(self.pivots, self.basis):
            a = v[p]
            out.append(a)
            if a:
                for t, y in enumerate(b):
                    if y:
                        v[t] ^= self.F.mul(a, y)
        if any(v):
            raise LieError("matrix is not in the span")
        return out


def matrix_coords(g: LieAlgebra, M: Matrix) -> List[int]:
    return g._space.coords(_flat(M))


def derived_matrix(g: LieAlgebra) -> LieAlgebra:
    F = g.F
    out = []
    for i in range(g.dim):
        for j in range(i + 1, g.dim):
            out.append(mat_bracket(g.mats[i], g.mats[j], F))
    out = [m for m in out if not is_zero(m)]
    return matrix_lie(out, F) if out else matrix_lie([], F)


def gl(N: int, F: Field = None) -> LieAlgebra:
    return matrix_lie([unit_matrix(N, i, j) for i in range(N) for j in range(N)], F)


def sl(N: int, F: Field = None) -> LieAlgebra:
    mats = [unit_matrix(N, i, j) for i in range(N) for j in range(N) if i != j]
    for i in range(N - 1):
        D = unit_matrix(N, i, i)
        D[i + 1][i + 1] = 1
        mats.append(D)
    return matrix_lie(mats, F)


def orthogonal(form: BilinearForm, F: Field = None) -> LieAlgebra:
    """o_B = {X : B X symmetric}, i.e. B(Xv,w) + B(v,Xw) = 0."""
    F = F or GF(1)
    N = form.dim
    B = form.gram
    # unknowns X[a][b] at a*N + b; (BX)[i][j] = sum_a B[i][a] X[a][j]
    rows = []
    for i in range(N):
        for j in range(i + 1, N):
            r = [0] * (N * N)
            for a in range(N):
                if B[i][a]:
                    r[a * N + j] ^= B[i][a]
                if B[j][a]:
                    r[a * N + i] ^= B[j][a]
            if any(r):
                rows.append(r)
    sols = nullspace(rows, F, N * N) if rows else identity(N * N)
    return matrix_lie([_unflat(v, N) for v in sols], F)


def d_matrix(N: int) -> Matrix:
    """d_n = diag(0_n, 1_n)."""
    m = N // 2
    return [[int(i == j and i >= m) for j in range(N)] for i in range(N)]


def make_classical(series: str, n: int, form: Optional[BilinearForm] = None, F: Field = None) -> LieAlgebra:
    """Build a classical algebra on n x n matrices.

    psl and o2_mod_c are central quotients; they keep the matrix algebra
    they came from in `.cover` and the central ideal in `.ideal`.
    """
    F = F or GF(1)
    if n < 1:
        raise LieError("matrix size must be positive")
    if series == "gl":
        return gl(n, F)
    if series == "sl":
        return sl(n, F)
    if series == "psl":
        if n % 2:
            raise LieError("psl needs even size: scalars are traceless only then")
        return _mod_center(sl(n, F))
    if series in ("o", "o1", "o2", "o2_mod_c", "tilde_o"):
        if form is None:
            raise LieError(f"series {series} needs a bilinear form")
        if form.dim != n:
            raise LieError("form size differs from n")
        g = orthogonal(form, F)
        if series == "tilde_o":
            if form.gram != pi_gram(n):
                raise LieError("tilde_o is built for the standard split form")
            return matrix_lie(g.mats + [d_matrix(n)], F)
        if series == "o":
            return g
        g = derived_matrix(g)
        if series == "o1":
            return g
        g = derived_matrix(g)
        if series == "o2":
            return g
        return _mod_center(g)
    raise LieError(f"unknown series {series!r}; choose from {', '.join(SERIES)}")


def _mod_center(g: LieAlgebra) -> LieAlgebra:
    z = center(g)
    q = quotient_by(g, z)
    q.cover, q.ideal = g, z
    return q


def ad_matrix_on(g: LieAlgebra, A: Matrix) -> Matrix:
    """Matrix of X -> [A, X] on g, for a matrix A normalizing the realization."""
    F = g.F
    if hasattr(g, "cover"):
        D = ad_matrix_on(g.cover, A)
        return induced_on_quotient(g.cover, g.ideal, D)
    cols = [matrix_coords(g, mat_bracket(A, M, F)) for M in g.mats]
    n = g.dim
    return [[cols[j][i] for j in range(n)] for i in range(n)]


# bases adapted to a Gram matrix


def adapted_basis(N: int, k: int) -> Matrix:
    """Columns P over GF(2) with P^T P = diag(I_{N-2k}, Pi_{2k}); needs N - 2k >= 1.

    Starting from w = e_1 (norm 1), each pair of fresh coordinates e, f
    gives the hyperbolic pair u = w + e, v = w + f, and w moves to w + e + f.
    """
    if not 0 <= 2 * k <= N - 1:
        raise LieError("an identity form splits off at most (N-1)/2 hyperbolic pairs")
    e = [[int(i == j) for i in range(N)] for j in range(N)]
    w = e[0]
    us, vs = [], []
    for i in range(k):
        f, g = e[1 + 2 * i], e[2 + 2 * i]
        us.append([a ^ b for a, b in zip(w, f)])
        vs.append([a ^ b for a, b in zip(w, g)])
        w = [a ^ b ^ c for a, b, c in zip(w, f, g)]
    cols = [w] + e[1 + 2 * k:] + us + vs
    return [[cols[j][i] for j in range(N)] for i in range(N)]


def _inv(P: Matrix, F: Field) -> Matrix:
    from .linalg import mat_inv
    return mat_inv(P, F)


# projection representatives


@dataclass
class ProjectionRep:
    A: Matrix
    ambient: str
    label: str
    kind: str = ""           # II, IPi, PiPi, pe, sl, psl, trivial
    dims: Tuple[int, int] = (0, 0)  # (dim Ker A, dim Im A)
    c_A: int = 0
    basis: Optional[Matrix] = None  # transition matrix of the adapted basis
    known: Tuple = ()        # (name, params) for make_known_super

    def to_dict(self) -> dict:
        return {"label": self.label, "ambient": self.ambient, "kind": self.kind,
                "ker_im": list(self.dims), "c_A": self.c_A, "A": self.A}


def _proj(N: int, ones: Sequence[int]) -> Matrix:
    s = set(ones)
    return [[int(i == j and i in s) for j in range(N)] for i in range(N)]


def _conj(P: Matrix, A: Matrix, F: Field) -> Matrix:
    return mat_mul(mat_mul(P, A, F), _inv(P, F), F)


def projection_reps(series: str, N: int, F: Field = None) -> Tuple[LieAlgebra, List[ProjectionRep]]:
    """The algebra and one projection per grading class of the known classification.

    series: 'sl' (N > 2), 'psl' (even N >= 4), 'o1' (odd N, or even N > 4
    for the I form), 'o_pi' (the simple relative of o_Pi(N),
    N = 2n with n > 2).
    """
    F = F or GF(1)
    reps: List[ProjectionRep] = []
    if series == "sl":
        if N <= 2:
            raise LieError("sl grading reps need N > 2")
        g = make_classical("sl", N, F=F)
        if N % 2:
            # projections in sl(2n+1) project onto even-dimensional subspaces
            for k in range(0, N // 2 + 1):
                A = _proj(N, range(N - 2 * k, N))
                reps.append(ProjectionRep(A, f"sl({N})", _sl_label("sl", N - 2 * k, 2 * k), "sl",
                                          (N - 2 * k, 2 * k), known=("sl", N - 2 * k, 2 * k)))
        else:
            for k in range(0, N // 2 + 1):
                A = _proj(N, range(N - k, N))
                reps.append(ProjectionRep(A, f"sl({N})", _sl_label("sl", N - k, k), "sl",
                                          (N - k, k), known=("sl", N - k, k)))
        return g, reps
    if series == "psl":
        if N % 2 or N < 4:
            raise LieError("psl grading reps need even size at least 4")
        g = make_classical("psl", N, F=F)
        for k in range(0, N // 2 + 1):
            A = _proj(N, range(N - k, N))
            reps.append(ProjectionRep(A, f"psl({N})", _sl_label("psl", N - k, k), "psl",
                                      (N - k, k), known=("psl", N - k, k)))
        return g, reps
    if series == "o1":
        form = BilinearForm.I(N)
        g = make_classical("o1", N, form, F)
        if N % 2:
            n = N // 2
            for k in range(0, n + 1):
                A = _proj(N, range(N - 2 * k, N))
                reps.append(ProjectionRep(A, f"o1_I({N})", f"oo^(1)_II({N - 2 * k}|{2 * k})", "II",
                                          (N - 2 * k, 2 * k), known=("oo", "I", "I", N - 2 * k, 2 * k, 1, False)))
            for k in range(1, n + 1):
                A, P = _second_basis_proj(N, N - 2 * k, 2 * k, F)
                reps.append(ProjectionRep(A, f"o1_I({N})", f"oo^(1)_IPi({N - 2 * k}|{2 * k})", "IPi",
                                          (N - 2 * k, 2 * k), basis=P,
                                          known=("oo", "I", "Pi", N - 2 * k, 2 * k, 1, False)))
            return g, reps
        n = N // 2
        if n <= 2:
            raise LieError("o1_I(2n) grading reps are stated for n > 2")
        # the identity supermatrix is central in oo^(1)_II(m|2n-m) and acts by zero,
        # so the superization sees the central quotient
        for m in range(1, n + 1):
            A = _proj(N, range(N - m, N))
            reps.append(ProjectionRep(A, f"o1_I({N})", f"oo^(1)_II({N - m}|{m})/c", "II",
                                      (N - m, m), known=("oo", "I", "I", N - m, m, 1, True)))
        for k in range(1, n):
            A, P = _second_basis_proj(N, N - 2 * k, 2 * k, F)
            reps.append(ProjectionRep(A, f"o1_I({N})", f"oo^(1)_IPi({N - 2 * k}|{2 * k})", "IPi",
                                      (N - 2 * k, 2 * k), basis=P,
                                      known=("oo", "I", "Pi", N - 2 * k, 2 * k, 1, False)))
        # the ends k = 0 and k = n of the IPi family: A = 0 and A = I, both U = 0
        for A, dims in ((_proj(N, []), (N, 0)), (identity(N), (0, N))):
            reps.append(ProjectionRep(A, f"o1_I({N})", f"o^(1)_I({N}) (purely even)", "trivial",
                                      dims, known=("even", N)))
        return g, reps
    if series == "o_pi":
        if N % 2 or N // 2 <= 2:
            raise LieError("the o_Pi relative is stated for N = 2n with n > 2")
        n = N // 2
        form = BilinearForm.Pi(N)
        g = make_classical("o2_mod_c", N, form, F)
        for k in range(0, n // 2 + 1):
            # image: k hyperbolic pairs (e_i, e_{n+i}), i < k; 2k-dimensional, Pi-type
            ones = list(range(k)) + list(range(n, n + k))
            A = _proj(N, ones)
            reps.append(ProjectionRep(A, f"o2_Pi({N})/c", f"oo^(2)_PiPi({2 * k}|{N - 2 * k})/c", "PiPi",
                                      (N - 2 * k, 2 * k), known=("oo", "Pi", "Pi", 2 * k, N - 2 * k, 2, True)))
        reps.append(ProjectionRep(d_matrix(N), f"o2_Pi({N})/c", f"pe^(2)({n})/c", "pe",
                                  (n, n), c_A=1, known=("pe", n, 2, True)))
        return g, reps
    raise LieError(f"no projection reps for series {series!r}")


def _sl_label(name: str, a: int, b: int) -> str:
    return f"{name}({min(a, b)}|{max(a, b)})"


def _second_basis_proj(N: int, k0: int, k1: int, F: Field) -> Tuple[Matrix, Matrix]:
    """diag(0_{k0}, I_{k1}) in a basis where the identity form reads diag(I_{k0}, Pi_{k1})."""
    P = adapted_basis(N, k1 // 2)
    A = _conj(P, _proj(N, range(k0, N)), GF(1))
    return A, P


def verify_projection(rep: ProjectionRep, g: LieAlgebra, form: Optional[BilinearForm] = None) -> Report:
    """A^2 = A, ad_A a derivation of g with (ad_A)^2 = ad_A, and the form conditions."""
    F = g.F
    rep_ = Report()
    A = rep.A
    N = len(A)
    rep_.checked += 1
    if mat_mul(A, A, F) != A:
        rep_.fail("A^2 != A")
        return rep_
    try:
        U = ad_matrix_on(g, A)
    except LieError as e:
        rep_.fail(f"ad_A does not preserve the algebra: {e}")
        return rep_
    rep_.checked += 2
    if not is_derivation(g, U):
        rep_.fail("ad_A is not a derivation")
    if mat_mul(U, U, F) != U:
        rep_.fail("(ad_A)^2 != ad_A")
    if form is None and rep.kind in ("II", "IPi", "trivial"):
        form = BilinearForm.I(N)
    if form is None and rep.kind in ("PiPi", "pe"):
        form = BilinearForm.Pi(N)
    if form is not None:
        B = form.gram
        lhs = mat_add(mat_mul(transpose(A), B, F), mat_mul(B, A, F))
        rhs = [[F.mul(rep.c_A, x) for x in row] for row in B]
        rep_.checked += 1
        if lhs != rhs:
            rep_.fail(f"B(Ax,y) + B(x,Ay) != {rep.c_A} B(x,y)")
        if rep.c_A == 0:
            # Im A and Ker A are orthogonal
            im = [[A[i][j] for i in range(N)] for j in range(N)]
            ker = nullspace(A, F, N)
            rep_.checked += 1
            bad = any(_form(B, u, v, F) for u in im for v in ker)
            if bad:
                rep_.fail("Im A is not orthogonal to Ker A")
    if rep.kind == "sl" and len(A) % 2:
        rep_.checked += 1
        if sum(A[i][i] for i in range(N)) % 2:
            rep_.fail("projection in sl(2n+1) has odd rank")
    return rep_


def _form(B, u, v, F) -> int:
    s = 0
    for i, a in enumerate(u):
        if a:
            for j, b in enumerate(v):
                if b and B[i][j]:
                    s ^= F.mul(F.mul(a, b), B[i][j])
    return s


def known_for(rep: ProjectionRep, F: Field = None):
    """The superalgebra named by a rep's label, built independently from supermatrices."""
    from .superalg import from_lie, make_known_super
    F = F or GF(1)
    kind, *p = rep.known
    if kind in ("sl", "psl"):
        return make_known_super(kind, n0=p[0], n1=p[1], F=F)
    if kind == "oo":
        k1, k2, n0, n1, der, mod_c = p
        return make_known_super(f"oo_{k1}{k2}", n0=n0, n1=n1, derived=der, mod_c=mod_c, F=F)
    if kind == "pe":
        n, der, mod_c = p
        return make_known_super("pe", n=n, derived=der, mod_c=mod_c, F=F)
    if kind == "even":
        return from_lie(make_classical("o1", p[0], BilinearForm.I(p[0]), F))
    raise LieError(f"no construction for {kind!r}")


def superize_rep(g: LieAlgebra, rep: ProjectionRep, check: bool = True):
    from .superalg import superize
    return superize(g, ad_matrix_on(g, rep.A), check)


def tilde_c_values(N: int, F: Field = None, limit: int = 1 << 20) -> List[int]:
    """All c with A^T B + B A = c B for some projection A, B the split form.

    Exhaustive over all N x N matrices, so only tiny N and fields.
    """
    F = F or GF(1)
    if F.order ** (N * N) > limit:
        raise LieError("search space too large")
    B = pi_gram(N)
    m = N // 2
    seen = set()
    for entries in itertools.product(range(F.order), repeat=N * N):
        A = _unflat(entries, N)
        if mat_mul(A, A, F) != A:
            continue
        lhs = mat_add(mat_mul(transpose(A), B, F), mat_mul(B, A, F))
        c = lhs[0][m]
        if lhs == [[F.mul(c, x) for x in row] for row in B]:
            seen.add(c)
    return sorted(seen)

__all__ = [
    "SERIES", "BilinearForm", "pi_gram", "block_diag", "classify_form", "mat_bracket",
    "unit_matrix", "matrix_lie", "matrix_coords", "derived_matrix", "gl", "sl",
    "orthogonal", "d_matrix", "make_classical", "ad_matrix_on", "adapted_basis",
    "ProjectionRep", "projection_reps", "verify_projection", "known_for", "superize_rep", "tilde_c_values",
]
