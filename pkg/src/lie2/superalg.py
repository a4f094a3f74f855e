"""Lie superalgebras in characteristic 2 with a squaring on the odd part.

Indices 0..n0-1 are even and n0..n0+n1-1 are odd.  The bracket table is
stored over both orders like `LieAlgebra`; `sq[i]` is the square of the
odd basis vector i.  For odd x = sum a_i x_i the square is
sum a_i^2 x_i^2 + sum_{i<j} a_i a_j [x_i, x_j].
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field as dfield
from typing import Dict, List, Optional, Sequence, Tuple

from .field import GF, Field, parse_field
from .linalg import Eliminator, Matrix, Vector, identity, is_zero, mat_inv, mat_mul, rref
from .liealg import (
    LieAlgebra, LieError, Report, Subspace, Table, _apply, _vec_label,
    inner_preimage, series_dims, is_solvable,
)


class ResourceError(RuntimeError):
    """A configured bound was exceeded."""


class LieSuperalgebra:
    def __init__(self, n0: int, n1: int, sc: Table, sq: Dict[int, Dict[int, int]],
                 F: Field = None, labels: Optional[Sequence[str]] = None):
        self.F = F or GF(1)
        self.n0, self.n1 = n0, n1
        self.dim = n0 + n1
        self.sc = {}
        for key, v in sc.items():
            v = {k: c for k, c in v.items() if c}
            if v:
                self.sc[key] = v
        self.sq = {}
        for i, v in sq.items():
            v = {k: c for k, c in v.items() if c}
            if v:
                self.sq[i] = v
        self.labels = list(labels) if labels else (
            [f"e{i}" for i in range(n0)] + [f"o{i}" for i in range(n1)])
        if len(self.labels) != self.dim:
            raise LieError("label count differs from dimension")

    def __repr__(self):
        return f"LieSuperalgebra(sdim=({self.n0}|{self.n1}), {self.F.name})"

    def __eq__(self, other):
        return (isinstance(other, LieSuperalgebra) and self.sdim == other.sdim
                and self.F == other.F and self.sc == other.sc and self.sq == other.sq)

    @property
    def sdim(self) -> Tuple[int, int]:
        return self.n0, self.n1

    def parity(self, i: int) -> int:
        return int(i >= self.n0)

    def unit(self, i: int) -> Vector:
        v = [0] * self.dim
        v[i] = 1
        return v

    def odd_unit(self, t: int) -> Vector:
        return self.unit(self.n0 + t)

    def bracket(self, x: Sequence[int], y: Sequence[int]) -> Vector:
        out = [0] * self.dim
        mul = self.F.mul
        ys = [(j, b) for j, b in enumerate(y) if b]
        for i, a in enumerate(x):
            if not a:
                continue
            for j, b in ys:
                v = self.sc.get((i, j))
                if v:
                    ab = mul(a, b)
                    for k, c in v.items():
                        out[k] ^= mul(ab, c)
        return out

    def square(self, x: Sequence[int]) -> Vector:
        """Square of an odd vector (even coordinates must vanish)."""
        if any(x[: self.n0]):
            raise LieError("squaring is defined on odd vectors only")
        F = self.F
        out = [0] * self.dim
        odd = [(i, a) for i, a in enumerate(x) if a]
        for t, (i, a) in enumerate(odd):
            a2 = F.sq(a)
            for k, c in self.sq.get(i, {}).items():
                out[k] ^= F.mul(a2, c)
            for j, b in odd[t + 1:]:
                ab = F.mul(a, b)
                for k, c in self.sc.get((i, j), {}).items():
                    out[k] ^= F.mul(ab, c)
        return out

    def ad(self, x: Sequence[int]) -> Matrix:
        n = self.dim
        M = [[0] * n for _ in range(n)]
        for j in range(n):
            col = self.bracket(x, self.unit(j))
            for i, c in enumerate(col):
                M[i][j] = c
        return M

    def even_algebra(self) -> LieAlgebra:
        n0 = self.n0
        sc = {k: v for k, v in self.sc.items() if k[0] < n0 and k[1] < n0}
        return LieAlgebra(n0, sc, self.F, self.labels[:n0], check=False)

    # serialisation

    def to_dict(self) -> dict:
        n0 = self.n0
        ee, eo, oo = [], [], []
        for (i, j), v in sorted(self.sc.items()):
            for k, c in sorted(v.items()):
                if i < n0 and j < n0:
                    ee.append([i, j, k, c])
                elif i < n0 <= j:
                    eo.append([i, j - n0, k - n0, c])
                elif i >= n0 and j >= n0 and i < j:
                    oo.append([i - n0, j - n0, k, c])
        squares = [[i - n0, k, c] for i, v in sorted(self.sq.items()) for k, c in sorted(v.items())]
        return {"dim_even": n0, "dim_odd": self.n1, "field": self.F.name,
                "sc_ee": ee, "sc_eo": eo, "sc_oo": oo, "squares": squares,
                "labels": self.labels}

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)

    @classmethod
    def from_dict(cls, d: dict) -> "LieSuperalgebra":
        F = parse_field(d.get("field", "gf2"))
        n0, n1 = d["dim_even"], d["dim_odd"]
        sc: Table = {}

        def put(i, j, k, c):
            for a, b in ((i, j), (j, i)):
                slot = sc.setdefault((a, b), {})
                slot[k] = slot.get(k, 0) ^ c
        for i, j, k, c in d.get("sc_ee", []):
            slot = sc.setdefault((i, j), {})
            slot[k] = slot.get(k, 0) ^ c
        for i, j, k, c in d.get("sc_eo", []):
            put(i, j + n0, k + n0, c)
        for i, j, k, c in d.get("sc_oo", []):
            put(i + n0, j + n0, k, c)
        sq = {}
        for i, k, c in d.get("squares", []):
            slot = sq.setdefault(i + n0, {})
            slot[k] = slot.get(k, 0) ^ c
        return cls(n0, n1, sc, sq, F, d.get("labels"))

    @classmethod
    def from_json(cls, text: str) -> "LieSuperalgebra":
        return cls.from_dict(json.loads(text))


def _sadd(a: Vector, b: Vector) -> Vector:
    return [x ^ y for x, y in zip(a, b)]


def _jacobi(s: LieSuperalgebra, i: int, j: int, k: int) -> Dict[int, int]:
    out: Dict[int, int] = {}
    mul = s.F.mul
    sc = s.sc
    for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
        inner = sc.get((b, c))
        if not inner:
            continue
        for m, x in inner.items():
            outer = sc.get((a, m))
            if outer:
                for t, y in outer.items():
                    out[t] = out.get(t, 0) ^ mul(x, y)
    return {t: v for t, v in out.items() if v}


def validate_super(s: LieSuperalgebra) -> Report:
    """Parity, symmetry, [x,x] = 0, Jacobi on distinct triples and (JI).

    The identities are checked on basis vectors only.  Polarization
    reduces (JI) for sums to Jacobi on triples, and (a x)^2 = a^2 x^2 holds
    by the definition of `square`.
    """
    rep = Report()
    n0, dim, L = s.n0, s.dim, s.labels
    for (i, j), v in s.sc.items():
        rep.checked += 1
        if i == j:
            rep.fail(f"[{L[i]},{L[i]}] != 0")
        if s.sc.get((j, i)) != v:
            rep.fail(f"[{L[i]},{L[j]}] is not symmetric")
        par = s.parity(i) ^ s.parity(j)
        if any(k >= dim or s.parity(k) != par for k in v):
            rep.fail(f"[{L[i]},{L[j]}] has the wrong parity")
    for i, v in s.sq.items():
        rep.checked += 1
        if i < n0 or i >= dim:
            rep.fail(f"square stored for non-odd index {i}")
        if any(k >= n0 for k in v):
            rep.fail(f"{L[i]}^2 is not even")
    for i in range(dim):
        for j in range(i + 1, dim):
            for k in range(j + 1, dim):
                rep.checked += 1
                if any(_jacobi(s, i, j, k)):
                    rep.fail(f"Jacobi fails on ({L[i]},{L[j]},{L[k]})")
    for i in range(n0, dim):
        x = s.unit(i)
        x2 = s.square(x)
        for j in range(dim):
            rep.checked += 1
            y = s.unit(j)
            if s.bracket(x2, y) != s.bracket(x, s.bracket(x, y)):
                rep.fail(f"[{L[i]}^2,{L[j]}] != [{L[i]},[{L[i]},{L[j]}]]")
        rep.checked += 1
        if any(s.bracket(x2, x)):
            rep.fail(f"[{L[i]}^2,{L[i]}] != 0")
    return rep


# change of basis and matrix realizations


def rebase(s: LieSuperalgebra, even: Sequence[Sequence[int]], odd: Sequence[Sequence[int]],
           labels: Optional[Sequence[str]] = None) -> LieSuperalgebra:
    """The same superalgebra written in a new homogeneous basis."""
    if len(even) != s.n0 or len(odd) != s.n1:
        raise LieError("new basis has the wrong superdimension")
    if any(any(v[s.n0:]) for v in even) or any(any(v[: s.n0]) for v in odd):
        raise LieError("new basis vectors must be homogeneous")
    basis = [list(v) for v in even] + [list(v) for v in odd]
    P = [[basis[j][i] for j in range(s.dim)] for i in range(s.dim)]
    Pinv = mat_inv(P, s.F)

    def coords(v):
        return _apply(Pinv, v, s.F)
    sc, sq = {}, {}
    for a in range(s.dim):
        for b in range(a + 1, s.dim):
            d = {k: c for k, c in enumerate(coords(s.bracket(basis[a], basis[b]))) if c}
            if d:
                sc[(a, b)] = d
                sc[(b, a)] = dict(d)
    for a in range(s.n0, s.dim):
        d = {k: c for k, c in enumerate(coords(s.square(basis[a]))) if c}
        if d:
            sq[a] = d
    return LieSuperalgebra(s.n0, s.n1, sc, sq, s.F, labels)


def _matmul(A, B, F):
    return mat_mul(A, B, F)


def _flat(M) -> Vector:
    return [x for row in M for x in row]


def matrix_superalgebra(even: Sequence[Matrix], odd: Sequence[Matrix], F: Field = None,
                        labels=None) -> LieSuperalgebra:
    """Superalgebra spanned by supermatrices; bracket XY + YX, odd square X^2.

    The spans must be closed; otherwise LieError.
    """
    F = F or GF(1)
    mats = [list(map(list, m)) for m in list(even) + list(odd)]
    n0 = len(even)
    flats = [_flat(m) for m in mats]
    ncols = len(flats[0]) if flats else 0
    # solve coordinates through an echelon form of the basis with tags
    E = Eliminator(ncols + len(mats), F)
    for t, v in enumerate(flats):
        row = list(v) + [int(s == t) for s in range(len(mats))]
        if not E.add(row):
            raise LieError("matrices are linearly dependent")
    piv, rows = E.reduced()
    dense = [_unpack_any(r, ncols + len(mats), F) for r in rows]

    def coords(M):
        v = _flat(M)
        acc = [0] * len(mats)
        rem = list(v)
        for p, r in zip(piv, dense):
            a = rem[p]
            if a:
                for t in range(ncols):
                    if r[t]:
                        rem[t] ^= F.mul(a, r[t])
                for t in range(len(mats)):
                    if r[ncols + t]:
                        acc[t] ^= F.mul(a, r[ncols + t])
        if any(rem):
            raise LieError("span of the matrices is not closed")
        return acc

    def br(X, Y):
        A = _matmul(X, Y, F)
        B = _matmul(Y, X, F)
        return [[a ^ b for a, b in zip(r1, r2)] for r1, r2 in zip(A, B)]
    sc, sq = {}, {}
    for a in range(len(mats)):
        for b in range(a + 1, len(mats)):
            d = {k: c for k, c in enumerate(coords(br(mats[a], mats[b]))) if c}
            if d:
                sc[(a, b)] = d
                sc[(b, a)] = dict(d)
    for a in range(n0, len(mats)):
        d = {k: c for k, c in enumerate(coords(_matmul(mats[a], mats[a], F))) if c}
        if d:
            sq[a] = d
    S = LieSuperalgebra(n0, len(odd), sc, sq, F, labels)
    S.matrices = mats
    return S


def _pack(row):
    r = 0
    for i, x in enumerate(row):
        if x:
            r |= 1 << i
    return r


def _unpack_any(r, n, F):
    if isinstance(r, int):
        return [(r >> i) & 1 for i in range(n)]
    return [r.get(i, 0) for i in range(n)]


# sub-superalgebras, derived algebras, center, quotients


def _homog_span(s: LieSuperalgebra, vecs: Sequence[Vector]) -> Tuple[Matrix, Matrix]:
    ev = [v for v in vecs if any(v[: s.n0])]
    od = [v for v in vecs if any(v[s.n0:])]
    if any(any(v[s.n0:]) for v in ev):
        raise LieError("inhomogeneous vector")
    return rref(ev, s.F) if ev else [], rref(od, s.F) if od else []


def sub_superalgebra(s: LieSuperalgebra, even: Sequence[Vector], odd: Sequence[Vector]) -> LieSuperalgebra:
    """Restriction to a closed homogeneous subspace, written in echelon bases."""
    even = [b for b in rref([list(v) for v in even], s.F) if any(b)] if even else []
    odd = [b for b in rref([list(v) for v in odd], s.F) if any(b)] if odd else []
    basis = even + odd
    n = len(basis)
    space = Subspace(_Shim(s))
    space.basis = basis
    space.pivots = [_lead(b) for b in basis]

    def coords(v):
        if not space.contains(v):
            raise LieError("subspace is not closed")
        return [v[p] for p in space.pivots]
    sc, sq = {}, {}
    for a in range(n):
        for b in range(a + 1, n):
            d = {k: c for k, c in enumerate(coords(s.bracket(basis[a], basis[b]))) if c}
            if d:
                sc[(a, b)] = d
                sc[(b, a)] = dict(d)
    for a in range(len(even), n):
        d = {k: c for k, c in enumerate(coords(s.square(basis[a]))) if c}
        if d:
            sq[a] = d
    labels = [_svec_label(s, b) for b in basis]
    S = LieSuperalgebra(len(even), len(odd), sc, sq, s.F, labels)
    S.embedding = basis
    return S


def _lead(v):
    return next(i for i, x in enumerate(v) if x)


def _svec_label(s: LieSuperalgebra, v: Sequence[int]) -> str:
    parts = []
    for i, x in enumerate(v):
        if x:
            parts.append(s.labels[i] if x == 1 else f"{s.F.fmt(x)}*{s.labels[i]}")
    return "+".join(parts) or "0"


def super_derived(s: LieSuperalgebra) -> LieSuperalgebra:
    """[s, s] together with the squares of odd elements."""
    E0, E1 = Eliminator(s.dim, s.F), Eliminator(s.dim, s.F)
    def add(v):
        if any(v):
            tgt = E1 if any(v[s.n0:]) else E0
            tgt.add(v)
    for a in range(s.dim):
        for b in range(a + 1, s.dim):
            add(s.bracket(s.unit(a), s.unit(b)))
    for a in range(s.n0, s.dim):
        add(s.square(s.unit(a)))
    return sub_superalgebra(s, E0.dense_rows(), E1.dense_rows())


def super_center(s: LieSuperalgebra) -> Tuple[Matrix, Matrix]:
    """Even and odd parts of {z : [z, y] = 0 for all y}."""
    E = Eliminator(s.dim, s.F)
    eqs: Dict[Tuple[int, int], Dict[int, int]] = {}
    for (i, j), v in s.sc.items():
        for k, c in v.items():
            eqs.setdefault((j, k), {})[i] = c
    for row in eqs.values():
        E.add(row)
    Z = E.nullspace() if s.dim else []
    ev = [z for z in Z if not any(z[s.n0:])]
    od = [z for z in Z if not any(z[: s.n0])]
    return ev, od


def super_quotient(s: LieSuperalgebra, even: Sequence[Vector], odd: Sequence[Vector]) -> LieSuperalgebra:
    """Quotient by a homogeneous ideal, on the non-pivot basis vectors."""
    ideal = Subspace(_Shim(s), list(even) + list(odd)) if (even or odd) else None
    if ideal is None:
        return s
    for b in ideal.basis:
        for i in range(s.dim):
            if not ideal.contains(s.bracket(s.unit(i), b)):
                raise LieError("subspace is not an ideal")
    piv = set(ideal.pivots)
    keep = [i for i in range(s.dim) if i not in piv]
    pos = {c: t for t, c in enumerate(keep)}
    n0 = sum(1 for c in keep if c < s.n0)

    def red(v):
        v = ideal.reduce(v)
        return {pos[c]: v[c] for c in keep if v[c]}
    sc, sq = {}, {}
    for a in range(len(keep)):
        for b in range(a + 1, len(keep)):
            d = red(s.bracket(s.unit(keep[a]), s.unit(keep[b])))
            if d:
                sc[(a, b)] = d
                sc[(b, a)] = dict(d)
    for a in range(n0, len(keep)):
        d = red(s.square(s.unit(keep[a])))
        if d:
            sq[a] = d
    return LieSuperalgebra(n0, len(keep) - n0, sc, sq, s.F, [s.labels[c] for c in keep])


class _Shim:
    """Just enough of LieAlgebra for Subspace."""

    def __init__(self, s):
        self.F = s.F
        self.dim = s.dim


def mod_center(s: LieSuperalgebra) -> LieSuperalgebra:
    ev, od = super_center(s)
    return super_quotient(s, ev, od)


# fingerprints


def odd_chain(s: LieSuperalgebra) -> List[int]:
    """dims of g_1, [g_0, g_1], [g_0, [g_0, g_1]], ... until stable."""
    cur = [s.odd_unit(t) for t in range(s.n1)]
    dims = [len(cur)]
    while True:
        E = Eliminator(s.dim, s.F)
        for v in cur:
            for i in range(s.n0):
                w = s.bracket(s.unit(i), v)
                if any(w):
                    E.add(w)
        nxt = E.dense_rows()
        dims.append(len(nxt))
        if len(nxt) == len(cur):
            return dims
        cur = nxt


def fingerprint(s: LieSuperalgebra) -> dict:
    g0 = s.even_algebra()
    ev, od = super_center(s)
    d = super_derived(s) if s.dim else s
    return {
        "sdim": [s.n0, s.n1],
        "lower_central": _from_one(series_dims(g0, kind="lower_central")),
        "derived": _from_one(series_dims(g0, kind="derived")),
        "solvable": is_solvable(g0),
        "center": [len(ev), len(od)],
        "super_derived": [d.n0, d.n1],
        "odd_chain": odd_chain(s),
    }


def _from_one(dims: List[int]) -> List[int]:
    """Drop L_0 and stop before the repeated term: L_1, L_2, ... as in the tables."""
    out = dims[1:-1]
    return out if out else dims[1:2]


# the 1-step closure and method-2 superization


@dataclass
class GradedPair:
    g: LieAlgebra
    U: Matrix

    def check(self) -> Report:
        from .liealg import is_derivation
        rep = Report()
        rep.checked += 2
        if mat_mul(self.U, self.U, self.g.F) != [list(r) for r in self.U]:
            rep.fail("U^2 != U")
        if not is_derivation(self.g, self.U):
            rep.fail("U is not a derivation")
        return rep


@dataclass
class Closure:
    h: LieAlgebra
    U: Matrix
    squares: Dict[int, Vector]
    odd_basis: Matrix
    even_basis: Matrix
    added: List[int] = dfield(default_factory=list)


def one_step_closure(gp: GradedPair, max_new: int = 512) -> Closure:
    """Adjoin x^[2] for the odd basis vectors x of Im U.

    When (ad_x)^2 is inner on the current algebra the square is its
    preimage projected to Ker U; otherwise a new even element acting as
    (ad_x)^2 is appended after the existing basis.
    """
    g, U = gp.g, gp.U
    F = g.F
    rep = gp.check()
    if not rep:
        raise LieError("not a grading operator: " + rep.summary())
    n = g.dim
    cols = [[U[i][j] for i in range(n)] for j in range(n)]
    odd_basis = rref(cols, F) if n else []
    odd_basis = [b for b in odd_basis if any(b)]
    sc = {k: dict(v) for k, v in g.sc.items()}
    labels = list(g.labels)
    dim = n
    sources: List[int] = []
    squares: Dict[int, Vector] = {}
    for t, x in enumerate(odd_basis):
        h = LieAlgebra(dim, sc, F, labels, check=False)
        xx = list(x) + [0] * (dim - n)
        A = h.ad(xx)
        D = mat_mul(A, A, F)
        z = inner_preimage(h, D)
        if z is not None:
            squares[t] = z
            continue
        if len(sources) >= max_new:
            raise ResourceError(f"closure needs more than {max_new} new elements")
        w = dim
        for j in range(dim):
            col = {i: D[i][j] for i in range(dim) if D[i][j]}
            if col:
                sc[(w, j)] = col
                sc[(j, w)] = dict(col)
        labels.append(f"({_vec_label(g, x)})^[2]")
        sources.append(t)
        dim += 1
        squares[t] = [int(i == w) for i in range(dim)]
    h = LieAlgebra(dim, sc, F, labels)
    Uh = [[(U[i][j] if i < n and j < n else 0) for j in range(dim)] for i in range(dim)]
    # project squares into Ker U' and pad to the final dimension
    for t, z in squares.items():
        z = list(z) + [0] * (dim - len(z))
        uz = _apply(Uh, z, F)
        squares[t] = [a ^ b for a, b in zip(z, uz)]
    # every square must act as (ad_x)^2 on the final algebra
    for t, x in enumerate(odd_basis):
        xx = list(x) + [0] * (dim - n)
        A = h.ad(xx)
        if mat_mul(A, A, F) != h.ad(squares[t]):
            raise LieError(f"square of odd basis vector {t} does not act as (ad x)^2 after closure")
    even_basis = _kernel(Uh, F)
    odd_h = [list(x) + [0] * (dim - n) for x in odd_basis]
    return Closure(h, Uh, squares, odd_h, even_basis, sources)


def _kernel(U: Matrix, F: Field) -> Matrix:
    from .linalg import nullspace
    n = len(U)
    return nullspace(U, F, n) if n else []


def method2_superize(cl: Closure, check: bool = True) -> LieSuperalgebra:
    """Even part Ker U', odd part Im U', squares from the 2-power."""
    h, F = cl.h, cl.h.F
    basis = [list(v) for v in cl.even_basis] + [list(v) for v in cl.odd_basis]
    dim = h.dim
    if len(basis) != dim:
        raise LieError("Ker U' and Im U' do not span the algebra")
    n0 = len(cl.even_basis)
    P = [[basis[j][i] for j in range(dim)] for i in range(dim)]
    Pinv = mat_inv(P, F) if dim else []

    def coords(v):
        return _apply(Pinv, v, F)
    sc, sq = {}, {}
    for a in range(dim):
        for b in range(a + 1, dim):
            d = {k: c for k, c in enumerate(coords(h.bracket(basis[a], basis[b]))) if c}
            if d:
                sc[(a, b)] = d
                sc[(b, a)] = dict(d)
    for t in range(len(cl.odd_basis)):
        d = {k: c for k, c in enumerate(coords(cl.squares[t])) if c}
        if d:
            sq[n0 + t] = d
    labels = [_vec_label(h, b) for b in basis]
    S = LieSuperalgebra(n0, dim - n0, sc, sq, F, labels)
    S.basis_in_h = basis
    if check:
        rep = validate_super(S)
        if not rep:
            raise AssertionError("superization failed validation: " + rep.summary())
    return S


def superize(g: LieAlgebra, U: Matrix, check: bool = True) -> LieSuperalgebra:
    return method2_superize(one_step_closure(GradedPair(g, U)), check)


# discriminants and weight vectors


def _restrict(s: LieSuperalgebra, x: Vector, lo: int, hi: int) -> Matrix:
    M = []
    for j in range(lo, hi):
        col = s.bracket(x, s.unit(j))
        M.append(col[lo:hi])
    m = hi - lo
    return [[M[j][i] for j in range(m)] for i in range(m)]


def _nilpotent(M: Matrix, F: Field) -> bool:
    n = len(M)
    if n == 0:
        return True
    P = [list(r) for r in M]
    # M is nilpotent iff M^n = 0; square up to a power >= n
    e = 1
    while e < n:
        P = mat_mul(P, P, F)
        e *= 2
    return is_zero(P)


def q_discriminant(s: LieSuperalgebra, x: Sequence[int]) -> str:
    """'not_q' when ad_x is nilpotent on the even part but not on the odd part."""
    x = list(x)
    if any(x[s.n0:]):
        raise LieError("q_discriminant needs an even vector")
    if not any(x):
        return "q_like"
    ev = _restrict(s, x, 0, s.n0)
    od = _restrict(s, x, s.n0, s.dim)
    if _nilpotent(ev, s.F) and not _nilpotent(od, s.F):
        return "not_q"
    return "q_like"


def nilpotency_index(M: Matrix, F: Field) -> Optional[int]:
    """Least m with M^m = 0, or None."""
    n = len(M)
    P = identity(n)
    for m in range(1, n + 2):
        P = mat_mul(P, M, F)
        if is_zero(P):
            return m
    return None


def weight_vectors(s: LieSuperalgebra, raising: Sequence[Vector], lowering: Vector) -> Tuple[Matrix, Matrix]:
    """Joint kernel of the raising operators on the odd part, and kernel of the lowering one.

    Results are echelon bases of odd coordinate vectors (length n1).
    """
    n0, n1 = s.n0, s.n1

    def kernel(ops):
        E = Eliminator(n1, s.F)
        for x in ops:
            M = _restrict(s, list(x), n0, s.dim)
            for r in M:
                if any(r):
                    E.add(r)
        return E.nullspace() if n1 else []
    return kernel(raising), kernel([lowering])


# known superalgebras


def _form_block(kind: str, m: int) -> Matrix:
    if kind == "I":
        return identity(m)
    if kind == "Pi":
        if m % 2:
            raise LieError("a Pi-type block needs even size")
        h = m // 2
        return [[int(j == (i + h) % m) for j in range(m)] for i in range(m)]
    raise LieError(f"unknown form type {kind!r}")


def _form_algebra(B: Matrix, n0: int, F: Field) -> LieSuperalgebra:
    """Supermatrices X of format (n0 | N-n0) with B X symmetric."""
    from .linalg import nullspace
    N = len(B)
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

    def par(a, b):
        return (a < n0) != (b < n0)
    even, odd = [], []
    for v in sols:
        # conditions never mix parities, so each solution splits into solutions
        e = [x if not par(t // N, t % N) else 0 for t, x in enumerate(v)]
        o = [x if par(t // N, t % N) else 0 for t, x in enumerate(v)]
        even.append(e)
        odd.append(o)
    ev = [b for b in rref(even, F) if any(b)]
    od = [b for b in rref(odd, F) if any(b)]
    mats = lambda vs: [[list(v[i * N:(i + 1) * N]) for i in range(N)] for v in vs]
    return matrix_superalgebra(mats(ev), mats(od), F)


def supermatrix_sl(n0: int, n1: int, F: Field = None) -> LieSuperalgebra:
    """Supermatrices of format (n0|n1) with zero supertrace."""
    F = F or GF(1)
    N = n0 + n1
    even, odd = [], []
    for i in range(N):
        for j in range(N):
            if i == j:
                continue
            M = [[0] * N for _ in range(N)]
            M[i][j] = 1
            ((even if (i < n0) == (j < n0) else odd)).append(M)
    for i in range(N - 1):
        M = [[0] * N for _ in range(N)]
        M[i][i] = M[i + 1][i + 1] = 1
        even.append(M)
    return matrix_superalgebra(even, odd, F)


def _times(s: LieSuperalgebra, derived: int, mod_c: bool) -> LieSuperalgebra:
    for _ in range(derived):
        s = super_derived(s)
    return mod_center(s) if mod_c else s


def make_kl(n: int, F: Field = None) -> LieSuperalgebra:
    """kl_{n-1}: even X_{-2}..X_T, odd Y_{-1}..Y_T with T = 2^(n-1) - 2."""
    from .divpow import binom2
    if n < 3:
        raise LieError("kl is defined here for n >= 3")
    F = F or GF(1)
    T = (1 << (n - 1)) - 2
    X = {k: k + 2 for k in range(-2, T + 1)}
    n0 = len(X)
    Y = {k: n0 + k + 1 for k in range(-1, T + 1)}
    dim = n0 + len(Y)
    sc: Dict[Tuple[int, int], Dict[int, int]] = {}

    def put(a, b, terms):
        d: Dict[int, int] = {}
        for t in terms:
            if t is not None:
                d[t] = d.get(t, 0) ^ 1
        d = {k: c for k, c in d.items() if c}
        if d:
            sc[(a, b)] = d
            sc[(b, a)] = dict(d)

    def c(k, m):
        return binom2(k + m + 2, k + 1)
    for m in range(1, T + 1):
        put(X[-2], X[m], [X[m - 2]])
    for k in range(-1, T + 1):
        for m in range(k + 1, T + 1):
            if c(k, m):
                put(X[k], X[m], [X.get(k + m)])
                put(Y[k], Y[m], [X.get(k + m)])
    for m in range(-1, T + 1):
        put(X[-2], Y[m], [Y[m], Y.get(m - 2)])
        for k in range(-1, T + 1):
            if k == -1 and m == -1:
                put(X[-1], Y[-1], [Y[-1]])
            elif c(k, m):
                put(X[k], Y[m], [Y.get(k + m), Y.get(k + m + 1)])
    sq = {Y[-1]: {X[-2]: 1, X[-1]: 1}}
    for k in range(0, T + 1):
        if binom2(2 * k + 1, k) and 2 * k in X:
            sq[Y[k]] = {X[2 * k]: 1}
    labels = [f"X{k}" for k in X] + [f"Y{k}" for k in Y]
    return LieSuperalgebra(n0, dim - n0, sc, sq, F, labels)


def make_q_vect(n: int, F: Field = None) -> LieSuperalgebra:
    """v_n (even) plus Pi vect(1;n-1) (odd), with [X, Pi Y] = Pi[X, Y] and [Pi X, Pi Y] = [X, Y]."""
    from .divpow import ext_square, make_ext
    if n < 2:
        raise LieError("q_vect needs n >= 2")
    F = F or GF(1)
    V = make_ext(n - 1, F)
    n0 = V.dim
    m = n0 - 1  # vect(1;n-1) sits at indices 1..m of V
    sc = {}
    for a in range(n0):
        for b in range(a + 1, n0):
            if (a, b) in V.sc:
                sc[(a, b)] = dict(V.sc[(a, b)])
                sc[(b, a)] = dict(V.sc[(a, b)])
    for a in range(n0):
        for j in range(1, m + 1):
            v = V.sc.get((a, j))
            if v:
                d = {n0 + k - 1: x for k, x in v.items()}
                sc[(a, n0 + j - 1)] = d
                sc[(n0 + j - 1, a)] = dict(d)
    for i in range(1, m + 1):
        for j in range(i + 1, m + 1):
            v = V.sc.get((i, j))
            if v:
                sc[(n0 + i - 1, n0 + j - 1)] = dict(v)
                sc[(n0 + j - 1, n0 + i - 1)] = dict(v)
    sq = {}
    for j in range(1, m + 1):
        w = ext_square(V.unit(j), n - 1, F)
        d = {k: x for k, x in enumerate(w) if x}
        if d:
            sq[n0 + j - 1] = d
    labels = list(V.labels) + [f"Pi({V.labels[j]})" for j in range(1, m + 1)]
    return LieSuperalgebra(n0, m, sc, sq, F, labels)


KNOWN = ("kl", "q_vect", "k_contact", "oo_II", "oo_IPi", "oo_PiPi", "pe", "sl", "psl", "gl")


def make_known_super(name: str, n: Optional[int] = None, n0: Optional[int] = None,
                     n1: Optional[int] = None, derived: int = 0, mod_c: bool = False,
                     F: Field = None) -> LieSuperalgebra:
    """Build a named superalgebra.

    kl, q_vect, k_contact take n (kl_{n-1}, q(vect(1;n-1)), and the u = 0
    superization of vect^(1)(1;n)).  oo_* take the format (n0|n1); pe takes n.
    `derived` applies that many derived algebras (squares included) and
    `mod_c` divides by the center afterwards.
    """
    F = F or GF(1)
    if name == "kl":
        return make_kl(n, F)
    if name == "q_vect":
        return make_q_vect(n, F)
    if name == "k_contact":
        from .divpow import GeneratingFunction, vect_superization
        return vect_superization(GeneratingFunction(n, (0,) * n, F))
    if name in ("oo_II", "oo_IPi", "oo_PiPi"):
        k1, k2 = {"oo_II": ("I", "I"), "oo_IPi": ("I", "Pi"), "oo_PiPi": ("Pi", "Pi")}[name]
        if n0 is None or n1 is None:
            raise LieError(f"{name} needs n0 and n1")
        blocks = [b for b in (_form_block(k1, n0) if n0 else None, _form_block(k2, n1) if n1 else None) if b]
        B = _block_diag(blocks)
        return _times(_form_algebra(B, n0, F), derived, mod_c)
    if name == "pe":
        if not n:
            raise LieError("pe needs n")
        B = [[int(j == (i + n) % (2 * n)) for j in range(2 * n)] for i in range(2 * n)]
        return _times(_form_algebra(B, n, F), derived, mod_c)
    if name in ("sl", "psl"):
        s = supermatrix_sl(n0, n1, F)
        return _times(s, derived, mod_c or name == "psl")
    if name == "gl":
        N = n0 + n1
        ev, od = [], []
        for i in range(N):
            for j in range(N):
                M = [[int(a == i and b == j) for b in range(N)] for a in range(N)]
                (ev if (i < n0) == (j < n0) else od).append(M)
        return _times(matrix_superalgebra(ev, od, F), derived, mod_c)
    raise LieError(f"unknown superalgebra {name!r}; choose from {', '.join(KNOWN)}")


def _block_diag(blocks):
    N = sum(len(b) for b in blocks)
    M = [[0] * N for _ in range(N)]
    o = 0
    for b in blocks:
        for i, row in enumerate(b):
            for j, x in enumerate(row):
                M[o + i][o + j] = x
        o += len(b)
    return M


def from_lie(g: LieAlgebra) -> LieSuperalgebra:
    """A Lie algebra as a purely even superalgebra."""
    return LieSuperalgebra(g.dim, 0, {k: dict(v) for k, v in g.sc.items()}, {}, g.F, list(g.labels))


__all__ = [
    "LieSuperalgebra", "ResourceError", "validate_super", "rebase",
    "matrix_superalgebra", "sub_superalgebra", "super_derived", "super_center",
    "super_quotient", "mod_center", "odd_chain", "fingerprint", "GradedPair",
    "Closure", "one_step_closure", "method2_superize", "superize",
    "q_discriminant", "nilpotency_index", "weight_vectors", "supermatrix_sl",
    "make_kl", "make_q_vect", "KNOWN", "make_known_super", "from_lie",
]
