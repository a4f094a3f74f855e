"""Divided powers in one indeterminate and the algebras built on them.

O(1;n) has basis x^(r), 0 <= r < 2^n, with x^(r) x^(s) = C(r+s, r) x^(r+s).
vect(1;n) is spanned by e_i = x^(i+1) d, and v_{n+1} = vect(1;n) + K d^2 is
kept in the basis d^2, d, x d, ..., x^(2^n-1) d so that index 0 is d^2 and
index r+1 is x^(r) d.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .field import GF, Field
from .linalg import Matrix, Vector, char_poly, mat_mul, nullspace, rref
from .liealg import LieAlgebra, LieError, Subspace, derivation_space, subalgebra


def binom2(a: int, b: int) -> int:
    """C(a, b) mod 2 by Lucas: 1 iff every bit of b is a bit of a."""
    if b < 0 or a < 0 or b > a:
        return 0
    return int(a & b == b)


def _v2_fact(m: int) -> int:
    """2-adic valuation of m!."""
    v = 0
    while m:
        m >>= 1
        v += m
    return v


def divpow_coeff(a: int, m: int) -> int:
    """(x^(a))^(m) = ((am)! / (m! (a!)^m)) x^(am); the coefficient mod 2."""
    if m == 0:
        return 1
    if a == 0:
        return 0
    return int(_v2_fact(a * m) - _v2_fact(m) - m * _v2_fact(a) == 0)


class DividedPoly:
    """Element of O(1;n): sparse map exponent -> coefficient."""

    __slots__ = ("n", "F", "c")

    def __init__(self, n: int, coeffs: Optional[Dict[int, int]] = None, F: Field = None):
        self.n = n
        self.F = F or GF(1)
        top = 1 << n
        self.c = {r: a for r, a in (coeffs or {}).items() if a and 0 <= r < top}
        if coeffs and any(r >= top or r < 0 for r, a in coeffs.items() if a):
            raise LieError(f"exponent out of range for height {n}")

    @classmethod
    def mono(cls, n, r, F=None, a=1):
        return cls(n, {r: a}, F)

    @classmethod
    def const(cls, n, a, F=None):
        return cls(n, {0: a}, F)

    def __repr__(self):
        return f"DividedPoly({dp_str(self)})"

    def __eq__(self, other):
        return isinstance(other, DividedPoly) and self.n == other.n and self.c == other.c

    def __bool__(self):
        return bool(self.c)

    def __add__(self, other):
        out = dict(self.c)
        for r, a in other.c.items():
            v = out.get(r, 0) ^ a
            if v:
                out[r] = v
            else:
                out.pop(r, None)
        return DividedPoly(self.n, out, self.F)

    __sub__ = __add__

    def __mul__(self, other):
        if isinstance(other, DividedPoly):
            return dp_mul(self, other)
        return self.scale(other)

    def scale(self, a: int):
        mul = self.F.mul
        return DividedPoly(self.n, {r: mul(a, x) for r, x in self.c.items()}, self.F)

    def coeff(self, r: int) -> int:
        return self.c.get(r, 0)

    @property
    def const_term(self) -> int:
        return self.c.get(0, 0)


def dp_mul(p: DividedPoly, q: DividedPoly) -> DividedPoly:
    if p.n != q.n:
        raise LieError("heights differ")
    top = 1 << p.n
    mul = p.F.mul
    out: Dict[int, int] = {}
    for r, a in p.c.items():
        for s, b in q.c.items():
            t = r + s
            if t < top and t & r == r:
                v = out.get(t, 0) ^ mul(a, b)
                if v:
                    out[t] = v
                else:
                    out.pop(t, None)
    return DividedPoly(p.n, out, p.F)


def dp_shift(p: DividedPoly, k: int) -> DividedPoly:
    """The distinguished derivative d^k: x^(r) -> x^(r-k)."""
    return DividedPoly(p.n, {r - k: a for r, a in p.c.items() if r >= k}, p.F)


def dp_partial(p: DividedPoly) -> DividedPoly:
    return dp_shift(p, 1)


def dp_divpow(p: DividedPoly, k: int) -> DividedPoly:
    """p^(k) for p without constant term, via (u+v)^(k) = sum u^(k-i) v^(i)."""
    if p.const_term:
        raise LieError("divided powers need a zero constant term")
    n, F = p.n, p.F
    if k == 0:
        return DividedPoly.const(n, 1, F)
    terms = sorted(p.c.items())
    if not terms:
        return DividedPoly(n, {}, F)

    def mono_pow(r, a, m):
        if m == 0:
            return DividedPoly.const(n, 1, F)
        t = r * m
        if t >= 1 << n or not divpow_coeff(r, m):
            return DividedPoly(n, {}, F)
        return DividedPoly(n, {t: F.pow(a, m)}, F)

    # fold terms one at a time; keep all divided powers 0..k of the partial sum
    r0, a0 = terms[0]
    acc = [mono_pow(r0, a0, m) for m in range(k + 1)]
    for r, a in terms[1:]:
        pw = [mono_pow(r, a, m) for m in range(k + 1)]
        new = []
        for m in range(k + 1):
            s = DividedPoly(n, {}, F)
            for i in range(m + 1):
                if acc[m - i] and pw[i]:
                    s = s + dp_mul(acc[m - i], pw[i])
            new.append(s)
        acc = new
    return acc[k]


def dp_str(p: DividedPoly, var: str = "x") -> str:
    parts = []
    for r in sorted(p.c):
        a = p.c[r]
        mono = "1" if r == 0 else (var if r == 1 else f"{var}^({r})")
        if a == 1:
            parts.append(mono)
        else:
            parts.append(f"{p.F.fmt(a)}*{mono}" if r else p.F.fmt(a))
    return " + ".join(parts) or "0"


# vect(1;n) and v_{n+1}


def vect_bracket_coeff(a: int, b: int) -> int:
    """[x^(a) d, x^(b) d] = coeff * x^(a+b-1) d."""
    if a + b == 0:
        return 0
    return binom2(a + b - 1, a) ^ binom2(a + b - 1, b)


def vect_label(r: int) -> str:
    return "d" if r == 0 else ("x d" if r == 1 else f"x^({r}) d")


def make_vect(n: int, derived: int = 0, F: Field = None) -> LieAlgebra:
    """vect(1;n) in the basis e_{-1}, ..., e_{2^n-2}; derived=1 gives vect^(1)(1;n)."""
    if n < 1:
        raise LieError("height must be at least 1")
    F = F or GF(1)
    dim = 1 << n
    sc = {}
    for a in range(dim):
        for b in range(a + 1, dim):
            t = a + b - 1
            if t < dim and vect_bracket_coeff(a, b):
                sc[(a, b)] = {t: 1}
                sc[(b, a)] = {t: 1}
    g = LieAlgebra(dim, sc, F, [vect_label(r) for r in range(dim)])
    if derived:
        # [vect, vect] misses exactly the top element x^(2^n-1) d
        s = Subspace(g, [g.unit(i) for i in range(dim - 1)])
        g = subalgebra(g, s, g.labels[:dim - 1])
    return g


def ext_index(r: int) -> int:
    """Position of x^(r) d in the basis of v_{n+1}; d^2 sits at 0."""
    return r + 1


def ext_labels(n: int) -> List[str]:
    return ["d^2"] + [vect_label(r) for r in range(1 << n)]


def make_ext(n: int, F: Field = None) -> LieAlgebra:
    """v_{n+1} = vect(1;n) + K d^2 with [d^2, f d] = (d^2 f) d."""
    F = F or GF(1)
    dim = (1 << n) + 1
    sc = {}
    top = 1 << n
    for a in range(top):
        for b in range(a + 1, top):
            t = a + b - 1
            if t < top and vect_bracket_coeff(a, b):
                sc[(a + 1, b + 1)] = {t + 1: 1}
                sc[(b + 1, a + 1)] = {t + 1: 1}
    for r in range(2, top):
        sc[(0, r + 1)] = {r - 1: 1}
        sc[(r + 1, 0)] = {r - 1: 1}
    return LieAlgebra(dim, sc, F, ext_labels(n))


def field_to_ext(f: DividedPoly, d2: int = 0) -> Vector:
    """Coordinates in v_{n+1} of f d + d2 * d^2."""
    v = [0] * ((1 << f.n) + 1)
    v[0] = d2
    for r, a in f.c.items():
        v[r + 1] = a
    return v


def ext_to_field(v: Sequence[int], n: int, F: Field) -> Tuple[DividedPoly, int]:
    return DividedPoly(n, {r: a for r, a in enumerate(v[1:]) if a}, F), v[0]


def vf_bracket(f: DividedPoly, g: DividedPoly) -> DividedPoly:
    """[f d, g d] = (f dg + g df) d, returned as the coefficient."""
    return dp_mul(f, dp_partial(g)) + dp_mul(g, dp_partial(f))


def vf_square(f: DividedPoly) -> Tuple[DividedPoly, int]:
    """(f d)^[2] = f(0)^2 d^2 + f (df) d, as (coefficient of d, coefficient of d^2)."""
    return dp_mul(f, dp_partial(f)), f.F.sq(f.const_term)


def ext_square(v: Sequence[int], n: int, F: Field) -> Vector:
    """2-power of a vector field in v_{n+1} (no d^2 component allowed)."""
    f, d2 = ext_to_field(v, n, F)
    if d2:
        raise LieError("the 2-power of d^2 lies outside v_{n+1}")
    g, c = vf_square(f)
    return field_to_ext(g, c)


# generating functions and D_u


@dataclass(frozen=True)
class GeneratingFunction:
    """u = c_0 + sum_{k>=1} c_k x^(2^k), k < n."""

    n: int
    c: Tuple[int, ...]
    F: Field = GF(1)

    def __post_init__(self):
        if len(self.c) != self.n:
            raise LieError(f"expected {self.n} parameters (c_0..c_{self.n - 1}), got {len(self.c)}")
        if any(not 0 <= x < self.F.order for x in self.c):
            raise LieError("parameter outside the field")

    @classmethod
    def parse(cls, n: int, text: str, F: Field = None):
        F = F or GF(1)
        vals = [int(s, 0) for s in text.replace(" ", "").split(",") if s]
        return cls(n, tuple(vals), F)

    @property
    def a(self) -> int:
        return self.c[0]

    def poly(self) -> DividedPoly:
        d = {0: self.c[0]}
        for k in range(1, self.n):
            d[1 << k] = self.c[k]
        return DividedPoly(self.n, d, self.F)

    def tag(self) -> str:
        if self.F.k == 1:
            return "(" + "".join(str(x) for x in self.c) + ")"
        return "(" + ",".join(self.F.fmt(x) for x in self.c) + ")"


def check_u_prop(u: DividedPoly) -> bool:
    """x (du) = 0 and u^2 = u(0)^2."""
    x = DividedPoly.mono(u.n, 1, u.F)
    a = u.const_term
    return not dp_mul(x, dp_partial(u)) and dp_mul(u, u) == DividedPoly.const(u.n, u.F.sq(a), u.F)


def D_u_parts(u) -> Tuple[DividedPoly, Dict[int, int]]:
    """D_u = F d + sum_i b_i d^(2^i); returns F and {2^i: b_i}."""
    if isinstance(u, GeneratingFunction):
        up = u.poly()
    else:
        up = u
        if not check_u_prop(up):
            raise LieError("u must satisfy x du = 0 and u^2 = u(0)^2")
    n, Fd = up.n, up.F
    a = up.const_term
    x = DividedPoly.mono(n, 1, Fd)
    s = DividedPoly(n, {}, Fd)
    for i in range(1, n):
        coef = Fd.pow(a, (1 << i) - 2)  # 0^0 = 1
        if coef:
            s = s + dp_shift(up, 1 << i).scale(coef)
    Fpoly = up + x + dp_mul(dp_mul(x, up), s)
    shifts = {}
    for i in range(1, n):
        b = Fd.pow(a, 1 << i)
        if b:
            shifts[1 << i] = b
    return Fpoly, shifts


def _apply_D(Fpoly: DividedPoly, shifts: Dict[int, int], v: Sequence[int], n: int) -> Vector:
    """[D, X] for X in v_{n+1} given by coordinates."""
    F = Fpoly.F
    g, d2 = ext_to_field(v, n, F)
    out = vf_bracket(Fpoly, g)
    for k, b in shifts.items():
        out = out + dp_shift(g, k).scale(b)
    if d2:
        # [F d, d^2] = (d^2 F) d in characteristic 2; shifts commute with d^2
        out = out + dp_shift(Fpoly, 2).scale(d2)
    return field_to_ext(out, 0)


def D_u_ext(u) -> Matrix:
    """ad D_u on v_{n+1} (basis d^2, d, x d, ...)."""
    Fpoly, shifts = D_u_parts(u)
    n = Fpoly.n
    dim = (1 << n) + 1
    cols = [_apply_D(Fpoly, shifts, [int(i == j) for i in range(dim)], n) for j in range(dim)]
    return [[cols[j][i] for j in range(dim)] for i in range(dim)]


def D_u(u) -> Matrix:
    """ad D_u restricted to vect^(1)(1;n), basis e_{-1}, ..., e_{2^n-3}."""
    M = D_u_ext(u)
    n = (u.n if isinstance(u, GeneratingFunction) else u.n)
    m = (1 << n) - 1
    # rows/cols 1..m of the extended matrix; the image stays inside
    for j in range(1, m + 1):
        if M[0][j] or M[m + 1][j]:
            raise ArithmeticError("D_u does not preserve vect^(1)(1;n)")
    return [[M[i][j] for j in range(1, m + 1)] for i in range(1, m + 1)]


def D1_matrix(n: int, F: Field = None) -> Matrix:
    """D_1 = (1+x) d + sum d^(2^i) on v_{n+1}."""
    F = F or GF(1)
    return D_u_ext(GeneratingFunction(n, (1,) + (0,) * (n - 1), F))


# the e/o basis of the outer-torus superization


def e_o_basis(n: int, F: Field = None) -> Tuple[Dict[int, Vector], Dict[int, Vector]]:
    """e_k (k = -2 .. 2^(n-1)-2) and o_k (k = -1 .. 2^(n-1)-2) in v_{n+1}."""
    if n < 2:
        raise LieError("e/o basis needs n >= 2")
    F = F or GF(1)
    w = DividedPoly(n, {1: 1, 2: 1}, F)
    one_x = DividedPoly(n, {0: 1, 1: 1}, F)
    top = (1 << (n - 1)) - 2
    evens = {-2: field_to_ext(one_x, 1)}
    odds = {}
    for k in range(-1, top + 1):
        wk = dp_divpow(w, k + 1)
        evens[k] = field_to_ext(dp_mul(one_x, wk))
        odds[k] = field_to_ext(wk)
    return evens, odds


# T_u and A_u


def _inner_u(u) -> DividedPoly:
    up = u.poly() if isinstance(u, GeneratingFunction) else u
    if up.const_term:
        raise LieError("T_u and A_u need u(0) = 0")
    return up


def deform_maps(u) -> Tuple[Matrix, Matrix]:
    """Matrices of T_u and A_u on v_{n+1}."""
    up = _inner_u(u)
    n, F = up.n, up.F
    d1 = dp_shift(up, 1)
    d2 = dp_shift(up, 2)
    d3 = dp_shift(up, 3)
    one = DividedPoly.const(n, 1, F)
    m1 = dp_mul(up, one + d1)              # u (1 + du)
    m2 = one + d1 + dp_mul(up, d2)         # 1 + du + u d^2u
    m3 = dp_mul(up, d1)                    # u du
    d2sq = dp_mul(d2, d2)
    t_d2 = d2 + dp_mul(up, d3) + dp_mul(up, d2sq) + dp_mul(dp_mul(up, d1), d2sq)
    dim = (1 << n) + 1
    Tcols, Acols = [], []
    for j in range(dim):
        if j == 0:
            Tcols.append(field_to_ext(t_d2, 1))
            Acols.append(field_to_ext(DividedPoly(n, {}, F), 1))
            continue
        f = DividedPoly.mono(n, j - 1, F)
        df = dp_partial(f)
        Tcols.append(field_to_ext(dp_mul(f + dp_mul(m1, df), m2)))
        Acols.append(field_to_ext(f + dp_mul(m3, df)))
    T = [[Tcols[j][i] for j in range(dim)] for i in range(dim)]
    A = [[Acols[j][i] for j in range(dim)] for i in range(dim)]
    return T, A


def zero_parity(n: int) -> Tuple[List[int], List[int]]:
    """Indices of v_{n+1} that are even / odd for the u = 0 grading."""
    dim = (1 << n) + 1
    even = [0] + [r + 1 for r in range(1 << n) if r % 2 == 1]
    odd = [r + 1 for r in range(1 << n) if r % 2 == 0]
    assert len(even) + len(odd) == dim
    return even, odd


def deformed_bracket(u):
    """The superalgebra on v_{n+1} with the u-deformed bracket and squaring."""
    from .superalg import LieSuperalgebra
    up = _inner_u(u)
    n, F = up.n, up.F
    V = make_ext(n, F)
    _, A = deform_maps(up)
    fac = DividedPoly.const(n, 1, F) + dp_mul(up, dp_shift(up, 2))
    even, odd = zero_parity(n)
    order = even + odd
    dim = len(order)

    def apply(M, v):
        out = [0] * dim
        for j, x in enumerate(v):
            if x:
                for i in range(dim):
                    if M[i][j]:
                        out[i] ^= F.mul(M[i][j], x)
        return out

    def br(i, j):
        v = V.bracket(V.unit(i), V.unit(j))
        if i == 0 or j == 0:
            f, d2 = ext_to_field(v, n, F)
            return field_to_ext(dp_mul(fac, f), d2)
        return apply(A, v)

    def reorder(v):
        return [v[b] for b in order]

    sc = {}
    for a in range(dim):
        for b in range(a + 1, dim):
            r = reorder(br(order[a], order[b]))
            d = {k: c for k, c in enumerate(r) if c}
            if d:
                sc[(a, b)] = d
                sc[(b, a)] = dict(d)
    sq = {}
    for t, b in enumerate(odd):
        s = apply(A, ext_square(V.unit(b), n, F))
        d = {k: c for k, c in enumerate(reorder(s)) if c}
        sq[len(even) + t] = d
    labels = [V.labels[b] for b in order]
    S = LieSuperalgebra(len(even), len(odd), sc, sq, F, labels)
    S.ext_order = order
    return S


def vect_superization(u, check: bool = True):
    """Superization of vect^(1)(1;n) by ad D_u, computed inside v_{n+1}.

    The odd part is Im D_u, the even part is Ker D_u together with the
    squares of the odd basis vectors; brackets and squares are those of
    v_{n+1}.  The basis, as vectors of v_{n+1}, is kept in `.basis_in_ext`.
    """
    from .superalg import validate_super
    gf = u if isinstance(u, GeneratingFunction) else None
    n = gf.n if gf else u.n
    F = gf.F if gf else u.F
    U = D_u(u)
    m = (1 << n) - 1
    if mat_mul(U, U, F) != U:
        raise LieError("ad D_u is not a projection on vect^(1)(1;n)")

    def pad(v):
        return [0] + list(v) + [0]
    odd = [pad(b) for b in rref([[U[i][j] for i in range(m)] for j in range(m)], F) if any(b)]
    ker = [pad(b) for b in nullspace(U, F, m)]
    squares = [ext_square(x, n, F) for x in odd]
    even = [b for b in rref(ker + squares, F) if any(b)]
    D = D_u_ext(u)
    for z in squares:
        if any(a for a in _mv(D, z, F)):
            raise LieError("a square of an odd vector is not D_u-invariant")
    S = ext_superalgebra(n, even, odd, F)
    if check:
        rep = validate_super(S)
        if not rep:
            raise AssertionError("vect superization failed validation: " + rep.summary())
    return S


def ext_superalgebra(n: int, even: Sequence[Vector], odd: Sequence[Vector], F: Field = None, labels=None):
    """Superalgebra on given even/odd vectors of v_{n+1}, with its bracket and 2-power.

    The span must be closed under brackets and squares of odd vectors.
    """
    from .liealg import _vec_label
    from .superalg import LieSuperalgebra
    F = F or GF(1)
    V = make_ext(n, F)
    basis = [list(b) for b in even] + [list(b) for b in odd]
    dim = len(basis)
    S0 = Subspace(V, basis)
    if S0.dim != dim:
        raise LieError("basis vectors are dependent")
    C = [S0.coords(b) for b in basis]
    Cinv = _inv_t(C, F)

    def coords(v):
        if not S0.contains(v):
            raise LieError("span is not closed")
        out = [0] * dim
        for i, a in enumerate(S0.coords(v)):
            if a:
                for j, c in enumerate(Cinv[i]):
                    if c:
                        out[j] ^= F.mul(a, c)
        return out
    sc, sq = {}, {}
    for a in range(dim):
        for b in range(a + 1, dim):
            d = {k: c for k, c in enumerate(coords(V.bracket(basis[a], basis[b]))) if c}
            if d:
                sc[(a, b)] = d
                sc[(b, a)] = dict(d)
    n0 = len(even)
    for t, x in enumerate(odd):
        d = {k: c for k, c in enumerate(coords(ext_square(x, n, F))) if c}
        if d:
            sq[n0 + t] = d
    S = LieSuperalgebra(n0, len(odd), sc, sq, F, labels or [_vec_label(V, b) for b in basis])
    S.basis_in_ext = basis
    return S

def sum_f(F: Field, xs) -> int:
    s = 0
    for x in xs:
        s ^= x
    return s


def _mv(M: Matrix, v: Sequence[int], F: Field) -> Vector:
    return [sum_f(F, (F.mul(a, b) for a, b in zip(row, v) if a and b)) for row in M]


def _inv_t(C: Matrix, F: Field) -> Matrix:
    """Inverse of C, where row i of C holds the coordinates of basis vector i."""
    from .linalg import mat_inv
    return mat_inv(C, F)


# parameter rescaling and the char-poly conjecture


def sigma_rescale(c: Sequence[int], eps: int, F: Field = None) -> Tuple[int, ...]:
    """(c_1, ..., c_{n-1}) -> (eps c_1, eps^3 c_2, ..., eps^(2^(n-1)-1) c_{n-1})."""
    F = F or GF(1)
    if not eps:
        raise LieError("rescaling needs a nonzero epsilon")
    return tuple(F.mul(F.pow(eps, (1 << k) - 1), x) for k, x in enumerate(c, start=1))


def rescale_orbits(n: int, F: Field = None) -> List[List[Tuple[int, ...]]]:
    """Orbits of the rescaling action on (c_1, ..., c_{n-1}) in F^(n-1)."""
    F = F or GF(1)
    seen = set()
    orbits = []
    for c in itertools.product(range(F.order), repeat=n - 1):
        if c in seen:
            continue
        orb = sorted({sigma_rescale(c, e, F) for e in F.units()})
        seen.update(orb)
        orbits.append(orb)
    return orbits


def d2_operator(u) -> Matrix:
    """v d -> (1 + u d^2u) d^2 v d on the span of x^(odd) d."""
    up = _inner_u(u)
    n, F = up.n, up.F
    fac = DividedPoly.const(n, 1, F) + dp_mul(up, dp_shift(up, 2))
    idx = [r for r in range(1 << n) if r % 2 == 1]
    pos = {r: t for t, r in enumerate(idx)}
    m = len(idx)
    M = [[0] * m for _ in range(m)]
    for j, r in enumerate(idx):
        img = dp_mul(fac, dp_shift(DividedPoly.mono(n, r, F), 2))
        for s, a in img.c.items():
            M[pos[s]][j] ^= a
    return M


def d2_charpoly(u, check: bool = True) -> List[int]:
    return char_poly(d2_operator(u), (u.F if isinstance(u, GeneratingFunction) else u.F), check)


def conjectured_charpoly(c: Sequence[int], n: int, F: Field) -> List[int]:
    """lambda^(2^(n-1)) + sum_{k=0}^{n-2} c_{n-1-k}^(2^(k+1)) lambda^(2^k); c indexed from c_0."""
    p = [0] * ((1 << (n - 1)) + 1)
    p[-1] = 1
    for k in range(n - 1):
        p[1 << k] ^= F.pow(c[n - 1 - k], 1 << (k + 1))
    return p


# Sierpinski patterns


@dataclass
class SieveResult:
    n: int
    support: List[List[bool]]
    dim: int
    lower_ok: bool
    upper_ok: bool
    basis: List[Matrix]

    def grid(self) -> str:
        return "\n".join(" ".join("*" if x else " " for x in row).rstrip() for row in self.support)


def sierpinski_pattern(n: int, F: Field = None) -> SieveResult:
    """Support of der vect^(1)(1;n) and the checks of its sieve structure."""
    if n < 2:
        raise LieError("sieve patterns need n >= 2")
    F = F or GF(1)
    g = make_vect(n, 1, F)
    basis = derivation_space(g)
    m = g.dim
    support = [[any(D[i][j] for D in basis) for j in range(m)] for i in range(m)]
    # relations on the solution space (1-based c_{i,j} = D[i-1][j-1])
    lower_ok = all(
        D[i - 1][j - 1] == (D[i - j][0] if binom2(i, j - 1) else 0)
        for D in basis for i in range(1, m + 1) for j in range(1, i + 1)
    )
    pow2 = {(1 << k) + 1 for k in range(n + 1)}
    upper_ok = all(
        (D[0][j - 1] == 0 or j in pow2) for D in basis for j in range(2, m + 1)
    ) and all(
        D[i - 1][j - 1] == D[i - 2][j - 2]
        for D in basis for i in range(2, m + 1) for j in range(i + 1, m + 1)
    )
    return SieveResult(n, support, len(basis), lower_ok, upper_ok, basis)


# gradings of O(m;1)


def bk_grading(m: int, s: int, degrees: Sequence[int]) -> Dict[int, List[str]]:
    """Buckets of the basis (1+x_1)^j1 ... (1+x_s)^js x_{s+1}^j ... x_m^jm of O(m;1).

    Each monomial goes to sum j_i a_i mod 2, with a_i = degrees[i].
    """
    if not 0 <= s <= m or len(degrees) != m:
        raise LieError("need 0 <= s <= m and one degree per generator")
    out: Dict[int, List[str]] = {0: [], 1: []}
    for js in itertools.product((0, 1), repeat=m):
        deg = sum(j * a for j, a in zip(js, degrees)) % 2
        parts = []
        for i, j in enumerate(js):
            if j:
                parts.append(f"(1+x{i + 1})" if i < s else f"x{i + 1}")
        out[deg].append("*".join(parts) or "1")
    return out


def bk_vect_sdim(m: int, degrees: Sequence[int]) -> Tuple[int, int]:
    """Superdimension of vect(m;1) under the grading with s = 0."""
    counts = {0: 0, 1: 0}
    for js in itertools.product((0, 1), repeat=m):
        deg = sum(j * a for j, a in zip(js, degrees))
        for a in degrees:
            counts[(deg + a) % 2] += 1
    return counts[0], counts[1]


__all__ = [
    "binom2", "divpow_coeff", "DividedPoly", "dp_mul", "dp_shift", "dp_partial",
    "dp_divpow", "dp_str", "vect_bracket_coeff", "make_vect", "make_ext",
    "ext_index", "field_to_ext", "ext_to_field", "vf_bracket", "vf_square",
    "ext_square", "GeneratingFunction", "check_u_prop", "D_u_parts", "D_u_ext",
    "D_u", "D1_matrix", "e_o_basis", "deform_maps", "zero_parity",
    "deformed_bracket", "vect_superization", "ext_superalgebra", "sigma_rescale", "rescale_orbits", "d2_operator",
    "d2_charpoly", "conjectured_charpoly", "SieveResult", "sierpinski_pattern",
    "bk_grading", "bk_vect_sdim",
]
