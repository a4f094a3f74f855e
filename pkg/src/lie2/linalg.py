"""Exact dense linear algebra over GF(2^k).

Vectors are lists of field ints and matrices are lists of rows.  Over
GF(2) elimination packs each row into one Python int and reduces with
XOR; over larger fields rows are sparse dicts.  Every basis handed back
is in reduced row-echelon form with ascending pivots, so two calls that
describe the same subspace return identical lists.
"""

from __future__ import annotations

from typing import Callable, Iterable, List, Optional, Sequence, Tuple

from .field import GF, Field

Vector = List[int]
Matrix = List[List[int]]

GF2 = GF(1)


class ShapeError(ValueError):
    """Operands with incompatible shapes."""


# packing


def pack(v: Sequence[int]) -> int:
    r = 0
    for i, x in enumerate(v):
        if x:
            r |= 1 << i
    return r


def unpack(r: int, n: int) -> Vector:
    return [(r >> i) & 1 for i in range(n)]


def _low(r: int) -> int:
    return (r & -r).bit_length() - 1


# incremental elimination


class Eliminator:
    """Accumulates rows and keeps them in echelon form.

    Each stored row has a pivot at its lowest nonzero column, with value 1.
    Rows may be given as dense lists, sparse dicts, or (over GF(2)) ints.
    """

    def __init__(self, ncols: int, F: Field = GF2):
        self.ncols = ncols
        self.F = F
        self.packed = F.k == 1
        self.rows = {}
        self.pivmask = 0

    @property
    def rank(self) -> int:
        return len(self.rows)

    def _coerce(self, row):
        if self.packed:
            if isinstance(row, int):
                return row
            if isinstance(row, dict):
                r = 0
                for c, x in row.items():
                    if x:
                        r ^= 1 << c
                return r
            return pack(row)
        if isinstance(row, dict):
            return {c: x for c, x in row.items() if x}
        return {c: x for c, x in enumerate(row) if x}

    def reduce(self, row):
        """Reduce a row against the stored pivots; returns the remainder."""
        row = self._coerce(row)
        rows = self.rows
        if self.packed:
            mask = self.pivmask
            m = row & mask
            while m:
                row ^= rows[_low(m)]
                m = row & mask
            return row
        F = self.F
        while True:
            hits = [c for c in row if c in rows]
            if not hits:
                return row
            c = min(hits)
            x = row[c]
            for cc, y in rows[c].items():
                v = row.get(cc, 0) ^ F.mul(x, y)
                if v:
                    row[cc] = v
                else:
                    row.pop(cc, None)

    def add(self, row) -> bool:
        """Insert a row; True if it was independent of the stored ones."""
        row = self.reduce(row)
        if not row:
            return False
        if self.packed:
            c = _low(row)
            self.rows[c] = row
            self.pivmask |= 1 << c
            return True
        c = min(row)
        inv = self.F.inv(row[c])
        if inv != 1:
            row = {cc: self.F.mul(inv, y) for cc, y in row.items()}
        self.rows[c] = row
        return True

    def reduced(self) -> Tuple[List[int], list]:
        """Pivot columns (ascending) and the fully reduced rows."""
        piv = sorted(self.rows)
        rows = self.rows
        if self.packed:
            done = {}
            dmask = 0
            for c in reversed(piv):
                r = rows[c]
                m = r & dmask
                while m:
                    r ^= done[_low(m)]
                    m = r & dmask
                done[c] = r
                dmask |= 1 << c
            self.rows = done
            return piv, [done[c] for c in piv]
        F = self.F
        done = {}
        for c in reversed(piv):
            r = dict(rows[c])
            for c2 in sorted(cc for cc in r if cc > c):
                if c2 in done and c2 in r:
                    x = r[c2]
                    for cc, y in done[c2].items():
                        v = r.get(cc, 0) ^ F.mul(x, y)
                        if v:
                            r[cc] = v
                        else:
                            r.pop(cc, None)
            done[c] = r
        self.rows = done
        return piv, [done[c] for c in piv]

    def dense_rows(self) -> Matrix:
        piv, rows = self.reduced()
        n = self.ncols
        if self.packed:
            return [unpack(r, n) for r in rows]
        out = []
        for r in rows:
            v = [0] * n
            for c, x in r.items():
                v[c] = x
            out.append(v)
        return out

    def nullspace(self) -> Matrix:
        """Canonical basis of the solutions of row . v = 0 for all stored rows."""
        piv, rows = self.reduced()
        n = self.ncols
        pset = set(piv)
        free = [c for c in range(n) if c not in pset]
        basis = []
        if self.packed:
            for f in free:
                v = 1 << f
                for p, r in zip(piv, rows):
                    if (r >> f) & 1:
                        v |= 1 << p
                basis.append(v)
            return [unpack(b, n) for b in _rref_packed(basis)]
        for f in free:
            v = [0] * n
            v[f] = 1
            for p, r in zip(piv, rows):
                x = r.get(f, 0)
                if x:
                    v[p] = x
            basis.append(v)
        return rref(basis, self.F)


def _rref_packed(vecs: Iterable[int]) -> List[int]:
    """Reduced echelon form of packed vectors, pivot = lowest bit."""
    E = Eliminator(0, GF2)
    for v in vecs:
        E.add(v)
    _, rows = E.reduced()
    return rows


def rref(vectors: Sequence[Sequence[int]], F: Field = GF2) -> Matrix:
    """Canonical basis of the span: nonzero rows of the reduced echelon form."""
    vectors = list(vectors)
    if not vectors:
        return []
    n = len(vectors[0])
    E = Eliminator(n, F)
    for v in vectors:
        E.add(v)
    return E.dense_rows()


def rank(M: Sequence[Sequence[int]], F: Field = GF2) -> int:
    M = list(M)
    if not M:
        return 0
    E = Eliminator(len(M[0]), F)
    for r in M:
        E.add(r)
    return E.rank


def rank_nullspace(M: Sequence[Sequence[int]], F: Field = GF2, ncols: Optional[int] = None) -> Tuple[int, Matrix]:
    """Rank of M and a canonical basis of {v : M v = 0}."""
    M = list(M)
    if ncols is None:
        if not M:
            raise ShapeError("ncols is required for a matrix with no rows")
        ncols = len(M[0])
    E = Eliminator(ncols, F)
    for r in M:
        if len(r) != ncols:
            raise ShapeError("ragged matrix")
        E.add(r)
    return E.rank, E.nullspace()


def nullspace(M, F: Field = GF2, ncols: Optional[int] = None) -> Matrix:
    return rank_nullspace(M, F, ncols)[1]


def solve_linear(M: Sequence[Sequence[int]], b: Sequence[int], F: Field = GF2, ncols: Optional[int] = None) -> Optional[Vector]:
    """A solution of M x = b with free variables set to 0, or None."""
    M = list(M)
    if len(M) != len(b):
        raise ShapeError("right-hand side length differs from row count")
    if ncols is None:
        if not M:
            raise ShapeError("ncols is required for a matrix with no rows")
        ncols = len(M[0])
    E = Eliminator(ncols + 1, F)
    for r, x in zip(M, b):
        row = list(r) + [x]
        E.add(row)
    if ncols in E.rows:
        return None
    piv, rows = E.reduced()
    x = [0] * ncols
    for p, r in zip(piv, rows):
        if F.k == 1:
            x[p] = (r >> ncols) & 1
        else:
            x[p] = r.get(ncols, 0)
    return x


# basic matrix operations


def zeros(r: int, c: int) -> Matrix:
    return [[0] * c for _ in range(r)]


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def transpose(M: Matrix, ncols: Optional[int] = None) -> Matrix:
    if not M:
        return [[] for _ in range(ncols or 0)]
    return [list(col) for col in zip(*M)]


def mat_add(A: Matrix, B: Matrix) -> Matrix:
    return [[x ^ y for x, y in zip(ra, rb)] for ra, rb in zip(A, B)]


def mat_scale(A: Matrix, a: int, F: Field = GF2) -> Matrix:
    return [[F.mul(a, x) for x in r] for r in A]


def mat_vec(A: Matrix, v: Sequence[int], F: Field = GF2) -> Vector:
    nz = [(j, x) for j, x in enumerate(v) if x]
    out = []
    if F.k == 1:
        for r in A:
            s = 0
            for j, _ in nz:
                s ^= r[j]
            out.append(s)
        return out
    mul = F.mul
    for r in A:
        s = 0
        for j, x in nz:
            y = r[j]
            if y:
                s ^= mul(y, x)
        out.append(s)
    return out


def mat_mul(A: Matrix, B: Matrix, F: Field = GF2) -> Matrix:
    if not A:
        return []
    if len(A[0]) != len(B):
        raise ShapeError(f"cannot multiply {len(A)}x{len(A[0])} by {len(B)}x{len(B[0]) if B else 0}")
    m = len(B[0]) if B else 0
    if F.k == 1:
        Bp = [pack(r) for r in B]
        out = []
        for r in A:
            acc = 0
            for j, x in enumerate(r):
                if x:
                    acc ^= Bp[j]
            out.append(unpack(acc, m))
        return out
    mul = F.mul
    out = []
    for r in A:
        acc = [0] * m
        for j, x in enumerate(r):
            if x:
                for c, y in enumerate(B[j]):
                    if y:
                        acc[c] ^= mul(x, y)
        out.append(acc)
    return out


def mat_pow(A: Matrix, e: int, F: Field = GF2) -> Matrix:
    R = identity(len(A))
    P = A
    while e:
        if e & 1:
            R = mat_mul(R, P, F)
        e >>= 1
        if e:
            P = mat_mul(P, P, F)
    return R


def is_zero(A: Matrix) -> bool:
    return not any(any(r) for r in A)


def mat_inv(A: Matrix, F: Field = GF2) -> Matrix:
    """Inverse of a square matrix; raises ZeroDivisionError if singular."""
    n = len(A)
    E = Eliminator(2 * n, F)
    for i, r in enumerate(A):
        E.add(list(r) + [int(i == j) for j in range(n)])
    piv, _ = E.reduced()
    if piv[:n] != list(range(n)) or E.rank < n:
        raise ZeroDivisionError("matrix is singular")
    rows = E.dense_rows()
    return [r[n:] for r in rows[:n]]


def det(A: Matrix, F: Field = GF2) -> int:
    n = len(A)
    M = [list(r) for r in A]
    d = 1
    for c in range(n):
        p = next((r for r in range(c, n) if M[r][c]), None)
        if p is None:
            return 0
        if p != c:
            M[c], M[p] = M[p], M[c]
        d = F.mul(d, M[c][c])
        inv = F.inv(M[c][c])
        for r in range(c + 1, n):
            if M[r][c]:
                f = F.mul(M[r][c], inv)
                M[r] = [x ^ F.mul(f, y) for x, y in zip(M[r], M[c])]
    return d


def operator_matrix(f: Callable[[int], Sequence[int]], dim: int) -> Matrix:
    """Matrix whose column j is f(j), the image of the j-th basis vector."""
    cols = [list(f(j)) for j in range(dim)]
    return [[cols[j][i] for j in range(dim)] for i in range(dim)]


# polynomials: coefficient lists, lowest degree first


def poly_trim(p: List[int]) -> List[int]:
    p = list(p)
    while p and not p[-1]:
        p.pop()
    return p


def poly_mul(p: Sequence[int], q: Sequence[int], F: Field = GF2) -> List[int]:
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                if b:
                    out[i + j] ^= F.mul(a, b)
    return poly_trim(out)


def poly_eval_matrix(p: Sequence[int], A: Matrix, F: Field = GF2) -> Matrix:
    """p(A) by Horner's rule."""
    n = len(A)
    R = zeros(n, n)
    for c in reversed(list(p)):
        R = mat_mul(R, A, F) if n else R
        if c:
            for i in range(n):
                R[i][i] ^= c
    return R


def poly_str(p: Sequence[int], F: Field = GF2, var: str = "x") -> str:
    terms = []
    for i in range(len(p) - 1, -1, -1):
        c = p[i]
        if not c:
            continue
        mono = "1" if i == 0 else (var if i == 1 else f"{var}^{i}")
        if c == 1:
            terms.append(mono)
        else:
            cs = F.fmt(c)
            terms.append(f"({cs})" + ("" if i == 0 else "*" + mono))
    return " + ".join(terms) or "0"


def char_poly(A: Matrix, F: Field = GF2, check: bool = True) -> List[int]:
    """Characteristic polynomial det(xI - A), lowest degree first.

    Krylov chains are grown from e_1, e_2, ... in turn; each chain taken
    modulo the span of the earlier ones contributes one factor.  With
    `check`, the result is confirmed by Cayley-Hamilton.
    """
    n = len(A)
    if any(len(r) != n for r in A):
        raise ShapeError("characteristic polynomial needs a square matrix")
    if n == 0:
        return [1]
    # elimination over [vector | chain coefficients]
    E = Eliminator(2 * n + 1, F)
    result = [1]
    for start in range(n):
        if E.rank == n:
            break
        v = [int(i == start) for i in range(n)]
        chain = 0
        while True:
            tag = [0] * (n + 1)
            tag[chain] = 1
            row = E.reduce(list(v) + tag)
            # reduced part inside the first n columns
            if F.k == 1:
                head = row & ((1 << n) - 1)
            else:
                head = {c: x for c, x in row.items() if c < n}
            if not head:
                # v_chain = combination of earlier chain members, modulo span
                coeffs = [0] * (chain + 1)
                coeffs[chain] = 1
                if F.k == 1:
                    for i in range(chain):
                        coeffs[i] = (row >> (n + i)) & 1
                else:
                    for i in range(chain):
                        coeffs[i] = row.get(n + i, 0)
                # recorded tags carry the chain index relative to this start
                result = poly_mul(result, coeffs, F)
                break
            E.add(row)
            v = mat_vec(A, v, F)
            chain += 1
        # forget chain tags so later chains use fresh indices
        E = _strip_tags(E, n, F)
    if check and not is_zero(poly_eval_matrix(result, A, F)):
        raise ArithmeticError("Cayley-Hamilton check failed")
    return result


def _strip_tags(E: Eliminator, n: int, F: Field) -> Eliminator:
    E2 = Eliminator(2 * n + 1, F)
    mask = (1 << n) - 1
    for r in E.rows.values():
        if F.k == 1:
            E2.add(r & mask)
        else:
            E2.add({c: x for c, x in r.items() if c < n})
    return E2


__all__ = [
    "Vector", "Matrix", "ShapeError", "Eliminator", "pack", "unpack",
    "rref", "rank", "rank_nullspace", "nullspace", "solve_linear",
    "zeros", "identity", "transpose", "mat_add", "mat_scale", "mat_vec",
    "mat_mul", "mat_pow", "is_zero", "mat_inv", "det", "operator_matrix",
    "poly_trim", "poly_mul", "poly_eval_matrix", "poly_str", "char_poly",
]
