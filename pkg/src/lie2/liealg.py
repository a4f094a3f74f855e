"""Lie algebras given by structure constants over GF(2^k).

The table is stored sparsely: ``sc[(i, j)]`` maps k to the coefficient of
e_k in [e_i, e_j], for every ordered pair with a nonzero bracket.  In
characteristic 2 alternation needs both [e_i, e_i] = 0 and symmetry of
the table, and neither implies the other, so both are checked.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field as dfield
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from .field import GF, Field, parse_field
from .linalg import (
    Eliminator, Matrix, Vector, identity, mat_mul, rref,
)

Table = Dict[Tuple[int, int], Dict[int, int]]


class LieError(ValueError):
    """Invalid algebra data or a request that does not apply to it."""


@dataclass
class Report:
    """Outcome of a validation scan."""

    ok: bool = True
    checked: int = 0
    violations: List[str] = dfield(default_factory=list)
    limit: int = 20

    def fail(self, msg: str):
        self.ok = False
        if len(self.violations) < self.limit:
            self.violations.append(msg)

    def __bool__(self):
        return self.ok

    def summary(self) -> str:
        if self.ok:
            return f"pass ({self.checked} checks)"
        return f"FAIL ({len(self.violations)} shown): " + "; ".join(self.violations)


class LieAlgebra:
    def __init__(self, dim: int, sc: Table, F: Field = None, labels: Optional[Sequence[str]] = None, check: bool = True):
        self.F = F or GF(1)
        self.dim = dim
        self.sc = {}
        for (i, j), v in sc.items():
            v = {k: c for k, c in v.items() if c}
            if v:
                self.sc[(i, j)] = v
        self.labels = list(labels) if labels else [f"e{i}" for i in range(dim)]
        if len(self.labels) != dim:
            raise LieError("label count differs from dimension")
        if check:
            rep = check_alternating(self)
            if not rep:
                raise LieError("not alternating: " + rep.summary())

    @classmethod
    def from_bracket(cls, dim: int, fn: Callable[[int, int], Sequence[int]], F: Field = None, labels=None, check=True):
        """Build from a function giving [e_i, e_j] as a dense vector, for i < j."""
        sc = {}
        for i in range(dim):
            for j in range(i + 1, dim):
                v = {k: c for k, c in enumerate(fn(i, j)) if c}
                if v:
                    sc[(i, j)] = v
                    sc[(j, i)] = dict(v)
        return cls(dim, sc, F, labels, check)

    def __repr__(self):
        return f"LieAlgebra(dim={self.dim}, {self.F.name})"

    def __eq__(self, other):
        return (isinstance(other, LieAlgebra) and self.dim == other.dim
                and self.F == other.F and self.sc == other.sc)

    def basis_bracket(self, i: int, j: int) -> Dict[int, int]:
        return self.sc.get((i, j), {})

    def unit(self, i: int) -> Vector:
        v = [0] * self.dim
        v[i] = 1
        return v

    def bracket(self, x: Sequence[int], y: Sequence[int]) -> Vector:
        out = [0] * self.dim
        mul = self.F.mul
        xs = [(i, a) for i, a in enumerate(x) if a]
        ys = [(j, b) for j, b in enumerate(y) if b]
        sc = self.sc
        for i, a in xs:
            for j, b in ys:
                v = sc.get((i, j))
                if v:
                    ab = mul(a, b)
                    for k, c in v.items():
                        out[k] ^= mul(ab, c)
        return out

    def ad(self, x: Sequence[int]) -> Matrix:
        """Matrix of y -> [x, y]; column j is [x, e_j]."""
        n = self.dim
        M = [[0] * n for _ in range(n)]
        mul = self.F.mul
        for i, a in enumerate(x):
            if not a:
                continue
            for j in range(n):
                v = self.sc.get((i, j))
                if v:
                    for k, c in v.items():
                        M[k][j] ^= mul(a, c)
        return M

    def ad_basis(self, i: int) -> Matrix:
        return self.ad(self.unit(i))

    # serialisation

    def to_dict(self) -> dict:
        entries = []
        for (i, j), v in sorted(self.sc.items()):
            for k, c in sorted(v.items()):
                entries.append([i, j, k, c])
        return {"dim": self.dim, "field": self.F.name, "entries": entries, "labels": self.labels}

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)

    @classmethod
    def from_dict(cls, d: dict, check: bool = True) -> "LieAlgebra":
        F = parse_field(d.get("field", "gf2"))
        sc: Table = {}
        for i, j, k, c in d.get("entries", []):
            slot = sc.setdefault((i, j), {})
            slot[k] = slot.get(k, 0) ^ c
        return cls(d["dim"], sc, F, d.get("labels"), check)

    @classmethod
    def from_json(cls, text: str, check: bool = True) -> "LieAlgebra":
        return cls.from_dict(json.loads(text), check)


# validation


def check_alternating(g: LieAlgebra, report: Optional[Report] = None) -> Report:
    rep = report or Report()
    for (i, j), v in g.sc.items():
        rep.checked += 1
        if i == j:
            rep.fail(f"[{g.labels[i]},{g.labels[i]}] != 0")
        elif g.sc.get((j, i)) != v:
            rep.fail(f"[{g.labels[i]},{g.labels[j]}] != [{g.labels[j]},{g.labels[i]}]")
        if any(not 0 <= k < g.dim for k in v):
            rep.fail(f"[{g.labels[i]},{g.labels[j]}] has an index out of range")
    return rep


def jacobi_defect(g: LieAlgebra, i: int, j: int, k: int) -> Vector:
    """[e_i,[e_j,e_k]] + [e_j,[e_k,e_i]] + [e_k,[e_i,e_j]]."""
    out = [0] * g.dim
    mul = g.F.mul
    sc = g.sc
    for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
        inner = sc.get((b, c))
        if not inner:
            continue
        for m, x in inner.items():
            outer = sc.get((a, m))
            if outer:
                for t, y in outer.items():
                    out[t] ^= mul(x, y)
    return out


def validate_lie(g: LieAlgebra) -> Report:
    """Alternation, symmetry and Jacobi on every basis triple."""
    rep = check_alternating(g)
    n = g.dim
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                rep.checked += 1
                if any(jacobi_defect(g, i, j, k)):
                    rep.fail(f"Jacobi fails on ({g.labels[i]},{g.labels[j]},{g.labels[k]})")
    return rep


# subspaces


class Subspace:
    """A subspace of an algebra, held by its canonical echelon basis."""

    def __init__(self, ambient: LieAlgebra, vectors: Iterable[Sequence[int]] = ()):
        self.ambient = ambient
        self.basis = rref([list(v) for v in vectors], ambient.F) if vectors else []
        self.basis = [b for b in self.basis if any(b)]
        self.pivots = [next(i for i, x in enumerate(b) if x) for b in self.basis]

    @classmethod
    def whole(cls, g: LieAlgebra) -> "Subspace":
        s = cls(g)
        s.basis = identity(g.dim)
        s.pivots = list(range(g.dim))
        return s

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __len__(self):
        return self.dim

    def __eq__(self, other):
        return isinstance(other, Subspace) and self.basis == other.basis

    def __repr__(self):
        return f"Subspace(dim={self.dim} in {self.ambient.dim})"

    def reduce(self, v: Sequence[int]) -> Vector:
        """v minus its component along the basis, read at the pivots."""
        F = self.ambient.F
        v = list(v)
        for p, b in zip(self.pivots, self.basis):
            a = v[p]
            if a:
                for t, y in enumerate(b):
                    if y:
                        v[t] ^= F.mul(a, y)
        return v

    def contains(self, v: Sequence[int]) -> bool:
        return not any(self.reduce(v))

    def coords(self, v: Sequence[int]) -> Vector:
        """Coordinates of v in the echelon basis; v must lie in the span."""
        if not self.contains(v):
            raise LieError("vector is not in the subspace")
        return [v[p] for p in self.pivots]

    def contains_space(self, other: "Subspace") -> bool:
        return all(self.contains(b) for b in other.basis)


def span(g: LieAlgebra, vectors: Iterable[Sequence[int]]) -> Subspace:
    return Subspace(g, list(vectors))


def bracket_space(g: LieAlgebra, A: Subspace, B: Subspace) -> Subspace:
    E = Eliminator(g.dim, g.F)
    for a in A.basis:
        for b in B.basis:
            E.add(g.bracket(a, b))
    s = Subspace(g)
    s.basis = E.dense_rows()
    s.pivots = [next(i for i, x in enumerate(b) if x) for b in s.basis]
    return s


def series(g: LieAlgebra, h: Optional[Subspace] = None, kind: str = "lower_central") -> List[Subspace]:
    """L_0 = h and L_k = [L_0, L_{k-1}], or L^(k) = [L^(k-1), L^(k-1)].

    Stops at the first term equal to its predecessor and includes it.
    """
    if kind not in ("lower_central", "derived"):
        raise LieError(f"unknown series kind {kind!r}")
    L0 = h if h is not None else Subspace.whole(g)
    terms = [L0]
    while True:
        prev = terms[-1]
        nxt = bracket_space(g, L0 if kind == "lower_central" else prev, prev)
        terms.append(nxt)
        if nxt == prev:
            return terms


def series_dims(g: LieAlgebra, h: Optional[Subspace] = None, kind: str = "lower_central") -> List[int]:
    return [s.dim for s in series(g, h, kind)]


def is_solvable(g: LieAlgebra, h: Optional[Subspace] = None) -> bool:
    return series(g, h, "derived")[-1].dim == 0


def lie_fingerprint(g: LieAlgebra) -> dict:
    """Isomorphism invariants: dimension, both series, center dimension, solvability."""
    return {
        "dim": g.dim,
        "lower_central": series_dims(g, kind="lower_central"),
        "derived": series_dims(g, kind="derived"),
        "center": center(g).dim,
        "solvable": is_solvable(g),
    }


def center(g: LieAlgebra) -> Subspace:
    """{z : [z, e_j] = 0 for all j}."""
    n = g.dim
    eqs = {}
    for (i, j), v in g.sc.items():
        for k, c in v.items():
            eqs.setdefault((j, k), {})[i] = c
    E = Eliminator(n, g.F)
    for row in eqs.values():
        E.add(row)
    return Subspace(g, E.nullspace()) if n else Subspace(g)


def centralizer(g: LieAlgebra, s: Subspace) -> Subspace:
    E = Eliminator(g.dim, g.F)
    for b in s.basis:
        # z -> [z, b] is linear in z; its rows are the rows of -ad_b
        M = g.ad(b)
        for r in M:
            E.add(r)
    return Subspace(g, E.nullspace())


def is_ideal(g: LieAlgebra, s: Subspace) -> bool:
    return all(s.contains(g.bracket(g.unit(i), b)) for b in s.basis for i in range(g.dim))


def subalgebra(g: LieAlgebra, s: Subspace, labels: Optional[Sequence[str]] = None) -> LieAlgebra:
    """The subalgebra on s, as a standalone algebra in the echelon basis."""
    def fn(i, j):
        v = g.bracket(s.basis[i], s.basis[j])
        if not s.contains(v):
            raise LieError("subspace is not closed under the bracket")
        return s.coords(v)
    if labels is None:
        labels = [_vec_label(g, b) for b in s.basis]
    return LieAlgebra.from_bracket(s.dim, fn, g.F, labels)


def _vec_label(g: LieAlgebra, v: Sequence[int]) -> str:
    parts = []
    for i, x in enumerate(v):
        if x:
            parts.append(g.labels[i] if x == 1 else f"{g.F.fmt(x)}*{g.labels[i]}")
    return "+".join(parts) or "0"


def derived_algebra(g: LieAlgebra) -> LieAlgebra:
    return subalgebra(g, bracket_space(g, Subspace.whole(g), Subspace.whole(g)))


def quotient_by(g: LieAlgebra, ideal: Subspace) -> LieAlgebra:
    """g / ideal on the complement spanned by the non-pivot basis vectors."""
    if not is_ideal(g, ideal):
        raise LieError("subspace is not an ideal")
    keep = [i for i in range(g.dim) if i not in set(ideal.pivots)]
    pos = {c: t for t, c in enumerate(keep)}

    def fn(a, b):
        v = ideal.reduce(g.bracket(g.unit(keep[a]), g.unit(keep[b])))
        return [v[c] for c in keep]
    q = LieAlgebra.from_bracket(len(keep), fn, g.F, [g.labels[c] for c in keep])
    q.quotient_map = lambda v: [ideal.reduce(v)[c] for c in keep]
    q.lift = lambda w: [w[pos[i]] if i in pos else 0 for i in range(g.dim)]
    return q


def induced_on_quotient(g: LieAlgebra, ideal: Subspace, D: Matrix) -> Matrix:
    """Matrix on g/ideal induced by an operator D that preserves the ideal."""
    keep = [i for i in range(g.dim) if i not in set(ideal.pivots)]
    cols = []
    for c in keep:
        img = [D[r][c] for r in range(g.dim)]
        red = ideal.reduce(img)
        cols.append([red[t] for t in keep])
    m = len(keep)
    return [[cols[j][i] for j in range(m)] for i in range(m)]


# derivations and the 2-power


def derivation_equations(g: LieAlgebra) -> Eliminator:
    """Rows of D[e_i,e_j] = [De_i,e_j] + [e_i,De_j] in the unknowns D[a][b].

    The unknown D[a][b] (coefficient of e_a in D e_b) has index a*dim + b.
    """
    n = g.dim
    F = g.F
    sc = g.sc
    E = Eliminator(n * n, F)
    # partners[i] = list of (l, {k: c}) with [e_l, e_i] nonzero
    partners: Dict[int, List[Tuple[int, Dict[int, int]]]] = {i: [] for i in range(n)}
    for (l, i), v in sc.items():
        partners[i].append((l, v))
    packed = F.k == 1
    for i in range(n):
        for j in range(i + 1, n):
            eqs: Dict[int, Dict[int, int]] = {}

            def put(k, u, c):
                row = eqs.setdefault(k, {})
                x = row.get(u, 0) ^ c
                if x:
                    row[u] = x
                else:
                    row.pop(u, None)
            for l, c in sc.get((i, j), {}).items():
                for k in range(n):
                    put(k, k * n + l, c)
            # [D e_i, e_j] = sum_l D[l][i] [e_l, e_j]
            for l, v in partners[j]:
                for k, c in v.items():
                    put(k, l * n + i, c)
            # [e_i, D e_j] = sum_l D[l][j] [e_i, e_l]  (table is symmetric)
            for l, v in partners[i]:
                for k, c in v.items():
                    put(k, l * n + j, c)
            for row in eqs.values():
                if row:
                    if packed:
                        r = 0
                        for u in row:
                            r |= 1 << u
                        E.add(r)
                    else:
                        E.add(row)
    return E


def derivation_space(g: LieAlgebra) -> List[Matrix]:
    """Canonical basis of der g as dim x dim matrices (column j = D e_j)."""
    n = g.dim
    if n == 0:
        return []
    E = derivation_equations(g)
    return [[v[a * n:(a + 1) * n] for a in range(n)] for v in E.nullspace()]


def is_derivation(g: LieAlgebra, D: Matrix) -> bool:
    n = g.dim
    cols = [[D[r][c] for r in range(n)] for c in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            lhs = _apply(D, g.bracket(g.unit(i), g.unit(j)), g.F)
            rhs = g.bracket(cols[i], g.unit(j))
            r2 = g.bracket(g.unit(i), cols[j])
            if any(a ^ b ^ c for a, b, c in zip(lhs, rhs, r2)):
                return False
    return True


def _apply(D: Matrix, v: Sequence[int], F: Field) -> Vector:
    out = [0] * len(D)
    for j, x in enumerate(v):
        if x:
            for r in range(len(D)):
                y = D[r][j]
                if y:
                    out[r] ^= F.mul(y, x)
    return out


def inner_preimage(g: LieAlgebra, D: Matrix) -> Optional[Vector]:
    """Canonical z with ad_z = D, or None if D is not inner."""
    n = g.dim
    if n == 0:
        return []
    # unknown z_i; equation (k, j): sum_i z_i c^{ij}_k = D[k][j]
    eqs: Dict[Tuple[int, int], Dict[int, int]] = {}
    for (i, j), v in g.sc.items():
        for k, c in v.items():
            eqs.setdefault((k, j), {})[i] = c
    E = Eliminator(n + 1, g.F)
    for k in range(n):
        for j in range(n):
            row = dict(eqs.get((k, j), {}))
            if D[k][j]:
                row[n] = D[k][j]
            if row:
                E.add(row)
    if n in E.rows:
        return None
    piv, rows = E.reduced()
    z = [0] * n
    for p, r in zip(piv, rows):
        z[p] = (r >> n) & 1 if g.F.k == 1 else r.get(n, 0)
    return z


def two_power(g: LieAlgebra, x: Sequence[int]) -> Optional[Vector]:
    """z with ad_z = (ad_x)^2, canonical up to the center, or None if outer."""
    A = g.ad(x)
    return inner_preimage(g, mat_mul(A, A, g.F))


__all__ = [
    "LieAlgebra", "LieError", "Report", "Subspace", "Table",
    "check_alternating", "jacobi_defect", "validate_lie", "span", "bracket_space",
    "series", "series_dims", "is_solvable", "center", "centralizer", "is_ideal",
    "subalgebra", "derived_algebra", "quotient_by", "induced_on_quotient",
    "derivation_equations", "derivation_space", "is_derivation", "inner_preimage",
    "two_power", "lie_fingerprint",
]
