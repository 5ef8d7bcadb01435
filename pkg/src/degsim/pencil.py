"""The matrix pencil A - mu*D and everything computed from it.

Provides the generalized characteristic polynomial det(tI - (A - mu*D)),
the four classical characteristic polynomials, the bordered-determinant
helper used by the coalescence identity, and the Smith normal form of
tI - (A - mu*D) over the principal ideal domain Q(mu)[t], whose equality
decides similarity of the pencils over Q(mu) (equivalently over R(mu)).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .algebra import (
    BiPoly,
    RatFn,
    RatFnPoly,
    UniPoly,
    _z_add,
    _z_exact_div,
    _z_gcd,
    _z_mul,
    _zz_sub,
    bareiss_det,
    unipoly_matrix_det,
    unit_normalize_ratfnpolys,
)
from .errors import DimensionMismatchError, IsolatedVertexError
from .graphs import Graph


def pencil_matrix(g: Graph) -> list[list[BiPoly]]:
    """Entry (i, j) is A_ij - mu*D_ij; diagonal entries are -mu*deg(i)."""
    out = []
    for i in range(g.n):
        row = []
        for j in range(g.n):
            if i == j:
                row.append(BiPoly((UniPoly((0, -g.degree(i))),)))
            elif g.has_edge(i, j):
                row.append(BiPoly.one())
            else:
                row.append(BiPoly.zero())
        out.append(row)
    return out


def char_matrix(g: Graph) -> list[list[BiPoly]]:
    """tI - (A - mu*D): diagonal t + mu*deg(i), off-diagonal -A_ij."""
    out = []
    for i in range(g.n):
        row = []
        for j in range(g.n):
            if i == j:
                row.append(BiPoly((UniPoly((0, g.degree(i))), UniPoly.one())))
            elif g.has_edge(i, j):
                row.append(BiPoly.const(-1))
            else:
                row.append(BiPoly.zero())
        out.append(row)
    return out


def pencil_charpoly(g: Graph) -> BiPoly:
    """Generalized characteristic polynomial det(tI - (A - mu*D)).

    Monic of degree n in t; degree at most n in mu.
    """
    return bareiss_det(char_matrix(g))


def pencil_matrix_deleted(g: Graph, drop: Sequence[int]) -> list[list[BiPoly]]:
    """Pencil matrix with the given rows and columns deleted.

    Degrees stay those of g (deletion happens at the matrix level, not the
    graph level), which is what the coalescence identity manipulates.
    """
    keep = [v for v in range(g.n) if v not in set(drop)]
    full = pencil_matrix(g)
    return [[full[i][j] for j in keep] for i in keep]


def bipoly_matrix_charpoly(m: Sequence[Sequence[BiPoly]]) -> BiPoly:
    """det(tI - M) for a square BiPoly matrix M."""
    n = len(m)
    t = BiPoly.t()
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            entry = -m[i][j]
            if i == j:
                entry = entry + t
            row.append(entry)
        rows.append(row)
    return bareiss_det(rows)


def bordered_charpoly(m: Sequence[Sequence[BiPoly]], x: Sequence[BiPoly],
                      y: Sequence[BiPoly]) -> BiPoly:
    """det of tI - [[0, x^T], [y, M]], with t in the new corner.

    The corner vertex's own diagonal term is deliberately not included; the
    caller composes it when reconstructing a coalescence determinant.
    """
    n = len(m)
    if any(len(row) != n for row in m) or len(x) != n or len(y) != n:
        raise DimensionMismatchError("bordered matrix dimensions inconsistent")
    t = BiPoly.t()
    top = [t] + [-xi for xi in x]
    rows = [top]
    for i in range(n):
        row = [-y[i]]
        for j in range(n):
            entry = -m[i][j]
            if i == j:
                entry = entry + t
            row.append(entry)
        rows.append(row)
    return bareiss_det(rows)


# ---------------------------------------------------------------------------
# Classical characteristic polynomials
# ---------------------------------------------------------------------------

def _char_unipoly(diag0: Sequence[Fraction | int], offdiag_sign: int,
                  g: Graph, t_diag: Sequence[int]) -> UniPoly:
    """det of the matrix with entry (i,j) = t*t_diag[i]*delta - M_ij where
    M has the given diagonal and off-diagonal sign times A."""
    rows = []
    for i in range(g.n):
        row = []
        for j in range(g.n):
            if i == j:
                row.append(UniPoly((-diag0[i], t_diag[i])))
            elif g.has_edge(i, j):
                row.append(UniPoly((offdiag_sign,)))
            else:
                row.append(UniPoly())
        rows.append(row)
    return unipoly_matrix_det(rows)


def adjacency_charpoly(g: Graph) -> UniPoly:
    """det(tI - A)."""
    return _char_unipoly([0] * g.n, -1, g, [1] * g.n)


def laplacian_charpoly(g: Graph) -> UniPoly:
    """det(tI - (D - A))."""
    return _char_unipoly(g.degrees(), 1, g, [1] * g.n)


def signless_charpoly(g: Graph) -> UniPoly:
    """det(tI - (D + A))."""
    return _char_unipoly(g.degrees(), -1, g, [1] * g.n)


def deg_scaled_charpoly(g: Graph) -> UniPoly:
    """det(tD - A), degree n with leading coefficient det(D).

    Its root multiset is exactly the normalized-adjacency spectrum whenever
    the minimum degree is at least 1, while staying inside Q[t].
    """
    degs = g.degrees()
    if any(d == 0 for d in degs):
        raise IsolatedVertexError("graph has an isolated vertex")
    return _char_unipoly([0] * g.n, -1, g, degs)


@dataclass(frozen=True)
class SpectralProfile:
    """The pencil charpoly, the four classical charpolys, and the degrees.

    deg_scaled_charpoly is None when the graph has an isolated vertex (the
    normalized spectrum does not exist there).
    """

    psi: BiPoly
    adj_charpoly: UniPoly
    laplacian_charpoly: UniPoly
    signless_charpoly: UniPoly
    deg_scaled_charpoly: UniPoly | None
    degree_multiset: tuple[int, ...]


def spectral_profile(g: Graph) -> SpectralProfile:
    try:
        scaled = deg_scaled_charpoly(g)
    except IsolatedVertexError:
        scaled = None
    return SpectralProfile(
        psi=pencil_charpoly(g),
        adj_charpoly=adjacency_charpoly(g),
        laplacian_charpoly=laplacian_charpoly(g),
        signless_charpoly=signless_charpoly(g),
        deg_scaled_charpoly=scaled,
        degree_multiset=g.degree_multiset(),
    )


# ---------------------------------------------------------------------------
# Smith normal form over Q(mu)[t]
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PencilSNF:
    """Invariant factors of tI - (A - mu*D), monic in t, divisibility chain."""

    invariant_factors: tuple[RatFnPoly, ...]

    def to_json(self) -> list:
        return [f.to_json() for f in self.invariant_factors]

    @classmethod
    def from_json(cls, data) -> "PencilSNF":
        return cls(tuple(RatFnPoly.from_json(d) for d in data))


# The elimination runs fraction-free over Z[mu][t]: entries are nested int
# coefficient lists (t-major), row/column operations use pseudo-division (the
# whole row is scaled by the pivot's leading mu-polynomial, a unit of
# Q(mu)[t]), and rows/columns are re-normalized to joint primitive form after
# each operation.  Unit scalings do not change the Smith form, and staying in
# Z[mu][t] avoids the coefficient explosion of rational-function arithmetic.

def _zz_scale_z(e, z):
    return [_z_mul(c, z) if c else [] for c in e]


def _zz_smul_shift(e, s, k):
    """e * s * t^k for a mu-polynomial s."""
    return [[] for _ in range(k)] + [_z_mul(c, s) if c else [] for c in e]


def _zz_add(a, b):
    out = [list(c) for c in a] + [[] for _ in range(len(b) - len(a))]
    for i, c in enumerate(b):
        out[i] = _z_add(out[i], c)
    while out and not out[-1]:
        out.pop()
    return out


def _vec_primitive(vec):
    """Divide a vector of Z[mu][t] entries by its joint content (a unit)."""
    ig = 0
    for e in vec:
        for c in e:
            for x in c:
                ig = math.gcd(ig, x)
    if ig > 1:
        vec = [[[x // ig for x in c] for c in e] for e in vec]
    g: list = []
    for e in vec:
        for c in e:
            if c:
                g = _z_gcd(g, c)
                if len(g) <= 1:
                    break
        if g and len(g) <= 1:
            break
    if len(g) > 1:
        vec = [[_z_exact_div(c, g) if c else [] for c in e] for e in vec]
    return vec


def _zz_divisible(e, pivot):
    """Exact divisibility in Q(mu)[t], decided by pseudo-remainder."""
    dp = len(pivot) - 1
    d = pivot[-1]
    r = e
    while r and len(r) - 1 >= dp:
        s = r[-1]
        shift = len(r) - 1 - dp
        r = _zz_sub(_zz_scale_z(r, d), _zz_smul_shift(pivot, s, shift))
    return not r


def _find_pivot_zz(a, top: int, n: int):
    best = None
    best_key = None
    for r in range(top, n):
        row = a[r]
        for c in range(top, n):
            e = row[c]
            if not e:
                continue
            key = (len(e) - 1, sum(len(z) - 1 for z in e if z), r, c)
            if best_key is None or key < best_key:
                best_key = key
                best = (r, c)
    return best


def snf_invariant_factors(mat: Sequence[Sequence[RatFnPoly]]) -> list[RatFnPoly]:
    """Smith normal form of a square matrix over Q(mu)[t].

    Pivot rule: nonzero entry of minimal t-degree, ties broken by the total
    mu-degree of the numerators, then row-major position.  Returns the monic
    invariant factors d_1 | d_2 | ... (zeros padded at the end for singular
    input).
    """
    n = len(mat)
    for row in mat:
        if len(row) != n:
            raise DimensionMismatchError("matrix must be square")
    a = []
    for row in mat:
        cleared = unit_normalize_ratfnpolys(list(row))
        a.append([[[int(f) for f in coef.num.coeffs] for coef in e.coeffs]
                  for e in cleared])
    factors: list[RatFnPoly] = []
    for top in range(n):
        if _find_pivot_zz(a, top, n) is None:
            break
        while True:
            r, c = _find_pivot_zz(a, top, n)
            if r != top:
                a[top], a[r] = a[r], a[top]
            if c != top:
                for row in a:
                    row[top], row[c] = row[c], row[top]
            pivot = a[top][top]
            dp = len(pivot) - 1
            d = pivot[-1]
            # clear the pivot column by pseudo-division row operations; a
            # nonzero leftover has smaller t-degree and forces a repick
            remainder_seen = False
            for i in range(top + 1, n):
                if not a[i][top]:
                    continue
                row_i = a[i]
                row_t = a[top]
                touched = False
                while row_i[top] and len(row_i[top]) - 1 >= dp:
                    s = row_i[top][-1]
                    shift = len(row_i[top]) - 1 - dp
                    for j in range(top, n):
                        left = _zz_scale_z(row_i[j], d) if row_i[j] else []
                        right = (_zz_smul_shift(row_t[j], s, shift)
                                 if row_t[j] else [])
                        row_i[j] = _zz_sub(left, right) if right else left
                    touched = True
                if touched:
                    a[i] = _vec_primitive(row_i)
                if a[i][top]:
                    remainder_seen = True
            if remainder_seen:
                continue
            remainder_seen = False
            for j in range(top + 1, n):
                if not a[top][j]:
                    continue
                touched = False
                while a[top][j] and len(a[top][j]) - 1 >= dp:
                    s = a[top][j][-1]
                    shift = len(a[top][j]) - 1 - dp
                    for i in range(top, n):
                        left = _zz_scale_z(a[i][j], d) if a[i][j] else []
                        right = (_zz_smul_shift(a[i][top], s, shift)
                                 if a[i][top] else [])
                        a[i][j] = _zz_sub(left, right) if right else left
                    touched = True
                if touched:
                    col = _vec_primitive([a[i][j] for i in range(top, n)])
                    for i, e in zip(range(top, n), col):
                        a[i][j] = e
                if a[top][j]:
                    remainder_seen = True
            if remainder_seen:
                continue
            if dp > 0:
                # every remaining entry must be divisible by the pivot;
                # otherwise absorb the offending row and keep reducing
                offender = None
                for i in range(top + 1, n):
                    for j in range(top + 1, n):
                        if a[i][j] and not _zz_divisible(a[i][j], pivot):
                            offender = i
                            break
                    if offender is not None:
                        break
                if offender is not None:
                    bad = a[offender]
                    a[top] = _vec_primitive(
                        [_zz_add(a[top][j], bad[j]) for j in range(n)])
                    continue
            break
        entry = a[top][top]
        factors.append(
            RatFnPoly.from_bipoly(BiPoly(UniPoly(c) for c in entry)).monic())
    while len(factors) < n:
        factors.append(RatFnPoly.zero())
    return factors


def pencil_snf(g: Graph) -> PencilSNF:
    """Invariant factors of tI - (A - mu*D) over Q(mu)[t]."""
    rows = []
    for i in range(g.n):
        row = []
        for j in range(g.n):
            if i == j:
                row.append(RatFnPoly((RatFn(UniPoly((0, g.degree(i)))), RatFn.one())))
            elif g.has_edge(i, j):
                row.append(RatFnPoly((RatFn.from_scalar(-1),)))
            else:
                row.append(RatFnPoly.zero())
        rows.append(row)
    return PencilSNF(tuple(snf_invariant_factors(rows)))


def pencil_similar(g: Graph, h: Graph) -> bool:
    """True iff the pencils A-mu*D of g and h are similar over Q(mu).

    Decided by comparing Smith normal forms of tI - (A - mu*D); a positive
    answer also gives similarity over R(mu), and similarity of A's and D's
    separately over Q.  It does NOT by itself establish degree similarity.
    """
    if g.n != h.n:
        return False
    return pencil_snf(g) == pencil_snf(h)
