"""Reduced (non-backtracking) walk counts and the Ihara zeta polynomial.

p_r is the integer matrix whose (u, v) entry counts reduced walks of length
r from u to v.  The sequence satisfies p_0 = I, p_1 = A, p_2 = A^2 - D and
p_{r+1} = A p_r - (D - I) p_{r-1} for r >= 2; the generating function
identity sum_r t^r p_r = (1 - t^2)(I - tA + t^2(D - I))^{-1} is checked as a
truncated power series with exact integer arithmetic.  The determinant of
I - tA + t^2(D - I) is the Ihara zeta reciprocal up to the (1 - t^2)^{m-n}
factor, which is returned as an exponent so trees stay representable.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import UniPoly, unipoly_matrix_det
from .errors import IsolatedVertexError, NotConnectedError, TooSmallError
from .graphs import Graph

IntMatrix = list[list[int]]


def _int_identity(n: int) -> IntMatrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def _int_mat_mul(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    n = len(a)
    out = []
    for i in range(n):
        ai = a[i]
        row = []
        for j in range(n):
            acc = 0
            for k in range(n):
                aik = ai[k]
                if aik:
                    acc += aik * b[k][j]
            row.append(acc)
        out.append(row)
    return out


def _int_mat_sub(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


@dataclass(frozen=True)
class WalkSeries:
    """Matrices p_0..p_R of reduced-walk counts."""

    terms: tuple
    order: int


def reduced_walk_series(g: Graph, order: int) -> WalkSeries:
    """p_0 = I, p_1 = A, p_2 = A^2 - D, then the three-term recurrence."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    n = g.n
    a = g.adjacency_matrix()
    d = g.degree_matrix()
    terms: list[IntMatrix] = [_int_identity(n)]
    if order >= 1:
        terms.append(a)
    if order >= 2:
        terms.append(_int_mat_sub(_int_mat_mul(a, a), d))
    dm1 = [[d[i][j] - (1 if i == j else 0) for j in range(n)] for i in range(n)]
    for _ in range(3, order + 1):
        nxt = _int_mat_sub(_int_mat_mul(a, terms[-1]), _int_mat_mul(dm1, terms[-2]))
        terms.append(nxt)
    frozen = tuple(tuple(tuple(row) for row in m) for m in terms)
    return WalkSeries(terms=frozen, order=order)


def check_walk_identity(g: Graph, order: int) -> bool:
    """Verify (sum_{r<=R} t^r p_r) * (I - tA + t^2(D-I)) = (1-t^2) I mod t^{R+1}.

    Exact integer power-series arithmetic; connected graphs on >= 2 vertices.
    """
    if g.n < 2:
        raise TooSmallError("identity needs at least two vertices")
    if not g.is_connected():
        raise NotConnectedError("identity holds for connected graphs")
    n = g.n
    series = [
        [list(row) for row in m] for m in reduced_walk_series(g, order).terms
    ]
    a = g.adjacency_matrix()
    d = g.degree_matrix()
    dm1 = [[d[i][j] - (1 if i == j else 0) for j in range(n)] for i in range(n)]
    # factor coefficients: F_0 = I, F_1 = -A, F_2 = D - I
    factor = [_int_identity(n), [[-x for x in row] for row in a], dm1]
    for r in range(order + 1):
        acc = [[0] * n for _ in range(n)]
        for k, fk in enumerate(factor):
            if k > r:
                break
            prod = _int_mat_mul(series[r - k], fk)
            acc = [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(acc, prod)]
        if r == 0:
            expect = _int_identity(n)
        elif r == 2:
            expect = [[-1 if i == j else 0 for j in range(n)] for i in range(n)]
        else:
            expect = [[0] * n for _ in range(n)]
        if acc != expect:
            return False
    return True


def ihara_reciprocal(g: Graph) -> tuple[UniPoly, int]:
    """(det(I - tA + t^2(D - I)), m - n) with m edges and n vertices.

    The zeta reciprocal is (1 - t^2)^(m-n) times the determinant; the factor
    is left as an exponent because it is negative for trees.
    """
    if any(g.degree(v) == 0 for v in range(g.n)):
        raise IsolatedVertexError("zeta needs minimum degree >= 1")
    rows = []
    for i in range(g.n):
        row = []
        for j in range(g.n):
            if i == j:
                row.append(UniPoly((1, 0, g.degree(i) - 1)))
            elif g.has_edge(i, j):
                row.append(UniPoly((0, -1)))
            else:
                row.append(UniPoly())
        rows.append(row)
    det = unipoly_matrix_det(rows)
    return det, g.edge_count - g.n
