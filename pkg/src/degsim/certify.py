"""Degree-similarity certificates.

A certificate for a pair (g, h) is an exact invertible rational matrix M
with M^-1 A(g) M = A(h) and M^-1 D(g) M = D(h) simultaneously.  This module
verifies certificates bit-exactly, generates them from each construction
that provably preserves degree similarity (switching, complements, unions,
joins, the four products, k-sums, rooted products, pendants, join-vertex
additions, vertex deletions), and evaluates the battery of necessary
conditions used to refute degree similarity.

Conventions: certificates are rational.  Every construction proof exhibits a
rational M, so certifying over Q is a stronger statement that implies the
real one and keeps verification exact.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from .algebra import (
    BiPoly,
    RatFnPoly,
    UniPoly,
    mat_inverse_rational,
    mat_kron,
    mat_mul,
)
from .errors import (
    AttachSetNotConnectedError,
    BadBlockStructureError,
    BadCellIndexError,
    BadCertificateError,
    BadVertexListError,
    ConditionViolatedError,
    DegreeMismatchError,
    DegreeNotUniqueError,
    DimensionMismatchError,
    NotConnectedError,
    NotDegreeSwitchableError,
    NotRegularError,
)
from .graphs import (
    Graph,
    RootedGraph,
    SwitchingPartition,
    add_join_vertices,
    attach_pendants,
    complement,
    delete_vertex,
    induced_subgraph,
    isomorphic,
    join,
    k_sum,
    local_switch,
    pendant_layout,
    product,
    rooted_product,
    union,
    validate_switching,
)
from .pencil import adjacency_charpoly, pencil_charpoly, pencil_snf


# ---------------------------------------------------------------------------
# Certificate type
# ---------------------------------------------------------------------------

BLOCK_KINDS = ("identity", "scaled_identity", "switch", "general")


@dataclass(frozen=True)
class CertBlock:
    """One declared diagonal block: identity, a*I, (2/c)J - I, or anything."""

    size: int
    kind: str
    param: Fraction | None = None


@dataclass(frozen=True)
class Certificate:
    matrix: tuple[tuple[Fraction, ...], ...]
    blocks: tuple[CertBlock, ...]

    @property
    def n(self) -> int:
        return len(self.matrix)

    @classmethod
    def general(cls, matrix: Sequence[Sequence]) -> "Certificate":
        rows = tuple(tuple(Fraction(c) for c in row) for row in matrix)
        return cls(rows, (CertBlock(len(rows), "general"),))

    @classmethod
    def identity(cls, n: int) -> "Certificate":
        rows = tuple(tuple(Fraction(1 if i == j else 0) for j in range(n))
                     for i in range(n))
        return cls(rows, (CertBlock(n, "identity"),))

    @classmethod
    def permutation(cls, perm: Sequence[int]) -> "Certificate":
        """Certificate for (g, g.relabel(perm)): P[u][perm[u]] = 1."""
        n = len(perm)
        rows = tuple(tuple(Fraction(1 if perm[u] == w else 0) for w in range(n))
                     for u in range(n))
        return cls(rows, (CertBlock(n, "general"),))

    def validate_structure(self) -> None:
        """Check the declared blocks against the matrix contents."""
        n = self.n
        if any(len(row) != n for row in self.matrix):
            raise DimensionMismatchError("certificate matrix is not square")
        if sum(b.size for b in self.blocks) != n:
            raise BadBlockStructureError("block sizes do not sum to n")
        starts = []
        off = 0
        for b in self.blocks:
            starts.append(off)
            off += b.size
        for b, start in zip(self.blocks, starts):
            stop = start + b.size
            for i in range(start, stop):
                for j in range(n):
                    inside = start <= j < stop
                    v = self.matrix[i][j]
                    if not inside:
                        if len(self.blocks) > 1 and v != 0:
                            raise BadBlockStructureError(
                                f"nonzero entry ({i},{j}) outside declared blocks")
                        continue
                    if b.kind == "identity":
                        want = Fraction(1 if i == j else 0)
                    elif b.kind == "scaled_identity":
                        want = b.param if i == j else Fraction(0)
                    elif b.kind == "switch":
                        c = Fraction(b.param)
                        want = Fraction(2) / c - (1 if i == j else 0)
                    else:
                        continue
                    if v != want:
                        raise BadBlockStructureError(
                            f"block {b.kind} mismatch at ({i},{j})")

    def to_json(self) -> dict:
        blocks = []
        for b in self.blocks:
            entry: dict = {"size": b.size, "kind": b.kind}
            if b.param is not None:
                entry["param"] = str(b.param)
            blocks.append(entry)
        return {
            "blocks": blocks,
            "matrix": [[str(c) for c in row] for row in self.matrix],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "Certificate":
        blocks = tuple(
            CertBlock(int(b["size"]), str(b["kind"]),
                      Fraction(b["param"]) if "param" in b else None)
            for b in data["blocks"])
        matrix = tuple(tuple(Fraction(c) for c in row) for row in data["matrix"])
        return cls(matrix, blocks)


def _classify_block(mat: Sequence[Sequence[Fraction]]) -> CertBlock:
    """Name a diagonal block by its contents (identity / aI / (2/c)J-I)."""
    s = len(mat)
    diag = {mat[i][i] for i in range(s)}
    off = {mat[i][j] for i in range(s) for j in range(s) if i != j}
    if len(diag) == 1 and off <= {Fraction(0)}:
        a = next(iter(diag))
        if a == 1:
            return CertBlock(s, "identity")
        return CertBlock(s, "scaled_identity", a)
    if s >= 2 and len(off) == 1:
        share = next(iter(off))
        if share != 0 and len(diag) == 1 and next(iter(diag)) == share - 1:
            c = Fraction(2) / share
            if c == s:
                return CertBlock(s, "switch", Fraction(s))
    return CertBlock(s, "general")


def _assemble_block_diag(parts: Sequence[Sequence[Sequence[Fraction]]]) -> "Certificate":
    """Place the given square blocks on the diagonal and classify each.

    Zero-size blocks are dropped from the declaration.
    """
    n = sum(len(p) for p in parts)
    rows = [[Fraction(0)] * n for _ in range(n)]
    blocks = []
    off = 0
    for p in parts:
        s = len(p)
        if s == 0:
            continue
        for i in range(s):
            for j in range(s):
                rows[off + i][off + j] = Fraction(p[i][j])
        blocks.append(_classify_block(p))
        off += s
    return Certificate(tuple(tuple(r) for r in rows), tuple(blocks))


def _submatrix(cert: Certificate, rows: Sequence[int], cols: Sequence[int]):
    return [[cert.matrix[r][c] for c in cols] for r in rows]


# ---------------------------------------------------------------------------
# Verification
# ---------------------------------------------------------------------------

def verify_certificate(g: Graph, h: Graph, cert: Certificate) -> bool:
    """True iff M^-1 A(g) M = A(h) and M^-1 D(g) M = D(h), bit-exactly.

    Raises SingularMatrixError when M is not invertible and
    DimensionMismatchError when sizes disagree.
    """
    n = g.n
    if h.n != n or cert.n != n or any(len(row) != n for row in cert.matrix):
        raise DimensionMismatchError("graphs and certificate must share one size")
    m = [list(row) for row in cert.matrix]
    mat_inverse_rational(m)  # invertibility gate
    a1m = mat_mul(g.adjacency_matrix(), m)
    ma2 = mat_mul(m, h.adjacency_matrix())
    if a1m != ma2:
        return False
    d1m = mat_mul(g.degree_matrix(), m)
    md2 = mat_mul(m, h.degree_matrix())
    return d1m == md2


def _ensure_verifies(g: Graph, h: Graph, cert: Certificate, what: str) -> None:
    if not verify_certificate(g, h, cert):
        raise RuntimeError(f"internal error: generated {what} certificate failed")


def _require_base(g1: Graph, g2: Graph, cert: Certificate, what: str) -> None:
    if not verify_certificate(g1, g2, cert):
        raise BadCertificateError(f"supplied certificate does not verify the {what} pair")


def _require_class_structure(g1: Graph, g2: Graph, cert: Certificate) -> None:
    """M must vanish across degree classes (block-diagonal up to ordering)."""
    d1 = g1.degrees()
    d2 = g2.degrees()
    for u in range(g1.n):
        for w in range(g2.n):
            if d1[u] != d2[w] and cert.matrix[u][w] != 0:
                raise BadBlockStructureError(
                    f"certificate entry ({u},{w}) couples degree {d1[u]} "
                    f"to degree {d2[w]}")


# ---------------------------------------------------------------------------
# Construction certificates
# ---------------------------------------------------------------------------

def _partition_ordered_blocks(g: Graph, pi: SwitchingPartition) -> list | None:
    """Literal block list when cells then rest tile 0..n-1 contiguously."""
    expect = 0
    for cell in pi.cells:
        if cell != tuple(range(expect, expect + len(cell))):
            return None
        expect += len(cell)
    if pi.rest != tuple(range(expect, g.n)):
        return None
    blocks = [CertBlock(len(c), "switch", Fraction(len(c))) for c in pi.cells]
    if pi.rest:
        blocks.append(CertBlock(len(pi.rest), "identity"))
    return blocks


def certificate_for_switching(g: Graph, pi: SwitchingPartition
                              ) -> tuple[Graph, Certificate]:
    """Switch and certify: Q has (2/c_i)J - I on each cell, identity on rest.

    Requires the degree-preserving switching conditions; the plain switching
    conditions alone do not give a certificate (the degrees may move).
    """
    report = validate_switching(g, pi)
    if not report.degree_preserving:
        raise NotDegreeSwitchableError(
            report.degree_violation or report.switch_violation or "not switchable")
    switched = local_switch(g, pi)
    n = g.n
    rows = [[Fraction(0)] * n for _ in range(n)]
    for cell in pi.cells:
        c = Fraction(len(cell))
        for u in cell:
            for v in cell:
                rows[u][v] = Fraction(2) / c - (1 if u == v else 0)
    for v in pi.rest:
        rows[v][v] = Fraction(1)
    blocks = _partition_ordered_blocks(g, pi)
    if blocks is None:
        blocks = [CertBlock(n, "general")]
    cert = Certificate(tuple(tuple(r) for r in rows), tuple(blocks))
    _ensure_verifies(g, switched, cert, "switching")
    return switched, cert


def certificate_for_complement(g: Graph, h: Graph, cert: Certificate) -> Certificate:
    """The same M certifies the complements, provided g is connected."""
    if not g.is_connected():
        raise NotConnectedError("complement lemma needs a connected graph")
    _require_base(g, h, cert, "base")
    _ensure_verifies(complement(g), complement(h), cert, "complement")
    return cert


def _identity_part(n: int) -> list[list[Fraction]]:
    return [[Fraction(1) if i == j else Fraction(0) for j in range(n)] for i in range(n)]


def certificate_for_union(g1: Graph, g2: Graph, cert: Certificate, h: Graph
                          ) -> tuple[Graph, Graph, Certificate]:
    """diag(M, I) certifies (g1 u h, g2 u h)."""
    _require_base(g1, g2, cert, "base")
    matrix = _assemble_block_diag(
        [[list(row) for row in cert.matrix], _identity_part(h.n)]).matrix
    blocks = cert.blocks + ((CertBlock(h.n, "identity"),) if h.n else ())
    out = Certificate(matrix, blocks)
    u1, u2 = union(g1, h), union(g2, h)
    _ensure_verifies(u1, u2, out, "union")
    return u1, u2, out


def certificate_for_join(g1: Graph, g2: Graph, cert: Certificate, h: Graph
                         ) -> tuple[Graph, Graph, Certificate]:
    """diag(cM, I) certifies (g1 v h, g2 v h) for connected regular g1.

    The scalar c normalizes M to row-sum form: connectivity and regularity
    force M^-1 1 = c 1, and the all-ones off-blocks of the join conjugate
    correctly only for the row-sum-1 rescaling.
    """
    if not g1.is_regular():
        raise NotRegularError("join lemma needs the first graph regular")
    if not g1.is_connected():
        raise NotConnectedError("join lemma needs connected degree-similar graphs")
    _require_base(g1, g2, cert, "base")
    minv = mat_inverse_rational([list(row) for row in cert.matrix])
    sums = [sum(row) for row in minv]
    if len(set(sums)) != 1 or sums[0] == 0:
        raise BadCertificateError("certificate rows cannot be normalized to sum 1")
    c = sums[0]
    scaled = [[c * x for x in row] for row in cert.matrix]
    out = _assemble_block_diag([scaled, _identity_part(h.n)])
    j1, j2 = join(g1, h), join(g2, h)
    _ensure_verifies(j1, j2, out, "join")
    return j1, j2, out


def certificate_for_class_join(g: Graph, pi: SwitchingPartition, y: Graph,
                               cells: Sequence[int]
                               ) -> tuple[Graph, Graph, Certificate]:
    """Join y to a union of cells in both the graph and its switch.

    Cell indices run 0..k-1; index k names the rest set.  The certificate is
    diag(Q, I): Q fixes the all-ones cross blocks because each cell block of
    Q has row sums 1.
    """
    k = len(pi.cells)
    chosen = list(cells)
    if len(set(chosen)) != len(chosen):
        raise BadCellIndexError("cell indices must be distinct")
    for c in chosen:
        if not (0 <= c <= k):
            raise BadCellIndexError(f"cell index {c} out of range 0..{k}")
    switched, q = certificate_for_switching(g, pi)
    targets: list[int] = []
    for c in chosen:
        targets.extend(pi.rest if c == k else pi.cells[c])
    cross = [(u, g.n + w) for u in targets for w in range(y.n)]

    def build(base: Graph) -> Graph:
        u = union(base, y)
        return Graph(u.n, list(u.edges()) + cross)

    gamma1, gamma2 = build(g), build(switched)
    matrix = _assemble_block_diag(
        [[list(row) for row in q.matrix], _identity_part(y.n)]).matrix
    out = Certificate(
        matrix, q.blocks + ((CertBlock(y.n, "identity"),) if y.n else ()))
    _ensure_verifies(gamma1, gamma2, out, "class join")
    return gamma1, gamma2, out


def certificate_for_product(x1: Graph, x2: Graph, cert1: Certificate,
                            y1: Graph, y2: Graph, cert2: Certificate,
                            kind: str) -> tuple[Graph, Graph, Certificate]:
    """Kronecker certificate M1 (x) M2 for any of the four products.

    The lexicographic product additionally needs y1 connected (its all-ones
    blocks conjugate through M2 only then).
    """
    _require_base(x1, x2, cert1, "first")
    _require_base(y1, y2, cert2, "second")
    if kind == "lexicographic" and not y1.is_connected():
        raise NotConnectedError("lexicographic product needs the inner graph connected")
    p1 = product(x1, y1, kind)
    p2 = product(x2, y2, kind)
    m = mat_kron([list(r) for r in cert1.matrix], [list(r) for r in cert2.matrix])
    out = Certificate.general(m)
    _ensure_verifies(p1, p2, out, f"{kind} product")
    return p1, p2, out


def _unique_degree_scalars(g1: Graph, g2: Graph, cert: Certificate,
                           verts1: Sequence[int], verts2: Sequence[int]
                           ) -> list[Fraction]:
    """Check uniqueness/matching of designated degrees; return M[u_i][v_i]."""
    if len(verts1) != len(verts2):
        raise BadVertexListError("designated vertex lists differ in length")
    d1s = g1.degrees()
    d2s = g2.degrees()
    for u in verts1:
        if d1s.count(d1s[u]) != 1:
            raise DegreeNotUniqueError(
                f"vertex {u} has non-unique degree {d1s[u]} in the first graph")
    for v in verts2:
        if d2s.count(d2s[v]) != 1:
            raise DegreeNotUniqueError(
                f"vertex {v} has non-unique degree {d2s[v]} in the second graph")
    for u, v in zip(verts1, verts2):
        if d1s[u] != d2s[v]:
            raise DegreeMismatchError(
                f"degrees differ: d({u})={d1s[u]} vs d({v})={d2s[v]}")
    return [cert.matrix[u][v] for u, v in zip(verts1, verts2)]


def certificate_for_ksum(g1: Graph, g2: Graph, cert: Certificate,
                         verts1: Sequence[int], verts2: Sequence[int],
                         y: Graph, y_verts: Sequence[int]
                         ) -> tuple[Graph, Graph, Certificate]:
    """Certify the k-sums with y merged at designated unique-degree vertices.

    Hypotheses: (i) each designated vertex has a degree unique in its graph,
    (ii) degrees match across the pair, (iii) the designated set induces a
    connected subgraph of g1 (this forces all the scalars equal).
    """
    scalars = _unique_degree_scalars(g1, g2, cert, verts1, verts2)
    if verts1 and not induced_subgraph(g1, verts1).is_connected():
        raise AttachSetNotConnectedError(
            "designated vertices must induce a connected subgraph")
    _require_base(g1, g2, cert, "base")
    if len(set(scalars)) > 1:
        raise BadCertificateError("designated-vertex scalars are not all equal")
    a = scalars[0] if scalars else Fraction(1)
    gamma1 = k_sum(g1, verts1, y, y_verts)
    gamma2 = k_sum(g2, verts2, y, y_verts)
    k = len(verts1)
    rest1 = [v for v in range(g1.n) if v not in set(verts1)]
    rest2 = [v for v in range(g2.n) if v not in set(verts2)]
    core = _submatrix(cert, rest1, rest2)
    merged = [[a if i == j else Fraction(0) for j in range(k)] for i in range(k)]
    tail_n = y.n - k
    tail = [[a if i == j else Fraction(0) for j in range(tail_n)] for i in range(tail_n)]
    out = _assemble_block_diag([core, merged, tail])
    _ensure_verifies(gamma1, gamma2, out, "k-sum")
    return gamma1, gamma2, out


def certificate_for_rooted_product(g1: Graph, g2: Graph, cert: Certificate,
                                   verts1: Sequence[int], verts2: Sequence[int],
                                   ys: Sequence[RootedGraph]
                                   ) -> tuple[Graph, Graph, Certificate]:
    """Certify rooted products attached at designated unique-degree vertices.

    The block on each attached copy is a_i I with a_i = M[u_i][v_i]; plain
    identity blocks only work when every a_i is 1.
    """
    scalars = _unique_degree_scalars(g1, g2, cert, verts1, verts2)
    if len(ys) != len(verts1):
        raise BadVertexListError("need one rooted graph per designated vertex")
    _require_base(g1, g2, cert, "base")
    gamma1 = rooted_product(g1, verts1, ys)
    gamma2 = rooted_product(g2, verts2, ys)
    parts: list = [[list(row) for row in cert.matrix]]
    for a, rg in zip(scalars, ys):
        s = rg.graph.n - 1
        parts.append([[a if i == j else Fraction(0) for j in range(s)] for i in range(s)])
    tail_blocks = tuple(_classify_block(p) for p in parts[1:] if p)
    out = Certificate(_assemble_block_diag(parts).matrix, cert.blocks + tail_blocks)
    _ensure_verifies(gamma1, gamma2, out, "rooted product")
    return gamma1, gamma2, out


def certificate_for_pendants(g1: Graph, g2: Graph, cert: Certificate,
                             per_degree: Mapping[int, int]
                             ) -> tuple[Graph, Graph, Certificate]:
    """Certify pendant attachment: each (class, copy) block repeats the
    certificate's class submatrix, originals keep M."""
    _require_class_structure(g1, g2, cert)
    _require_base(g1, g2, cert, "base")
    gamma1 = attach_pendants(g1, per_degree)
    gamma2 = attach_pendants(g2, per_degree)
    layout1 = pendant_layout(g1, per_degree)
    layout2 = pendant_layout(g2, per_degree)
    classes1 = g1.degree_classes()
    classes2 = g2.degree_classes()
    p = len(layout1)
    n = g1.n
    rows = [[Fraction(0)] * (p + n) for _ in range(p + n)]
    blocks: list[CertBlock] = []
    # pendant blocks: same degree class, same copy index
    i = 0
    while i < p:
        d, copy, _ = layout1[i]
        size = len(classes1[d])
        sub = _submatrix(cert, classes1[d], classes2[d])
        for bi in range(size):
            for bj in range(size):
                rows[i + bi][i + bj] = sub[bi][bj]
        blocks.append(_classify_block(sub))
        assert layout2[i][:2] == (d, copy)
        i += size
    for u in range(n):
        for w in range(n):
            rows[p + u][p + w] = cert.matrix[u][w]
    blocks.append(_classify_block([list(r) for r in cert.matrix]))
    out = Certificate(tuple(tuple(r) for r in rows), tuple(blocks))
    _ensure_verifies(gamma1, gamma2, out, "pendant")
    return gamma1, gamma2, out


def certificate_for_addjoin(g1: Graph, g2: Graph, cert: Certificate,
                            degrees: Sequence[int]
                            ) -> tuple[Graph, Graph, Certificate]:
    """Certify join-vertex addition: diag(M_1, ..., M_l, M) with M_i the
    class submatrices.  Needs g1 connected (the all-ones conjugation)."""
    if not g1.is_connected():
        raise NotConnectedError("join-vertex lemma needs a connected graph")
    _require_class_structure(g1, g2, cert)
    _require_base(g1, g2, cert, "base")
    gamma1 = add_join_vertices(g1, degrees)
    gamma2 = add_join_vertices(g2, degrees)
    classes1 = g1.degree_classes()
    classes2 = g2.degree_classes()
    parts = [_submatrix(cert, classes1[d], classes2[d]) for d in degrees]
    parts.append([list(row) for row in cert.matrix])
    out = _assemble_block_diag(parts)
    _ensure_verifies(gamma1, gamma2, out, "join-vertex")
    return gamma1, gamma2, out


def certificate_for_vertex_deletion(g1: Graph, g2: Graph, cert: Certificate,
                                    u1: int, u2: int
                                    ) -> tuple[Graph, Graph, Certificate]:
    """Certify deletion of designated vertices u1, u2.

    Hypotheses (numbered as raised): (1) each u_i has a unique degree in its
    graph, (2) the degrees match, (3) the neighborhood of u1 is a union of
    whole degree classes of g1.
    """
    d1s = g1.degrees()
    d2s = g2.degrees()
    if d1s.count(d1s[u1]) != 1 or d2s.count(d2s[u2]) != 1:
        raise ConditionViolatedError(1, "designated vertices must have unique degrees")
    if d1s[u1] != d2s[u2]:
        raise ConditionViolatedError(2, "designated vertices must share a degree")
    nbrs = g1.neighbors(u1)
    for w in nbrs:
        same_class = {x for x in range(g1.n) if d1s[x] == d1s[w]}
        if not same_class <= set(nbrs):
            raise ConditionViolatedError(
                3, f"degree class {d1s[w]} is not contained in the neighborhood")
    _require_base(g1, g2, cert, "base")
    gamma1 = delete_vertex(g1, u1)
    gamma2 = delete_vertex(g2, u2)
    keep1 = [v for v in range(g1.n) if v != u1]
    keep2 = [v for v in range(g2.n) if v != u2]
    out = Certificate.general(_submatrix(cert, keep1, keep2))
    _ensure_verifies(gamma1, gamma2, out, "vertex deletion")
    return gamma1, gamma2, out


# ---------------------------------------------------------------------------
# Necessary-condition battery
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=True)
class NecessaryReport:
    """Outcome of every computable necessary condition, plus witnesses.

    psi/degree/class/snf are proven necessary conditions: any False there
    certifies the pair NOT degree similar.  The isomorphism flag is
    informational (non-isomorphic degree-similar pairs exist); it refutes
    only for trees, where degree similarity is equivalent to isomorphism.
    """

    psi_equal: bool
    degree_multiset_equal: bool
    class_cospectral: tuple[tuple[int, bool], ...]
    snf_equal: bool
    isomorphic: bool
    psi_witness: BiPoly | None = field(default=None, compare=False)
    class_witness: tuple[int, UniPoly] | None = field(default=None, compare=False)
    snf_witness: tuple[int, RatFnPoly, RatFnPoly] | None = field(default=None, compare=False)

    REFUTING = ("psi", "degree_multiset", "class_cospectral", "snf")

    def condition_values(self) -> dict[str, bool]:
        return {
            "psi": self.psi_equal,
            "degree_multiset": self.degree_multiset_equal,
            "class_cospectral": all(ok for _, ok in self.class_cospectral),
            "snf": self.snf_equal,
        }

    def failed_conditions(self) -> list[str]:
        return [name for name, ok in self.condition_values().items() if not ok]

    @property
    def refutes(self) -> bool:
        return bool(self.failed_conditions())

    def to_json(self) -> dict:
        out: dict = {
            "psi_equal": self.psi_equal,
            "degree_multiset_equal": self.degree_multiset_equal,
            "class_cospectral": {str(d): ok for d, ok in self.class_cospectral},
            "snf_equal": self.snf_equal,
            "isomorphic": self.isomorphic,
        }
        if self.psi_witness is not None:
            out["psi_witness"] = self.psi_witness.to_json()
        if self.class_witness is not None:
            d, diff = self.class_witness
            out["class_witness"] = {"degree": d, "charpoly_diff": diff.to_json()}
        if self.snf_witness is not None:
            i, f1, f2 = self.snf_witness
            out["snf_witness"] = {"index": i, "factor1": f1.to_json(),
                                  "factor2": f2.to_json()}
        return out


def necessary_battery(g: Graph, h: Graph) -> NecessaryReport:
    """Evaluate every implemented necessary condition for degree similarity."""
    psi_g = pencil_charpoly(g)
    psi_h = pencil_charpoly(h)
    psi_equal = psi_g == psi_h
    psi_witness = None if psi_equal else psi_g - psi_h

    deg_equal = g.degree_multiset() == h.degree_multiset()

    classes_g = g.degree_classes()
    classes_h = h.degree_classes()
    class_results = []
    class_witness = None
    for d in sorted(set(classes_g) & set(classes_h)):
        cg = adjacency_charpoly(induced_subgraph(g, classes_g[d]))
        ch = adjacency_charpoly(induced_subgraph(h, classes_h[d]))
        ok = cg == ch
        class_results.append((d, ok))
        if not ok and class_witness is None:
            class_witness = (d, cg - ch)

    snf_g = pencil_snf(g)
    snf_h = pencil_snf(h)
    snf_equal = snf_g == snf_h
    snf_witness = None
    if not snf_equal:
        for i, (f1, f2) in enumerate(
                zip(snf_g.invariant_factors, snf_h.invariant_factors)):
            if f1 != f2:
                snf_witness = (i, f1, f2)
                break
        if snf_witness is None:
            snf_witness = (min(g.n, h.n), RatFnPoly.zero(), RatFnPoly.zero())

    return NecessaryReport(
        psi_equal=psi_equal,
        degree_multiset_equal=deg_equal,
        class_cospectral=tuple(class_results),
        snf_equal=snf_equal,
        isomorphic=isomorphic(g, h),
        psi_witness=psi_witness,
        class_witness=class_witness,
        snf_witness=snf_witness,
    )
