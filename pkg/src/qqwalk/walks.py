"""Arc-indexed matrices of the quaternionic walk and its weighted relatives.

Builds the 2m x 2m transition matrix U from a coin map q (q(e) off the
backtracking pair, q(e) - 1 on it), the Grover specialization q(e) =
2/d_{o(e)}, the non-backtracking matrices B and J0, the weighted variants
B_w, K, L, W and D_w, and the two structural checks: the per-arc unitarity
condition and the vertex-independent column-sum condition whose common
value alpha characterizes the Grover-like regime.
"""

from __future__ import annotations

import numpy as np

from .graph import Graph
from .qmatrix import QuatMatrix
from .quaternion import Quaternion, QuaternionFormatError, parse_quaternion

__all__ = [
    "CoinMap",
    "CoinFormatError",
    "WeightMap",
    "build_B_and_J0",
    "build_Bw",
    "build_K_L",
    "build_U",
    "build_W_Dw",
    "grover_matrix",
    "parse_coin_file",
    "quat_cond_check",
    "unitarity_condition",
]


class CoinFormatError(ValueError):
    """Raised for malformed coin/weight files."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class CoinMap:
    """Assignment of a quaternion to every arc of a graph.

    Also serves as the general weight map for the zeta-function matrices;
    the walk coin is the special case where the weights feed the transition
    matrix U.
    """

    def __init__(self, graph: Graph, values: list[Quaternion]):
        if len(values) != graph.num_arcs:
            raise ValueError(
                f"expected {graph.num_arcs} arc values, got {len(values)}")
        self.graph = graph
        self.values = list(values)

    @classmethod
    def from_arc_values(cls, graph: Graph,
                        per_arc: dict[int, Quaternion]) -> "CoinMap":
        """Per-arc values by index into the arc order; unspecified arcs are 0."""
        values = [Quaternion.ZERO] * graph.num_arcs
        for idx, q in per_arc.items():
            if not (0 <= idx < graph.num_arcs):
                raise ValueError(f"arc index {idx} out of range")
            values[idx] = q
        return cls(graph, values)

    @classmethod
    def from_vertex_values(cls, graph: Graph,
                           per_vertex: dict[int, Quaternion]) -> "CoinMap":
        """q(e) = value at o(e); unspecified vertices get 0."""
        values = [per_vertex.get(arc.origin, Quaternion.ZERO)
                  for arc in graph.arcs]
        return cls(graph, values)

    @classmethod
    def from_alpha(cls, graph: Graph, alpha: Quaternion) -> "CoinMap":
        """q(e) = alpha / d_{o(e)} (real divisor, so side of division is moot)."""
        values = [alpha / graph.degree(arc.origin) for arc in graph.arcs]
        return cls(graph, values)

    @classmethod
    def grover(cls, graph: Graph) -> "CoinMap":
        return cls.from_alpha(graph, Quaternion(2.0))

    def __getitem__(self, arc_index: int) -> Quaternion:
        return self.values[arc_index]

    def is_complex_valued(self, atol: float = 1e-12) -> bool:
        return all(q.is_complex(atol) for q in self.values)


WeightMap = CoinMap


def parse_coin_file(text: str, graph: Graph) -> CoinMap:
    """Parse a coin/weight file.

    Lines are ``v <vertex> <literal>`` (per-vertex) or ``a <arc-index>
    <literal>`` (per-arc); ``#`` starts a comment.  Mixing the two kinds in
    one file is an error.  Unspecified arcs default to 0.
    """
    kind: str | None = None
    per: dict[int, Quaternion] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != 3 or fields[0] not in ("v", "a"):
            raise CoinFormatError(
                f"expected 'v <vertex> <value>' or 'a <arc> <value>', "
                f"got {line!r}", line=lineno)
        if kind is None:
            kind = fields[0]
        elif fields[0] != kind:
            raise CoinFormatError(
                "mixing per-vertex and per-arc lines in one file", line=lineno)
        try:
            idx = int(fields[1])
        except ValueError:
            raise CoinFormatError(
                f"bad index {fields[1]!r}", line=lineno) from None
        limit = graph.n if kind == "v" else graph.num_arcs
        if not (0 <= idx < limit):
            raise CoinFormatError(f"index {idx} out of range", line=lineno)
        try:
            per[idx] = parse_quaternion(fields[2])
        except QuaternionFormatError as exc:
            raise CoinFormatError(str(exc), line=lineno) from None
    if kind is None:
        raise CoinFormatError("empty coin file")
    if kind == "v":
        return CoinMap.from_vertex_values(graph, per)
    return CoinMap.from_arc_values(graph, per)


# -- transition matrices ----------------------------------------------

def build_U(graph: Graph, coin: CoinMap) -> QuatMatrix:
    """The 2m x 2m quaternionic transition matrix.

    U_{ef} = q(e) when t(f) = o(e) and f != e^-1, q(e) - 1 on the
    backtracking pair f = e^-1, and 0 otherwise.
    """
    rows = []
    for e in graph.arcs:
        q = coin[e.index]
        row = [Quaternion.ZERO] * graph.num_arcs
        for f in graph.arcs:
            if f.terminal != e.origin:
                continue
            if f.index == e.inverse_index:
                row[f.index] = q - Quaternion.ONE
            else:
                row[f.index] = q
        rows.append(row)
    return QuatMatrix.from_entries(rows)


def grover_matrix(graph: Graph) -> QuatMatrix:
    """Transition matrix of the Grover walk: the coin q(e) = 2/d_{o(e)}."""
    return build_U(graph, CoinMap.grover(graph))


def unitarity_condition(graph: Graph, coin: CoinMap,
                        tol: float = 1e-9) -> bool:
    """Necessary and sufficient condition for U to be quaternionic unitary.

    Per arc: q0^2 + q1^2 + q2^2 + q3^2 - 2*q0/d_{o(e)} = 0, and the coin is
    constant across arcs sharing an origin.
    """
    for e in graph.arcs:
        q = coin[e.index]
        residual = q.norm_sq() - 2.0 * q.x0 / graph.degree(e.origin)
        if abs(residual) > tol:
            return False
    first_at: dict[int, Quaternion] = {}
    for e in graph.arcs:
        q = coin[e.index]
        prev = first_at.setdefault(e.origin, q)
        if not q.isclose(prev, atol=tol):
            return False
    return True


# -- zeta-function matrices -------------------------------------------

def build_B_and_J0(graph: Graph) -> tuple[QuatMatrix, QuatMatrix]:
    """B_{ef} = [t(e) = o(f)] and the arc-inversion permutation J0."""
    k = graph.num_arcs
    bs = np.zeros((k, k), dtype=complex)
    js = np.zeros((k, k), dtype=complex)
    for e in graph.arcs:
        for f in graph.arcs:
            if e.terminal == f.origin:
                bs[e.index, f.index] = 1.0
        js[e.index, e.inverse_index] = 1.0
    return QuatMatrix.from_complex(bs), QuatMatrix.from_complex(js)


def build_Bw(graph: Graph, weights: WeightMap) -> QuatMatrix:
    """(B_w)_{ef} = w(f) when t(e) = o(f); reduces to B at w == 1."""
    rows = []
    for e in graph.arcs:
        row = [weights[f.index] if e.terminal == f.origin else Quaternion.ZERO
               for f in graph.arcs]
        rows.append(row)
    return QuatMatrix.from_entries(rows)


def build_K_L(graph: Graph, weights: WeightMap) -> tuple[QuatMatrix, QuatMatrix]:
    """The 2m x n factor matrices with K_{ev} = w(e)[o(e) = v] and
    L_{ev} = [t(e) = v], satisfying B_w^T = K L^T and W^T = L^T K."""
    k_rows = []
    l_rows = []
    for e in graph.arcs:
        k_rows.append([weights[e.index] if e.origin == v else Quaternion.ZERO
                       for v in range(graph.n)])
        l_rows.append([Quaternion.ONE if e.terminal == v else Quaternion.ZERO
                       for v in range(graph.n)])
    return QuatMatrix.from_entries(k_rows), QuatMatrix.from_entries(l_rows)


def build_W_Dw(graph: Graph, weights: WeightMap) -> tuple[QuatMatrix, QuatMatrix]:
    """The n x n weighted matrix W (w(e) on each arc (u, v)) and the diagonal
    matrix D_w of outgoing-weight sums."""
    w_rows = [[Quaternion.ZERO] * graph.n for _ in range(graph.n)]
    diag = [Quaternion.ZERO] * graph.n
    for e in graph.arcs:
        w_rows[e.origin][e.terminal] = weights[e.index]
        diag[e.origin] = diag[e.origin] + weights[e.index]
    d_rows = [[diag[u] if u == v else Quaternion.ZERO for v in range(graph.n)]
              for u in range(graph.n)]
    return QuatMatrix.from_entries(w_rows), QuatMatrix.from_entries(d_rows)


def quat_cond_check(graph: Graph, coin: CoinMap,
                    tol: float = 1e-9) -> tuple[bool, Quaternion | None]:
    """Check that the outgoing coin sum is vertex-independent.

    Returns (True, alpha) with the common sum when it is, else (False, None).
    """
    sums = []
    for u in range(graph.n):
        total = Quaternion.ZERO
        for e in graph.arcs:
            if e.origin == u:
                total = total + coin[e.index]
        sums.append(total)
    alpha = sums[0]
    if all(s.isclose(alpha, atol=tol) for s in sums):
        return True, alpha
    return False, None
