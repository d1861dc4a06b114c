"""Plumbing trees, the associated symmetric matrix, and exact linear algebra.

All determinants are computed fraction-free (Bareiss) over Python ints;
inverses and linear solves use Fraction Gaussian elimination.  Graph sizes
here are tiny (s <= ~50), so clarity wins over asymptotics.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product


class PlumbingError(ValueError):
    """Structural problem with a plumbing graph or matrix."""


@dataclass(frozen=True)
class PlumbingGraph:
    """Weighted tree; vertex order is part of the value (it fixes indexing)."""

    weights: tuple
    edges: tuple  # unordered index pairs, stored sorted

    def __init__(self, weights, edges):
        object.__setattr__(self, "weights", tuple(int(w) for w in weights))
        norm = []
        for i, j in edges:
            i, j = int(i), int(j)
            if i == j:
                raise PlumbingError("self-loop in plumbing graph")
            norm.append((min(i, j), max(i, j)))
        object.__setattr__(self, "edges", tuple(norm))
        self._validate_tree()

    def _validate_tree(self):
        s = len(self.weights)
        if s == 0:
            raise PlumbingError("empty plumbing graph")
        if len(set(self.edges)) != len(self.edges):
            raise PlumbingError("duplicate edge")
        for i, j in self.edges:
            if not (0 <= i < s and 0 <= j < s):
                raise PlumbingError("edge index out of range")
        if len(self.edges) != s - 1:
            raise PlumbingError("not a tree: |edges| != s - 1")
        # connectivity
        seen = {0}
        frontier = [0]
        adj = self.adjacency()
        while frontier:
            v = frontier.pop()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    frontier.append(w)
        if len(seen) != s:
            raise PlumbingError("not a tree: disconnected")

    @property
    def size(self) -> int:
        return len(self.weights)

    def adjacency(self) -> list:
        adj = [[] for _ in self.weights]
        for i, j in self.edges:
            adj[i].append(j)
            adj[j].append(i)
        return adj

    def degrees(self) -> list:
        deg = [0] * self.size
        for i, j in self.edges:
            deg[i] += 1
            deg[j] += 1
        return deg

    def matrix(self) -> list:
        """The symmetric plumbing matrix as a list of int rows."""
        s = self.size
        m = [[0] * s for _ in range(s)]
        for i, w in enumerate(self.weights):
            m[i][i] = w
        for i, j in self.edges:
            m[i][j] = 1
            m[j][i] = 1
        return m

    def to_json_dict(self) -> dict:
        return {
            "vertices": [{"id": i, "weight": w} for i, w in enumerate(self.weights)],
            "edges": [list(e) for e in self.edges],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "PlumbingGraph":
        try:
            verts = data["vertices"]
            edges = data["edges"]
        except (KeyError, TypeError) as exc:
            raise PlumbingError("plumbing JSON needs 'vertices' and 'edges'") from exc
        ids = [v["id"] for v in verts]
        if sorted(ids) != list(range(len(verts))):
            raise PlumbingError("vertex ids must be 0..s-1")
        weights = [0] * len(verts)
        for v in verts:
            weights[v["id"]] = v["weight"]
        return cls(weights, [tuple(e) for e in edges])

    @classmethod
    def from_json_file(cls, path) -> "PlumbingGraph":
        with open(path) as fh:
            return cls.from_json_dict(json.load(fh))


# -- exact linear algebra ---------------------------------------------------


def det_int(matrix: list) -> int:
    """Exact determinant of an integer matrix (fraction-free Bareiss)."""
    n = len(matrix)
    if n == 0:
        return 1
    a = [list(map(int, row)) for row in matrix]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def solve_fraction(matrix: list, rhs: list) -> list:
    """Solve M x = rhs exactly; raises PlumbingError if singular."""
    n = len(matrix)
    a = [[Fraction(v) for v in row] + [Fraction(rhs[i])] for i, row in enumerate(matrix)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            raise PlumbingError("singular matrix")
        a[col], a[piv] = a[piv], a[col]
        pv = a[col][col]
        a[col] = [v / pv for v in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [a[r][n] for r in range(n)]


def inverse_fraction(matrix: list) -> list:
    """Exact inverse as Fraction rows; raises PlumbingError if singular."""
    n = len(matrix)
    a = [[Fraction(v) for v in row] for row in matrix]
    inv = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            raise PlumbingError("singular matrix")
        a[col], a[piv] = a[piv], a[col]
        inv[col], inv[piv] = inv[piv], inv[col]
        pv = a[col][col]
        a[col] = [v / pv for v in a[col]]
        inv[col] = [v / pv for v in inv[col]]
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
                inv[r] = [x - f * y for x, y in zip(inv[r], inv[col])]
    return inv


def det_and_inverse(matrix: list) -> tuple:
    """Exact (det, inverse) of an integer matrix; error when singular."""
    d = det_int(matrix)
    if d == 0:
        raise PlumbingError("singular matrix")
    return d, inverse_fraction(matrix)


def is_negative_definite(matrix: list) -> bool:
    """Sign-alternation test on leading principal minors, exactly."""
    n = len(matrix)
    for k in range(1, n + 1):
        minor = [row[:k] for row in matrix[:k]]
        d = det_int(minor)
        if d == 0 or (d > 0) != (k % 2 == 0):
            return False
    return True


def vertex_deleted_h(matrix: list, i: int) -> int:
    """|det| of the matrix with row and column i removed (|H_1| of the rest)."""
    idx = [j for j in range(len(matrix)) if j != i]
    sub = [[matrix[r][c] for c in idx] for r in idx]
    return abs(det_int(sub))


# -- Smith normal form and spin^c enumeration -------------------------------


def smith_normal_form(matrix: list) -> tuple:
    """Return (D, U, V) with U*M*V = D diagonal, U and V unimodular."""
    a = [list(map(int, row)) for row in matrix]
    n = len(a)
    m = len(a[0]) if n else 0
    u = [[int(i == j) for j in range(n)] for i in range(n)]
    v = [[int(i == j) for j in range(m)] for i in range(m)]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, f):
        a[dst] = [x + f * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + f * y for x, y in zip(u[dst], u[src])]

    def add_col(src, dst, f):
        for row in a:
            row[dst] += f * row[src]
        for row in v:
            row[dst] += f * row[src]

    t = 0
    while t < min(n, m):
        # find a nonzero pivot
        piv = None
        for i in range(t, n):
            for j in range(t, m):
                if a[i][j] != 0:
                    piv = (i, j)
                    break
            if piv:
                break
        if piv is None:
            break
        swap_rows(t, piv[0])
        swap_cols(t, piv[1])
        while True:
            # clear column t
            done = True
            for i in range(t + 1, n):
                if a[i][t] != 0:
                    q = a[i][t] // a[t][t]
                    add_row(t, i, -q)
                    if a[i][t] != 0:
                        swap_rows(t, i)
                        done = False
            for j in range(t + 1, m):
                if a[t][j] != 0:
                    q = a[t][j] // a[t][t]
                    add_col(t, j, -q)
                    if a[t][j] != 0:
                        swap_cols(t, j)
                        done = False
            if done:
                break
        t += 1
    d = [[a[i][j] for j in range(m)] for i in range(n)]
    return d, u, v


def spinc_representatives(graph_or_matrix) -> list:
    """All |det M| spin^c representatives k in m + 2Z^s, pairwise inequivalent
    modulo 2*M*Z^s.

    Uses a Smith decomposition of M: the classes of Z^s / M Z^s are U^{-1} r
    for r ranging over the diagonal residue box, and k = m + 2*v.
    """
    if isinstance(graph_or_matrix, PlumbingGraph):
        matrix = graph_or_matrix.matrix()
        m_vec = list(graph_or_matrix.weights)
    else:
        matrix = graph_or_matrix
        m_vec = [matrix[i][i] for i in range(len(matrix))]
    d = det_int(matrix)
    if d == 0:
        raise PlumbingError("singular plumbing matrix has no finite spin^c set")
    s = len(matrix)
    dd, u, _v = smith_normal_form(matrix)
    diag = [abs(dd[i][i]) for i in range(s)]
    uinv_frac = inverse_fraction(u)
    uinv = [[int(x) for x in row] for row in uinv_frac]
    reps = []
    for r in product(*(range(di) for di in diag)):
        v = [sum(uinv[i][j] * r[j] for j in range(s)) for i in range(s)]
        reps.append(tuple(m_vec[i] + 2 * v[i] for i in range(s)))
    assert len(reps) == abs(d)
    return reps


def spinc_equivalent(matrix: list, k1, k2) -> bool:
    """True iff 2*M*z = k1 - k2 has an integer solution z."""
    rhs = [a - b for a, b in zip(k1, k2)]
    if any(r % 2 for r in rhs):
        return False
    sol = solve_fraction(matrix, [Fraction(r, 2) for r in rhs])
    return all(x.denominator == 1 for x in sol)


# -- Neumann blow-down ------------------------------------------------------


def blow_down(graph: PlumbingGraph, i: int) -> PlumbingGraph:
    """Standard (-1) blow-down of vertex i (weight -1, degree <= 2): remove
    it, add 1 to each neighbour's weight, and join two neighbours by an edge.
    """
    if graph.weights[i] != -1:
        raise PlumbingError(f"vertex {i} has weight {graph.weights[i]}, need -1")
    neighbours = [v for e in graph.edges for v in e if i in e and v != i]
    if len(neighbours) > 2:
        raise PlumbingError(f"vertex {i} has degree {len(neighbours)} > 2")
    keep = [v for v in range(graph.size) if v != i]
    remap = {old: new for new, old in enumerate(keep)}
    weights = [graph.weights[v] + (1 if v in neighbours else 0) for v in keep]
    edges = [
        (remap[x], remap[y]) for x, y in graph.edges if i not in (x, y)
    ]
    if len(neighbours) == 2:
        edges.append((remap[neighbours[0]], remap[neighbours[1]]))
    return PlumbingGraph(weights, edges)


def blow_up_vertex(graph: PlumbingGraph, i: int) -> PlumbingGraph:
    """Inverse move: decrement weight of vertex i and attach a new -1 leaf."""
    weights = list(graph.weights)
    weights[i] -= 1
    weights.append(-1)
    edges = list(graph.edges) + [(i, len(weights) - 1)]
    return PlumbingGraph(weights, edges)


def blow_up_edge(graph: PlumbingGraph, edge: tuple) -> PlumbingGraph:
    """Inverse move on an edge: insert a -1 vertex, decrementing both ends."""
    e = (min(edge), max(edge))
    if e not in graph.edges:
        raise PlumbingError(f"no edge {edge}")
    weights = list(graph.weights)
    weights[e[0]] -= 1
    weights[e[1]] -= 1
    weights.append(-1)
    new = len(weights) - 1
    edges = [x for x in graph.edges if x != e] + [(e[0], new), (e[1], new)]
    return PlumbingGraph(weights, edges)
