"""Simple graphs, Seidel matrices and vertex switching.

A graph here is always simple (undirected, loopless, no multi-edges) with
vertices 0..n-1.  Adjacency is stored as the upper-triangle bits of the
adjacency matrix packed into one Python int, which keeps every graph
hashable and cheap to copy; per-vertex neighbour bitmasks are kept
alongside for fast set arithmetic.

The Seidel matrix of a graph is S = J - I - 2A: entries are -1 for
adjacent pairs, +1 for distinct non-adjacent pairs, 0 on the diagonal.
Switching on a vertex subset t complements exactly the edges with one
endpoint in t, which is the same as conjugating S by the +-1 diagonal
matrix that is -1 on t.

Human-facing formats and the CLI use 1-based vertex labels; everything in
this module is 0-based.
"""

from functools import reduce

import numpy as np

__all__ = [
    "Graph",
    "SeidelMatrix",
    "graph_from_edges",
    "seidel_matrix",
    "graph_of_seidel",
    "switch",
    "induced",
    "complement",
    "empty_graph",
    "complete_graph",
    "cycle_graph",
    "path_graph",
    "paley_conference_seidel",
    "named_figure",
    "NAMED_FIGURES",
    "pair_index",
]


def pair_index(n, i, j):
    """Row-major upper-triangle bit position of the pair i < j."""
    if i > j:
        i, j = j, i
    return i * (2 * n - i - 1) // 2 + (j - i - 1)


def _mask_of(vertices):
    return reduce(lambda m, v: m | (1 << v), vertices, 0)


class Graph:
    """Immutable simple graph on vertices 0..n-1."""

    __slots__ = ("n", "bits", "masks")

    def __init__(self, n, bits=0):
        if n < 1:
            raise ValueError("graph needs at least one vertex")
        nbits = n * (n - 1) // 2
        if not 0 <= bits < (1 << nbits):
            raise ValueError("adjacency bits out of range for n=%d" % n)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "bits", bits)
        masks = [0] * n
        k = 0
        for i in range(n - 1):
            for j in range(i + 1, n):
                if bits >> k & 1:
                    masks[i] |= 1 << j
                    masks[j] |= 1 << i
                k += 1
        object.__setattr__(self, "masks", tuple(masks))

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, Graph) and self.n == other.n and self.bits == other.bits
        )

    def __hash__(self):
        return hash((self.n, self.bits))

    def __repr__(self):
        return "Graph(n=%d, edges=%r)" % (self.n, sorted(self.edges()))

    # -- basic queries ----------------------------------------------------

    def has_edge(self, i, j):
        if i == j:
            return False
        return bool(self.masks[i] >> j & 1)

    def edges(self):
        """Edge list as 0-based (i, j) pairs with i < j."""
        out = []
        for i in range(self.n - 1):
            m = self.masks[i] >> (i + 1)
            j = i + 1
            while m:
                if m & 1:
                    out.append((i, j))
                m >>= 1
                j += 1
        return out

    def num_edges(self):
        return self.bits.bit_count()

    def degree(self, v):
        return self.masks[v].bit_count()

    def degrees(self):
        return tuple(m.bit_count() for m in self.masks)

    def neighbors(self, v):
        m = self.masks[v]
        return frozenset(i for i in range(self.n) if m >> i & 1)

    # -- constructions ----------------------------------------------------

    def switch(self, subset):
        """Complement every edge with exactly one endpoint in ``subset``."""
        t = _mask_of(subset)
        if t >> self.n:
            raise ValueError("switching set contains out-of-range vertex")
        bits = self.bits
        k = 0
        for i in range(self.n - 1):
            ti = t >> i & 1
            for j in range(i + 1, self.n):
                if ti ^ (t >> j & 1):
                    bits ^= 1 << k
                k += 1
        return Graph(self.n, bits)

    def induced(self, subset):
        """Induced subgraph, vertices relabelled 0..m-1 preserving order."""
        vs = sorted(set(subset))
        if not vs:
            raise ValueError("induced subgraph needs a nonempty vertex set")
        if vs[0] < 0 or vs[-1] >= self.n:
            raise ValueError("subset contains out-of-range vertex")
        m = len(vs)
        bits = 0
        for a in range(m - 1):
            for b in range(a + 1, m):
                if self.has_edge(vs[a], vs[b]):
                    bits |= 1 << pair_index(m, a, b)
        return Graph(m, bits)

    def complement(self):
        nbits = self.n * (self.n - 1) // 2
        return Graph(self.n, self.bits ^ ((1 << nbits) - 1))

    def seidel(self):
        return SeidelMatrix.from_graph(self)

    def adjacency(self):
        """Dense 0/1 adjacency matrix."""
        a = np.zeros((self.n, self.n), dtype=np.int64)
        for i, j in self.edges():
            a[i, j] = a[j, i] = 1
        return a


class SeidelMatrix:
    """Symmetric matrix with 0 diagonal and +-1 off-diagonal entries."""

    __slots__ = ("n", "entries")

    def __init__(self, entries):
        a = np.asarray(entries, dtype=np.int64)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ValueError("Seidel matrix must be square")
        n = a.shape[0]
        if np.any(np.diag(a) != 0):
            raise ValueError("Seidel matrix must have a zero diagonal")
        off = a[~np.eye(n, dtype=bool)]
        if n > 1 and np.any(np.abs(off) != 1):
            raise ValueError("off-diagonal Seidel entries must be +-1")
        if np.any(a != a.T):
            raise ValueError("Seidel matrix must be symmetric")
        a = a.copy()
        a.setflags(write=False)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "entries", a)

    def __setattr__(self, name, value):
        raise AttributeError("SeidelMatrix is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, SeidelMatrix)
            and self.n == other.n
            and bool(np.array_equal(self.entries, other.entries))
        )

    def __repr__(self):
        return "SeidelMatrix(n=%d)" % self.n

    @classmethod
    def from_graph(cls, g):
        n = g.n
        a = np.ones((n, n), dtype=np.int64) - np.eye(n, dtype=np.int64)
        for i, j in g.edges():
            a[i, j] = a[j, i] = -1
        return cls(a)

    def to_graph(self):
        n = self.n
        bits = 0
        for i in range(n - 1):
            for j in range(i + 1, n):
                if self.entries[i, j] == -1:
                    bits |= 1 << pair_index(n, i, j)
        return Graph(n, bits)


# -- functional aliases ------------------------------------------------------


def graph_from_edges(n, edges):
    """Build a graph from 0-based edge pairs; duplicate edges collapse."""
    if n < 1:
        raise ValueError("graph needs at least one vertex")
    bits = 0
    for u, v in edges:
        if u == v:
            raise ValueError("loop edge (%d, %d) is not allowed" % (u, v))
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError("edge (%d, %d) out of range for n=%d" % (u, v, n))
        bits |= 1 << pair_index(n, u, v)
    return Graph(n, bits)


def seidel_matrix(g):
    return SeidelMatrix.from_graph(g)


def graph_of_seidel(s):
    return s.to_graph()


def switch(g, subset):
    return g.switch(subset)


def induced(g, subset):
    return g.induced(subset)


def complement(g):
    return g.complement()


# -- standard families -----------------------------------------------------


def empty_graph(n):
    return Graph(n, 0)


def complete_graph(n):
    return empty_graph(n).complement()


def cycle_graph(n):
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return graph_from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n):
    return graph_from_edges(n, [(i, i + 1) for i in range(n - 1)])


# -- Paley conference matrices ----------------------------------------------

# Fixed quadratic extensions so the output is bit-reproducible:
# GF(9) = GF(3)[w]/(w^2 + 1) and GF(25) = GF(5)[w]/(w^2 - 2).
_EXTENSION_NONRESIDUE = {3: -1, 5: 2}
_SUPPORTED_Q = (5, 9, 13, 17, 25, 29)


def _field_elements(q):
    """Elements of GF(q) plus a subtraction and multiplication.

    Prime fields are integers mod p.  For q = p^2 the elements are pairs
    (a, b) meaning a + b*w, enumerated in lexicographic (a, b) order.
    """
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if q == p:

            def sub(x, y, p=p):
                return (x - y) % p

            def mul(x, y, p=p):
                return (x * y) % p

            return list(range(p)), sub, mul
        if q == p * p:
            r = _EXTENSION_NONRESIDUE.get(p)
            if r is None:
                break

            def sub(x, y, p=p):
                return ((x[0] - y[0]) % p, (x[1] - y[1]) % p)

            def mul(x, y, p=p, r=r):
                return (
                    (x[0] * y[0] + x[1] * y[1] * r) % p,
                    (x[0] * y[1] + x[1] * y[0]) % p,
                )

            return [(a, b) for a in range(p) for b in range(p)], sub, mul
    raise ValueError("unsupported field order q=%d" % q)


def paley_conference_seidel(q):
    """Symmetric conference matrix of order q+1 in bordered form.

    Row and column 0 are all +1 off the diagonal; the core block is
    Q[a][b] = chi(a - b) with chi the quadratic character of GF(q).
    Requires q ≡ 1 (mod 4) so the character is even and the matrix
    symmetric.  Satisfies S @ S.T == q * I exactly.
    """
    if q not in _SUPPORTED_Q:
        raise ValueError(
            "q must be one of %s (odd prime powers ≡ 1 mod 4)" % (_SUPPORTED_Q,)
        )
    if q % 4 != 1:
        raise ValueError("q ≡ 1 (mod 4) required for a symmetric matrix")
    elems, sub, mul = _field_elements(q)
    zero = elems[0]
    squares = {mul(e, e) for e in elems if e != zero}
    n = q + 1
    s = np.ones((n, n), dtype=np.int64)
    np.fill_diagonal(s, 0)
    for a in range(q):
        for b in range(q):
            if a == b:
                continue
            d = sub(elems[a], elems[b])
            s[a + 1, b + 1] = 1 if d in squares else -1
    return SeidelMatrix(s)


# -- named example graphs ----------------------------------------------------

# Small graphs used throughout the test corpus, given as (n, 1-based edges).
NAMED_FIGURES = {
    # the four 3-vertex graphs
    "x1_3": (3, ()),
    "x2_3": (3, ((1, 2), (1, 3))),
    "x3_3": (3, ((1, 2),)),
    "x4_3": (3, ((1, 2), (1, 3), (2, 3))),
    # the 6-vertex pair with matching infinity-norm profiles
    "x1_6": (6, ((1, 2), (1, 3), (2, 4), (3, 4))),
    "x2_6": (6, ((1, 2), (1, 3), (2, 4), (4, 5))),
    # the cospectral, non-equivalent triple on 8 vertices
    "y1": (8, ((1, 2), (1, 4), (1, 6), (2, 3), (2, 4), (4, 5), (6, 7), (6, 8))),
    "y2": (8, ((1, 2), (1, 4), (1, 8), (2, 4), (4, 5), (5, 6), (6, 7), (6, 8))),
    "y3": (8, ((1, 2), (1, 5), (1, 7), (3, 4), (5, 6), (5, 7), (7, 8))),
    # the five nontrivial 5-vertex class representatives
    "x1_5": (5, ((1, 2),)),
    "x2_5": (5, ((1, 2), (2, 3))),
    "x3_5": (5, ((1, 2), (3, 4))),
    "x4_5": (5, ((1, 2), (2, 3), (3, 4))),
    "x5_5": (5, ((1, 2), (2, 3), (3, 1))),
}


def named_figure(name):
    key = name.strip().lower().replace("-", "_")
    if key not in NAMED_FIGURES:
        raise KeyError(
            "unknown figure %r (have: %s)" % (name, ", ".join(sorted(NAMED_FIGURES)))
        )
    n, edges = NAMED_FIGURES[key]
    return graph_from_edges(n, [(u - 1, v - 1) for u, v in edges])
