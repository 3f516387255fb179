"""Degree-zero homology of shift groupoids and the embedding obstruction.

For a graph with adjacency matrix M the degree-zero homology of the
associated groupoid is the cokernel of Id - M^t acting on the free abelian
group on the vertices; the class of a cylinder C_w is the basis vector of
the terminal vertex of w.  An embedding of the derived full group of one
graph into the full group of another, with support exactly Z, exists if and
only if some homomorphism of these cokernels carries the class of the whole
space to the class of Z.  All arithmetic is exact.
"""

from functools import lru_cache

from .core import ClopenSet, IntegerMatrix
from .errors import InvalidArity


class SmithDecomposition:
    """U * M * V = diag(d_1, ..., d_r) with d_i >= 0, d_i | d_{i+1}, and
    U, V unimodular."""

    __slots__ = ("U", "V", "diag", "rows", "cols")

    def __init__(self, U, V, diag, rows, cols):
        self.U = U
        self.V = V
        self.diag = tuple(diag)
        self.rows = rows
        self.cols = cols

    def smith_matrix(self):
        s = [[0] * self.cols for _ in range(self.rows)]
        for i, d in enumerate(self.diag):
            s[i][i] = d
        return IntegerMatrix(s)


def smith_normal_form(M):
    """Exact Smith normal form by alternating row/column reduction.

    Returns a SmithDecomposition; pivots are chosen by minimal absolute
    value, and after each corner is cleared the divisibility chain is
    restored by folding any non-divisible entry into the pivot row."""
    m, n = M.rows, M.cols
    A = [list(row) for row in M.entries]
    U = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    V = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    def row_op(i, j, q):  # row_i -= q * row_j
        A[i] = [a - q * b for a, b in zip(A[i], A[j])]
        U[i] = [a - q * b for a, b in zip(U[i], U[j])]

    def col_op(i, j, q):  # col_i -= q * col_j
        for r in range(m):
            A[r][i] -= q * A[r][j]
        for r in range(n):
            V[r][i] -= q * V[r][j]

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for r in range(m):
            A[r][i], A[r][j] = A[r][j], A[r][i]
        for r in range(n):
            V[r][i], V[r][j] = V[r][j], V[r][i]

    def negate_row(i):
        A[i] = [-a for a in A[i]]
        U[i] = [-a for a in U[i]]

    t = 0
    while t < min(m, n):
        # pivot: smallest nonzero absolute value in the trailing block
        piv = None
        for i in range(t, m):
            for j in range(t, n):
                if A[i][j] != 0 and (piv is None or abs(A[i][j]) < abs(A[piv[0]][piv[1]])):
                    piv = (i, j)
        if piv is None:
            break
        swap_rows(t, piv[0])
        swap_cols(t, piv[1])
        while True:
            # clear column t
            dirty = False
            for i in range(m):
                if i != t and A[i][t] != 0:
                    q = A[i][t] // A[t][t]
                    row_op(i, t, q)
                    if A[i][t] != 0:
                        swap_rows(i, t)
                        dirty = True
            if dirty:
                continue
            # clear row t
            for j in range(n):
                if j != t and A[t][j] != 0:
                    q = A[t][j] // A[t][t]
                    col_op(j, t, q)
                    if A[t][j] != 0:
                        swap_cols(j, t)
                        dirty = True
            if dirty:
                continue
            # divisibility: fold a bad entry into row t and redo
            bad = None
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if A[i][j] % A[t][t] != 0:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            row_op(t, bad, -1)
        if A[t][t] < 0:
            negate_row(t)
        t += 1
    diag = [A[i][i] for i in range(min(m, n))]
    return SmithDecomposition(IntegerMatrix(U), IntegerMatrix(V), diag, m, n)


def det(M):
    """Exact determinant (fraction-free Bareiss elimination)."""
    if M.rows != M.cols:
        raise ValueError("not square")
    n = M.rows
    if n == 0:
        return 1
    a = [list(r) for r in M.entries]
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
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def solve_integer_linear(M, c):
    """One integer solution x of M x = c, or None if there is none."""
    sd = smith_normal_form(M)
    uc = [sum(sd.U.entries[i][k] * c[k] for k in range(M.rows)) for i in range(M.rows)]
    z = [0] * M.cols
    for i in range(M.rows):
        d = sd.diag[i] if i < len(sd.diag) else 0
        if d == 0:
            if uc[i] != 0:
                return None
        else:
            if uc[i] % d != 0:
                return None
            if i < M.cols:
                z[i] = uc[i] // d
    return [
        sum(sd.V.entries[i][k] * z[k] for k in range(M.cols)) for i in range(M.cols)
    ]


class AbelianGroupPresentation:
    """A finitely generated abelian group in normal form.

    factors lists one integer per generator: d >= 2 for a torsion factor
    Z/d (ordered along the divisibility chain), 0 for a free factor Z.
    Graph-derived presentations also carry the unimodular change of basis
    from the vertex lattice to these coordinates."""

    __slots__ = ("factors", "_U", "_snf_diag", "_nvars")

    def __init__(self, factors, U=None, snf_diag=None, nvars=None):
        self.factors = tuple(int(d) for d in factors)
        self._U = U
        self._snf_diag = snf_diag
        self._nvars = nvars

    @classmethod
    def from_invariants(cls, rank, torsion):
        return cls(tuple(torsion) + (0,) * rank)

    @classmethod
    def from_relation_matrix(cls, M):
        """The cokernel Z^rows / im(M), reduced via Smith normal form."""
        sd = smith_normal_form(M)
        diag = list(sd.diag) + [0] * (M.rows - len(sd.diag))
        factors = tuple(d for d in diag if d != 1)
        return cls(factors, U=sd.U, snf_diag=tuple(diag), nvars=M.rows)

    @property
    def rank(self):
        return sum(1 for d in self.factors if d == 0)

    @property
    def torsion(self):
        return tuple(d for d in self.factors if d != 0)

    def order(self):
        if self.rank:
            return None
        out = 1
        for d in self.torsion:
            out *= d
        return out

    def __eq__(self, other):
        return (
            isinstance(other, AbelianGroupPresentation)
            and self.factors == other.factors
        )

    def __hash__(self):
        return hash(self.factors)

    def __repr__(self):
        parts = ["Z/%d" % d for d in self.torsion] + ["Z"] * self.rank
        return " + ".join(parts) if parts else "0"

    def reduce(self, coords):
        """Reduce raw coordinates to the canonical representative."""
        coords = tuple(int(c) for c in coords)
        if len(coords) != len(self.factors):
            raise ValueError("coordinate length mismatch")
        return H0Class(
            self, tuple(c % d if d else c for c, d in zip(coords, self.factors))
        )

    def zero(self):
        return self.reduce((0,) * len(self.factors))

    def add(self, a, b):
        return self.reduce(tuple(x + y for x, y in zip(a.coords, b.coords)))

    def neg(self, a):
        return self.reduce(tuple(-x for x in a.coords))

    def scale(self, k, a):
        return self.reduce(tuple(k * x for x in a.coords))

    def elements(self):
        """All elements (finite groups only)."""
        if self.rank:
            raise ValueError("infinite group")
        from itertools import product

        for tup in product(*(range(d) for d in self.factors)):
            yield self.reduce(tup)

    def class_of_vector(self, vec):
        """Class of an integer vector in the ambient lattice of a
        graph-derived presentation."""
        if self._U is None:
            raise ValueError("presentation has no ambient lattice")
        c = [
            sum(self._U.entries[i][k] * vec[k] for k in range(self._nvars))
            for i in range(self._nvars)
        ]
        coords = tuple(ci for ci, d in zip(c, self._snf_diag) if d != 1)
        return self.reduce(coords)


class H0Class:
    """An element of an AbelianGroupPresentation in reduced coordinates."""

    __slots__ = ("group", "coords")

    def __init__(self, group, coords):
        self.group = group
        self.coords = tuple(coords)

    def __eq__(self, other):
        return (
            isinstance(other, H0Class)
            and self.group == other.group
            and self.coords == other.coords
        )

    def __hash__(self):
        return hash((self.group.factors, self.coords))

    def __repr__(self):
        return "H0Class%r" % (self.coords,)

    def is_zero(self):
        return all(c == 0 for c in self.coords)


@lru_cache(maxsize=None)
def h0_group(graph):
    """H_0 of the groupoid of the graph: coker(Id - M^t) over the vertices."""
    M = graph.adjacency_matrix()
    K = IntegerMatrix.identity(M.rows).sub(M.transpose())
    return AbelianGroupPresentation.from_relation_matrix(K)


def h0_class(graph, clopen):
    """Class of a clopen set: the sum of the terminal-vertex basis vectors
    over its antichain."""
    group = h0_group(graph)
    idx = {v: i for i, v in enumerate(graph.vertices)}
    vec = [0] * len(graph.vertices)
    for p in clopen.paths:
        vec[idx[p.terminal]] += 1
    return group.class_of_vector(vec)


@lru_cache(maxsize=4096)
def _hom_system(a_factors, a_coords, b_factors):
    """SNF factorization of the linear system deciding whether some
    homomorphism sends the distinguished element to a prescribed target.

    Unknowns: an image y_i in Z^m per source generator, plus relation
    multipliers.  Rows: d_i * y_i = 0 in the target for every torsion
    generator, and sum a_i * y_i = b.  The right-hand side only enters
    through b, so the factorization is shared across targets."""
    n = len(a_factors)
    m = len(b_factors)
    torsion_idx = [i for i, d in enumerate(a_factors) if d != 0]
    tA = len(torsion_idx)
    ncols = m * n + m * tA + m
    nrows = m * tA + m
    if nrows == 0:
        return None, n, m, nrows, ncols
    rows = []
    for ti, i in enumerate(torsion_idx):
        for r in range(m):
            row = [0] * ncols
            row[m * i + r] = a_factors[i]
            if b_factors[r] != 0:
                row[m * n + m * ti + r] = -b_factors[r]
            rows.append(row)
    for r in range(m):
        row = [0] * ncols
        for i in range(n):
            row[m * i + r] = a_coords[i]
        if b_factors[r] != 0:
            row[m * n + m * tA + r] = -b_factors[r]
        rows.append(row)
    return smith_normal_form(IntegerMatrix(rows)), n, m, nrows, ncols


def hom_exists(A, a, B, b):
    """Decide whether a homomorphism A -> B maps a to b; on success also
    return a witness (the images of A's generators, reduced in B)."""
    sd, n, m, nrows, ncols = _hom_system(A.factors, a.coords, B.factors)
    if nrows == 0:
        # trivial target: everything maps to zero
        return (True, [B.zero()] * n)
    c = [0] * (nrows - m) + list(b.coords)
    uc = [sum(sd.U.entries[i][k] * c[k] for k in range(nrows)) for i in range(nrows)]
    z = [0] * ncols
    for i in range(nrows):
        d = sd.diag[i] if i < len(sd.diag) else 0
        if d == 0:
            if uc[i] != 0:
                return (False, None)
        else:
            if uc[i] % d != 0:
                return (False, None)
            if i < ncols:
                z[i] = uc[i] // d
    x = [sum(sd.V.entries[i][k] * z[k] for k in range(ncols)) for i in range(ncols)]
    witness = [B.reduce(tuple(x[m * i + r] for r in range(m))) for i in range(n)]
    return (True, witness)


def embedding_support_obstruction(src_graph, dst_graph, support):
    """Whether an embedding of the derived full group of the source into the
    full group of the target with support exactly `support` exists: some
    homomorphism of H_0 groups must take the whole-space class to the
    support's class."""
    A = h0_group(src_graph)
    a = h0_class(src_graph, ClopenSet.whole(src_graph))
    B = h0_group(dst_graph)
    b = h0_class(dst_graph, support)
    return hom_exists(A, a, B, b)


def thompson_divisibility(n, m):
    """Fast path for full-shift graphs: a fixed-point-free embedding of the
    degree-n group into the degree-m group exists iff m-1 divides n-1."""
    if n < 2 or m < 2:
        raise InvalidArity("full shift graphs need degree >= 2")
    return (n - 1) % (m - 1) == 0
