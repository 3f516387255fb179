"""Directed graphs, finite paths, clopen sets and eventually periodic points.

The path space of a finite directed graph is the set of one-sided infinite
edge sequences.  Everything downstream (tables, sigma systems, homology,
metrics) works with three exact finite representations of subsets/points of
that space:

  * Path      -- a finite composable edge sequence (possibly empty, anchored
                 at a vertex); C_w denotes the cylinder of infinite paths
                 starting with w.
  * ClopenSet -- a normalized antichain of paths; the represented set is the
                 disjoint union of the cylinders.
  * Point     -- an eventually periodic infinite path, stored as a minimal
                 (preperiod, primitive cycle) pair.

All values are immutable; all operations are pure functions.
"""

from .errors import (
    DanglingEdge,
    EmptyCycle,
    IsCycle,
    MixedGraphs,
    NonComposable,
    NotIrreducible,
)


class DirectedGraph:
    """A finite directed multigraph with opaque string ids for edges."""

    __slots__ = ("vertices", "edges", "_edge_map", "_out", "_in")

    def __init__(self, vertices, edges):
        self.vertices = tuple(sorted(set(str(v) for v in vertices)))
        seen = {}
        for eid, origin, terminal in edges:
            eid = str(eid)
            if eid in seen:
                raise ValueError("duplicate edge id: %r" % eid)
            seen[eid] = (str(origin), str(terminal))
        self.edges = tuple(sorted((e, o, t) for e, (o, t) in seen.items()))
        self._edge_map = {e: (o, t) for e, o, t in self.edges}
        out = {v: [] for v in self.vertices}
        inc = {v: [] for v in self.vertices}
        for e, o, t in self.edges:
            if o in out:
                out[o].append(e)
            if t in inc:
                inc[t].append(e)
        self._out = {v: tuple(es) for v, es in out.items()}
        self._in = {v: tuple(es) for v, es in inc.items()}

    def __eq__(self, other):
        return (
            isinstance(other, DirectedGraph)
            and self.vertices == other.vertices
            and self.edges == other.edges
        )

    def __hash__(self):
        return hash((self.vertices, self.edges))

    def __repr__(self):
        return "DirectedGraph(|V|=%d, |E|=%d)" % (len(self.vertices), len(self.edges))

    def has_edge(self, eid):
        return eid in self._edge_map

    def origin(self, eid):
        return self._edge_map[eid][0]

    def terminal(self, eid):
        return self._edge_map[eid][1]

    def out_edges(self, vertex):
        return self._out.get(vertex, ())

    def in_edges(self, vertex):
        return self._in.get(vertex, ())

    def adjacency_matrix(self):
        """Counts m[x][y] of edges x -> y, rows/cols in sorted vertex order."""
        idx = {v: i for i, v in enumerate(self.vertices)}
        n = len(self.vertices)
        m = [[0] * n for _ in range(n)]
        for e, o, t in self.edges:
            m[idx[o]][idx[t]] += 1
        return IntegerMatrix(m)

    def paths_of_length(self, n, start=None):
        """All composable edge sequences with n edges (n=0: one empty path
        per vertex, or per `start`)."""
        starts = [start] if start is not None else list(self.vertices)
        if n == 0:
            for v in starts:
                yield Path(self, (), origin=v)
            return
        stack = [((e,), self.terminal(e)) for e, o, t in self.edges if o in starts]
        # iterative DFS, deterministic order
        stack.sort()
        while stack:
            seq, end = stack.pop(0)
            if len(seq) == n:
                yield Path(self, seq)
                continue
            for e in self.out_edges(end):
                stack.append((seq + (e,), self.terminal(e)))


class ValidatedGraph(DirectedGraph):
    """Marker type produced by validate_graph; same data, checked."""


def validate_graph(graph):
    """Check the standing assumptions: no dangling edges, irreducible
    (directed path between every ordered vertex pair), and not a single
    cycle (some vertex with out-degree >= 2)."""
    for e, o, t in graph.edges:
        if o not in graph._out or t not in graph._in:
            raise DanglingEdge("edge %r has endpoint outside the vertex set" % e)
    reach = _reachability(graph)
    for x in graph.vertices:
        for y in graph.vertices:
            if y not in reach[x]:
                raise NotIrreducible("no directed path from %r to %r" % (x, y))
    if all(len(graph.out_edges(v)) == 1 for v in graph.vertices):
        raise IsCycle("graph is a single cycle")
    return ValidatedGraph(graph.vertices, graph.edges)


def _reachability(graph):
    """reach[x] = vertices reachable from x by a path with >= 1 edge."""
    reach = {}
    for x in graph.vertices:
        seen = set()
        frontier = [graph.terminal(e) for e in graph.out_edges(x)]
        while frontier:
            v = frontier.pop()
            if v in seen:
                continue
            seen.add(v)
            frontier.extend(graph.terminal(e) for e in graph.out_edges(v))
        reach[x] = seen
    return reach


def full_shift_graph(d):
    """One vertex with d >= 2 loops labelled "0".."d-1" (path space = full
    d-shift)."""
    return validate_graph(
        DirectedGraph(["*"], [(str(i), "*", "*") for i in range(d)])
    )


def golden_mean_graph():
    """Two vertices a, b with edges a->a, a->b, b->a."""
    return validate_graph(
        DirectedGraph(["a", "b"], [("aa", "a", "a"), ("ab", "a", "b"), ("ba", "b", "a")])
    )


class Path:
    """A finite composable edge sequence; empty paths carry their vertex."""

    __slots__ = ("graph", "edges", "origin")

    def __init__(self, graph, edges, origin=None):
        edges = tuple(str(e) for e in edges)
        for e in edges:
            if not graph.has_edge(e):
                raise ValueError("unknown edge id: %r" % e)
        for a, b in zip(edges, edges[1:]):
            if graph.terminal(a) != graph.origin(b):
                raise NonComposable("edges %r, %r do not compose" % (a, b))
        if edges:
            o = graph.origin(edges[0])
            if origin is not None and str(origin) != o:
                raise NonComposable("declared origin %r does not match first edge" % origin)
            origin = o
        else:
            if origin is None:
                raise ValueError("empty path needs an explicit origin vertex")
            origin = str(origin)
            if origin not in graph.vertices:
                raise ValueError("unknown vertex: %r" % origin)
        self.graph = graph
        self.edges = edges
        self.origin = origin

    @property
    def terminal(self):
        if self.edges:
            return self.graph.terminal(self.edges[-1])
        return self.origin

    def __len__(self):
        return len(self.edges)

    def __eq__(self, other):
        return (
            isinstance(other, Path)
            and self.graph == other.graph
            and self.edges == other.edges
            and self.origin == other.origin
        )

    def __hash__(self):
        return hash((self.edges, self.origin))

    def __repr__(self):
        return "Path(%s)" % str(self)

    def __str__(self):
        if not self.edges:
            return "@" + self.origin
        return ",".join(self.edges)

    @property
    def key(self):
        """Global tie-break: (length, edge sequence, origin)."""
        return (len(self.edges), self.edges, self.origin)

    def is_prefix_of(self, other):
        """True iff C_other is contained in C_self."""
        return (
            self.origin == other.origin
            and len(self.edges) <= len(other.edges)
            and other.edges[: len(self.edges)] == self.edges
        )

    def related(self, other):
        """True iff the cylinders intersect (one path is a prefix of the other)."""
        return self.is_prefix_of(other) or other.is_prefix_of(self)

    def extend(self, eid):
        if self.graph.origin(eid) != self.terminal:
            raise NonComposable("edge %r does not start at %r" % (eid, self.terminal))
        return Path(self.graph, self.edges + (eid,))

    def concat(self, other):
        if self.graph != other.graph:
            raise MixedGraphs("paths over different graphs")
        if other.origin != self.terminal:
            raise NonComposable("paths do not compose")
        if not other.edges:
            return self
        if not self.edges:
            return other
        return Path(self.graph, self.edges + other.edges)

    def drop_last(self):
        if not self.edges:
            raise ValueError("empty path")
        return Path(self.graph, self.edges[:-1], origin=self.origin)

    def drop_first(self, k=1):
        if k > len(self.edges):
            raise ValueError("path too short")
        if len(self.edges) == k:
            return Path(self.graph, (), origin=self.terminal)
        return Path(self.graph, self.edges[k:])

    def children(self):
        """All one-edge extensions."""
        return tuple(self.extend(e) for e in self.graph.out_edges(self.terminal))


class ClopenSet:
    """A clopen subset of the path space, stored as the unique normalized
    antichain of cylinders: no path a prefix of another, and no complete
    sibling family left uncontracted."""

    __slots__ = ("graph", "paths")

    def __init__(self, graph, paths, _normalized=False):
        if not _normalized:
            paths = _normalize_paths(graph, paths)
        self.graph = graph
        self.paths = paths

    @classmethod
    def whole(cls, graph):
        return cls(graph, [Path(graph, (), origin=v) for v in graph.vertices])

    @classmethod
    def empty(cls, graph):
        return cls(graph, [])

    def is_empty(self):
        return not self.paths

    def is_whole(self):
        return self.equals(ClopenSet.whole(self.graph))

    def __eq__(self, other):
        return (
            isinstance(other, ClopenSet)
            and self.graph == other.graph
            and self.paths == other.paths
        )

    def __hash__(self):
        return hash(self.paths)

    def __repr__(self):
        return "ClopenSet{%s}" % ", ".join(str(p) for p in self.paths)

    def _check(self, other):
        if self.graph != other.graph:
            raise MixedGraphs("clopen sets over different graphs")

    def union(self, other):
        self._check(other)
        return ClopenSet(self.graph, self.paths + other.paths)

    def intersect(self, other):
        self._check(other)
        out = []
        for p in self.paths:
            for q in other.paths:
                if p.is_prefix_of(q):
                    out.append(q)
                elif q.is_prefix_of(p):
                    out.append(p)
        return ClopenSet(self.graph, out)

    def complement(self):
        depth = max((len(p) for p in self.paths), default=0)
        out = []
        for p in self.graph.paths_of_length(depth):
            if not any(q.is_prefix_of(p) for q in self.paths):
                out.append(p)
        return ClopenSet(self.graph, out)

    def equals(self, other):
        self._check(other)
        return self.paths == other.paths

    def is_subset(self, other):
        self._check(other)
        return self.intersect(other).equals(self)

    def contains_point(self, x):
        return point_in(self, x)


def clopen_normalize(graph, paths):
    """Normalize an arbitrary family of paths to the canonical antichain
    representing the union of their cylinders."""
    for p in paths:
        if p.graph != graph:
            raise MixedGraphs("path %s lives over a different graph" % p)
    return ClopenSet(graph, list(paths))


def _normalize_paths(graph, paths):
    current = set()
    for p in paths:
        if p.graph != graph:
            raise MixedGraphs("path %s lives over a different graph" % p)
        current.add(p)
    changed = True
    while changed:
        changed = False
        # absorption: drop any path with a proper prefix in the set
        snapshot = sorted(current, key=lambda q: q.key)
        for i, p in enumerate(snapshot):
            for q in snapshot[:i]:
                if q in current and q.is_prefix_of(p):
                    current.discard(p)
                    changed = True
                    break
        # contraction: a complete sibling family collapses to its parent
        by_parent = {}
        for p in current:
            if len(p) >= 1:
                by_parent.setdefault(p.drop_last(), set()).add(p.edges[-1])
        for parent, last_edges in by_parent.items():
            fam = set(graph.out_edges(parent.terminal))
            if fam and last_edges >= fam:
                for e in fam:
                    current.discard(parent.extend(e))
                current.add(parent)
                changed = True
    return tuple(sorted(current, key=lambda p: p.key))


class Point:
    """An eventually periodic one-sided infinite path, prefix . cycle^oo,
    normalized so the cycle is primitive and the prefix is as short as
    possible."""

    __slots__ = ("graph", "prefix", "cycle")

    def __init__(self, graph, prefix, cycle):
        if prefix.graph != graph or cycle.graph != graph:
            raise MixedGraphs("point components over different graphs")
        if len(cycle) == 0:
            raise EmptyCycle("cycle must be nonempty")
        if cycle.origin != cycle.terminal:
            raise NonComposable("cycle does not close up")
        if prefix.terminal != cycle.origin:
            raise NonComposable("prefix does not meet the cycle")
        pe, ce = list(prefix.edges), list(cycle.edges)
        # primitive cycle
        n = len(ce)
        for p in range(1, n + 1):
            if n % p == 0 and ce == ce[:p] * (n // p):
                ce = ce[:p]
                break
        # absorb trailing cycle copies (rotating the cycle as we go)
        while pe and pe[-1] == ce[-1]:
            pe.pop()
            ce = [ce[-1]] + ce[:-1]
        self.graph = graph
        if pe:
            self.prefix = Path(graph, pe)
        else:
            self.prefix = Path(graph, (), origin=graph.origin(ce[0]))
        self.cycle = Path(graph, ce)

    @property
    def origin(self):
        return self.prefix.origin

    def __eq__(self, other):
        return (
            isinstance(other, Point)
            and self.graph == other.graph
            and self.prefix == other.prefix
            and self.cycle == other.cycle
        )

    def __hash__(self):
        return hash((self.prefix, self.cycle))

    def __repr__(self):
        return "Point(%s)" % str(self)

    def __str__(self):
        return "%s(%s)" % (str(self.prefix) if self.prefix.edges else "", str(self.cycle))

    @property
    def key(self):
        return (self.prefix.key, self.cycle.key)

    def unroll(self, n):
        """The first n edge ids."""
        out = list(self.prefix.edges[:n])
        c = self.cycle.edges
        i = 0
        while len(out) < n:
            out.append(c[i % len(c)])
            i += 1
        return out

    def first_edge(self):
        return self.prefix.edges[0] if self.prefix.edges else self.cycle.edges[0]

    def drop(self, k=1):
        """Delete the first k edges (k-fold shift)."""
        pe = self.prefix.edges
        if k <= len(pe):
            if k == len(pe):
                newp = Path(self.graph, (), origin=self.prefix.terminal)
            else:
                newp = Path(self.graph, pe[k:])
            return Point(self.graph, newp, self.cycle)
        m = (k - len(pe)) % len(self.cycle)
        ce = self.cycle.edges
        rot = Path(self.graph, ce[m:] + ce[:m])
        return Point(self.graph, Path(self.graph, (), origin=rot.origin), rot)

    def prepend(self, path):
        """Prefix-extend by a finite path ending at this point's origin."""
        if path.terminal != self.origin:
            raise NonComposable("path does not end at the point's origin")
        return Point(self.graph, path.concat(self.prefix), self.cycle)


def point_normalize(graph, prefix, cycle):
    """Minimal normal form of the eventually periodic path prefix.cycle^oo."""
    return Point(graph, prefix, cycle)


def point_in(clopen, x):
    """True iff the point lies in the clopen set."""
    if clopen.graph != x.graph:
        raise MixedGraphs("point and clopen set over different graphs")
    for p in clopen.paths:
        if p.origin == x.origin and x.unroll(len(p)) == list(p.edges):
            return True
    return False


class IntegerMatrix:
    """A dense matrix of exact (arbitrary precision) integers."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries):
        entries = tuple(tuple(int(v) for v in row) for row in entries)
        if entries and any(len(r) != len(entries[0]) for r in entries):
            raise ValueError("ragged matrix")
        self.entries = entries
        self.rows = len(entries)
        self.cols = len(entries[0]) if entries else 0

    @classmethod
    def identity(cls, n):
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    def __eq__(self, other):
        return isinstance(other, IntegerMatrix) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return "IntegerMatrix(%r)" % (self.entries,)

    def transpose(self):
        return IntegerMatrix(
            [[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)]
        )

    def mul(self, other):
        if self.cols != other.rows:
            raise ValueError("dimension mismatch")
        out = [
            [
                sum(self.entries[i][k] * other.entries[k][j] for k in range(self.cols))
                for j in range(other.cols)
            ]
            for i in range(self.rows)
        ]
        return IntegerMatrix(out)

    def sub(self, other):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("dimension mismatch")
        return IntegerMatrix(
            [
                [self.entries[i][j] - other.entries[i][j] for j in range(self.cols)]
                for i in range(self.rows)
            ]
        )

    def power(self, n):
        if self.rows != self.cols:
            raise ValueError("not square")
        result = IntegerMatrix.identity(self.rows)
        base = self
        while n > 0:
            if n & 1:
                result = result.mul(base)
            base = base.mul(base)
            n >>= 1
        return result

    def sum_entries(self):
        return sum(sum(row) for row in self.entries)
