"""Exact arithmetic for prefix-replacement pseudogroup elements.

A table is a finite set of path pairs (v, w), both ending at the same
vertex, with the v's pairwise unrelated and the w's pairwise unrelated.
It acts on the path space as the disjoint union of the prefix replacements
C_w -> C_v, w.xi |-> v.xi.  Two tables describe the same element exactly
when they have a common simple expansion; the fully contracted, sorted
form is the unique canonical representative.
"""

from .core import ClopenSet, Path, Point, point_in
from .errors import (
    DomainOverlap,
    EndpointMismatch,
    IndexOutOfRange,
    InvalidMultisection,
    MixedGraphs,
    NotDisjoint,
    NotInDomain,
    RangeOverlap,
)


class Table:
    """A valid (not necessarily canonical) table of prefix-replacement pairs."""

    __slots__ = ("graph", "pairs")

    def __init__(self, graph, pairs):
        pairs = tuple(sorted(pairs, key=lambda vw: (vw[1].key, vw[0].key)))
        for v, w in pairs:
            if v.graph != graph or w.graph != graph:
                raise MixedGraphs("table pair over a different graph")
            if v.terminal != w.terminal:
                raise EndpointMismatch("pair (%s, %s) ends at different vertices" % (v, w))
        for i in range(len(pairs)):
            for j in range(i + 1, len(pairs)):
                if pairs[i][1].related(pairs[j][1]):
                    raise DomainOverlap(
                        "domains %s, %s overlap" % (pairs[i][1], pairs[j][1])
                    )
                if pairs[i][0].related(pairs[j][0]):
                    raise RangeOverlap(
                        "ranges %s, %s overlap" % (pairs[i][0], pairs[j][0])
                    )
        self.graph = graph
        self.pairs = pairs

    @classmethod
    def identity(cls, graph):
        return cls(
            graph,
            [
                (Path(graph, (), origin=v), Path(graph, (), origin=v))
                for v in graph.vertices
            ],
        )

    @classmethod
    def empty(cls, graph):
        return cls(graph, [])

    @classmethod
    def generator(cls, graph, eid):
        """The one-edge deletion C_e -> D_{t(e)} (local inverse of the shift)."""
        t = graph.terminal(eid)
        return cls(graph, [(Path(graph, (), origin=t), Path(graph, (eid,)))])

    def __eq__(self, other):
        return (
            isinstance(other, Table)
            and self.graph == other.graph
            and self.pairs == other.pairs
        )

    def __hash__(self):
        return hash(self.pairs)

    def __repr__(self):
        return "Table{%s}" % ", ".join("(%s,%s)" % (v, w) for v, w in self.pairs)

    def __len__(self):
        return len(self.pairs)

    def is_empty(self):
        return not self.pairs

    def __mul__(self, other):
        return compose(self, other)

    def __invert__(self):
        return inverse(self)

    def canon(self):
        return canonicalize(self)


class Germ:
    """The germ of a table at a point, as the maximally stripped pair."""

    __slots__ = ("point", "v", "w")

    def __init__(self, point, v, w):
        self.point = point
        self.v = v
        self.w = w

    def __eq__(self, other):
        return (
            isinstance(other, Germ)
            and self.point == other.point
            and self.v == other.v
            and self.w == other.w
        )

    def __hash__(self):
        return hash((self.point, self.v, self.w))

    def __repr__(self):
        return "Germ(%s|%s at %s)" % (self.v, self.w, self.point)

    @property
    def pair_key(self):
        return (self.v.key, self.w.key)

    def value(self):
        """The image point of the base under the germ's map."""
        return self.point.drop(len(self.w)).prepend(self.v)


class Multisection:
    """Pairwise disjoint cylinders with a common terminal vertex; the i->j
    prefix replacements between them realize any permutation of the
    components inside the full group."""

    __slots__ = ("graph", "cylinders")

    def __init__(self, graph, cylinders):
        cylinders = tuple(cylinders)
        if len(cylinders) < 2:
            raise InvalidMultisection("need degree >= 2")
        terminal = cylinders[0].terminal
        for c in cylinders:
            if c.graph != graph:
                raise MixedGraphs("cylinder over a different graph")
            if c.terminal != terminal:
                raise InvalidMultisection("components end at different vertices")
        for i in range(len(cylinders)):
            for j in range(i + 1, len(cylinders)):
                if cylinders[i].related(cylinders[j]):
                    raise InvalidMultisection(
                        "components %s, %s overlap" % (cylinders[i], cylinders[j])
                    )
        self.graph = graph
        self.cylinders = cylinders

    @property
    def degree(self):
        return len(self.cylinders)


def table_validate(graph, pairs):
    """Check the table conditions and return the canonical representative."""
    return canonicalize(Table(graph, pairs))


def canonicalize(table):
    """Contract complete sibling families {(v.e, w.e)} until none remain.

    The result is the unique minimal table for the element (pairs sorted by
    domain path)."""
    pairs = set(table.pairs)
    changed = True
    while changed:
        changed = False
        stems = {}
        for v, w in pairs:
            if len(v) >= 1 and len(w) >= 1 and v.edges[-1] == w.edges[-1]:
                stems.setdefault((v.drop_last(), w.drop_last()), set()).add(v.edges[-1])
        for (sv, sw), last_edges in stems.items():
            fam = set(table.graph.out_edges(sv.terminal))
            if fam and last_edges >= fam:
                for e in fam:
                    pairs.discard((sv.extend(e), sw.extend(e)))
                pairs.add((sv, sw))
                changed = True
    return Table(table.graph, pairs)


def simple_expand(table, indices):
    """Replace each selected pair (v, w) by all one-edge extensions
    (v.e, w.e); the new table represents the same element."""
    pairs = list(table.pairs)
    out = []
    idx = set(indices)
    for i in idx:
        if not (0 <= i < len(pairs)):
            raise IndexOutOfRange("pair index %d out of range" % i)
    for i, (v, w) in enumerate(pairs):
        if i in idx:
            for e in table.graph.out_edges(v.terminal):
                out.append((v.extend(e), w.extend(e)))
        else:
            out.append((v, w))
    return Table(table.graph, out)


def pair_product(left, right):
    """Product of two prefix replacements, right applied first.

    For left = (v', w') and right = (v, w): a point w.u.xi first maps to
    v.u.xi, which must begin with w'.  So if w' = v.u the composite is
    (v', w.u); if v = w'.u it is (v'.u, w); otherwise the cylinders miss
    each other and the product is empty (None)."""
    vp, wp = left
    v, w = right
    if v.is_prefix_of(wp):
        u = wp.drop_first(len(v)) if len(wp) > len(v) else None
        return (vp, w.concat(u) if u is not None else w)
    if wp.is_prefix_of(v):
        u = v.drop_first(len(wp)) if len(v) > len(wp) else None
        return (vp.concat(u) if u is not None else vp, w)
    return None


def compose(left, right):
    """Canonical table of left o right as partial maps (right first).

    Disjoint domain/range give the empty table, never an error."""
    if left.graph != right.graph:
        raise MixedGraphs("tables over different graphs")
    out = []
    for lp in left.pairs:
        for rp in right.pairs:
            prod = pair_product(lp, rp)
            if prod is not None:
                out.append(prod)
    return canonicalize(Table(left.graph, out))


def inverse(table):
    return canonicalize(Table(table.graph, [(w, v) for v, w in table.pairs]))


def union_disjoint(a, b):
    """Disjoint union of two tables (sources and ranges must not meet)."""
    if a.graph != b.graph:
        raise MixedGraphs("tables over different graphs")
    if not source(a).intersect(source(b)).is_empty():
        raise NotDisjoint("sources overlap")
    if not range_(a).intersect(range_(b)).is_empty():
        raise NotDisjoint("ranges overlap")
    return canonicalize(Table(a.graph, a.pairs + b.pairs))


def source(table):
    return ClopenSet(table.graph, [w for v, w in table.pairs])


def range_(table):
    return ClopenSet(table.graph, [v for v, w in table.pairs])


def is_full_group_element(table):
    whole = ClopenSet.whole(table.graph)
    return source(table).equals(whole) and range_(table).equals(whole)


def apply(table, x):
    """Prefix replacement of the point, normalized."""
    for v, w in table.pairs:
        if w.origin == x.origin and x.unroll(len(w)) == list(w.edges):
            return x.drop(len(w)).prepend(v)
    raise NotInDomain("point %s not in the source of the table" % x)


def germ_at(table, x):
    """The reduced germ of the table at a point of its source."""
    for v, w in table.pairs:
        if w.origin == x.origin and x.unroll(len(w)) == list(w.edges):
            while len(v) >= 1 and len(w) >= 1 and v.edges[-1] == w.edges[-1]:
                v, w = v.drop_last(), w.drop_last()
            return Germ(x, v, w)
    raise NotInDomain("point %s not in the source of the table" % x)


def support(table):
    """Closure of the moved set: the union of the source cylinders of the
    non-identity pairs of the canonical form."""
    c = canonicalize(table)
    return ClopenSet(table.graph, [w for v, w in c.pairs if v != w])


def multisection_element(m, sigma):
    """The full-group element permuting the components of a multisection by
    sigma (sigma[i] = index the i-th component is sent to), extended by the
    identity elsewhere."""
    d = m.degree
    if sorted(sigma) != list(range(d)):
        raise InvalidMultisection("sigma is not a permutation of 0..%d" % (d - 1))
    pairs = [(m.cylinders[sigma[i]], m.cylinders[i]) for i in range(d)]
    covered = ClopenSet(m.graph, list(m.cylinders))
    for p in covered.complement().paths:
        pairs.append((p, p))
    return canonicalize(Table(m.graph, pairs))


def equals(a, b):
    """Element equality: identical canonical forms."""
    if a.graph != b.graph:
        raise MixedGraphs("tables over different graphs")
    return canonicalize(a).pairs == canonicalize(b).pairs


def identity_on(clopen):
    """The idempotent table (identity restricted to the clopen set)."""
    return Table(clopen.graph, [(p, p) for p in clopen.paths])
