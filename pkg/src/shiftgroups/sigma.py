"""Sigma systems and the homomorphisms they induce between full groups.

A sigma system assigns to every edge e of a source graph a nonzero table
T_e over a target graph, with pairwise disjoint clopen sources and with
r(T_e) equal to the union of the sources of the tables of the edges leaving
t(e).  Such a family extends the edge assignment to a homomorphism of the
whole pseudogroup; on a full-group element with table {(v_i, w_i)} the
image is the disjoint union of the tables inverse(T_{v_i}) o T_{w_i}.

The induced action is intertwined with the shift by the coding map, which
reads off the itinerary of a point under the piecewise map y |-> T_{e_y}(y).
"""

from .core import ClopenSet, Path, point_in
from .errors import (
    InvalidSystem,
    NotFullGroupElement,
    NotInDomain,
    RangeMismatch,
    SourcesOverlap,
    ZeroTable,
)
from .tables import (
    Table,
    apply,
    canonicalize,
    compose,
    identity_on,
    inverse,
    is_full_group_element,
    range_,
    source,
    union_disjoint,
)


class SigmaSystem:
    """A validated edge-indexed family of tables; construct via
    validate_sigma_system."""

    __slots__ = ("source_graph", "target_graph", "tables", "sources", "domain")

    def __init__(self, source_graph, target_graph, tables, sources, domain):
        self.source_graph = source_graph
        self.target_graph = target_graph
        self.tables = tables
        self.sources = sources
        self.domain = domain

    def __repr__(self):
        return "SigmaSystem(%d edges, domain %r)" % (len(self.tables), self.domain)


def validate_sigma_system(source_graph, target_graph, tables):
    """Check the sigma-system conditions and compute the domain.

    Note the range condition is oriented so that the defining family of
    one-edge deletions S_e is itself a valid system: r(T_e) must equal the
    union of s(T_f) over the edges f leaving the terminal vertex of e.
    """
    edge_ids = [e for e, o, t in source_graph.edges]
    for e in edge_ids:
        if e not in tables:
            raise InvalidSystem("no table for edge %r" % e)
        if tables[e].graph != target_graph:
            raise InvalidSystem("table for edge %r lives over the wrong graph" % e)
        if tables[e].is_empty():
            raise ZeroTable("table for edge %r is the empty element" % e)
    sources = {e: source(tables[e]) for e in edge_ids}
    for i, e in enumerate(edge_ids):
        for f in edge_ids[i + 1 :]:
            if not sources[e].intersect(sources[f]).is_empty():
                raise SourcesOverlap("sources of %r and %r overlap" % (e, f))
    for e in edge_ids:
        expected = ClopenSet.empty(target_graph)
        for f in edge_ids:
            if source_graph.origin(f) == source_graph.terminal(e):
                expected = expected.union(sources[f])
        if not range_(tables[e]).equals(expected):
            raise RangeMismatch("range of %r is not the union of successor sources" % e)
    domain = ClopenSet.empty(target_graph)
    for e in edge_ids:
        domain = domain.union(sources[e])
    return SigmaSystem(
        source_graph, target_graph, dict(tables), sources, domain
    )


def defining_system(graph):
    """The system of one-edge deletions over the graph itself."""
    return validate_sigma_system(
        graph, graph, {e: Table.generator(graph, e) for e, o, t in graph.edges}
    )


def path_transport(system, w):
    """The table T_w = T_{e_k} ... T_{e_1} for a source-graph path
    w = e_1 ... e_k; its source is the coding preimage of C_w.  The empty
    path at a vertex x gives the identity on the preimage of D_x."""
    if w.graph != system.source_graph:
        raise InvalidSystem("path lives over the wrong graph")
    if not w.edges:
        dom = ClopenSet.empty(system.target_graph)
        for f, o, t in system.source_graph.edges:
            if o == w.origin:
                dom = dom.union(system.sources[f])
        return identity_on(dom)
    result = system.tables[w.edges[0]]
    for e in w.edges[1:]:
        result = compose(system.tables[e], result)
    return result


def induced_hom(system, table, extend_by_identity=True):
    """Image of a full-group element under the induced homomorphism.

    The element {(v_i, w_i)} maps to the disjoint union of the tables
    inverse(T_{v_i}) o T_{w_i}; with extend_by_identity the identity on the
    complement of the domain is appended, landing in the full group of the
    target."""
    if table.graph != system.source_graph:
        raise InvalidSystem("element lives over the wrong graph")
    if not is_full_group_element(table):
        raise NotFullGroupElement("induced homomorphism needs full source and range")
    result = Table.empty(system.target_graph)
    for v, w in table.pairs:
        piece = compose(inverse(path_transport(system, v)), path_transport(system, w))
        result = union_disjoint(result, piece)
    if extend_by_identity:
        comp = system.domain.complement()
        if not comp.is_empty():
            result = union_disjoint(result, identity_on(comp))
    return canonicalize(result)


def coding_preimage(system, w):
    """Preimage of the cylinder C_w under the coding map."""
    return source(path_transport(system, w))


def coding_step(system, y):
    """One step of the coded dynamics: the unique edge whose table source
    contains y, and the image of y under that table."""
    for e in sorted(system.tables):
        if point_in(system.sources[e], y):
            return e, apply(system.tables[e], y)
    raise NotInDomain("point %s is outside the system's domain" % y)


def coding_map(system, y, n):
    """First n edges of the itinerary of y (a path in the source graph)."""
    e0, _ = coding_step(system, y)
    out = []
    for _ in range(n):
        e, y = coding_step(system, y)
        out.append(e)
    return Path(system.source_graph, out, origin=system.source_graph.origin(e0))
