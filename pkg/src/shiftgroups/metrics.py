"""Word complexity, orbital and Cayley balls, and growth tables.

The generating moves are the one-edge deletions S_e and their inverses.
Orbital balls live on points; Cayley balls live on reduced germs anchored
at a base point, so isotropy is not collapsed.  Balls include all edges of
the induced subgraph on their vertex set, which makes the tree check
honest at the boundary.
"""

from .core import Path, Point
from .tables import Germ


def word_complexity(graph, n):
    """Number of directed paths with n edges (sum of the entries of the
    n-th power of the adjacency matrix); realizes the complexity growth of
    the shift, exactly."""
    if n < 1:
        raise ValueError("need n >= 1")
    return graph.adjacency_matrix().power(n).sum_entries()


class LabeledBall:
    """A radius-r ball with generator-labelled directed edges.

    vertices are payloads (Point or Germ) in BFS discovery order; edges are
    (i, j, label) index triples; levels[k] counts vertices at distance k."""

    __slots__ = ("kind", "radius", "vertices", "edges", "levels")

    def __init__(self, kind, radius, vertices, edges, levels):
        self.kind = kind
        self.radius = radius
        self.vertices = tuple(vertices)
        self.edges = tuple(edges)
        self.levels = tuple(levels)

    def __len__(self):
        return len(self.vertices)

    def size_at_radius(self, r):
        return sum(self.levels[: r + 1])


def _ball(kind, start, moves, radius):
    """Deterministic BFS; after the last layer, closure edges between known
    vertices are still recorded."""
    order = [start]
    index = {start: 0}
    dist = {start: 0}
    edges = []
    frontier = [start]
    for depth in range(radius):
        nxt = []
        for v in frontier:
            for w, label in moves(v):
                if w not in index:
                    index[w] = len(order)
                    order.append(w)
                    dist[w] = depth + 1
                    nxt.append(w)
                edges.append((index[v], index[w], label))
        frontier = nxt
    for v in frontier:  # induced edges out of the last layer
        for w, label in moves(v):
            if w in index:
                edges.append((index[v], index[w], label))
    levels = [0] * (radius + 1)
    for v in order:
        levels[dist[v]] += 1
    return order, sorted(set(edges)), levels


def orbital_ball(graph, x, radius):
    """Ball around a point in its orbit graph: moves delete the leading edge
    (S_e, when the point starts with e) or prepend an edge ending at the
    point's origin (S_e inverse)."""

    def moves(p):
        out = []
        for e, o, t in graph.edges:
            if p.first_edge() == e:
                out.append((p.drop(1), e))
            if t == p.origin:
                out.append((p.prepend(Path(graph, (e,))), e + "^-1"))
        return out

    order, edges, levels = _ball("orbital", x, moves, radius)
    return LabeledBall("orbital", radius, order, edges, levels)


def _germ_step(graph, germ, value, eid, inv):
    """Compose a generator germ (or its inverse) with a reduced germ at a
    fixed base; returns (new reduced pair, new value point) or None when the
    move is undefined at the current value."""
    v, w = germ.v, germ.w
    if not inv:
        if value.first_edge() != eid:
            return None
        if len(v) == 0:
            nv = Path(graph, (), origin=graph.terminal(eid))
            nw = w.extend(eid)
        else:
            nv = v.drop_first(1)
            nw = w
        new_value = value.drop(1)
    else:
        if graph.terminal(eid) != value.origin:
            return None
        nv = Path(graph, (eid,)).concat(v)
        nw = w
        new_value = value.prepend(Path(graph, (eid,)))
    while len(nv) >= 1 and len(nw) >= 1 and nv.edges[-1] == nw.edges[-1]:
        nv, nw = nv.drop_last(), nw.drop_last()
    return Germ(germ.point, nv, nw), new_value


def cayley_ball(graph, x, radius):
    """Ball around the unit germ at x in the germ Cayley graph: vertices are
    reduced germs with source x, moves are composition with the generator
    germs and their inverses at the current value."""
    unit = Germ(x, Path(graph, (), origin=x.origin), Path(graph, (), origin=x.origin))
    payload = {unit.pair_key: unit}

    def moves(key):
        g = payload[key]
        val = g.value()
        out = []
        for e, o, t in graph.edges:
            for inv in (False, True):
                step = _germ_step(graph, g, val, e, inv)
                if step is None:
                    continue
                ng, _ = step
                payload.setdefault(ng.pair_key, ng)
                out.append((ng.pair_key, e + ("^-1" if inv else "")))
        return out

    order, edges, levels = _ball("cayley", unit.pair_key, moves, radius)
    return LabeledBall("cayley", radius, [payload[k] for k in order], edges, levels)


def is_tree(ball):
    """Undirected acyclicity: deduplicated undirected edge count must be
    exactly |vertices| - 1 (self-loops therefore fail the check)."""
    und = set()
    for i, j, label in ball.edges:
        und.add((min(i, j), max(i, j)))
    return len(und) == len(ball.vertices) - 1


def growth_table(graph, samples, max_radius):
    """Per radius, the largest orbital ball size over the sample points: a
    certified lower bound for the orbital growth function."""
    if not samples:
        raise ValueError("need at least one sample point")
    balls = [orbital_ball(graph, x, max_radius) for x in samples]
    return [max(b.size_at_radius(r) for b in balls) for r in range(max_radius + 1)]


def _vertex_label(v):
    if isinstance(v, Point):
        return str(v)
    if isinstance(v, Germ):
        return "%s|%s" % (v.v, v.w)
    return str(v)


def ball_to_dot(ball):
    """Graphviz rendering of a ball, stable across runs."""
    lines = ["digraph ball {"]
    for i, v in enumerate(ball.vertices):
        lines.append('  n%d [label="%s"];' % (i, _vertex_label(v)))
    for i, j, label in ball.edges:
        lines.append('  n%d -> n%d [label="%s"];' % (i, j, label))
    lines.append("}")
    return "\n".join(lines) + "\n"
