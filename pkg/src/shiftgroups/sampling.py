"""Seeded random generators for points, tables and cocycle elements.

Everything takes an explicit random.Random so test runs are reproducible.
"""

from .core import Path, Point
from .tables import Multisection, Table, canonicalize, compose, multisection_element
from .zfull import BiPoint, cocycle_compose, cocycle_validate


def random_point(graph, rng, extra_prefix=3):
    """Random eventually periodic point: a random walk until a vertex
    repeats, split into preperiod and cycle."""
    v = rng.choice(graph.vertices)
    walk = []
    seen = {v: 0}
    for _ in range(len(graph.vertices) + rng.randrange(extra_prefix + 1)):
        e = rng.choice(graph.out_edges(v))
        walk.append(e)
        v = graph.terminal(e)
        if v in seen:
            break
        seen[v] = len(walk)
    else:
        while v not in seen:
            e = rng.choice(graph.out_edges(v))
            walk.append(e)
            v = graph.terminal(e)
    cut = seen[v]
    prefix = walk[:cut]
    cycle = walk[cut:]
    if prefix:
        return Point(graph, Path(graph, prefix), Path(graph, cycle))
    origin = graph.origin(cycle[0])
    return Point(graph, Path(graph, (), origin=origin), Path(graph, cycle))


def random_point_in(clopen, rng):
    """Random point inside a nonempty clopen set."""
    p = rng.choice(clopen.paths)
    tail = random_point(p.graph, rng)
    # steer the tail to start at the end of p
    while tail.origin != p.terminal:
        tail = random_point(p.graph, rng)
    return tail.prepend(p)


def random_complete_antichain(graph, rng, splits):
    """A clopen partition of the whole space, by repeatedly replacing a
    random path with all its one-edge extensions."""
    paths = [Path(graph, (), origin=v) for v in graph.vertices]
    for _ in range(splits):
        i = rng.randrange(len(paths))
        p = paths.pop(i)
        paths.extend(p.children())
    return paths


def random_tree_pair_table(graph, rng, splits=None):
    """Random canonical full-group table over a one-vertex graph: two
    equal-size complete antichains matched by a random bijection."""
    if len(graph.vertices) != 1:
        raise ValueError("tree pairs need a one-vertex graph")
    if splits is None:
        splits = rng.randrange(1, 5)
    dom = random_complete_antichain(graph, rng, splits)
    ran = random_complete_antichain(graph, rng, splits)
    rng.shuffle(ran)
    return canonicalize(Table(graph, list(zip(ran, dom))))


def random_multisection(graph, rng, degree=None):
    """Random multisection: pairwise unrelated paths with a common terminal
    vertex, found by rejection over short random walks."""
    if degree is None:
        degree = rng.choice((2, 3))
    target = rng.choice(graph.vertices)
    cylinders = []
    guard = 0
    while len(cylinders) < degree:
        guard += 1
        if guard > 500:
            target = rng.choice(graph.vertices)
            cylinders = []
            guard = 0
        length = rng.randrange(1, 5)
        x = random_point(graph, rng)
        edges = x.unroll(length)
        try:
            p = Path(graph, edges)
        except Exception:
            continue
        if p.terminal != target:
            continue
        if any(p.related(q) for q in cylinders):
            continue
        cylinders.append(p)
    return Multisection(graph, cylinders)


def random_full_group_table(graph, rng, factors=2):
    """Random full-group element over any validated graph: a product of
    multisection permutation elements."""
    if len(graph.vertices) == 1 and rng.random() < 0.7:
        return random_tree_pair_table(graph, rng)
    out = Table.identity(graph)
    for _ in range(factors):
        m = random_multisection(graph, rng)
        sigma = list(range(m.degree))
        rng.shuffle(sigma)
        out = compose(out, multisection_element(m, sigma))
    return out


def random_table(graph, rng):
    """Random valid table (possibly a partial bisection): a random subset of
    the pairs of a random full-group element."""
    t = random_full_group_table(graph, rng)
    pairs = [vw for vw in t.pairs if rng.random() < 0.8]
    if not pairs:
        pairs = list(t.pairs)
    return Table(graph, pairs)


def random_path_to(graph, rng, target, max_len=4):
    """Random nonempty path ending at the target vertex (backward walk)."""
    length = rng.randrange(1, max_len + 1)
    edges = []
    v = target
    for _ in range(length):
        candidates = graph.in_edges(v)
        if not candidates:
            break
        e = rng.choice(candidates)
        edges.append(e)
        v = graph.origin(e)
    edges.reverse()
    return Path(graph, edges)


def random_pair(graph, rng):
    """Random single prefix-replacement pair (v, w) with common endpoint."""
    target = rng.choice(graph.vertices)
    v = random_path_to(graph, rng, target)
    w = random_path_to(graph, rng, target)
    return (v, w)


def random_bipoint(shift, rng, center_len=3):
    """Random admissible eventually periodic two-sided point (finite-type
    backends only), by rejection."""
    while True:
        try:
            left = _random_word(shift, rng, rng.randrange(1, 4))
            right = _random_word(shift, rng, rng.randrange(1, 4))
            center = _random_word(shift, rng, rng.randrange(0, center_len + 1))
            return BiPoint(shift, left, center, right, rng.randrange(-3, 4))
        except ValueError:
            continue


def _random_word(shift, rng, n):
    w = ""
    for _ in range(n):
        choices = [a for a in shift.alphabet if shift.language(w + a)]
        if not choices:
            raise ValueError("dead end")
        w += rng.choice(choices)
    return w


def random_slide_involution(shift, rng, max_len=3):
    """An involution sliding a self-overlap-free window against itself:
    value +j on [w @ 0], -j on [w @ -j], 0 elsewhere."""
    for _ in range(200):
        n = rng.randrange(2, max_len + 1)
        try:
            w = _random_word(shift, rng, n)
        except ValueError:
            continue
        j = rng.randrange(1, n)
        if w[j:] == w[:-j]:
            continue  # windows compatible, the two cylinders would overlap
        try:
            return cocycle_validate(
                shift, [(w, 0, j), (w, -j, -j)] + _complement_pieces(shift, w, j)
            )
        except Exception:
            continue
    return cocycle_validate(shift, [("", 0, 0)])


def _complement_pieces(shift, w, j):
    """Zero-valued pieces covering the complement of [w@0] and [w@-j]."""
    span_lo, span_hi = -j, len(w)
    out = []
    for word in shift.words(span_hi - span_lo, start=span_lo):
        hit0 = word[-span_lo : -span_lo + len(w)] == w
        hitj = word[: len(w)] == w
        if not hit0 and not hitj:
            out.append((word, span_lo, 0))
    return out


def random_cocycle(shift, rng, factors=2):
    """Random validated full-group element: product of shifts and slide
    involutions."""
    out = cocycle_validate(shift, [("", 0, rng.choice((-1, 0, 1)))])
    for _ in range(factors):
        out = cocycle_compose(out, random_slide_involution(shift, rng))
    return out
