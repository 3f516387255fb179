"""JSON encoding/decoding for every wire type the CLI exposes.

Schemas:
  graph    {"vertices":[str], "edges":[{"id":str,"from":str,"to":str}]}
  path     {"edges":[str], "origin":str?}   (origin required when empty)
  clopen   {"paths":[path]}
  point    {"prefix":path, "cycle":path}
  table    {"pairs":[{"v":path,"w":path}]}
  germ     {"point":point, "v":path, "w":path}
  sigma    {"source_graph":graph, "target_graph":graph, "tables":{edge:table}}
  multisection {"cylinders":[path], "sigma":[int]}   (0-indexed images)
  subshift {"alphabet":[str], "forbidden":[str]} or
           {"alphabet":[str], "substitution":{letter:word}}
  cocycle  {"pieces":[{"window":str,"offset":int,"k":int}]}
  code     {"radius":int, "rule":{word:letter}}
  bipoint  {"left":str,"center":str,"right":str,"start":int}
"""

import json

from .core import ClopenSet, DirectedGraph, Path, Point
from .tables import Multisection, Table
from .zfull import BiPoint, BlockCode, CocycleElement, Subshift


def canonical_dumps(obj):
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def graph_to_json(g):
    return {
        "vertices": list(g.vertices),
        "edges": [{"id": e, "from": o, "to": t} for e, o, t in g.edges],
    }


def graph_from_json(data):
    return DirectedGraph(
        data["vertices"], [(e["id"], e["from"], e["to"]) for e in data["edges"]]
    )


def path_to_json(p):
    out = {"edges": list(p.edges)}
    if not p.edges:
        out["origin"] = p.origin
    return out


def path_from_json(graph, data):
    return Path(graph, data["edges"], origin=data.get("origin"))


def clopen_to_json(c):
    return {"paths": [path_to_json(p) for p in c.paths]}


def clopen_from_json(graph, data):
    return ClopenSet(graph, [path_from_json(graph, p) for p in data["paths"]])


def point_to_json(x):
    return {"prefix": path_to_json(x.prefix), "cycle": path_to_json(x.cycle)}


def point_from_json(graph, data):
    return Point(
        graph,
        path_from_json(graph, data["prefix"]),
        path_from_json(graph, data["cycle"]),
    )


def table_to_json(t):
    return {
        "pairs": [
            {"v": path_to_json(v), "w": path_to_json(w)} for v, w in t.pairs
        ]
    }


def table_from_json(graph, data):
    return Table(
        graph,
        [
            (path_from_json(graph, p["v"]), path_from_json(graph, p["w"]))
            for p in data["pairs"]
        ],
    )


def germ_to_json(g):
    return {
        "point": point_to_json(g.point),
        "v": path_to_json(g.v),
        "w": path_to_json(g.w),
    }


def sigma_from_json(data):
    from .sigma import validate_sigma_system

    src = graph_from_json(data["source_graph"])
    dst = graph_from_json(data["target_graph"])
    tables = {e: table_from_json(dst, t) for e, t in data["tables"].items()}
    return validate_sigma_system(src, dst, tables)


def multisection_from_json(graph, data):
    m = Multisection(graph, [path_from_json(graph, p) for p in data["cylinders"]])
    return m, [int(i) for i in data["sigma"]]


def subshift_to_json(s):
    if s.forbidden is not None:
        return {"alphabet": list(s.alphabet), "forbidden": list(s.forbidden)}
    return {"alphabet": list(s.alphabet), "substitution": dict(s.substitution)}


def subshift_from_json(data):
    return Subshift(
        data["alphabet"],
        forbidden=data.get("forbidden"),
        substitution=data.get("substitution"),
    )


def cocycle_to_json(c):
    return {
        "pieces": [
            {"window": w, "offset": s, "k": k} for w, s, k in c.pieces
        ]
    }


def cocycle_from_json(shift, data):
    return CocycleElement(
        shift, [(p["window"], p["offset"], p["k"]) for p in data["pieces"]]
    )


def code_from_json(src, dst, data):
    return BlockCode(src, dst, data["radius"], data["rule"])


def bipoint_to_json(x):
    return {
        "left": x.left,
        "center": x.center,
        "right": x.right,
        "start": x.start,
    }


def bipoint_from_json(shift, data):
    return BiPoint(
        shift, data["left"], data["center"], data["right"], data.get("start", 0)
    )


def ball_to_json(ball):
    from .metrics import _vertex_label

    return {
        "kind": ball.kind,
        "radius": ball.radius,
        "root": 0,
        "vertices": [_vertex_label(v) for v in ball.vertices],
        "edges": [
            {"from": i, "to": j, "label": label} for i, j, label in ball.edges
        ],
        "levels": list(ball.levels),
    }


def presentation_to_json(g):
    return {"rank": g.rank, "torsion": list(g.torsion)}
