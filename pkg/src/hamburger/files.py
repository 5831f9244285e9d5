"""JSON interchange for hamburger graphs and regions.

Graph file::

    {
      "k": 3,
      "g1": {"vertices": 3, "distinguished": [0, 1, 2], "edges": [[0, 1, "1"], ...]},
      "g2": {"vertices": 3, "distinguished": [0, 1, 2], "edges": [[2, 1, "1"], ...]},
      "e3": [["1", "1"], ["2", "1/2"], ["1", "1"]],
      "pairing": {"forward": [1, 2, 3], "backward": [1, 3, 2]}
    }

``e3[i]`` holds the weights of ``v_{i+1} → w`` and ``w_{k+i+1} → v``.
Weights are strings ``"p"`` or ``"p/q"``.  ``pairing`` is optional; when it
is present the file describes a generalized graph (1-based permutations).

Region file: ``{"kind": "diamond", "n": 4}``, ``{"kind": "pillow", "n": 6,
"q": 3}``, ``{"kind": "generalized", "n": 4, "top_left": [3], ...}`` or
``{"kind": "explicit", "rows": [[y, x_start, length], ...]}``.
"""
from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

from .errors import HamburgerError
from .graph import AnyHamburger, Dag, GeneralizedHamburgerGraph, HamburgerGraph
from .regions import Region, region_from_dict


class ParseError(HamburgerError, ValueError):
    pass


def _dag_from(obj: dict) -> Dag:
    return Dag(int(obj["vertices"]), [(e[0], e[1], Fraction(str(e[2])) if len(e) > 2 else 1)
                                      for e in obj.get("edges", [])], obj["distinguished"])


def _dag_to(g: Dag) -> dict:
    return {"vertices": g.num_vertices, "distinguished": list(g.distinguished),
            "edges": [[u, v, str(w)] for u, v, w in g.edges]}


def graph_from_dict(data: dict) -> AnyHamburger:
    try:
        g1 = _dag_from(data["g1"])
        g2 = _dag_from(data["g2"])
        k = int(data.get("k", len(g1.distinguished)))
        e3 = data.get("e3") or [["1", "1"]] * k
        d1 = [Fraction(str(a)) for a, _ in e3]
        d2 = [Fraction(str(b)) for _, b in e3]
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"malformed graph file: {exc}") from exc
    if k != len(g1.distinguished) or k != len(e3):
        raise ParseError(f"k={k} disagrees with the distinguished vertices or e3 entries")
    pairing = data.get("pairing")
    if pairing is None:
        return HamburgerGraph(g1, g2, d1, d2)
    try:
        forward, backward = tuple(pairing["forward"]), tuple(pairing["backward"])
    except (KeyError, TypeError) as exc:
        raise ParseError(f"malformed pairing: {exc}") from exc
    return GeneralizedHamburgerGraph(g1, g2, forward, backward, tuple(d1), tuple(d2))


def graph_to_dict(h: AnyHamburger) -> dict:
    if isinstance(h, HamburgerGraph):
        weights, pairing = zip(h.d1, h.d2), None
    else:
        weights = zip(h.forward_weights, h.backward_weights)
        pairing = {"forward": list(h.forward), "backward": list(h.backward)}
    out = {"k": len(h.g1.distinguished), "g1": _dag_to(h.g1), "g2": _dag_to(h.g2),
           "e3": [[str(a), str(b)] for a, b in weights]}
    if pairing is not None:
        out["pairing"] = pairing
    return out


def load_graph(path: str | Path) -> AnyHamburger:
    try:
        data = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: {exc}") from exc
    return graph_from_dict(data)


def dump_graph(h: AnyHamburger) -> str:
    return json.dumps(graph_to_dict(h), indent=1, sort_keys=True) + "\n"


def load_region(path: str | Path) -> Region:
    try:
        data = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: {exc}") from exc
    if not isinstance(data, dict) or "kind" not in data:
        raise ParseError(f"{path}: region file needs a 'kind' field")
    return region_from_dict(data)


def dump_json(data: dict) -> str:
    return json.dumps(data, indent=1, sort_keys=True) + "\n"
