import json
from itertools import combinations
from typing import Any, Dict, Iterable, List, Optional

import networkx as nx

from bottsamelson.compute.weyl import CoxeterContext
from bottsamelson.constants import FORMATS
from bottsamelson.exceptions import IncompleteInterval, NonGKMInput, ZeroLabel
from bottsamelson.model.AffineRoot import AffineRoot
from bottsamelson.model.Field import Field
from bottsamelson.model.GkmReport import GkmReport, GkmViolation
from bottsamelson.model.GroupElement import GroupElement
from bottsamelson.model.MomentGraph import MomentGraph
from bottsamelson.model.MultiPoly import MultiPoly


def label_image(field: Field, root: AffineRoot) -> MultiPoly:
    """
    The linear form of a root over the field: weight coordinates, then the level on delta.

    Raises:
        ZeroLabel: If every coordinate vanishes in the field.
    """
    image = MultiPoly.linear_form(field, root.weights)
    if image.is_zero():
        raise ZeroLabel(f"Root {root} has zero image over {field}")
    return image


def build_lower_set_graph(
    ctx: CoxeterContext, vertices: Iterable[GroupElement], field: Field, top: Optional[GroupElement] = None
) -> MomentGraph:
    """
    Build the moment graph on a Bruhat-downward-closed vertex set.

    Edges ending at x come from the left inversions of x: the k-th root beta gives the
    edge s_beta x -> x, and s_beta x is x's canonical word with the k-th letter deleted.

    Args:
        ctx (CoxeterContext): Context the vertices were interned in.
        vertices (Iterable[GroupElement]): A downward closed set.
        field (Field): Field for the labels.
        top (Optional[GroupElement]): Maximal element, recorded when the set is an interval.

    Returns:
        MomentGraph: The labelled graph.

    Raises:
        IncompleteInterval: If some s_beta x lies outside the vertex set.
        ZeroLabel: If a label vanishes over the field.
    """
    vertex_set = set(vertices)
    g = nx.DiGraph()
    for x in vertex_set:
        g.add_node(x, length=x.length, word=x.word_str)
    for x in vertex_set:
        for k, beta in enumerate(ctx.left_inversions(x)):
            y = ctx.delete_letter(x, k)
            if y not in vertex_set:
                raise IncompleteInterval(f"{y} lies below {x} but outside the vertex set")
            g.add_edge(y, x, root=beta, label=label_image(field, beta))
    return MomentGraph(ctx.datum, field, g, top)


def build_interval_graph(ctx: CoxeterContext, w: GroupElement, field: Field) -> MomentGraph:
    return build_lower_set_graph(ctx, ctx.bruhat_interval(w), field, top=w)


def _proportional(field: Field, a: AffineRoot, b: AffineRoot) -> bool:
    u, v = a.weights, b.weights
    return all(
        field.is_zero(field.coerce(u[i] * v[j] - u[j] * v[i])) for i in range(len(u)) for j in range(i + 1, len(u))
    )


def gkm_check(g: MomentGraph) -> GkmReport:
    """
    Check that the labels of any two edges meeting at a vertex are not proportional.

    Proportionality is decided by the vanishing of every 2x2 minor of the two weight
    coordinate vectors in the field. All violations are collected.
    """
    violations: List[GkmViolation] = []
    for x in g.vertices:
        incident = [g.graph.edges[e]["root"] for e in g.graph.in_edges(x)]
        incident += [g.graph.edges[e]["root"] for e in g.graph.out_edges(x)]
        incident.sort(key=lambda r: (r.level, r.finite))
        for a, b in combinations(incident, 2):
            if _proportional(g.field, a, b):
                violations.append(GkmViolation(x, a, b))
    return GkmReport(g.field.characteristic, violations)


def require_gkm(g: MomentGraph) -> None:
    """
    Raises:
        NonGKMInput: If the graph fails the GKM property.
    """
    report = gkm_check(g)
    if not report.passed:
        raise NonGKMInput(
            f"GKM property fails over {g.field} at {len(report.violations)} vertex edge pair(s), "
            f"first: {report.violations[0]}"
        )


def d_of_x(g: MomentGraph, x: GroupElement) -> MultiPoly:
    """
    Product of the negated labels of all edges ending at x.

    Raises:
        IncompleteInterval: If x is missing or not every edge of the full graph ending at x is present.
    """
    if x not in g.graph:
        raise IncompleteInterval(f"{x} is not a vertex of {g}")
    incoming = list(g.graph.in_edges(x))
    if len(incoming) != x.length:
        raise IncompleteInterval(f"{x} has {len(incoming)} incoming edges, expected {x.length}")
    result = MultiPoly.one(g.field, g.datum.nvars)
    for edge in incoming:
        result = result * (-g.graph.edges[edge]["label"])
    return result


def _sanitize_graph(g: MomentGraph) -> nx.DiGraph:
    """Relabel nodes by word and flatten attributes to strings for text exporters."""
    h = nx.DiGraph()
    for x in g.vertices:
        h.add_node(x.word_str or "e", length=x.length)
    for u, v, data in g.graph.edges(data=True):
        h.add_edge(u.word_str or "e", v.word_str or "e", root=str(data["root"]), label=str(data["label"]))
    return h


def export_graph(g: MomentGraph, format: str = "json") -> str:
    """
    Serialise a moment graph as text.

    Args:
        g (MomentGraph): Graph to export.
        format (str): One of json, dot, gml, graphml.

    Returns:
        str: The serialised graph.

    Raises:
        ValueError: If the format is unsupported.
    """
    if format not in FORMATS:
        raise ValueError(f"Format must be one of: {FORMATS}")
    h = _sanitize_graph(g)
    if format == "dot":
        return str(nx.nx_pydot.to_pydot(h).to_string())
    if format == "gml":
        return "\n".join(nx.generate_gml(h))
    if format == "graphml":
        return "\n".join(nx.generate_graphml(h))
    data: Dict[str, Any] = nx.node_link_data(h)
    return json.dumps(data, indent=2, default=str)
