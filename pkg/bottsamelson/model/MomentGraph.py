from dataclasses import dataclass
from typing import List, Optional

import networkx as nx

from bottsamelson.model.CartanDatum import CartanDatum
from bottsamelson.model.Field import Field
from bottsamelson.model.GroupElement import GroupElement
from bottsamelson.model.MultiPoly import MultiPoly
from bottsamelson.model.types import MomentGraphDict


@dataclass(frozen=True)
class MomentGraph:
    """
    The Bruhat moment graph on a downward closed set of group elements.

    Nodes of ``graph`` are ``GroupElement`` objects. Every edge (x, y) carries the positive
    affine root ``root`` with y = s_root x and x < y, and ``label``, the image of that root
    as a linear form over ``field`` in the weight basis plus delta.

    Attributes:
        datum (CartanDatum): Root datum the elements belong to.
        field (Field): Field the labels are reduced to.
        graph (nx.DiGraph): Vertices and labelled edges.
        top (Optional[GroupElement]): The maximal element when the vertex set is an interval.
    """

    datum: CartanDatum
    field: Field
    graph: nx.DiGraph
    top: Optional[GroupElement] = None

    @property
    def vertices(self) -> List[GroupElement]:
        return sorted(self.graph.nodes, key=lambda g: g.sort_key)

    def label(self, start: GroupElement, end: GroupElement) -> MultiPoly:
        return self.graph.edges[start, end]["label"]

    def __str__(self) -> str:
        return (
            f"MomentGraph({self.datum.name}, field={self.field}, vertices={self.graph.number_of_nodes()}, "
            f"edges={self.graph.number_of_edges()})"
        )

    def to_dict(self) -> MomentGraphDict:
        field = self.field
        return {
            "field": str(field),
            "top": self.top.word_str if self.top is not None else None,
            "vertices": [v.to_dict() for v in self.vertices],
            "edges": [
                {
                    "start": u.word_str,
                    "end": v.word_str,
                    "root": str(data["root"]),
                    "label": [field.to_json(field.coerce(c)) for c in data["root"].weights],
                }
                for u, v, data in sorted(
                    self.graph.edges(data=True), key=lambda e: (e[1].sort_key, e[0].sort_key)
                )
            ],
        }
