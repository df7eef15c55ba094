from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

import networkx as nx

from bottsamelson.constants import BLANK, TILT_LEFT
from bottsamelson.model.AffineRoot import AffineRoot
from bottsamelson.model.GroupElement import GroupElement, Word
from bottsamelson.model.types import SubwordTreeDict


@dataclass(frozen=True)
class TreeVertex:
    id: int
    level: int
    ev: GroupElement
    children: Tuple[int, ...] = ()


@dataclass(frozen=True)
class TreeEdge:
    """
    Edge from ``child`` (level - 1) up to ``parent`` (level).

    Attributes:
        child (int): Vertex id at the lower end.
        parent (int): Vertex id at the upper end.
        level (int): Level of the edge, the position of its letter in the word (1 based).
        letter (int): Simple index of the word letter at this level.
        color (int): -1, 0 or 1; nonzero exactly when the letter is used.
        tilt (str): vertical, left or right.
        start_root (AffineRoot): ev(child) applied to the simple root of ``letter``.
    """

    child: int
    parent: int
    level: int
    letter: int
    color: int
    tilt: str
    start_root: AffineRoot

    @property
    def left_tilted(self) -> bool:
        return self.tilt == TILT_LEFT

    @property
    def end_root(self) -> AffineRoot:
        """ev(parent) applied to the simple root; the parent is the child times s when the letter is used."""
        return -self.start_root if self.color != 0 else self.start_root


@dataclass(frozen=True)
class TreePath:
    """A maximal path, edges listed from level 1 up to the root."""

    edges: Tuple[TreeEdge, ...]

    @property
    def degree(self) -> int:
        return 2 * sum(1 for e in self.edges if e.left_tilted)

    @property
    def subsequence(self) -> Tuple[Optional[int], ...]:
        return tuple(e.letter if e.color != 0 else None for e in self.edges)

    @property
    def color_sum(self) -> int:
        return sum(e.color for e in self.edges)

    def subsequence_str(self) -> str:
        return ",".join(BLANK if c is None else str(c) for c in self.subsequence)


@dataclass(frozen=True)
class SubwordTree:
    """
    The tree T(s, x) whose maximal paths enumerate the subsequences of s evaluating to x.

    Attributes:
        word (Word): The sequence s.
        x (GroupElement): Target element, carried by the root vertex.
        vertices (Tuple[TreeVertex, ...]): Indexed by vertex id.
        edges (Tuple[TreeEdge, ...]): One edge per non-root vertex.
        root (Optional[int]): Root vertex id, None for the empty tree.
    """

    word: Word
    x: GroupElement
    vertices: Tuple[TreeVertex, ...]
    edges: Tuple[TreeEdge, ...]
    root: Optional[int]

    @property
    def is_empty(self) -> bool:
        return self.root is None

    def edge_above(self) -> Dict[int, TreeEdge]:
        return {e.child: e for e in self.edges}

    def maximal_paths(self) -> List[TreePath]:
        """Root-to-leaf paths, left subtree first."""
        if self.root is None:
            return []
        above = self.edge_above()
        paths: List[TreePath] = []
        stack: List[Tuple[int, Tuple[TreeEdge, ...]]] = [(self.root, ())]
        while stack:
            vertex_id, upper = stack.pop()
            vertex = self.vertices[vertex_id]
            if not vertex.children:
                paths.append(TreePath(upper))
                continue
            for child in reversed(vertex.children):
                stack.append((child, (above[child],) + upper))
        return paths

    def to_graph(self) -> nx.DiGraph:
        g = nx.DiGraph()
        for v in self.vertices:
            g.add_node(v.id, level=v.level, ev=v.ev.word_str or "e")
        for e in self.edges:
            g.add_edge(e.child, e.parent, level=e.level, color=e.color, tilt=e.tilt, root=str(e.start_root))
        return g

    def __str__(self) -> str:
        return f"SubwordTree(word={list(self.word)}, x={self.x.word_str or 'e'}, vertices={len(self.vertices)})"

    def to_dict(self) -> SubwordTreeDict:
        return {
            "word": list(self.word),
            "x": self.x.word_str,
            "root": self.root,
            "vertices": [{"id": v.id, "level": v.level, "ev": v.ev.word_str, "children": list(v.children)} for v in self.vertices],
            "edges": [
                {
                    "child": e.child,
                    "parent": e.parent,
                    "level": e.level,
                    "letter": e.letter,
                    "color": e.color,
                    "tilt": e.tilt,
                    "root": str(e.start_root),
                }
                for e in self.edges
            ],
            "paths": [{"subsequence": p.subsequence_str(), "degree": p.degree} for p in self.maximal_paths()],
        }
