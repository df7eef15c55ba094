from typing import Any, Dict, List, Optional, TypedDict, Union

JsonScalar = Union[int, str]


class MultiPolyTermDict(TypedDict):
    exp: List[int]
    coeff: JsonScalar


class MultiPolyDict(TypedDict):
    vars: List[str]
    terms: List[MultiPolyTermDict]
    display: str


class LaurentPolyDict(TypedDict):
    coeffs: Dict[str, int]
    display: str


class CartanDatumDict(TypedDict):
    type: str
    rank: int
    affine: bool
    cartan: List[List[int]]


class AffineRootDict(TypedDict):
    root: str
    finite: List[int]
    level: int
    weights: List[int]


class GroupElementDict(TypedDict):
    word: str
    length: int


# ---------------------------------------------------------------------


class MomentGraphEdgeDict(TypedDict):
    start: str
    end: str
    root: str
    label: List[JsonScalar]


class MomentGraphDict(TypedDict):
    field: str
    top: Optional[str]
    vertices: List[GroupElementDict]
    edges: List[MomentGraphEdgeDict]


class GkmViolationDict(TypedDict):
    vertex: str
    first: str
    second: str


class GkmReportDict(TypedDict):
    char: int
    passed: bool
    violations: List[GkmViolationDict]


class HeckeTermDict(TypedDict):
    word: str
    coeff: Dict[str, int]


class HeckeElementDict(TypedDict):
    basis: str
    terms: List[HeckeTermDict]


# ---------------------------------------------------------------------


class TreeVertexDict(TypedDict):
    id: int
    level: int
    ev: str
    children: List[int]


class TreeEdgeDict(TypedDict):
    child: int
    parent: int
    level: int
    letter: int
    color: int
    tilt: str
    root: str


class TreePathDict(TypedDict):
    subsequence: str
    degree: int


class SubwordTreeDict(TypedDict):
    word: List[int]
    x: str
    root: Optional[int]
    vertices: List[TreeVertexDict]
    edges: List[TreeEdgeDict]
    paths: List[TreePathDict]


class GradedMatrixDict(TypedDict):
    field: str
    row_degrees: List[int]
    col_degrees: List[int]
    entries: List[List[str]]


class SummandDict(TypedDict):
    z: str
    r: int
    mult: int


class CharacterReportDict(TypedDict):
    w: str
    char: int
    holds: bool
    mismatches: List[str]


class CensusDict(TypedDict):
    type: str
    rank: int
    n: int
    count: int


# ---------------------------------------------------------------------


class CacheEntryDict(TypedDict):
    key: str
    version: str
    value: Any
