import os
from dataclasses import dataclass
from typing import Any, Dict, Optional

from bottsamelson.compute.rootsys import build_cartan
from bottsamelson.constants import CACHE_DIR_ENV, COMMANDS, DEFAULT_CACHE_DIR, FORMATS
from bottsamelson.model.CartanDatum import CartanDatum
from bottsamelson.model.Field import Field
from bottsamelson.model.GroupElement import Word, format_word


def resolve_cache_dir(flag: Optional[str]) -> str:
    """The ``--cache-dir`` flag wins over the CACHE_DIR environment variable, then the default."""
    return os.path.expanduser(flag or os.environ.get(CACHE_DIR_ENV) or DEFAULT_CACHE_DIR)


@dataclass(frozen=True)
class RunConfig:
    """
    One command line invocation.

    Attributes:
        command (str): Subcommand name.
        type_label (str): Cartan type.
        rank (int): Rank of the finite root system.
        affine (bool): Work in the affine Weyl group.
        characteristic (int): 0 or an odd prime.
        word (Optional[Word]): The sequence s.
        x (Optional[Word]): A word for the target element.
        n (int): Bound for reachability.
        cache_dir (str): Directory of the result cache.
        threads (int): Worker threads for census.
        pretty (bool): Indent JSON output.
        allow_nonreduced (bool): Decompose non-reduced words in positive characteristic.
        verify_cache (bool): Recompute cache hits and compare.
        use_cache (bool): Read and write the cache.
        format (str): Export format of the graph command.
        dot (bool): Emit trees as DOT text.
        prune (bool): Prune the reachability search.
    """

    command: str
    type_label: str
    rank: int
    affine: bool = False
    characteristic: int = 0
    word: Optional[Word] = None
    x: Optional[Word] = None
    n: int = 3
    cache_dir: str = DEFAULT_CACHE_DIR
    threads: int = 1
    pretty: bool = False
    allow_nonreduced: bool = False
    verify_cache: bool = False
    use_cache: bool = True
    format: str = "json"
    dot: bool = False
    prune: bool = True

    def __post_init__(self) -> None:
        if self.command not in COMMANDS:
            raise ValueError(f"Command must be one of: {COMMANDS}")
        if self.format not in FORMATS:
            raise ValueError(f"Format must be one of: {FORMATS}")
        if self.threads < 1:
            raise ValueError("Thread count must be at least 1")
        if self.n < 1:
            raise ValueError("Reachability bound n must be at least 1")
        Field(self.characteristic)
        datum = self.datum()
        allowed = set(datum.simple_indices)
        for name, word in (("word", self.word), ("x", self.x)):
            if word is None:
                continue
            bad = [i for i in word if i not in allowed]
            if bad:
                raise ValueError(f"--{name} uses indices {bad} not valid for {datum.name}, allowed {sorted(allowed)}")

    def datum(self) -> CartanDatum:
        return build_cartan(self.type_label, self.rank, self.affine)

    def field(self) -> Field:
        return Field(self.characteristic)

    def key_parts(self) -> Dict[str, Any]:
        """Semantic inputs that determine the result of the command."""
        return {
            "type": self.type_label.upper(),
            "rank": self.rank,
            "affine": self.affine,
            "char": self.characteristic,
            "command": self.command,
            "word": format_word(self.word) if self.word is not None else None,
            "x": format_word(self.x) if self.x is not None else None,
            "n": self.n,
            "format": self.format,
            "dot": self.dot,
            "allow_nonreduced": self.allow_nonreduced,
        }
