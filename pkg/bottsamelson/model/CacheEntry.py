import hashlib
import json
from dataclasses import dataclass
from typing import Any, Dict, Mapping

from bottsamelson.constants import TOOL_VERSION
from bottsamelson.model.types import CacheEntryDict


def cache_key(parts: Mapping[str, Any], version: str = TOOL_VERSION) -> str:
    """sha256 of the canonical JSON of the inputs and the tool version."""
    canonical = json.dumps({"inputs": dict(parts), "version": version}, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()


@dataclass(frozen=True)
class CacheEntry:
    """
    A cached command result.

    Attributes:
        key (str): Content digest of the inputs.
        version (str): Tool version that produced the value.
        value (Any): JSON result.
    """

    key: str
    version: str
    value: Any

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "CacheEntry":
        """
        Raises:
            ValueError: If a field is missing.
        """
        try:
            return cls(str(data["key"]), str(data["version"]), data["value"])
        except (KeyError, TypeError) as e:
            raise ValueError(f"Malformed cache entry: {e}") from e

    def to_dict(self) -> CacheEntryDict:
        return {"key": self.key, "version": self.version, "value": self.value}
