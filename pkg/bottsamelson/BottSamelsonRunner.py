import json
import logging
import os
import tempfile
from typing import Any, Optional, Tuple

from bottsamelson.compute.command_factory import run_command
from bottsamelson.constants import EXIT_NON_GKM, EXIT_OK, EXIT_USAGE, TOOL_VERSION
from bottsamelson.exceptions import BottSamelsonError, CacheError, InternalInvariant, NonGKMInput
from bottsamelson.model.CacheEntry import CacheEntry, cache_key
from bottsamelson.model.RunConfig import RunConfig


class BottSamelsonRunner:
    def __init__(self, config: RunConfig, logger: Optional[logging.Logger] = None):
        """
        Run one configured command with a persistent result cache.

        Args:
            config: Validated invocation
            logger: Logger for progress and cache messages
        """
        self.config = config
        self.logger = logger or logging.Logger("default")
        self.cache_dir = config.cache_dir

    def _cache_path(self, key: str) -> str:
        return os.path.join(self.cache_dir, f"{key}.json")

    def cache_get(self, key: str) -> Optional[CacheEntry]:
        """
        Look up a cache entry.

        Returns:
            The entry, or None on a miss, a version mismatch or a corrupt file

        Raises:
            CacheError: If the file exists but cannot be read
        """
        path = self._cache_path(key)
        if not os.path.exists(path):
            return None
        try:
            with open(path, "r", encoding="utf-8") as f:
                raw = f.read()
        except OSError as e:
            raise CacheError(f"Reading cache entry {path} failed: {e}") from e

        try:
            entry = CacheEntry.from_dict(json.loads(raw))
        except ValueError as e:
            self.logger.warning(f"Ignoring corrupt cache entry {path}: {e}")
            return None
        if entry.key != key:
            self.logger.warning(f"Ignoring cache entry {path} stored under key {entry.key}")
            return None
        if entry.version != TOOL_VERSION:
            self.logger.info(f"Cache entry {path} was written by version {entry.version}, recomputing")
            return None
        return entry

    def cache_put(self, entry: CacheEntry) -> None:
        """
        Write an entry atomically: a temporary file in the cache directory, then a rename.

        Raises:
            CacheError: If the directory or file cannot be written
        """
        try:
            os.makedirs(self.cache_dir, exist_ok=True)
            with tempfile.NamedTemporaryFile(
                "w", dir=self.cache_dir, suffix=".tmp", delete=False, encoding="utf-8"
            ) as tmp:
                json.dump(entry.to_dict(), tmp, sort_keys=True)
                tmp_path = tmp.name
            os.replace(tmp_path, self._cache_path(entry.key))
        except OSError as e:
            raise CacheError(f"Writing cache entry {entry.key} to {self.cache_dir} failed: {e}") from e

    def compute(self) -> Any:
        """Run the command and normalise the result to plain JSON types."""
        return json.loads(json.dumps(run_command(self.config, self.logger)))

    def result(self) -> Any:
        """
        The command's result, served from the cache when possible.

        Raises:
            CacheError: If ``verify_cache`` is set and a hit differs from recomputation
        """
        if not self.config.use_cache:
            return self.compute()

        key = cache_key(self.config.key_parts())
        entry = self.cache_get(key)
        if entry is not None:
            self.logger.info(f"Cache hit for {self.config.command} ({key[:12]})")
            if not self.config.verify_cache:
                return entry.value
            fresh = self.compute()
            if _canonical(fresh) != _canonical(entry.value):
                self.cache_put(CacheEntry(key, TOOL_VERSION, fresh))
                raise CacheError(f"Cache entry {key} differs from recomputation and was replaced")
            self.logger.info("Cache entry verified against recomputation")
            return fresh

        self.logger.info(f"Cache miss for {self.config.command} ({key[:12]})")
        value = self.compute()
        self.cache_put(CacheEntry(key, TOOL_VERSION, value))
        return value

    def render(self, value: Any) -> str:
        if isinstance(value, str):
            return value
        return json.dumps(value, indent=2 if self.config.pretty else None)

    def run(self) -> Tuple[int, str]:
        """
        Run the command and map failures to exit codes.

        Returns:
            The exit code and the text for standard output
        """
        try:
            return EXIT_OK, self.render(self.result())
        except NonGKMInput as e:
            self.logger.error(str(e))
            return EXIT_NON_GKM, self.render(_error_document(e))
        except InternalInvariant as e:
            self.logger.error(f"Internal invariant broken in {self.config.command}: {e}")
            return EXIT_USAGE, self.render(_error_document(e, internal=True))
        except (BottSamelsonError, ValueError) as e:
            self.logger.error(str(e))
            return EXIT_USAGE, self.render(_error_document(e))


def _canonical(value: Any) -> str:
    return json.dumps(value, sort_keys=True)


def _error_document(e: Exception, internal: bool = False) -> dict:
    return {"error": type(e).__name__, "message": str(e), "internal": internal}
