"""On-disk structure constants: one JSON file per (k, r, t, parameter digest).

Files are replaced atomically, so concurrent writers of the same products agree and readers
never see a partial file. Anything unreadable is dropped and rebuilt.
"""

from __future__ import annotations

import json
import logging
import os
import tempfile
from fractions import Fraction
from pathlib import Path

log = logging.getLogger(__name__)

FORMAT = 1

# product key "a*b" -> {monomial key: "p/q"}
Table = dict[str, dict[str, str]]


class StructureCache:
    def __init__(self, directory: Path | str | None, k: int, r: int, t: int, digest: str):
        self.path = None if directory is None else Path(directory) / f"k{k}-r{r}-t{t}-{digest}.json"
        self.key = {"k": k, "r": r, "t": t, "digest": digest}
        self.table: Table = {}
        self.dirty = False

    def load(self) -> Table:
        if self.path is None or not self.path.is_file():
            return self.table
        try:
            data = json.loads(self.path.read_text())
            if data.get("format") != FORMAT or data.get("key") != self.key:
                raise ValueError("key or format mismatch")
            self.table.update(data["products"])
            log.debug("loaded %d products from %s", len(data["products"]), self.path)
        except (OSError, ValueError, KeyError, TypeError) as exc:
            log.debug("ignoring cache file %s: %s", self.path, exc)
        return self.table

    def get(self, key: str) -> dict[str, Fraction] | None:
        hit = self.table.get(key)
        return None if hit is None else {m: Fraction(c) for m, c in hit.items()}

    def put(self, key: str, value: dict[str, Fraction]) -> None:
        if key not in self.table:
            self.table[key] = {m: str(c) for m, c in value.items()}
            self.dirty = True

    def save(self) -> Path | None:
        if self.path is None or not self.dirty:
            return None
        self.path.parent.mkdir(parents=True, exist_ok=True)
        payload = json.dumps({"format": FORMAT, "key": self.key, "products": self.table}, sort_keys=True)
        fd, tmp = tempfile.mkstemp(dir=self.path.parent, prefix=".tmp-", suffix=".json")
        try:
            with os.fdopen(fd, "w") as fh:
                fh.write(payload)
            os.replace(tmp, self.path)
        except BaseException:
            Path(tmp).unlink(missing_ok=True)
            raise
        self.dirty = False
        log.debug("saved %d products to %s", len(self.table), self.path)
        return self.path
