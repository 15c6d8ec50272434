"""Deduplicated on-disk graph collections keyed by canonical form.

A store on disk is a file of sorted, deduplicated graph6 lines plus a JSON
manifest recording the count, the family parameters it claims to hold, and
a content digest.  Stores merge with set semantics, so the final state is
independent of insertion order.
"""
from __future__ import annotations

import hashlib
import json
import os
from dataclasses import dataclass, field
from typing import Dict, Iterable, Iterator, Optional

from .canon import canonical_form
from .graphs import Graph, parse_graph6


@dataclass
class GraphStore:
    keys: set = field(default_factory=set)

    def insert(self, g: Graph) -> bool:
        """Set-semantics insert; returns True when newly inserted."""
        key = canonical_form(g)
        if key in self.keys:
            return False
        self.keys.add(key)
        return True

    def insert_key(self, key: str) -> bool:
        if key in self.keys:
            return False
        self.keys.add(key)
        return True

    def __contains__(self, item) -> bool:
        key = canonical_form(item) if isinstance(item, Graph) else item
        return key in self.keys

    def __len__(self) -> int:
        return len(self.keys)

    def __iter__(self) -> Iterator[str]:
        return iter(sorted(self.keys))

    def graphs(self) -> Iterator[Graph]:
        for key in sorted(self.keys):
            yield parse_graph6(key)

    def merge(self, other: "GraphStore") -> "GraphStore":
        return GraphStore(self.keys | other.keys)

    def digest(self) -> str:
        h = hashlib.sha256()
        for key in sorted(self.keys):
            h.update(key.encode("ascii"))
            h.update(b"\n")
        return h.hexdigest()

    # -- persistence ---------------------------------------------------

    def save(self, path: str, params: Optional[Dict] = None) -> Dict:
        lines = sorted(self.keys)
        with open(path, "w", encoding="ascii") as fh:
            for key in lines:
                fh.write(key + "\n")
        manifest = {
            "count": len(lines),
            "digest": self.digest(),
            "params": params or {},
        }
        with open(manifest_path(path), "w", encoding="utf-8") as fh:
            json.dump(manifest, fh, indent=2, sort_keys=True)
            fh.write("\n")
        return manifest

    @classmethod
    def load(cls, path: str, canonicalize: bool = False) -> "GraphStore":
        """Read a graph6 file.  Lines written by this package are already
        canonical keys; external files need ``canonicalize=True``."""
        keys = set()
        with open(path, "r", encoding="ascii") as fh:
            for line in fh:
                line = line.strip()
                if not line or line.startswith(">>graph6<<"):
                    line = line.removeprefix(">>graph6<<")
                    if not line:
                        continue
                keys.add(canonical_form(parse_graph6(line)) if canonicalize else line)
        return cls(keys)


def manifest_path(store_path: str) -> str:
    return store_path + ".manifest.json"


def load_manifest(store_path: str) -> Optional[Dict]:
    try:
        with open(manifest_path(store_path), "r", encoding="utf-8") as fh:
            return json.load(fh)
    except FileNotFoundError:
        return None


def store_matches_manifest(store_path: str) -> bool:
    """True iff the store file exists and its content digest matches the
    sidecar manifest (used for idempotent stage re-runs)."""
    manifest = load_manifest(store_path)
    if manifest is None or not os.path.exists(store_path):
        return False
    return GraphStore.load(store_path).digest() == manifest.get("digest")
