"""JSON wire formats for rings, modules, lattices and reports, plus the
content hashes used as cache keys.

All integers are decimal; coordinates are little-endian in basis order.
"""

from __future__ import annotations

import hashlib
import json

from .errors import InvalidConfig
from .modules import FiniteModule, Submodule
from .rings import FiniteRing, builtin_ring, ring_from_constants


def stable_dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=1)


def ring_to_json(ring: FiniteRing) -> dict:
    return {
        "orders": list(ring.component_orders),
        "constants": [[list(v) for v in row] for row in ring.constants],
        "one": list(ring.one),
    }


def ring_from_json(obj: dict, name: str | None = None) -> FiniteRing:
    return ring_from_constants(obj["orders"], obj["constants"], obj["one"], name=name)


def module_to_json(module: FiniteModule, ring_id: str | None = None) -> dict:
    ring = ring_id if ring_id is not None else ring_to_json(module.ring)
    return {
        "ring": ring,
        "orders": list(module.component_orders),
        "action": [[list(row) for row in mat] for mat in module.action],
    }


def module_from_json(obj: dict, ring: FiniteRing | None = None) -> FiniteModule:
    if ring is None:
        ref = obj["ring"]
        if isinstance(ref, str):
            try:
                ring = builtin_ring(ref)
            except KeyError as exc:
                raise InvalidConfig(str(exc)) from None
        else:
            ring = ring_from_json(ref)
    return FiniteModule(ring, obj["orders"], obj["action"])


def submodule_to_json(sub: Submodule) -> dict:
    return {"size": sub.size, "elements": list(sub.key)}


def lattice_to_hasse_json(lattice) -> dict:
    """Nodes in canonical order with the list of covered node indices."""
    return {
        "nodes": [
            {"index": i, "size": s.size, "elements": list(s.key)}
            for i, s in enumerate(lattice.nodes)
        ],
        "covers": lattice.covers(),
    }


def content_hash(obj: FiniteRing | FiniteModule) -> str:
    if isinstance(obj, FiniteRing):
        payload = {"kind": "ring", "data": ring_to_json(obj)}
    else:
        payload = {
            "kind": "module",
            "ring": ring_to_json(obj.ring),
            "orders": list(obj.component_orders),
            "action": [[list(row) for row in mat] for mat in obj.action],
        }
    blob = json.dumps(payload, sort_keys=True, separators=(",", ":")).encode()
    return hashlib.sha256(blob).hexdigest()
