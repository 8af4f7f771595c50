"""Per-module property profiles and per-suite verification reports.

Report objects keep wall-clock runtimes for console output, but the
serialized bundles omit them so repeated runs are byte-identical.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field

from .config import CACHE_ENV_VAR, DEFAULT_LIMITS, Limits
from .cosingular import classify, zbar, zbar2
from .errors import SizeLimitExceeded
from .lattice import is_small, radical, socle, submodules
from .modules import FiniteModule, end_ring, submodule_as_module
from .serialize import content_hash, stable_dumps
from .structure import (
    coclosed_keys,
    is_amply_supplemented,
    is_injective,
    is_lifting,
    is_small_module,
    summand_keys,
)
from .tpredicates import (
    has_sssp_in_zbar2,
    is_dual_baer,
    is_regular,
    is_semisimple,
    is_t_dual_baer,
    is_t_lifting,
    k_module_class,
    t_coclosed_keys,
    t_small_keys,
)

PREDICATE_IDS = (
    "amply_supplemented",
    "lifting",
    "t_lifting",
    "dual_baer",
    "t_dual_baer",
    "k",
    "t_k",
    "strongly_t_k",
    "regular",
    "semisimple",
    "injective",
    "small",
    "noncosingular",
    "cosingular",
    "sssp_in_zbar2",
)


@dataclass
class PropertyReport:
    module_desc: str
    orders: tuple[int, ...]
    size: int
    lattice_size: int
    end_size: int | None
    predicates: dict[str, bool | None]
    cosingular: dict
    radical_size: int
    socle_size: int
    submodule_counts: dict[str, int]
    flags: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "module": self.module_desc,
            "orders": list(self.orders),
            "size": self.size,
            "lattice_size": self.lattice_size,
            "end_size": self.end_size,
            "predicates": {k: self.predicates[k] for k in sorted(self.predicates)},
            "cosingular": self.cosingular,
            "radical_size": self.radical_size,
            "socle_size": self.socle_size,
            "submodule_counts": self.submodule_counts,
            "flags": self.flags,
        }


@dataclass
class TheoremReport:
    suite: str
    ring_id: str
    scope: str
    instances: list[dict]
    summary: dict
    runtime: float = 0.0

    @property
    def disagreements(self) -> int:
        return self.summary.get("disagreements", 0)

    def to_json(self, include_runtime: bool = False) -> dict:
        out = {
            "suite": self.suite,
            "ring": self.ring_id,
            "scope": self.scope,
            "instances": self.instances,
            "summary": self.summary,
        }
        if include_runtime:
            out["runtime_seconds"] = self.runtime
        return out


_profile_cache: dict = {}


def profile_module(module: FiniteModule, desc: str | None = None,
                   limits: Limits = DEFAULT_LIMITS) -> PropertyReport:
    """Every predicate of the catalog evaluated on one module, with
    internal-consistency flags."""
    cached = _profile_cache.get(module.key)
    if cached is not None:
        return cached
    loaded = _disk_cache_load(module)
    if loaded is not None:
        _profile_cache[module.key] = loaded
        return loaded
    lat = submodules(module, limits)
    prof = classify(module, limits)
    try:
        end_size = end_ring(module, limits).size
    except SizeLimitExceeded:
        end_size = None
    preds: dict[str, bool | None] = {}
    preds["amply_supplemented"] = is_amply_supplemented(module)
    preds["lifting"] = is_lifting(module)
    preds["t_lifting"] = is_t_lifting(module, limits)
    preds["dual_baer"] = is_dual_baer(module, limits) if end_size is not None else None
    preds["t_dual_baer"] = is_t_dual_baer(module, limits) if end_size is not None else None
    if end_size is not None:
        kc = k_module_class(module, limits)
    else:
        kc = {"k": None, "t_k": None, "strongly_t_k": None}
    preds.update(kc)
    preds["regular"] = is_regular(module)
    preds["semisimple"] = is_semisimple(module)
    preds["injective"] = is_injective(module, limits)
    preds["small"] = is_small_module(module, limits)
    preds["noncosingular"] = prof.zbar.is_full()
    preds["cosingular"] = prof.zbar.is_zero()
    preds["sssp_in_zbar2"] = has_sssp_in_zbar2(module, limits)

    small_keys = frozenset(s.key for s in lat.nodes if is_small(s))
    tsmall = t_small_keys(module, limits)
    counts = {
        "submodules": len(lat.nodes),
        "small": len(small_keys),
        "t_small": len(tsmall),
        "coclosed": len(coclosed_keys(module)),
        "t_coclosed": len(t_coclosed_keys(module, limits)),
        "summands": len(summand_keys(module)),
    }

    flags: list[str] = []
    if preds["lifting"] and not preds["t_lifting"]:
        flags.append("lifting without t_lifting")
    if preds["t_lifting"] and preds["t_dual_baer"] is False and preds["amply_supplemented"]:
        flags.append("t_lifting without t_dual_baer")
    if preds["noncosingular"] and small_keys != tsmall:
        flags.append("noncosingular but t_small differs from small")

    report = PropertyReport(
        module_desc=desc or repr(module),
        orders=module.component_orders,
        size=module.size,
        lattice_size=len(lat.nodes),
        end_size=end_size,
        predicates=preds,
        cosingular={
            "zbar_size": prof.zbar.size,
            "zbar2_size": prof.zbar2.size,
            "class": prof.classification,
        },
        radical_size=radical(module).size,
        socle_size=socle(module).size,
        submodule_counts=counts,
        flags=flags,
    )
    _profile_cache[module.key] = report
    _disk_cache_store(module, report)
    return report


# -- optional disk cache -------------------------------------------------------


def _cache_dir() -> str | None:
    path = os.environ.get(CACHE_ENV_VAR)
    if not path:
        return None
    os.makedirs(path, exist_ok=True)
    return path


def _disk_cache_load(module: FiniteModule) -> PropertyReport | None:
    path = _cache_dir()
    if path is None:
        return None
    fname = os.path.join(path, f"profile-{content_hash(module)}.json")
    if not os.path.exists(fname):
        return None
    import json

    with open(fname) as fh:
        data = json.load(fh)
    return PropertyReport(
        module_desc=data["module"],
        orders=tuple(data["orders"]),
        size=data["size"],
        lattice_size=data["lattice_size"],
        end_size=data["end_size"],
        predicates=data["predicates"],
        cosingular=data["cosingular"],
        radical_size=data["radical_size"],
        socle_size=data["socle_size"],
        submodule_counts=data["submodule_counts"],
        flags=data["flags"],
    )


def _disk_cache_store(module: FiniteModule, report: PropertyReport) -> None:
    path = _cache_dir()
    if path is None:
        return
    fname = os.path.join(path, f"profile-{content_hash(module)}.json")
    with open(fname, "w") as fh:
        fh.write(stable_dumps(report.to_json()))
