"""The cosingularity radical and its square: the intersection of all
submodules with small quotient, iterated once.

The reject-style definition over the class of all small modules reduces
to the finite intersection of {N <= M : M/N is a small module}, because
any map into a small module factors through such a quotient; the
containment of the radical in every kernel of such a map is regression
tested rather than assumed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .config import DEFAULT_LIMITS, Limits
from .lattice import submodules
from .modules import (
    FiniteModule,
    Submodule,
    find_isomorphism,
    quotient_module,
    submodule_as_module,
)
from .structure import is_small_module

_zbar_cache: dict = {}
_zbar_reps: dict = {}
_zbar2_cache: dict = {}


@dataclass
class CosingularProfile:
    zbar: Submodule
    zbar2: Submodule
    classification: str  # cosingular | noncosingular | mixed
    small_quotient_witnesses: list[Submodule]


def _zbar_fast(module: FiniteModule, limits: Limits) -> Submodule:
    lat = submodules(module)
    current = frozenset(module.elements())
    # ascending size: once N contains the running intersection it cannot
    # shrink it, so skip the quotient computation entirely
    for node in lat.nodes:
        if current <= node.elements:
            continue
        q, _ = quotient_module(module, node)
        if is_small_module(q, limits):
            current = current & node.elements
    return Submodule(module, current)


def _zbar_full_witnesses(module: FiniteModule, limits: Limits) -> list[Submodule]:
    lat = submodules(module)
    out = []
    for node in lat.nodes:
        q, _ = quotient_module(module, node)
        if is_small_module(q, limits):
            out.append(node)
    return out


def zbar(module: FiniteModule, limits: Limits = DEFAULT_LIMITS) -> Submodule:
    """Intersection of all submodules with small quotient.  Equals the
    whole module exactly when no proper quotient is small."""
    got = _zbar_cache.get(module.key)
    if got is not None:
        return got
    inv = (module.ring.key, tuple(sorted(module.component_orders)))
    for rep, rep_sub_key in _zbar_reps.get(inv, ()):
        iso = find_isomorphism(rep, module, limits)
        if iso is not None:
            mapped = Submodule(module, iso.restrict_codes(rep_sub_key))
            _zbar_cache[module.key] = mapped
            return mapped
    sub = _zbar_fast(module, limits)
    _zbar_cache[module.key] = sub
    _zbar_reps.setdefault(inv, []).append((module, sub.key))
    return sub


def zbar_witnesses(module: FiniteModule, limits: Limits = DEFAULT_LIMITS) -> list[Submodule]:
    """All submodules with small quotient (full scan, no pruning)."""
    return _zbar_full_witnesses(module, limits)


def zbar2(module: FiniteModule, limits: Limits = DEFAULT_LIMITS) -> Submodule:
    """The radical applied to its own value, pulled back along the
    inclusion."""
    got = _zbar2_cache.get(module.key)
    if got is not None:
        return got
    z = zbar(module, limits)
    if z.is_full():
        _zbar2_cache[module.key] = z
        return z
    inner = submodule_as_module(z)
    w = zbar(inner.module, limits)
    out = Submodule(module, inner.push_out(w.elements))
    _zbar2_cache[module.key] = out
    return out


def is_noncosingular(module: FiniteModule, limits: Limits = DEFAULT_LIMITS) -> bool:
    return zbar(module, limits).is_full()


def is_cosingular(module: FiniteModule, limits: Limits = DEFAULT_LIMITS) -> bool:
    return zbar(module, limits).is_zero()


def classify(module: FiniteModule, limits: Limits = DEFAULT_LIMITS) -> CosingularProfile:
    z = zbar(module, limits)
    z2 = zbar2(module, limits)
    if z.is_full() and module.size > 1:
        cls = "noncosingular"
    elif z.is_zero():
        cls = "cosingular"
    else:
        cls = "mixed"
    if module.size == 1:
        cls = "cosingular"
    return CosingularProfile(z, z2, cls, zbar_witnesses(module, limits))
