"""Submodule lattice enumeration and the basic relative predicates:
sums, intersections, small, essential, radical, socle.

The lattice is produced by closing the set of cyclic spans under pairwise
sums, which is complete because every submodule is a finite sum of cyclic
ones.  Smallness has two implementations: the definitional scan over all
proper submodules, and the radical fast path A <= Rad(M), which agree
over finite rings (every finite ring is perfect); the agreement itself is
part of the oracle suite rather than assumed silently.
"""

from __future__ import annotations

from typing import Literal

from .config import DEFAULT_LIMITS, Limits
from .errors import ParentMismatch, SizeLimitExceeded
from .modules import FiniteModule, Submodule, regular_module, span

_lattice_cache: dict = {}
_radical_cache: dict = {}
_socle_cache: dict = {}
_jacobson_cache: dict = {}


class SubmoduleLattice:
    """All submodules of a module in canonical order, with memoized joins
    and meets keyed by node index."""

    def __init__(self, parent: FiniteModule, nodes: list[Submodule]):
        self.parent = parent
        self.nodes = tuple(sorted(nodes, key=lambda s: (s.size, s.key)))
        self.index = {s.key: i for i, s in enumerate(self.nodes)}
        self.zero_index = self.index[parent.zero_submodule().key]
        self.top_index = self.index[tuple(sorted(parent.elements()))]
        self._joins: dict[tuple[int, int], int] = {}
        self._meets: dict[tuple[int, int], int] = {}
        self._covers: list[list[int]] | None = None

    def __len__(self) -> int:
        return len(self.nodes)

    def __iter__(self):
        return iter(self.nodes)

    def node_index(self, sub: Submodule) -> int:
        try:
            return self.index[sub.key]
        except KeyError:
            raise ParentMismatch("submodule is not a node of this lattice") from None

    def join(self, i: int, j: int) -> int:
        if i > j:
            i, j = j, i
        got = self._joins.get((i, j))
        if got is None:
            got = self.index[_sum_key(self.parent, self.nodes[i], self.nodes[j])]
            self._joins[(i, j)] = got
        return got

    def meet(self, i: int, j: int) -> int:
        if i > j:
            i, j = j, i
        got = self._meets.get((i, j))
        if got is None:
            inter = self.nodes[i].elements & self.nodes[j].elements
            got = self.index[tuple(sorted(inter))]
            self._meets[(i, j)] = got
        return got

    def covers(self) -> list[list[int]]:
        """Hasse diagram: for each node, the indices it covers."""
        if self._covers is None:
            out: list[list[int]] = []
            for i, a in enumerate(self.nodes):
                below = [j for j, b in enumerate(self.nodes)
                         if b.size < a.size and b.elements < a.elements]
                covered = [
                    j for j in below
                    if not any(
                        self.nodes[k].size > self.nodes[j].size
                        and self.nodes[j].elements < self.nodes[k].elements
                        for k in below
                    )
                ]
                out.append(sorted(covered))
            self._covers = out
        return self._covers

    def maximal_indices(self) -> list[int]:
        top = self.nodes[self.top_index]
        out = []
        for i, a in enumerate(self.nodes):
            if a.size == top.size:
                continue
            if not any(
                b.size > a.size and b.size < top.size and a.elements < b.elements
                for b in self.nodes
            ):
                out.append(i)
        return out

    def atom_indices(self) -> list[int]:
        out = []
        for i, a in enumerate(self.nodes):
            if a.size == 1:
                continue
            if not any(1 < b.size < a.size and b.elements < a.elements for b in self.nodes):
                out.append(i)
        return out

    def subnode_indices(self, i: int) -> list[int]:
        """Indices of all nodes contained in node i (including i)."""
        a = self.nodes[i]
        return [j for j, b in enumerate(self.nodes) if b.elements <= a.elements]


def _sum_key(parent: FiniteModule, a: Submodule, b: Submodule) -> tuple[int, ...]:
    ws = parent.workspace()
    if a.size * b.size <= 1 << 16:
        add = ws.add
        out = {add(x, y) for x in a.elements for y in b.elements}
        return tuple(sorted(out))
    return tuple(sorted(ws.span(a.generators() + b.generators())))


def sum_submodules(a: Submodule, b: Submodule) -> Submodule:
    """Lattice join A + B."""
    if a.parent != b.parent:
        raise ParentMismatch("sum needs a common parent")
    gens = tuple(a.generators()) + tuple(b.generators())
    return Submodule(a.parent, frozenset(_sum_key(a.parent, a, b)), gens=gens)


def intersect_submodules(a: Submodule, b: Submodule) -> Submodule:
    """Lattice meet A & B."""
    if a.parent != b.parent:
        raise ParentMismatch("intersection needs a common parent")
    return Submodule(a.parent, a.elements & b.elements)


def submodules(module: FiniteModule, limits: Limits = DEFAULT_LIMITS) -> SubmoduleLattice:
    """Complete submodule lattice (cached per module presentation, and on
    disk when a cache directory is configured)."""
    got = _lattice_cache.get(module.key)
    if got is not None:
        return got
    if module.size > limits.max_module:
        raise SizeLimitExceeded(f"module of size {module.size} over lattice limit")
    loaded = _disk_load(module)
    if loaded is not None:
        return _lattice_cache.setdefault(module.key, loaded)
    ws = module.workspace()
    seen: dict[tuple[int, ...], Submodule] = {}
    zero = module.zero_submodule()
    seen[zero.key] = zero
    for code in range(1, module.size):
        cyc = ws.cyclic_span(code)
        key = tuple(sorted(cyc))
        if key not in seen:
            seen[key] = Submodule(module, cyc, gens=(code,))
    worklist = list(seen.values())
    while worklist:
        nxt = []
        current = list(seen.values())
        for a in worklist:
            for b in current:
                if a.elements <= b.elements or b.elements <= a.elements:
                    continue
                key = _sum_key(module, a, b)
                if key not in seen:
                    gens = _prune_generators(module, a.generators() + b.generators(),
                                             len(key))
                    new = Submodule(module, frozenset(key), gens=gens)
                    seen[key] = new
                    nxt.append(new)
        worklist = nxt
    lattice = SubmoduleLattice(module, list(seen.values()))
    _disk_store(module, lattice)
    return _lattice_cache.setdefault(module.key, lattice)


def _cache_path(module: FiniteModule) -> str | None:
    import os

    root = os.environ.get("MODLAB_CACHE")
    if not root:
        return None
    from .serialize import content_hash

    os.makedirs(root, exist_ok=True)
    return os.path.join(root, f"lattice-{content_hash(module)}.json")


def _disk_load(module: FiniteModule) -> SubmoduleLattice | None:
    import json
    import os

    path = _cache_path(module)
    if path is None or not os.path.exists(path):
        return None
    with open(path) as fh:
        data = json.load(fh)
    nodes = [
        Submodule(module, frozenset(entry["elements"]),
                  gens=tuple(entry["gens"]))
        for entry in data["nodes"]
    ]
    return SubmoduleLattice(module, nodes)


def _disk_store(module: FiniteModule, lattice: SubmoduleLattice) -> None:
    import json

    path = _cache_path(module)
    if path is None:
        return
    payload = {
        "nodes": [
            {"elements": list(node.key), "gens": list(node.generators())}
            for node in lattice.nodes
        ]
    }
    with open(path, "w") as fh:
        json.dump(payload, fh)


def _prune_generators(module: FiniteModule, gens: tuple[int, ...], target_size: int) -> tuple[int, ...]:
    if len(gens) <= 4:
        return gens
    ws = module.workspace()
    kept: list[int] = []
    spanned = {0}
    for g in gens:
        if g in spanned:
            continue
        kept.append(g)
        spanned = ws.span(kept)
        if len(spanned) == target_size:
            break
    return tuple(kept)


def jacobson_radical(ring) -> frozenset[int]:
    """Element codes of J(R): intersection of the maximal right ideals of
    the regular module."""
    got = _jacobson_cache.get(ring.key)
    if got is None:
        reg = regular_module(ring)
        lat = submodules(reg)
        elems = frozenset(reg.elements())
        for i in lat.maximal_indices():
            elems = elems & lat.nodes[i].elements
        got = elems
        _jacobson_cache[ring.key] = got
    return got


def radical(module: FiniteModule) -> Submodule:
    """Rad(M) = M * J(R), also the sum of all small submodules."""
    got = _radical_cache.get(module.key)
    if got is not None:
        return got
    ring = module.ring
    jac = jacobson_radical(ring)
    ws = module.workspace()
    products = set()
    for j in jac:
        rcoords = ring.decode(j)
        if not any(rcoords):
            continue
        for x in module.elements():
            products.add(ws.act(x, rcoords))
    sub = Submodule(module, frozenset(ws.additive_closure(products)))
    _radical_cache[module.key] = sub
    return sub


def radical_of_subset(module: FiniteModule, codes: frozenset[int]) -> frozenset[int]:
    """Element codes of Rad(X) = X * J(R) for an action-closed subset X,
    computed in the ambient coordinates."""
    ring = module.ring
    jac = jacobson_radical(ring)
    ws = module.workspace()
    products = set()
    for j in jac:
        rcoords = ring.decode(j)
        if not any(rcoords):
            continue
        for x in codes:
            products.add(ws.act(x, rcoords))
    return frozenset(ws.additive_closure(products))


def socle(module: FiniteModule) -> Submodule:
    """Soc(M): sum of the atoms of the lattice."""
    got = _socle_cache.get(module.key)
    if got is not None:
        return got
    lat = submodules(module)
    ws = module.workspace()
    gens: list[int] = []
    for i in lat.atom_indices():
        gens.extend(lat.nodes[i].generators())
    sub = Submodule(module, frozenset(ws.span(gens)), gens=tuple(gens))
    _socle_cache[module.key] = sub
    return sub


def is_small(sub: Submodule, module: FiniteModule | None = None,
             method: Literal["radical", "scan"] = "radical") -> bool:
    """A << M: no proper submodule B has A + B = M.

    ``radical`` uses A <= Rad(M) (valid over finite rings since the
    radical of every module is small); ``scan`` is the definitional
    check over the full lattice.
    """
    parent = sub.parent
    if module is not None and module != parent:
        raise ParentMismatch("submodule does not live in the given module")
    if method == "radical":
        return sub.elements <= radical(parent).elements
    lat = submodules(parent)
    i = lat.node_index(sub)
    top = lat.top_index
    for j, node in enumerate(lat.nodes):
        if j == top:
            continue
        if lat.join(i, j) == top:
            return False
    return True


def is_small_within(module: FiniteModule, inner: frozenset[int], outer: frozenset[int]) -> bool:
    """Smallness of one code set inside another, both action-closed in the
    same ambient module: inner <= Rad(outer)."""
    return inner <= radical_of_subset(module, outer)


def is_essential(sub: Submodule, module: FiniteModule | None = None) -> bool:
    """A is essential iff it meets every nonzero cyclic submodule."""
    parent = sub.parent
    if module is not None and module != parent:
        raise ParentMismatch("submodule does not live in the given module")
    ws = parent.workspace()
    elems = sub.elements
    for code in range(1, parent.size):
        cyc = ws.cyclic_span(code)
        if len(cyc & elems) == 1:
            return False
    return True
