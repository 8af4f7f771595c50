"""Structural module theory: direct summands, supplements, coclosed
submodules, lifting, character duality, projective covers, injective
hulls, injectivity, and the small-module predicate.

Duality is the character pairing into Z/exp(M): it is involutive on the
nose in this presentation, swaps projective covers with injective hulls,
and turns small kernels into essential images.  Injective hulls are
computed as the dual of the projective cover of the dual, then
post-verified (essential embedding, injectivity by the right-ideal
extension test).
"""

from __future__ import annotations

from dataclasses import dataclass

from .config import DEFAULT_LIMITS, Limits
from .errors import IdempotentSearchExceeded, NotSubmodule, ParentMismatch
from .lattice import (
    is_small_within,
    is_essential,
    radical,
    submodules,
)
from .modules import (
    FiniteModule,
    ModuleHom,
    Submodule,
    SubmoduleModule,
    direct_sum_with_maps,
    end_ring,
    hom_set,
    identity_hom,
    is_isomorphic,
    quotient_module,
    regular_module,
    span,
    submodule_as_module,
    zero_module,
)
from .rings import FiniteRing, opposite_ring


@dataclass
class Decomposition:
    """Internal direct sum: parts meet pairwise in zero and sum to the
    whole module, with optional orthogonal idempotent witnesses whose
    images are the parts."""

    parts: list[Submodule]
    witness: list[ModuleHom] | None = None

    def verify(self) -> bool:
        if not self.parts:
            return False
        module = self.parts[0].parent
        ws = module.workspace()
        total = {0}
        for i, a in enumerate(self.parts):
            for b in self.parts[i + 1:]:
                if len(a.elements & b.elements) != 1:
                    return False
            total = ws.additive_closure(total | a.elements)
        if len(total) != module.size:
            return False
        if self.witness is not None:
            acc = None
            for e, part in zip(self.witness, self.parts):
                if e.then(e).matrix != e.matrix:
                    return False
                if e.image().elements != part.elements:
                    return False
                acc = e if acc is None else acc.add(e)
            from .modules import identity_hom

            if acc is None or acc.matrix != identity_hom(module).matrix:
                return False
            for i, e in enumerate(self.witness):
                for f in self.witness[i + 1:]:
                    zero = all(x == 0 for row in e.then(f).matrix for x in row)
                    zero2 = all(x == 0 for row in f.then(e).matrix for x in row)
                    if not (zero and zero2):
                        return False
        return True


def summand_decomposition(sub: Submodule) -> Decomposition | None:
    """Two-part decomposition along a direct summand, witnessed by the
    complementary projection pair."""
    comp = complement_of(sub)
    if comp is None:
        return None
    witness = [projection_along(sub, comp), projection_along(comp, sub)]
    return Decomposition(parts=[sub, comp], witness=witness)


def projection_along(sub: Submodule, comp: Submodule) -> ModuleHom:
    """The idempotent projecting onto the first part of an internal direct
    sum along the second."""
    module = sub.parent
    ws = module.workspace()
    # every x splits uniquely as a + b; the projection sends x to a
    split = {}
    for a in sub.elements:
        for b in comp.elements:
            split[ws.add(a, b)] = a
    t = len(module.component_orders)
    rows = []
    for j in range(t):
        unit = module.encode(tuple(1 if i == j else 0 for i in range(t)))
        rows.append(list(ws.coords[split[unit]]))
    return ModuleHom(module, module, rows)


# -- direct summands ---------------------------------------------------------


def complement_of(sub: Submodule) -> Submodule | None:
    """A lattice node B with A + B = M and A & B = 0, if one exists."""
    parent = sub.parent
    lat = submodules(parent)
    i = lat.node_index(sub)
    need = parent.size // sub.size
    for j, b in enumerate(lat.nodes):
        if b.size != need:
            continue
        if lat.meet(i, j) == lat.zero_index and lat.join(i, j) == lat.top_index:
            return b
    return None


def is_direct_summand(sub: Submodule, module: FiniteModule | None = None) -> bool:
    if module is not None and module != sub.parent:
        raise ParentMismatch("submodule does not live in the given module")
    return complement_of(sub) is not None


_summand_cache: dict = {}


def summand_keys(module: FiniteModule) -> frozenset[tuple[int, ...]]:
    """Canonical keys of all direct summand nodes (cached)."""
    got = _summand_cache.get(module.key)
    if got is not None:
        return got
    lat = submodules(module)
    out = set()
    for i, a in enumerate(lat.nodes):
        need, rem = divmod(module.size, a.size)
        if rem:
            continue
        for j, b in enumerate(lat.nodes):
            if b.size != need:
                continue
            if lat.meet(i, j) == lat.zero_index and lat.join(i, j) == lat.top_index:
                out.add(a.key)
                break
    got = frozenset(out)
    _summand_cache[module.key] = got
    return got


def summand_witness_idempotent(sub: Submodule, limits: Limits = DEFAULT_LIMITS) -> ModuleHom | None:
    """Idempotent endomorphism with image equal to the submodule, if any.
    Independent cross-check for the complement scan."""
    ends = end_ring(sub.parent, limits)
    target = sub.elements
    for h in ends.homs:
        if h.then(h) == h and h.image().elements == target:
            return h
    return None


# -- supplements -------------------------------------------------------------


def is_supplement(x: Submodule, y: Submodule, module: FiniteModule) -> bool:
    """X supplements Y: X + Y = M and X & Y is small inside X."""
    if x.parent != module or y.parent != module:
        raise ParentMismatch("supplement operands must live in the module")
    lat = submodules(module)
    i, j = lat.node_index(x), lat.node_index(y)
    if lat.join(i, j) != lat.top_index:
        return False
    inter = x.elements & y.elements
    return is_small_within(module, inter, x.elements)


def supplements_of(y: Submodule, module: FiniteModule) -> list[Submodule]:
    lat = submodules(module)
    return [x for x in lat.nodes if is_supplement(x, y, module)]


_amply_cache: dict = {}


def is_amply_supplemented(module: FiniteModule) -> bool:
    """Whenever A + B = M, some supplement of B lies inside A.  True for
    every module over a finite ring, but computed from the definition."""
    got = _amply_cache.get(module.key)
    if got is not None:
        return got
    lat = submodules(module)
    top = lat.top_index
    n = len(lat.nodes)
    ok = True
    for i in range(n):
        sub_i = lat.subnode_indices(i)
        for j in range(n):
            if lat.join(i, j) != top:
                continue
            a = lat.nodes[i]
            b = lat.nodes[j]
            found = False
            for xi in sub_i:
                if lat.join(xi, j) != top:
                    continue
                x = lat.nodes[xi]
                if is_small_within(module, x.elements & b.elements, x.elements):
                    found = True
                    break
            if not found:
                ok = False
                break
        if not ok:
            break
    _amply_cache[module.key] = ok
    return ok


# -- small quotients and coclosed submodules -----------------------------------


def small_in_quotient(a: Submodule, n: Submodule, module: FiniteModule,
                      method: str = "radical") -> bool:
    """A/N << M/N for N <= A, evaluated inside the ambient lattice.

    Radical route: A <= N + Rad(M), using Rad(M/N) = (Rad(M) + N)/N.
    Scan route: no proper L >= N has A + L = M.
    """
    if not n.elements <= a.elements:
        raise NotSubmodule("need N <= A for a quotient comparison")
    lat = submodules(module)
    if method == "radical":
        i = lat.node_index(n)
        r = lat.node_index(radical(module))
        return a.elements <= lat.nodes[lat.join(i, r)].elements
    i = lat.node_index(a)
    top = lat.top_index
    for j, l in enumerate(lat.nodes):
        if j == top or not n.elements <= l.elements:
            continue
        if lat.join(i, j) == top:
            return False
    return True


def is_coclosed(sub: Submodule, module: FiniteModule, method: str = "radical") -> bool:
    """No proper part of the submodule leaves a small remainder: C' < C
    with C/C' << M/C' forces C = C'."""
    lat = submodules(module)
    i = lat.node_index(sub)
    for j in lat.subnode_indices(i):
        if j == i:
            continue
        if small_in_quotient(sub, lat.nodes[j], module, method):
            return False
    return True


def coclosed_keys(module: FiniteModule) -> frozenset[tuple[int, ...]]:
    lat = submodules(module)
    return frozenset(s.key for s in lat.nodes if is_coclosed(s, module))


# -- lifting -------------------------------------------------------------------


def is_lifting(module: FiniteModule, method: str = "definitional") -> bool:
    """Every submodule contains a direct summand with small remainder.

    ``definitional`` scans all pairs; ``coclosed`` uses the criterion
    "amply supplemented and every coclosed submodule is a summand".
    """
    lat = submodules(module)
    if method == "coclosed":
        if not is_amply_supplemented(module):
            return False
        summands = summand_keys(module)
        return all(
            s.key in summands
            for s in lat.nodes
            if is_coclosed(s, module)
        )
    summands = summand_keys(module)
    for i, a in enumerate(lat.nodes):
        found = False
        for j in lat.subnode_indices(i):
            n = lat.nodes[j]
            if n.key not in summands:
                continue
            if small_in_quotient(a, n, module):
                found = True
                break
        if not found:
            return False
    return True


# -- character duality ---------------------------------------------------------


def _dual_matrix(matrix, src_orders, tgt_orders):
    """Weighted transpose: entry [l][j] = matrix[j][l] * m_j / n_l, the
    coordinate form of precomposition of characters."""
    t_src = len(src_orders)
    t_tgt = len(tgt_orders)
    out = []
    for l in range(t_tgt):
        row = []
        for j in range(t_src):
            row.append((matrix[j][l] * src_orders[j]) // tgt_orders[l] % src_orders[j])
        out.append(row)
    return out


_dual_cache: dict = {}


def character_dual(module: FiniteModule) -> FiniteModule:
    """Character group Hom(M, Z/exp(M)) as a right module over the
    opposite ring; same component orders, weighted-transpose action."""
    got = _dual_cache.get(module.key)
    if got is not None:
        return got
    ring = module.ring
    op = opposite_ring(ring)
    orders = module.component_orders
    action = tuple(
        tuple(tuple(r) for r in _dual_matrix(mat, orders, orders))
        for mat in module.action
    )
    out = FiniteModule(op, orders, action, name=f"D({module.name or 'M'})")
    _dual_cache[module.key] = out
    _dual_cache[out.key] = module
    return out


def dual_hom(f: ModuleHom) -> ModuleHom:
    """D(f): D(target) -> D(source), precomposition with f."""
    dsrc = character_dual(f.target)
    dtgt = character_dual(f.source)
    mat = _dual_matrix(f.matrix, f.source.component_orders, f.target.component_orders)
    # rows of the dual act from D(target) coordinates; transpose shape fits
    return ModuleHom(dsrc, dtgt, mat)


# -- projective covers ----------------------------------------------------------

_prim_cache: dict = {}
_cover_cache: dict = {}


@dataclass
class _PrimitiveBlock:
    idempotent: tuple[int, ...]
    block: SubmoduleModule          # eR as a standalone module
    top: FiniteModule               # eR / Rad(eR)
    end_size: int                   # |End(top)|, a prime power


def primitive_blocks(ring: FiniteRing, limits: Limits = DEFAULT_LIMITS) -> list[_PrimitiveBlock]:
    """One block per member of a complete orthogonal set of primitive
    idempotents of the ring, found by exhaustive search."""
    got = _prim_cache.get(ring.key)
    if got is not None:
        return got
    if ring.size > limits.max_ring:
        raise IdempotentSearchExceeded(f"ring too large for idempotent search: {ring.size}")
    idems = ring.idempotent_coords()
    reg = regular_module(ring)

    def split(e):
        # orthogonal decomposition e = f + (e - f) with f*(e-f) = (e-f)*f = 0
        for f in idems:
            if not any(f) or f == e:
                continue
            g = tuple((x - y) % d for x, y, d in zip(e, f, ring.component_orders))
            if not any(g):
                continue
            if (
                ring.mul_coords(f, g) == ring.zero_coords()
                and ring.mul_coords(g, f) == ring.zero_coords()
                and ring.mul_coords(f, f) == f
                and ring.mul_coords(g, g) == g
            ):
                return f, g
        return None

    stack = [ring.one]
    prims: list[tuple[int, ...]] = []
    while stack:
        e = stack.pop()
        if not any(e):
            continue
        parts = split(e)
        if parts is None:
            prims.append(e)
        else:
            stack.extend(parts)
    prims.sort(key=ring.encode)
    blocks = []
    for e in prims:
        e_code = ring.encode(e)
        sub = span(reg, [e_code])
        block = submodule_as_module(sub)
        top, _ = quotient_module(block.module, radical(block.module))
        end_size = len(hom_set(top, top, limits))
        blocks.append(_PrimitiveBlock(e, block, top, end_size))
    _prim_cache[ring.key] = blocks
    return blocks


def projective_cover(module: FiniteModule, limits: Limits = DEFAULT_LIMITS):
    """(P, p) with P projective, p surjective, and ker(p) small in P.

    P is assembled from primitive-idempotent blocks matching the
    semisimple top of the module; generator images are chosen greedily so
    the induced map on tops is bijective, which forces the kernel into
    Rad(P).
    """
    got = _cover_cache.get(module.key)
    if got is not None:
        return got
    ring = module.ring
    blocks = primitive_blocks(ring, limits)
    # one representative per isomorphism class of tops, so multiplicities
    # are not double counted when distinct idempotents share a top
    classes: list[_PrimitiveBlock] = []
    for blk in blocks:
        if not any(is_isomorphic(blk.top, other.top, limits) for other in classes):
            classes.append(blk)
    top, _ = quotient_module(module, radical(module))
    chosen: list[_PrimitiveBlock] = []
    for blk in classes:
        homs = hom_set(top, blk.top, limits)
        count = len(homs)
        mult = 0
        while blk.end_size ** (mult + 1) <= count:
            mult += 1
        chosen.extend([blk] * mult)
    if not chosen:
        p = zero_module(ring)
        hom = ModuleHom(p, module, [], validate=False)
        _cover_cache[module.key] = (p, hom)
        return p, hom
    total, injections, _ = direct_sum_with_maps(*[blk.block.module for blk in chosen])
    ws = module.workspace()
    rad = radical(module).elements
    images: list[int] = []
    spanned = set(rad)
    for blk in chosen:
        e = blk.idempotent
        pick = None
        for x in module.elements():
            m = ws.act(x, e)
            if m not in spanned:
                pick = m
                break
        if pick is None:
            raise IdempotentSearchExceeded("cover multiplicity bookkeeping failed")
        images.append(pick)
        spanned = ws.span(list(set(images) | rad))
    # map each block generator u = e to its chosen image; the block is eR,
    # so the hom on it is r |-> pick * r
    rows = []
    for blk, pick in zip(chosen, images):
        incl = blk.block.include.matrix
        for brow in incl:
            rcoords = tuple(x % d for x, d in zip(brow, ring.component_orders))
            img = ws.act(pick, rcoords)
            rows.append(list(ws.coords[img]))
    p_hom = ModuleHom(total, module, rows)
    if not p_hom.is_surjective():
        raise IdempotentSearchExceeded("projective cover candidate is not surjective")
    if not p_hom.kernel().elements <= radical(total).elements:
        raise IdempotentSearchExceeded("projective cover kernel is not small")
    _cover_cache[module.key] = (total, p_hom)
    return total, p_hom


# -- injectivity ----------------------------------------------------------------

_right_ideal_mods_cache: dict = {}
_injective_cache: dict = {}
_hull_cache: dict = {}
_small_module_cache: dict = {}
_small_module_reps: dict = {}


def _right_ideal_modules(ring: FiniteRing, limits: Limits):
    got = _right_ideal_mods_cache.get(ring.key)
    if got is None:
        reg = regular_module(ring)
        lat = submodules(reg)
        got = [submodule_as_module(node) for node in lat.nodes]
        _right_ideal_mods_cache[ring.key] = got
    return got


def is_injective(module: FiniteModule, limits: Limits = DEFAULT_LIMITS) -> bool:
    """Right-ideal extension test: every hom from a right ideal into the
    module is left multiplication by some element."""
    got = _injective_cache.get(module.key)
    if got is not None:
        return got
    ring = module.ring
    ws = module.workspace()
    ok = True
    for ideal in _right_ideal_modules(ring, limits):
        basis_vectors = [
            tuple(x % d for x, d in zip(row, ring.component_orders))
            for row in ideal.include.matrix
        ]
        extendable = set()
        for m in module.elements():
            key = tuple(ws.act(m, v) for v in basis_vectors)
            extendable.add(key)
        for h in hom_set(ideal.module, module, limits):
            key = tuple(
                h.apply(ideal.module.encode(
                    tuple(1 if i == j else 0 for i in range(len(ideal.module.component_orders)))
                ))
                for j in range(len(ideal.module.component_orders))
            )
            if key not in extendable:
                ok = False
                break
        if not ok:
            break
    _injective_cache[module.key] = ok
    return ok


def injective_hull(module: FiniteModule, limits: Limits = DEFAULT_LIMITS,
                   verify: bool = True):
    """(E, i) with E injective and i an essential embedding, built as the
    dual of the projective cover of the dual."""
    got = _hull_cache.get(module.key)
    if got is not None:
        return got
    dual = character_dual(module)
    cover, p = projective_cover(dual, limits)
    embed = dual_hom(p)
    hull = embed.target
    if embed.source.key != module.key:
        raise NotSubmodule("double dual did not return the original presentation")
    if verify:
        if not embed.is_injective():
            raise NotSubmodule("hull embedding is not injective")
        if not is_essential(embed.image(), hull):
            raise NotSubmodule("hull embedding is not essential")
        if not is_injective(hull, limits):
            raise NotSubmodule("computed hull fails the injectivity test")
    _hull_cache[module.key] = (hull, embed)
    return hull, embed


def is_small_module(module: FiniteModule, limits: Limits = DEFAULT_LIMITS) -> bool:
    """Small in its injective hull.  Cached per presentation and, behind a
    cheap invariant filter, per isomorphism class."""
    got = _small_module_cache.get(module.key)
    if got is not None:
        return got[0]
    inv = (module.ring.key, tuple(sorted(module.component_orders)))
    for rep, value in _small_module_reps.get(inv, ()):
        if is_isomorphic(rep, module, limits):
            _small_module_cache[module.key] = (value,)
            return value
    hull, embed = injective_hull(module, limits)
    value = embed.image().elements <= radical(hull).elements
    _small_module_cache[module.key] = (value,)
    _small_module_reps.setdefault(inv, []).append((module, value))
    return value
