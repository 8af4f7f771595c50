"""Finite right modules, submodules, homomorphisms and endomorphism rings.

Conventions.  A module over a :class:`~modlab.rings.FiniteRing` lives on
Z/m_1 x ... x Z/m_t; elements are mixed-radix codes (little-endian in
basis order).  The action of the ring basis element e_b is a t x t row
matrix A_b: the image of x is x @ A_b with column l reduced mod m_l.
Homomorphism matrices follow the same row convention, so composition
"f then g" is the product F @ G.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import prod
from typing import Iterable, Iterator, Sequence

from .config import ADD_TABLE_MAX, DEFAULT_LIMITS, Limits
from .errors import (
    NotSubmodule,
    RingMismatch,
    SizeLimitExceeded,
)
from .intlinalg import smith_normal_form, subgroup_decomposition
from .rings import FiniteRing, additive_order, exponent, opposite_ring


def _reduce_matrix(matrix, col_orders) -> tuple[tuple[int, ...], ...]:
    return tuple(
        tuple(int(x) % o for x, o in zip(row, col_orders)) for row in matrix
    )


def _mat_mul_mod(a, b, col_orders):
    rows = len(a)
    inner = len(b)
    t = len(col_orders)
    out = []
    for i in range(rows):
        arow = a[i]
        acc = [0] * t
        for k in range(inner):
            x = arow[k]
            if x:
                brow = b[k]
                for j in range(t):
                    acc[j] += x * brow[j]
        out.append(tuple(v % o for v, o in zip(acc, col_orders)))
    return tuple(out)


class FiniteModule:
    """Finite right module: additive orders plus one action matrix per
    ring basis element.  Validation checks well-definedness, action
    compatibility with the ring multiplication, and that 1 acts as the
    identity."""

    __slots__ = (
        "ring",
        "component_orders",
        "action",
        "name",
        "size",
        "key",
        "_hash",
        "_radix",
        "_ws",
    )

    def __init__(self, ring: FiniteRing, component_orders, action, name=None,
                 limits: Limits = DEFAULT_LIMITS, validate: bool = True):
        orders = tuple(int(m) for m in component_orders)
        if any(m <= 0 for m in orders):
            raise NotSubmodule(f"component orders must be positive, got {orders}")
        t = len(orders)
        size = prod(orders)
        if size > limits.max_module:
            raise SizeLimitExceeded(f"module size {size} exceeds limit {limits.max_module}")
        k = len(ring.component_orders)
        if len(action) != k or any(len(a) != t or any(len(r) != t for r in a) for a in action):
            raise NotSubmodule("action must give one t x t matrix per ring basis element")
        self.ring = ring
        self.component_orders = orders
        self.action = tuple(_reduce_matrix(a, orders) for a in action)
        self.name = name
        self.size = size
        radix = [1] * t
        for i in range(1, t):
            radix[i] = radix[i - 1] * orders[i - 1]
        self._radix = tuple(radix)
        self._ws = None
        if validate:
            self._validate()
        self.key = ("module", ring.key, orders, self.action)
        self._hash = hash(self.key)

    def _validate(self):
        orders = self.component_orders
        t = len(orders)
        ring = self.ring
        k = len(ring.component_orders)
        for b in range(k):
            mat = self.action[b]
            for j in range(t):
                for l in range(t):
                    if (orders[j] * mat[j][l]) % orders[l]:
                        raise NotSubmodule(
                            f"action of e_{b+1} not well defined at entry ({j+1},{l+1})"
                        )
        for i in range(k):
            for j in range(k):
                left = _mat_mul_mod(self.action[i], self.action[j], orders)
                acc = [[0] * t for _ in range(t)]
                for l in range(k):
                    coef = ring.constants[i][j][l]
                    if coef:
                        mat = self.action[l]
                        for a in range(t):
                            row = mat[a]
                            arow = acc[a]
                            for bcol in range(t):
                                arow[bcol] += coef * row[bcol]
                right = _reduce_matrix(acc, orders)
                if left != right:
                    raise NotSubmodule(
                        f"action incompatible with ring product e_{i+1}*e_{j+1}"
                    )
        ident = self.ring_action_matrix(ring.one)
        expect = tuple(
            tuple(1 % orders[l] if j == l else 0 for l in range(t)) for j in range(t)
        )
        if ident != expect:
            raise NotSubmodule("ring identity does not act as the identity map")

    # -- codes and coordinates -------------------------------------------

    def encode(self, coords) -> int:
        return sum((int(x) % m) * r for x, m, r in zip(coords, self.component_orders, self._radix))

    def decode(self, code: int) -> tuple[int, ...]:
        return tuple((code // r) % m for r, m in zip(self._radix, self.component_orders))

    def elements(self) -> range:
        return range(self.size)

    def exponent(self) -> int:
        return exponent(self.component_orders)

    def ring_action_matrix(self, rcoords) -> tuple[tuple[int, ...], ...]:
        """Matrix of x -> x * r for a ring element in coordinates."""
        t = len(self.component_orders)
        acc = [[0] * t for _ in range(t)]
        for b, coef in enumerate(rcoords):
            if coef:
                mat = self.action[b]
                for j in range(t):
                    row = mat[j]
                    arow = acc[j]
                    for l in range(t):
                        arow[l] += coef * row[l]
        return _reduce_matrix(acc, self.component_orders)

    def workspace(self) -> "_Workspace":
        if self._ws is None:
            self._ws = _Workspace(self)
        return self._ws

    def zero_submodule(self) -> "Submodule":
        return Submodule(self, frozenset((0,)), gens=())

    def full_submodule(self) -> "Submodule":
        return Submodule(self, frozenset(self.elements()), gens=self.workspace().generators)

    def submodule(self, codes: Iterable[int], gens: Sequence[int] | None = None) -> "Submodule":
        return Submodule(self, frozenset(codes), gens=tuple(gens) if gens is not None else None)

    def __eq__(self, other):
        return isinstance(other, FiniteModule) and self.key == other.key

    def __hash__(self):
        return self._hash

    def __repr__(self):
        label = self.name or "FiniteModule"
        ring = self.ring.name or "R"
        return f"<{label} over {ring} orders={self.component_orders}>"


class _Workspace:
    """Per-module element tables: decode list, addition/negation, per-ring-
    element action maps, generators and generator words.  Lazy; shared by
    everything that touches the module."""

    def __init__(self, module: FiniteModule):
        self.module = module
        m = module
        self.coords = [m.decode(c) for c in range(m.size)]
        t = len(m.component_orders)
        if m.size <= ADD_TABLE_MAX:
            self.add_table = [
                [
                    m.encode(tuple(x + y for x, y in zip(a, b)))
                    for b in self.coords
                ]
                for a in self.coords
            ]
        else:
            self.add_table = None
        self.neg = [m.encode(tuple(-x for x in a)) for a in self.coords]
        self._basis_action: list[list[int]] | None = None
        self._ring_action: dict[tuple[int, ...], list[int]] = {}
        self._cyclic: dict[int, frozenset[int]] = {}
        self._generators: tuple[int, ...] | None = None
        self._gen_words: list[tuple[tuple[int, ...], ...]] | None = None
        self._coord_words: list[tuple[tuple[int, ...], ...]] | None = None
        self._ann_gens: dict[int, tuple[tuple[int, ...], ...]] = {}

    # -- additive structure ------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.add_table is not None:
            return self.add_table[a][b]
        m = self.module
        ca, cb = self.coords[a], self.coords[b]
        return m.encode(tuple(x + y for x, y in zip(ca, cb)))

    def basis_action(self) -> list[list[int]]:
        if self._basis_action is None:
            m = self.module
            out = []
            for mat in m.action:
                out.append([self._apply(mat, c) for c in range(m.size)])
            self._basis_action = out
        return self._basis_action

    def _apply(self, matrix, code: int) -> int:
        coords = self.coords[code]
        t = len(coords)
        acc = [0] * t
        for j, x in enumerate(coords):
            if x:
                row = matrix[j]
                for l in range(t):
                    acc[l] += x * row[l]
        return self.module.encode(acc)

    def act(self, code: int, rcoords: tuple[int, ...]) -> int:
        """code * r for a ring element given in coordinates."""
        tab = self._ring_action.get(rcoords)
        if tab is not None:
            return tab[code]
        mat = self.module.ring_action_matrix(rcoords)
        tab = [self._apply(mat, c) for c in range(self.module.size)]
        self._ring_action[rcoords] = tab
        return tab[code]

    def apply_matrix(self, matrix, code: int) -> int:
        return self._apply(matrix, code)

    # -- spans ---------------------------------------------------------------

    def orbit(self, gens: Iterable[int]) -> list[int]:
        """Closure of gens under the ring basis actions (not addition)."""
        basis = self.basis_action()
        seen = set()
        stack = [g for g in gens]
        out = []
        while stack:
            x = stack.pop()
            if x in seen:
                continue
            seen.add(x)
            out.append(x)
            for tab in basis:
                y = tab[x]
                if y not in seen:
                    stack.append(y)
        return out

    def additive_closure(self, seeds: Iterable[int]) -> set[int]:
        """Subgroup generated by the seed codes (seeds assumed action-stable
        as a family when a submodule is wanted; see :meth:`span`)."""
        add = self.add
        group = {0}
        for h in seeds:
            if h in group:
                continue
            base = list(group)
            x = h
            while x not in group:
                group.update(add(s, x) for s in base)
                x = add(x, h)
        return group

    def span(self, gens: Iterable[int]) -> set[int]:
        """Smallest action-closed subgroup containing the generators."""
        return self.additive_closure(self.orbit(gens))

    def cyclic_span(self, code: int) -> frozenset[int]:
        got = self._cyclic.get(code)
        if got is None:
            got = frozenset(self.span((code,)))
            self._cyclic[code] = got
        return got

    # -- generators and words --------------------------------------------

    @property
    def generators(self) -> tuple[int, ...]:
        if self._generators is None:
            self._select_generators()
        return self._generators  # type: ignore[return-value]

    def _select_generators(self):
        # Greedy: pick codes outside span(current) and keep going until the
        # span is everything.  Ascending code order keeps this deterministic.
        m = self.module
        gens: list[int] = []
        spanned = {0}
        for code in range(1, m.size):
            if code in spanned:
                continue
            gens.append(code)
            spanned = self.span(gens)
            if len(spanned) == m.size:
                break
        # drop generators made redundant by later picks
        kept = list(gens)
        for g in list(kept):
            rest = [x for x in kept if x != g]
            if len(self.span(rest)) == m.size:
                kept = rest
        self._generators = tuple(kept)

    def generator_words(self) -> list[tuple[tuple[int, ...], ...]]:
        """For every element code, ring coordinates (r_1..r_k) with
        x = sum_i g_i * r_i over the selected generators."""
        if self._gen_words is not None:
            return self._gen_words
        m = self.module
        ring = m.ring
        gens = self.generators
        k = len(gens)
        nb = len(ring.component_orders)
        basis = self.basis_action()
        zero_word = tuple(ring.zero_coords() for _ in range(k))
        words: list = [None] * m.size
        words[0] = zero_word
        # moves: x -> x + g_i * e_b, adding e_b into slot i of the word
        moves = []
        for i, g in enumerate(gens):
            for b in range(nb):
                moves.append((i, b, basis[b][g]))
        frontier = [0]
        while frontier:
            new_frontier = []
            for x in frontier:
                wx = words[x]
                for i, b, h in moves:
                    y = self.add(x, h)
                    if words[y] is None:
                        wy = list(wx)
                        coords = list(wy[i])
                        coords[b] = (coords[b] + 1) % ring.component_orders[b]
                        wy[i] = tuple(coords)
                        words[y] = tuple(wy)
                        new_frontier.append(y)
            frontier = new_frontier
        if any(w is None for w in words):
            raise NotSubmodule("generator words incomplete; generators do not span")
        self._gen_words = words
        return words

    def annihilator_generators(self, code: int) -> tuple[tuple[int, ...], ...]:
        """Generators of {r in R : code * r == 0} as a right ideal."""
        got = self._ann_gens.get(code)
        if got is not None:
            return got
        m = self.module
        ring = m.ring
        members = [r for r in ring.element_coords() if self.act(code, r) == 0]
        # greedy generating subset inside the regular module of the ring
        reg = regular_module(ring)
        ws = reg.workspace()
        member_codes = sorted(ring.encode(r) for r in members)
        target = set(member_codes)
        gens: list[int] = []
        spanned = {0}
        for c in member_codes:
            if c in spanned:
                continue
            gens.append(c)
            spanned = ws.span(gens)
            if len(spanned) == len(target):
                break
        out = tuple(ring.decode(c) for c in gens)
        self._ann_gens[code] = out
        return out


class Submodule:
    """Action-closed subgroup of a parent module, canonically the frozen
    set of its element codes."""

    __slots__ = ("parent", "elements", "key", "gens", "_hash")

    def __init__(self, parent: FiniteModule, elements: frozenset[int],
                 gens: tuple[int, ...] | None = None, check: bool = False):
        self.parent = parent
        self.elements = elements
        self.key = tuple(sorted(elements))
        self.gens = gens
        self._hash = hash((parent._hash, self.key))
        if check:
            self._check()

    def _check(self):
        ws = self.parent.workspace()
        if 0 not in self.elements:
            raise NotSubmodule("submodule must contain zero")
        if self.elements != frozenset(ws.span(self.generators())):
            raise NotSubmodule("set is not action-closed")

    def generators(self) -> tuple[int, ...]:
        if self.gens is None:
            ws = self.parent.workspace()
            gens: list[int] = []
            spanned = {0}
            for code in self.key:
                if code in spanned:
                    continue
                gens.append(code)
                spanned = ws.span(gens)
                if len(spanned) == len(self.elements):
                    break
            self.gens = tuple(gens)
        return self.gens

    @property
    def size(self) -> int:
        return len(self.elements)

    def is_zero(self) -> bool:
        return len(self.elements) == 1

    def is_full(self) -> bool:
        return len(self.elements) == self.parent.size

    def __contains__(self, code: int) -> bool:
        return code in self.elements

    def __le__(self, other: "Submodule") -> bool:
        return self.elements <= other.elements

    def __lt__(self, other: "Submodule") -> bool:
        return self.elements < other.elements

    def __eq__(self, other):
        return (
            isinstance(other, Submodule)
            and self.parent._hash == other.parent._hash
            and self.key == other.key
            and self.parent == other.parent
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"<Submodule size={self.size} of {self.parent!r}>"


def span(module: FiniteModule, gens: Iterable) -> Submodule:
    """Submodule generated by the given elements (codes or coordinate
    tuples)."""
    codes = []
    for g in gens:
        codes.append(module.encode(g) if isinstance(g, (tuple, list)) else int(g))
    ws = module.workspace()
    return Submodule(module, frozenset(ws.span(codes)), gens=tuple(codes))


# -- constructions ----------------------------------------------------------

_regular_cache: dict = {}
_quotient_cache: dict = {}
_sub_as_module_cache: dict = {}
_end_cache: dict = {}


def regular_module(ring: FiniteRing, limits: Limits = DEFAULT_LIMITS) -> FiniteModule:
    """The ring as a right module over itself (right multiplication)."""
    got = _regular_cache.get(ring.key)
    if got is not None:
        return got
    k = len(ring.component_orders)
    action = tuple(
        tuple(ring.constants[j][b] for j in range(k)) for b in range(k)
    )
    mod = FiniteModule(ring, ring.component_orders, action,
                       name=f"{ring.name or 'R'}_reg", limits=limits)
    _regular_cache[ring.key] = mod
    return mod


def direct_sum_with_maps(*summands: FiniteModule, limits: Limits = DEFAULT_LIMITS):
    """Direct sum with canonical injections and projections."""
    if not summands:
        raise ValueError("need at least one summand")
    ring = summands[0].ring
    for m in summands[1:]:
        if m.ring != ring:
            raise RingMismatch("direct sum needs a common base ring")
    orders = tuple(o for m in summands for o in m.component_orders)
    t = len(orders)
    k = len(ring.component_orders)
    action = []
    for b in range(k):
        mat = [[0] * t for _ in range(t)]
        off = 0
        for m in summands:
            tm = len(m.component_orders)
            sub = m.action[b]
            for j in range(tm):
                for l in range(tm):
                    mat[off + j][off + l] = sub[j][l]
            off += tm
        action.append(tuple(tuple(r) for r in mat))
    name = "(" + "+".join(m.name or "M" for m in summands) + ")"
    total = FiniteModule(ring, orders, tuple(action), name=name,
                         limits=limits, validate=False)
    injections = []
    projections = []
    off = 0
    for m in summands:
        tm = len(m.component_orders)
        inj = [[0] * t for _ in range(tm)]
        proj = [[0] * tm for _ in range(t)]
        for j in range(tm):
            inj[j][off + j] = 1
            proj[off + j][j] = 1
        injections.append(ModuleHom(m, total, inj, validate=False))
        projections.append(ModuleHom(total, m, proj, validate=False))
        off += tm
    return total, injections, projections


def direct_sum(m: FiniteModule, n: FiniteModule, *rest: FiniteModule) -> FiniteModule:
    return direct_sum_with_maps(m, n, *rest)[0]


def zero_module(ring: FiniteRing) -> FiniteModule:
    k = len(ring.component_orders)
    return FiniteModule(ring, (), tuple(() for _ in range(k)), name="0")


def quotient_module(module: FiniteModule, sub: Submodule):
    """Quotient module with the canonical projection.

    The coset group is renormalized to a cyclic decomposition via Smith
    reduction of the relation lattice, so equal inputs give identical
    output presentations.
    """
    if sub.parent != module:
        raise NotSubmodule("quotient needs a submodule of the given module")
    cached = _quotient_cache.get((module.key, sub.key))
    if cached is not None:
        return cached
    orders = module.component_orders
    t = len(orders)
    ws = module.workspace()
    if t == 0 or sub.is_full():
        q = zero_module(module.ring)
        proj = ModuleHom(module, q, [[] for _ in range(t)], validate=False)
        _quotient_cache[(module.key, sub.key)] = (q, proj)
        return q, proj
    # additive generators: the action orbit of the module generators
    rel = [list(ws.coords[g]) for g in sorted(ws.orbit(sub.generators()))]
    rel.extend([orders[i] if j == i else 0 for j in range(t)] for i in range(t))
    diag, v, vinv = smith_normal_form(rel if rel else [[0] * t])
    keep = [i for i, s in enumerate(diag[:t]) if s != 1]
    new_orders = tuple(diag[i] for i in keep)
    proj_matrix = [[v[j][i] for i in keep] for j in range(t)]
    # images of the new basis under the old action, written in new coords
    preimage = [vinv[i] for i in keep]
    action = []
    for b in range(len(module.ring.component_orders)):
        amat = module.action[b]
        rows = []
        for pre in preimage:
            acc = [0] * t
            for j, x in enumerate(pre):
                if x:
                    row = amat[j]
                    for l in range(t):
                        acc[l] += x * row[l]
            rows.append([sum(acc[l] * v[l][i] for l in range(t)) for i in keep])
        action.append(rows)
    q = FiniteModule(module.ring, new_orders, action,
                     name=f"{module.name or 'M'}/(sub{sub.size})")
    proj = ModuleHom(module, q, proj_matrix)
    if proj.kernel().elements != sub.elements:
        raise NotSubmodule("projection kernel mismatch; input was not action-closed")
    _quotient_cache[(module.key, sub.key)] = (q, proj)
    return q, proj


@dataclass
class SubmoduleModule:
    """A submodule repackaged as a standalone module."""

    module: FiniteModule
    include: "ModuleHom"              # module -> parent
    to_sub: dict[int, int]            # parent code -> module code

    def pull_in(self, codes: Iterable[int]) -> frozenset[int]:
        return frozenset(self.to_sub[c] for c in codes)

    def push_out(self, codes: Iterable[int]) -> frozenset[int]:
        return frozenset(self.include.apply(c) for c in codes)


def submodule_as_module(sub: Submodule) -> SubmoduleModule:
    """Standalone presentation of a submodule, with inclusion and the
    element correspondence both ways."""
    parent = sub.parent
    cached = _sub_as_module_cache.get((parent.key, sub.key))
    if cached is not None:
        return cached
    ws = parent.workspace()
    # the action orbit additively spans the submodule
    gen_vectors = [list(ws.coords[c]) for c in sorted(ws.orbit(sub.generators()))]
    orders, reps, coords = subgroup_decomposition(parent.component_orders, gen_vectors)
    t = len(orders)
    # action matrices: image of each basis representative under e_b
    action = []
    for b in range(len(parent.ring.component_orders)):
        rows = []
        for rep in reps:
            img = ws.basis_action()[b][parent.encode(rep)]
            rows.append(list(coords.coords(list(ws.coords[img]))))
        action.append(rows)
    mod = FiniteModule(parent.ring, orders, action, name=f"sub{sub.size}of{parent.name or 'M'}")
    include = ModuleHom(mod, parent, [rep for rep in reps])
    to_sub = {}
    for c in sub.key:
        to_sub[c] = mod.encode(coords.coords(list(ws.coords[c])))
    out = SubmoduleModule(mod, include, to_sub)
    _sub_as_module_cache[(parent.key, sub.key)] = out
    return out


class ModuleHom:
    """Right-linear map between modules over the same ring, as a matrix in
    the row convention (row j is the image of the j-th basis vector)."""

    __slots__ = ("source", "target", "matrix", "key", "_hash", "_image", "_kernel")

    def __init__(self, source: FiniteModule, target: FiniteModule, matrix,
                 validate: bool = True):
        if source.ring != target.ring:
            raise RingMismatch("hom endpoints must share the base ring")
        self.source = source
        self.target = target
        if len(target.component_orders):
            self.matrix = _reduce_matrix(matrix, target.component_orders)
        else:
            self.matrix = tuple(() for _ in range(len(source.component_orders)))
        self._image = None
        self._kernel = None
        if validate:
            self._validate()
        self.key = (source._hash, target._hash, self.matrix)
        self._hash = hash(self.key)

    def _validate(self):
        src_orders = self.source.component_orders
        tgt_orders = self.target.component_orders
        f = self.matrix
        for j, mj in enumerate(src_orders):
            for l, nl in enumerate(tgt_orders):
                if (mj * f[j][l]) % nl:
                    raise NotSubmodule(f"hom not well defined at entry ({j+1},{l+1})")
        for b in range(len(self.source.ring.component_orders)):
            left = _mat_mul_mod(self.source.action[b], f, tgt_orders)
            right = _mat_mul_mod(f, self.target.action[b], tgt_orders)
            if left != right:
                raise NotSubmodule(f"map does not commute with the action of e_{b+1}")

    def apply(self, code: int) -> int:
        coords = self.source.decode(code)
        t = len(self.target.component_orders)
        acc = [0] * t
        for j, x in enumerate(coords):
            if x:
                row = self.matrix[j]
                for l in range(t):
                    acc[l] += x * row[l]
        return self.target.encode(acc)

    def then(self, other: "ModuleHom") -> "ModuleHom":
        """Composite: apply self first, then other."""
        if other.source != self.target:
            raise RingMismatch("composition endpoints do not match")
        prod_matrix = _mat_mul_mod(self.matrix, other.matrix, other.target.component_orders)
        return ModuleHom(self.source, other.target, prod_matrix, validate=False)

    def add(self, other: "ModuleHom") -> "ModuleHom":
        assert self.source == other.source and self.target == other.target
        mat = [
            [x + y for x, y in zip(r1, r2)]
            for r1, r2 in zip(self.matrix, other.matrix)
        ]
        return ModuleHom(self.source, self.target, mat, validate=False)

    def image(self) -> Submodule:
        if self._image is None:
            codes = {self.apply(c) for c in self.source.elements()}
            self._image = Submodule(self.target, frozenset(codes))
        return self._image

    def kernel(self) -> Submodule:
        if self._kernel is None:
            codes = {c for c in self.source.elements() if self.apply(c) == 0}
            self._kernel = Submodule(self.source, frozenset(codes))
        return self._kernel

    def is_injective(self) -> bool:
        return self.kernel().is_zero()

    def is_surjective(self) -> bool:
        return self.image().size == self.target.size

    def is_bijective(self) -> bool:
        return self.source.size == self.target.size and self.is_injective()

    def restrict_codes(self, codes: Iterable[int]) -> frozenset[int]:
        return frozenset(self.apply(c) for c in codes)

    def __eq__(self, other):
        return isinstance(other, ModuleHom) and self.key == other.key

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"<ModuleHom {self.source.name or 'M'} -> {self.target.name or 'N'}>"


def identity_hom(module: FiniteModule) -> ModuleHom:
    t = len(module.component_orders)
    return ModuleHom(module, module,
                     [[1 if i == j else 0 for j in range(t)] for i in range(t)],
                     validate=False)


def zero_hom(source: FiniteModule, target: FiniteModule) -> ModuleHom:
    t = len(target.component_orders)
    return ModuleHom(source, target,
                     [[0] * t for _ in range(len(source.component_orders))],
                     validate=False)


def kernel_image(f: ModuleHom) -> tuple[Submodule, Submodule]:
    return f.kernel(), f.image()


# -- hom enumeration ---------------------------------------------------------

_relation_cache: dict = {}
_free_cache: dict = {}
_signature_cache: dict = {}


def _free_module(ring: FiniteRing, k: int) -> FiniteModule:
    got = _free_cache.get((ring.key, k))
    if got is None:
        if k == 1:
            got = regular_module(ring)
        else:
            # internal scratch space for relation solving; its size is
            # guarded by max_relation_space, not the module limit
            scratch = Limits(max_module=max(DEFAULT_LIMITS.max_relation_space,
                                            ring.size ** k))
            got = direct_sum_with_maps(*[regular_module(ring)] * k,
                                       limits=scratch)[0]
        _free_cache[(ring.key, k)] = got
    return got


def _relation_generators(module: FiniteModule, limits: Limits) -> list[tuple[tuple[int, ...], ...]]:
    """Generators of the relation module of the selected generators:
    tuples (r_1..r_k) in R^k with sum g_i r_i = 0.  Cached per module."""
    got = _relation_cache.get(module.key)
    if got is not None:
        return got
    ws = module.workspace()
    gens = ws.generators
    k = len(gens)
    ring = module.ring
    if k == 0:
        _relation_cache[module.key] = []
        return []
    if ring.size ** k > limits.max_relation_space:
        raise SizeLimitExceeded(
            f"relation search space |R|^{k} = {ring.size ** k} exceeds limit"
        )
    free = _free_module(ring, k)
    fws = free.workspace()
    # evaluation map R^k -> M on the free generators
    rows = []
    for i in range(k):
        for b in range(len(ring.component_orders)):
            img = ws.basis_action()[b][gens[i]]
            rows.append(list(ws.coords[img]))
    ev = ModuleHom(free, module, rows)
    kernel = ev.kernel()
    out = []
    for c in kernel.generators():
        coords = fws.coords[c]
        word = []
        off = 0
        for _ in range(k):
            nb = len(ring.component_orders)
            word.append(tuple(coords[off:off + nb]))
            off += nb
        out.append(tuple(word))
    _relation_cache[module.key] = out
    return out


def iso_signature(module: FiniteModule) -> tuple:
    """Cheap isomorphism invariant: the multiset over elements of
    (additive order, annihilator size, cyclic span size)."""
    got = _signature_cache.get(module.key)
    if got is not None:
        return got
    ws = module.workspace()
    ring = module.ring
    profile = []
    for code in module.elements():
        coords = ws.coords[code]
        o = additive_order(module.component_orders, coords)
        ann = sum(1 for r in ring.element_coords() if ws.act(code, r) == 0)
        profile.append((o, ann, len(ws.cyclic_span(code))))
    got = (tuple(sorted(module.component_orders)), tuple(sorted(profile)))
    _signature_cache[module.key] = got
    return got


def hom_iter(source: FiniteModule, target: FiniteModule,
             limits: Limits = DEFAULT_LIMITS) -> Iterator[ModuleHom]:
    """All right-linear maps, by backtracking over generator images.

    Candidate images of each generator are filtered by its annihilator;
    full assignments are checked against the relation generators, which
    is sufficient because the constraint set is closed under the right
    action and addition.
    """
    if source.ring != target.ring:
        raise RingMismatch("hom endpoints must share the base ring")
    sws = source.workspace()
    tws = target.workspace()
    gens = sws.generators
    k = len(gens)
    if k == 0:
        yield zero_hom(source, target)
        return
    relations = _relation_generators(source, limits)
    candidates = []
    for g in gens:
        ann = sws.annihilator_generators(g)
        cand = [y for y in target.elements()
                if all(tws.act(y, r) == 0 for r in ann)]
        candidates.append(cand)
    words = sws.generator_words()
    coord_rows = [words[source.encode(tuple(
        1 if i == j else 0 for i in range(len(source.component_orders))
    ))] for j in range(len(source.component_orders))]

    def relation_ok(images):
        for rel in relations:
            acc = 0
            for yi, ri in zip(images, rel):
                if any(ri):
                    acc = tws.add(acc, tws.act(yi, ri))
            if acc != 0:
                return False
        return True

    def build_matrix(images):
        rows = []
        for word in coord_rows:
            acc = 0
            for yi, ri in zip(images, word):
                if any(ri):
                    acc = tws.add(acc, tws.act(yi, ri))
            rows.append(list(tws.coords[acc]))
        return rows

    stack = [()]  # partial image tuples
    while stack:
        partial = stack.pop()
        depth = len(partial)
        if depth == k:
            if relation_ok(partial):
                yield ModuleHom(source, target, build_matrix(partial), validate=False)
            continue
        for y in reversed(candidates[depth]):
            stack.append(partial + (y,))


def hom_set(source: FiniteModule, target: FiniteModule,
            limits: Limits = DEFAULT_LIMITS,
            max_count: int | None = None) -> list[ModuleHom]:
    """Complete hom list in a canonical (matrix-sorted) order."""
    out = []
    for h in hom_iter(source, target, limits):
        out.append(h)
        if max_count is not None and len(out) > max_count:
            raise SizeLimitExceeded(
                f"hom set larger than {max_count} between {source!r} and {target!r}"
            )
    out.sort(key=lambda h: h.matrix)
    return out


def find_isomorphism(m: FiniteModule, n: FiniteModule,
                     limits: Limits = DEFAULT_LIMITS) -> ModuleHom | None:
    """A bijective hom m -> n, or None.  Cheap invariants first."""
    if m.ring != n.ring:
        raise RingMismatch("isomorphism needs a common base ring")
    if m.size != n.size:
        return None
    if _abelian_invariants(m.component_orders) != _abelian_invariants(n.component_orders):
        return None
    if iso_signature(m) != iso_signature(n):
        return None
    mws = m.workspace()
    nws = n.workspace()
    gens = mws.generators
    k = len(gens)
    if k == 0:
        return identity_hom(m) if m == n else ModuleHom(m, n, [], validate=False)
    relations = _relation_generators(m, limits)
    words = mws.generator_words()
    coord_rows = [words[m.encode(tuple(
        1 if i == j else 0 for i in range(len(m.component_orders))
    ))] for j in range(len(m.component_orders))]
    cand_sets = []
    for g in gens:
        ann = mws.annihilator_generators(g)
        o = additive_order(m.component_orders, mws.coords[g])
        cand = [
            y for y in n.elements()
            if additive_order(n.component_orders, nws.coords[y]) == o
            and all(nws.act(y, r) == 0 for r in ann)
        ]
        cand_sets.append(cand)

    spans_m = [len(mws.span(gens[: i + 1])) for i in range(k)]

    def extend(partial: tuple[int, ...]) -> ModuleHom | None:
        depth = len(partial)
        if depth == k:
            for rel in relations:
                acc = 0
                for yi, ri in zip(partial, rel):
                    if any(ri):
                        acc = nws.add(acc, nws.act(yi, ri))
                if acc != 0:
                    return None
            rows = []
            for word in coord_rows:
                acc = 0
                for yi, ri in zip(partial, word):
                    if any(ri):
                        acc = nws.add(acc, nws.act(yi, ri))
                rows.append(list(nws.coords[acc]))
            h = ModuleHom(m, n, rows, validate=False)
            if h.is_bijective():
                return h
            return None
        for y in cand_sets[depth]:
            if len(nws.span(partial + (y,))) != spans_m[depth]:
                continue
            got = extend(partial + (y,))
            if got is not None:
                return got
        return None

    return extend(())


def is_isomorphic(m: FiniteModule, n: FiniteModule,
                  limits: Limits = DEFAULT_LIMITS) -> bool:
    return find_isomorphism(m, n, limits) is not None


def _abelian_invariants(orders) -> tuple[tuple[int, int], ...]:
    """Multiset of prime-power components, iso-invariant of the group."""
    out = []
    for d in orders:
        n = d
        p = 2
        while p * p <= n:
            if n % p == 0:
                e = 0
                while n % p == 0:
                    n //= p
                    e += 1
                out.append((p, e))
            p += 1
        if n > 1:
            out.append((n, 1))
    return tuple(sorted(out))


# -- endomorphism rings ------------------------------------------------------


class EndRing:
    """All endomorphisms of a module plus a structure-constant presentation
    of the ring they form.

    ``homs`` is the canonical sorted list; composition multiplies as
    "apply right factor first", matching endomorphisms written on the
    left of the module.
    """

    def __init__(self, module: FiniteModule, homs: list[ModuleHom],
                 limits: Limits = DEFAULT_LIMITS):
        self.module = module
        self.homs = homs
        self.index = {h.matrix: i for i, h in enumerate(homs)}
        self.limits = limits
        self._as_ring = None
        self._basis = None
        self._coords = None
        self._zbar_images: dict[tuple, list[frozenset[int]]] = {}
        ident = identity_hom(module)
        self.identity_index = self.index[ident.matrix]
        self.zero_index = self.index[zero_hom(module, module).matrix]

    @property
    def size(self) -> int:
        return len(self.homs)

    def compose(self, i: int, j: int) -> int:
        """Index of homs[i] after homs[j] (ring product i * j)."""
        m = _mat_mul_mod(self.homs[j].matrix, self.homs[i].matrix,
                         self.module.component_orders)
        return self.index[m]

    def add(self, i: int, j: int) -> int:
        m = _reduce_matrix(
            [
                [x + y for x, y in zip(r1, r2)]
                for r1, r2 in zip(self.homs[i].matrix, self.homs[j].matrix)
            ],
            self.module.component_orders,
        )
        return self.index[m]

    def _decompose(self):
        orders = self.module.component_orders
        t = len(orders)
        ambient = tuple(orders[l] for _ in range(t) for l in range(t))
        vectors = [
            [x for row in h.matrix for x in row] for h in self.homs
        ]
        factor_orders, reps, coords = subgroup_decomposition(ambient, vectors)
        basis = []
        for rep in reps:
            mat = [rep[i * t:(i + 1) * t] for i in range(t)]
            basis.append(ModuleHom(self.module, self.module, mat, validate=False))
        self._basis = basis
        self._coords = coords

    def basis_homs(self) -> list[ModuleHom]:
        if self._basis is None:
            self._decompose()
        return self._basis  # type: ignore[return-value]

    def hom_coords(self, hom: ModuleHom) -> tuple[int, ...]:
        if self._coords is None:
            self._decompose()
        flat = [x for row in hom.matrix for x in row]
        return self._coords.coords(flat)  # type: ignore[union-attr]

    @property
    def as_ring(self) -> FiniteRing:
        """The endomorphisms as a structure-constant ring (composition as
        multiplication), so the submodule machinery applies to its right
        ideals."""
        if self._as_ring is None:
            basis = self.basis_homs()
            orders = self.module.component_orders
            constants = []
            for fi in basis:
                row = []
                for fj in basis:
                    prod_matrix = _mat_mul_mod(fj.matrix, fi.matrix, orders)
                    row.append(self.hom_coords(
                        ModuleHom(self.module, self.module, prod_matrix, validate=False)
                    ))
                constants.append(tuple(row))
            one = self.hom_coords(self.homs[self.identity_index])
            ring = FiniteRing(
                tuple(self._coords.orders),  # type: ignore[union-attr]
                tuple(constants),
                one,
                name=f"End({self.module.name or 'M'})",
                limits=Limits(max_ring=max(self.limits.max_end, self.limits.max_ring),
                              max_module=self.limits.max_module,
                              max_end=self.limits.max_end),
            )
            self._as_ring = ring
        return self._as_ring

    def hom_index_from_ring_coords(self, coords: tuple[int, ...]) -> int:
        """Endomorphism index for an element of ``as_ring``."""
        basis = self.basis_homs()
        t = len(self.module.component_orders)
        acc = [[0] * t for _ in range(t)]
        for c, h in zip(coords, basis):
            if c:
                for j in range(t):
                    row = h.matrix[j]
                    for l in range(t):
                        acc[j][l] += c * row[l]
        return self.index[_reduce_matrix(acc, self.module.component_orders)]

    def image_sets(self, codes: frozenset[int] | None = None) -> list[frozenset[int]]:
        """Per endomorphism, the image of the given code set (whole module
        by default)."""
        key = tuple(sorted(codes)) if codes is not None else None
        got = self._zbar_images.get(key)
        if got is not None:
            return got
        base = codes if codes is not None else frozenset(self.module.elements())
        out = [frozenset(h.apply(c) for c in base) for h in self.homs]
        self._zbar_images[key] = out
        return out


def end_ring(module: FiniteModule, limits: Limits = DEFAULT_LIMITS) -> EndRing:
    got = _end_cache.get(module.key)
    if got is not None:
        if got.size > limits.max_end:
            raise SizeLimitExceeded(
                f"endomorphism ring of size {got.size} over limit {limits.max_end}"
            )
        return got
    homs = hom_set(module, module, limits, max_count=limits.max_end)
    out = EndRing(module, homs, limits)
    _end_cache[module.key] = out
    return out
