"""Finite unital rings given by an additive cyclic decomposition plus
structure constants.

A ring lives on the group Z/d_1 x ... x Z/d_k with basis e_1..e_k; the
product is the bilinear extension of e_i * e_j = sum_l c[i][j][l] e_l.
Construction validates well-definedness, associativity on basis triples
and the two-sided identity, so every :class:`FiniteRing` in circulation
is an actual ring.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, prod
from typing import Iterator

from .config import DEFAULT_LIMITS, Limits
from .errors import IllFormedConstants, NoIdentity, NonAssociative, SizeLimitExceeded


class FiniteRing:
    """Finite associative ring with identity, in structure-constant form.

    ``component_orders``: additive orders (d_1..d_k) of the basis.
    ``constants``: c[i][j] is the coordinate vector of e_i * e_j.
    ``one``: coordinate vector of the multiplicative identity.
    Instances are immutable and hashable by content.
    """

    __slots__ = (
        "component_orders",
        "constants",
        "one",
        "name",
        "size",
        "key",
        "_hash",
        "_radix",
        "_opposite",
    )

    def __init__(self, component_orders, constants, one, name=None, limits: Limits = DEFAULT_LIMITS):
        orders = tuple(int(d) for d in component_orders)
        if any(d <= 0 for d in orders):
            raise IllFormedConstants(f"component orders must be positive, got {orders}")
        k = len(orders)
        size = prod(orders)
        if size > limits.max_ring:
            raise SizeLimitExceeded(f"ring size {size} exceeds limit {limits.max_ring}")
        if len(constants) != k or any(
            len(ci) != k or any(len(cij) != k for cij in ci) for ci in constants
        ):
            raise IllFormedConstants("structure constants must be a k x k table of k-vectors")
        if len(one) != k:
            raise IllFormedConstants("identity vector has wrong length")
        tbl = tuple(
            tuple(tuple(int(x) % orders[l] for l, x in enumerate(cij)) for cij in ci)
            for ci in constants
        )
        self.component_orders = orders
        self.constants = tbl
        self.one = tuple(int(x) % orders[l] for l, x in enumerate(one))
        self.name = name
        self.size = size
        radix = [1] * k
        for i in range(1, k):
            radix[i] = radix[i - 1] * orders[i - 1]
        self._radix = tuple(radix)
        self._opposite = None
        self._validate()
        self.key = ("ring", orders, tbl, self.one)
        self._hash = hash(self.key)

    # -- validation ------------------------------------------------------

    def _validate(self):
        orders = self.component_orders
        k = len(orders)
        c = self.constants
        # changing a factor by its order must not change the product
        for i in range(k):
            for j in range(k):
                for l in range(k):
                    x = c[i][j][l]
                    if (orders[i] * x) % orders[l] or (orders[j] * x) % orders[l]:
                        raise IllFormedConstants(
                            f"product e_{i+1}*e_{j+1} not well defined in coordinate {l+1}"
                        )
        for i in range(k):
            for j in range(k):
                for m in range(k):
                    left = self.mul_coords(c[i][j], self.basis_coords(m))
                    right = self.mul_coords(self.basis_coords(i), c[j][m])
                    if left != right:
                        raise NonAssociative(
                            f"(e_{i+1}e_{j+1})e_{m+1} != e_{i+1}(e_{j+1}e_{m+1})"
                        )
        for j in range(k):
            ej = self.basis_coords(j)
            if self.mul_coords(self.one, ej) != ej or self.mul_coords(ej, self.one) != ej:
                raise NoIdentity(f"declared identity is not a unit on e_{j+1}")

    # -- coordinate arithmetic -------------------------------------------

    def basis_coords(self, i: int) -> tuple[int, ...]:
        return tuple(1 if j == i else 0 for j in range(len(self.component_orders)))

    def zero_coords(self) -> tuple[int, ...]:
        return (0,) * len(self.component_orders)

    def add_coords(self, a, b) -> tuple[int, ...]:
        return tuple((x + y) % d for x, y, d in zip(a, b, self.component_orders))

    def neg_coords(self, a) -> tuple[int, ...]:
        return tuple((-x) % d for x, d in zip(a, self.component_orders))

    def mul_coords(self, a, b) -> tuple[int, ...]:
        k = len(self.component_orders)
        acc = [0] * k
        c = self.constants
        for i in range(k):
            ai = a[i]
            if not ai:
                continue
            ci = c[i]
            for j in range(k):
                bj = b[j]
                if not bj:
                    continue
                cij = ci[j]
                f = ai * bj
                for l in range(k):
                    acc[l] += f * cij[l]
        return tuple(x % d for x, d in zip(acc, self.component_orders))

    def encode(self, coords) -> int:
        return sum(x * r for x, r in zip(coords, self._radix))

    def decode(self, code: int) -> tuple[int, ...]:
        return tuple((code // r) % d for r, d in zip(self._radix, self.component_orders))

    def element_coords(self) -> Iterator[tuple[int, ...]]:
        for code in range(self.size):
            yield self.decode(code)

    # -- element wrappers --------------------------------------------------

    def element(self, coords) -> "RingElement":
        return RingElement(self, tuple(int(x) % d for x, d in zip(coords, self.component_orders)))

    def zero(self) -> "RingElement":
        return RingElement(self, self.zero_coords())

    def one_element(self) -> "RingElement":
        return RingElement(self, self.one)

    def elements(self) -> Iterator["RingElement"]:
        for coords in self.element_coords():
            yield RingElement(self, coords)

    def is_commutative(self) -> bool:
        c = self.constants
        k = len(self.component_orders)
        return all(c[i][j] == c[j][i] for i in range(k) for j in range(i + 1, k))

    def idempotent_coords(self) -> list[tuple[int, ...]]:
        """All coordinates e with e*e == e, in code order."""
        return [a for a in self.element_coords() if self.mul_coords(a, a) == a]

    def __eq__(self, other):
        return isinstance(other, FiniteRing) and self.key == other.key

    def __hash__(self):
        return self._hash

    def __repr__(self):
        label = self.name or "FiniteRing"
        return f"<{label} orders={self.component_orders} size={self.size}>"


@dataclass(frozen=True)
class RingElement:
    """Element of a :class:`FiniteRing`, as a reduced coordinate vector."""

    ring: FiniteRing
    coords: tuple[int, ...]

    def __add__(self, other: "RingElement") -> "RingElement":
        return RingElement(self.ring, self.ring.add_coords(self.coords, other.coords))

    def __neg__(self) -> "RingElement":
        return RingElement(self.ring, self.ring.neg_coords(self.coords))

    def __sub__(self, other: "RingElement") -> "RingElement":
        return self + (-other)

    def __mul__(self, other: "RingElement") -> "RingElement":
        return RingElement(self.ring, self.ring.mul_coords(self.coords, other.coords))

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __repr__(self):
        return f"RingElement{self.coords}"


# -- constructors ----------------------------------------------------------


def cyclic_ring(n: int, name: str | None = None, limits: Limits = DEFAULT_LIMITS) -> FiniteRing:
    """Z/n with its usual multiplication."""
    if n <= 0:
        raise IllFormedConstants("cyclic ring order must be positive")
    return FiniteRing((n,), (((1,),),), (1,), name=name or f"Z{n}", limits=limits)


def product_ring(r1: FiniteRing, r2: FiniteRing, name: str | None = None,
                 limits: Limits = DEFAULT_LIMITS) -> FiniteRing:
    """Componentwise product ring R1 x R2."""
    k1 = len(r1.component_orders)
    k2 = len(r2.component_orders)
    k = k1 + k2
    orders = r1.component_orders + r2.component_orders

    def pad1(v):
        return tuple(v) + (0,) * k2

    def pad2(v):
        return (0,) * k1 + tuple(v)

    zero = (0,) * k
    constants = []
    for i in range(k):
        row = []
        for j in range(k):
            if i < k1 and j < k1:
                row.append(pad1(r1.constants[i][j]))
            elif i >= k1 and j >= k1:
                row.append(pad2(r2.constants[i - k1][j - k1]))
            else:
                row.append(zero)
        constants.append(tuple(row))
    one = tuple(r1.one) + tuple(r2.one)
    label = name or f"{r1.name or 'R1'}x{r2.name or 'R2'}"
    return FiniteRing(orders, tuple(constants), one, name=label, limits=limits)


def ring_from_constants(component_orders, constants, one, name: str | None = None,
                        limits: Limits = DEFAULT_LIMITS) -> FiniteRing:
    """Validated ring from raw structure-constant data."""
    return FiniteRing(component_orders, constants, one, name=name, limits=limits)


def upper_triangular_ring(p: int, name: str | None = None,
                          limits: Limits = DEFAULT_LIMITS) -> FiniteRing:
    """Upper triangular 2x2 matrices over Z/p, basis (E11, E12, E22)."""
    if p < 2 or any(p % q == 0 for q in range(2, p)):
        raise IllFormedConstants(f"modulus {p} must be prime for the triangular matrix ring")
    z = (0, 0, 0)
    e11, e12, e22 = (1, 0, 0), (0, 1, 0), (0, 0, 1)
    constants = (
        (e11, e12, z),
        (z, z, e12),
        (z, z, e22),
    )
    return FiniteRing((p, p, p), constants, (1, 0, 1), name=name or f"T2F{p}", limits=limits)


def polynomial_quotient_ring(p: int, n: int, name: str | None = None,
                             limits: Limits = DEFAULT_LIMITS) -> FiniteRing:
    """(Z/p)[x] / (x^n), basis 1, x, ..., x^(n-1)."""
    if n <= 0:
        raise IllFormedConstants("polynomial quotient degree must be positive")
    constants = tuple(
        tuple(
            tuple(1 if l == i + j else 0 for l in range(n)) if i + j < n else (0,) * n
            for j in range(n)
        )
        for i in range(n)
    )
    one = tuple(1 if l == 0 else 0 for l in range(n))
    return FiniteRing((p,) * n, constants, one, name=name or f"Z{p}x{n}poly", limits=limits)


def opposite_ring(r: FiniteRing) -> FiniteRing:
    """Same additive group, reversed multiplication.  Involutive on the nose."""
    if r._opposite is not None:
        return r._opposite
    k = len(r.component_orders)
    constants = tuple(tuple(r.constants[j][i] for j in range(k)) for i in range(k))
    if constants == r.constants:
        r._opposite = r
        return r
    name = r.name[:-3] if r.name and r.name.endswith("^op") else f"{r.name}^op"
    op = FiniteRing(r.component_orders, constants, r.one, name=name)
    op._opposite = r
    r._opposite = op
    return op


def build_ring(spec, limits: Limits = DEFAULT_LIMITS) -> FiniteRing:
    """Build a ring from a tagged description.

    Accepted forms (tuple or dict with a ``kind`` key):
      ("cyclic", n); ("product", spec1, spec2);
      ("structure_constants", {"orders":..., "constants":..., "one":...});
      ("upper_triangular_2x2", p); ("polynomial_quotient", p, n).
    """
    if isinstance(spec, dict):
        kind = spec.get("kind")
        if kind == "cyclic":
            return cyclic_ring(spec["n"], limits=limits)
        if kind == "product":
            return product_ring(build_ring(spec["first"], limits=limits),
                                build_ring(spec["second"], limits=limits), limits=limits)
        if kind == "structure_constants":
            return ring_from_constants(spec["orders"], spec["constants"], spec["one"],
                                       name=spec.get("name"), limits=limits)
        if kind == "upper_triangular_2x2":
            return upper_triangular_ring(spec["p"], limits=limits)
        if kind == "polynomial_quotient":
            return polynomial_quotient_ring(spec["p"], spec["n"], limits=limits)
        raise IllFormedConstants(f"unknown ring spec kind {kind!r}")
    tag, *args = spec
    if tag == "cyclic":
        return cyclic_ring(*args, limits=limits)
    if tag == "product":
        return product_ring(build_ring(args[0], limits=limits),
                            build_ring(args[1], limits=limits), limits=limits)
    if tag == "structure_constants":
        raw = args[0]
        return ring_from_constants(raw["orders"], raw["constants"], raw["one"],
                                   name=raw.get("name"), limits=limits)
    if tag == "upper_triangular_2x2":
        return upper_triangular_ring(*args, limits=limits)
    if tag == "polynomial_quotient":
        return polynomial_quotient_ring(*args, limits=limits)
    raise IllFormedConstants(f"unknown ring spec tag {tag!r}")


# The default verification rings: two chain rings with zero second radical
# of the cosingularity filtration, two semisimple rings, one ring with a
# proper nonzero noncosingular block, and one noncommutative ring.
_BUILTIN_SPECS = {
    "Z4": ("cyclic", 4),
    "Z8": ("cyclic", 8),
    "F3": ("cyclic", 3),
    "Z6": ("cyclic", 6),
    "F2xZ4": ("product", ("cyclic", 2), ("cyclic", 4)),
    "T2F2": ("upper_triangular_2x2", 2),
}

_builtin_cache: dict[str, FiniteRing] = {}


def builtin_ring_ids() -> list[str]:
    return list(_BUILTIN_SPECS)


def builtin_ring(ring_id: str) -> FiniteRing:
    """Look up a built-in ring id (also accepts Z<n> / F<p> shorthand)."""
    if ring_id in _builtin_cache:
        return _builtin_cache[ring_id]
    if ring_id in _BUILTIN_SPECS:
        ring = build_ring(_BUILTIN_SPECS[ring_id])
    elif ring_id[:1] in ("Z", "F") and ring_id[1:].isdigit():
        ring = cyclic_ring(int(ring_id[1:]), name=ring_id)
    else:
        raise KeyError(f"unknown ring id {ring_id!r}")
    if ring.name != ring_id:
        ring = FiniteRing(ring.component_orders, ring.constants, ring.one, name=ring_id)
    _builtin_cache[ring_id] = ring
    return ring


def additive_order(ring_or_orders, coords) -> int:
    """Additive order of a coordinate vector."""
    orders = getattr(ring_or_orders, "component_orders", ring_or_orders)
    out = 1
    for x, d in zip(coords, orders):
        if x:
            o = d // gcd(x, d)
            out = out * o // gcd(out, o)
    return out


def exponent(orders) -> int:
    """lcm of the component orders (1 for the zero group)."""
    out = 1
    for d in orders:
        out = out * d // gcd(out, d)
    return out
