"""Exact integer matrix utilities: Smith normal form with column transforms,
triangular lattice bases, and exact solves.

Matrices are lists of row lists of Python ints.  Everything here is exact;
the sizes involved (coordinate counts of desk-scale modules) stay tiny, so
no effort is made to control entry growth beyond what the algorithms give
for free.
"""

from __future__ import annotations


def identity_matrix(n: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    """Plain integer matrix product (len(a[0]) must equal len(b))."""
    if not a:
        return []
    inner = len(b)
    cols = len(b[0]) if b else 0
    out = []
    for row in a:
        acc = [0] * cols
        for k in range(inner):
            x = row[k]
            if x:
                brow = b[k]
                for j in range(cols):
                    acc[j] += x * brow[j]
        out.append(acc)
    return out


def smith_normal_form(
    a: list[list[int]],
) -> tuple[list[int], list[list[int]], list[list[int]]]:
    """Diagonalize ``a`` by unimodular row/column operations.

    Returns ``(diag, v, vinv)`` such that ``u @ a @ v`` is diagonal with
    ``diag[0] | diag[1] | ...`` for some unimodular ``u`` (not returned),
    and ``v @ vinv == I``.  ``diag`` has ``min(rows, cols)`` entries, all
    nonnegative.  Only the column transform is tracked because quotient
    and subgroup constructions consume coordinates, not relations.
    """
    rows = len(a)
    cols = len(a[0]) if rows else 0
    s = [list(r) for r in a]
    v = identity_matrix(cols)
    vinv = identity_matrix(cols)

    def col_swap(i, j):
        for r in s:
            r[i], r[j] = r[j], r[i]
        for r in v:
            r[i], r[j] = r[j], r[i]
        vinv[i], vinv[j] = vinv[j], vinv[i]

    def col_addmul(i, j, q):
        # col_i += q * col_j
        for r in s:
            r[i] += q * r[j]
        for r in v:
            r[i] += q * r[j]
        for k in range(cols):
            vinv[j][k] -= q * vinv[i][k]

    def col_negate(i):
        for r in s:
            r[i] = -r[i]
        for r in v:
            r[i] = -r[i]
        for k in range(cols):
            vinv[i][k] = -vinv[i][k]

    def row_swap(i, j):
        s[i], s[j] = s[j], s[i]

    def row_addmul(i, j, q):
        si, sj = s[i], s[j]
        for k in range(cols):
            si[k] += q * sj[k]

    n = min(rows, cols)
    for t in range(n):
        while True:
            # Pick the smallest nonzero entry in the remaining block as pivot.
            pr = pc = -1
            best = None
            for i in range(t, rows):
                row = s[i]
                for j in range(t, cols):
                    x = row[j]
                    if x and (best is None or abs(x) < best):
                        best = abs(x)
                        pr, pc = i, j
            if best is None:
                break
            if pr != t:
                row_swap(pr, t)
            if pc != t:
                col_swap(pc, t)
            p = s[t][t]
            dirty = False
            for i in range(t + 1, rows):
                if s[i][t]:
                    q = s[i][t] // p
                    if q:
                        row_addmul(i, t, -q)
                    if s[i][t]:
                        dirty = True
            for j in range(t + 1, cols):
                if s[t][j]:
                    q = s[t][j] // p
                    if q:
                        col_addmul(j, t, -q)
                    if s[t][j]:
                        dirty = True
            if dirty:
                continue
            # Pivot must divide every remaining entry for the divisor chain.
            offender = None
            for i in range(t + 1, rows):
                row = s[i]
                for j in range(t + 1, cols):
                    if row[j] % p:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            row_addmul(t, offender, 1)
        if t < n and s[t][t] < 0:
            col_negate(t)

    diag = [s[i][i] if i < cols else 0 for i in range(n)]
    return diag, v, vinv


class RowBasis:
    """Incrementally built triangular basis of an integer row lattice.

    Rows are absorbed one at a time; ``pivots[c]`` holds the basis row
    whose leading entry sits in column ``c``.  Dimension must be full
    before :meth:`solve` is usable.
    """

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.pivots: list[list[int] | None] = [None] * ncols

    def add(self, vector: list[int]) -> None:
        v = list(vector)
        for c in range(self.ncols):
            if not v[c]:
                continue
            piv = self.pivots[c]
            if piv is None:
                if v[c] < 0:
                    v = [-x for x in v]
                self.pivots[c] = v
                return
            # gcd-combine so the stored pivot divides future entries
            while v[c]:
                q = piv[c] // v[c]
                piv2 = [piv[k] - q * v[k] for k in range(self.ncols)]
                self.pivots[c] = v
                piv, v = v, piv2
            stored = self.pivots[c]
            if stored[c] < 0:
                self.pivots[c] = [-x for x in stored]

    def rows(self) -> list[list[int]]:
        return [list(r) for r in self.pivots if r is not None]

    def is_full_rank(self) -> bool:
        return all(r is not None for r in self.pivots)

    def matrix(self) -> list[list[int]]:
        """Square triangular basis matrix (requires full rank)."""
        assert self.is_full_rank()
        return [list(r) for r in self.pivots]  # type: ignore[union-attr]

    def solve(self, vector: list[int]) -> list[int]:
        """Exact coordinates ``t`` with ``t @ B == vector``; vector must
        lie in the lattice."""
        assert self.is_full_rank()
        v = list(vector)
        t = [0] * self.ncols
        for c in range(self.ncols):
            piv = self.pivots[c]
            assert piv is not None
            if v[c] % piv[c]:
                raise ValueError("vector not in lattice")
            q = v[c] // piv[c]
            t[c] = q
            if q:
                for k in range(c, self.ncols):
                    v[k] -= q * piv[k]
        if any(v):
            raise ValueError("vector not in lattice")
        return t


def subgroup_decomposition(
    ambient_orders: tuple[int, ...], generators: list[list[int]]
) -> tuple[tuple[int, ...], list[list[int]], "SubgroupCoords"]:
    """Cyclic decomposition of the subgroup generated by ``generators``
    inside the group with the given component orders.

    Returns ``(orders, basis, coords)``: cyclic factor orders (each > 1,
    divisor chain), one ambient representative vector per factor, and a
    coordinate solver mapping subgroup elements to factor coordinates.
    """
    d = len(ambient_orders)
    if d == 0:
        return (), [], SubgroupCoords((), None, [], ())
    basis = RowBasis(d)
    for g in generators:
        basis.add([x % o for x, o in zip(g, ambient_orders)])
    for i, o in enumerate(ambient_orders):
        basis.add([o if j == i else 0 for j in range(d)])
    b = basis.matrix()
    # Express the ambient relation lattice in the coordinates of B, then
    # diagonalize: the quotient by those relations is the subgroup.
    c = [basis.solve([o if j == i else 0 for j in range(d)]) for i, o in enumerate(ambient_orders)]
    diag, v, vinv = smith_normal_form(c)
    keep = [i for i, s in enumerate(diag) if s != 1]
    orders = tuple(diag[i] for i in keep)
    rep_rows = mat_mul(vinv, b)
    reps = [
        [x % o for x, o in zip(rep_rows[i], ambient_orders)]
        for i in keep
    ]
    coords = SubgroupCoords(orders, basis, v, tuple(keep))
    return orders, reps, coords


class SubgroupCoords:
    """Maps ambient vectors of a subgroup to its cyclic-factor coordinates."""

    def __init__(self, orders, basis: RowBasis | None, v, keep: tuple[int, ...]):
        self.orders = orders
        self._basis = basis
        self._v = v
        self._keep = keep

    def coords(self, vector: list[int]) -> tuple[int, ...]:
        if self._basis is None:
            return ()
        t = self._basis.solve(list(vector))
        v = self._v
        out = []
        for pos, i in enumerate(self._keep):
            acc = 0
            for k in range(len(t)):
                acc += t[k] * v[k][i]
            out.append(acc % self.orders[pos])
        return tuple(out)
