"""Lattice enumeration against a brute-force subgroup filter, and the
relative predicates small/essential/radical/socle."""

import itertools

import pytest

from modlab.errors import ParentMismatch
from modlab.lattice import (
    intersect_submodules,
    is_essential,
    is_small,
    radical,
    socle,
    submodules,
    sum_submodules,
)
from modlab.modules import regular_module, span, zero_module


def subgroup_filter_oracle(module):
    """Every subset of element codes that is action-closed and additively
    closed; exponential, so only for very small modules."""
    assert module.size <= 16
    ws = module.workspace()
    elements = list(range(module.size))
    found = set()
    nonzero = [c for c in elements if c != 0]
    for r in range(len(nonzero) + 1):
        for combo in itertools.combinations(nonzero, r):
            candidate = frozenset((0,) + combo)
            ok = True
            for a in candidate:
                for b in candidate:
                    if ws.add(a, b) not in candidate:
                        ok = False
                        break
                if not ok:
                    break
                for tab in ws.basis_action():
                    if tab[a] not in candidate:
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                found.add(candidate)
    return found


def test_lattice_counts_z4(z4_reg):
    assert len(submodules(z4_reg).nodes) == 3


def test_lattice_counts_z2_plus_z4(z2_plus_z4):
    lat = submodules(z2_plus_z4)
    assert len(lat.nodes) == 8
    assert {s.elements for s in lat.nodes} == subgroup_filter_oracle(z2_plus_z4)


def test_lattice_counts_z2_plus_z8(z2_plus_z8):
    lat = submodules(z2_plus_z8)
    assert len(lat.nodes) == 11
    assert {s.elements for s in lat.nodes} == subgroup_filter_oracle(z2_plus_z8)


def test_lattice_of_zero_module(Z4):
    assert len(submodules(zero_module(Z4)).nodes) == 1


def test_lattice_closure_and_modular_law(z2_plus_z8):
    lat = submodules(z2_plus_z8)
    n = len(lat.nodes)
    for i in range(n):
        for j in range(n):
            s = lat.join(i, j)
            m = lat.meet(i, j)
            assert 0 <= s < n and 0 <= m < n
            a, b = lat.nodes[i], lat.nodes[j]
            assert a.size * b.size == lat.nodes[s].size * lat.nodes[m].size


def test_sum_intersect_identities(z2_plus_z4):
    lat = submodules(z2_plus_z4)
    zero = z2_plus_z4.zero_submodule()
    full = z2_plus_z4.full_submodule()
    for node in lat.nodes:
        assert sum_submodules(node, zero).elements == node.elements
        assert intersect_submodules(node, full).elements == node.elements


def test_sum_example_in_mixed_module(z2_plus_z4):
    a = span(z2_plus_z4, [(1, 2)])
    b = span(z2_plus_z4, [(0, 2)])
    total = sum_submodules(a, b)
    # element-set union closure oracle
    ws = z2_plus_z4.workspace()
    union = {ws.add(x, y) for x in a.elements for y in b.elements}
    assert total.elements == frozenset(union)
    assert total.size == 4
    assert total.elements == span(z2_plus_z4, [(1, 0), (0, 2)]).elements


def test_parent_mismatch(z4_reg, z2_plus_z4):
    with pytest.raises(ParentMismatch):
        sum_submodules(z4_reg.zero_submodule(), z2_plus_z4.zero_submodule())


def test_is_small_examples(z4_reg, s_plus_c):
    assert is_small(z4_reg.zero_submodule())
    assert is_small(span(z4_reg, [2]))
    assert is_small(span(z4_reg, [2]), method="scan")
    summand = span(s_plus_c, [(0, 1)])
    assert not is_small(summand)
    assert not is_small(summand, method="scan")


def test_is_small_full_module_only_for_zero(z4_reg, Z4):
    assert not is_small(z4_reg.full_submodule())
    z = zero_module(Z4)
    assert is_small(z.full_submodule())


def test_is_essential_examples(z4_reg, s_plus_c):
    assert is_essential(z4_reg.full_submodule())
    assert is_essential(span(z4_reg, [2]))
    assert not is_essential(span(s_plus_c, [(1, 0)]))


def test_radical_socle_examples(z4_reg, z2_plus_z8, F3):
    assert sorted(socle(z4_reg).elements) == [0, 2]
    r = radical(z2_plus_z8)
    assert r.size == 4
    assert r.elements == span(z2_plus_z8, [(0, 2)]).elements
    semisimple = regular_module(F3)
    assert radical(semisimple).is_zero()


def test_radical_of_quotient_by_radical_vanishes(z2_plus_z8, s_plus_c):
    from modlab.modules import quotient_module

    for m in (z2_plus_z8, s_plus_c):
        q, _ = quotient_module(m, radical(m))
        assert radical(q).is_zero()
        assert socle(socle(m).parent).elements >= socle(m).elements


def test_socle_idempotent(z2_plus_z8):
    from modlab.modules import submodule_as_module

    s = socle(z2_plus_z8)
    inner = submodule_as_module(s)
    assert socle(inner.module).size == s.size


def test_radical_is_sum_of_small_submodules(z2_plus_z8):
    lat = submodules(z2_plus_z8)
    small_union = set()
    for node in lat.nodes:
        if is_small(node, method="scan"):
            small_union |= node.elements
    ws = z2_plus_z8.workspace()
    assert radical(z2_plus_z8).elements == frozenset(ws.span(list(small_union)))


def test_hasse_export(z2_plus_z4):
    from modlab.serialize import lattice_to_hasse_json

    lat = submodules(z2_plus_z4)
    data = lattice_to_hasse_json(lat)
    assert len(data["nodes"]) == 8
    assert len(data["covers"]) == 8
    # zero covers nothing; the top covers at least one maximal node
    zero_idx = next(i for i, n in enumerate(data["nodes"]) if n["size"] == 1)
    assert data["covers"][zero_idx] == []
    top_idx = next(i for i, n in enumerate(data["nodes"]) if n["size"] == 8)
    assert data["covers"][top_idx]
