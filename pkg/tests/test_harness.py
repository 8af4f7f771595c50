"""Catalog generation, suite plumbing, report serialization, CLI."""

import json
import os

import pytest

from modlab.catalog import GenerationPolicy, enumerate_modules
from modlab.cli import HarnessConfig, main, run_all
from modlab.errors import InvalidConfig
from modlab.modules import is_isomorphic, regular_module
from modlab.reports import profile_module
from modlab.rings import builtin_ring
from modlab.serialize import (
    content_hash,
    module_from_json,
    module_to_json,
    ring_from_json,
    ring_to_json,
)
from modlab.suites import SUITES, verify_theorem


def test_catalog_f3(F3):
    cat = enumerate_modules(F3, GenerationPolicy(1, 256), ring_id="F3")
    assert [m.size for m in cat.modules] == [1, 3]


def test_catalog_z4_one_generator(Z4):
    cat = enumerate_modules(Z4, GenerationPolicy(1, 256), ring_id="Z4")
    assert [m.size for m in cat.modules] == [1, 2, 4]


def test_catalog_z8_contains_flagship_module(Z8, z2_plus_z8):
    cat = enumerate_modules(Z8, GenerationPolicy(2, 64), ring_id="Z8")
    assert any(is_isomorphic(m, z2_plus_z8) for m in cat.modules)


def test_catalog_no_isomorphic_pairs(Z6):
    cat = enumerate_modules(Z6, GenerationPolicy(2, 256), ring_id="Z6")
    for i, a in enumerate(cat.modules):
        for b in cat.modules[i + 1:]:
            assert not is_isomorphic(a, b)


def test_catalog_closed_under_summands(F2xZ4):
    from modlab.lattice import submodules
    from modlab.modules import submodule_as_module
    from modlab.structure import summand_keys

    cat = enumerate_modules(F2xZ4, GenerationPolicy(2, 256), ring_id="F2xZ4")
    for m in cat.modules:
        lat = submodules(m)
        for key in summand_keys(m):
            node = lat.nodes[lat.index[key]]
            part = submodule_as_module(node).module
            assert any(is_isomorphic(part, other) for other in cat.modules)


def test_catalog_deterministic(Z8):
    a = enumerate_modules(Z8, GenerationPolicy(2, 64), ring_id="Z8")
    # separate policy object, equal content
    b = enumerate_modules(Z8, GenerationPolicy(max_generators=2, max_size=64), ring_id="Z8")
    assert [m.key for m in a.modules] == [m.key for m in b.modules]


def test_ring_json_roundtrip(F2xZ4, T2F2):
    for ring in (F2xZ4, T2F2):
        data = ring_to_json(ring)
        back = ring_from_json(data)
        assert back == ring


def test_module_json_roundtrip(z2_plus_z8):
    data = module_to_json(z2_plus_z8, ring_id="Z8")
    assert data["ring"] == "Z8"
    back = module_from_json(data)
    assert back.key == z2_plus_z8.key
    inline = module_to_json(z2_plus_z8)
    assert isinstance(inline["ring"], dict)
    assert module_from_json(inline).key == z2_plus_z8.key


def test_content_hash_distinguishes(z2_plus_z8, z8_reg):
    assert content_hash(z2_plus_z8) != content_hash(z8_reg)
    assert content_hash(z2_plus_z8) == content_hash(z2_plus_z8)


def test_profile_flags_empty_on_catalog(Z4):
    cat = enumerate_modules(Z4, GenerationPolicy(2, 256), ring_id="Z4")
    for i, m in enumerate(cat.modules):
        rep = profile_module(m, desc=cat.label(i))
        assert rep.flags == []
        data = rep.to_json()
        assert set(data["cosingular"]) == {"zbar_size", "zbar2_size", "class"}


def test_profile_of_zero_module(Z4):
    from modlab.modules import zero_module

    rep = profile_module(zero_module(Z4))
    assert all(v in (True, None) for v in rep.predicates.values())


def test_verify_unknown_suite(Z4):
    cat = enumerate_modules(Z4, GenerationPolicy(2, 64), ring_id="Z4")
    with pytest.raises(KeyError):
        verify_theorem("T9.99", cat)


def test_invalid_config_rejected():
    with pytest.raises(InvalidConfig):
        HarnessConfig(rings=("NotARing",)).validate()
    with pytest.raises(InvalidConfig):
        HarnessConfig(suites=("bogus",)).validate()


def test_run_all_single_ring(tmp_path):
    config = HarnessConfig(rings=("Z4",), out_dir=str(tmp_path / "reports"))
    status, summary = run_all(config, echo=lambda *a, **k: None)
    assert status == 0
    assert summary["total_disagreements"] == 0
    files = sorted(os.listdir(tmp_path / "reports"))
    assert "summary.json" in files
    assert "profiles_Z4.json" in files
    assert any(name.startswith("T3_12") for name in files)
    with open(tmp_path / "reports" / "summary.json") as fh:
        data = json.load(fh)
    assert data["status"] == 0
    # the regular module's dual-Baer contrast record is in the bundle
    with open(tmp_path / "reports" / "profiles_Z4.json") as fh:
        profiles = json.load(fh)["modules"]
    reg = next(p for p in profiles if p["orders"] == [4])
    assert reg["predicates"]["dual_baer"] is False
    assert reg["predicates"]["t_dual_baer"] is True


def test_run_all_report_bundles_are_byte_identical(tmp_path):
    out1 = tmp_path / "run1"
    out2 = tmp_path / "run2"
    quiet = lambda *a, **k: None
    for out in (out1, out2):
        config = HarnessConfig(rings=("Z4", "F3"), out_dir=str(out))
        status, _ = run_all(config, echo=quiet)
        assert status == 0
    names1 = sorted(os.listdir(out1))
    names2 = sorted(os.listdir(out2))
    assert names1 == names2
    for name in names1:
        with open(out1 / name, "rb") as fh:
            b1 = fh.read()
        with open(out2 / name, "rb") as fh:
            b2 = fh.read()
        assert b1 == b2, f"bundle file {name} differs between runs"


def test_run_all_jobs_parallel_matches_serial(tmp_path):
    quiet = lambda *a, **k: None
    serial = HarnessConfig(rings=("Z4", "F3"), out_dir=str(tmp_path / "s"))
    parallel = HarnessConfig(rings=("Z4", "F3"), out_dir=str(tmp_path / "p"), jobs=2)
    run_all(serial, echo=quiet)
    run_all(parallel, echo=quiet)
    for name in sorted(os.listdir(tmp_path / "s")):
        with open(tmp_path / "s" / name) as fh:
            a = fh.read()
        with open(tmp_path / "p" / name) as fh:
            b = fh.read()
        assert a == b


# -- CLI ------------------------------------------------------------------------


def test_cli_ring_list(capsys):
    assert main(["ring", "list"]) == 0
    out = capsys.readouterr().out
    for rid in ("Z4", "Z8", "F3", "Z6", "F2xZ4", "T2F2"):
        assert rid in out


def test_cli_ring_show(capsys):
    assert main(["ring", "show", "F2xZ4"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["orders"] == [2, 4]
    assert data["one"] == [1, 1]


def test_cli_enumerate(capsys):
    assert main(["enumerate", "--ring", "Z4", "--gens", "1"]) == 0
    out = capsys.readouterr().out
    assert "size=   4" in out


def test_cli_profile_by_index(capsys):
    assert main(["profile", "--ring", "Z4", "--module", "3"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["predicates"]["t_dual_baer"] is True
    assert data["predicates"]["dual_baer"] is False


def test_cli_profile_from_file(tmp_path, capsys, z2_plus_z8):
    path = tmp_path / "module.json"
    path.write_text(json.dumps(module_to_json(z2_plus_z8, ring_id="Z8")))
    assert main(["profile", "--ring", "Z8", "--module", str(path), "--hasse"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["predicates"]["lifting"] is False
    assert data["predicates"]["t_lifting"] is True
    assert len(data["hasse"]["nodes"]) == 11


def test_cli_profile_bad_index(capsys):
    assert main(["profile", "--ring", "Z4", "--module", "99"]) == 2


def test_cli_verify_bad_ring(capsys):
    assert main(["verify", "--ring", "NOPE"]) == 2


def test_cli_verify_single_suite(tmp_path, capsys):
    code = main([
        "verify", "--suite", "P2.2", "--ring", "Z4",
        "--out", str(tmp_path / "rep"),
    ])
    assert code == 0
    data = json.loads(capsys.readouterr().out)
    assert data["total_disagreements"] == 0
    assert (tmp_path / "rep" / "P2_2_Z4.json").exists()


def test_cli_oracle_small(capsys):
    assert main(["oracle", "--check", "small", "--ring", "Z4", "--samples", "50"]) == 0


def test_cli_oracle_summand(capsys):
    assert main(["oracle", "--check", "summand", "--ring", "Z4", "--samples", "40"]) == 0


def test_cli_oracle_zbar(capsys):
    assert main(["oracle", "--check", "zbar", "--ring", "Z4", "--samples", "60"]) == 0


def test_disk_cache_roundtrip(tmp_path, monkeypatch, Z4):
    import modlab.reports as reports_mod

    monkeypatch.setenv("MODLAB_CACHE", str(tmp_path / "cache"))
    cat = enumerate_modules(Z4, GenerationPolicy(1, 16), ring_id="Z4")
    m = cat.modules[-1]
    reports_mod._profile_cache.pop(m.key, None)
    rep1 = profile_module(m)
    assert os.listdir(tmp_path / "cache")
    reports_mod._profile_cache.pop(m.key, None)
    rep2 = profile_module(m)
    assert rep1.predicates == rep2.predicates
