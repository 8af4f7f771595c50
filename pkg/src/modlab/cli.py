"""Command line interface: ring inspection, catalog enumeration, module
profiles, verification suites, and oracle cross-checks.

Exit codes for ``verify``/``oracle``: 0 all clean, 1 disagreement or
oracle mismatch, 2 invalid configuration.  Report bundles are
byte-stable for a fixed configuration: wall-clock timings go to stderr,
never into the files.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .catalog import GenerationPolicy, ModuleCatalog, enumerate_modules
from .cosingular import zbar
from .errors import InvalidConfig, ModlabError, SizeLimitExceeded
from .lattice import is_small, submodules
from .modules import FiniteModule, hom_set, span
from .reports import profile_module
from .rings import builtin_ring, builtin_ring_ids
from .serialize import (
    lattice_to_hasse_json,
    module_from_json,
    ring_to_json,
    stable_dumps,
)
from .structure import complement_of, is_small_module, summand_witness_idempotent
from .suites import SUITES, verify_theorem

DEFAULT_RINGS = ("Z4", "Z8", "F3", "Z6", "F2xZ4", "T2F2")


@dataclass
class HarnessConfig:
    rings: tuple[str, ...] = DEFAULT_RINGS
    suites: tuple[str, ...] = tuple(SUITES)
    max_generators: int = 2
    max_size: int = 256
    out_dir: str | None = None
    jobs: int = 1

    def validate(self) -> None:
        for rid in self.rings:
            try:
                builtin_ring(rid)
            except KeyError as exc:
                raise InvalidConfig(str(exc)) from None
        for sid in self.suites:
            if sid not in SUITES:
                raise InvalidConfig(f"unknown suite id {sid!r}")
        if self.max_generators < 1 or self.max_size < 1 or self.jobs < 1:
            raise InvalidConfig("policy bounds must be positive")


def _catalog(rid: str, config: HarnessConfig) -> ModuleCatalog:
    return enumerate_modules(
        builtin_ring(rid),
        GenerationPolicy(config.max_generators, config.max_size),
        ring_id=rid,
    )


def run_all(config: HarnessConfig, echo=print) -> tuple[int, dict]:
    """Profiles plus every configured suite over every configured ring.
    Returns (exit status, summary object) and writes the report bundle
    when an output directory is configured."""
    config.validate()
    reports = []
    profile_flags = 0

    def ring_job(rid: str):
        catalog = _catalog(rid, config)
        profiles = []
        for i, m in enumerate(catalog.modules):
            profiles.append(profile_module(m, desc=catalog.label(i)))
        suite_reports = [
            verify_theorem(sid, catalog) for sid in config.suites
        ]
        return rid, catalog, profiles, suite_reports

    if config.jobs > 1:
        with ThreadPoolExecutor(max_workers=config.jobs) as pool:
            ring_results = list(pool.map(ring_job, config.rings))
    else:
        ring_results = [ring_job(rid) for rid in config.rings]

    bundle: dict[str, str] = {}
    summary_rows = []
    for rid, catalog, profiles, suite_reports in ring_results:
        flags = sum(len(p.flags) for p in profiles)
        profile_flags += flags
        bundle[f"profiles_{rid}.json"] = stable_dumps(
            {"ring": rid, "modules": [p.to_json() for p in profiles]}
        )
        for rep in suite_reports:
            reports.append(rep)
            bundle[f"{rep.suite.replace('.', '_')}_{rid}.json"] = stable_dumps(
                rep.to_json()
            )
            echo(
                f"{rep.suite:6s} {rid:7s} instances={rep.summary['instances']:5d} "
                f"disagreements={rep.summary['disagreements']} "
                f"skipped={rep.summary['skipped']} "
                f"[{rep.runtime:.1f}s]",
                file=sys.stderr,
            )
        summary_rows.append(
            {
                "ring": rid,
                "modules": len(catalog.modules),
                "skipped_candidates": catalog.skipped,
                "profile_flags": flags,
                "suites": {
                    rep.suite: rep.summary for rep in suite_reports
                },
            }
        )

    disagreements = sum(rep.summary["disagreements"] for rep in reports)
    status = 0 if disagreements == 0 and profile_flags == 0 else 1
    summary = {
        "config": {
            "rings": list(config.rings),
            "suites": list(config.suites),
            "max_generators": config.max_generators,
            "max_size": config.max_size,
        },
        "rings": summary_rows,
        "total_disagreements": disagreements,
        "total_profile_flags": profile_flags,
        "status": status,
    }
    bundle["summary.json"] = stable_dumps(summary)
    if config.out_dir:
        os.makedirs(config.out_dir, exist_ok=True)
        for name, text in sorted(bundle.items()):
            with open(os.path.join(config.out_dir, name), "w") as fh:
                fh.write(text)
                fh.write("\n")
    if disagreements:
        for rep in reports:
            if rep.summary["disagreements"]:
                bad = next(
                    r for r in rep.instances
                    if not r.get("agree", r.get("holds", True))
                )
                echo(
                    f"DISAGREEMENT {rep.suite} over {rep.ring_id}: "
                    f"{json.dumps(bad, sort_keys=True)}",
                    file=sys.stderr,
                )
    return status, summary


# -- oracle cross-checks -------------------------------------------------------


def oracle_small(config: HarnessConfig, samples: int, seed: int, echo=print) -> int:
    """Radical fast path versus the definitional smallness scan on every
    catalog pair plus randomly generated submodules."""
    rng = random.Random(seed)
    mismatches = 0
    checked = 0
    pool: list[FiniteModule] = []
    for rid in config.rings:
        catalog = _catalog(rid, config)
        for m in catalog.modules:
            pool.append(m)
            lat = submodules(m)
            for node in lat.nodes:
                checked += 1
                if is_small(node) != is_small(node, method="scan"):
                    mismatches += 1
                    echo(f"MISMATCH small: {m!r} node={sorted(node.elements)}")
    while checked < samples:
        m = pool[rng.randrange(len(pool))]
        k = rng.randrange(0, 3)
        gens = [rng.randrange(m.size) for _ in range(k)]
        node = span(m, gens)
        checked += 1
        if is_small(node) != is_small(node, method="scan"):
            mismatches += 1
            echo(f"MISMATCH small: {m!r} gens={gens}")
    echo(f"oracle small: {checked} pairs, {mismatches} mismatches", file=sys.stderr)
    return 0 if mismatches == 0 else 1


def oracle_summand(config: HarnessConfig, samples: int, echo=print) -> int:
    """Complement scan versus idempotent witness on all catalog pairs."""
    mismatches = 0
    checked = 0
    for rid in config.rings:
        catalog = _catalog(rid, config)
        for m in catalog.modules:
            lat = submodules(m)
            for node in lat.nodes:
                try:
                    witness = summand_witness_idempotent(node)
                except SizeLimitExceeded:
                    continue
                checked += 1
                if (complement_of(node) is not None) != (witness is not None):
                    mismatches += 1
                    echo(f"MISMATCH summand: {m!r} node={sorted(node.elements)}")
                if samples and checked >= samples:
                    break
    echo(f"oracle summand: {checked} pairs, {mismatches} mismatches", file=sys.stderr)
    return 0 if mismatches == 0 else 1


def oracle_zbar(config: HarnessConfig, samples: int, echo=print) -> int:
    """Quotient formula against the kernel-intersection bound: the radical
    must sit inside the kernel of every map into a small module."""
    mismatches = 0
    checked = 0
    for rid in config.rings:
        catalog = _catalog(rid, config)
        smalls = [m for m in catalog.modules if is_small_module(m)]
        for m in catalog.modules:
            z = zbar(m)
            for target in smalls:
                for h in hom_set(m, target):
                    checked += 1
                    if any(h.apply(c) != 0 for c in z.elements):
                        mismatches += 1
                        echo(f"MISMATCH zbar: {m!r} -> {target!r}")
                if samples and checked >= samples:
                    break
    echo(f"oracle zbar: {checked} homs, {mismatches} violations", file=sys.stderr)
    return 0 if mismatches == 0 else 1


# -- argument parsing ------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="modlab",
        description="finite ring and module workbench",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    ring = sub.add_parser("ring", help="inspect built-in rings")
    ring_sub = ring.add_subparsers(dest="ring_command", required=True)
    ring_sub.add_parser("list", help="list ring ids")
    show = ring_sub.add_parser("show", help="print a ring as JSON")
    show.add_argument("ring_id")

    enum = sub.add_parser("enumerate", help="enumerate a module catalog")
    enum.add_argument("--ring", required=True)
    enum.add_argument("--gens", type=int, default=2)
    enum.add_argument("--max-size", type=int, default=256)

    prof = sub.add_parser("profile", help="full predicate profile of a module")
    prof.add_argument("--ring", required=True)
    prof.add_argument("--module", required=True,
                      help="catalog index or path to a module JSON file")
    prof.add_argument("--gens", type=int, default=2)
    prof.add_argument("--max-size", type=int, default=256)
    prof.add_argument("--hasse", action="store_true",
                      help="include the submodule lattice as a Hasse diagram")

    verify = sub.add_parser("verify", help="run verification suites")
    verify.add_argument("--suite", default="all")
    verify.add_argument("--ring", default="all")
    verify.add_argument("--out", default=None)
    verify.add_argument("--jobs", type=int, default=1)
    verify.add_argument("--gens", type=int, default=2)
    verify.add_argument("--max-size", type=int, default=256)

    oracle = sub.add_parser("oracle", help="fast-path versus brute-force checks")
    oracle.add_argument("--check", required=True, choices=["small", "summand", "zbar"])
    oracle.add_argument("--samples", type=int, default=1000)
    oracle.add_argument("--ring", default="all")
    oracle.add_argument("--seed", type=int, default=0)

    return parser


def _rings_arg(value: str) -> tuple[str, ...]:
    if value == "all":
        return DEFAULT_RINGS
    return tuple(part.strip() for part in value.split(",") if part.strip())


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "ring":
            if args.ring_command == "list":
                for rid in builtin_ring_ids():
                    ring = builtin_ring(rid)
                    print(f"{rid:8s} orders={ring.component_orders} size={ring.size}")
                return 0
            ring = builtin_ring(args.ring_id)
            print(stable_dumps(ring_to_json(ring)))
            return 0

        if args.command == "enumerate":
            config = HarnessConfig(rings=(args.ring,), max_generators=args.gens,
                                   max_size=args.max_size)
            config.validate()
            catalog = _catalog(args.ring, config)
            for i, m in enumerate(catalog.modules):
                print(f"{catalog.label(i):24s} size={m.size:4d} "
                      f"orders={m.component_orders}")
            for note in catalog.skipped:
                print(f"skipped: {note}", file=sys.stderr)
            return 0

        if args.command == "profile":
            config = HarnessConfig(rings=(args.ring,), max_generators=args.gens,
                                   max_size=args.max_size)
            config.validate()
            ring = builtin_ring(args.ring)
            if os.path.exists(args.module):
                with open(args.module) as fh:
                    module = module_from_json(json.load(fh), ring=ring)
                desc = args.module
            else:
                catalog = _catalog(args.ring, config)
                idx = int(args.module)
                if not 0 <= idx < len(catalog.modules):
                    raise InvalidConfig(
                        f"catalog index {idx} out of range 0..{len(catalog.modules)-1}"
                    )
                module = catalog.modules[idx]
                desc = catalog.label(idx)
            report = profile_module(module, desc=desc)
            payload = report.to_json()
            if args.hasse:
                payload["hasse"] = lattice_to_hasse_json(submodules(module))
            print(stable_dumps(payload))
            return 0

        if args.command == "verify":
            suites = tuple(SUITES) if args.suite == "all" else tuple(
                s.strip() for s in args.suite.split(",") if s.strip()
            )
            config = HarnessConfig(
                rings=_rings_arg(args.ring),
                suites=suites,
                max_generators=args.gens,
                max_size=args.max_size,
                out_dir=args.out,
                jobs=args.jobs,
            )
            status, summary = run_all(config)
            print(stable_dumps({
                "status": summary["status"],
                "total_disagreements": summary["total_disagreements"],
                "total_profile_flags": summary["total_profile_flags"],
            }))
            return status

        if args.command == "oracle":
            config = HarnessConfig(rings=_rings_arg(args.ring))
            config.validate()
            if args.check == "small":
                return oracle_small(config, args.samples, args.seed)
            if args.check == "summand":
                return oracle_summand(config, args.samples)
            return oracle_zbar(config, args.samples)

        raise InvalidConfig(f"unknown command {args.command!r}")
    except InvalidConfig as exc:
        print(f"invalid configuration: {exc}", file=sys.stderr)
        return 2
    except ModlabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
