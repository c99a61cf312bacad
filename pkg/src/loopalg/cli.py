"""Command line front end: compute, verify, series and report.

Reports serialize deterministically (sorted keys, fixed layout), so a given
configuration always produces byte-identical output.  Completed compute
results are cached on disk keyed by a content hash of the configuration.

Exit codes: 0 pass, 1 check failure, 2 usage/config error, 3 budget
exceeded.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time
from dataclasses import dataclass
from pathlib import Path

from . import catalog as cat
from .enveloping import (
    BudgetExceededError,
    DEFAULT_WORD_BUDGET,
    RingPresentation,
    graded_dimensions,
    graded_smith_report,
    pbw_series,
    relation_string,
    series_equal,
)
from .families import FIXED_RANK, LieFamily, validate_rank
from .homotopy_lie import graded_lie_axioms_check
from .minimal_model import (
    derivation_square_check,
    quotient_dimensions,
    regular_sequence_check,
)
from .pipeline import rational_pipeline

SCHEMA_VERSION = 1

# checks that may be skipped without failing verify (expensive quotients)
OPTIONAL_CHECKS = ("regular_sequence_check", "cohomology_weyl_order")


@dataclass
class RunConfig:
    family: LieFamily
    rank: int
    coeffs: str = "rational"  # rational | integer | both (verify only)
    max_degree: int | None = None
    fmt: str = "text"
    out: str | None = None
    budget: int = DEFAULT_WORD_BUDGET
    f4_anticommute: bool = False
    check_cohomology: bool = False
    inject_torsion: bool = False
    cache_dir: str | None = None
    verbose: bool = False

    @property
    def degree(self) -> int:
        if self.max_degree is not None:
            return self.max_degree
        return cat.default_max_degree(self.family)

    def cache_key(self) -> str:
        payload = json.dumps(
            {
                "schema_version": SCHEMA_VERSION,
                "family": self.family.slug,
                "rank": self.rank,
                "coeffs": self.coeffs,
                "max_degree": self.degree,
                "f4_anticommute": self.f4_anticommute,
            },
            sort_keys=True,
        )
        return hashlib.sha256(payload.encode()).hexdigest()[:24]


class UsageError(Exception):
    pass


def _integral_presentation(cfg: RunConfig, anticommute: bool | None = None) -> RingPresentation:
    anti = cfg.f4_anticommute if anticommute is None else anticommute
    if anti and cfg.family is not LieFamily.F4:
        raise UsageError("--f4-anticommute only applies to --family f4")
    p = cat.expected_integral_presentation(cfg.family, cfg.rank, anticommute=anti)
    if cfg.inject_torsion:
        doubled = [2 * p.relations[0]] + list(p.relations[1:])
        p = RingPresentation(p.algebra, doubled, domain="integer")
    return p


def _presentation_json(p: RingPresentation) -> tuple[list[dict], list[str]]:
    gens = [{"name": n, "degree": d} for n, d in p.generators]
    rels = [relation_string(r) for r in p.relations]
    return gens, rels


def build_compute_report(cfg: RunConfig) -> dict:
    entry = cat.catalog_entry(cfg.family, cfg.rank)
    timings: dict[str, float] = {}
    t0 = time.perf_counter()
    pipe = rational_pipeline(entry, check_regular=False)
    timings["pipeline"] = time.perf_counter() - t0
    checks: dict[str, object] = {
        "derivation_square_check": derivation_square_check(pipe.model),
        "graded_lie_axioms_check": graded_lie_axioms_check(pipe.lie_algebra),
    }
    n = cfg.degree
    if cfg.coeffs == "rational":
        shown = entry.expected_rational
        t0 = time.perf_counter()
        poincare = list(graded_dimensions(pipe.presentation, n, cfg.budget))
        timings["graded_dimension"] = time.perf_counter() - t0
        ranks: list[int] = []
        torsion: list[list[int]] = []
    else:
        shown = _integral_presentation(cfg)
        t0 = time.perf_counter()
        report = graded_smith_report(shown, n, cfg.budget)
        timings["graded_smith"] = time.perf_counter() - t0
        poincare = list(pbw_series(pipe.lie_algebra, n))
        ranks = list(report.ranks())
        torsion = [list(t) for t in report.torsion_lists()]
        checks["torsion_free_check"] = report.torsion_free()
    if cfg.verbose:
        for stage, seconds in timings.items():
            print(f"timing {stage}: {seconds:.3f}s", file=sys.stderr)
    gens, rels = _presentation_json(shown)
    doc = {
        "family": cfg.family.slug,
        "rank": cfg.rank,
        "coeffs": cfg.coeffs,
        "max_degree": n,
        "generators": gens,
        "relations": rels,
        "poincare": poincare,
        "ranks": ranks,
        "torsion": torsion,
        "checks": checks,
        "schema_version": SCHEMA_VERSION,
    }
    return doc


def build_verify_report(cfg: RunConfig) -> dict:
    entry = cat.catalog_entry(cfg.family, cfg.rank)
    n = cfg.degree
    checks: dict[str, object] = {}
    failures: dict[str, str] = {}

    def record(name: str, ok: bool, detail: str = "") -> None:
        checks[name] = bool(ok)
        if not ok:
            failures[name] = detail or "mismatch"

    run_rational = cfg.coeffs in ("rational", "both")
    run_integer = cfg.coeffs in ("integer", "both")

    pipe = rational_pipeline(entry, check_regular=False)
    record("derivation_square_check", derivation_square_check(pipe.model))
    record("graded_lie_axioms_check", graded_lie_axioms_check(pipe.lie_algebra))

    got = {k: dict(v) for k, v in pipe.lie_algebra.brackets.items()}
    want = {k: {z: c for z, c in v.items()} for k, v in entry.expected_brackets.items()}
    record(
        "brackets_match_expected",
        got == want,
        "computed bracket table differs from the catalog table",
    )

    slow = cfg.family in cat.SLOW_COHOMOLOGY_FAMILIES and not cfg.check_cohomology
    if slow:
        checks["regular_sequence_check"] = "skipped"
        checks["cohomology_weyl_order"] = "skipped"
    else:
        record("regular_sequence_check", regular_sequence_check(entry.cohomology))
        total = quotient_dimensions(entry.cohomology, entry.cohomology.socle_degree()).total()
        record(
            "cohomology_weyl_order",
            total == entry.weyl_order,
            f"quotient total {total} != weyl order {entry.weyl_order}",
        )

    pbw = pbw_series(pipe.lie_algebra, n)
    poincare = list(pbw)
    ranks: list[int] = []
    torsion: list[list[int]] = []
    f4_variants: dict[str, dict] | None = None

    if run_rational:
        uea_dims = graded_dimensions(pipe.presentation, n, cfg.budget)
        expected_dims = graded_dimensions(entry.expected_rational, n, cfg.budget)
        split = cat.splitting_series(cfg.family, cfg.rank, n)
        record(
            "uea_matches_expected_rational",
            series_equal(uea_dims, expected_dims, n),
            f"pipeline {list(uea_dims)} vs expected {list(expected_dims)}",
        )
        record(
            "pbw_matches_uea",
            series_equal(pbw, uea_dims, n),
            f"pbw {list(pbw)} vs linear algebra {list(uea_dims)}",
        )
        record(
            "pbw_matches_splitting",
            series_equal(pbw, split, n),
            f"pbw {list(pbw)} vs splitting {list(split)}",
        )
        poincare = list(uea_dims)

    if run_integer:
        integral = _integral_presentation(cfg)
        report = graded_smith_report(integral, n, cfg.budget)
        ranks = list(report.ranks())
        torsion = [list(t) for t in report.torsion_lists()]
        record(
            "torsion_free_check",
            report.torsion_free(),
            f"torsion {torsion}",
        )
        record(
            "smith_ranks_match_rational",
            ranks == list(pbw.prefix(n)),
            f"ranks {ranks} vs rational {list(pbw.prefix(n))}",
        )
        if cfg.family is LieFamily.F4:
            f4_variants = {}
            cap = min(n, 8)
            matched_any = False
            for label, anti in (("commuting", False), ("anticommuting", True)):
                p = cat.expected_integral_presentation(cfg.family, cfg.rank, anticommute=anti)
                rep = graded_smith_report(p, n, cfg.budget)
                matches = list(rep.ranks())[: cap + 1] == list(pbw.prefix(cap))
                matched_any = matched_any or matches
                f4_variants[label] = {
                    "ranks": list(rep.ranks()),
                    "torsion": [list(t) for t in rep.torsion_lists()],
                    "matches_rational": matches,
                }
            record(
                "f4_variant_agreement",
                matched_any,
                "neither commutation variant matches the rational dimensions",
            )

    shown = entry.expected_rational if not run_integer else _integral_presentation(cfg)
    gens, rels = _presentation_json(shown)
    doc = {
        "family": cfg.family.slug,
        "rank": cfg.rank,
        "coeffs": cfg.coeffs,
        "max_degree": n,
        "generators": gens,
        "relations": rels,
        "poincare": poincare,
        "ranks": ranks,
        "torsion": torsion,
        "checks": checks,
        "failures": failures,
        "schema_version": SCHEMA_VERSION,
    }
    if f4_variants is not None:
        doc["f4_variants"] = f4_variants
    return doc


def build_series_report(cfg: RunConfig) -> dict:
    entry = cat.catalog_entry(cfg.family, cfg.rank)
    pipe = rational_pipeline(entry, check_regular=False)
    n = cfg.degree
    return {
        "family": cfg.family.slug,
        "rank": cfg.rank,
        "max_degree": n,
        "pbw": list(pbw_series(pipe.lie_algebra, n)),
        "splitting": list(cat.splitting_series(cfg.family, cfg.rank, n)),
        "schema_version": SCHEMA_VERSION,
    }


# ---------------------------------------------------------------------------
# rendering and cache
# ---------------------------------------------------------------------------


def render_json(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def render_text(doc: dict) -> str:
    lines = [
        f"family={doc['family']} rank={doc['rank']} coeffs={doc.get('coeffs', '-')}"
        f" max_degree={doc['max_degree']}"
    ]
    if "generators" in doc:
        gens = " ".join(f"{g['name']}:{g['degree']}" for g in doc["generators"])
        lines.append(f"generators: {gens}")
        lines.append("relations:")
        for r in doc["relations"]:
            lines.append(f"  {r}")
    if "pbw" in doc:
        lines.append(f"pbw:       {doc['pbw']}")
        lines.append(f"splitting: {doc['splitting']}")
    if doc.get("poincare"):
        lines.append("deg  dim  rank  torsion")
        ranks = doc.get("ranks") or []
        torsion = doc.get("torsion") or []
        for d, dim in enumerate(doc["poincare"]):
            rank = str(ranks[d]) if d < len(ranks) else "-"
            tor = ",".join(map(str, torsion[d])) if d < len(torsion) and torsion[d] else "-"
            lines.append(f"{d:>3}  {dim:>3}  {rank:>4}  {tor}")
    for label, variants in sorted(doc.get("f4_variants", {}).items()):
        lines.append(
            f"f4 variant {label}: ranks={variants['ranks']}"
            f" matches_rational={variants['matches_rational']}"
        )
    if "checks" in doc:
        lines.append("checks:")
        for name in sorted(doc["checks"]):
            value = doc["checks"][name]
            text = value if isinstance(value, str) else ("pass" if value else "FAIL")
            lines.append(f"  {name}: {text}")
    for name in sorted(doc.get("failures", {})):
        lines.append(f"failure {name}: {doc['failures'][name]}")
    return "\n".join(lines) + "\n"


def cache_directory(cfg: RunConfig) -> Path:
    if cfg.cache_dir:
        return Path(cfg.cache_dir)
    env = os.environ.get("LOOPALG_CACHE_DIR")
    if env:
        return Path(env)
    return Path.home() / ".cache" / "loopalg"


def cache_store(cfg: RunConfig, doc: dict) -> Path:
    directory = cache_directory(cfg)
    directory.mkdir(parents=True, exist_ok=True)
    path = directory / f"{cfg.cache_key()}.json"
    path.write_text(render_json(doc))
    return path


def cache_load(cfg: RunConfig) -> dict | None:
    path = cache_directory(cfg) / f"{cfg.cache_key()}.json"
    if not path.exists():
        return None
    return json.loads(path.read_text())


def emit(cfg: RunConfig, doc: dict) -> None:
    text = render_json(doc) if cfg.fmt == "json" else render_text(doc)
    if cfg.out:
        Path(cfg.out).write_text(text)
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="loopalg",
        description=(
            "Exact Pontrjagin-ring computations for based loop spaces on "
            "complete flag manifolds."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name in ("compute", "verify", "series", "report"):
        p = sub.add_parser(name)
        p.add_argument(
            "--family",
            required=True,
            choices=[f.slug for f in LieFamily],
        )
        p.add_argument("--rank", type=int, default=None)
        p.add_argument("--coeffs", choices=["rational", "integer"], default=None)
        p.add_argument("--max-degree", type=int, default=None)
        p.add_argument("--format", dest="fmt", choices=["json", "text"], default="text")
        p.add_argument("--out", default=None)
        p.add_argument("--budget", type=int, default=DEFAULT_WORD_BUDGET)
        p.add_argument("--f4-anticommute", action="store_true")
        p.add_argument("--cache-dir", default=None)
        p.add_argument(
            "--verbose", action="store_true", help="print stage timings to stderr"
        )
        if name == "verify":
            p.add_argument(
                "--check-cohomology",
                action="store_true",
                help="run the commutative quotient checks for f4/e6 too (slow)",
            )
            p.add_argument(
                "--inject-torsion",
                action="store_true",
                help="self-test hook: double one integral relation so torsion appears",
            )
        if name == "report":
            p.add_argument(
                "--compute-missing",
                action="store_true",
                help="compute and cache the report when it is not cached yet",
            )
    return parser


def _config_from(args: argparse.Namespace) -> RunConfig:
    family = LieFamily.from_slug(args.family)
    rank = args.rank
    if rank is None:
        if family in FIXED_RANK:
            rank = FIXED_RANK[family]
        else:
            raise UsageError(f"--rank is required for --family {family.slug}")
    try:
        validate_rank(family, rank)
    except ValueError as err:
        raise UsageError(str(err)) from None
    if args.max_degree is not None and args.max_degree < 0:
        raise UsageError("--max-degree must be >= 0")
    if args.budget <= 0:
        raise UsageError("--budget must be positive")
    if getattr(args, "f4_anticommute", False) and family is not LieFamily.F4:
        raise UsageError("--f4-anticommute only applies to --family f4")
    coeffs = args.coeffs
    if args.command == "verify":
        coeffs = coeffs or "both"
    else:
        coeffs = coeffs or "rational"
    return RunConfig(
        family=family,
        rank=rank,
        coeffs=coeffs,
        max_degree=args.max_degree,
        fmt=args.fmt,
        out=args.out,
        budget=args.budget,
        f4_anticommute=getattr(args, "f4_anticommute", False),
        check_cohomology=getattr(args, "check_cohomology", False),
        inject_torsion=getattr(args, "inject_torsion", False),
        cache_dir=args.cache_dir,
        verbose=getattr(args, "verbose", False),
    )


def main(argv: list[str] | None = None) -> int:
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as err:
        return 2 if err.code not in (0, None) else 0
    try:
        cfg = _config_from(args)
        if args.command == "compute":
            doc = build_compute_report(cfg)
            cache_store(cfg, doc)
            emit(cfg, doc)
            return 0
        if args.command == "series":
            emit(cfg, build_series_report(cfg))
            return 0
        if args.command == "report":
            doc = cache_load(cfg)
            if doc is None:
                if not args.compute_missing:
                    raise UsageError(
                        "no cached result for this configuration; run compute first "
                        "or pass --compute-missing"
                    )
                doc = build_compute_report(cfg)
                cache_store(cfg, doc)
            emit(cfg, doc)
            return 0
        # verify
        doc = build_verify_report(cfg)
        emit(cfg, doc)
        executed_ok = all(
            value is True or value == "skipped" for value in doc["checks"].values()
        )
        mandatory_skipped = any(
            value == "skipped" and name not in OPTIONAL_CHECKS
            for name, value in doc["checks"].items()
        )
        return 0 if executed_ok and not mandatory_skipped else 1
    except UsageError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except BudgetExceededError as err:
        print(f"error: {err}", file=sys.stderr)
        return 3
    except ValueError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
