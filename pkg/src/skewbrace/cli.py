"""Command-line front end.

Exit status: 0 on success, 1 when a mathematical check fails, 2 on usage or
I/O errors.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence

from .audit import SUITES, resolve_keys, run_suites
from .brace import (
    all_ideals,
    centre,
    commutator_ideal,
    fix,
    is_abelian_brace,
    is_trivial_brace,
    ker_lambda,
    soc,
    star_span,
)
from .catalog import (
    BRUTE_FORCE_MAX,
    MAX_ORDER,
    BraceCatalog,
    Provenance,
    brute_force_enumerate,
    canonical_id,
    enumerate_braces,
    load_catalog,
    read_brace,
)
from .errors import OrderTooLarge, ParseError, SkewBraceError, ValidationError
from .library import NAMED, groups_of_order, named_group
from .theorems import enumerate_subbraces

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


@dataclass
class RunConfig:
    subcommand: str
    paths: list[Path] = field(default_factory=list)
    order: int | None = None
    theorem: str = "all"
    tsv: bool = False
    jobs: int = 1
    oracle: bool = False
    allow_large: bool = False
    additive: str | None = None
    out: Path = Path("catalog")


def _err(msg: str) -> None:
    print(f"error: {msg}", file=sys.stderr)


def _load(path: Path):
    """Read a brace file; returns ``(brace, exit_code)``."""
    try:
        return read_brace(path), EXIT_OK
    except OSError as e:
        _err(f"cannot read {path}: {e.strerror or e}")
        return None, EXIT_USAGE
    except ParseError as e:
        _err(f"{path}: {e}")
        return None, EXIT_USAGE
    except ValidationError as e:
        print(f"INVALID: {e}")
        return None, EXIT_FAIL


def cmd_validate(cfg: RunConfig) -> int:
    B, code = _load(cfg.paths[0])
    if B is None:
        return code
    print(f"OK: skew brace of order {B.n}")
    return EXIT_OK


def cmd_analyze(cfg: RunConfig) -> int:
    B, code = _load(cfg.paths[0])
    if B is None:
        return code
    full = range(B.n)
    sets = [
        ("Fix", fix(B)),
        ("ker_lambda", ker_lambda(B)),
        ("Soc", soc(B)),
        ("Z", centre(B)),
        ("B*B", star_span(B, full, full)),
        ("[B,B]^B", commutator_ideal(B)),
    ]
    n_sub = len(enumerate_subbraces(B))
    n_ideal = len(all_ideals(B))
    if cfg.tsv:
        print(f"order\t{B.n}")
        print(f"trivial\t{int(is_trivial_brace(B))}")
        print(f"abelian\t{int(is_abelian_brace(B))}")
        for name, S in sets:
            print(f"{name}\t{len(S)}\t{S}")
        print(f"subbraces\t{n_sub}")
        print(f"ideals\t{n_ideal}")
        return EXIT_OK
    print(f"order: {B.n}")
    print(f"id: {canonical_id(B)}")
    print(f"trivial: {is_trivial_brace(B)}")
    print(f"abelian: {is_abelian_brace(B)}")
    for name, S in sets:
        print(f"{name}: {S} (size {len(S)})")
    print(f"subbraces: {n_sub}")
    print(f"ideals: {n_ideal}")
    return EXIT_OK


def cmd_enumerate(cfg: RunConfig) -> int:
    n = cfg.order
    if n is None or n < 1:
        _err("order must be a positive integer")
        return EXIT_USAGE
    if n > MAX_ORDER and not cfg.allow_large:
        _err(f"order {n} exceeds {MAX_ORDER}; pass --allow-large together with --additive NAME")
        return EXIT_USAGE
    if cfg.additive is not None:
        try:
            groups = [(cfg.additive, named_group(cfg.additive))]
        except KeyError as e:
            _err(str(e.args[0]))
            return EXIT_USAGE
        if groups[0][1].n != n:
            _err(f"{cfg.additive} has order {groups[0][1].n}, not {n}")
            return EXIT_USAGE
    else:
        try:
            groups = groups_of_order(n)
        except OrderTooLarge as e:
            _err(str(e))
            return EXIT_USAGE
    braces = []
    for _, G in groups:
        braces.extend(enumerate_braces(G, allow_large=cfg.allow_large))
    cat = BraceCatalog.from_braces(braces, Provenance.HOLOMORPH, n)
    cat.save(cfg.out)
    where = cfg.out / f"order{n:02d}"
    print(f"{len(cat)} braces of order {n} written to {where}")
    if cfg.oracle:
        if n > BRUTE_FORCE_MAX or cfg.additive is not None:
            _err(f"--oracle needs a full enumeration with order <= {BRUTE_FORCE_MAX}")
            return EXIT_USAGE
        m = len(brute_force_enumerate(n))
        print(f"oracle: {m} braces")
        if m != len(cat):
            print("MISMATCH between enumeration and oracle")
            return EXIT_FAIL
    return EXIT_OK


def cmd_verify(cfg: RunConfig) -> int:
    try:
        keys = resolve_keys(cfg.theorem)
    except KeyError as e:
        _err(str(e.args[0]))
        return EXIT_USAGE
    path = cfg.paths[0]
    if not path.exists():
        _err(f"no catalog at {path}")
        return EXIT_USAGE
    try:
        cat = load_catalog(path)
    except (ParseError, OSError) as e:
        _err(str(e))
        return EXIT_USAGE
    except ValidationError as e:
        print(f"INVALID: {e}")
        return EXIT_FAIL
    results = run_suites(cat.entries, ",".join(keys), jobs=cfg.jobs)
    failed = 0
    if cfg.tsv:
        for k in keys:
            for row in results[k].rows:
                print(row.tsv())
        for k in keys:
            r = results[k]
            print(f"#\t{k}\t{r.scanned}\t{r.matched}\t{len(r.failures)}")
    else:
        print(f"{len(cat)} braces, {sum(r.scanned for r in results.values())} instances")
    for k in keys:
        r = results[k]
        failed += len(r.failures)
        if not cfg.tsv:
            print(r.summary())
        for row in r.failures:
            print(f"FAIL {k} {row.brace_id} {row.subject} {row.detail}".rstrip(), file=sys.stderr)
    return EXIT_FAIL if failed else EXIT_OK


COMMANDS = {
    "validate": cmd_validate,
    "analyze": cmd_analyze,
    "enumerate": cmd_enumerate,
    "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="skewbrace", description="finite skew brace toolkit")
    sub = p.add_subparsers(dest="subcommand", required=True)

    v = sub.add_parser("validate", help="check that a .brace file is a skew brace")
    v.add_argument("file", type=Path)

    a = sub.add_parser("analyze", help="print distinguished subsets and ideal counts")
    a.add_argument("file", type=Path)
    a.add_argument("--tsv", action="store_true")

    e = sub.add_parser("enumerate", help="write all braces of an order to a catalog")
    e.add_argument("order", type=int)
    e.add_argument("--oracle", action="store_true", help="cross-check the count by brute force")
    e.add_argument("--allow-large", action="store_true", help=f"allow orders above {MAX_ORDER}")
    e.add_argument("--additive", choices=sorted(NAMED), help="restrict to one additive group")
    e.add_argument("--out", type=Path, default=Path("catalog"))

    r = sub.add_parser("verify", help="run exhaustive theorem suites over a catalog")
    r.add_argument("catalog", type=Path)
    r.add_argument("--theorem", default="all", help="all, or a comma list of: " + ", ".join(SUITES))
    r.add_argument("--tsv", action="store_true")
    r.add_argument("--jobs", type=int, default=1)
    return p


def parse_config(argv: Sequence[str] | None = None) -> RunConfig:
    ns = build_parser().parse_args(argv)
    cfg = RunConfig(ns.subcommand)
    if ns.subcommand in ("validate", "analyze"):
        cfg.paths = [ns.file]
        cfg.tsv = getattr(ns, "tsv", False)
    elif ns.subcommand == "enumerate":
        cfg.order = ns.order
        cfg.oracle, cfg.allow_large, cfg.additive, cfg.out = ns.oracle, ns.allow_large, ns.additive, ns.out
    else:
        cfg.paths = [ns.catalog]
        cfg.theorem, cfg.tsv, cfg.jobs = ns.theorem, ns.tsv, max(1, ns.jobs)
    return cfg


def main(argv: Sequence[str] | None = None) -> int:
    cfg = parse_config(argv)
    try:
        return COMMANDS[cfg.subcommand](cfg)
    except SkewBraceError as e:
        _err(str(e))
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
