"""Command line front end.

Verbs: ``straight-classes``, ``verify``, ``examples`` and ``figure``.
Exit codes: 0 on success, 2 when a verifier finds a counterexample or a
golden file differs, 1 on usage or configuration errors.
"""

from __future__ import annotations

import argparse
import difflib
import json
import logging
import sys
from pathlib import Path

from .affine import ResourceCapExceeded
from .config import ConfigError, RunConfig, catalog
from .conjugacy import straight_classes_in_window
from .examples import NAMES, golden, render, run_example
from .fixed import FixedPointError, FixedSubgroupData
from .lattice import fmt_rational
from .report import validate_report
from .svg import FigureError, figure_svg
from .twist import GammaSubgroup
from . import verifiers

log = logging.getLogger("twistedweyl")

THEOREMS = ("gamma", "partial", "Gamma", "min1", "min2", "bij", "length-add", "inject")


class UsageError(Exception):
    pass


def load_config(spec: str) -> RunConfig:
    """A JSON file path, or ``catalog:NAME`` for a built-in configuration."""
    if spec.startswith("catalog:"):
        name = spec.split(":", 1)[1]
        cat = catalog()
        if name not in cat:
            raise ConfigError(f"unknown catalog entry {name!r}; choose from {sorted(cat)}")
        return cat[name]
    return RunConfig.load(spec)


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_straight_classes(cfg: RunConfig, bound: int, fmt: str, out: str | None) -> int:
    G, theta, gamma = cfg.group, cfg.theta, cfg.gamma_subgroup
    records = straight_classes_in_window(G, theta, gamma, bound, cfg.max_elements)
    rows = [{
        "representative": G.format(r.representative),
        "length": G.length(r.representative),
        "kottwitz": list(r.invariant.kottwitz),
        "newton": [fmt_rational(x) for x in r.invariant.newton],
        "size": len(r.elements),
    } for r in records]
    if fmt == "tsv":
        lines = ["representative\tlength\tkottwitz\tnewton\tsize"]
        for row in rows:
            lines.append("\t".join([row["representative"], str(row["length"]),
                                    "(" + ",".join(map(str, row["kottwitz"])) + ")",
                                    "(" + ",".join(row["newton"]) + ")", str(row["size"])]))
        text = "\n".join(lines) + "\n"
    elif fmt == "json":
        text = json.dumps({
            "config": cfg.name,
            "cartan_type": G.datum.cartan_type,
            "lattice": G.datum.lattice_name,
            "theta": {"affine_perm": list(theta.affine_permutation), "diagram_perm": list(theta.diagram_perm),
                      "omega": list(theta.omega_coords)},
            "gamma": [list(c) for c in gamma.elements],
            "bound": bound,
            "classes": rows,
        }, indent=2, sort_keys=True) + "\n"
    else:
        raise UsageError("straight-classes supports --format json or tsv")
    _emit(text, out)
    return 0


def run_verifier(cfg: RunConfig, theorem: str, bound: int):
    G, theta = cfg.group, cfg.theta
    cap = cfg.max_elements
    if theorem == "gamma":
        return verifiers.verify_gamma(G, theta, bound, cap)
    if theorem == "partial":
        return verifiers.verify_partial(G, theta, bound, cap)
    if theorem == "Gamma":
        return verifiers.verify_classification(G, theta, cfg.gamma_subgroup, bound, "Gamma", cap)
    if theorem == "min1":
        return verifiers.verify_min1(G, theta, bound, cap)
    if theorem == "min2":
        return verifiers.verify_min2(G, theta, bound, cap)
    if theorem == "bij":
        return verifiers.verify_bijection(G, theta, bound, cap)
    data = FixedSubgroupData(G, cfg.sigma_twist)
    if theorem == "length-add":
        return verifiers.verify_length_add(data, bound, cap)
    if theorem == "inject":
        gamma = GammaSubgroup(G, theta, cfg.gamma) if cfg.gamma is not None else GammaSubgroup.trivial(G, theta)
        return verifiers.verify_injection(data, theta, gamma, bound, cap)
    raise UsageError(f"unknown theorem {theorem!r}; choose from {', '.join(THEOREMS)}")


def cmd_verify(cfg: RunConfig, theorem: str, bound: int, fmt: str, out: str | None) -> int:
    rep = run_verifier(cfg, theorem, bound)
    data = rep.to_dict()
    validate_report(data)
    if fmt == "json":
        text = rep.to_json()
    elif fmt == "tsv":
        text = "theorem\tbound\tstatus\tclasses\tcounterexamples\n"
        text += f"{rep.theorem}\t{rep.bound}\t{rep.status}\t{rep.classes}\t{len(rep.counterexamples)}\n"
    else:
        raise UsageError("verify supports --format json or tsv")
    _emit(text, out)
    return 0 if rep.passed else 2


def cmd_examples(out: str | None) -> int:
    status = 0
    chunks = []
    for name in NAMES:
        text = render(run_example(name))
        expected = golden(name)
        if text != expected:
            status = 2
            diff = "".join(difflib.unified_diff(expected.splitlines(True), text.splitlines(True),
                                                f"golden/{name}.json", f"computed/{name}.json"))
            sys.stderr.write(diff)
        chunks.append(f"== {name} ({'ok' if text == expected else 'DIFFERS'})\n{text}")
        if out:
            Path(out).mkdir(parents=True, exist_ok=True)
            (Path(out) / f"{name}.json").write_text(text)
    if not out:
        sys.stdout.write("".join(chunks))
    return status


def cmd_figure(cfg: RunConfig, out: str | None) -> int:
    data = FixedSubgroupData(cfg.group, cfg.sigma_twist)
    _emit(figure_svg(data), out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="twistedweyl", description=__doc__.splitlines()[0])
    p.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = p.add_subparsers(dest="verb", required=True)

    def common(sp, need_config=True):
        if need_config:
            sp.add_argument("--config", required=True, help="JSON config path or catalog:NAME")
        sp.add_argument("--out", help="write output here instead of stdout")

    sp = sub.add_parser("straight-classes", help="list straight classes in a length window")
    common(sp)
    sp.add_argument("--bound", type=int, help="length bound (default: config length_bound)")
    sp.add_argument("--format", choices=("json", "tsv"))
    sp.add_argument("--max-elements", type=int)

    sp = sub.add_parser("verify", help="run a theorem verifier on a window")
    common(sp)
    sp.add_argument("--theorem", required=True, choices=THEOREMS)
    sp.add_argument("--bound", type=int)
    sp.add_argument("--format", choices=("json", "tsv"))
    sp.add_argument("--max-elements", type=int)

    sp = sub.add_parser("examples", help="reproduce the worked examples and diff against golden files")
    common(sp, need_config=False)

    sp = sub.add_parser("figure", help="SVG of the apartment and the sigma-fixed line (rank 2)")
    common(sp)
    sp.add_argument("--format", choices=("svg",), default="svg")
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 1 if exc.code else 0
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, stream=sys.stderr,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        if args.verb == "examples":
            return cmd_examples(args.out)
        cfg = load_config(args.config)
        if getattr(args, "max_elements", None):
            cfg.max_elements = args.max_elements
        if args.verb == "figure":
            return cmd_figure(cfg, args.out)
        bound = args.bound if args.bound is not None else cfg.length_bound
        if bound < 0:
            raise UsageError("--bound must be non-negative")
        fmt = args.format or (cfg.format if cfg.format != "svg" else "json")
        if args.verb == "straight-classes":
            return cmd_straight_classes(cfg, bound, fmt, args.out)
        return cmd_verify(cfg, args.theorem, bound, fmt, args.out)
    except (ConfigError, UsageError, verifiers.NotApplicable, FigureError, FixedPointError,
            ResourceCapExceeded) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
