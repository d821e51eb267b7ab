"""Single command-line entry point; every verdict is a JSON report.

Exit codes: 0 success, 1 negative verdict (NOT_FOUND and friends, for
shell pipelines), 2 input error (machine-readable object on stderr).
All numbers are serialized as strings so 64-bit values survive any
downstream JSON tooling.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import budgets, classifiers, density, structures
from .geometry import (Radius, cellularity_probe, chain_component, ball,
                       prec_mapping_check, word_radius)
from .groups import (BudgetExceededError, FiniteSample, GroupError,
                     group_from_spec)
from .recipes import SetSpec, spec_from_file, spec_from_json

SCHEMA = classifiers.SCHEMA

NEGATIVE_VERDICTS = {
    "NOT_FOUND", "NO_ISOLATED_BALLS_AT_SCALE", "NO_WITNESS_AT_SCALE",
    "NOT_CELLULAR_AT_SCALE", "NOT_PREC",
}


class CliError(Exception):
    pass


def _parse_radius(group, text):
    """Radius literal: ``wordball:r`` or a comma-separated element list."""
    text = text.strip()
    if text.startswith("wordball:"):
        return word_radius(group, int(text.split(":", 1)[1]))
    if group.family == "Z_POW_D":
        # lattice elements contain commas; use ; between elements
        parts = [p for p in text.split(";") if p]
    else:
        parts = [p for p in text.split(",") if p]
    if not parts:
        return Radius(group, frozenset(), "{}")
    return Radius(group, frozenset(group.parse(p) for p in parts))


def _load_sample(args):
    if getattr(args, "set", None):
        spec = spec_from_file(args.set)
    elif getattr(args, "kind", None):
        spec = _spec_from_args(args)
    else:
        raise CliError("need --set FILE or --kind with --group")
    group = spec.group()
    window = None
    if getattr(args, "window", None) is not None:
        window = group.window(args.window)
    return spec.resolve(group, window)


def _spec_from_args(args):
    params = {}
    if getattr(args, "generators", None):
        params["generators"] = [t for t in args.generators.split(",") if t]
    if getattr(args, "shifts", None):
        params["shifts"] = [t for t in args.shifts.split(",") if t]
    if getattr(args, "elements", None):
        params["elements"] = [t for t in args.elements.split(",") if t]
    if getattr(args, "support", None) is not None:
        params["support"] = args.support
    if getattr(args, "levels", None) is not None:
        params["levels"] = args.levels
    if getattr(args, "modulus", None) is not None:
        params["modulus"] = args.modulus
    if getattr(args, "residues", None):
        params["residues"] = [t for t in args.residues.split(",") if t]
    if getattr(args, "base", None) is not None:
        params["base"] = args.base
    if getattr(args, "rule", None):
        params["rule"] = args.rule
    return SetSpec.make(args.group, args.kind,
                        window_extent=getattr(args, "window", None), **params)


def _emit(report, args):
    text = json.dumps(report, indent=2, sort_keys=False)
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    print(text)
    verdict = report.get("verdict")
    return 1 if verdict in NEGATIVE_VERDICTS else 0


def _sample_json(sample):
    group = sample.group
    return {
        "schema": SCHEMA,
        "kind": "sample",
        "group": group.spec,
        "size": str(len(sample)),
        "elements": [group.render(x) for x in sample.sorted_elements()],
    }


def cmd_gen(args):
    sample = _load_sample(args)
    return _emit(_sample_json(sample), args)


def cmd_ball(args):
    group = group_from_spec(args.group)
    center = group.parse(args.center)
    radius = _parse_radius(group, args.radius)
    elems = ball(group, center, radius)
    report = {
        "schema": SCHEMA,
        "kind": "ball",
        "group": group.spec,
        "center": group.render(center),
        "radius": radius.describe(),
        "elements": [group.render(x) for x in
                     sorted(elems, key=group.sort_key)],
    }
    return _emit(report, args)


def cmd_chain(args):
    sample = _load_sample(args)
    group = sample.group
    start = group.parse(args.start)
    radius = _parse_radius(group, args.radius)
    comp = chain_component(sample, start, radius)
    report = {
        "schema": SCHEMA,
        "kind": "chain-component",
        "group": group.spec,
        "start": group.render(start),
        "radius": radius.describe(),
        "size": str(len(comp)),
        "elements": [group.render(x) for x in sorted(comp, key=group.sort_key)],
    }
    return _emit(report, args)


def cmd_cellular(args):
    sample = _load_sample(args)
    group = sample.group
    radius = _parse_radius(group, args.radius)
    rep = cellularity_probe(sample, radius, budgets.preset(args.budget))
    report = {"schema": SCHEMA, "group": group.spec,
              **rep.to_json_dict(group)}
    report["verdict"] = rep.verdict
    return _emit(report, args)


def cmd_prec(args):
    with open(args.map, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    group = group_from_spec(data.get("domain_group", "z"))
    cod = group_from_spec(data.get("codomain_group", data.get("domain_group", "z")))
    mapping = {group.parse(k): cod.parse(v) for k, v in data["pairs"].items()}
    window = group.window(int(data.get("window", 256)))
    domain = FiniteSample(group, frozenset(mapping), window)
    radius = _parse_radius(group, args.radius)
    rep = prec_mapping_check(mapping, domain, radius,
                             budgets.preset(args.budget), codomain=cod)
    report = {"schema": SCHEMA, "group": group.spec, **rep.to_json_dict(group)}
    report["verdict"] = rep.verdict
    return _emit(report, args)


def cmd_detect_pwip(args):
    sample = _load_sample(args)
    scale = budgets.preset(args.budget)
    witness = structures.detect_pwip(sample, args.depth, scale=scale)
    report = {
        "schema": SCHEMA,
        "kind": "pwip-detect",
        "group": sample.group.spec,
        "depth": str(args.depth),
        "verdict": "FOUND" if witness else "NOT_FOUND",
        "witness": witness.to_json_dict() if witness else None,
    }
    return _emit(report, args)


def cmd_classify(args):
    sample = _load_sample(args)
    report = classifiers.classify(sample, budgets.preset(args.budget))
    return _emit(report, args)


def cmd_thin(args):
    sample = _load_sample(args)
    group = sample.group
    radius = _parse_radius(group, args.radius)
    rep = classifiers.thin_degree(sample, radius, budgets.preset(args.budget))
    report = {"schema": SCHEMA, "group": group.spec, **rep.to_json_dict(group)}
    return _emit(report, args)


def cmd_sparse(args):
    sample = _load_sample(args)
    group = sample.group
    if args.xset:
        xspec = spec_from_file(args.xset)
        xsample = xspec.resolve(group, sample.window)
    else:
        xsample = sample
    rep = classifiers.sparse_witness(sample, xsample, budgets.preset(args.budget))
    report = {"schema": SCHEMA, "group": group.spec, **rep.to_json_dict(group)}
    return _emit(report, args)


def cmd_scattered(args):
    sample = _load_sample(args)
    group = sample.group
    ambient = None
    if args.ambient:
        ambient = spec_from_file(args.ambient).resolve(group, sample.window)
    rep = classifiers.isolated_balls_verdict(
        sample, budgets.preset(args.budget), ambient=ambient)
    report = {"schema": SCHEMA, "group": group.spec, **rep.to_json_dict(group)}
    return _emit(report, args)


def _density_recipe(args):
    if args.set:
        return spec_from_file(args.set)
    raise CliError("density commands need --set FILE")


def cmd_density(args):
    recipe = _density_recipe(args)
    profile = density.upper_density_profile(recipe, args.nmax, step=args.step)
    report = {"schema": SCHEMA, **profile.to_json_dict()}
    return _emit(report, args)


def cmd_density_pwip(args):
    recipe = _density_recipe(args)
    rep = density.density_pwip_experiment(
        recipe, args.depth, window_extent=args.window or 100,
        scale=budgets.preset(args.budget))
    report = {"schema": SCHEMA, **rep}
    return _emit(report, args)


def _add_set_args(p, with_window=True):
    p.add_argument("--set", help="SetSpec JSON file")
    p.add_argument("--group", default="z", help="group spec (z, z^2, z2sum:8, free:2)")
    p.add_argument("--kind", choices=("explicit", "ip", "pwip", "wn", "cantor",
                                      "periodic", "powers", "window"))
    p.add_argument("--generators")
    p.add_argument("--shifts")
    p.add_argument("--elements")
    p.add_argument("--support", type=int)
    p.add_argument("--levels")
    p.add_argument("--modulus", type=int)
    p.add_argument("--residues")
    p.add_argument("--base", type=int)
    p.add_argument("--rule")
    if with_window:
        p.add_argument("--window", type=int)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="coarsesets",
        description="Finite-scale verdicts for thin, sparse and scattered subsets of groups")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, **kw):
        p = sub.add_parser(name, **kw)
        p.set_defaults(fn=fn)
        p.add_argument("--out", help="also write the report to a file")
        p.add_argument("--budget", default="medium",
                       choices=("small", "medium", "large"))
        return p

    p = add("gen", cmd_gen, help="materialize a set recipe")
    _add_set_args(p)

    p = add("ball", cmd_ball, help="ball of radius F around an element")
    p.add_argument("--group", default="z")
    p.add_argument("--center", required=True)
    p.add_argument("--radius", required=True)

    p = add("chain", cmd_chain, help="chain component inside a sample")
    _add_set_args(p)
    p.add_argument("--start", required=True)
    p.add_argument("--radius", required=True)

    p = add("cellular", cmd_cellular, help="cellularity probe")
    _add_set_args(p)
    p.add_argument("--radius", required=True)

    p = add("prec", cmd_prec, help="verify a supplied ball-contraction mapping")
    p.add_argument("--map", required=True, help="JSON mapping file")
    p.add_argument("--radius", required=True)

    p = add("detect-pwip", cmd_detect_pwip, help="shifted-product witness search")
    _add_set_args(p)
    p.add_argument("--depth", type=int, required=True)

    p = add("classify", cmd_classify, help="combined classification report")
    _add_set_args(p)

    p = add("thin", cmd_thin, help="thin degree at a radius")
    _add_set_args(p)
    p.add_argument("--radius", required=True)

    p = add("sparse", cmd_sparse, help="translate-intersection witness search")
    _add_set_args(p)
    p.add_argument("--xset", help="SetSpec file for the X pool")

    p = add("scattered", cmd_scattered, help="isolated-balls verdict")
    _add_set_args(p)
    p.add_argument("--ambient", help="SetSpec file for an ambient universe")

    p = add("density", cmd_density, help="upper-density profile")
    p.add_argument("--set", help="SetSpec JSON file")
    p.add_argument("--nmax", type=int, default=100000)
    p.add_argument("--step", type=int)

    p = add("density-pwip", cmd_density_pwip, help="density vs structure experiment")
    p.add_argument("--set", help="SetSpec JSON file")
    p.add_argument("--depth", type=int, default=3)
    p.add_argument("--window", type=int)

    return parser


def run(argv):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.fn(args)
    except (GroupError, BudgetExceededError, CliError, OSError,
            ValueError, KeyError, json.JSONDecodeError) as exc:
        err = {
            "schema": SCHEMA,
            "kind": "error",
            "error": {"type": type(exc).__name__, "message": str(exc)},
        }
        print(json.dumps(err, indent=2), file=sys.stderr)
        return 2


def main():
    raise SystemExit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
